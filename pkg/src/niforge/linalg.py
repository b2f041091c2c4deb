"""Dense linear-algebra kernels.

Eigenvalues, an ordered real Schur split (closed-left-half-plane block
first), a Bartels-Stewart Lyapunov solver and symmetric definiteness
helpers.  Everything works on small dense ``numpy`` arrays.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .exceptions import DimensionError, NumericError, PreconditionError

__all__ = [
    "SchurSplit",
    "as_matrix",
    "axis_tolerance",
    "eigenvalues",
    "ordered_real_schur",
    "solve_stable_lyapunov",
    "sym_min_eig",
    "definiteness_tolerance",
    "is_psd",
    "is_pd",
    "symmetrize",
]


def as_matrix(M, name="matrix", dtype=float):
    """Return ``M`` as a finite 2-D array, raising on NaN/Inf or bad rank."""
    M = np.array(M, dtype=dtype, ndmin=2)
    if M.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} has non-finite entries")
    return M


def _square(M, name="matrix"):
    M = as_matrix(M, name)
    if M.shape[0] != M.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {M.shape}")
    return M


def axis_tolerance(M):
    """Default imaginary-axis classification threshold ``1e-9 (1 + ||M||_F)``."""
    return 1e-9 * (1.0 + np.linalg.norm(M))


def definiteness_tolerance(M):
    return 1e-9 * (1.0 + np.linalg.norm(M))


def symmetrize(M):
    M = np.asarray(M)
    return 0.5 * (M + M.T)


def eigenvalues(M):
    """Eigenvalues of a real square matrix sorted by ``(Re, Im)``.

    >>> eigenvalues([[-1.0, 0.0], [0.0, 2.0]])
    array([-1.+0.j,  2.+0.j])
    """
    M = _square(M)
    if M.size == 0:
        return np.zeros(0, dtype=complex)
    try:
        lam = sla.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigenvalue iteration failed: {exc}") from exc
    lam = np.asarray(lam, dtype=complex)
    return lam[np.lexsort((lam.imag, lam.real))]


@dataclass(frozen=True)
class SchurSplit:
    """``M = U [[A11, A12], [0, A22]] U^T`` with ``Re eig(A11) <= tol``."""

    U: np.ndarray
    A11: np.ndarray
    A12: np.ndarray
    A22: np.ndarray
    stable_dim: int
    tol: float

    @property
    def T(self):
        """The full quasi-upper-triangular factor."""
        k = self.stable_dim
        n = self.U.shape[0]
        T = np.zeros((n, n))
        T[:k, :k] = self.A11
        T[:k, k:] = self.A12
        T[k:, k:] = self.A22
        return T


def ordered_real_schur(M, tol=None):
    """Real Schur form of ``M`` with closed-left-half-plane eigenvalues first.

    Eigenvalues with ``Re <= tol`` (default :func:`axis_tolerance`) are moved
    to the leading block ``A11``; the remaining ones form ``A22``.  An exact
    zero eigenvalue therefore always ends up in ``A11``.

    Reordering uses LAPACK's adjacent-block swapping (``trsen``); the result
    is verified afterwards and a :class:`NumericError` carrying the measured
    residuals is raised if any check fails.
    """
    M = _square(M)
    n = M.shape[0]
    if tol is None:
        tol = axis_tolerance(M)
    if tol < 0:
        raise ValueError("axis tolerance must be non-negative")
    if n == 0:
        e = np.zeros((0, 0))
        return SchurSplit(e, e, e, e, 0, tol)

    def select(re, im):
        return re <= tol

    try:
        T, U, k = sla.schur(M, output="real", sort=select)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericError(f"Schur reordering failed: {exc}") from exc

    split = SchurSplit(U, T[:k, :k], T[:k, k:], T[k:, k:], int(k), tol)

    orth = np.linalg.norm(U.T @ U - np.eye(n))
    recon = np.linalg.norm(U @ split.T @ U.T - M)
    low = np.linalg.norm(T[k:, :k])
    bad = []
    if orth > 1e-10 * n:
        bad.append(f"orthogonality residual {orth:.3g}")
    if recon > 1e-8 * max(np.linalg.norm(M), 1.0):
        bad.append(f"reconstruction residual {recon:.3g}")
    if low > 1e-8 * max(np.linalg.norm(M), 1.0):
        bad.append(f"lower block norm {low:.3g}")
    lam11 = eigenvalues(split.A11)
    lam22 = eigenvalues(split.A22)
    if lam11.size and lam11.real.max() > tol:
        bad.append(f"A11 eigenvalue with Re={lam11.real.max():.3g} > {tol:.3g}")
    if lam22.size and lam22.real.min() <= tol:
        bad.append(f"A22 eigenvalue with Re={lam22.real.min():.3g} <= {tol:.3g}")
    if bad:
        raise NumericError("ordered real Schur check failed: " + "; ".join(bad))
    return split


def _quasi_blocks(T):
    """Index ranges of the 1x1 / 2x2 diagonal blocks of a real Schur factor."""
    n = T.shape[0]
    blocks = []
    i = 0
    while i < n:
        if i + 1 < n and T[i + 1, i] != 0.0:
            blocks.append((i, i + 2))
            i += 2
        else:
            blocks.append((i, i + 1))
            i += 1
    return blocks


def solve_stable_lyapunov(F, Q):
    """Solve ``F X + X F^T + Q = 0`` for Hurwitz ``F``.

    Bartels-Stewart: reduce ``F`` to real Schur form ``Z T Z^T`` and
    back-substitute over the diagonal blocks of ``T``, last block column
    first.  The returned ``X`` is symmetrized.

    Parameters
    ----------
    F : (n, n) array_like
        Hurwitz matrix (all eigenvalues with negative real part).
    Q : (n, n) array_like
        Symmetric right-hand side.

    Returns
    -------
    X : (n, n) ndarray
        The unique solution; positive semidefinite whenever ``Q`` is.
    """
    F = _square(F, "F")
    Q = _square(Q, "Q")
    if F.shape != Q.shape:
        raise DimensionError(f"F {F.shape} and Q {Q.shape} differ in size")
    n = F.shape[0]
    if n == 0:
        return np.zeros((0, 0))
    lam = eigenvalues(F)
    if lam.real.max() >= 0.0:
        raise PreconditionError(
            f"F is not Hurwitz (max Re eig = {lam.real.max():.3g})")

    T, Z = sla.schur(F, output="real")
    C = -(Z.T @ symmetrize(Q) @ Z)
    Y = np.zeros((n, n))
    eye = np.eye(n)
    blocks = _quasi_blocks(T)
    # T Y_J + Y_J T_JJ^T = C_J - sum_{K > J} Y_K T_JK^T
    for j0, j1 in reversed(blocks):
        rhs = C[:, j0:j1] - Y[:, j1:] @ T[j0:j1, j1:].T
        b = j1 - j0
        Tjj = T[j0:j1, j0:j1]
        op = np.kron(np.eye(b), T) + np.kron(Tjj, eye)
        y = np.linalg.solve(op, rhs.reshape(-1, order="F"))
        Y[:, j0:j1] = y.reshape((n, b), order="F")
    return symmetrize(Z @ Y @ Z.T)


def sym_min_eig(M):
    """Smallest eigenvalue of the symmetric part ``(M + M^T) / 2``."""
    M = _square(M)
    if M.size == 0:
        return np.inf
    return float(np.linalg.eigvalsh(symmetrize(M))[0])


def is_psd(M, tol=None):
    if tol is None:
        tol = definiteness_tolerance(M)
    return sym_min_eig(M) >= -tol


def is_pd(M, tol=None):
    if tol is None:
        tol = definiteness_tolerance(M)
    return sym_min_eig(M) > tol

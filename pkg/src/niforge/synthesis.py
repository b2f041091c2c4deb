"""State-feedback synthesis of NI closed loops with a degree of stability.

Pipeline for a prescribed ``eps >= 0``:

1. design matrix ``M = (I - B2 (C1 B2)^-1 C1)(A + eps I)``, always singular;
2. ordered real Schur split ``M = U [[A11, A12], [0, A22]] U^T`` with the
   closed-left-half-plane part in ``A11`` and ``A22`` anti-stable;
3. two Lyapunov equations in ``A22`` giving ``T`` and ``S``;
4. if ``T - S > 0``: ``P = U blockdiag(0, (T - S)^-1) U^T`` and the gain
   ``K``.

The resulting ``A + B2 K`` has its rightmost pole at ``-eps``; ``eps = 0``
leaves that pole at the origin.
"""

from dataclasses import dataclass, field

import numpy as np

from .analysis import (DEFAULT_EPS_GRID, NIVerdict, TOL_NI, build_riccati_data,
                       default_omega_grid, orthant_ni_check, riccati_residual)
from .exceptions import AssumptionError, PreconditionError
from .linalg import (eigenvalues, ordered_real_schur, solve_stable_lyapunov,
                     sym_min_eig, symmetrize)
from .statespace import BodeData, StateSpace, bode, close_loop

__all__ = [
    "SchurData",
    "SynthesisResult",
    "VerificationReport",
    "ARE_TOL",
    "design_matrix",
    "schur_pipeline",
    "solve_TS",
    "synthesize",
    "pf_are_residual",
    "verify_synthesis",
]

ARE_TOL = 1e-8


def _check_eps(eps):
    eps = float(eps)
    if not np.isfinite(eps) or eps < 0:
        raise ValueError(f"eps must be a finite non-negative number, got {eps}")
    return eps


def _c1b2(plant):
    c = plant.C1B2
    gate = 1e-9 * np.linalg.norm(plant.C1) * np.linalg.norm(plant.B2)
    if abs(c) <= gate:
        raise AssumptionError("C1*B2 not invertible",
                              f"C1*B2 not invertible (C1 B2 = {c:.3g})")
    return c


def _R(plant):
    R = plant.R
    if not R > 0:
        raise AssumptionError("R = C1 B1 + B1^T C1^T > 0",
                              f"R = C1 B1 + B1^T C1^T = {R:.3g} is not positive")
    return R


def design_matrix(plant, eps=0.0):
    """``(I - B2 (C1 B2)^-1 C1)(A + eps I)``."""
    eps = _check_eps(eps)
    c = _c1b2(plant)
    n = plant.n_states
    proj = np.eye(n) - plant.B2 @ plant.C1 / c
    return proj @ (plant.A + eps * np.eye(n))


@dataclass(frozen=True)
class SchurData:
    U: np.ndarray
    A11: np.ndarray
    A12: np.ndarray
    A22: np.ndarray
    Bf1: np.ndarray
    Bf2: np.ndarray
    B11: np.ndarray
    B22: np.ndarray
    R: float
    stable_dim: int
    eps: float

    @property
    def Af(self):
        k = self.stable_dim
        n = self.U.shape[0]
        Af = np.zeros((n, n))
        Af[:k, :k] = self.A11
        Af[:k, k:] = self.A12
        Af[k:, k:] = self.A22
        return Af

    @property
    def Bf(self):
        return np.vstack([self.Bf1, self.Bf2])

    @property
    def B1_tilde(self):
        return np.vstack([self.B11, self.B22])


def schur_pipeline(plant, eps=0.0):
    """Ordered Schur split of the design matrix and the transformed inputs
    ``Bf = U^T (B2 (C1 B2)^-1 - B1 R^-1)`` and ``B1~ = U^T B1``."""
    eps = _check_eps(eps)
    R = _R(plant)
    c = _c1b2(plant)
    M = design_matrix(plant, eps)
    split = ordered_real_schur(M)
    U, k = split.U, split.stable_dim
    Bf = U.T @ (plant.B2 / c - plant.B1 / R)
    Bt = U.T @ plant.B1
    return SchurData(U, split.A11, split.A12, split.A22, Bf[:k], Bf[k:],
                     Bt[:k], Bt[k:], R, k, eps)


def solve_TS(sd):
    """Solve ``-A22 T - T A22^T + Bf2 R Bf2^T = 0`` and
    ``-A22 S - S A22^T + B22 R^-1 B22^T = 0``.

    Both are Lyapunov equations in the Hurwitz matrix ``-A22``.  An empty
    ``A22`` yields a pair of ``0 x 0`` matrices.
    """
    q = sd.A22.shape[0]
    if q == 0:
        return np.zeros((0, 0)), np.zeros((0, 0))
    lam = eigenvalues(sd.A22)
    if lam.real.min() <= 0:
        raise PreconditionError("A22 is not anti-stable")
    F = -sd.A22
    T = solve_stable_lyapunov(F, sd.R * (sd.Bf2 @ sd.Bf2.T))
    S = solve_stable_lyapunov(F, (sd.B22 @ sd.B22.T) / sd.R)
    return T, S


@dataclass
class VerificationReport:
    poles: np.ndarray
    rightmost: float
    rightmost_ok: bool
    rightmost_unique: bool
    are_residual: float
    are_ok: bool
    ni: NIVerdict
    bode: BodeData
    phase_ok: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


@dataclass
class SynthesisResult:
    """Outcome of :func:`synthesize`.

    ``K``, ``P`` and ``Pf`` are ``None`` when ``T - S`` is not positive
    definite.  ``margin`` is the smallest eigenvalue of ``T - S`` (``inf``
    when ``A22`` is empty).
    """

    K: np.ndarray
    P: np.ndarray
    Pf: np.ndarray
    T: np.ndarray
    S: np.ndarray
    epsilon: float
    feasible: bool
    margin: float
    schur: SchurData
    pf_residual: float = None
    report: VerificationReport = None


def pf_are_residual(sd, Pf):
    """Normalized residual of
    ``Pf Af + Af^T Pf - Pf Bf R Bf^T Pf + Pf B1~ R^-1 B1~^T Pf = 0``."""
    Af, Bf, Bt, R = sd.Af, sd.Bf, sd.B1_tilde, sd.R
    res = (Pf @ Af + Af.T @ Pf - R * (Pf @ Bf @ Bf.T @ Pf)
           + (Pf @ Bt @ Bt.T @ Pf) / R)
    return float(np.linalg.norm(res) / (1.0 + np.linalg.norm(Pf)) ** 2)


def synthesize(plant, eps=0.0, verify=False, **verify_kwargs):
    """Synthesize ``u = K x`` making the ``w -> z`` loop NI with rightmost
    pole at ``-eps``.

    Parameters
    ----------
    plant : UncertainPlant
    eps : float
        Prescribed degree of stability, ``>= 0``.
    verify : bool
        If true and the synthesis is feasible, attach
        :func:`verify_synthesis` output as ``result.report``.
    """
    eps = _check_eps(eps)
    sd = schur_pipeline(plant, eps)
    T, S = solve_TS(sd)
    n = plant.n_states
    k = sd.stable_dim
    c = plant.C1B2
    R = sd.R

    if n - k == 0:
        margin = np.inf
        P1 = np.zeros((0, 0))
    else:
        margin = sym_min_eig(T - S)
        tol = 1e-9 * (1.0 + np.linalg.norm(T))
        if not margin > tol:
            return SynthesisResult(None, None, None, T, S, eps, False, margin, sd)
        P1 = symmetrize(np.linalg.inv(T - S))

    Pf = np.zeros((n, n))
    Pf[k:, k:] = P1
    P = symmetrize(sd.U @ Pf @ sd.U.T)
    # (B2^T C1^T)^-1 is the scalar 1 / (C1 B2)
    K = (plant.B1.T @ P - plant.C1 @ plant.A - eps * plant.C1
         - (R / c) * (plant.B2.T @ P)) / c
    res = SynthesisResult(K, P, Pf, T, S, eps, True, margin, sd,
                          pf_are_residual(sd, Pf))
    if verify:
        res.report = verify_synthesis(plant, res, **verify_kwargs)
    return res


def verify_synthesis(plant, res, omega=None, eps_grid=DEFAULT_EPS_GRID,
                     pole_tol=None, tol=TOL_NI):
    """Independent checks of a feasible synthesis.

    Checks the closed-loop spectrum (rightmost pole at ``-eps``), the
    Riccati certificate of the shifted closed loop
    ``A_cl = A + eps I + B2 K`` with ``Q = A_cl^T C1^T R^-1 C1 A_cl``, the
    orthant NI samples of the actual closed loop and the Bode phase band
    ``[-180, 0]`` degrees.  Failing clauses are listed in ``failures``; no
    exception is raised for a failed check.
    """
    if not res.feasible:
        raise ValueError("cannot verify an infeasible synthesis")
    eps = res.epsilon
    n = plant.n_states
    omega = default_omega_grid(include_zero=False) if omega is None else omega
    if pole_tol is None:
        pole_tol = 5e-2 * (1.0 + eps)
    failures = []

    cl = close_loop(plant, res.K)
    poles = eigenvalues(cl.A)
    rightmost = float(poles.real.max())
    rightmost_ok = abs(rightmost + eps) <= pole_tol
    if not rightmost_ok:
        failures.append(f"rightmost pole {rightmost:.6g} != -eps = {-eps:g}")
    i = int(np.argmin(np.abs(poles - (-eps))))
    others = np.delete(poles, i)
    gap = 1e-6 * (1.0 + eps)
    unique = bool(others.size == 0 or others.real.max() < -eps - gap)

    shifted = StateSpace(plant.A + eps * np.eye(n) + plant.B2 @ res.K,
                         plant.B1, plant.C1, np.zeros((1, 1)))
    data = build_riccati_data(shifted)
    are = riccati_residual(data, res.P)
    are_ok = are <= ARE_TOL
    if not are_ok:
        failures.append(f"closed-loop Riccati residual {are:.3g} > {ARE_TOL:g}")

    ni = orthant_ni_check(cl, omega_grid=np.concatenate([[0.0], omega]),
                          eps_grid=eps_grid, tol=tol)
    if not ni.holds:
        failures.append(f"orthant NI check: {ni.verdict}")

    bd = bode(cl, omega)
    phase_ok = bool(bd.phase_deg.size and bd.phase_deg.min() >= -180.0 - 1e-6
                    and bd.phase_deg.max() <= 1e-6)
    if not phase_ok:
        failures.append("Bode phase leaves [-180, 0] degrees")
    return VerificationReport(poles, rightmost, rightmost_ok, unique, are,
                              are_ok, ni, bd, phase_ok, failures)

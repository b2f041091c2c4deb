"""State-space models, frequency response and closed-loop formation."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exceptions import DimensionError, NearPoleError
from .linalg import as_matrix, eigenvalues

__all__ = [
    "StateSpace",
    "UncertainPlant",
    "MinimalityReport",
    "BodeData",
    "freq_response",
    "shift",
    "poles",
    "is_minimal",
    "close_loop",
    "bode",
    "NEAR_POLE_GUARD",
]

NEAR_POLE_GUARD = 1e-9


def _frozen(M, name):
    M = as_matrix(M, name).copy()
    M.setflags(write=False)
    return M


@dataclass(frozen=True, eq=False)
class StateSpace:
    """Realization ``G(s) = C (sI - A)^{-1} B + D`` with square ``D``.

    ``D`` defaults to zeros.  Inputs are copied into read-only arrays.
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray = None

    def __post_init__(self):
        A = _frozen(self.A, "A")
        B = _frozen(self.B, "B")
        C = _frozen(self.C, "C")
        n = A.shape[0]
        if A.shape != (n, n):
            raise DimensionError(f"A must be square, got {A.shape}")
        if B.shape[0] != n:
            raise DimensionError(f"B has {B.shape[0]} rows, A has {n}")
        m = B.shape[1]
        if C.shape != (m, n):
            raise DimensionError(f"C must be {m}x{n}, got {C.shape}")
        D = np.zeros((m, m)) if self.D is None else self.D
        D = _frozen(D, "D")
        if D.shape != (m, m):
            raise DimensionError(f"D must be {m}x{m}, got {D.shape}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", D)

    @property
    def n_states(self):
        return self.A.shape[0]

    @property
    def n_io(self):
        return self.B.shape[1]

    @property
    def is_siso(self):
        return self.n_io == 1

    @cached_property
    def poles(self):
        return eigenvalues(self.A)

    def __call__(self, s):
        return freq_response(self, s)


@dataclass(frozen=True, eq=False)
class UncertainPlant:
    """``x' = A x + B1 w + B2 u``, ``z = C1 x`` with scalar ``w``, ``z``, ``u``.

    Only shapes are validated here; the modelling assumptions ``R > 0`` and
    ``C1 B2`` invertible are gated where they are used (synthesis).
    """

    A: np.ndarray
    B1: np.ndarray
    B2: np.ndarray
    C1: np.ndarray

    def __post_init__(self):
        A = _frozen(self.A, "A")
        n = A.shape[0]
        if A.shape != (n, n):
            raise DimensionError(f"A must be square, got {A.shape}")
        B1 = _frozen(np.reshape(self.B1, (n, -1)) if np.size(self.B1) == n
                     else self.B1, "B1")
        B2 = _frozen(np.reshape(self.B2, (n, -1)) if np.size(self.B2) == n
                     else self.B2, "B2")
        C1 = _frozen(self.C1, "C1")
        if B1.shape != (n, 1):
            raise DimensionError(f"B1 must be {n}x1, got {B1.shape}")
        if B2.shape != (n, 1):
            raise DimensionError(f"B2 must be {n}x1, got {B2.shape}")
        if C1.shape != (1, n):
            raise DimensionError(f"C1 must be 1x{n}, got {C1.shape}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B1", B1)
        object.__setattr__(self, "B2", B2)
        object.__setattr__(self, "C1", C1)

    @property
    def n_states(self):
        return self.A.shape[0]

    @property
    def R(self):
        """``C1 B1 + B1^T C1^T`` as a float."""
        return float(2.0 * (self.C1 @ self.B1).item())

    @property
    def C1B2(self):
        return float((self.C1 @ self.B2).item())

    def open_loop(self):
        """The disturbance channel ``w -> z`` with ``u = 0``."""
        return StateSpace(self.A, self.B1, self.C1, np.zeros((1, 1)))


def freq_response(sys, s, guard=NEAR_POLE_GUARD):
    """Transfer matrix ``G(s)`` as an ``m x m`` complex array.

    Raises :class:`NearPoleError` when ``s`` is within ``guard`` of an
    eigenvalue of ``A``.

    >>> g = StateSpace([[-1.0]], [[1.0]], [[1.0]])
    >>> complex(freq_response(g, 1j)[0, 0])
    (0.5-0.5j)
    """
    s = complex(s)
    n = sys.n_states
    if n == 0:
        return sys.D.astype(complex)
    lam = sys.poles
    d = np.abs(lam - s)
    i = int(np.argmin(d))
    if d[i] < guard:
        raise NearPoleError(s, complex(lam[i]), float(d[i]))
    X = np.linalg.solve(s * np.eye(n) - sys.A, sys.B.astype(complex))
    return sys.C @ X + sys.D


def shift(sys, delta):
    """Realization with ``A + delta I``; ``shift(sys, -eps)`` realizes ``G(s + eps)``."""
    return StateSpace(sys.A + delta * np.eye(sys.n_states), sys.B, sys.C, sys.D)


def poles(sys):
    """Eigenvalues of ``A`` (transfer-function poles only if ``sys`` is minimal)."""
    return sys.poles.copy()


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    controllability_rank: int
    observability_rank: int
    n_states: int
    controllability_sv: np.ndarray = field(repr=False)
    observability_sv: np.ndarray = field(repr=False)

    def __bool__(self):
        return self.minimal


def _rank(M, rel=1e-9):
    sv = np.linalg.svd(M, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0, sv
    return int(np.sum(sv > rel * sv[0])), sv


def is_minimal(sys):
    """Kalman rank test with singular-value cutoff ``1e-9 sigma_max``."""
    A, B, C = sys.A, sys.B, sys.C
    n = sys.n_states
    ctrb = [B]
    obsv = [C]
    for _ in range(n - 1):
        ctrb.append(A @ ctrb[-1])
        obsv.append(obsv[-1] @ A)
    rc, svc = _rank(np.hstack(ctrb)) if n else (0, np.zeros(0))
    ro, svo = _rank(np.vstack(obsv)) if n else (0, np.zeros(0))
    return MinimalityReport(rc == n and ro == n, rc, ro, n, svc, svo)


def close_loop(plant, K):
    """Closed loop ``w -> z`` under ``u = K x``: ``(A + B2 K, B1, C1, 0)``."""
    K = as_matrix(K, "K")
    n = plant.n_states
    if K.shape != (1, n):
        raise DimensionError(f"K must be 1x{n}, got {K.shape}")
    return StateSpace(plant.A + plant.B2 @ K, plant.B1, plant.C1,
                      np.zeros((1, 1)))


@dataclass(frozen=True)
class BodeData:
    omega: np.ndarray
    mag_db: np.ndarray
    phase_deg: np.ndarray
    skipped: list = field(default_factory=list)


def bode(sys, omega):
    """Magnitude (dB) and unwrapped phase (degrees) of a SISO system.

    Phase unwrapping accumulates from the first (lowest) frequency, whose
    phase is taken in ``(-180, 180]``.  Frequencies that hit a pole are
    dropped and listed in ``skipped``.
    """
    if not sys.is_siso:
        raise DimensionError("bode data is only defined for SISO systems")
    omega = np.sort(np.asarray(omega, dtype=float).ravel())
    kept, values, skipped = [], [], []
    for w in omega:
        try:
            g = freq_response(sys, 1j * w)[0, 0]
        except NearPoleError as exc:
            skipped.append({"omega": float(w), "pole": exc.pole})
            continue
        kept.append(w)
        values.append(g)
    values = np.asarray(values, dtype=complex)
    with np.errstate(divide="ignore"):
        mag = 20.0 * np.log10(np.abs(values))
    phase = np.degrees(np.unwrap(np.angle(values))) if values.size else values.real
    return BodeData(np.asarray(kept), mag, phase, skipped)

"""Negative-imaginary (NI) and strictly-NI certification.

Three independent routes are provided:

* frequency-domain checks of the NI/SNI definitions on a frequency grid,
  including classification of imaginary-axis poles;
* a sampled check of the NI inequality over the orthant
  ``sigma = eps + j omega`` (``eps, omega >= 0``), valid for SISO systems;
* Riccati-equation certificates built from ``R = CB + B^T C^T``.

All checks return an :class:`NIVerdict` with a tri-state outcome.  A
numerical difficulty never turns into ``Fails``; it is reported as
``Indeterminate`` with diagnostics.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg as sla

from .exceptions import (AssumptionError, NearPoleError, PreconditionError,
                         ScopeError)
from .linalg import axis_tolerance, eigenvalues, is_pd, sym_min_eig, symmetrize
from .statespace import freq_response, is_minimal

__all__ = [
    "Verdict",
    "Violation",
    "PoleFinding",
    "NIVerdict",
    "RiccatiData",
    "RiccatiCheck",
    "HamiltonianSingularity",
    "TOL_NI",
    "TOL_SNI",
    "default_omega_grid",
    "DEFAULT_EPS_GRID",
    "ni_indicator",
    "ni_frequency_check",
    "sni_frequency_check",
    "orthant_ni_check",
    "build_riccati_data",
    "riccati_residual",
    "hamiltonian_of",
    "hamiltonian_singularity_check",
    "sni_riccati_check",
]

TOL_NI = 1e-8
TOL_SNI = 1e-10
RICCATI_TOL = 1e-8
DEFAULT_EPS_GRID = (0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)


def default_omega_grid(points=400, omega_min=1e-3, omega_max=1e3,
                       include_zero=True):
    """Log-spaced frequencies, optionally prefixed by ``omega = 0``."""
    w = np.logspace(np.log10(omega_min), np.log10(omega_max), points)
    return np.concatenate([[0.0], w]) if include_zero else w


class Verdict(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INDETERMINATE = "Indeterminate"

    def __str__(self):
        return self.value

    @staticmethod
    def combine(*verdicts):
        """``Fails`` dominates ``Indeterminate``, which dominates ``Holds``."""
        if Verdict.FAILS in verdicts:
            return Verdict.FAILS
        if Verdict.INDETERMINATE in verdicts:
            return Verdict.INDETERMINATE
        return Verdict.HOLDS


@dataclass(frozen=True)
class Violation:
    sigma: complex
    indicator: float


@dataclass(frozen=True)
class PoleFinding:
    pole: complex
    classification: str
    residue_min_eig: float = None


@dataclass
class NIVerdict:
    verdict: Verdict
    violations: list = field(default_factory=list)
    checked_points: int = 0
    pole_findings: list = field(default_factory=list)
    reasons: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    threshold: float = 0.0

    @property
    def holds(self):
        return self.verdict is Verdict.HOLDS

    @property
    def witness(self):
        return self.violations[0] if self.violations else None

    def to_dict(self, max_violations=20):
        def cplx(z):
            return [float(np.real(z)), float(np.imag(z))]

        return {
            "verdict": self.verdict.value,
            "checked_points": int(self.checked_points),
            "threshold": float(self.threshold),
            "n_violations": len(self.violations),
            "violations": [
                {"sigma": cplx(v.sigma), "indicator": float(v.indicator)}
                for v in self.violations[:max_violations]
            ],
            "pole_findings": [
                {"pole": cplx(p.pole), "classification": p.classification,
                 "residue_min_eig": (None if p.residue_min_eig is None
                                     else float(p.residue_min_eig))}
                for p in self.pole_findings
            ],
            "reasons": list(self.reasons),
            "warnings": list(self.warnings),
        }


def ni_indicator(sys, sigma):
    """Smallest eigenvalue of ``j (G(sigma) - G(sigma)^*)``.

    For SISO systems this is ``-2 Im G(sigma)``.
    """
    G = freq_response(sys, sigma)
    H = 1j * (G - G.conj().T)
    H = 0.5 * (H + H.conj().T)
    return float(np.linalg.eigvalsh(H)[0])


def _sweep(sys, sigmas, bad):
    """Evaluate the indicator on ``sigmas``; collect points where ``bad``.

    Returns ``(checked, violations, skipped)``.
    """
    checked = 0
    violations = []
    skipped = []
    for s in sigmas:
        try:
            val = ni_indicator(sys, s)
        except NearPoleError as exc:
            skipped.append(exc)
            continue
        checked += 1
        if bad(val):
            violations.append(Violation(complex(s), val))
    violations.sort(key=lambda v: v.indicator)
    return checked, violations, skipped


def _axis_groups(lam, scale):
    """Group eigenvalues lying near the imaginary axis.

    Defective eigenvalues split by roughly ``eps**(1/k)`` under roundoff, so
    grouping uses a loose radius and decisions use each group's centroid,
    which is accurate to working precision.
    """
    loose = 1e-6 * (1.0 + scale)
    near = [complex(z) for z in lam if abs(z.real) <= loose]
    groups = []
    for z in near:
        for g in groups:
            if abs(z - np.mean(g)) <= loose:
                g.append(z)
                break
        else:
            groups.append([z])
    return [(complex(np.mean(g)), len(g)) for g in groups], loose


def _pole_order(sys, s0, max_order):
    """Smallest ``p`` with ``|(s - s0)^p G(s)|`` bounded as ``s -> s0``.

    Evaluates along ``s = s0 + delta`` for ``delta`` in 1e-4 ... 1e-6.
    Returns ``None`` when no ``p <= max_order`` appears bounded.
    """
    deltas = (1e-4, 1e-5, 1e-6)
    vals = []
    for d in deltas:
        try:
            vals.append(np.linalg.norm(freq_response(sys, s0 + d)))
        except NearPoleError:
            return None
    vals = np.asarray(vals)
    for p in range(max_order + 1):
        f = vals * np.asarray(deltas) ** p
        if f[0] == 0.0 and f[-1] == 0.0:
            return 0
        if f[0] == 0.0:
            continue
        if f[-1] / f[0] <= 10.0:
            return p
    return None


def _double_pole_limit(sys):
    """Richardson estimate of ``lim_{s->0} s^2 G(s)`` and its spread."""
    hs = (1e-4, 1e-5, 1e-6)
    f = [h * h * freq_response(sys, h).real for h in hs]
    est1 = (10.0 * f[1] - f[0]) / 9.0
    est2 = (10.0 * f[2] - f[1]) / 9.0
    scale = max(np.linalg.norm(est2), 1e-300)
    return est2, np.linalg.norm(est2 - est1) / scale


def _simple_pole_residue(sys, center, radius):
    """Residue of ``G`` at a simple pole from right/left eigenvectors."""
    lam, vl, vr = sla.eig(sys.A, left=True, right=True)
    idx = np.flatnonzero(np.abs(lam - center) <= radius)
    V = vr[:, idx]
    W = vl[:, idx]
    return sys.C @ V @ np.linalg.solve(W.conj().T @ V, W.conj().T @ sys.B)


def _classify_poles(sys, tol):
    """Check the pole conditions of the NI definition.

    Returns ``(verdict, findings, reasons)``.
    """
    lam = sys.poles
    findings, reasons = [], []
    if lam.size == 0:
        return Verdict.HOLDS, findings, reasons
    tau = axis_tolerance(sys.A)
    groups, loose = _axis_groups(lam, np.linalg.norm(sys.A))
    verdict = Verdict.HOLDS

    for z in lam:
        if z.real > loose:
            findings.append(PoleFinding(complex(z), "open-rhp"))
            reasons.append(f"pole {complex(z):.6g} in Re[s] > 0")
            verdict = Verdict.FAILS

    for center, mult in groups:
        if center.real > tau:
            findings.append(PoleFinding(center, "ambiguous-axis"))
            reasons.append(f"pole cluster at {center:.6g} too close to the "
                           "imaginary axis to classify")
            verdict = Verdict.combine(verdict, Verdict.INDETERMINATE)
            continue
        if center.real < -tau:
            continue
        if center.imag < -loose:
            continue  # conjugate of a positive-frequency cluster
        s0 = 1j * center.imag if abs(center.imag) > loose else 0.0
        order = _pole_order(sys, s0, mult)
        if order is None:
            findings.append(PoleFinding(center, "unclassified-axis"))
            reasons.append(f"could not determine the order of the pole at "
                           f"{center:.6g}")
            verdict = Verdict.combine(verdict, Verdict.INDETERMINATE)
            continue
        if order == 0:
            findings.append(PoleFinding(center, "cancelled"))
            continue
        if s0 == 0.0:
            if order == 1:
                findings.append(PoleFinding(0j, "simple-origin"))
            elif order == 2:
                L, spread = _double_pole_limit(sys)
                if spread > 1e-4:
                    findings.append(PoleFinding(0j, "double-origin"))
                    reasons.append("lim s^2 G(s) did not converge "
                                   f"(relative spread {spread:.3g})")
                    verdict = Verdict.combine(verdict, Verdict.INDETERMINATE)
                    continue
                asym = np.linalg.norm(L - L.T)
                me = sym_min_eig(L)
                findings.append(PoleFinding(0j, "double-origin", me))
                if asym > 1e-6 * (1.0 + np.linalg.norm(L)) or me < -tol:
                    reasons.append("lim s^2 G(s) is not positive semidefinite")
                    verdict = Verdict.FAILS
            else:
                findings.append(PoleFinding(0j, f"order-{order}-origin"))
                reasons.append(f"pole of order {order} at the origin")
                verdict = Verdict.FAILS
        else:
            if order != 1:
                findings.append(PoleFinding(s0, f"order-{order}-axis"))
                reasons.append(f"non-simple pole at {s0:.6g}")
                verdict = Verdict.FAILS
                continue
            K = 1j * _simple_pole_residue(sys, center, loose)
            Kh = 0.5 * (K + K.conj().T)
            me = float(np.linalg.eigvalsh(Kh)[0])
            findings.append(PoleFinding(s0, "simple-axis", me))
            herm = np.linalg.norm(K - K.conj().T) <= 1e-6 * (1.0 + np.linalg.norm(K))
            if not herm or me < -tol:
                reasons.append(f"residue at {s0:.6g} is not Hermitian PSD")
                verdict = Verdict.FAILS
    return verdict, findings, reasons


def _minimality_warning(sys):
    if not is_minimal(sys):
        return ["realization is not minimal; pole conditions use the "
                "spectrum of A"]
    return []


def ni_frequency_check(sys, grid=None, tol=TOL_NI):
    """Check all four conditions of the NI definition.

    The inequality ``j (G(jw) - G(jw)^*) >= 0`` is sampled on ``grid``
    (default :func:`default_omega_grid`); grid points on poles are skipped.
    Pole conditions are checked from the spectrum of ``A``.
    """
    grid = default_omega_grid() if grid is None else np.asarray(grid, float)
    if np.any(grid < 0):
        raise ValueError("frequency grid must be non-negative")
    pole_verdict, findings, reasons = _classify_poles(sys, tol)
    checked, violations, skipped = _sweep(sys, 1j * grid, lambda v: v < -tol)
    if violations:
        reasons.append(f"{len(violations)} frequency points violate "
                       f"j(G - G*) >= 0 (worst {violations[0].indicator:.3g} "
                       f"at omega={violations[0].sigma.imag:.6g})")
    verdict = Verdict.combine(
        pole_verdict, Verdict.FAILS if violations else Verdict.HOLDS)
    warn = _minimality_warning(sys)
    if skipped:
        warn.append(f"{len(skipped)} grid points skipped at poles")
    return NIVerdict(verdict, violations, checked, findings, reasons, warn,
                     -tol)


def sni_frequency_check(sys, grid=None, tol=TOL_SNI):
    """Check the SNI definition: no poles in ``Re[s] >= 0`` and a strictly
    positive indicator for every ``omega > 0`` on the grid."""
    grid = default_omega_grid() if grid is None else np.asarray(grid, float)
    grid = grid[grid > 0]
    findings, reasons = [], []
    verdict = Verdict.HOLDS
    lam = sys.poles
    tau = axis_tolerance(sys.A)
    for z in lam:
        if z.real >= -tau:
            findings.append(PoleFinding(complex(z), "closed-rhp"))
            verdict = Verdict.FAILS
    if findings:
        reasons.append("pole(s) in Re[s] >= 0")
    checked, violations, skipped = _sweep(sys, 1j * grid, lambda v: v <= tol)
    if violations:
        verdict = Verdict.FAILS
        reasons.append(f"{len(violations)} frequency points with "
                       f"j(G - G*) not > {tol:g}")
    warn = _minimality_warning(sys)
    if skipped:
        warn.append(f"{len(skipped)} grid points skipped at poles")
    return NIVerdict(verdict, violations, checked, findings, reasons, warn, tol)


def orthant_ni_check(sys, omega_grid=None, eps_grid=DEFAULT_EPS_GRID,
                     tol=TOL_NI, diagnostic=False):
    """Sample the NI inequality at ``sigma = eps + j omega``.

    This is a sampled necessary check of NI over the closed first orthant
    and is only meaningful for SISO systems.  Negative ``eps`` values are
    accepted when ``diagnostic`` is true (to exhibit lost NI after a
    rightward shift).
    """
    if not sys.is_siso:
        raise ScopeError("orthant characterization holds only for SISO "
                         "systems (non-symmetric MIMO counterexamples exist)")
    omega = default_omega_grid() if omega_grid is None else np.asarray(omega_grid, float)
    eps = np.asarray(eps_grid, dtype=float)
    if np.any(omega < 0):
        raise ValueError("omega grid must be non-negative")
    if np.any(eps < 0) and not diagnostic:
        raise ValueError("negative eps requires diagnostic=True")

    findings, reasons = [], []
    verdict = Verdict.HOLDS
    loose = 1e-6 * (1.0 + np.linalg.norm(sys.A))
    for z in sys.poles:
        if z.real > loose:
            findings.append(PoleFinding(complex(z), "open-rhp"))
            verdict = Verdict.FAILS
    if findings:
        reasons.append("G is not analytic in Re[s] > 0")

    sigmas = (eps[:, None] + 1j * omega[None, :]).ravel()
    checked, violations, skipped = _sweep(sys, sigmas, lambda v: v < -tol)
    if violations:
        verdict = Verdict.FAILS
        w = violations[0]
        reasons.append(f"worst indicator {w.indicator:.3g} at sigma={w.sigma:.6g}")
    warn = [f"{len(skipped)} samples skipped at poles"] if skipped else []
    return NIVerdict(verdict, violations, checked, findings, reasons, warn, -tol)


@dataclass(frozen=True)
class RiccatiData:
    """Data of ``P A0 + A0^T P + P B R^{-1} B^T P + Q = 0``.

    ``A0 = A - B R^{-1} C A``, ``R = C B + B^T C^T``,
    ``Q = A^T C^T R^{-1} C A``.  ``A`` is kept for the Hamiltonian
    null-space construction.
    """

    A: np.ndarray
    A0: np.ndarray
    R: np.ndarray
    Q: np.ndarray
    B: np.ndarray
    C: np.ndarray

    @property
    def R_inv(self):
        return np.linalg.inv(self.R)

    @property
    def G(self):
        """Quadratic-term weight ``B R^{-1} B^T``."""
        return symmetrize(self.B @ np.linalg.solve(self.R, self.B.T))


def build_riccati_data(sys):
    D = sys.D
    if np.linalg.norm(D - D.T) > 1e-12 * (1.0 + np.linalg.norm(D)):
        raise AssumptionError("D = D^T", "D is not symmetric")
    A, B, C = sys.A, sys.B, sys.C
    R = symmetrize(C @ B + B.T @ C.T)
    if not is_pd(R):
        raise AssumptionError("CB + B^T C^T > 0",
                              f"R = CB + B^T C^T is not positive definite "
                              f"(min eig {sym_min_eig(R):.3g})")
    CA = C @ A
    A0 = A - B @ np.linalg.solve(R, CA)
    Q = symmetrize(CA.T @ np.linalg.solve(R, CA))
    return RiccatiData(A, A0, R, Q, B, C)


def riccati_residual(data, P):
    """``||P A0 + A0^T P + P B R^-1 B^T P + Q||_F / (1 + ||P||_F)^2``."""
    P = np.asarray(P, dtype=float)
    n = data.A0.shape[0]
    if P.shape != (n, n):
        raise ValueError(f"P must be {n}x{n}, got {P.shape}")
    res = P @ data.A0 + data.A0.T @ P + P @ data.G @ P + data.Q
    return float(np.linalg.norm(res) / (1.0 + np.linalg.norm(P)) ** 2)


def hamiltonian_of(data):
    """``[[A0, B R^-1 B^T], [-Q, -A0^T]]``."""
    return np.block([[data.A0, data.G], [-data.Q, -data.A0.T]])


@dataclass(frozen=True)
class HamiltonianSingularity:
    is_singular: bool
    null_vector: np.ndarray   # (x, y) with H [x; y] = 0
    w: np.ndarray             # (z, y) = V1 beta with z = A x
    sigma_min: float
    norm: float

    def __iter__(self):
        yield self.is_singular
        yield self.null_vector


def hamiltonian_singularity_check(data, beta=None, rel_tol=1e-7):
    """Exhibit a null vector of the Riccati Hamiltonian.

    With ``V1 = [B; -C^T]`` every ``w = V1 beta`` satisfies the projected
    null condition; mapping back through ``z = A x`` gives
    ``x = A^{-1} B beta``, ``y = -C^T beta`` with ``H [x; y] = 0``.  The
    smallest singular value of ``H`` is reported alongside.
    """
    A = data.A
    n, m = data.B.shape
    if np.linalg.matrix_rank(A) < n:
        raise PreconditionError("A must be non-singular")
    beta = np.eye(m)[:, 0] if beta is None else np.asarray(beta, float).ravel()
    V1 = np.vstack([data.B, -data.C.T])
    w = V1 @ beta
    if np.linalg.norm(w) == 0.0:
        raise ValueError("beta yields w = 0")
    x = np.linalg.solve(A, w[:n])
    v = np.concatenate([x, w[n:]])
    H = hamiltonian_of(data)
    sv = np.linalg.svd(H, compute_uv=False)
    hn = float(sv[0])
    smin = float(sv[-1])
    nv = np.linalg.norm(H @ v) / (np.linalg.norm(v) * max(hn, 1e-300))
    singular = smin <= rel_tol * hn and nv <= rel_tol
    return HamiltonianSingularity(bool(singular), v, w, smin, hn)


@dataclass
class RiccatiCheck:
    verdict: NIVerdict
    P: np.ndarray = None
    residual: float = None
    closed_loop_eigs: np.ndarray = None
    method: str = None


def _verify_riccati(data, P):
    """Return ``(failed_clauses, residual, eigs)`` for a candidate ``P``."""
    P = symmetrize(P)
    failed = []
    if not is_pd(P):
        failed.append(f"P is not positive definite (min eig {sym_min_eig(P):.3g})")
    res = riccati_residual(data, P)
    if res > RICCATI_TOL:
        failed.append(f"Riccati residual {res:.3g} > {RICCATI_TOL:g}")
    M = data.A0 + data.G @ P
    lam = eigenvalues(M)
    tau = axis_tolerance(M)
    groups, loose = _axis_groups(lam, np.linalg.norm(M))
    for z in lam:
        if z.real > loose:
            failed.append(f"A0 + B R^-1 B^T P has eigenvalue {z:.6g} in Re > 0")
    for center, _ in groups:
        if center.real > tau or (abs(center.real) <= tau and abs(center) > loose):
            failed.append("A0 + B R^-1 B^T P has an eigenvalue on the "
                          f"imaginary axis away from the origin ({center:.6g})")
    return failed, res, lam


def _kernel_chain(H, rel=1e-10):
    """Orthonormal bases of ``ker(H^j)``, ``j = 1, 2, ...`` until the
    dimension stops growing.  Powers of ``H / ||H||`` are thresholded at
    ``rel`` absolutely."""
    N = H.shape[0]
    Hn = H / max(np.linalg.norm(H), 1e-300)
    Hj = np.eye(N)
    chain = []
    for _ in range(N):
        Hj = Hj @ Hn
        _, sv, Vt = np.linalg.svd(Hj)
        null = int(np.sum(sv <= rel))
        if chain and null <= chain[-1].shape[1]:
            break
        chain.append(Vt[N - null:].T)
        if null == N:
            break
    return chain


def _candidate_solutions(data):
    """Yield ``(method, P)`` candidates from invariant subspaces of ``H``.

    The stable part is an ordered Schur basis; the zero-eigenvalue part comes
    from the Hamiltonian null-space construction or a generalized kernel
    ``ker(H^j)``, whose SVD bases stay accurate where eigenvalues of the
    defective zero cluster do not.
    """
    n, m = data.B.shape
    H = hamiltonian_of(data)
    loose = 1e-6 * (1.0 + np.linalg.norm(H))

    def schur_first(select):
        try:
            _, Z, k = sla.schur(H, output="real", sort=select)
        except (np.linalg.LinAlgError, ValueError):
            return None, 0
        return Z, int(k)

    chain = _kernel_chain(H)
    zero_mult = chain[-1].shape[1] if chain else 0
    ks = (2 * n - zero_mult) // 2
    bases = []
    if (2 * n - zero_mult) % 2 == 0 and ks <= n:
        lam = np.sort_complex(eigenvalues(H))
        re = np.sort(lam.real)
        if ks == 0:
            Zs = np.zeros((2 * n, 0))
        else:
            cut = re[ks - 1] if ks == 2 * n else 0.5 * (re[ks - 1] + re[ks])
            Zs, k = schur_first(lambda x, y: x <= cut)
            Zs = Zs[:, :ks] if Zs is not None and k == ks else None
        if Zs is not None:
            if np.linalg.matrix_rank(data.A) == n and ks + m == n:
                N = np.vstack([np.linalg.solve(data.A, data.B), -data.C.T])
                bases.append(("stable+hamiltonian-null", np.hstack([Zs, N])))
            for j, K in enumerate(chain, start=1):
                if ks + K.shape[1] == n:
                    bases.append((f"stable+ker(H^{j})", np.hstack([Zs, K])))
    # fallback: pad with Schur vectors of the near-axis cluster
    Zp, kp = schur_first(lambda x, y: x <= loose)
    if Zp is not None and kp >= n:
        bases.append(("stable+axis-schur", Zp[:, :n]))
    for name, V in bases:
        X, Y = V[:n], V[n:]
        if np.linalg.cond(X) > 1e12:
            continue
        yield name, symmetrize(np.linalg.solve(X.T, Y.T).T)


def sni_riccati_check(sys, candidate_P=None, grid=None):
    """Riccati certificate of SNI.

    Conditions checked: ``A`` has no imaginary-axis eigenvalues and
    ``D = D^T``; ``P = P^T > 0`` solves the Riccati equation; all
    eigenvalues of ``A0 + B R^-1 B^T P`` lie in the open left half plane or
    at the origin.

    Without ``candidate_P`` a solution is sought from invariant subspaces of
    the (always singular) Hamiltonian.  If none verifies, the frequency
    check decides: a violated NI inequality proves that no certificate
    exists (``Fails``); otherwise the result is ``Indeterminate``.
    """
    data = build_riccati_data(sys)
    warn = _minimality_warning(sys)
    lam = sys.poles
    tau = axis_tolerance(sys.A)
    axis = [complex(z) for z in lam if abs(z.real) <= tau]
    if axis:
        f = [PoleFinding(z, "imaginary-axis") for z in axis]
        v = NIVerdict(Verdict.FAILS, pole_findings=f, warnings=warn,
                      reasons=["A has imaginary-axis eigenvalues"])
        return RiccatiCheck(v)

    if candidate_P is not None:
        P = symmetrize(np.asarray(candidate_P, dtype=float))
        failed, res, eigs = _verify_riccati(data, P)
        verdict = Verdict.FAILS if failed else Verdict.HOLDS
        return RiccatiCheck(NIVerdict(verdict, reasons=failed, warnings=warn),
                            P, res, eigs, "candidate")

    attempts = []
    for method, P in _candidate_solutions(data):
        failed, res, eigs = _verify_riccati(data, P)
        if not failed:
            return RiccatiCheck(NIVerdict(Verdict.HOLDS, warnings=warn),
                                P, res, eigs, method)
        attempts.append(f"{method}: " + "; ".join(failed))

    freq = ni_frequency_check(sys, grid)
    if freq.verdict is Verdict.FAILS:
        reasons = attempts + ["G is not NI on the frequency grid, so no "
                              "SNI certificate can exist"] + freq.reasons
        return RiccatiCheck(NIVerdict(Verdict.FAILS, freq.violations,
                                      freq.checked_points, freq.pole_findings,
                                      reasons, warn, freq.threshold),
                            method="frequency-refutation")
    reasons = attempts or ["no invariant-subspace candidate available"]
    return RiccatiCheck(NIVerdict(Verdict.INDETERMINATE, reasons=reasons,
                                  warnings=warn))

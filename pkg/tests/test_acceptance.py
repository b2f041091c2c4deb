"""Acceptance criteria, one test each.

Every test records a pass/fail line that is printed in the terminal
summary, then asserts.  Tolerances are the contract values.
"""

import time

import numpy as np

from niforge import models
from niforge.analysis import (Verdict, build_riccati_data, default_omega_grid,
                              hamiltonian_of, ni_frequency_check, ni_indicator,
                              orthant_ni_check, sni_frequency_check,
                              sni_riccati_check)
from niforge.linalg import (axis_tolerance, eigenvalues, ordered_real_schur,
                            solve_stable_lyapunov)
from niforge.statespace import StateSpace, UncertainPlant, bode, close_loop, shift
from niforge.synthesis import synthesize, verify_synthesis

from test_linalg import kron_lyapunov

SEED = 1729


def test_01_example_regression(acceptance):
    plant = models.example_plant()
    t0 = time.perf_counter()
    res = synthesize(plant, 2.0)
    elapsed = time.perf_counter() - t0
    k = res.schur.stable_dim
    T, S = float(res.T[0, 0]), float(res.S[0, 0])
    poles = np.sort(eigenvalues(close_loop(plant, res.K).A).real)
    checks = {
        "T": abs(T - 0.039) <= 0.005,
        "S": abs(S - 0.019) <= 0.005,
        "T-S": abs((T - S) - 0.020) <= 0.005,
        "Pf": abs(float(res.Pf[k, k]) - 49.078) <= 0.01,
        "K": bool(np.all(np.abs(res.K.ravel() - [34.008, -15.984, 0.680]) <= 0.01)),
        "poles": bool(np.all(np.abs(poles - [-66.1, -2.5, -2.0]) <= 0.05)),
        "runtime": elapsed < 1.0,
    }
    bad = [name for name, ok in checks.items() if not ok]
    detail = (f"T={T:.4f} S={S:.4f} Pf={res.Pf[k, k]:.3f} "
              f"K={np.round(res.K.ravel(), 3).tolist()} poles={np.round(poles, 3).tolist()} "
              f"{elapsed * 1e3:.0f} ms; mismatched: {', '.join(bad) or 'none'}")
    acceptance(1, "example plant regression at eps=2", not bad, detail)
    assert not bad, detail


def test_02_prescribed_stability(acceptance):
    plant = models.example_plant()
    bad = []
    for eps in (0.3, 1.0, 2.0, 5.0):
        res = synthesize(plant, eps)
        if not res.feasible:
            bad.append(f"eps={eps:g} infeasible (min eig T-S {res.margin:.3g})")
            continue
        lam = eigenvalues(close_loop(plant, res.K).A)
        right = lam.real.max()
        i = int(np.argmax(lam.real))
        rest = np.delete(lam, i)
        if abs(right + eps) > 1e-6 * (1 + eps) or (rest.size and rest.real.max() >= right):
            bad.append(f"eps={eps:g} rightmost {right:.9g}")
    detail = "; ".join(bad) or "rightmost pole at -eps for all eps"
    acceptance(2, "prescribed degree of stability eps in {0.3, 1, 2, 5}", not bad, detail)
    assert not bad, detail


def test_03_origin_pole_at_eps_zero(acceptance):
    plant = models.example_plant()
    res = synthesize(plant, 0.0)
    right = float(eigenvalues(close_loop(plant, res.K).A).real.max())
    ok = res.feasible and abs(right) <= 1e-8
    acceptance(3, "eps=0 leaves the rightmost pole at the origin", ok, f"{right:.2e}")
    assert ok


def test_04_ni_preservation(acceptance):
    plant = models.example_plant()
    res = synthesize(plant, 2.0)
    cl = close_loop(plant, res.K)
    omega = default_omega_grid(400, 1e-3, 1e3, include_zero=False)
    orth = orthant_ni_check(cl, omega_grid=omega, eps_grid=[0.0, 0.1, 1.0, 10.0], tol=1e-8)
    worst = min(ni_indicator(cl, e + 1j * w) for e in (0.0, 0.1, 1.0, 10.0) for w in omega)
    bd = bode(cl, omega)
    phase_ok = bd.phase_deg.min() >= -180.0 and bd.phase_deg.max() <= 0.0
    ok = orth.holds and worst >= -1e-8 and phase_ok and bd.omega.size == omega.size
    detail = (f"orthant {orth.verdict}, min indicator {worst:.3g}, phase "
              f"[{bd.phase_deg.min():.2f}, {bd.phase_deg.max():.2f}] deg")
    acceptance(4, "closed loop NI over the orthant and phase in [-180, 0]", ok, detail)
    assert ok, detail


def test_05_mimo_counterexample(acceptance):
    g = models.nonsymmetric_mimo()
    r = sni_riccati_check(g)
    gs = shift(g, -3.0)
    v = ni_frequency_check(gs)
    rs = sni_riccati_check(gs)
    negative = v.witness is not None and v.witness.indicator < 0
    ok = r.verdict.holds and v.verdict is Verdict.FAILS and negative \
        and rs.verdict.verdict is Verdict.FAILS
    detail = (f"unshifted Riccati {r.verdict.verdict}; shifted NI {v.verdict} "
              f"witness {v.witness.indicator:.4g} at {v.witness.sigma}")
    acceptance(5, "MIMO system SNI, not NI after eps=3 shift", ok, detail)
    assert ok, detail


def test_06_sni_not_open(acceptance):
    g = models.double_pole_sni()
    sni = sni_frequency_check(g).holds and sni_riccati_check(g).verdict.holds
    val = ni_indicator(shift(g, 1.0), 0.5j)
    # Im G(j w - 1) numerator at w = 0.5: w (1 - w^2) = 0.5 * 0.75 > 0
    numerator = 0.5 * (1 - 0.5 ** 2)
    ok = sni and val < 0 and numerator > 0 and np.sign(-val) == np.sign(numerator)
    acceptance(6, "(s+1)/(s+2)^2 SNI, eps=-1 shift has indicator < 0", ok,
               f"indicator(j0.5) = {val:.6g}")
    assert ok


def test_07_hamiltonian_singular(acceptance):
    rng = np.random.default_rng(SEED)
    ratios = []
    while len(ratios) < 120:
        n = int(rng.integers(1, 9))
        A = rng.normal(size=(n, n))
        if np.linalg.cond(A) > 1e8:
            continue
        B = rng.normal(size=(n, 1))
        C = rng.normal(size=(1, n))
        if (C @ B).item() < 0:
            C = -C
        if (C @ B).item() < 1e-3:
            continue
        H = hamiltonian_of(build_riccati_data(StateSpace(A, B, C)))
        sv = np.linalg.svd(H, compute_uv=False)
        ratios.append(sv[-1] / sv[0])
    hits = sum(r <= 1e-7 for r in ratios)
    ok = hits == len(ratios)
    acceptance(7, "Hamiltonian singular on random SISO systems", ok,
               f"{hits}/{len(ratios)}, worst ratio {max(ratios):.2e}")
    assert ok


def test_08_lyapunov_oracle(acceptance):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    count = 60
    for _ in range(count):
        n = int(rng.integers(1, 7))
        M = rng.normal(size=(n, n))
        F = M - (np.linalg.eigvals(M).real.max() + rng.uniform(0.1, 2)) * np.eye(n)
        G = rng.normal(size=(n, n))
        Q = G @ G.T
        ref = kron_lyapunov(F, Q)
        worst = max(worst, np.linalg.norm(solve_stable_lyapunov(F, Q) - ref)
                    / np.linalg.norm(ref))
    ok = worst <= 1e-8
    acceptance(8, "Lyapunov solver matches Kronecker solve", ok,
               f"{count} instances, worst relative error {worst:.2e}")
    assert ok


def test_09_schur_split(acceptance):
    rng = np.random.default_rng(SEED)
    bad = 0
    count = 120
    for _ in range(count):
        n = int(rng.integers(1, 11))
        M = rng.normal(size=(n, n))
        s = ordered_real_schur(M)
        tau = axis_tolerance(M)
        cls = int(np.sum(eigenvalues(M).real <= tau))
        orth = np.linalg.norm(s.U.T @ s.U - np.eye(n))
        recon = np.linalg.norm(s.U @ s.T @ s.U.T - M) / np.linalg.norm(M)
        if orth > 1e-10 or recon > 1e-8 or cls != s.stable_dim:
            bad += 1
    ok = bad == 0
    acceptance(9, "ordered Schur split invariants on random matrices", ok,
               f"{count - bad}/{count} sound")
    assert ok


def test_10_closed_loop_riccati_residual(acceptance):
    rng = np.random.default_rng(SEED)
    feasible, worst = 0, 0.0
    tried = 0
    while feasible < 60:
        tried += 1
        n = int(rng.integers(1, 7))
        A = rng.normal(size=(n, n))
        B1 = rng.normal(size=(n, 1))
        B2 = rng.normal(size=(n, 1))
        C1 = rng.normal(size=(1, n))
        if (C1 @ B1).item() < 0:
            B1 = -B1
        plant = UncertainPlant(A, B1, B2, C1)
        eps = float(rng.choice([0.0, 0.3, 1.0, 2.0, 5.0]))
        res = synthesize(plant, eps)
        if not res.feasible:
            continue
        feasible += 1
        worst = max(worst, verify_synthesis(plant, res).are_residual)
    ok = worst <= 1e-8
    acceptance(10, "closed-loop Riccati residual on feasible syntheses", ok,
               f"{feasible} feasible of {tried}, worst {worst:.2e}")
    assert ok

import numpy as np
import pytest

from niforge import models
from niforge.analysis import Verdict
from niforge.exceptions import AssumptionError
from niforge.linalg import eigenvalues
from niforge.statespace import UncertainPlant, close_loop
from niforge.synthesis import (SchurData, design_matrix, schur_pipeline,
                               solve_TS, synthesize, verify_synthesis)

from test_linalg import kron_lyapunov


def random_plant(rng, n):
    A = rng.normal(size=(n, n))
    B1 = rng.normal(size=(n, 1))
    B2 = rng.normal(size=(n, 1))
    C1 = rng.normal(size=(1, n))
    if (C1 @ B1).item() < 0:
        B1 = -B1
    return UncertainPlant(A, B1, B2, C1)


def feasible_syntheses(rng, count, eps_choices=(0.0, 0.3, 1.0, 2.0, 5.0)):
    out = []
    while len(out) < count:
        plant = random_plant(rng, int(rng.integers(1, 7)))
        eps = float(rng.choice(eps_choices))
        res = synthesize(plant, eps)
        if res.feasible:
            out.append((plant, res))
    return out


def test_design_matrix_entries():
    p = models.example_plant()
    base = np.array([[-1, 0, -1], [-33, 6, 9], [-22, 4, 6]], float)
    slope = np.array([[1, 0, 0], [0, -3, 6], [0, -2, 4]], float)
    for eps in (0.0, 2.0):
        assert np.allclose(design_matrix(p, eps), base + eps * slope, atol=1e-13)


def test_design_matrix_is_singular(rng):
    for _ in range(20):
        p = random_plant(rng, 4)
        lam = eigenvalues(design_matrix(p, 1.0))
        assert np.min(np.abs(lam)) <= 1e-9 * (1 + np.linalg.norm(design_matrix(p, 1.0)))


def test_example_split():
    sd = schur_pipeline(models.example_plant(), 2.0)
    assert sd.stable_dim == 2
    assert sd.A22.shape == (1, 1)
    assert sd.A22[0, 0] == pytest.approx(15.5156, abs=1e-4)
    assert sd.R == 4.0


def test_scalar_T_closed_form():
    a, r, b, b1 = 3.0, 4.0, 0.5, 0.25
    z = np.zeros((0, 0))
    sd = SchurData(np.eye(1), z, np.zeros((0, 1)), np.array([[a]]),
                   np.zeros((0, 1)), np.array([[b]]), np.zeros((0, 1)),
                   np.array([[b1]]), r, 0, 0.0)
    T, S = solve_TS(sd)
    assert T[0, 0] == pytest.approx(r * b * b / (2 * a), rel=1e-14)
    assert S[0, 0] == pytest.approx(b1 * b1 / (2 * a * r), rel=1e-14)


def test_T_S_match_kronecker(rng):
    for plant, res in feasible_syntheses(rng, 20):
        sd = res.schur
        if sd.A22.size == 0:
            continue
        F = -sd.A22
        assert np.allclose(res.T, kron_lyapunov(F, sd.R * sd.Bf2 @ sd.Bf2.T),
                           rtol=1e-8, atol=1e-12)
        assert np.allclose(res.S, kron_lyapunov(F, sd.B22 @ sd.B22.T / sd.R),
                           rtol=1e-8, atol=1e-12)


@pytest.mark.parametrize("eps", [0.3, 1.0, 2.0])
def test_example_rightmost_pole(eps):
    res = synthesize(models.example_plant(), eps, verify=True)
    assert res.feasible
    rep = res.report
    assert abs(rep.rightmost + eps) <= 1e-6 * (1 + eps)
    assert rep.rightmost_unique
    assert rep.passed, rep.failures


def test_example_infeasible_at_eps_5():
    res = synthesize(models.example_plant(), 5.0)
    assert not res.feasible
    assert res.schur.stable_dim == 1
    assert res.margin < 0
    assert res.K is None


def test_origin_pole_at_eps_zero():
    res = synthesize(models.example_plant(), 0.0)
    lam = eigenvalues(close_loop(models.example_plant(), res.K).A)
    assert abs(lam.real.max()) <= 1e-8


def test_random_rightmost_pole_and_riccati(rng):
    for plant, res in feasible_syntheses(rng, 40):
        rep = verify_synthesis(plant, res)
        eps = res.epsilon
        assert abs(rep.rightmost + eps) <= 1e-6 * (1 + eps)
        assert rep.are_residual <= 1e-8
        assert res.pf_residual <= 1e-8
        k = res.schur.stable_dim
        assert np.linalg.matrix_rank(res.P, tol=1e-9 * (1 + np.linalg.norm(res.P))) == plant.n_states - k


def test_closed_loop_is_ni(rng):
    checked = 0
    for plant, res in feasible_syntheses(rng, 15, eps_choices=(0.5, 1.0)):
        rep = verify_synthesis(plant, res)
        assert rep.ni.verdict is Verdict.HOLDS, rep.ni.reasons
        if rep.bode.phase_deg.size:
            assert rep.phase_ok
        checked += 1
    assert checked == 15


def test_infeasible_fixture():
    p = UncertainPlant([[0.0, -3.0], [2.0, 1.0]], [[2.0], [-1.0]],
                       [[2.0], [-2.0]], [[1.0, -1.0]])
    res = synthesize(p, 0.5)
    assert not res.feasible
    assert res.margin == pytest.approx(-0.235294, abs=1e-6)
    with pytest.raises(ValueError):
        verify_synthesis(p, res)


def test_assumption_gates():
    p = models.example_plant()
    with pytest.raises(AssumptionError) as exc:
        synthesize(UncertainPlant(p.A, p.B1, [[0.0], [3.0], [2.0]], p.C1), 1.0)
    assert exc.value.assumption == "C1*B2 not invertible"
    with pytest.raises(AssumptionError):
        synthesize(UncertainPlant(p.A, -p.B1, p.B2, p.C1), 1.0)
    with pytest.raises(ValueError):
        synthesize(p, -1.0)


def test_sign_flipped_design_reproduces_reference_gain():
    # designing on A - 2I (a leftward shift) gives the reference gain, T, S
    # and Pf; on the actual plant that gain leaves a pole at +2
    p = models.example_plant()
    alt = UncertainPlant(p.A - 2 * np.eye(3), p.B1, p.B2, p.C1)
    res = synthesize(alt, 0.0)
    assert res.T[0, 0] == pytest.approx(0.0394, abs=1e-4)
    assert res.S[0, 0] == pytest.approx(0.0191, abs=1e-4)
    assert res.Pf[-1, -1] == pytest.approx(49.078, abs=1e-2)
    assert np.allclose(res.K.ravel(), [34.008, -15.984, 0.680], atol=1e-2)
    lam = np.sort(eigenvalues(close_loop(p, res.K).A).real)
    assert np.allclose(lam, [-62.062, -2.516, 2.0], atol=1e-2)


def test_rightmost_pole_law_up_to_eight_states(rng):
    count = 0
    while count < 40:
        plant = random_plant(rng, int(rng.integers(2, 9)))
        eps = float(rng.choice([0.1, 0.5, 1.0, 2.0, 5.0]))
        res = synthesize(plant, eps)
        if not res.feasible:
            continue
        count += 1
        lam = eigenvalues(close_loop(plant, res.K).A)
        assert abs(lam.real.max() + eps) <= 1e-6 * (1 + eps)
        # the same gain on the eps-shifted plant leaves the pole at the origin
        shifted = eigenvalues(plant.A + eps * np.eye(plant.n_states) + plant.B2 @ res.K)
        assert abs(shifted.real.max()) <= 1e-8


def test_degenerate_split_gives_zero_P():
    p = UncertainPlant([[-1.0]], [[1.0]], [[1.0]], [[1.0]])
    res = synthesize(p, 0.5)
    assert res.feasible and res.schur.stable_dim == 1
    assert np.array_equal(res.P, np.zeros((1, 1)))
    assert res.margin == np.inf

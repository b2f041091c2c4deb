import numpy as np
import pytest

from niforge import models
from niforge.exceptions import DimensionError, NearPoleError
from niforge.statespace import (StateSpace, UncertainPlant, bode, close_loop,
                                freq_response, is_minimal, shift)


def rational(s):
    return (s + 1) / (s + 2) ** 2


def test_freq_response_matches_rational_oracle():
    g = models.double_pole_sni()
    for s in [0.3j, 1j, 5j, 0.2 + 2j, -0.5 + 0.1j]:
        assert complex(freq_response(g, s)[0, 0]) == pytest.approx(rational(s), rel=1e-12)


@pytest.mark.parametrize("w", [0.5, 1.0, 2.0])
def test_imaginary_part_closed_form(w):
    # Im (jw + 1)(2 - jw)^2 = -w^3
    g = complex(freq_response(models.double_pole_sni(), 1j * w)[0, 0])
    assert g.imag == pytest.approx(-w ** 3 / (w ** 2 + 4) ** 2, abs=1e-10)


def test_shift_is_frequency_translation():
    g = models.double_pole_sni()
    eps = 0.7
    for w in [0.0, 0.3, 4.0]:
        lhs = freq_response(shift(g, -eps), 1j * w)
        rhs = freq_response(g, 1j * w + eps)
        assert np.allclose(lhs, rhs, rtol=1e-13)
    assert np.allclose(shift(g, 2.0).A, g.A + 2 * np.eye(2))


def test_near_pole_guard():
    with pytest.raises(NearPoleError) as exc:
        freq_response(models.integrator(), 0.0)
    assert exc.value.pole == 0


def test_shapes_validated_and_frozen():
    with pytest.raises(DimensionError):
        StateSpace(np.eye(2), np.ones((3, 1)), np.ones((1, 2)))
    with pytest.raises(DimensionError):
        StateSpace(np.eye(2), np.ones((2, 1)), np.ones((1, 2)), np.eye(2))
    g = models.first_order()
    with pytest.raises(ValueError):
        g.A[0, 0] = 3.0
    assert g.D.shape == (1, 1)
    with pytest.raises(DimensionError):
        UncertainPlant(np.eye(2), np.ones((2, 2)), np.ones(2), np.ones((1, 2)))


def test_minimality():
    assert is_minimal(models.double_pole_sni())
    g = StateSpace(np.diag([-1.0, -2.0]), [[1.0], [0.0]], [[1.0, 1.0]])
    rep = is_minimal(g)
    assert not rep and rep.controllability_rank == 1 and rep.observability_rank == 2


def test_plant_scalars_and_close_loop():
    p = models.example_plant()
    assert p.R == 4.0 and p.C1B2 == 2.0
    K = np.array([[1.0, 2.0, 3.0]])
    cl = close_loop(p, K)
    assert np.allclose(cl.A, p.A + p.B2 @ K)
    assert np.array_equal(cl.B, p.B1) and np.array_equal(cl.C, p.C1)


def test_bode_phase_unwrapped_from_lowest_frequency():
    # 1 / (s + 1)^3 crosses -180 degrees; unwrapping keeps it continuous
    g = StateSpace([[-1.0, 1.0, 0.0], [0.0, -1.0, 1.0], [0.0, 0.0, -1.0]],
                   [[0.0], [0.0], [1.0]], [[1.0, 0.0, 0.0]])
    w = np.logspace(-2, 2, 200)
    bd = bode(g, w[::-1])
    assert np.all(np.diff(bd.omega) > 0)
    assert bd.phase_deg[-1] == pytest.approx(-270.0, abs=3.0)
    assert np.all(np.abs(np.diff(bd.phase_deg)) < 10)
    assert bd.mag_db[0] == pytest.approx(0.0, abs=1e-2)


def test_bode_skips_poles():
    bd = bode(StateSpace([[0.0, 1.0], [-1.0, 0.0]], [[0.0], [1.0]], [[1.0, 0.0]]),
              [0.5, 1.0, 2.0])
    assert list(bd.omega) == [0.5, 2.0]
    assert bd.skipped[0]["omega"] == 1.0


def test_resolvent_identity_and_conjugate_symmetry(rng):
    for _ in range(20):
        n, m = int(rng.integers(1, 6)), int(rng.integers(1, 3))
        g = StateSpace(rng.normal(size=(n, n)) - 3 * np.eye(n), rng.normal(size=(n, m)),
                       rng.normal(size=(m, n)), rng.normal(size=(m, m)))
        s = complex(rng.normal(), rng.normal())
        X = np.column_stack([np.linalg.solve(s * np.eye(n) - g.A, g.B[:, j])
                             for j in range(m)])
        assert np.allclose(freq_response(g, s), g.C @ X + g.D, atol=1e-10)
        assert np.allclose(freq_response(g, np.conj(s)), np.conj(freq_response(g, s)),
                           atol=1e-12)


def test_close_loop_zero_gain_keeps_spectrum():
    p = models.example_plant()
    assert np.allclose(close_loop(p, np.zeros((1, 3))).poles, np.sort_complex(
        np.linalg.eigvals(p.A)), atol=1e-12)

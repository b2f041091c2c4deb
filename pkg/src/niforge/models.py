"""Reference systems used by the demo, notebooks and tests."""

import numpy as np

from .statespace import StateSpace, UncertainPlant

__all__ = [
    "example_plant",
    "first_order",
    "integrator",
    "double_pole_sni",
    "nonsymmetric_mimo",
    "REFERENCE_VALUES",
]


def example_plant():
    """Third-order uncertain plant with ``C1 B2 = 2`` and ``R = 4``.

    ``A[1, 1] = 0``: with this entry the design matrix equals
    ``[[-1, 0, -1], [-33, 6, 9], [-22, 4, 6]] + eps [[1, 0, 0], [0, -3, 6],
    [0, -2, 4]]`` and the ``eps = 2`` closed loop has poles
    ``-2, -2.516, -66.06``.
    """
    A = np.array([[-1.0, 0.0, -1.0],
                  [1.0, 0.0, -1.0],
                  [-5.0, 1.0, 1.0]])
    B1 = np.array([[-1.0], [1.0], [0.0]])
    B2 = np.array([[0.0], [4.0], [2.0]])
    C1 = np.array([[0.0, 2.0, -3.0]])
    return UncertainPlant(A, B1, B2, C1)


# Reference figures for the example plant at eps = 2.  The gain, T, S and Pf
# entries are reproduced by designing on A - 2I (see the synthesis notebook);
# the poles by the eps = +2 design.
REFERENCE_VALUES = {
    "eps": 2.0,
    "T": 0.039,
    "S": 0.019,
    "T-S": 0.020,
    "Pf": 49.078,
    "K": (34.008, -15.984, 0.680),
    "poles": (-66.1, -2.5, -2.0),
}


def first_order():
    """``1 / (s + 1)``."""
    return StateSpace([[-1.0]], [[1.0]], [[1.0]], [[0.0]])


def integrator():
    """``1 / s``."""
    return StateSpace([[0.0]], [[1.0]], [[1.0]], [[0.0]])


def double_pole_sni():
    """``(s + 1) / (s + 2)^2`` in controllable canonical form."""
    return StateSpace([[0.0, 1.0], [-4.0, -4.0]], [[0.0], [1.0]],
                      [[1.0, 1.0]], [[0.0]])


def nonsymmetric_mimo():
    """Two-input SNI system whose shift ``A - 3I`` is no longer NI."""
    A = np.array([[-1.0, 1.0], [0.0, -1.0]])
    B = np.array([[1.0, -1.0], [0.0, 1.0]])
    return StateSpace(A, B, np.eye(2), np.zeros((2, 2)))

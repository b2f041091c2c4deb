# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# ## The Riccati Hamiltonian is always singular
#
# For `P A0 + A0^T P + P B R^-1 B^T P + Q = 0` the Hamiltonian
# `[[A0, B R^-1 B^T], [-Q, -A0^T]]` has the explicit null vector
# `x = A^-1 B beta`, `y = -C^T beta` whenever `A` is invertible.  Hence the
# stabilizing solution is never strict and origin eigenvalues of
# `A0 + B R^-1 B^T P` must be tolerated.

import numpy as np

from niforge import (StateSpace, build_riccati_data, hamiltonian_of,
                     hamiltonian_singularity_check)

rng = np.random.default_rng(7)
ratios = []
for _ in range(200):
    n = int(rng.integers(1, 9))
    A = rng.normal(size=(n, n))
    B = rng.normal(size=(n, 1))
    C = rng.normal(size=(1, n))
    if (C @ B).item() < 0:
        C = -C
    h = hamiltonian_singularity_check(build_riccati_data(StateSpace(A, B, C)))
    ratios.append(h.sigma_min / h.norm)
print(f"largest sigma_min / ||H|| over 200 systems: {max(ratios):.2e}")

# The null vector for a small system:

d = build_riccati_data(StateSpace([[-1.0, 2.0], [0.0, -3.0]], [[1.0], [1.0]],
                                  [[1.0, 0.5]]))
h = hamiltonian_singularity_check(d)
print(h.null_vector, np.linalg.norm(hamiltonian_of(d) @ h.null_vector))

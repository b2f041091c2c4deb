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

# ## State feedback with a degree of stability
#
# For the plant `x' = A x + B1 w + B2 u`, `z = C1 x` the gain `u = K x` is
# built from one real Schur split and two Lyapunov equations.

import time

import numpy as np

from niforge import (UncertainPlant, close_loop, design_matrix, eigenvalues,
                     models, schur_pipeline, synthesize)

plant = models.example_plant()
eps = 2.0
print(design_matrix(plant, eps))

sd = schur_pipeline(plant, eps)
print("closed-LHP block size:", sd.stable_dim, " A22 =", sd.A22.ravel())

t0 = time.perf_counter()
res = synthesize(plant, eps, verify=True)
print(f"synthesis + verification: {1e3 * (time.perf_counter() - t0):.1f} ms")
print("T =", res.T.ravel(), " S =", res.S.ravel(), " T - S =", res.margin)
print("K =", res.K.ravel())
print("closed-loop poles:", eigenvalues(close_loop(plant, res.K).A))

rep = res.report
print("rightmost pole:", rep.rightmost, " NI samples:", rep.ni.verdict,
      f" Riccati residual {rep.are_residual:.1e}")
print("phase range:", rep.bode.phase_deg.min(), rep.bode.phase_deg.max())

# ### Sweep over eps
#
# The construction needs `T - S > 0`.  Past `eps` of about 2.5 a second
# eigenvalue of the design matrix crosses into the right half plane and the
# condition is lost on this plant.

for e in (0.0, 0.3, 1.0, 2.0, 3.0, 5.0):
    r = synthesize(plant, e)
    line = f"eps={e:<4} stable_dim={r.schur.stable_dim} margin={r.margin:+.4f}"
    if r.feasible:
        line += f" rightmost={eigenvalues(close_loop(plant, r.K).A).real.max():+.6f}"
    print(line)

# ### Reference figures
#
# The tabulated gain `K = [34.008, -15.984, 0.680]`, `T = 0.039`,
# `S = 0.019` and `Pf = 49.078` come out of a design on `A - 2I`, i.e. with
# the shift applied in the opposite direction.  The closed-loop poles listed
# next to them (`-66.1, -2.5, -2.0`) match the `A + 2I` design instead.

alt = synthesize(UncertainPlant(plant.A - 2 * np.eye(3), plant.B1, plant.B2,
                                plant.C1), 0.0)
print("T =", alt.T.ravel(), " S =", alt.S.ravel(), " Pf =", alt.Pf[-1, -1])
print("K =", alt.K.ravel())
print("poles of A + B2 K:", eigenvalues(close_loop(plant, alt.K).A))

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

# ## Certifying negative-imaginary systems
#
# A stable system is NI when `j(G(jw) - G(jw)*)` is positive semidefinite
# for every `w >= 0`.  For SISO systems that is `-2 Im G(jw) >= 0`, a phase
# between -180 and 0 degrees.

import numpy as np

from niforge import (StateSpace, models, ni_frequency_check, ni_indicator,
                     sni_frequency_check, sni_riccati_check)

# `(s + 1) / (s + 2)^2` has `Im G(jw) = -w^3 / (w^2 + 4)^2`.

g = models.double_pole_sni()
for w in (0.5, 1.0, 2.0):
    print(f"w={w}: indicator {ni_indicator(g, 1j * w):.6f}, "
          f"closed form {2 * w ** 3 / (w ** 2 + 4) ** 2:.6f}")

print("NI :", ni_frequency_check(g).verdict)
print("SNI:", sni_frequency_check(g).verdict)

# Poles on the imaginary axis are allowed when simple with a PSD residue,
# or at the origin with `lim s^2 G(s) >= 0`.

lossless = StateSpace([[0.0, 1.0], [-1.0, 0.0]], [[0.0], [1.0]], [[1.0, 0.0]])
v = ni_frequency_check(lossless)
print(v.verdict, [(p.classification, round(p.residue_min_eig, 6))
                  for p in v.pole_findings])

# The frequency test samples a grid.  The Riccati test certifies SNI with a
# matrix `P > 0` instead.

r = sni_riccati_check(g)
print(r.verdict.verdict, r.method)
print(r.P, f"residual {r.residual:.1e}")

# A positive-real system is rejected with a concrete witness.

pr = StateSpace([[-1.0]], [[1.0]], [[-1.0]], [[1.0]])
v = ni_frequency_check(pr)
print(v.verdict, v.witness)

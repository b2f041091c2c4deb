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

# ## Shifting the plant matrix
#
# Replacing `A` by `A - eps I` realizes `G(s + eps)`.  For SISO systems NI
# survives every `eps >= 0` exactly when the NI inequality holds on the
# whole orthant `sigma = eps + j w`.

import numpy as np

from niforge import (Verdict, freq_response, models, ni_frequency_check,
                     ni_indicator, orthant_ni_check, shift,
                     sni_riccati_check)

g = models.double_pole_sni()
print("orthant:", orthant_ni_check(g).verdict)
print(np.allclose(freq_response(shift(g, -0.7), 0.3j), freq_response(g, 0.7 + 0.3j)))

# The reverse direction fails.  Shifted right by 1, the system becomes
# `s / (s + 1)^2` with `Im G(jw) = w (1 - w^2) / (1 + w^2)^2`, positive at
# `w = 0.5`.

v = orthant_ni_check(g, omega_grid=[0.5], eps_grid=[-1.0], diagnostic=True)
print(v.verdict, v.witness)
print("indicator at j0.5 after the shift:", ni_indicator(shift(g, 1.0), 0.5j))

# ### MIMO
#
# Without symmetry the orthant argument breaks down: this two-input system
# is SNI, but `A - 3I` is not even NI.

m = models.nonsymmetric_mimo()
print("unshifted Riccati:", sni_riccati_check(m).verdict.verdict)
shifted = ni_frequency_check(shift(m, -3.0))
print("A - 3I:", shifted.verdict, shifted.witness)

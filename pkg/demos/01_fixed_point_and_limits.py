"""
Stieltjes fixed point and large-system limits
=============================================

The secrecy rate of SRZF in the large-system limit depends on the
channel only through x = G_T(-lambda), the Stieltjes transform of
T = H^H H + theta G^H G evaluated at -lambda. Here we solve for it,
compare with the normalized resolvent trace of a sampled channel, and
assemble the limiting SINR, eavesdropper SNR and secrecy rate.
"""

import numpy as np

from srzf import (AsymptoticInputs, SystemDims, asymptotic_rate, empirical_stieltjes,
                  sample_channel, solve_fixed_point)

# %%
# With theta = 1 both user populations look alike and the fixed point
# reduces to a quadratic, which gives a closed form to compare against.
inp = AsymptoticInputs(alpha_l=0.5, alpha_o=0.25, theta=1.0, lam=1.0, mu_l=1.0, mu_o=1.0)
x = solve_fixed_point(inp)
print(f"bisection x = {x:.15f}")
print(f"closed form = {(-0.75 + np.sqrt(0.75 ** 2 + 4)) / 2:.15f}")

# %%
# A finite system concentrates around the same value.
for M in (64, 128, 256, 512):
    ch = sample_channel(SystemDims.from_loads(M, 0.5, 0.25), M)
    print(f"M={M:4d}  tr(Q^-1)/M = {empirical_stieltjes(ch.H, ch.G, 1.0, 1.0):.5f}")

# %%
# The limits at lambda = theta = 1, 0 dB at every receiver.
point = asymptotic_rate(inp)
print(point)

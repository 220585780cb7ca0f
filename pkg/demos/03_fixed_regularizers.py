"""
Secrecy rate vs. overhearing load at fixed regularizers
=======================================================

With lambda = theta = 1 for SRZF and zeta = 1 for RZF, compare the
large-system limit with M = 128 simulations as the number of
eavesdroppers per antenna grows. Both user densities are shown at
0 dB receive SNR everywhere.
"""

from srzf.harness import FixedParams, SweepSpec, run_sweep, summarize

for alpha_l in (0.5, 0.0625):
    # J = alpha_o * 128 must be an integer
    loads = [j / 128 for j in range(0, 129, 16)]
    spec = SweepSpec("alpha_o", loads, M=128, alpha_l=alpha_l, trials=50,
                     optimized=False, fixed_params=FixedParams(lam=1.0, theta=1.0, zeta=1.0))
    print(f"\nalpha_l = {alpha_l}")
    print(summarize(run_sweep(spec)))

"""
Robustness against the eavesdropper SNR
=======================================

Sweep the eavesdroppers' receive SNR from -8 to 8 dB with the
regularizers re-tuned at every point, for a dense (alpha_l = 0.5) and a
sparse (alpha_l = 0.0625) user population with alpha_o = alpha_l / 2.
The RZF rate collapses as the eavesdroppers improve; SRZF barely moves.

Set TRIALS > 0 to add M = 128 Monte Carlo points (about 20 s per family
at 500 trials).
"""

from srzf.harness import SweepSpec, run_sweep, summarize

TRIALS = 0

for alpha_l in (0.5, 0.0625):
    spec = SweepSpec("mu_o_db", range(-8, 9), M=128, alpha_l=alpha_l, alpha_o=alpha_l / 2,
                     trials=TRIALS, optimized=True)
    rows = run_sweep(spec, f"robustness_alpha_l_{alpha_l}.csv")
    print(f"\nalpha_l = {alpha_l}")
    print(summarize(rows))

# %%
# Optional plot of the two dashed curves per family.
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    from srzf.harness import read_csv

    fig, ax = plt.subplots()
    for alpha_l in (0.5, 0.0625):
        rows = read_csv(f"robustness_alpha_l_{alpha_l}.csv")
        for scheme, style in (("SRZF", "-"), ("RZF", "--")):
            sel = [r for r in rows if r.scheme == scheme]
            ax.plot([r.sweep_value for r in sel], [r.rate_asymptotic for r in sel], style,
                    label=f"{scheme}, alpha_l={alpha_l}")
    ax.set_xlabel("mu_o [dB]")
    ax.set_ylabel("optimized average secrecy rate [bits]")
    ax.legend()
    fig.savefig("robustness.png", dpi=120)

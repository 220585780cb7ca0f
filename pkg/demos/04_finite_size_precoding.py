"""
Building the precoders by hand
==============================

Sample one channel, build RZF and SRZF precoders, and look at what the
leakage weight theta buys: less power reaching the eavesdroppers at a
small cost in SINR.
"""

import numpy as np

from srzf import (RzfParams, SrzfParams, SystemDims, build_precoder, leakage, per_user_esnr,
                  per_user_sinr, sample_channel, secrecy_rates)

dims = SystemDims(M=64, K=32, J=16)
ch = sample_channel(dims, 7)

for label, params in [("RZF  zeta=0.5", RzfParams(0.5)),
                      ("SRZF theta=1", SrzfParams(0.5, 1.0)),
                      ("SRZF theta=10", SrzfParams(0.5, 10.0))]:
    pre = build_precoder(ch.H, ch.G, params, P=1.0)
    sinr = per_user_sinr(ch.H, pre.W, 1.0)
    esnr = per_user_esnr(ch.G, pre.W, 1.0)
    rate = secrecy_rates(sinr, esnr).rate
    print(f"{label:14s} leakage={leakage(ch.G, pre.W):7.3f} "
          f"mean SINR={sinr.mean():.3f} mean ESNR={esnr.mean():.3f} rate={rate.mean():.4f}")

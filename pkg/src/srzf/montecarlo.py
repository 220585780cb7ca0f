"""Monte Carlo estimation of the average ergodic secrecy rate.

Each trial draws a fresh channel from a sub-stream keyed by the trial
index, builds the precoder and records the user-averaged secrecy rate.
Per-trial results are stored by index and reduced in index order, so the
estimate is bit-identical for any number of worker threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import NoiseProfile, SeedLike, SystemDims, child_stream, sample_channel
from .exceptions import InputError
from .metrics import average_rate, per_user_esnr, per_user_sinr, secrecy_rates
from .precoding import RzfParams, Scheme, SrzfParams, build_precoder

__all__ = ["SchemeSpec", "MonteCarloEstimate", "trial_rate", "estimate_ergodic_rate"]


@dataclass(frozen=True)
class SchemeSpec:
    scheme: Scheme
    params: SrzfParams | RzfParams

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        expected = SrzfParams if self.scheme is Scheme.SRZF else RzfParams
        if not isinstance(self.params, expected):
            raise InputError(
                f"{self.scheme.value} needs {expected.__name__}, got {type(self.params).__name__}")

    @classmethod
    def srzf(cls, lam: float, theta: float) -> "SchemeSpec":
        return cls(Scheme.SRZF, SrzfParams(lam, theta))

    @classmethod
    def rzf(cls, zeta: float) -> "SchemeSpec":
        return cls(Scheme.RZF, RzfParams(zeta))


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean of the per-trial average rate.

    ``max_power_error`` is the largest relative deviation of
    ``trace(W W^H)`` from ``M P`` over all trials.
    """

    mean: float
    stderr: float
    trials: int
    samples: np.ndarray
    max_power_error: float = 0.0


def trial_rate(dims: SystemDims, noise: NoiseProfile, spec: SchemeSpec, stream: SeedLike):
    """Average secrecy rate of one channel draw.

    Returns ``(rate, power_error)``.
    """
    ch = sample_channel(dims, stream)
    if noise.P == 0:
        return 0.0, 0.0
    pre = build_precoder(ch.H, ch.G, spec.params, noise.P)
    sinr = per_user_sinr(ch.H, pre.W, noise.sigma2)
    esnr = per_user_esnr(ch.G, pre.W, noise.rho2)
    return average_rate(secrecy_rates(sinr, esnr).rate), pre.power_error()


def estimate_ergodic_rate(dims: SystemDims, noise: NoiseProfile, spec: SchemeSpec,
                          trials: int = 500, master_seed: int = 0,
                          workers: int | None = None) -> MonteCarloEstimate:
    """Estimate the average ergodic secrecy rate over ``trials`` channel draws.

    Parameters
    ----------
    dims, noise, spec
        System size, noise levels and precoder.
    trials : int
        Number of independent channel realizations.
    master_seed : int
        Trial ``t`` uses the sub-stream ``(master_seed, t)``.
    workers : int, optional
        Thread count; ``None`` or 1 runs serially. Does not affect the result.
    """
    if trials < 1:
        raise InputError("trials must be at least 1")

    def run(t):
        return trial_rate(dims, noise, spec, child_stream(master_seed, "trial", t))

    if workers is None or workers <= 1:
        results = [run(t) for t in range(trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(trials)))

    samples = np.array([r for r, _ in results])
    power_err = max(e for _, e in results)
    mean = float(np.mean(samples))
    stderr = float(np.std(samples, ddof=1) / np.sqrt(trials)) if trials > 1 else 0.0
    return MonteCarloEstimate(mean, stderr, trials, samples, power_err)

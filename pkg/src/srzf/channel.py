"""System dimensions, noise levels and i.i.d. Gaussian channel sampling.

Channels follow the large-system normalization: every entry of the
legitimate matrix ``H`` (K x M) and of the eavesdropper matrix ``G``
(J x M) is circularly symmetric complex Gaussian with variance ``1/M``,
so each row has unit expected energy.

Randomness is driven by :class:`numpy.random.SeedSequence`. ``H`` and
``G`` come from distinct named children of the seed, which keeps ``H``
unchanged when only the number of eavesdroppers changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .exceptions import InputError, ParameterError

__all__ = [
    "SystemDims",
    "NoiseProfile",
    "ChannelRealization",
    "as_seed_sequence",
    "child_stream",
    "gaussian_complex_matrix",
    "sample_channel",
]

SeedLike = Union[int, np.random.SeedSequence]

# spawn-key tags for the named sub-streams
_STREAM_TAGS = {"H": 0, "G": 1, "trial": 2}


@dataclass(frozen=True)
class SystemDims:
    """Antenna, user and eavesdropper counts."""

    M: int
    K: int
    J: int = 0

    def __post_init__(self):
        for name in ("M", "K", "J"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise InputError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.M < 1 or self.K < 1 or self.J < 0:
            raise InputError(f"invalid dimensions M={self.M}, K={self.K}, J={self.J}")

    @property
    def alpha_l(self) -> float:
        """Legitimate channel load K/M."""
        return self.K / self.M

    @property
    def alpha_o(self) -> float:
        """Overhearing channel load J/M."""
        return self.J / self.M

    @classmethod
    def from_loads(cls, M: int, alpha_l: float, alpha_o: float) -> "SystemDims":
        """Build dimensions from loads, refusing to round non-integral counts."""
        K = _integral_count(M * alpha_l, "K", alpha_l, M)
        J = _integral_count(M * alpha_o, "J", alpha_o, M)
        return cls(M, K, J)


def _integral_count(value, name, load, M, tol=1e-9):
    nearest = round(value)
    if abs(value - nearest) > tol * max(1.0, abs(value)):
        raise InputError(
            f"{name} = {load!r} * {M} = {value!r} is not an integer")
    return int(nearest)


@dataclass(frozen=True)
class NoiseProfile:
    """Noise variances and transmit power budget.

    Attributes
    ----------
    sigma2 : float
        Noise variance at the legitimate receivers.
    rho2 : float
        Noise variance at the eavesdroppers.
    P : float
        Transmit power budget (per antenna).
    """

    sigma2: float = 1.0
    rho2: float = 1.0
    P: float = 1.0

    def __post_init__(self):
        if not self.sigma2 > 0 or not self.rho2 > 0:
            raise ParameterError("noise variances must be positive")
        if not self.P >= 0:
            raise ParameterError("power budget must be non-negative")

    @property
    def mu_l(self) -> float:
        """Receive SNR at the legitimate terminals."""
        return self.P / self.sigma2

    @property
    def mu_o(self) -> float:
        """Receive SNR at the eavesdroppers."""
        return self.P / self.rho2

    @classmethod
    def from_snr_db(cls, mu_l_db: float, mu_o_db: float, P: float = 1.0) -> "NoiseProfile":
        """Noise profile realizing the given receive SNRs (in dB) at power ``P``."""
        mu_l = 10.0 ** (mu_l_db / 10.0)
        mu_o = 10.0 ** (mu_o_db / 10.0)
        return cls(sigma2=P / mu_l if P > 0 else 1.0 / mu_l,
                   rho2=P / mu_o if P > 0 else 1.0 / mu_o, P=P)


@dataclass(frozen=True)
class ChannelRealization:
    """One draw of the downlink matrix ``H`` (K x M) and eavesdropper matrix ``G`` (J x M)."""

    H: np.ndarray
    G: np.ndarray

    @property
    def dims(self) -> SystemDims:
        return SystemDims(self.H.shape[1], self.H.shape[0], self.G.shape[0])


def as_seed_sequence(seed: SeedLike) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed))


def child_stream(seed: SeedLike, name: str, index: int = 0) -> np.random.SeedSequence:
    """Deterministic named sub-stream of ``seed``.

    The child depends only on the parent entropy, the parent spawn key,
    ``name`` and ``index``, never on how many children were drawn before.
    """
    parent = as_seed_sequence(seed)
    key = tuple(parent.spawn_key) + (_STREAM_TAGS[name], int(index))
    return np.random.SeedSequence(parent.entropy, spawn_key=key)


def gaussian_complex_matrix(rows: int, cols: int, variance: float, stream: SeedLike) -> np.ndarray:
    """Matrix of i.i.d. CN(0, ``variance``) entries.

    Real and imaginary parts are independent N(0, variance/2).
    """
    if rows < 0 or cols < 0:
        raise InputError("matrix dimensions must be non-negative")
    if not variance > 0:
        raise ParameterError("variance must be positive")
    rng = np.random.default_rng(as_seed_sequence(stream))
    parts = rng.standard_normal((2, rows, cols))
    return np.sqrt(variance / 2.0) * (parts[0] + 1j * parts[1])


def sample_channel(dims: SystemDims, stream: SeedLike) -> ChannelRealization:
    """Draw ``H`` and ``G`` with entry variance ``1/M`` from separate sub-streams."""
    var = 1.0 / dims.M
    H = gaussian_complex_matrix(dims.K, dims.M, var, child_stream(stream, "H"))
    G = gaussian_complex_matrix(dims.J, dims.M, var, child_stream(stream, "G"))
    return ChannelRealization(H, G)

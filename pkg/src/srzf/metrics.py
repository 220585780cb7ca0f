"""Finite-size SINR, eavesdropper SNR and achievable secrecy rates.

Rates are in bits (base-2 logarithm) and clipped at zero per user.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InputError, ParameterError

__all__ = [
    "RatePoint",
    "per_user_sinr",
    "per_user_esnr",
    "secrecy_rates",
    "average_rate",
]


@dataclass(frozen=True)
class RatePoint:
    sinr: np.ndarray
    esnr: np.ndarray
    rate: np.ndarray


def per_user_sinr(H, W, sigma2: float) -> np.ndarray:
    """SINR of every legitimate user.

    Parameters
    ----------
    H : (K, M) complex array
        Downlink channel, row ``k`` is ``h_k^T``.
    W : (M, K) complex array
        Precoding matrix, column ``k`` is the beamformer of user ``k``.
    sigma2 : float
        Receiver noise variance.

    Returns
    -------
    (K,) float array with ``|h_k^T w_k|^2 / (sigma2 + sum_{j != k} |h_k^T w_j|^2)``.
    """
    if not sigma2 > 0:
        raise ParameterError("sigma2 must be positive")
    H = np.asarray(H)
    W = np.asarray(W)
    if H.shape[1] != W.shape[0] or H.shape[0] != W.shape[1]:
        raise InputError(f"H {H.shape} and W {W.shape} are not conformable")
    gains = np.abs(H @ W) ** 2
    signal = np.diagonal(gains).copy()
    interference = gains.sum(axis=1) - signal
    # guard against tiny negative round-off in the subtraction
    interference = np.maximum(interference, 0.0)
    return signal / (sigma2 + interference)


def per_user_esnr(G, W, rho2) -> np.ndarray:
    """Aggregate SNR of each stream at cooperating eavesdroppers.

    ``rho2`` may be a scalar or a length-J vector of per-eavesdropper noise
    variances. Returns zeros when there are no eavesdroppers.
    """
    rho2 = np.asarray(rho2, dtype=float)
    if np.any(~(rho2 > 0)):
        raise ParameterError("rho2 must be positive")
    W = np.asarray(W)
    G = np.asarray(G)
    if G.size == 0:
        return np.zeros(W.shape[1])
    received = np.abs(G @ W) ** 2
    if rho2.ndim == 0:
        return received.sum(axis=0) / rho2
    return (received / rho2[:, None]).sum(axis=0)


def secrecy_rates(sinr, esnr) -> RatePoint:
    """Per-user rates ``max(0, log2((1 + sinr) / (1 + esnr)))``."""
    sinr = np.asarray(sinr, dtype=float)
    esnr = np.asarray(esnr, dtype=float)
    if sinr.shape != esnr.shape:
        raise InputError(f"length mismatch: {sinr.shape} vs {esnr.shape}")
    rate = np.maximum(0.0, np.log2(1.0 + sinr) - np.log2(1.0 + esnr))
    return RatePoint(sinr=sinr, esnr=esnr, rate=rate)


def average_rate(rates) -> float:
    rates = np.asarray(rates, dtype=float)
    if rates.size == 0:
        raise InputError("cannot average an empty rate vector")
    return float(np.mean(rates))

"""RZF and secure RZF (SRZF) linear precoders.

Shaping matrices are returned unnormalized (M x K, one beamformer per
column); :func:`normalize_power` scales them to meet the total power
budget ``trace(W W^H) = M P`` with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import linalg

from .exceptions import DegeneratePrecoderError, InputError, ParameterError

__all__ = [
    "Scheme",
    "RzfParams",
    "SrzfParams",
    "PrecoderOutput",
    "regularized_gram",
    "srzf_shaping_matrix",
    "rzf_shaping_matrix",
    "normalize_power",
    "leakage",
    "build_precoder",
]


class Scheme(str, Enum):
    RZF = "RZF"
    SRZF = "SRZF"


@dataclass(frozen=True)
class SrzfParams:
    """Regularizer ``lam`` and leakage weight ``theta`` of the SRZF precoder."""

    lam: float
    theta: float = 0.0

    def __post_init__(self):
        if not self.lam > 0:
            raise ParameterError(f"lambda must be positive, got {self.lam!r}")
        if not self.theta >= 0:
            raise ParameterError(f"theta must be non-negative, got {self.theta!r}")


@dataclass(frozen=True)
class RzfParams:
    """Regularizer ``zeta`` of the RZF precoder."""

    zeta: float

    def __post_init__(self):
        if not self.zeta > 0:
            raise ParameterError(f"zeta must be positive, got {self.zeta!r}")


@dataclass(frozen=True)
class PrecoderOutput:
    W: np.ndarray
    beta: float
    P: float
    A: np.ndarray

    def power_error(self) -> float:
        """Relative deviation of ``trace(W W^H)`` from ``M P``."""
        M = self.W.shape[0]
        total = float(np.sum(np.abs(self.W) ** 2))
        if self.P == 0:
            return total
        return abs(total - M * self.P) / (M * self.P)


def _check_channels(H, G=None):
    H = np.atleast_2d(np.asarray(H))
    if H.ndim != 2 or H.size == 0:
        raise InputError("H must be a non-empty 2-D matrix")
    if G is None:
        return H, None
    G = np.asarray(G)
    if G.size == 0:
        G = G.reshape(0, H.shape[1])
    G = np.atleast_2d(G)
    if G.shape[1] != H.shape[1]:
        raise InputError(
            f"H has {H.shape[1]} columns but G has {G.shape[1]}")
    return H, G


def regularized_gram(H, G, lam: float, theta: float) -> np.ndarray:
    """``Q = H^H H + theta G^H G + lam I``."""
    H, G = _check_channels(H, G)
    M = H.shape[1]
    Q = H.conj().T @ H + lam * np.eye(M)
    if G.shape[0] and theta:
        Q += theta * (G.conj().T @ G)
    return Q


def srzf_shaping_matrix(H, G, params: SrzfParams) -> np.ndarray:
    """``(H^H H + theta G^H G + lam I)^{-1} H^H`` via a Cholesky solve."""
    H, G = _check_channels(H, G)
    Q = regularized_gram(H, G, params.lam, params.theta)
    return linalg.cho_solve(linalg.cho_factor(Q, lower=True), H.conj().T)


def rzf_shaping_matrix(H, params: RzfParams) -> np.ndarray:
    """``H^H (H H^H + zeta I)^{-1}``, the regularized channel inverse."""
    H, _ = _check_channels(H)
    K = H.shape[0]
    gram = H @ H.conj().T + params.zeta * np.eye(K)
    # A = H^H gram^{-1}; gram is Hermitian so solve gram X = H and take X^H
    X = linalg.cho_solve(linalg.cho_factor(gram, lower=True), H)
    return X.conj().T


def normalize_power(A, P: float, M: int | None = None) -> PrecoderOutput:
    """Scale ``A`` so that ``trace(W W^H) = M P``.

    ``beta = trace(A A^H) / M`` and ``W = sqrt(P / beta) A``.
    """
    A = np.asarray(A)
    if M is None:
        M = A.shape[0]
    if not P >= 0:
        raise ParameterError("power budget must be non-negative")
    beta = float(np.sum(np.abs(A) ** 2)) / M
    if beta == 0.0:
        raise DegeneratePrecoderError("shaping matrix is identically zero")
    W = np.sqrt(P / beta) * A
    return PrecoderOutput(W=W, beta=beta, P=P, A=A)


def leakage(G, W) -> float:
    """Leakage penalty ``||G W||_F^2`` summed over all eavesdropper/stream pairs."""
    G = np.asarray(G)
    W = np.asarray(W)
    if G.size == 0:
        return 0.0
    return float(np.sum(np.abs(G @ W) ** 2))


def build_precoder(H, G, params: SrzfParams | RzfParams, P: float) -> PrecoderOutput:
    """Shaping matrix for ``params`` followed by power normalization."""
    if isinstance(params, SrzfParams):
        A = srzf_shaping_matrix(H, G, params)
    elif isinstance(params, RzfParams):
        A = rzf_shaping_matrix(H, params)
    else:
        raise InputError(f"unknown precoder parameters {params!r}")
    return normalize_power(A, P, A.shape[0])

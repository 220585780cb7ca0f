"""Large-system limits of the SRZF secrecy rate.

With ``T = H^H H + theta G^H G`` the limits depend on the channel only
through ``x = G_T(-lam)``, the Stieltjes transform of the limiting
spectrum of ``T`` at ``-lam``, and its derivative. ``x`` is the unique
positive root of

    x * (lam + alpha_l / (1 + x) + theta * alpha_o / (1 + theta * x)) = 1,

which always lies in ``(0, 1/lam]``. The left-hand side is strictly
increasing in ``x``, so plain bisection is used.

The scalar functions below are the public API. ``_fixed_point`` and
``_rate_grid`` broadcast over numpy arrays for the tuner.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .exceptions import InputError, ParameterError

__all__ = [
    "AsymptoticInputs",
    "AsymptoticPoint",
    "fixed_point_residual",
    "solve_fixed_point",
    "stieltjes_derivative",
    "asymptotic_sinr",
    "asymptotic_esnr",
    "asymptotic_rate",
    "empirical_stieltjes",
]

# floor of the bisection bracket; g(0+) = -1 so any tiny positive value works
_BRACKET_FLOOR = 1e-300
_MAX_BISECTIONS = 2200


@dataclass(frozen=True)
class AsymptoticInputs:
    alpha_l: float
    alpha_o: float = 0.0
    theta: float = 0.0
    lam: float = 1.0
    mu_l: float = 1.0
    mu_o: float = 1.0

    def __post_init__(self):
        if not self.lam > 0:
            raise ParameterError(f"lambda must be positive, got {self.lam!r}")
        for name in ("alpha_l", "alpha_o", "theta", "mu_l", "mu_o"):
            if not getattr(self, name) >= 0:
                raise ParameterError(f"{name} must be non-negative")

    def with_params(self, lam: float, theta: float) -> "AsymptoticInputs":
        return replace(self, lam=lam, theta=theta)


@dataclass(frozen=True)
class AsymptoticPoint:
    """Solved fixed point and the limits derived from it.

    ``x`` is ``G_T(-lam)``, ``g_prime`` is ``G_T'(-lam)``; ``rate`` is the
    limiting average ergodic secrecy rate in bits.
    """

    x: float
    g_prime: float
    sinr_asy: float
    esnr_asy: float
    rate: float


def _residual(x, alpha_l, alpha_o, theta, lam):
    return x * (lam + alpha_l / (1.0 + x) + theta * alpha_o / (1.0 + theta * x)) - 1.0


def fixed_point_residual(x: float, inp: AsymptoticInputs) -> float:
    """``g(x)``; zero exactly at ``x = G_T(-lam)``."""
    return float(_residual(x, inp.alpha_l, inp.alpha_o, inp.theta, inp.lam))


def _fixed_point(alpha_l, alpha_o, theta, lam):
    """Vectorized bisection on ``(0, 1/lam]`` down to adjacent doubles."""
    alpha_l, alpha_o, theta, lam = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha_l, alpha_o, theta, lam)))
    lo = np.full(lam.shape, _BRACKET_FLOOR)
    hi = 1.0 / lam
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        active = (mid > lo) & (mid < hi)
        if not active.any():
            break
        positive = _residual(mid, alpha_l, alpha_o, theta, lam) >= 0.0
        hi = np.where(active & positive, mid, hi)
        lo = np.where(active & ~positive, mid, lo)
    r_lo = np.abs(_residual(lo, alpha_l, alpha_o, theta, lam))
    r_hi = np.abs(_residual(hi, alpha_l, alpha_o, theta, lam))
    return np.where(r_lo < r_hi, lo, hi)


def solve_fixed_point(inp: AsymptoticInputs) -> float:
    """``G_T(-lam)`` as the unique root of the fixed-point equation."""
    a_l, a_o, th, lam = (float(v) for v in (inp.alpha_l, inp.alpha_o, inp.theta, inp.lam))
    # same bisection as _fixed_point on plain floats; numpy scalars are ~10x slower
    lo, hi = _BRACKET_FLOOR, 1.0 / lam
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if _residual(mid, a_l, a_o, th, lam) >= 0.0:
            hi = mid
        else:
            lo = mid
    r_lo = abs(_residual(lo, a_l, a_o, th, lam))
    r_hi = abs(_residual(hi, a_l, a_o, th, lam))
    return lo if r_lo < r_hi else hi


def _derivative(x, alpha_l, alpha_o, theta, lam):
    return x / (lam + alpha_l / (1.0 + x) ** 2 + theta * alpha_o / (1.0 + theta * x) ** 2)


def stieltjes_derivative(x: float, inp: AsymptoticInputs) -> float:
    """``G_T'(-lam)`` given the solved ``x``."""
    return float(_derivative(x, inp.alpha_l, inp.alpha_o, inp.theta, inp.lam))


def _sinr(x, g_prime, alpha_l, mu_l):
    s = (1.0 + x) ** 2
    return mu_l * x * x * s / (alpha_l * g_prime * (mu_l + s))


def _esnr(x, alpha_l, alpha_o, theta, mu_o):
    return mu_o * alpha_o / (alpha_l * (1.0 + theta * x) ** 2)


def _require_users(inp):
    if not inp.alpha_l > 0:
        raise InputError("large-system limits need alpha_l > 0")


def asymptotic_sinr(x: float, g_prime: float, inp: AsymptoticInputs) -> float:
    _require_users(inp)
    return float(_sinr(x, g_prime, inp.alpha_l, inp.mu_l))


def asymptotic_esnr(x: float, inp: AsymptoticInputs) -> float:
    _require_users(inp)
    return float(_esnr(x, inp.alpha_l, inp.alpha_o, inp.theta, inp.mu_o))


def _clipped_rate(sinr, esnr):
    return np.maximum(0.0, np.log2(1.0 + sinr) - np.log2(1.0 + esnr))


def asymptotic_rate(inp: AsymptoticInputs) -> AsymptoticPoint:
    """Limit of the average ergodic secrecy rate at ``(lam, theta)``."""
    _require_users(inp)
    x = solve_fixed_point(inp)
    g_prime = stieltjes_derivative(x, inp)
    sinr = asymptotic_sinr(x, g_prime, inp)
    esnr = asymptotic_esnr(x, inp)
    return AsymptoticPoint(x=x, g_prime=g_prime, sinr_asy=sinr, esnr_asy=esnr,
                           rate=float(_clipped_rate(sinr, esnr)))


def _rate_grid(alpha_l, alpha_o, mu_l, mu_o, lam, theta):
    """Asymptotic rate broadcast over arrays of ``lam`` and ``theta``."""
    x = _fixed_point(alpha_l, alpha_o, theta, lam)
    g_prime = _derivative(x, alpha_l, alpha_o, theta, lam)
    return _clipped_rate(_sinr(x, g_prime, alpha_l, mu_l),
                         _esnr(x, alpha_l, alpha_o, theta, mu_o))


def empirical_stieltjes(H, G, theta: float, lam: float, M: int | None = None) -> float:
    """Finite-size counterpart ``trace((H^H H + theta G^H G + lam I)^{-1}) / M``.

    ``M`` is only needed when both ``H`` and ``G`` have zero rows and no
    column count can be read from them.
    """
    if not lam > 0:
        raise ParameterError("lambda must be positive")
    H = np.asarray(H)
    G = np.asarray(G)
    if M is None:
        M = H.shape[1] if H.ndim == 2 else G.shape[1]
    T = np.zeros((M, M), dtype=complex)
    if H.size:
        T += H.conj().T @ H
    if G.size and theta:
        T += theta * (G.conj().T @ G)
    eig = np.linalg.eigvalsh(T + lam * np.eye(M))
    return float(np.mean(1.0 / eig))

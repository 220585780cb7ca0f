"""Regularizer tuning by maximizing the asymptotic secrecy rate.

SRZF is tuned over ``(lam, theta)`` with a log-spaced grid followed by
shrinking-grid refinement around the incumbent. RZF is tuned over
``zeta`` with a log grid followed by golden-section search. The clipped
objective is flat at zero over large regions, so no gradients are used.

Ties are broken towards the smallest ``lam`` and then the smallest
``theta``, which makes the result independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import AsymptoticInputs, _rate_grid, asymptotic_rate
from .exceptions import InputError, ParameterError
from .precoding import Scheme

__all__ = ["GridConfig", "TunedParams", "tune_srzf", "tune_rzf", "tune"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GridConfig:
    lambda_range: tuple[float, float] = (1e-3, 1e3)
    theta_range: tuple[float, float] = (1e-3, 1e3)
    points_per_axis: int = 61
    refine_iterations: int = 3
    shrink: float = 10.0
    golden_tol: float = 1e-10

    def __post_init__(self):
        lo, hi = self.lambda_range
        if not (0 < lo < hi):
            raise ParameterError(f"invalid lambda range {self.lambda_range}")
        lo, hi = self.theta_range
        if not (0 < lo < hi):
            raise ParameterError(f"invalid theta range {self.theta_range}")
        if self.points_per_axis < 2:
            raise ParameterError("points_per_axis must be at least 2")
        if self.refine_iterations < 0:
            raise ParameterError("refine_iterations must be non-negative")
        if not self.shrink > 1:
            raise ParameterError("shrink factor must exceed 1")


@dataclass(frozen=True)
class TunedParams:
    """Optimizer result. For RZF ``lambda_star`` holds the regularizer zeta
    and ``theta_star`` is zero."""

    scheme: Scheme
    lambda_star: float
    theta_star: float
    rate_star: float
    grid_evals: int
    plateau: bool = False
    history: tuple[float, ...] = ()


def _check(inp: AsymptoticInputs):
    if not inp.alpha_l > 0:
        raise InputError("tuning needs alpha_l > 0")


def _argmax_first(values: np.ndarray):
    """Index of the maximum, first in C order (smallest lam, then theta)."""
    return np.unravel_index(int(np.argmax(values)), values.shape)


def _theta_axis(log_lo, log_hi, n, with_zero):
    axis = np.logspace(log_lo, log_hi, n)
    return np.concatenate(([0.0], axis)) if with_zero else axis


def tune_srzf(inp: AsymptoticInputs, grid: GridConfig = GridConfig()) -> TunedParams:
    """Maximize the asymptotic SRZF rate over ``(lam, theta)``.

    The ``lam`` and ``theta`` fields of ``inp`` are ignored. The exact
    point ``theta = 0`` is always a candidate, so the result is never
    worse than RZF on the same grid.
    """
    _check(inp)
    a = (inp.alpha_l, inp.alpha_o, inp.mu_l, inp.mu_o)

    log_lam = np.log10(grid.lambda_range)
    log_th = np.log10(grid.theta_range)
    n = grid.points_per_axis
    lams = np.logspace(log_lam[0], log_lam[1], n)
    thetas = _theta_axis(log_th[0], log_th[1], n, True)
    rates = _rate_grid(*a, lams[:, None], thetas[None, :])
    evals = rates.size

    if not np.any(rates > 0):
        result = asymptotic_rate(inp.with_params(lams[0], thetas[0]))
        return TunedParams(Scheme.SRZF, float(lams[0]), float(thetas[0]),
                           result.rate, evals, plateau=True, history=(result.rate,))

    i, j = _argmax_first(rates)
    best = (float(rates[i, j]), float(lams[i]), float(thetas[j]))
    history = [best[0]]
    step_lam = (log_lam[1] - log_lam[0]) / (n - 1)
    step_th = (log_th[1] - log_th[0]) / (n - 1)
    half = int(round(grid.shrink))

    for _ in range(grid.refine_iterations):
        _, lam_b, th_b = best
        c_lam = math.log10(lam_b)
        lams = np.logspace(c_lam - step_lam, c_lam + step_lam, 2 * half + 1)
        if th_b > 0:
            c_th = math.log10(th_b)
            thetas = _theta_axis(c_th - step_th, c_th + step_th, 2 * half + 1,
                                 with_zero=True)
        else:
            # incumbent is RZF; probe the smallest positive weights too
            thetas = _theta_axis(log_th[0] - step_th, log_th[0] + step_th,
                                 2 * half + 1, with_zero=True)
        rates = _rate_grid(*a, lams[:, None], thetas[None, :])
        evals += rates.size
        i, j = _argmax_first(rates)
        if rates[i, j] > best[0]:
            best = (float(rates[i, j]), float(lams[i]), float(thetas[j]))
        history.append(best[0])
        step_lam /= grid.shrink
        step_th /= grid.shrink

    _, lam_s, th_s = best
    # re-evaluate through the scalar path so rate_star matches asymptotic_rate exactly
    rate_s = asymptotic_rate(inp.with_params(lam_s, th_s)).rate
    return TunedParams(Scheme.SRZF, lam_s, th_s, rate_s, evals, history=tuple(history))


def _golden_max(f, lo, hi, tol):
    """Golden-section maximization of ``f`` on ``[lo, hi]``."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    evals = 2
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
        evals += 1
    if fc >= fd:
        return c, fc, evals
    return d, fd, evals


def tune_rzf(inp: AsymptoticInputs, grid: GridConfig = GridConfig()) -> TunedParams:
    """Maximize the asymptotic RZF rate over the regularizer ``zeta``."""
    _check(inp)
    a = (inp.alpha_l, inp.alpha_o, inp.mu_l, inp.mu_o)
    log_lam = np.log10(grid.lambda_range)
    n = grid.points_per_axis
    zetas = np.logspace(log_lam[0], log_lam[1], n)
    rates = _rate_grid(*a, zetas, 0.0)
    evals = rates.size

    if not np.any(rates > 0):
        result = asymptotic_rate(inp.with_params(zetas[0], 0.0))
        return TunedParams(Scheme.RZF, float(zetas[0]), 0.0, result.rate, evals,
                           plateau=True, history=(result.rate,))

    (i,) = _argmax_first(rates)
    best_rate, best_zeta = float(rates[i]), float(zetas[i])
    history = [best_rate]
    if grid.refine_iterations > 0:
        step = (log_lam[1] - log_lam[0]) / (n - 1)
        c = math.log10(best_zeta)

        def objective(log_zeta):
            return float(_rate_grid(*a, 10.0 ** log_zeta, 0.0))

        log_z, rate, extra = _golden_max(objective, c - step, c + step, grid.golden_tol)
        evals += extra
        if rate > best_rate:
            best_rate, best_zeta = rate, 10.0 ** log_z
        history.append(best_rate)

    rate_s = asymptotic_rate(inp.with_params(best_zeta, 0.0)).rate
    return TunedParams(Scheme.RZF, best_zeta, 0.0, rate_s, evals, history=tuple(history))


def tune(scheme: Scheme | str, inp: AsymptoticInputs, grid: GridConfig = GridConfig()) -> TunedParams:
    scheme = Scheme(scheme)
    if scheme is Scheme.SRZF:
        return tune_srzf(inp, grid)
    return tune_rzf(inp, grid)

"""Single points and sweeps pairing asymptotic and simulated rates.

Rows are written as CSV with a fixed header. Floats are formatted with
``repr`` (shortest round-trip), so reading a file back reproduces the
in-memory rows exactly.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .asymptotics import AsymptoticInputs, asymptotic_rate
from .channel import NoiseProfile, SystemDims
from .exceptions import InputError, SRZFError
from .montecarlo import SchemeSpec, estimate_ergodic_rate
from .precoding import Scheme
from .tuning import GridConfig, tune

__all__ = [
    "CSV_HEADER",
    "SweepVariable",
    "FixedParams",
    "SweepSpec",
    "ResultRow",
    "PointError",
    "db_to_linear",
    "run_point",
    "run_sweep",
    "write_csv",
    "read_csv",
    "summarize",
]

CSV_HEADER = ("sweep_variable", "sweep_value", "scheme", "lambda", "theta",
              "rate_asymptotic", "rate_simulated", "stderr", "trials", "seed")


class SweepVariable(str, Enum):
    ALPHA_O = "alpha_o"
    MU_O_DB = "mu_o_db"


class PointError(SRZFError):
    """A sweep point failed; ``value`` names it."""

    def __init__(self, value, cause):
        super().__init__(f"sweep point {value!r} failed: {cause}")
        self.value = value
        self.cause = cause


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


@dataclass(frozen=True)
class FixedParams:
    """Regularizers used when tuning is off."""

    lam: float = 1.0
    theta: float = 1.0
    zeta: float = 1.0

    def spec(self, scheme: Scheme) -> SchemeSpec:
        if Scheme(scheme) is Scheme.SRZF:
            return SchemeSpec.srzf(self.lam, self.theta)
        return SchemeSpec.rzf(self.zeta)


@dataclass(frozen=True)
class ResultRow:
    sweep_variable: str
    sweep_value: float
    scheme: str
    lam: float
    theta: float
    rate_asymptotic: float
    rate_simulated: float | None = None
    stderr: float | None = None
    trials: int | None = None
    seed: int = 0
    max_power_error: float | None = field(default=None, compare=False)

    def as_record(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return repr(v)
            return str(v)

        return [fmt(v) for v in (self.sweep_variable, self.sweep_value, self.scheme,
                                 self.lam, self.theta, self.rate_asymptotic,
                                 self.rate_simulated, self.stderr, self.trials, self.seed)]

    @classmethod
    def from_record(cls, rec: dict) -> "ResultRow":
        def opt(key, conv):
            return conv(rec[key]) if rec[key] != "" else None

        return cls(rec["sweep_variable"], float(rec["sweep_value"]), rec["scheme"],
                   float(rec["lambda"]), float(rec["theta"]), float(rec["rate_asymptotic"]),
                   opt("rate_simulated", float), opt("stderr", float), opt("trials", int),
                   int(rec["seed"]))


@dataclass(frozen=True)
class SweepSpec:
    """A one-dimensional sweep over ``alpha_o`` or ``mu_o_db``.

    Whichever of ``alpha_o`` / ``mu_o_db`` is swept is taken from
    ``values``; the other is held at the field value.
    """

    sweep_variable: SweepVariable
    values: Sequence[float]
    M: int = 128
    alpha_l: float = 0.5
    alpha_o: float = 0.25
    mu_l_db: float = 0.0
    mu_o_db: float = 0.0
    trials: int = 0
    master_seed: int = 0
    schemes: Sequence[Scheme] = (Scheme.SRZF, Scheme.RZF)
    optimized: bool = True
    fixed_params: FixedParams = FixedParams()
    grid: GridConfig = GridConfig()

    def __post_init__(self):
        object.__setattr__(self, "sweep_variable", SweepVariable(self.sweep_variable))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "schemes", tuple(Scheme(s) for s in self.schemes))
        if not self.values:
            raise InputError("sweep values must be non-empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise InputError("sweep values must be strictly increasing")
        if not self.schemes:
            raise InputError("at least one scheme is required")

    def point(self, value: float) -> tuple[float, float]:
        """``(alpha_o, mu_o_db)`` at one sweep value."""
        if self.sweep_variable is SweepVariable.ALPHA_O:
            return value, self.mu_o_db
        return self.alpha_o, value


def run_point(M: int, alpha_l: float, alpha_o: float, mu_l_db: float, mu_o_db: float,
              scheme: Scheme | str, *, optimized: bool = True,
              fixed_params: FixedParams = FixedParams(), trials: int = 0, seed: int = 0,
              grid: GridConfig = GridConfig(), sweep_variable: str = "mu_o_db",
              sweep_value: float | None = None, workers: int | None = None) -> ResultRow:
    """Asymptotic rate at given or tuned regularizers, plus an optional simulation.

    The simulation uses ``K = alpha_l M`` users and ``J = alpha_o M``
    eavesdroppers; both must be integers.
    """
    scheme = Scheme(scheme)
    mu_l, mu_o = db_to_linear(mu_l_db), db_to_linear(mu_o_db)
    if sweep_value is None:
        sweep_value = mu_o_db if sweep_variable == "mu_o_db" else alpha_o
    # validate dims before any expensive work
    dims = SystemDims.from_loads(M, alpha_l, alpha_o) if trials > 0 else None

    base = AsymptoticInputs(alpha_l=alpha_l, alpha_o=alpha_o, mu_l=mu_l, mu_o=mu_o)
    if optimized:
        tuned = tune(scheme, base, grid)
        lam, theta = tuned.lambda_star, tuned.theta_star
    elif scheme is Scheme.SRZF:
        lam, theta = fixed_params.lam, fixed_params.theta
    else:
        lam, theta = fixed_params.zeta, 0.0
    rate_asy = asymptotic_rate(base.with_params(lam, theta)).rate

    if dims is None:
        return ResultRow(sweep_variable, float(sweep_value), scheme.value, float(lam),
                         float(theta), rate_asy, seed=seed)

    spec = SchemeSpec.srzf(lam, theta) if scheme is Scheme.SRZF else SchemeSpec.rzf(lam)
    # unit power; SNRs are carried by the noise variances
    noise = NoiseProfile(sigma2=1.0 / mu_l, rho2=1.0 / mu_o, P=1.0)
    est = estimate_ergodic_rate(dims, noise, spec, trials, seed, workers=workers)
    return ResultRow(sweep_variable, float(sweep_value), scheme.value, float(lam),
                     float(theta), rate_asy, est.mean, est.stderr, est.trials, seed,
                     max_power_error=est.max_power_error)


def _sweep_points(spec: SweepSpec):
    for value in spec.values:
        alpha_o, mu_o_db = spec.point(value)
        for scheme in spec.schemes:
            yield value, alpha_o, mu_o_db, scheme


def run_sweep(spec: SweepSpec, sink: str | Path | TextIO | None = None,
              workers: int | None = None) -> list[ResultRow]:
    """Evaluate every (value, scheme) pair in order and optionally write CSV.

    Rows are ordered by sweep value, then by ``spec.schemes``. Points may
    be evaluated concurrently with ``workers`` threads; the order of the
    returned rows does not depend on it. The first failing point aborts
    the sweep with a :class:`PointError`.
    """
    points = list(_sweep_points(spec))
    if spec.trials > 0:
        for value, alpha_o, _, _ in points:
            try:
                SystemDims.from_loads(spec.M, spec.alpha_l, alpha_o)
            except InputError as exc:
                raise PointError(value, exc) from exc

    def run(point):
        value, alpha_o, mu_o_db, scheme = point
        try:
            return run_point(spec.M, spec.alpha_l, alpha_o, spec.mu_l_db, mu_o_db, scheme,
                             optimized=spec.optimized, fixed_params=spec.fixed_params,
                             trials=spec.trials, seed=spec.master_seed, grid=spec.grid,
                             sweep_variable=spec.sweep_variable.value, sweep_value=value)
        except SRZFError as exc:
            raise PointError(value, exc) from exc

    if workers is None or workers <= 1:
        rows = [run(p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, points))

    if sink is not None:
        write_csv(rows, sink)
    return rows


def write_csv(rows: Iterable[ResultRow], sink: str | Path | TextIO) -> None:
    if isinstance(sink, (str, Path)):
        with open(sink, "w", newline="") as fh:
            _write(rows, fh)
    else:
        _write(rows, sink)


def _write(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_record())


def read_csv(source: str | Path | TextIO) -> list[ResultRow]:
    if isinstance(source, (str, Path)):
        with open(source, newline="") as fh:
            return read_csv(fh)
    reader = csv.DictReader(source)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise InputError(f"unexpected CSV header {reader.fieldnames}")
    return [ResultRow.from_record(rec) for rec in reader]


def summarize(rows: Sequence[ResultRow]) -> str:
    """Fixed-width text table for terminals."""
    lines = [f"{'value':>9} {'scheme':>6} {'lambda':>10} {'theta':>10} "
             f"{'R_asy':>9} {'R_sim':>9} {'stderr':>8}"]
    for r in rows:
        sim = f"{r.rate_simulated:9.5f}" if r.rate_simulated is not None else f"{'-':>9}"
        se = f"{r.stderr:8.5f}" if r.stderr is not None else f"{'-':>8}"
        lines.append(f"{r.sweep_value:9.4g} {r.scheme:>6} {r.lam:10.4g} {r.theta:10.4g} "
                     f"{r.rate_asymptotic:9.5f} {sim} {se}")
    return "\n".join(lines)

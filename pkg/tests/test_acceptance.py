"""Exit criteria for the package.

Each test prints one ``[PASS]``/``[FAIL]`` line. Reference numbers are
the dashed-curve and marker values of the secrecy-rate vs. eavesdropper
SNR figure (M = 128, mu_l = 0 dB, alpha_o = alpha_l / 2).
"""

import math
import time

import numpy as np
import pytest

import sm_oracle as sm
from srzf.asymptotics import (AsymptoticInputs, empirical_stieltjes, fixed_point_residual,
                              solve_fixed_point, stieltjes_derivative)
from srzf.channel import SystemDims, sample_channel
from srzf.harness import SweepSpec, db_to_linear, read_csv, run_sweep
from srzf.metrics import per_user_esnr, per_user_sinr
from srzf.precoding import (RzfParams, SrzfParams, build_precoder, rzf_shaping_matrix,
                            srzf_shaping_matrix)
from srzf.tuning import tune_rzf, tune_srzf

HIGH = (0.5, 0.25)
LOW = (0.0625, 0.03125)
SWEEP_DB = list(range(-8, 9))
TRIALS = 500
M_SIM = 128


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        return ok

    return emit


def _inputs(loads, mu_o_db, **kw):
    return AsymptoticInputs(alpha_l=loads[0], alpha_o=loads[1], mu_l=1.0,
                            mu_o=db_to_linear(mu_o_db), **kw)


@pytest.fixture(scope="session")
def fig3_run(tmp_path_factory):
    """Optimized Monte Carlo sweeps over mu_o for both load families."""
    out = tmp_path_factory.mktemp("fig3")
    start = time.perf_counter()
    result = {}
    for name, loads in (("high", HIGH), ("low", LOW)):
        spec = SweepSpec("mu_o_db", SWEEP_DB, M=M_SIM, alpha_l=loads[0], alpha_o=loads[1],
                         mu_l_db=0.0, trials=TRIALS, master_seed=2019,
                         schemes=("SRZF", "RZF"), optimized=True)
        path = out / f"fig3_{name}.csv"
        rows = run_sweep(spec, path)
        result[name] = (rows, path)
    result["elapsed"] = time.perf_counter() - start
    return result


def test_criterion_1_fixed_point(report):
    start = time.perf_counter()
    x = solve_fixed_point(AsymptoticInputs(alpha_l=0.5, alpha_o=0.25, theta=1.0, lam=1.0))
    closed = (-0.75 + math.sqrt(0.75 ** 2 + 4)) / 2
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(1000):
        inp = AsymptoticInputs(alpha_l=rng.uniform(0, 3), alpha_o=rng.uniform(0, 3),
                               theta=10 ** rng.uniform(-3, 3), lam=10 ** rng.uniform(-3, 3))
        worst = max(worst, abs(fixed_point_residual(solve_fixed_point(inp), inp)))
    elapsed = time.perf_counter() - start
    ok = abs(x - closed) <= 1e-10 and abs(closed - 0.69300047) < 5e-9 \
        and worst <= 1e-12 and elapsed < 1.0
    assert report("C1 fixed point", ok,
                  f"|x-root|={abs(x - closed):.2e}, max residual={worst:.2e}, {elapsed:.3f}s")


FIG3_ASYMPTOTIC = [
    ("SRZF", HIGH, -8, 1.19351146841644),
    ("SRZF", HIGH, 0, 1.07950150949399),
    ("SRZF", HIGH, 8, 1.01706037327444),
    ("RZF", HIGH, -8, 1.16153134916841),
    ("RZF", HIGH, 0, 0.686590802442456),
    ("RZF", HIGH, 4, 0.0978225489818647),
    ("RZF", HIGH, 5, 0.0),
    ("RZF", HIGH, 6, 0.0),
    ("RZF", HIGH, 7, 0.0),
    ("RZF", HIGH, 8, 0.0),
    ("SRZF", LOW, 0, 3.96293226957391),
    ("RZF", LOW, 0, 3.42064028984455),
    ("RZF", LOW, 8, 1.95082836951035),
]


def test_criterion_2_asymptotic_curves(report):
    start = time.perf_counter()
    errors = []
    for scheme, loads, db, expected in FIG3_ASYMPTOTIC:
        tuner = tune_srzf if scheme == "SRZF" else tune_rzf
        got = tuner(_inputs(loads, db)).rate_star
        errors.append(abs(got - expected))
    elapsed = time.perf_counter() - start
    ok = max(errors) <= 5e-3 and elapsed < 30.0
    assert report("C2 Fig. 3 asymptotic values", ok,
                  f"{len(errors)} points, max |err|={max(errors):.2e} bits, {elapsed:.2f}s")


def test_criterion_3_simulation_consistency(report, fig3_run):
    rows = fig3_run["high"][0]
    at0 = {r.scheme: r for r in rows if r.sweep_value == 0.0}
    srzf_err = abs(at0["SRZF"].rate_simulated - 1.08278373178749)
    rzf_err = abs(at0["RZF"].rate_simulated - 0.692344572567626)
    gaps = [abs(r.rate_simulated - r.rate_asymptotic)
            for name in ("high", "low") for r in fig3_run[name][0] if r.scheme == "SRZF"]
    elapsed = fig3_run["elapsed"]
    ok = srzf_err <= 0.02 and rzf_err <= 0.02 and max(gaps) <= 0.02 and elapsed < 600
    assert report("C3 Monte Carlo vs markers", ok,
                  f"SRZF@0dB {at0['SRZF'].rate_simulated:.5f} (err {srzf_err:.4f}), "
                  f"RZF@0dB {at0['RZF'].rate_simulated:.5f} (err {rzf_err:.4f}), "
                  f"max SRZF |sim-asy|={max(gaps):.4f}, sweeps {elapsed:.1f}s")


def test_criterion_4_robustness(report, fig3_run):
    rows = read_csv(fig3_run["high"][1])
    srzf = {r.sweep_value: r.rate_asymptotic for r in rows if r.scheme == "SRZF"}
    rzf = {r.sweep_value: r.rate_asymptotic for r in rows if r.scheme == "RZF"}
    drop = max(srzf.values()) - min(srzf.values())
    rzf_high = [rzf[v] for v in rzf if v >= 5]
    dominance = all(srzf[v] >= rzf[v] - 5e-3 for v in srzf)
    ok = drop <= 0.20 and all(v == 0.0 for v in rzf_high) and dominance
    assert report("C4 robustness", ok,
                  f"SRZF drop {drop:.4f} bits, RZF at >=5 dB {rzf_high}, SRZF>=RZF {dominance}")


def test_criterion_5_theta_zero(report):
    rng = np.random.default_rng(5)
    worst_eq = worst_pt = 0.0
    for _ in range(100):
        M = int(rng.integers(2, 33))
        K = int(rng.integers(1, M + 1))
        J = int(rng.integers(0, M + 1))
        H, G = sm.random_instance(rng, M, K, J)
        lam = 10 ** rng.uniform(-2, 1)
        a = srzf_shaping_matrix(H, G, SrzfParams(lam, 0.0))
        b = rzf_shaping_matrix(H, RzfParams(lam))
        c = np.linalg.inv(H.conj().T @ H + lam * np.eye(M)) @ H.conj().T
        worst_eq = max(worst_eq, np.linalg.norm(a - b))
        worst_pt = max(worst_pt, np.linalg.norm(b - c))
    ok = worst_eq <= 1e-12 and worst_pt <= 1e-12
    assert report("C5 theta=0 degeneracy", ok,
                  f"max ||SRZF-RZF||_F={worst_eq:.2e}, max push-through={worst_pt:.2e}")


def test_criterion_6_sherman_morrison(report):
    rng = np.random.default_rng(6)
    M, K, J = 16, 8, 4
    worst = 0.0
    worst_assembly = 0.0

    def rel(a, b):
        return abs(a - b) / max(abs(b), 1e-300)

    for _ in range(50):
        H, G = sm.random_instance(rng, M, K, J)
        lam, theta = 10 ** rng.uniform(-1, 1), 10 ** rng.uniform(-1, 1)
        P, sigma2, rho2 = 1.0, 10 ** rng.uniform(-1, 1), 10 ** rng.uniform(-1, 1)
        beta_d, beta_s = sm.beta(H, G, lam, theta)
        worst = max(worst, rel(beta_s, beta_d))
        out = build_precoder(H, G, SrzfParams(lam, theta), P)
        sinr = per_user_sinr(H, out.W, sigma2)
        esnr = per_user_esnr(G, out.W, rho2)
        for k in range(K):
            u_d, u_s = sm.U_k(H, G, lam, theta, k)
            i_d, i_s = sm.I_k(H, G, lam, theta, k)
            l_d, l_q, l_g = sm.L_k(H, G, lam, theta, k)
            worst = max(worst, rel(u_s, u_d), rel(i_s, i_d), rel(l_q, l_d), rel(l_g, l_d))
            worst_assembly = max(
                worst_assembly,
                rel(sinr[k], (P / sigma2) * u_d / (beta_d + (P / sigma2) * i_d)),
                rel(esnr[k], (P / rho2) * l_d / beta_d))
    ok = worst <= 1e-9 and worst_assembly <= 1e-9
    assert report("C6 Sherman-Morrison", ok,
                  f"max rel err decompositions={worst:.2e}, assembly={worst_assembly:.2e}")


def test_criterion_7_empirical_stieltjes(report):
    M = 512
    worst = 0.0
    worst_fd = 0.0
    for loads in (HIGH, LOW):
        dims = SystemDims.from_loads(M, *loads)
        params = []
        for db in (-8, 0, 8):
            t = tune_srzf(_inputs(loads, db))
            params.append((t.lambda_star, t.theta_star))
        params.append((tune_rzf(_inputs(loads, 0)).lambda_star, 0.0))
        for seed in range(10):
            ch = sample_channel(dims, 1000 + seed)
            for lam, theta in params:
                inp = _inputs(loads, 0, lam=lam, theta=theta)
                x = solve_fixed_point(inp)
                worst = max(worst, abs(empirical_stieltjes(ch.H, ch.G, theta, lam) - x))
        for lam, theta in params:
            inp = _inputs(loads, 0, lam=lam, theta=theta)
            h = 1e-5
            fd = (solve_fixed_point(inp.with_params(lam - h, theta))
                  - solve_fixed_point(inp.with_params(lam + h, theta))) / (2 * h)
            gp = stieltjes_derivative(solve_fixed_point(inp), inp)
            worst_fd = max(worst_fd, abs(fd - gp) / gp)
    ok = worst <= 0.01 and worst_fd <= 1e-5
    assert report("C7 empirical Stieltjes", ok,
                  f"max |empirical-x|={worst:.4f}, max FD rel err={worst_fd:.2e}")


def test_criterion_8_power_constraint(report, fig3_run):
    errs = [r.max_power_error for name in ("high", "low") for r in fig3_run[name][0]]
    ok = all(e is not None for e in errs) and max(errs) <= 1e-9
    assert report("C8 power constraint", ok,
                  f"{len(errs)} Monte Carlo points x {TRIALS} trials, "
                  f"max rel error={max(errs):.2e}")

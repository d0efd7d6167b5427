"""Acceptance criteria, one test per criterion at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import math

import numpy as np
import pytest

from fisherdiscord import fisher_discord, lambda0
from fisherdiscord.cli import main
from fisherdiscord.closed_forms import FormulaFamily, family_ids
from fisherdiscord.fock import FockConfig, number_op, quad_squared, quadrature
from fisherdiscord.linalg import PAULI_X, PAULI_Y, PAULI_Z
from fisherdiscord.measures import commutator_norm, evolve, variance
from fisherdiscord.pairing import spectral_report
from fisherdiscord import sampling, states, verify
from fisherdiscord.sweeps import FIGURES, Grid, SweepSpec, figure_preset, read_csv, run_sweep, to_csv

pytestmark = pytest.mark.acceptance

SEED = sampling.DEFAULT_SEED


def rng_for(k):
    return np.random.default_rng([SEED, 1000 + k])


def random_pair(rng, lo=2, hi=16):
    d = int(rng.integers(lo, hi + 1))
    return sampling.random_density(d, rng), sampling.random_hermitian(d, rng)


def test_criterion_01_ordering():
    rng = rng_for(1)
    for _ in range(500):
        r = fisher_discord(*random_pair(rng))
        slack = 1e-10 * max(1.0, r.i_f)
        assert -slack <= r.c
        assert r.c <= r.i_w + slack
        assert r.i_w <= r.i_f + slack
        assert r.i_f <= 2 * r.i_w + slack


def test_criterion_02_zero_laws():
    rng = rng_for(2)
    for _ in range(100):
        d = int(rng.integers(2, 17))
        rho, H = sampling.random_pure(d, rng), sampling.random_hermitian(d, rng)
        r = fisher_discord(rho, H)
        v = variance(rho, H)
        assert abs(r.c) < 1e-10
        assert abs(r.i_f - v) < 1e-8 and abs(r.i_w - v) < 1e-8
    for _ in range(100):
        rho, H = sampling.random_commuting_pair(int(rng.integers(2, 17)), rng)
        assert abs(fisher_discord(rho, H).c) < 1e-10


def test_criterion_03_counterexample():
    cfg = FockConfig(dim=8)
    rho, N = states.counterexample_state(cfg), number_op(cfg)
    assert abs(fisher_discord(rho, N).c) < 1e-10
    assert commutator_norm(rho, N) > 0.1


def test_criterion_04_exact_values():
    for n in (1, 2, 3):
        rep = spectral_report(FormulaFamily("MIXTURE_N", dict(p=0.5, m=0, n=n)))
        assert rep.converged
        assert abs(rep.c - (math.sqrt(2) - 1) * n * n / 16) <= 1e-9
    cfg = FockConfig(dim=16)
    rho1 = states.superposition_mixture(0.5, 0, 1, cfg)
    rho2 = states.superposition_mixture(0.5, 0, 2, cfg)
    k = math.sqrt(2) - 1
    for theta in np.linspace(0, 2 * math.pi, 25):
        c1 = fisher_discord(rho1, quadrature(theta, cfg)).c
        c2 = fisher_discord(rho2, quad_squared(theta, cfg)).c
        assert abs(c1 - 0.25 * k * (1 + math.sin(theta) ** 2)) <= 1e-6
        assert abs(c2 - 0.25 * k * (3 - math.cos(2 * theta))) <= 1e-6


def cli_extremum(capsys, family, param, lo, hi, mode="max", **fixed):
    argv = ["extremum", "--family", family, "--param", param, "--bracket", str(lo), str(hi),
            "--mode", mode]
    for key, value in fixed.items():
        argv += ["--set", f"{key}={value}"]
    assert main(argv) == 0
    out = dict(line.split("=", 1) for line in capsys.readouterr().out.split())
    return float(out["argopt"]), float(out["value"])


def test_criterion_05_extrema(capsys):
    lam0 = 2 + math.sqrt(5) - 2 * math.sqrt(2 + math.sqrt(5))
    assert lambda0() == pytest.approx(lam0, abs=1e-15)

    x, v = cli_extremum(capsys, "THERMAL_X", "lam", 0.01, 0.5)
    assert abs(x - lam0) <= 1e-4 and abs(v - 0.3003) <= 5e-4

    x, v = cli_extremum(capsys, "TRUNC_THERMAL_X", "lam", 0.01, 0.5)
    assert abs(x - 0.1014) <= 1e-3 and abs(v - 0.5675) <= 5e-4

    for (lo, hi), target in (((0.01, 0.5), (2 - math.sqrt(3)) / 4),
                             ((0.5, 0.99), (2 + math.sqrt(3)) / 4)):
        x, v = cli_extremum(capsys, "TWO_LEVEL_X", "p", lo, hi)
        assert abs(v - 0.25) <= 1e-9 and abs(x - target) <= 1e-6

    x, _ = cli_extremum(capsys, "MIXTURE_N", "p", 0.01, 0.99, m=0, n=1)
    assert abs(x - 0.8731) <= 1e-3

    x, v = cli_extremum(capsys, "MIXTURE_X", "p", 0.01, 0.99, m=0, n=1, theta=0)
    assert abs(x - 0.1269) <= 1e-3 and abs(v - 0.2440) <= 5e-4

    x, v = cli_extremum(capsys, "MIXTURE_X", "p", 0.01, 0.99, m=0, n=1, theta="pi/4")
    assert abs(x - 0.1351) <= 1e-3 and abs(v - 0.2468) <= 5e-4

    x, _ = cli_extremum(capsys, "GAUSSIAN_X", "zeta_abs", 0.01, 1.5, "min", lam="lambda0",
                        theta_prime="pi/4", zeta_arg=0)
    assert abs(x - 0.5 * math.log(1 + math.sqrt(2))) <= 1e-3


def test_criterion_06_closed_form_oracle():
    failed = []
    for fid in family_ids():
        res = verify.check_family(fid, 20, SEED)
        if not res.passed:
            failed.append(verify.format_row(res))
    assert not failed, "\n".join(failed)


LAWS = (verify.check_covariance, verify.check_shift_scale, verify.check_parallelogram,
        verify.check_composite_parallelogram, verify.check_tensor_additivity,
        verify.check_direct_sum)


def test_criterion_07_algebraic_laws():
    for k, check in enumerate(LAWS):
        res = check(rng_for(70 + k), 100)
        assert res.passed and res.worst <= 1e-9, verify.format_row(res)


def test_criterion_08_orbit_invariance():
    rng = rng_for(8)
    thetas = np.linspace(0.25, 2 * math.pi, 8)
    for _ in range(50):
        rho, H = random_pair(rng, 2, 16)
        base = fisher_discord(rho, H)
        for theta in thetas:
            r = fisher_discord(evolve(rho, H, theta), H)
            assert max(abs(r.i_f - base.i_f), abs(r.i_w - base.i_w), abs(r.c - base.c)) <= 1e-9


def qubit_h(h):
    return h[0] * np.eye(2) + h[1] * PAULI_X + h[2] * PAULI_Y + h[3] * PAULI_Z


def test_criterion_09_qubit_iff():
    rng = rng_for(9)
    for _ in range(10_000):
        r = sampling.random_bloch(rng)
        rho, H = states.qubit_from_bloch(r), qubit_h(rng.standard_normal(4))
        if fisher_discord(rho, H).c < 1e-12:
            pure = 1 - np.linalg.norm(r) < 1e-6
            assert pure or np.linalg.norm(rho @ H - H @ rho) < 1e-6
    for _ in range(500):
        r = sampling.random_bloch(rng)
        unit = r / np.linalg.norm(r)
        h = rng.standard_normal(2)
        assert fisher_discord(states.qubit_from_bloch(unit), qubit_h(rng.standard_normal(4))).c < 1e-10
        commuting = h[0] * np.eye(2) + h[1] * (r[0] * PAULI_X + r[1] * PAULI_Y + r[2] * PAULI_Z)
        assert fisher_discord(states.qubit_from_bloch(r), commuting).c < 1e-10


def test_criterion_10_figures():
    # determinism: closed forms on the full grids, spectral columns on coarse grids
    for name in FIGURES:
        for spec in figure_preset(name, spectral=False):
            assert to_csv(spec, run_sweep(spec)) == to_csv(spec, run_sweep(spec))
        for spec in figure_preset(name, points=5):
            text = to_csv(spec, run_sweep(spec))
            assert text == to_csv(spec, run_sweep(spec))
            _, data = read_csv(text)
            ok = data[:, -1] == 1
            assert np.allclose(data[ok, 2], data[ok, 1], rtol=1e-6, atol=1e-10)

    for rows in map(run_sweep, figure_preset("fig2", spectral=False)):
        slope = np.sign(np.diff([r[1] for r in rows]))
        assert slope[0] > 0 and slope[-1] < 0
        assert np.count_nonzero(np.diff(slope)) == 1

    thermal_l = run_sweep(SweepSpec(param="lam", grid=Grid(0.005, 0.995, 199), family="THERMAL_L",
                                    spectral=False))
    assert np.all(np.diff([r[1] for r in thermal_l]) > 0)

    fig6 = {dict(s.fixed)["theta_prime"]: run_sweep(s) for s in figure_preset("fig6", spectral=False)}
    values = {k: np.array([r[1] for r in rows]) for k, rows in fig6.items()}
    assert np.all(np.diff(values[0.0]) < 0)
    assert np.all(np.diff(values[math.pi / 2]) > 0)
    assert np.all(np.diff(values[math.pi]) > 0)

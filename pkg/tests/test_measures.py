import math

import numpy as np
import pytest

from fisherdiscord import errors, states
from fisherdiscord.config import Tolerances
from fisherdiscord.fock import FockConfig, number_op, quadrature
from fisherdiscord.linalg import PAULI_X, PAULI_Y, PAULI_Z, tensor_product
from fisherdiscord.measures import (
    DiscordReport,
    bipartite_monotonicity_probe,
    evolve,
    fisher_discord,
    orbit_invariance_check,
    skew_information,
    skew_information_commutator,
    sld_fisher,
    sld_operator,
    variance,
)
from fisherdiscord.sampling import random_density, random_hermitian, random_pure

RHO = np.diag([0.8, 0.2])


def test_skew_examples():
    assert skew_information(np.diag([1.0, 0.0]), PAULI_X) == pytest.approx(1.0, abs=1e-14)
    assert skew_information(np.eye(2) / 2, random_hermitian(2, np.random.default_rng(1))) == pytest.approx(0, abs=1e-15)
    assert skew_information(RHO, PAULI_X) == pytest.approx((math.sqrt(0.8) - math.sqrt(0.2)) ** 2,
                                                           abs=1e-14)
    assert skew_information(RHO, PAULI_X) == pytest.approx(0.2, abs=1e-14)


def test_sld_fisher_examples():
    assert sld_fisher(np.diag([1.0, 0.0]), PAULI_X) == pytest.approx(1.0, abs=1e-14)
    assert sld_fisher(RHO, PAULI_X) == pytest.approx(0.36, abs=1e-14)
    assert sld_fisher(RHO, PAULI_Z) == pytest.approx(0.0, abs=1e-15)


def test_discord_examples():
    r = fisher_discord(RHO, PAULI_X)
    assert (r.i_f, r.i_w, r.c) == pytest.approx((0.36, 0.2, 0.16), abs=1e-14)
    assert r.rank == 2
    assert r.min_eigenvalue == pytest.approx(0.2)
    cfg = FockConfig(dim=6)
    assert fisher_discord(states.counterexample_state(cfg), number_op(cfg)).c < 1e-10
    mix = states.superposition_mixture(0.5, 0, 1, cfg)
    assert fisher_discord(mix, number_op(cfg)).c == pytest.approx((math.sqrt(2) - 1) / 16,
                                                                  abs=1e-14)
    assert round((math.sqrt(2) - 1) / 16, 7) == 0.0258883


def test_discord_is_own_sum_not_difference(rng):
    # C is evaluated from its own pair sum; it must still equal I_F - I_W
    for _ in range(20):
        rho, H = random_density(7, rng), random_hermitian(7, rng)
        r = fisher_discord(rho, H)
        assert abs(r.c - (r.i_f - r.i_w)) <= 1e-10 * max(1, r.i_f)


def test_dimension_and_hermiticity_errors():
    with pytest.raises(errors.DimensionMismatch):
        fisher_discord(np.eye(2) / 2, np.eye(3))
    with pytest.raises(errors.NonHermitianInput):
        fisher_discord(np.eye(2) / 2, np.array([[0, 1], [0, 0]]))
    with pytest.raises(errors.NotPSD):
        fisher_discord(np.diag([1.5, -0.5]), PAULI_X)


def test_zero_eigenvalues_included():
    # pure state: pairs (1, 0) carry the whole variance
    psi = np.array([1, 1, 0]) / math.sqrt(2)
    rho = np.outer(psi, psi)
    H = np.diag([1.0, -1.0, 3.0]) + 0.5 * (np.eye(3, k=1) + np.eye(3, k=-1))
    v = variance(rho, H)
    r = fisher_discord(rho, H)
    assert r.i_w == pytest.approx(v, abs=1e-12)
    assert r.i_f == pytest.approx(v, abs=1e-12)
    assert r.rank == 1


def test_report_invariants_enforced():
    from fisherdiscord.measures import _check_report
    with pytest.raises(errors.InvariantViolation):
        _check_report(DiscordReport(i_f=1.0, i_w=0.2, c=0.8, rank=2, min_eigenvalue=0.1))
    with pytest.raises(errors.InvariantViolation):
        _check_report(DiscordReport(i_f=0.36, i_w=0.2, c=0.1, rank=2, min_eigenvalue=0.1))


def test_report_lines():
    text = fisher_discord(RHO, PAULI_X).as_lines()
    keys = [line.split("=")[0] for line in text.splitlines()]
    assert keys == ["i_f", "i_w", "c", "rank", "min_eigenvalue", "truncation_dim", "converged"]
    assert "truncation_dim=none" in text


def test_sld_operator_example():
    L = sld_operator(RHO, PAULI_X)
    # i[rho, H] = (L rho + rho L)/2 fixes L = -1.2 sigma_y
    np.testing.assert_allclose(L, -1.2 * PAULI_Y, atol=1e-14)
    np.testing.assert_allclose(1j * (RHO @ PAULI_X - PAULI_X @ RHO), 0.5 * (L @ RHO + RHO @ L),
                               atol=1e-14)
    assert 0.25 * np.trace(RHO @ L @ L).real == pytest.approx(0.36)


def test_sld_operator_properties(rng):
    rho = np.diag([0.5, 0.3, 0.2])
    np.testing.assert_allclose(sld_operator(rho, np.diag([1.0, 2.0, 3.0])), 0, atol=1e-15)
    for _ in range(10):
        rho, H = random_density(6, rng), random_hermitian(6, rng)
        L = sld_operator(rho, H)
        np.testing.assert_allclose(L, L.conj().T, atol=1e-12)
        np.testing.assert_allclose(1j * (rho @ H - H @ rho), 0.5 * (L @ rho + rho @ L), atol=1e-10)
        assert 0.25 * np.trace(rho @ L @ L).real == pytest.approx(sld_fisher(rho, H), abs=1e-8)
    psi = random_pure(5, rng)
    H = random_hermitian(5, rng)
    L = sld_operator(psi, H)
    assert 0.25 * np.trace(psi @ L @ L).real == pytest.approx(variance(psi, H), abs=1e-8)


def test_evolve_examples():
    np.testing.assert_allclose(evolve(RHO, PAULI_X, 0.0), RHO, atol=1e-15)
    np.testing.assert_allclose(evolve(RHO, PAULI_Z, 1.3), RHO, atol=1e-15)
    plus = states.pure([1, 1])
    np.testing.assert_allclose(evolve(plus, PAULI_Z, math.pi / 4), states.pure([1, 1j]), atol=1e-14)
    np.testing.assert_allclose(evolve(plus, PAULI_Z, math.pi / 2), states.pure([1, -1]), atol=1e-14)


def test_orbit_invariance_examples(rng):
    rho, H = random_density(6, rng), random_hermitian(6, rng)
    thetas = np.linspace(0, 2 * math.pi, 8, endpoint=False)
    assert orbit_invariance_check(rho, H, thetas) <= 1e-9
    assert orbit_invariance_check(RHO, PAULI_Z, thetas) == 0.0
    r = fisher_discord(evolve(RHO, PAULI_X, math.pi / 3), PAULI_X)
    assert (r.i_f, r.i_w, r.c) == pytest.approx((0.36, 0.2, 0.16), abs=1e-12)
    with pytest.raises(ValueError):
        orbit_invariance_check(RHO, PAULI_X, [])


def test_cross_path_skew(rng):
    for dim in (2, 5, 11, 16):
        rho, H = random_density(dim, rng), random_hermitian(dim, rng)
        assert abs(skew_information(rho, H) - skew_information_commutator(rho, H)) <= 1e-9


def test_probe_examples(rng):
    r1, r2 = random_density(2, rng), random_density(3, rng)
    H1 = random_hermitian(2, rng)
    assert abs(bipartite_monotonicity_probe(tensor_product(r1, r2), (2, 3), H1)) < 1e-10
    psi = random_pure(6, rng)
    from fisherdiscord.linalg import partial_trace
    gap = bipartite_monotonicity_probe(psi, (2, 3), H1)
    assert gap == pytest.approx(-fisher_discord(partial_trace(psi, (2, 3)), H1).c, abs=1e-10)
    assert gap <= 1e-12
    gap = bipartite_monotonicity_probe(random_density(4, rng), (2, 2), PAULI_Z)
    assert math.isfinite(gap)
    with pytest.raises(errors.DimensionMismatch):
        bipartite_monotonicity_probe(random_density(4, rng), (2, 2), np.eye(3))


def test_floors_are_configurable():
    rho = np.diag([1 - 1e-13, 1e-13])
    loose = fisher_discord(rho, PAULI_X)
    assert loose.rank == 1 and loose.c == 0.0
    strict = fisher_discord(rho, PAULI_X, Tolerances(eig_floor=1e-15))
    assert strict.rank == 2 and strict.c > 0


def test_quadrature_discord_on_mixture():
    cfg = FockConfig(dim=8)
    rho = states.superposition_mixture(0.5, 0, 1, cfg)
    for theta in (0.0, 0.5, 2.0):
        expected = 0.25 * (math.sqrt(2) - 1) * (1 + math.sin(theta) ** 2)
        assert fisher_discord(rho, quadrature(theta, cfg)).c == pytest.approx(expected, abs=1e-12)

"""Seeded property suite and closed-form/spectral comparison grid.

:func:`run_suite` returns one :class:`CheckResult` per property (and one
per closed-form family); :func:`format_table` renders them for the
``verify`` subcommand.
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from . import sampling, states
from .closed_forms import FormulaFamily, evaluate_closed_form, family_ids
from .fock import FockConfig, number_op, quad_squared, quadrature
from .linalg import PAULI_X, PAULI_Y, PAULI_Z, direct_sum_weighted, tensor_product
from .measures import (
    commutator_norm,
    fisher_discord,
    orbit_invariance_check,
    skew_information,
    skew_information_commutator,
    variance,
)
from .pairing import oracle_points, spectral_report

ORDER_SLACK = 1e-10
ZERO_TOL = 1e-10
LAW_TOL = 1e-9
ORACLE_TOL = 1e-6
# Both routes returning a numerical zero counts as agreement.
ORACLE_ZERO = 1e-10
CORRUPTION = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    trials: int
    worst: float
    detail: str = ""


def rel_err(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0 else 0.0


def _dim(rng, lo=2, hi=16):
    return int(rng.integers(lo, hi + 1))


def _pair(rng, lo=2, hi=16):
    d = _dim(rng, lo, hi)
    return sampling.random_density(d, rng), sampling.random_hermitian(d, rng)


# ---------------------------------------------------------------------------
# individual properties, each taking a generator and a trial count

def check_ordering(rng, n):
    worst = 0.0
    for _ in range(n):
        r = fisher_discord(*_pair(rng))
        s = ORDER_SLACK * max(1.0, r.i_f)
        gaps = (-r.c, r.c - r.i_w, r.i_w - r.i_f, r.i_f - 2 * r.i_w)
        worst = max(worst, max(gaps) / s)
    return CheckResult("ordering", worst <= 1.0, n, worst, "max violation / slack")


def check_zero_pure(rng, n):
    worst_c, worst_var = 0.0, 0.0
    for _ in range(n):
        d = _dim(rng)
        rho, H = sampling.random_pure(d, rng), sampling.random_hermitian(d, rng)
        r = fisher_discord(rho, H)
        v = variance(rho, H)
        worst_c = max(worst_c, abs(r.c))
        worst_var = max(worst_var, abs(r.i_f - v), abs(r.i_w - v))
    ok = worst_c < ZERO_TOL and worst_var < 1e-8
    return CheckResult("zero_pure", ok, n, max(worst_c, worst_var), "C and |I - Var|")


def check_zero_commuting(rng, n):
    worst = 0.0
    for _ in range(n):
        worst = max(worst, abs(fisher_discord(*sampling.random_commuting_pair(_dim(rng), rng)).c))
    return CheckResult("zero_commuting", worst < ZERO_TOL, n, worst, "max C")


def check_counterexample(rng, n):
    cfg = FockConfig(dim=8)
    rho, N = states.counterexample_state(cfg), number_op(cfg)
    c = fisher_discord(rho, N).c
    comm = commutator_norm(rho, N)
    return CheckResult("counterexample", abs(c) < ZERO_TOL and comm > 0.1, 1, abs(c),
                       f"|[rho,N]|max={comm:.3g}")


def check_exact_values(rng, n):
    worst = 0.0
    ok = True
    for k in (1, 2, 3):
        fam = FormulaFamily("MIXTURE_N", dict(p=0.5, m=0, n=k))
        rep = spectral_report(fam)
        target = (math.sqrt(2) - 1) * k * k / 16
        err = abs(rep.c - target)
        worst = max(worst, err)
        ok &= bool(rep.converged) and err <= 1e-9
    cfg = FockConfig(dim=16)
    rho1 = states.superposition_mixture(0.5, 0, 1, cfg)
    rho2 = states.superposition_mixture(0.5, 0, 2, cfg)
    for theta in np.linspace(0, 2 * math.pi, 13):
        c1 = fisher_discord(rho1, quadrature(theta, cfg)).c
        c2 = fisher_discord(rho2, quad_squared(theta, cfg)).c
        e1 = abs(c1 - 0.25 * (math.sqrt(2) - 1) * (1 + math.sin(theta) ** 2))
        e2 = abs(c2 - 0.25 * (math.sqrt(2) - 1) * (3 - math.cos(2 * theta)))
        worst = max(worst, e1, e2)
        ok &= max(e1, e2) <= 1e-6
    return CheckResult("exact_values", ok, 29, worst, "abs error")


def check_covariance(rng, n):
    worst = 0.0
    for _ in range(n):
        rho, H = _pair(rng, 2, 10)
        U = sampling.haar_unitary(rho.shape[0], rng)
        a = fisher_discord(U @ rho @ U.conj().T, H).c
        b = fisher_discord(rho, U.conj().T @ H @ U).c
        worst = max(worst, rel_err(a, b))
    return CheckResult("unitary_covariance", worst <= LAW_TOL, n, worst, "rel error")


def check_shift_scale(rng, n):
    worst = 0.0
    for _ in range(n):
        rho, H = _pair(rng, 2, 10)
        w, s = rng.uniform(-3, 3), rng.uniform(-5, 5)
        base = fisher_discord(rho, H).c
        shifted = fisher_discord(rho, H + s * np.eye(H.shape[0])).c
        scaled = fisher_discord(rho, w * H).c
        worst = max(worst, rel_err(shifted, base), rel_err(scaled, w * w * base))
    return CheckResult("shift_scale", worst <= LAW_TOL, n, worst, "rel error")


def check_parallelogram(rng, n):
    worst = 0.0
    for _ in range(n):
        rho, H1 = _pair(rng, 2, 10)
        H2 = sampling.random_hermitian(rho.shape[0], rng)
        lhs = fisher_discord(rho, H1 + H2).c + fisher_discord(rho, H1 - H2).c
        rhs = 2 * fisher_discord(rho, H1).c + 2 * fisher_discord(rho, H2).c
        worst = max(worst, rel_err(lhs, rhs))
    return CheckResult("parallelogram", worst <= LAW_TOL, n, worst, "rel error")


def check_composite_parallelogram(rng, n):
    worst = 0.0
    for _ in range(n):
        d1, d2 = _dim(rng, 2, 4), _dim(rng, 2, 4)
        rho = sampling.random_density(d1 * d2, rng)
        A = tensor_product(sampling.random_hermitian(d1, rng), np.eye(d2))
        B = tensor_product(np.eye(d1), sampling.random_hermitian(d2, rng))
        lhs = fisher_discord(rho, A + B).c + fisher_discord(rho, A - B).c
        rhs = 2 * fisher_discord(rho, A).c + 2 * fisher_discord(rho, B).c
        worst = max(worst, rel_err(lhs, rhs))
    return CheckResult("composite_parallelogram", worst <= LAW_TOL, n, worst, "rel error")


def check_tensor_additivity(rng, n):
    worst = 0.0
    for _ in range(n):
        rho1, H1 = _pair(rng, 2, 4)
        rho2, H2 = _pair(rng, 2, 4)
        d1, d2 = rho1.shape[0], rho2.shape[0]
        H = tensor_product(H1, np.eye(d2)) + tensor_product(np.eye(d1), H2)
        lhs = fisher_discord(tensor_product(rho1, rho2), H).c
        rhs = fisher_discord(rho1, H1).c + fisher_discord(rho2, H2).c
        worst = max(worst, rel_err(lhs, rhs))
    return CheckResult("tensor_additivity", worst <= LAW_TOL, n, worst, "rel error")


def check_direct_sum(rng, n):
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(2, 5))
        p = sampling.simplex(k, rng)
        pairs = [_pair(rng, 2, 5) for _ in range(k)]
        rho, H = direct_sum_weighted([(pi, r, h) for pi, (r, h) in zip(p, pairs)])
        lhs = fisher_discord(rho, H).c
        rhs = sum(pi * fisher_discord(r, h).c for pi, (r, h) in zip(p, pairs))
        worst = max(worst, rel_err(lhs, rhs))
    return CheckResult("direct_sum_additivity", worst <= LAW_TOL, n, worst, "rel error")


def check_orbit(rng, n):
    worst = 0.0
    thetas = np.linspace(0.3, 2 * math.pi, 8)
    for _ in range(n):
        rho, H = _pair(rng, 2, 12)
        worst = max(worst, orbit_invariance_check(rho, H, thetas))
    return CheckResult("orbit_invariance", worst <= LAW_TOL, n, worst, "max abs change")


def check_degenerate_basis(rng, n):
    worst = 0.0
    for _ in range(n):
        d = _dim(rng, 3, 8)
        k = int(rng.integers(2, d))  # k = d would give the maximally mixed state
        lam = sampling.simplex(d - k + 1, rng)
        spectrum = np.concatenate([np.full(k, lam[0] / k), lam[1:]])
        U = sampling.haar_unitary(d, rng)
        V = np.eye(d, dtype=complex)
        V[:k, :k] = sampling.haar_unitary(k, rng)
        H = sampling.random_hermitian(d, rng)
        a = fisher_discord((U * spectrum) @ U.conj().T, H)
        W = U @ V
        b = fisher_discord((W * spectrum) @ W.conj().T, H)
        worst = max(worst, rel_err(a.c, b.c), rel_err(a.i_w, b.i_w))
    return CheckResult("degenerate_basis", worst <= LAW_TOL, n, worst, "rel error")


def check_skew_paths(rng, n):
    worst = 0.0
    for _ in range(n):
        rho, H = _pair(rng)
        worst = max(worst, abs(skew_information(rho, H) - skew_information_commutator(rho, H)))
    return CheckResult("skew_cross_path", worst <= LAW_TOL, n, worst, "abs difference")


def check_qubit_iff(rng, n):
    bad = 0
    worst = 0.0
    for i in range(n):
        r = sampling.random_bloch(rng)
        if i % 4 == 1:
            r = r / np.linalg.norm(r)  # pure
        h = rng.standard_normal(4)
        H = h[0] * np.eye(2) + h[1] * PAULI_X + h[2] * PAULI_Y + h[3] * PAULI_Z
        if i % 4 == 2:
            H = h[0] * np.eye(2) + h[1] * (r[0] * PAULI_X + r[1] * PAULI_Y + r[2] * PAULI_Z)
        rho = states.qubit_from_bloch(r)
        c = fisher_discord(rho, H).c
        if i % 4 in (1, 2):
            worst = max(worst, abs(c))
            bad += abs(c) >= ZERO_TOL
        if c < 1e-12:
            pure = 1 - np.linalg.norm(r) < 1e-6
            commuting = np.linalg.norm(rho @ H - H @ rho) < 1e-6
            bad += not (pure or commuting)
    return CheckResult("qubit_iff", bad == 0, n, worst, f"{bad} counterexamples")


PROPERTIES: List[Callable] = [
    check_ordering,
    check_zero_pure,
    check_zero_commuting,
    check_counterexample,
    check_exact_values,
    check_covariance,
    check_shift_scale,
    check_parallelogram,
    check_composite_parallelogram,
    check_tensor_additivity,
    check_direct_sum,
    check_orbit,
    check_degenerate_basis,
    check_skew_paths,
    check_qubit_iff,
]


def _property_trials(check, trials):
    if check is check_ordering:
        return trials
    if check is check_qubit_iff:
        return 20 * trials
    if check is check_orbit:
        return min(trials, 50)
    return min(trials, 100)


# ---------------------------------------------------------------------------
# closed form against spectral

def check_family(family_id: str, count: int, seed: int, corrupt: Optional[str] = None,
                 cfg: FockConfig = FockConfig()) -> CheckResult:
    worst = 0.0
    failures = 0
    for fam in oracle_points(family_id, count, seed):
        closed = evaluate_closed_form(fam)
        if family_id == corrupt:
            closed = closed * (1 + CORRUPTION) + CORRUPTION
        rep = spectral_report(fam, cfg)
        err = rel_err(closed, rep.c)
        if max(abs(closed), abs(rep.c)) < ORACLE_ZERO:
            err = 0.0
        worst = max(worst, err)
        failures += err > ORACLE_TOL or rep.converged is False
    return CheckResult(f"oracle:{family_id}", failures == 0, count, worst,
                       f"{failures} disagreeing points")


def run_suite(seed: int = sampling.DEFAULT_SEED, trials: int = 500,
              corrupt: Optional[str] = None, oracle: bool = True,
              progress: Optional[Callable[[CheckResult], None]] = None) -> List[CheckResult]:
    """Run every property and, unless ``oracle`` is false, the family grid."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for k, check in enumerate(PROPERTIES):
        rng = np.random.default_rng([seed, k])
        res = check(rng, _property_trials(check, trials))
        results.append(res)
        if progress:
            progress(res)
    if oracle:
        count = max(1, min(20, trials))
        for fid in family_ids():
            res = check_family(fid, count, seed, corrupt)
            results.append(res)
            if progress:
                progress(res)
    return results


def format_row(r: CheckResult) -> str:
    status = "PASS" if r.passed else "FAIL"
    return f"{status}  {r.name:<32} n={r.trials:<6} worst={r.worst:.3e}  {r.detail}"


def format_table(results: List[CheckResult]) -> str:
    lines = [format_row(r) for r in results]
    failed = [r.name for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append("failed: " + ", ".join(failed))
    return "\n".join(lines)

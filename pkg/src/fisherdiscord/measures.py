"""SLD quantum Fisher information, Wigner-Yanase skew information and their
difference (the Fisher discord), all evaluated from the spectrum of the
state.

For ``rho = sum_m lam_m |phi_m><phi_m|`` and ``h_mn = <phi_m|H|phi_n>`` the
three quantities are double sums over ordered eigenvalue pairs weighted by
``|h_mn|^2``::

    I_W = 1/2 sum (sqrt lam_m - sqrt lam_n)^2
    I_F = 1/2 sum (lam_m - lam_n)^2 / (lam_m + lam_n)
    C   =     sum sqrt(lam_m lam_n) (sqrt lam_m - sqrt lam_n)^2 / (lam_m + lam_n)

``C`` is summed directly rather than formed as ``I_F - I_W`` so that it
keeps full relative precision when it is much smaller than ``I_F``.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .errors import DimensionMismatch, InvariantViolation, NotPSD
from .linalg import (
    as_hermitian,
    commutator,
    eig_hermitian,
    max_abs,
    partial_trace,
    psd_sqrt,
    tensor_product,
    unitary_from_generator,
)


@dataclass(frozen=True)
class DiscordReport:
    i_f: float
    i_w: float
    c: float
    rank: int
    min_eigenvalue: float
    truncation_dim: Optional[int] = None
    converged: Optional[bool] = None

    def as_lines(self) -> str:
        def fmt(v):
            if v is None:
                return "none"
            if isinstance(v, bool):
                return str(v).lower()
            if isinstance(v, float):
                return repr(v)
            return str(v)

        fields = ("i_f", "i_w", "c", "rank", "min_eigenvalue", "truncation_dim", "converged")
        return "\n".join(f"{k}={fmt(getattr(self, k))}" for k in fields)


class _Eigensystem:
    """Floored spectrum of a state together with ``|<phi_m|H|phi_n>|^2``."""

    def __init__(self, rho, H, tol: Tolerances):
        rho = as_hermitian(rho, tol)
        H = as_hermitian(H, tol)
        if rho.shape != H.shape:
            raise DimensionMismatch(f"state {rho.shape} vs Hamiltonian {H.shape}")
        w, V = eig_hermitian(rho, tol)
        if w[0] < -tol.psd_clip:
            raise NotPSD(f"state has eigenvalue {w[0]:.3e}")
        self.raw_min = float(w[0])
        self.lam = np.where(w < tol.eig_floor, 0.0, w)
        self.vecs = V
        h = V.conj().T @ H @ V
        self.h = h
        self.weight = np.abs(h) ** 2
        self.tol = tol

    def pair_terms(self):
        lam = self.lam
        root = np.sqrt(lam)
        lm, ln = lam[:, None], lam[None, :]
        rm, rn = root[:, None], root[None, :]
        total = lm + ln
        live = total > self.tol.pair_floor
        safe = np.where(live, total, 1.0)
        skew = 0.5 * (rm - rn) ** 2
        sld = np.where(live, 0.5 * (lm - ln) ** 2 / safe, 0.0)
        disc = np.where(live, rm * rn * (rm - rn) ** 2 / safe, 0.0)
        return skew, sld, disc


def skew_information(rho, H, tol: Tolerances = DEFAULT_TOL) -> float:
    """Wigner-Yanase skew information ``-1/2 tr [sqrt rho, H]^2``."""
    es = _Eigensystem(rho, H, tol)
    skew, _, _ = es.pair_terms()
    return float(np.sum(skew * es.weight))


def skew_information_commutator(rho, H, tol: Tolerances = DEFAULT_TOL) -> float:
    """Skew information from the commutator of ``sqrt(rho)`` with ``H``.

    Independent of the pair sum in :func:`skew_information`; kept as a
    cross-check.
    """
    H = as_hermitian(H, tol)
    K = commutator(psd_sqrt(rho, tol.psd_clip, tol), H)
    return float(-0.5 * np.trace(K @ K).real)


def sld_fisher(rho, H, tol: Tolerances = DEFAULT_TOL) -> float:
    """SLD quantum Fisher information ``tr(rho L^2) / 4`` for the unitary
    family generated by ``H``."""
    es = _Eigensystem(rho, H, tol)
    _, sld, _ = es.pair_terms()
    return float(np.sum(sld * es.weight))


def fisher_discord(rho, H, tol: Tolerances = DEFAULT_TOL,
                   truncation_dim: Optional[int] = None,
                   converged: Optional[bool] = None) -> DiscordReport:
    """``I_F``, ``I_W`` and ``C = I_F - I_W`` from a single eigendecomposition.

    Raises
    ------
    InvariantViolation
        If the three sums break ``0 <= C <= I_W <= I_F <= 2 I_W`` or
        ``C = I_F - I_W`` beyond round-off.
    """
    es = _Eigensystem(rho, H, tol)
    skew, sld, disc = es.pair_terms()
    i_w = float(np.sum(skew * es.weight))
    i_f = float(np.sum(sld * es.weight))
    c = float(np.sum(disc * es.weight))
    report = DiscordReport(
        i_f=i_f,
        i_w=i_w,
        c=c,
        rank=int(np.count_nonzero(es.lam)),
        min_eigenvalue=es.raw_min,
        truncation_dim=truncation_dim,
        converged=converged,
    )
    _check_report(report)
    return report


def _check_report(r: DiscordReport):
    scale = max(1.0, r.i_f)
    slack = 1e-10 * scale
    if abs(r.c - (r.i_f - r.i_w)) > slack:
        raise InvariantViolation(f"C = {r.c!r} but I_F - I_W = {r.i_f - r.i_w!r}")
    if not (-slack <= r.c <= r.i_w + slack and r.i_w <= r.i_f + slack
            and r.i_f <= 2 * r.i_w + slack):
        raise InvariantViolation(f"ordering 0 <= C <= I_W <= I_F <= 2 I_W fails: {r}")


def sld_operator(rho, H, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Symmetric logarithmic derivative ``L`` solving
    ``i[rho, H] = (L rho + rho L) / 2``."""
    es = _Eigensystem(rho, H, tol)
    lam = es.lam
    lm, ln = lam[:, None], lam[None, :]
    total = lm + ln
    live = total > tol.pair_floor
    L_eig = np.where(live, 2j * (lm - ln) * es.h / np.where(live, total, 1.0), 0.0)
    V = es.vecs
    L = V @ L_eig @ V.conj().T
    return 0.5 * (L + L.conj().T)


def evolve(rho, H, theta: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``exp(-i theta H) rho exp(i theta H)``."""
    rho = as_hermitian(rho, tol)
    H = as_hermitian(H, tol)
    if rho.shape != H.shape:
        raise DimensionMismatch(f"state {rho.shape} vs Hamiltonian {H.shape}")
    U = unitary_from_generator(-1j * theta * H, tol)
    out = U @ rho @ U.conj().T
    return 0.5 * (out + out.conj().T)


def orbit_invariance_check(rho, H, thetas: Iterable[float],
                           tol: Tolerances = DEFAULT_TOL) -> float:
    """Largest change of ``(I_F, I_W, C)`` along the orbit generated by ``H``."""
    thetas = list(thetas)
    if not thetas:
        raise ValueError("need at least one angle")
    base = fisher_discord(rho, H, tol)
    worst = 0.0
    for t in thetas:
        r = fisher_discord(evolve(rho, H, t, tol), H, tol)
        worst = max(worst, abs(r.i_f - base.i_f), abs(r.i_w - base.i_w), abs(r.c - base.c))
    return worst


def bipartite_monotonicity_probe(rho12, dims: Tuple[int, int], H1,
                                 tol: Tolerances = DEFAULT_TOL) -> float:
    """``C(rho12, H1 (x) 1) - C(tr_2 rho12, H1)``.

    The sign of this gap is not known in general; the probe only measures it.
    """
    d1, d2 = dims
    H1 = as_hermitian(H1, tol)
    if H1.shape[0] != d1:
        raise DimensionMismatch(f"H1 has dim {H1.shape[0]}, subsystem 1 has {d1}")
    rho1 = partial_trace(rho12, dims, keep=1)
    full = fisher_discord(rho12, tensor_product(H1, np.eye(d2)), tol).c
    return full - fisher_discord(rho1, H1, tol).c


def commutator_norm(rho, H) -> float:
    """``max |[rho, H]|`` entrywise."""
    return max_abs(commutator(rho, H))


def variance(rho, H) -> float:
    rho = np.asarray(rho)
    H = np.asarray(H)
    mean = np.trace(rho @ H).real
    return float(np.trace(rho @ H @ H).real - mean ** 2)

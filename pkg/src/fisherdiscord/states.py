"""Constructors for the qubit and single-mode states studied here.

Every constructor returns a unit-trace, Hermitian, positive-semidefinite
complex array.
"""

import math
from typing import Sequence

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .errors import (
    BlochOutOfBall,
    EqualLevels,
    LevelOutOfRange,
    NotPSD,
    ParamOutOfDomain,
    TailTooHeavy,
    TraceNotOne,
    WeightNotNormalized,
)
from .fock import FockConfig, displacement, squeeze
from .linalg import PAULI_X, PAULI_Y, PAULI_Z, as_hermitian

TAIL_LIMIT = 1e-12


def check_density(rho, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate a density matrix and return it as a complex array."""
    rho = as_hermitian(rho, tol)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > tol.trace_tol:
        raise TraceNotOne(f"trace {tr!r} differs from 1 by more than {tol.trace_tol:.1e}")
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if w[0] < -tol.psd_clip:
        raise NotPSD(f"eigenvalue {w[0]:.3e} below -{tol.psd_clip:.1e}")
    return rho


def _clean(rho: np.ndarray) -> np.ndarray:
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def qubit_from_bloch(r: Sequence[float]) -> np.ndarray:
    """``(1 + r . sigma) / 2`` for a Bloch vector with ``|r| <= 1``."""
    r1, r2, r3 = (float(x) for x in r)
    norm = math.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    if norm > 1 + 1e-12:
        raise BlochOutOfBall(f"|r| = {norm!r} exceeds 1")
    return 0.5 * (np.eye(2) + r1 * PAULI_X + r2 * PAULI_Y + r3 * PAULI_Z)


def fock_diagonal(weights: Sequence[float], cfg: FockConfig,
                  tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``sum_n w_n |n><n|`` padded with zeros up to the cut-off."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a non-empty vector")
    if w.size > cfg.dim:
        raise LevelOutOfRange(f"{w.size} weights do not fit a {cfg.dim}-level cut-off")
    if np.any(w < 0) or abs(w.sum() - 1.0) > tol.weight_tol:
        raise WeightNotNormalized(f"weights sum to {w.sum()!r}")
    diag = np.zeros(cfg.dim)
    diag[: w.size] = w
    return np.diag(diag).astype(complex)


def _geometric_state(levels: np.ndarray, total_cut: float, renormalize: bool) -> np.ndarray:
    tail = 1.0 - levels.sum()
    if tail > total_cut and not renormalize:
        raise TailTooHeavy(
            f"mass {tail:.3e} lies beyond the cut-off; raise dim or pass renormalize=True"
        )
    return np.diag(levels / levels.sum()).astype(complex)


def thermal(lam: float, cfg: FockConfig, renormalize: bool = False) -> np.ndarray:
    """Thermal state ``(1 - lam) sum_n lam^n |n><n|`` on the cut-off.

    The truncated weights are rescaled to unit trace. Unless ``renormalize``
    is set, a discarded tail heavier than 1e-12 raises :class:`TailTooHeavy`.
    """
    if not 0.0 <= lam < 1.0:
        raise ParamOutOfDomain(f"lambda must lie in [0, 1), got {lam!r}")
    n = np.arange(cfg.dim)
    levels = (1.0 - lam) * lam ** n
    return _geometric_state(levels, TAIL_LIMIT, renormalize)


def truncated_thermal(lam: float, cfg: FockConfig, renormalize: bool = False) -> np.ndarray:
    """Thermal state with the vacuum removed:
    ``((1 - lam)/lam) sum_{n>=1} lam^n |n><n|``."""
    if not 0.0 < lam < 1.0:
        raise ParamOutOfDomain(f"lambda must lie in (0, 1), got {lam!r}")
    n = np.arange(cfg.dim)
    levels = np.where(n >= 1, (1.0 - lam) * lam ** np.maximum(n - 1, 0), 0.0)
    return _geometric_state(levels, TAIL_LIMIT, renormalize)


def photon_added_thermal(lam: float, cfg: FockConfig, renormalize: bool = False) -> np.ndarray:
    """``a^dagger tau a / tr(a^dagger tau a)``, i.e. weights
    ``((1 - lam)^2 / lam) n lam^n``."""
    if not 0.0 < lam < 1.0:
        raise ParamOutOfDomain(f"lambda must lie in (0, 1), got {lam!r}")
    n = np.arange(cfg.dim)
    levels = (1.0 - lam) ** 2 * n * lam ** np.maximum(n - 1, 0)
    return _geometric_state(levels, TAIL_LIMIT, renormalize)


def superposition_mixture(p: float, m: int, n: int, cfg: FockConfig) -> np.ndarray:
    """``p |psi_mn><psi_mn| + (1 - p)|0><0|`` with ``psi_mn = (|m> + |n>)/sqrt 2``."""
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfDomain(f"p must lie in [0, 1], got {p!r}")
    if m == n:
        raise EqualLevels(f"levels must differ, got m = n = {m}")
    for k in (m, n):
        if not 0 <= k < cfg.dim:
            raise LevelOutOfRange(f"level {k} outside 0..{cfg.dim - 1}")
    psi = np.zeros(cfg.dim, dtype=complex)
    psi[[m, n]] = 1 / math.sqrt(2)
    rho = p * np.outer(psi, psi.conj())
    rho[0, 0] += 1.0 - p
    return rho


def two_level_fock(p: float, k: int, cfg: FockConfig) -> np.ndarray:
    """``p|0><0| + (1 - p)|k><k|``."""
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfDomain(f"p must lie in [0, 1], got {p!r}")
    if not 1 <= k < cfg.dim:
        raise LevelOutOfRange(f"level {k} outside 1..{cfg.dim - 1}")
    weights = np.zeros(k + 1)
    weights[0] = p
    weights[k] = 1.0 - p
    return fock_diagonal(weights, cfg)


def displaced(rho, z: complex, cfg: FockConfig) -> np.ndarray:
    """``D_z rho D_z^dagger``."""
    D = displacement(z, cfg)
    return _clean(D @ rho @ D.conj().T)


def squeezed(rho, zeta: complex, cfg: FockConfig) -> np.ndarray:
    """``S_zeta rho S_zeta^dagger``."""
    S = squeeze(zeta, cfg)
    return _clean(S @ rho @ S.conj().T)


def gaussian(lam: float, zeta: complex, z: complex, cfg: FockConfig,
             renormalize: bool = False) -> np.ndarray:
    """Single-mode Gaussian state ``D_z S_zeta tau_lam S_zeta^dagger D_z^dagger``."""
    tau = thermal(lam, cfg, renormalize=renormalize)
    U = displacement(z, cfg) @ squeeze(zeta, cfg)
    return _clean(U @ tau @ U.conj().T)


def counterexample_state(cfg: FockConfig) -> np.ndarray:
    """``|psi_01><psi_01|/2 + |2><2|/2``: zero discord against ``a^dagger a``
    although it does not commute with it."""
    if cfg.dim < 3:
        raise LevelOutOfRange("needs at least three Fock levels")
    rho = superposition_mixture(1.0, 0, 1, cfg) * 0.5
    rho[2, 2] += 0.5
    return rho


def pure(psi) -> np.ndarray:
    """Projector onto the normalized vector ``psi``."""
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def purity(rho) -> float:
    rho = np.asarray(rho)
    return float(np.real(np.trace(rho @ rho)))

"""Truncated single-mode bosonic operators and cut-off convergence control.

All operators act on the span of Fock states ``|0>, ..., |N-1>``. The
ladder operators are exact on that span; the canonical commutator fails in
the last row and column, which is why convergence is judged on scalar
outputs rather than on matrix identities.
"""

import math
import warnings
from dataclasses import dataclass, replace
from typing import Any, Callable, Optional, Tuple

import numpy as np

from .errors import ParamOutOfDomain, PowerExceedsTruncation, TruncationWarning
from .linalg import unitary_from_generator


@dataclass(frozen=True)
class FockConfig:
    """Fock cut-off and the schedule used to grow it.

    ``dim`` is the number of retained levels. :func:`converged_value`
    multiplies it by ``growth`` until two successive outputs agree to
    ``conv_tol`` or ``max_dim`` is reached.
    """

    dim: int = 32
    conv_tol: float = 1e-8
    max_dim: int = 512
    growth: int = 2

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")
        if self.max_dim < self.dim:
            raise ValueError(f"max_dim {self.max_dim} is below dim {self.dim}")
        if not self.conv_tol > 0:
            raise ValueError("conv_tol must be positive")
        if self.growth < 2:
            raise ValueError("growth must be at least 2")

    def with_dim(self, dim: int) -> "FockConfig":
        return replace(self, dim=dim, max_dim=max(self.max_dim, dim))


def annihilation(cfg: FockConfig) -> np.ndarray:
    """Lowering operator with ``<n-1|a|n> = sqrt(n)``."""
    return np.diag(np.sqrt(np.arange(1, cfg.dim, dtype=float)), k=1).astype(complex)


def creation(cfg: FockConfig) -> np.ndarray:
    return annihilation(cfg).conj().T


def number_op(cfg: FockConfig) -> np.ndarray:
    return np.diag(np.arange(cfg.dim, dtype=float)).astype(complex)


def ladder_power(l: int, theta: float, cfg: FockConfig) -> np.ndarray:
    """``exp(-i theta) a^l + exp(i theta) a^dagger^l``.

    The only non-zero entries are ``<n|.|n+l> = exp(-i theta) sqrt((n+l)!/n!)``
    and their conjugates.
    """
    if l < 1:
        raise ParamOutOfDomain(f"power must be positive, got {l}")
    if l >= cfg.dim:
        raise PowerExceedsTruncation(f"a^{l} vanishes on a {cfg.dim}-level space")
    n = np.arange(cfg.dim - l)
    amp = np.exp(0.5 * (_log_factorial(n + l) - _log_factorial(n)))
    lower = np.diag(amp, k=l).astype(complex)
    return np.exp(-1j * theta) * lower + np.exp(1j * theta) * lower.conj().T


def _log_factorial(n):
    return np.array([math.lgamma(k + 1.0) for k in np.atleast_1d(n)])


def quadrature(theta: float, cfg: FockConfig) -> np.ndarray:
    """Rotated quadrature ``X_theta = exp(-i theta) a + exp(i theta) a^dagger``."""
    a = annihilation(cfg)
    return np.exp(-1j * theta) * a + np.exp(1j * theta) * a.conj().T


def quad_squared(theta: float, cfg: FockConfig) -> np.ndarray:
    """Squeezing generator ``exp(-i theta) a^2 + exp(i theta) a^dagger^2``."""
    a = annihilation(cfg)
    a2 = a @ a
    return np.exp(-1j * theta) * a2 + np.exp(1j * theta) * a2.conj().T


def displacement(z: complex, cfg: FockConfig) -> np.ndarray:
    """``D_z = exp(z a^dagger - z^* a)`` built from the truncated generator."""
    z = complex(z)
    if abs(z) ** 2 > cfg.dim / 4:
        warnings.warn(
            f"|z|^2 = {abs(z) ** 2:.3g} is large for a {cfg.dim}-level cut-off",
            TruncationWarning,
            stacklevel=2,
        )
    a = annihilation(cfg)
    gen = z * a.conj().T - z.conjugate() * a
    return unitary_from_generator(gen)


def squeeze(zeta: complex, cfg: FockConfig) -> np.ndarray:
    """``S_zeta = exp((zeta^* a^2 - zeta a^dagger^2) / 2)`` built from the
    truncated generator."""
    zeta = complex(zeta)
    if math.exp(2 * abs(zeta)) > cfg.dim / 4:
        warnings.warn(
            f"|zeta| = {abs(zeta):.3g} is large for a {cfg.dim}-level cut-off",
            TruncationWarning,
            stacklevel=2,
        )
    a = annihilation(cfg)
    a2 = a @ a
    gen = 0.5 * (zeta.conjugate() * a2 - zeta * a2.conj().T)
    return unitary_from_generator(gen)


def converge(
    f: Callable[[FockConfig], Any],
    cfg: FockConfig,
    scalar: Callable[[Any], float] = float,
) -> Tuple[Any, int, bool]:
    """Evaluate ``f`` on a growing cut-off until ``scalar(f(cfg))`` settles.

    Returns the last result of ``f``, the cut-off that produced it, and
    whether the stopping rule was met before ``cfg.max_dim``. Truncation
    warnings raised at the smaller cut-offs are dropped; only those of the
    final evaluation are re-emitted.
    """
    dim = cfg.dim
    prev: Optional[float] = None
    while True:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", TruncationWarning)
            result = f(cfg.with_dim(dim))
        value = scalar(result)
        done = prev is not None and abs(value - prev) <= cfg.conv_tol * max(1.0, abs(value))
        nxt = dim * cfg.growth
        if not done and nxt > cfg.max_dim and dim < cfg.max_dim:
            nxt = cfg.max_dim
        if done or nxt > cfg.max_dim:
            for w in caught:
                warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)
            return result, dim, done
        prev = value
        dim = nxt


def converged_value(f: Callable[[FockConfig], float], cfg: FockConfig) -> Tuple[float, int, bool]:
    """Scalar form of :func:`converge`: ``(value, used_dim, converged)``."""
    value, dim, ok = converge(f, cfg)
    return float(value), dim, ok

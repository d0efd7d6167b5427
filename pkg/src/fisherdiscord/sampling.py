"""Random states, Hamiltonians and unitaries for the property suites.

Spectra are drawn uniformly from the probability simplex and eigenvectors
from the Haar measure, so every generator is reproducible from a seeded
``numpy.random.Generator``.
"""

import numpy as np

DEFAULT_SEED = 20250917


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def simplex(dim: int, rng: np.random.Generator) -> np.ndarray:
    return rng.dirichlet(np.ones(dim))


def random_density(dim: int, rng: np.random.Generator) -> np.ndarray:
    U = haar_unitary(dim, rng)
    rho = (U * simplex(dim, rng)) @ U.conj().T
    return 0.5 * (rho + rho.conj().T)


def random_pure(dim: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * 0.5 * (A + A.conj().T)


def random_commuting_pair(dim: int, rng: np.random.Generator):
    """A state and a Hamiltonian diagonal in one shared random basis."""
    U = haar_unitary(dim, rng)
    rho = (U * simplex(dim, rng)) @ U.conj().T
    H = (U * rng.standard_normal(dim)) @ U.conj().T
    return 0.5 * (rho + rho.conj().T), 0.5 * (H + H.conj().T)


def random_bloch(rng: np.random.Generator) -> np.ndarray:
    """Uniform point in the unit ball."""
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    return v * rng.random() ** (1 / 3)

"""Dense complex matrix helpers: Hermitian spectra, matrix functions,
commutators and composition of subsystems.

Matrices are plain two-dimensional ``numpy`` arrays. Validation is done on
entry and every function returns a fresh array.
"""

from typing import NamedTuple, Sequence, Tuple

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NonHermitianInput,
    NotPSD,
    NotSkewHermitian,
    WeightNotNormalized,
)


class Spectrum(NamedTuple):
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(A) -> np.ndarray:
    """Return ``A`` as a finite complex 2-d array."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has NaN or infinite entries")
    return A


def as_square(A) -> np.ndarray:
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    return A


def hermitian_defect(A) -> float:
    """Largest entry of ``|A - A^dagger|``."""
    A = np.asarray(A)
    return float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0


def as_hermitian(A, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate Hermiticity of ``A`` and return it as a complex array."""
    A = as_square(A)
    defect = hermitian_defect(A)
    if defect > tol.hermitian_tol:
        raise NonHermitianInput(
            f"max |A - A^dagger| = {defect:.3e} exceeds {tol.hermitian_tol:.1e}"
        )
    return A


def dagger(A) -> np.ndarray:
    return np.asarray(A).conj().T


def max_abs(A) -> float:
    A = np.asarray(A)
    return float(np.max(np.abs(A))) if A.size else 0.0


def eig_hermitian(A, tol: Tolerances = DEFAULT_TOL) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    A : array_like
        Square matrix, Hermitian to within ``tol.hermitian_tol``.

    Returns
    -------
    Spectrum
        Eigenvalues in ascending order and a unitary matrix whose columns are
        the eigenvectors, so that ``V @ diag(w) @ V^dagger`` reproduces ``A``.
    """
    A = as_hermitian(A, tol)
    # Symmetrize so the solver sees an exactly Hermitian input.
    A = 0.5 * (A + A.conj().T)
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return Spectrum(w, V)


def psd_sqrt(A, clip: float = DEFAULT_TOL.psd_clip,
             tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Positive square root of a positive-semidefinite matrix.

    Eigenvalues in ``[-clip, 0)`` are treated as zero; a more negative
    eigenvalue raises :class:`NotPSD`.
    """
    w, V = eig_hermitian(A, tol)
    if w.size and w[0] < -clip:
        raise NotPSD(f"eigenvalue {w[0]:.3e} below -{clip:.1e}")
    root = np.sqrt(np.clip(w, 0.0, None))
    return (V * root) @ V.conj().T


def commutator(A, B) -> np.ndarray:
    """``AB - BA``."""
    A = as_square(A)
    B = as_square(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"cannot commute {A.shape} with {B.shape}")
    return A @ B - B @ A


def unitary_from_generator(G, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``exp(G)`` for skew-Hermitian ``G``.

    The exponential is assembled from the spectrum of the Hermitian matrix
    ``iG``, which keeps the result unitary to machine precision.
    """
    G = as_square(G)
    defect = max_abs(G + G.conj().T)
    if defect > tol.skew_tol:
        raise NotSkewHermitian(
            f"max |G + G^dagger| = {defect:.3e} exceeds {tol.skew_tol:.1e}"
        )
    K = 1j * G
    w, V = eig_hermitian(0.5 * (K + K.conj().T), tol)
    # G = -i K, so exp(G) = V exp(-i w) V^dagger.
    return (V * np.exp(-1j * w)) @ V.conj().T


def tensor_product(A, B) -> np.ndarray:
    """Kronecker product with ``A`` on the slow index."""
    return np.kron(as_matrix(A), as_matrix(B))


def direct_sum_weighted(
    blocks: Sequence[Tuple[float, np.ndarray, np.ndarray]],
    tol: Tolerances = DEFAULT_TOL,
) -> Tuple[np.ndarray, np.ndarray]:
    """Assemble ``(sum_i p_i rho_i, sum_i H_i)`` as block-diagonal matrices.

    Parameters
    ----------
    blocks : sequence of (weight, rho, H)
        Weights must be non-negative and sum to one.
    """
    if not blocks:
        raise ValueError("need at least one block")
    weights = np.array([float(b[0]) for b in blocks])
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > tol.weight_tol:
        raise WeightNotNormalized(f"weights {weights.tolist()} do not form a distribution")
    rhos = [as_square(b[1]) for b in blocks]
    hams = [as_square(b[2]) for b in blocks]
    for r, h in zip(rhos, hams):
        if r.shape != h.shape:
            raise DimensionMismatch(f"block state {r.shape} vs Hamiltonian {h.shape}")
    dim = sum(r.shape[0] for r in rhos)
    rho = np.zeros((dim, dim), dtype=complex)
    ham = np.zeros((dim, dim), dtype=complex)
    start = 0
    for p, r, h in zip(weights, rhos, hams):
        stop = start + r.shape[0]
        rho[start:stop, start:stop] = p * r
        ham[start:stop, start:stop] = h
        start = stop
    return rho, ham


def partial_trace(rho12, dims: Tuple[int, int], keep: int = 1) -> np.ndarray:
    """Reduced state of a bipartite density matrix.

    ``keep`` is 1 to trace out the second factor and 2 to trace out the
    first.
    """
    rho12 = as_square(rho12)
    d1, d2 = (int(d) for d in dims)
    if d1 < 1 or d2 < 1 or d1 * d2 != rho12.shape[0]:
        raise DimensionMismatch(f"dims {dims} do not factor a {rho12.shape[0]}-dim space")
    t = rho12.reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("ijkj->ik", t)
    if keep == 2:
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 1 or 2, got {keep!r}")


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}

"""Numerical tolerances shared by every module."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used by validation and the spectral sums.

    Attributes
    ----------
    hermitian_tol : float
        Maximum entry of ``|A - A^dagger|`` accepted as Hermitian.
    skew_tol : float
        Maximum entry of ``|G + G^dagger|`` accepted as skew-Hermitian.
    psd_clip : float
        Eigenvalues in ``[-psd_clip, 0)`` are clipped to zero; anything
        more negative is rejected.
    eig_floor : float
        Density-matrix eigenvalues below this are treated as exactly zero.
    pair_floor : float
        Eigenvalue pairs with ``lam_m + lam_n <= pair_floor`` contribute
        nothing to the SLD Fisher information or the SLD operator.
    trace_tol : float
        Accepted deviation of ``tr(rho)`` from one.
    weight_tol : float
        Accepted deviation of a probability vector's sum from one.
    series_eps : float
        Relative cut-off for infinite series in the closed forms.
    """

    hermitian_tol: float = 1e-10
    skew_tol: float = 1e-10
    psd_clip: float = 1e-12
    eig_floor: float = 1e-12
    pair_floor: float = 1e-14
    trace_tol: float = 1e-8
    weight_tol: float = 1e-10
    series_eps: float = 1e-14


DEFAULT_TOL = Tolerances()

"""Analytic Fisher-discord values for the qubit and single-mode families.

Each family is a plain function of named parameters and never touches the
spectral engine in :mod:`fisherdiscord.measures`, so the two routes can be
checked against each other.

Parameter names (stable, also used on the command line):

``lam``
    thermal noise parameter in ``[0, 1)``
``z``, ``zeta``
    displacement and squeezing amplitudes (complex)
``theta``
    Hamiltonian phase
``p``
    mixing probability
``m``, ``n``, ``k``, ``l``
    Fock levels and ladder power
``weights``
    Fock-diagonal populations
``r1``, ``r2``, ``r3``
    Bloch vector
``hx``, ``hy``, ``hz`` or ``h12``
    qubit Hamiltonian as Pauli coefficients, or its off-diagonal element in
    the eigenbasis of the state
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Sequence, Tuple

import numpy as np

from .errors import BlochOutOfBall, ParamOutOfDomain, SeriesNotConverged
from .linalg import PAULI_X, PAULI_Y, PAULI_Z

SERIES_EPS = 1e-14
MAX_TERMS = 10 ** 6


@dataclass(frozen=True)
class FormulaFamily:
    family_id: str
    params: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class _Entry:
    func: Callable[..., float]
    required: Tuple[str, ...]
    optional: Tuple[str, ...]


_REGISTRY: Dict[str, _Entry] = {}


def _family(family_id: str, required: Sequence[str] = (), optional: Sequence[str] = ()):
    def register(func):
        _REGISTRY[family_id] = _Entry(func, tuple(required), tuple(optional))
        return func
    return register


def family_ids() -> Tuple[str, ...]:
    return tuple(_REGISTRY)


def family_params(family_id: str) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    entry = _lookup(family_id)
    return entry.required, entry.optional


def _lookup(family_id: str) -> _Entry:
    try:
        return _REGISTRY[family_id]
    except KeyError:
        raise ParamOutOfDomain(f"unknown family {family_id!r}") from None


def evaluate_closed_form(family: FormulaFamily, eps: float = SERIES_EPS) -> float:
    """Evaluate the analytic expression registered under ``family.family_id``."""
    entry = _lookup(family.family_id)
    params = dict(family.params)
    missing = [k for k in entry.required if k not in params]
    if missing:
        raise ParamOutOfDomain(f"{family.family_id} needs {', '.join(missing)}")
    unknown = [k for k in params if k not in entry.required + entry.optional]
    if unknown:
        raise ParamOutOfDomain(f"{family.family_id} does not take {', '.join(unknown)}")
    if "eps" in entry.optional:
        params.setdefault("eps", eps)
    return float(entry.func(**params))


def closed_form(family_id: str, **params) -> float:
    """Shorthand for ``evaluate_closed_form(FormulaFamily(family_id, params))``."""
    return evaluate_closed_form(FormulaFamily(family_id, params))


# ---------------------------------------------------------------------------
# helpers

def lambda0() -> float:
    """Noise level maximizing the thermal quadrature discord."""
    return 2 + math.sqrt(5) - 2 * math.sqrt(2 + math.sqrt(5))


def f_p(p: float) -> float:
    _check_prob(p)
    s = math.sqrt(2 * p * (1 - p))
    return s * (1 - s)


def g_p(p: float) -> float:
    _check_prob(p)
    return 2 * math.sqrt(p * (1 - p)) * (math.sqrt(p) - math.sqrt(1 - p)) ** 2


def beta_theta_zeta(theta: float, zeta: complex) -> complex:
    r, phi = abs(zeta), cmath.phase(zeta)
    return cmath.exp(1j * theta) * math.cosh(r) - cmath.exp(-1j * (theta - phi)) * math.sinh(r)


def beta_prime_theta_zeta(theta: float, zeta: complex) -> complex:
    r, phi = abs(zeta), cmath.phase(zeta)
    return (cmath.exp(1j * theta) * math.cosh(r) ** 2
            + cmath.exp(-1j * (theta - 2 * phi)) * math.sinh(r) ** 2)


def beta_z_zeta(z: complex, zeta: complex) -> complex:
    z = complex(z)
    r, phi = abs(zeta), cmath.phase(zeta)
    return z * math.cosh(r) - z.conjugate() * cmath.exp(1j * phi) * math.sinh(r)


def beta_theta_z_zeta(theta: float, z: complex, zeta: complex) -> complex:
    z = complex(z)
    r, phi = abs(zeta), cmath.phase(zeta)
    theta_zeta = theta - phi
    return (z.conjugate() * cmath.exp(1j * theta) * math.cosh(r)
            - z * cmath.exp(-1j * theta_zeta) * math.sinh(r))


_HELPERS = {
    "f_p": f_p,
    "g_p": g_p,
    "beta_theta_zeta": beta_theta_zeta,
    "beta_prime_theta_zeta": beta_prime_theta_zeta,
    "beta_z_zeta": beta_z_zeta,
    "beta_theta_z_zeta": beta_theta_z_zeta,
}


def helper_values(kind: str, **params):
    """Evaluate one of the auxiliary quantities by name."""
    try:
        func = _HELPERS[kind]
    except KeyError:
        raise ParamOutOfDomain(f"unknown helper {kind!r}") from None
    return func(**params)


def _check_prob(p):
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfDomain(f"probability must lie in [0, 1], got {p!r}")


def _check_lam(lam, open_left=False):
    lo_ok = lam > 0.0 if open_left else lam >= 0.0
    if not (lo_ok and lam < 1.0):
        raise ParamOutOfDomain(f"lambda out of domain: {lam!r}")


def _check_level(name, v, lo=0):
    if int(v) != v or v < lo:
        raise ParamOutOfDomain(f"{name} must be an integer >= {lo}, got {v!r}")
    return int(v)


def _weights(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size == 0 or np.any(w < 0) or abs(w.sum() - 1) > 1e-10:
        raise ParamOutOfDomain("weights must be a probability vector")
    return w


def _pair(a, b):
    """``sqrt(ab) (sqrt a - sqrt b)^2 / (a + b)``, zero when both vanish."""
    s = a + b
    if s <= 0:
        return 0.0
    return math.sqrt(a * b) * (math.sqrt(a) - math.sqrt(b)) ** 2 / s


def _thermal_x(lam):
    return 2 * math.sqrt(lam) * (1 - math.sqrt(lam)) ** 2 / (1 - lam ** 2)


def _thermal_l(lam):
    return 4 * lam / (1 + lam ** 2)


def _sinh2(zeta):
    return math.sinh(2 * abs(zeta)) ** 2


# ---------------------------------------------------------------------------
# qubit

def qubit_eigenvectors(r: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvectors for ``(1 + r)/2`` and ``(1 - r)/2`` of the Bloch state."""
    r1, r2, r3 = (float(x) for x in r)
    norm = math.sqrt(r1 * r1 + r2 * r2 + r3 * r3)
    if r1 == 0.0 and r2 == 0.0:
        up, down = np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)
        return (up, down) if r3 >= 0 else (down, up)
    c = complex(r1, -r2)
    phi1 = np.array([c, -(r3 - norm)]) / math.sqrt(2 * norm * (norm - r3))
    phi2 = np.array([c, -(r3 + norm)]) / math.sqrt(2 * norm * (norm + r3))
    return phi1, phi2


def qubit_discord_closed(r: Sequence[float], H) -> float:
    """Qubit discord ``(r^2 - 1 + sqrt(1 - r^2)) |<phi_1|H|phi_2>|^2``."""
    r = [float(x) for x in r]
    norm2 = sum(x * x for x in r)
    if norm2 > (1 + 1e-12) ** 2:
        raise BlochOutOfBall(f"|r| = {math.sqrt(norm2)!r} exceeds 1")
    norm2 = min(norm2, 1.0)
    if norm2 == 0.0:
        return 0.0
    phi1, phi2 = qubit_eigenvectors(r)
    h12 = phi1.conj() @ np.asarray(H, dtype=complex) @ phi2
    return _qubit_coeff(norm2) * abs(h12) ** 2


def _qubit_coeff(norm2):
    return norm2 - 1 + math.sqrt(1 - norm2)


@_family("QUBIT", ("r1", "r2", "r3"), ("hx", "hy", "hz", "h12"))
def _qubit(r1, r2, r3, hx=0.0, hy=0.0, hz=0.0, h12=None):
    if h12 is not None:
        norm2 = r1 * r1 + r2 * r2 + r3 * r3
        if norm2 > (1 + 1e-12) ** 2:
            raise BlochOutOfBall(f"|r|^2 = {norm2!r} exceeds 1")
        return _qubit_coeff(min(norm2, 1.0)) * abs(complex(h12)) ** 2
    H = hx * PAULI_X + hy * PAULI_Y + hz * PAULI_Z
    return qubit_discord_closed((r1, r2, r3), H)


# ---------------------------------------------------------------------------
# Hamiltonian a^dagger a

@_family("FOCKDIAG_N", ("weights",))
def _fockdiag_n(weights):
    _weights(weights)
    return 0.0


@_family("DISP_FOCKDIAG_N", ("weights", "z"))
def _disp_fockdiag_n(weights, z):
    return abs(complex(z)) ** 2 * _fockdiag_x(weights)


@_family("SQZ_FOCKDIAG_N", ("weights", "zeta"))
def _sqz_fockdiag_n(weights, zeta):
    w = _weights(weights)
    total = 0.0
    for n in range(w.size - 2):
        total += _pair(w[n + 2], w[n]) * (n * n + 3 * n + 2)
    return _sinh2(zeta) / 2 * total


@_family("DISP_THERMAL_N", ("lam", "z"))
def _disp_thermal_n(lam, z):
    _check_lam(lam)
    return abs(complex(z)) ** 2 * _thermal_x(lam)


@_family("SQZ_THERMAL_N", ("lam", "zeta"))
def _sqz_thermal_n(lam, zeta):
    _check_lam(lam)
    return lam * _sinh2(zeta) / (1 + lam ** 2)


@_family("GAUSSIAN_N", ("lam", "z", "zeta"))
def _gaussian_n(lam, z, zeta):
    _check_lam(lam)
    beta = beta_z_zeta(z, zeta)
    return lam * _sinh2(zeta) / (1 + lam ** 2) + abs(beta) ** 2 * _thermal_x(lam)


@_family("MIXTURE_N", ("p", "m", "n"))
def _mixture_n(p, m, n):
    _check_prob(p)
    m, n = _check_level("m", m), _check_level("n", n)
    if m == n:
        raise ParamOutOfDomain("levels must differ")
    if m * n != 0:
        return 0.0
    k = m + n
    return k * k * p * p * f_p(p) / (4 * ((1 - p) ** 2 + p ** 2))


# ---------------------------------------------------------------------------
# Hamiltonian X_theta

@_family("FOCKDIAG_X", ("weights",), ("theta",))
def _fockdiag_x(weights, theta=0.0):
    w = _weights(weights)
    return 2 * sum(_pair(w[n], w[n + 1]) * (n + 1) for n in range(w.size - 1))


@_family("SQZ_FOCKDIAG_X", ("weights", "theta", "zeta"))
def _sqz_fockdiag_x(weights, theta, zeta):
    return abs(beta_theta_zeta(theta, zeta)) ** 2 * _fockdiag_x(weights)


@_family("TWO_LEVEL_X", ("p",), ("theta",))
def _two_level_x(p, theta=0.0):
    return g_p(p)


@_family("RHO_PK_LPOWER", ("p", "k", "l"), ("theta",))
def _rho_pk_lpower(p, k, l, theta=0.0):
    _check_prob(p)
    k, l = _check_level("k", k, 1), _check_level("l", l, 1)
    return g_p(p) * math.factorial(k) if k == l else 0.0


@_family("THERMAL_X", ("lam",), ("theta",))
def _thermal_x_family(lam, theta=0.0):
    _check_lam(lam)
    return _thermal_x(lam)


@_family("TRUNC_THERMAL_X", ("lam",), ("theta",))
def _trunc_thermal_x(lam, theta=0.0):
    _check_lam(lam, open_left=True)
    return _thermal_x(lam) * (2 - lam)


@_family("PA_THERMAL_X", ("lam",), ("theta", "eps"))
def _pa_thermal_x(lam, theta=0.0, eps=SERIES_EPS):
    _check_lam(lam, open_left=True)
    s = math.sqrt(lam)
    # Individual terms nearly vanish around n = lam / (1 - lam), so the tail
    # test only starts once the terms decay geometrically.
    start = max(lam / (1 - lam), 2 / -math.log(lam)) + 2
    total = 0.0
    prev = math.inf
    for n in range(1, MAX_TERMS + 1):
        p_ln = (math.sqrt(n * (n + 1) ** 3) * (math.sqrt((n + 1) * lam) - math.sqrt(n)) ** 2
                / ((n + 1) * lam + n))
        term = p_ln * lam ** n
        total += term
        if n > start and term < prev:
            ratio = term / prev
            if term * ratio / (1 - ratio) <= eps * total:
                return 2 * (1 - lam) ** 2 / s * total
        prev = term
    raise SeriesNotConverged(f"PA_THERMAL_X at lambda={lam!r} after {MAX_TERMS} terms")


@_family("GAUSSIAN_X", ("lam", "theta", "zeta"), ("z",))
def _gaussian_x(lam, theta, zeta, z=0.0):
    _check_lam(lam)
    return abs(beta_theta_zeta(theta, zeta)) ** 2 * _thermal_x(lam)


@_family("MIXTURE_X", ("p", "m", "n", "theta"))
def _mixture_x(p, m, n, theta):
    _check_prob(p)
    m, n = _check_level("m", m), _check_level("n", n)
    if m == n:
        raise ParamOutOfDomain("levels must differ")
    if 0 in (m, n):
        if m + n != 1:
            return 0.0
        return (1 - p * p * math.cos(theta) ** 2 / (2 * p * p - 2 * p + 1)) * f_p(p)
    if 1 in (m, n):
        return g_p(p) / 2
    return 0.0


@_family("MIXTURE_HALF_X", ("n", "theta"))
def _mixture_half_x(n, theta):
    n = _check_level("n", n, 1)
    if n != 1:
        return 0.0
    return 0.25 * (math.sqrt(2) - 1) * (1 + math.sin(theta) ** 2)


# ---------------------------------------------------------------------------
# Hamiltonian Lambda_theta

@_family("FOCKDIAG_L", ("weights",), ("theta",))
def _fockdiag_l(weights, theta=0.0):
    w = _weights(weights)
    return 2 * sum(_pair(w[n], w[n + 2]) * (n + 1) * (n + 2) for n in range(w.size - 2))


@_family("DISP_FOCKDIAG_L", ("weights", "z"), ("theta",))
def _disp_fockdiag_l(weights, z, theta=0.0):
    return _fockdiag_l(weights) + 4 * abs(complex(z)) ** 2 * _fockdiag_x(weights)


@_family("SQZ_FOCKDIAG_L", ("weights", "theta", "zeta"))
def _sqz_fockdiag_l(weights, theta, zeta):
    return abs(beta_prime_theta_zeta(theta, zeta)) ** 2 * _fockdiag_l(weights)


@_family("RHO_PK_L", ("p", "k"), ("theta",))
def _rho_pk_l(p, k, theta=0.0):
    _check_prob(p)
    k = _check_level("k", k, 1)
    return 2 * g_p(p) if k == 2 else 0.0


@_family("THERMAL_L", ("lam",), ("theta",))
def _thermal_l_family(lam, theta=0.0):
    _check_lam(lam)
    return _thermal_l(lam)


@_family("DISP_THERMAL_L", ("lam", "z"), ("theta",))
def _disp_thermal_l(lam, z, theta=0.0):
    _check_lam(lam)
    return 4 * abs(complex(z)) ** 2 * _thermal_x(lam) + _thermal_l(lam)


@_family("SQZ_THERMAL_L", ("lam", "theta", "zeta"))
def _sqz_thermal_l(lam, theta, zeta):
    _check_lam(lam)
    return _thermal_l(lam) * abs(beta_prime_theta_zeta(theta, zeta)) ** 2


@_family("GAUSSIAN_L", ("lam", "theta", "z", "zeta"))
def _gaussian_l(lam, theta, z, zeta):
    _check_lam(lam)
    return (_thermal_l(lam) * abs(beta_prime_theta_zeta(theta, zeta)) ** 2
            + 4 * _thermal_x(lam) * abs(beta_theta_z_zeta(theta, z, zeta)) ** 2)


@_family("MIXTURE_L", ("p", "m", "n", "theta"))
def _mixture_l(p, m, n, theta):
    _check_prob(p)
    m, n = _check_level("m", m), _check_level("n", n)
    if m == n:
        raise ParamOutOfDomain("levels must differ")
    if 0 in (m, n):
        if m + n != 2:
            return 0.0
        return (2 - 2 * p * p * math.cos(theta) ** 2 / (2 * p * p - 2 * p + 1)) * f_p(p)
    return g_p(p) if 2 in (m, n) else 0.0


@_family("MIXTURE_HALF_L", ("n", "theta"))
def _mixture_half_l(n, theta):
    n = _check_level("n", n, 1)
    if n != 2:
        return 0.0
    return 0.25 * (math.sqrt(2) - 1) * (3 - math.cos(2 * theta))

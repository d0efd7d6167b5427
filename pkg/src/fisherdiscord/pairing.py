"""Spectral counterparts of the closed-form families.

For every family id this module builds the matching state and Hamiltonian
as explicit matrices, so that :func:`spectral_report` can evaluate the
discord numerically at a converged Fock cut-off and be compared with
:func:`fisherdiscord.closed_forms.evaluate_closed_form`.
"""

import math
import zlib
from dataclasses import replace
from typing import Callable, Dict, List, Tuple

import numpy as np

from . import states
from .closed_forms import FormulaFamily, family_ids
from .errors import ParamOutOfDomain
from .fock import FockConfig, converge, ladder_power, number_op, quad_squared, quadrature
from .linalg import PAULI_X, PAULI_Y, PAULI_Z, eig_hermitian
from .measures import DiscordReport, fisher_discord

Builder = Callable[[dict, FockConfig], Tuple[np.ndarray, np.ndarray]]

_BUILDERS: Dict[str, Builder] = {}


def _builds(*ids):
    def register(func):
        for i in ids:
            _BUILDERS[i] = func
        return func
    return register


def _thermal(params, cfg):
    return states.thermal(params["lam"], cfg, renormalize=True)


def _fd(params, cfg):
    return states.fock_diagonal(params["weights"], cfg)


def _ham(family_id: str, params: dict, cfg: FockConfig) -> np.ndarray:
    theta = params.get("theta", 0.0)
    suffix = family_id.rsplit("_", 1)[-1]
    if family_id in ("MIXTURE_HALF_X",) or suffix == "X":
        return quadrature(theta, cfg)
    if family_id in ("MIXTURE_HALF_L", "RHO_PK_L") or suffix == "L":
        return quad_squared(theta, cfg)
    if suffix == "N":
        return number_op(cfg)
    raise ParamOutOfDomain(f"no Hamiltonian for {family_id}")


@_builds("FOCKDIAG_N", "FOCKDIAG_X", "FOCKDIAG_L")
def _b_fockdiag(fid, params, cfg):
    return _fd(params, cfg)


@_builds("DISP_FOCKDIAG_N", "DISP_FOCKDIAG_L")
def _b_disp_fockdiag(fid, params, cfg):
    return states.displaced(_fd(params, cfg), params["z"], cfg)


@_builds("SQZ_FOCKDIAG_N", "SQZ_FOCKDIAG_X", "SQZ_FOCKDIAG_L")
def _b_sqz_fockdiag(fid, params, cfg):
    return states.squeezed(_fd(params, cfg), params["zeta"], cfg)


@_builds("THERMAL_X", "THERMAL_L")
def _b_thermal(fid, params, cfg):
    return _thermal(params, cfg)


@_builds("DISP_THERMAL_N", "DISP_THERMAL_L")
def _b_disp_thermal(fid, params, cfg):
    return states.displaced(_thermal(params, cfg), params["z"], cfg)


@_builds("SQZ_THERMAL_N", "SQZ_THERMAL_L")
def _b_sqz_thermal(fid, params, cfg):
    return states.squeezed(_thermal(params, cfg), params["zeta"], cfg)


@_builds("GAUSSIAN_N", "GAUSSIAN_X", "GAUSSIAN_L")
def _b_gaussian(fid, params, cfg):
    return states.gaussian(params["lam"], params["zeta"], params.get("z", 0.0), cfg,
                           renormalize=True)


@_builds("TRUNC_THERMAL_X")
def _b_trunc_thermal(fid, params, cfg):
    return states.truncated_thermal(params["lam"], cfg, renormalize=True)


@_builds("PA_THERMAL_X")
def _b_pa_thermal(fid, params, cfg):
    return states.photon_added_thermal(params["lam"], cfg, renormalize=True)


@_builds("MIXTURE_N", "MIXTURE_X", "MIXTURE_L")
def _b_mixture(fid, params, cfg):
    return states.superposition_mixture(params["p"], params["m"], params["n"], cfg)


@_builds("MIXTURE_HALF_X", "MIXTURE_HALF_L")
def _b_mixture_half(fid, params, cfg):
    return states.superposition_mixture(0.5, 0, params["n"], cfg)


@_builds("TWO_LEVEL_X")
def _b_two_level(fid, params, cfg):
    return states.two_level_fock(params["p"], 1, cfg)


@_builds("RHO_PK_LPOWER", "RHO_PK_L")
def _b_rho_pk(fid, params, cfg):
    return states.two_level_fock(params["p"], params["k"], cfg)


def spectral_pair(family: FormulaFamily, cfg: FockConfig) -> Tuple[np.ndarray, np.ndarray]:
    """State and Hamiltonian whose discord the family's formula describes."""
    fid = family.family_id
    params = dict(family.params)
    if fid == "QUBIT":
        return _qubit_pair(params)
    try:
        build = _BUILDERS[fid]
    except KeyError:
        raise ParamOutOfDomain(f"unknown family {fid!r}") from None
    rho = build(fid, params, cfg)
    if fid == "RHO_PK_LPOWER":
        H = ladder_power(int(params["l"]), params.get("theta", 0.0), cfg)
    else:
        H = _ham(fid, params, cfg)
    return rho, H


def _qubit_pair(params):
    r = (params["r1"], params["r2"], params["r3"])
    rho = states.qubit_from_bloch(r)
    if params.get("h12") is not None:
        # Build H from the numerical eigenbasis, largest eigenvalue first.
        _, V = eig_hermitian(rho)
        v1, v2 = V[:, 1], V[:, 0]
        h12 = complex(params["h12"])
        H = h12 * np.outer(v1, v2.conj())
        return rho, H + H.conj().T
    H = (params.get("hx", 0.0) * PAULI_X + params.get("hy", 0.0) * PAULI_Y
         + params.get("hz", 0.0) * PAULI_Z)
    return rho, H


def is_truncated(family_id: str) -> bool:
    return family_id != "QUBIT"


def spectral_report(family: FormulaFamily, cfg: FockConfig = FockConfig()) -> DiscordReport:
    """Discord of the family's state, grown in cut-off until ``C`` settles."""
    if not is_truncated(family.family_id):
        rho, H = spectral_pair(family, cfg)
        return fisher_discord(rho, H)

    def evaluate(c: FockConfig) -> DiscordReport:
        rho, H = spectral_pair(family, c)
        return fisher_discord(rho, H)

    report, dim, ok = converge(evaluate, cfg, scalar=lambda r: r.c)
    return replace(report, truncation_dim=dim, converged=ok)


# ---------------------------------------------------------------------------
# deterministic parameter grids for the closed-form / spectral comparison

def _rng(family_id: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(family_id.encode())])


def _polar(rng, rmax):
    return complex(rng.uniform(0, rmax) * np.exp(1j * rng.uniform(0, 2 * math.pi)))


def _weights(rng):
    size = int(rng.integers(2, 7))
    w = rng.dirichlet(np.ones(size))
    return tuple(float(x) for x in w / w.sum())


def _sample(fid: str, rng: np.random.Generator, i: int) -> dict:
    theta = float(rng.uniform(0, 2 * math.pi))
    if fid == "QUBIT":
        v = rng.standard_normal(3)
        v *= rng.random() ** (1 / 3) / np.linalg.norm(v)
        h = rng.standard_normal(3)
        return dict(r1=float(v[0]), r2=float(v[1]), r3=float(v[2]),
                    hx=float(h[0]), hy=float(h[1]), hz=float(h[2]))
    if "FOCKDIAG" in fid:
        out = dict(weights=_weights(rng))
        if fid.startswith("DISP"):
            out["z"] = _polar(rng, 1.5)
        if fid.startswith("SQZ"):
            out["zeta"] = _polar(rng, 0.8)
        if not fid.endswith("_N"):
            out["theta"] = theta
        return out
    if fid in ("THERMAL_X", "THERMAL_L", "TRUNC_THERMAL_X", "PA_THERMAL_X"):
        return dict(lam=float(rng.uniform(0.02, 0.9)), theta=theta)
    if fid in ("DISP_THERMAL_N", "DISP_THERMAL_L"):
        out = dict(lam=float(rng.uniform(0.02, 0.8)), z=_polar(rng, 1.5))
        if fid.endswith("_L"):
            out["theta"] = theta
        return out
    if fid in ("SQZ_THERMAL_N", "SQZ_THERMAL_L"):
        out = dict(lam=float(rng.uniform(0.02, 0.6)), zeta=_polar(rng, 0.8))
        if fid.endswith("_L"):
            out["theta"] = theta
        return out
    if fid.startswith("GAUSSIAN"):
        out = dict(lam=float(rng.uniform(0.0, 0.6)), zeta=_polar(rng, 0.8), z=_polar(rng, 1.5))
        if not fid.endswith("_N"):
            out["theta"] = theta
        return out
    if fid.startswith("MIXTURE_HALF"):
        return dict(n=int(rng.integers(1, 5)), theta=theta)
    if fid.startswith("MIXTURE"):
        pairs = [(0, 1), (1, 0), (0, 2), (0, 3), (1, 2), (2, 1), (1, 3), (2, 3), (3, 4), (4, 2)]
        m, n = pairs[i % len(pairs)]
        out = dict(p=float(rng.uniform(0, 1)), m=m, n=n)
        if not fid.endswith("_N"):
            out["theta"] = theta
        return out
    if fid == "TWO_LEVEL_X":
        return dict(p=float(rng.uniform(0, 1)), theta=theta)
    if fid == "RHO_PK_LPOWER":
        k = int(rng.integers(1, 6))
        l = k if i % 2 == 0 else int(rng.integers(1, 6))
        return dict(p=float(rng.uniform(0, 1)), k=k, l=l, theta=theta)
    if fid == "RHO_PK_L":
        k = 2 if i % 2 == 0 else int(rng.integers(1, 6))
        return dict(p=float(rng.uniform(0, 1)), k=k, theta=theta)
    raise ParamOutOfDomain(f"no sampler for {fid!r}")


def oracle_points(family_id: str, count: int = 20, seed: int = 0) -> List[FormulaFamily]:
    """``count`` reproducible in-domain parameter points for one family."""
    rng = _rng(family_id, seed)
    return [FormulaFamily(family_id, _sample(family_id, rng, i)) for i in range(count)]


def all_oracle_points(count: int = 20, seed: int = 0) -> List[FormulaFamily]:
    return [pt for fid in family_ids() for pt in oracle_points(fid, count, seed)]

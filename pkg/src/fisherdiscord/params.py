"""Derived sweep parameters for the closed-form families.

Besides a family's own parameters, sweeps and extremum searches accept:

``<x>_abs``, ``<x>_arg``
    modulus and argument of the complex parameter ``x`` (``z`` or ``zeta``)
``theta_prime``
    ``2 theta - arg zeta`` for ``GAUSSIAN_X``; ``theta`` is solved for
``theta_z``, ``theta_zeta``
    ``theta - 2 arg z`` and ``theta - arg zeta`` for ``GAUSSIAN_L``;
    ``arg z`` and ``arg zeta`` are solved for at the given ``theta``
"""

import cmath
from typing import Dict, Mapping

from .closed_forms import family_params
from .errors import ParamOutOfDomain

COMPLEX_PARAMS = ("z", "zeta")
DERIVED = {
    "GAUSSIAN_X": ("theta_prime",),
    "GAUSSIAN_L": ("theta_z", "theta_zeta"),
}


def check_family_params(family: str, param: str, fixed: Mapping[str, object]):
    """Reject parameter names the family does not know, directly or as derived."""
    required, optional = family_params(family)
    allowed = set(required + optional) | set(DERIVED.get(family, ()))
    allowed |= {f"{c}_{part}" for c in COMPLEX_PARAMS if c in required + optional
                for part in ("abs", "arg")}
    for key in [param, *fixed]:
        if key not in allowed:
            raise ParamOutOfDomain(f"{family} has no parameter {key!r}")


def resolve_params(family: str, params: Mapping[str, object]) -> Dict[str, object]:
    """Map derived parameters onto the family's own ones."""
    out = dict(params)
    for c in COMPLEX_PARAMS:
        if f"{c}_abs" in out or f"{c}_arg" in out:
            base = complex(out.pop(c, 0.0))
            r = float(out.pop(f"{c}_abs", abs(base)))
            phi = float(out.pop(f"{c}_arg", cmath.phase(base)))
            out[c] = cmath.rect(r, phi)
    if family == "GAUSSIAN_X" and "theta_prime" in out:
        phi = cmath.phase(complex(out.get("zeta", 0.0)))
        out["theta"] = 0.5 * (float(out.pop("theta_prime")) + phi)
    if family == "GAUSSIAN_L":
        theta = float(out.get("theta", 0.0))
        out["theta"] = theta
        if "theta_zeta" in out:
            zeta = complex(out.get("zeta", 0.0))
            out["zeta"] = cmath.rect(abs(zeta), theta - float(out.pop("theta_zeta")))
        if "theta_z" in out:
            z = complex(out.get("z", 0.0))
            out["z"] = cmath.rect(abs(z), 0.5 * (theta - float(out.pop("theta_z"))))
    return out

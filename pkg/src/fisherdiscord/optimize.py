"""Golden-section extremum search over one closed-form parameter."""

import math
from typing import Callable, Mapping, Tuple

from .closed_forms import FormulaFamily, evaluate_closed_form
from .errors import ParamOutOfDomain
from .params import check_family_params, resolve_params

INV_PHI = (math.sqrt(5) - 1) / 2
BRACKET_TOL = 1e-7


def golden_section(f: Callable[[float], float], lo: float, hi: float,
                   tol: float = BRACKET_TOL) -> Tuple[float, float]:
    """Minimize a unimodal ``f`` on ``[lo, hi]``.

    Shrinks the bracket until it is narrower than ``tol`` and returns the
    midpoint of the final bracket with its function value.
    """
    a, b = min(lo, hi), max(lo, hi)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a >= tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def extremum(family_id: str, parameter: str, bracket: Tuple[float, float],
             mode: str = "max", fixed: Mapping[str, object] = None,
             tol: float = BRACKET_TOL) -> Tuple[float, float]:
    """Locate the maximum or minimum of a family in one parameter.

    ``parameter`` and ``fixed`` may use the derived names understood by
    :func:`fisherdiscord.params.resolve_params`. Returns ``(argopt, value)``.
    """
    if mode not in ("max", "min"):
        raise ValueError(f"mode must be 'max' or 'min', got {mode!r}")
    lo, hi = (float(x) for x in bracket)
    if not lo < hi:
        raise ParamOutOfDomain(f"empty bracket ({lo}, {hi})")
    base = dict(fixed or {})
    check_family_params(family_id, parameter, base)
    sign = -1.0 if mode == "max" else 1.0

    def value(x):
        params = resolve_params(family_id, {**base, parameter: x})
        return evaluate_closed_form(FormulaFamily(family_id, params))

    # Probe both ends so a bracket outside the domain fails before the search.
    value(lo)
    value(hi)
    x, _ = golden_section(lambda t: sign * value(t), lo, hi, tol)
    return x, value(x)

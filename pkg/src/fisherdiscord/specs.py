"""Parser for the ``name:key=value,...`` state and Hamiltonian specs.

Complex values are written ``modulus@argument`` (argument in radians), e.g.
``z=1@0.785398``. The symbol ``lambda0`` stands for the noise level that
maximizes the thermal quadrature discord.
"""

import math
import re
from typing import Callable, Dict, List, Tuple, Union

import numpy as np

from . import states
from .closed_forms import lambda0
from .fock import FockConfig, ladder_power, number_op, quad_squared, quadrature
from .linalg import PAULI, PAULI_X, PAULI_Y, PAULI_Z

Value = Union[int, float, complex, str]


class SpecError(ValueError):
    """Malformed spec string (reported with exit code 2)."""


# pi, -pi, 2pi, pi/4, 3*pi/2, ...
_PI_MULTIPLE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$")


def parse_value(text: str) -> Value:
    """Read a number: integer, real, ``a+bi``, ``mod@arg``, a multiple of
    ``pi`` or the symbol ``lambda0``."""
    text = text.strip()
    if not text:
        raise SpecError("empty value")
    if text == "lambda0":
        return lambda0()
    m = _PI_MULTIPLE.match(text)
    if m:
        sign, factor, divisor = m.groups()
        value = float(factor or 1) * math.pi / float(divisor or 1)
        return -value if sign == "-" else value
    if "@" in text:
        mod, _, arg = text.partition("@")
        r, phi = _number(mod), _number(arg)
        return complex(r * math.cos(phi), r * math.sin(phi))
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise SpecError(f"cannot read {text!r} as a number") from None


def _number(text: str) -> float:
    v = parse_value(text)
    if isinstance(v, complex) or isinstance(v, str):
        raise SpecError(f"expected a real number, got {text!r}")
    return float(v)


def parse_spec(text: str) -> Tuple[str, Dict[str, Value], List[Value]]:
    """Split ``name:key=value,...`` into the name, keyword values and
    positional values."""
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if not name:
        raise SpecError(f"missing name in spec {text!r}")
    kwargs: Dict[str, Value] = {}
    positional: List[Value] = []
    if rest.strip():
        for item in rest.split(","):
            if "=" in item:
                key, _, val = item.partition("=")
                key = key.strip()
                if not key:
                    raise SpecError(f"empty key in {text!r}")
                kwargs[alias(key)] = parse_value(val)
            elif item.strip().isidentifier() and item.strip() not in ("pi", "lambda0"):
                positional.append(item.strip())  # a bare name such as a Pauli axis
            else:
                positional.append(parse_value(item))
    return name, kwargs, positional


def parse_assignment(text: str) -> Tuple[str, Value]:
    key, sep, val = text.partition("=")
    if not sep or not key.strip():
        raise SpecError(f"expected key=value, got {text!r}")
    return alias(key.strip()), parse_value(val)


def alias(key: str) -> str:
    """Accept ``lambda`` for the thermal parameter ``lam``."""
    return "lam" if key == "lambda" else key


def _need(kwargs, *keys):
    missing = [k for k in keys if k not in kwargs]
    if missing:
        raise SpecError(f"missing {', '.join(missing)}")
    return [kwargs[k] for k in keys]


def _real(v, name):
    if isinstance(v, (complex, str)):
        raise SpecError(f"{name} must be real, got {v!r}")
    return float(v)


def _level(v, name):
    if isinstance(v, (complex, str)) or int(v) != v:
        raise SpecError(f"{name} must be an integer, got {v!r}")
    return int(v)


# Keyword parameters understood by each spec name (used to route sweeps).
STATE_KEYS = {
    "bloch": ("r1", "r2", "r3"),
    "fock": (),
    "thermal": ("lam",),
    "truncated-thermal": ("lam",),
    "photon-added-thermal": ("lam",),
    "mixture": ("p", "m", "n"),
    "two-level": ("p", "k"),
    "gaussian": ("lam", "zeta", "z"),
    "counterexample": (),
}
HAMILTONIAN_KEYS = {
    "number": (),
    "quadrature": ("theta",),
    "quad2": ("theta",),
    "ladder": ("l", "theta"),
    "pauli": ("hx", "hy", "hz"),
}

StateBuilder = Callable[[FockConfig], np.ndarray]


def state_builder(text: str) -> Tuple[StateBuilder, bool]:
    """Return a constructor for the state and whether it lives in Fock space."""
    name, kw, pos = parse_spec(text)
    if name == "bloch":
        r = [_real(v, "r") for v in pos] if pos else [
            _real(v, k) for k, v in zip("r1 r2 r3".split(), _need(kw, "r1", "r2", "r3"))]
        if len(r) != 3:
            raise SpecError("bloch needs three components")
        return (lambda cfg: states.qubit_from_bloch(r)), False
    if name == "fock":
        w = [_real(v, "weight") for v in pos]
        if not w:
            raise SpecError("fock needs at least one weight")
        return (lambda cfg: states.fock_diagonal(w, cfg)), True
    if name in ("thermal", "truncated-thermal", "photon-added-thermal"):
        (lam,) = _need(kw, "lam")
        lam = _real(lam, "lambda")
        ctor = {"thermal": states.thermal,
                "truncated-thermal": states.truncated_thermal,
                "photon-added-thermal": states.photon_added_thermal}[name]
        return (lambda cfg: ctor(lam, cfg, renormalize=True)), True
    if name == "mixture":
        p, m, n = _need(kw, "p", "m", "n")
        p, m, n = _real(p, "p"), _level(m, "m"), _level(n, "n")
        return (lambda cfg: states.superposition_mixture(p, m, n, cfg)), True
    if name == "two-level":
        p, k = _need(kw, "p", "k")
        p, k = _real(p, "p"), _level(k, "k")
        return (lambda cfg: states.two_level_fock(p, k, cfg)), True
    if name == "gaussian":
        lam = _real(kw.get("lam", 0.0), "lambda")
        zeta, z = complex(kw.get("zeta", 0.0)), complex(kw.get("z", 0.0))
        return (lambda cfg: states.gaussian(lam, zeta, z, cfg, renormalize=True)), True
    if name == "counterexample":
        return states.counterexample_state, True
    raise SpecError(f"unknown state {name!r}")


def hamiltonian_builder(text: str) -> Tuple[Callable[[FockConfig], np.ndarray], bool]:
    """Return a constructor for the Hamiltonian and whether it acts on Fock space."""
    name, kw, pos = parse_spec(text)
    theta = _real(kw.get("theta", 0.0), "theta")
    if name == "number":
        return number_op, True
    if name == "quadrature":
        return (lambda cfg: quadrature(theta, cfg)), True
    if name == "quad2":
        return (lambda cfg: quad_squared(theta, cfg)), True
    if name == "ladder":
        (l,) = _need(kw, "l")
        l = _level(l, "l")
        return (lambda cfg: ladder_power(l, theta, cfg)), True
    if name == "pauli":
        if pos:
            if len(pos) != 1 or pos[0] not in PAULI:
                raise SpecError("pauli takes one of x, y, z")
            H = PAULI[pos[0]]
        else:
            H = (_real(kw.get("hx", 0.0), "hx") * PAULI_X + _real(kw.get("hy", 0.0), "hy") * PAULI_Y
                 + _real(kw.get("hz", 0.0), "hz") * PAULI_Z)
        return (lambda cfg: H), False
    raise SpecError(f"unknown Hamiltonian {name!r}")


def substitute(text: str, key: str, value: float) -> str:
    """Return ``text`` with ``key`` set to ``value`` (used by sweeps)."""
    name, _, rest = text.strip().partition(":")
    items = [i for i in rest.split(",") if i.strip()] if rest.strip() else []
    kept = [i for i in items if alias(i.partition("=")[0].strip()) != alias(key)]
    kept.append(f"{key}={_literal(value)}")
    return f"{name}:{','.join(kept)}"


def _literal(value) -> str:
    if isinstance(value, complex):
        return f"{abs(value)!r}@{math.atan2(value.imag, value.real)!r}"
    return repr(value)

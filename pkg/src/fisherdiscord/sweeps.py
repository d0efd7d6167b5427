"""Parameter sweeps, CSV output and the figure presets.

A sweep evaluates either a closed-form family (optionally alongside its
spectral counterpart) or an arbitrary state/Hamiltonian spec pair on a
linear grid of one parameter, and writes the rows as CSV.
"""

import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from . import specs
from .closed_forms import FormulaFamily, evaluate_closed_form, lambda0
from .errors import ParamOutOfDomain
from .fock import FockConfig, converge
from .measures import fisher_discord
from .params import check_family_params, resolve_params
from .pairing import spectral_report

@dataclass(frozen=True)
class Grid:
    """``count`` linearly spaced points from ``start`` to ``stop`` inclusive."""

    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise ParamOutOfDomain(f"a grid needs at least 2 points, got {self.count}")
        if not self.start < self.stop:
            raise ParamOutOfDomain(f"grid start {self.start} must be below stop {self.stop}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """One curve: what to evaluate, which parameter varies, and how."""

    param: str
    grid: Grid
    family: Optional[str] = None
    state: Optional[str] = None
    hamiltonian: Optional[str] = None
    fixed: Tuple[Tuple[str, object], ...] = ()
    fock: FockConfig = field(default_factory=FockConfig)
    spectral: bool = True
    label: str = ""

    def __post_init__(self):
        if (self.family is None) == (self.state is None or self.hamiltonian is None):
            raise ParamOutOfDomain("give either a family or a state and Hamiltonian spec")
        if self.family is None and not self.spectral:
            raise ParamOutOfDomain("a state/Hamiltonian sweep has no closed form to report")
        if self.family is not None:
            object.__setattr__(self, "param", specs.alias(self.param))
            check_family_params(self.family, self.param, dict(self.fixed))
        else:
            _locate(self.state, self.hamiltonian, self.param)

    @property
    def columns(self) -> Tuple[str, ...]:
        cols = ["param"]
        if self.family is not None:
            cols.append("c_closed")
        if self.spectral:
            cols += ["c_spectral", "i_f", "i_w", "used_dim", "converged"]
        return tuple(cols)


def _locate(state: str, hamiltonian: str, param: str) -> Tuple[str, str]:
    """Decide whether ``param`` belongs to the state or the Hamiltonian spec.

    ``state.<key>`` and ``ham.<key>`` force the choice.
    """
    where, _, key = param.rpartition(".")
    key = specs.alias(key)
    s_name = specs.parse_spec(state)[0]
    h_name = specs.parse_spec(hamiltonian)[0]
    in_state = key in specs.STATE_KEYS.get(s_name, ())
    in_ham = key in specs.HAMILTONIAN_KEYS.get(h_name, ())
    if where == "state" and in_state or where == "" and in_state:
        return "state", key
    if where in ("ham", "") and in_ham:
        return "ham", key
    raise ParamOutOfDomain(f"{param!r} is not a parameter of {state!r} or {hamiltonian!r}")


# ---------------------------------------------------------------------------
# evaluation

def _spectral_pair_row(state: str, hamiltonian: str, fock: FockConfig):
    build_rho, rho_fock = specs.state_builder(state)
    build_h, h_fock = specs.hamiltonian_builder(hamiltonian)
    if rho_fock != h_fock:
        raise ParamOutOfDomain("state and Hamiltonian act on different spaces")
    if not rho_fock:
        r = fisher_discord(build_rho(fock), build_h(fock))
        return r.c, r.i_f, r.i_w, 2, True
    r, dim, ok = converge(lambda cfg: fisher_discord(build_rho(cfg), build_h(cfg)), fock,
                          scalar=lambda rep: rep.c)
    return r.c, r.i_f, r.i_w, dim, ok


def evaluate_point(spec: SweepSpec, x: float) -> Tuple[object, ...]:
    """One CSV row for the grid value ``x``.

    Spectral values that did not settle within the cut-off schedule are
    reported as ``nan``, together with the cut-off that was reached.
    """
    row: List[object] = [float(x)]
    if spec.family is not None:
        params = resolve_params(spec.family, {**dict(spec.fixed), spec.param: float(x)})
        fam = FormulaFamily(spec.family, params)
        row.append(evaluate_closed_form(fam))
        if spec.spectral:
            rep = spectral_report(fam, spec.fock)
            ok = True if rep.converged is None else rep.converged
            dim = 2 if rep.truncation_dim is None else rep.truncation_dim
            row += _spectral_cells(rep.c, rep.i_f, rep.i_w, dim, ok)
        return tuple(row)
    where, key = _locate(spec.state, spec.hamiltonian, spec.param)
    state, ham = spec.state, spec.hamiltonian
    for k, v in spec.fixed:
        w, kk = _locate(state, ham, k)
        if w == "state":
            state = specs.substitute(state, kk, v)
        else:
            ham = specs.substitute(ham, kk, v)
    if where == "state":
        state = specs.substitute(state, key, float(x))
    else:
        ham = specs.substitute(ham, key, float(x))
    row += _spectral_cells(*_spectral_pair_row(state, ham, spec.fock))
    return tuple(row)


def _spectral_cells(c, i_f, i_w, dim, ok):
    if not ok:
        c = i_f = i_w = math.nan
    return [c, i_f, i_w, int(dim), bool(ok)]


def run_sweep(spec: SweepSpec, jobs: int = 1) -> List[Tuple[object, ...]]:
    """Evaluate every grid point; rows come back in grid order."""
    xs = spec.grid.values()
    func = partial(evaluate_point, spec)
    if jobs <= 1:
        return [func(x) for x in xs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, xs))


# ---------------------------------------------------------------------------
# CSV

def format_cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, complex):
        return f"{format(v.real, '.17g')}{format(v.imag, '+.17g')}j"
    if isinstance(v, (tuple, list)):
        return "(" + " ".join(format_cell(u) for u in v) + ")"
    if isinstance(v, str):
        return v
    v = float(v)
    if math.isnan(v):
        return "nan"
    return format(v, ".17g")


def header_lines(spec: SweepSpec) -> List[str]:
    f = spec.fock
    lines = [f"fisherdiscord {__version__}"]
    if spec.label:
        lines.append(f"label: {spec.label}")
    if spec.family is not None:
        lines.append(f"family: {spec.family}")
    else:
        lines.append(f"state: {spec.state}")
        lines.append(f"hamiltonian: {spec.hamiltonian}")
    g = spec.grid
    lines.append(f"param: {spec.param} from {format_cell(g.start)} to {format_cell(g.stop)}, "
                 f"{g.count} points, linear")
    fixed = "; ".join(f"{k}={format_cell(v)}" for k, v in spec.fixed)
    lines.append(f"fixed: {fixed or 'none'}")
    if spec.spectral:
        lines.append(f"fock: dim={f.dim}, max_dim={f.max_dim}, conv_tol={format_cell(f.conv_tol)}, "
                     f"growth={f.growth}")
    else:
        lines.append("spectral: off")
    return ["# " + line for line in lines]


def to_csv(spec: SweepSpec, rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    for line in header_lines(spec):
        buf.write(line + "\n")
    buf.write(",".join(spec.columns) + "\n")
    for row in rows:
        if len(row) != len(spec.columns):
            raise ValueError("row width does not match the header")
        buf.write(",".join(format_cell(v) for v in row) + "\n")
    return buf.getvalue()


def read_csv(text: str) -> Tuple[Tuple[str, ...], np.ndarray]:
    """Parse a sweep CSV back into column names and a float array."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    cols = tuple(lines[0].split(","))
    data = np.array([[float(c) for c in ln.split(",")] for ln in lines[1:]], dtype=float)
    return cols, data.reshape(-1, len(cols))


def write_csv(spec: SweepSpec, path: str, jobs: int = 1) -> str:
    text = to_csv(spec, run_sweep(spec, jobs))
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)
    return text


# ---------------------------------------------------------------------------
# figure presets

FIGURES = tuple(f"fig{i}" for i in range(1, 9))


def figure_preset(name: str, fock: FockConfig = FockConfig(), spectral: bool = True,
                  points: Optional[int] = None) -> List[SweepSpec]:
    """The curves of one figure. ``points`` overrides the grid size."""
    lam0 = lambda0()

    def grid(start, stop, count):
        return Grid(start, stop, points or count)

    def spec(family, param, g, fixed, label):
        return SweepSpec(param=param, grid=g, family=family, fixed=tuple(fixed),
                         fock=fock, spectral=spectral, label=label)

    if name == "fig1":
        return [spec("GAUSSIAN_N", "zeta_abs", grid(0.0, 1.5, 151),
                     [("lam", lam), ("z", 1.0), ("zeta_arg", 0.0)], f"{name} lam={lam:.7g}")
                for lam in (0.01, lam0, 0.3, 0.8)]
    if name == "fig2":
        return [spec("GAUSSIAN_N", "lam", grid(0.01, 0.99, 99),
                     [("zeta_abs", r), ("zeta_arg", 0.0), ("z", 1.0)], f"{name} |zeta|={r:g}")
                for r in (0.01, 0.1, 0.3, 0.5)]
    if name == "fig3":
        return [spec("MIXTURE_N", "p", grid(0.0, 1.0, 101), [("m", 0), ("n", 1)], name)]
    if name == "fig4":
        return [spec("TWO_LEVEL_X", "p", grid(0.0, 1.0, 201), [("theta", 0.0)], name)]
    if name == "fig5":
        return [spec(fid, "lam", grid(0.005, 0.995, 199), [("theta", 0.0)], f"{name} {fid}")
                for fid in ("THERMAL_X", "TRUNC_THERMAL_X", "PA_THERMAL_X")]
    if name == "fig6":
        angles = (("0", 0.0), ("pi/4", math.pi / 4), ("pi/2", math.pi / 2), ("pi", math.pi))
        return [spec("GAUSSIAN_X", "zeta_abs", grid(0.0, 1.5, 151),
                     [("lam", lam0), ("zeta_arg", 0.0), ("theta_prime", t)],
                     f"{name} theta'={tag}")
                for tag, t in angles]
    if name == "fig7":
        angles = (("0", 0.0), ("pi/4", math.pi / 4), ("pi/2", math.pi / 2))
        return [spec("MIXTURE_X", "p", grid(0.0, 1.0, 101), [("m", 0), ("n", 1), ("theta", t)],
                     f"{name} theta={tag}")
                for tag, t in angles]
    if name == "fig8":
        angles = (("0", 0.0), ("pi/4", math.pi / 4), ("pi/2", math.pi / 2), ("pi", math.pi))
        return [spec("GAUSSIAN_L", "theta_zeta", grid(0.0, 2 * math.pi, 121),
                     [("lam", lam0), ("theta", 0.0), ("z_abs", 1.0), ("zeta_abs", 1.0),
                      ("theta_z", t)], f"{name} theta_z={tag}")
                for tag, t in angles]
    raise ParamOutOfDomain(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")


def run_figures(outdir: str, fock: FockConfig = FockConfig(), spectral: bool = True,
                names: Sequence[str] = FIGURES, jobs: int = 1,
                points: Optional[int] = None) -> List[str]:
    """Write one CSV per curve into ``outdir``; returns the file paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for name in names:
        for i, spec in enumerate(figure_preset(name, fock, spectral, points), start=1):
            path = os.path.join(outdir, f"{name}_{i}.csv")
            write_csv(spec, path, jobs)
            paths.append(path)
    return paths

"""Command-line entry point: ``fisherdiscord <command> ...``.

Exit codes: 0 success, 1 failed verification, 2 malformed input,
3 parameter outside a domain, 4 numerical failure.
"""

import argparse
import sys
import warnings
from dataclasses import replace
from typing import List, Optional, Sequence

from . import __version__
from .closed_forms import family_ids
from .errors import DomainError, NumericalError, TruncationWarning
from .fock import FockConfig, converge
from .measures import fisher_discord
from .optimize import BRACKET_TOL, extremum
from .sampling import DEFAULT_SEED
from .specs import SpecError, alias, hamiltonian_builder, parse_assignment, state_builder
from .sweeps import FIGURES, Grid, SweepSpec, run_figures, run_sweep, to_csv
from .verify import format_row, run_suite

EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_NUMERIC = 4


def _fock_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = FockConfig()
    p.add_argument("--dim", type=int, default=d.dim, help="starting Fock cut-off")
    p.add_argument("--max-dim", type=int, default=d.max_dim, help="largest Fock cut-off")
    p.add_argument("--conv-tol", type=float, default=d.conv_tol,
                   help="relative change at which the cut-off stops growing")
    return p


def _output_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("csv",), default="csv", help="output format")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for grid points")
    p.add_argument("--closed-only", action="store_true",
                   help="skip the spectral evaluation and write closed-form values only")
    return p


def _strip(prefix: str, text: str) -> str:
    return text[len(prefix):] if text.startswith(prefix) else text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fisherdiscord",
        description="SLD Fisher information, skew information and their difference.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fock, output = _fock_parent(), _output_parent()

    p = sub.add_parser("compute", parents=[fock], help="evaluate one state and Hamiltonian")
    p.add_argument("state", help="state spec, e.g. thermal:lambda=0.3")
    p.add_argument("ham", help="Hamiltonian spec, e.g. number")

    p = sub.add_parser("sweep", parents=[fock, output], help="evaluate along a parameter grid")
    p.add_argument("--family", choices=family_ids(), metavar="FAMILY")
    p.add_argument("--state", help="state spec (with --ham, instead of --family)")
    p.add_argument("--ham", help="Hamiltonian spec")
    p.add_argument("--param", required=True, help="swept parameter")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--count", type=int, default=101)
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="fixed parameter, repeatable")
    p.add_argument("--out", help="CSV path (default: standard output)")

    p = sub.add_parser("extremum", help="golden-section search over one closed-form parameter")
    p.add_argument("--family", required=True, choices=family_ids(), metavar="FAMILY")
    p.add_argument("--param", required=True)
    p.add_argument("--bracket", type=float, nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--mode", choices=("max", "min"), default="max")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--tol", type=float, default=BRACKET_TOL, help="final bracket width")

    p = sub.add_parser("verify", help="run the property suite and the closed-form grid")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--no-oracle", action="store_true", help="skip the closed-form grid")
    # Test hook: perturbs one family's closed form so the grid must fail.
    p.add_argument("--corrupt", help=argparse.SUPPRESS)

    p = sub.add_parser("figures", parents=[fock, output], help="write every figure preset")
    p.add_argument("--out", default="figures", help="output directory")
    p.add_argument("--only", nargs="+", choices=FIGURES, default=list(FIGURES))
    p.add_argument("--points", type=int, help="override the grid size of every curve")
    return parser


def _fock(args) -> FockConfig:
    return FockConfig(dim=args.dim, max_dim=args.max_dim, conv_tol=args.conv_tol)


def _assignments(items: Sequence[str]):
    return tuple(parse_assignment(item) for item in items)


def cmd_compute(args) -> int:
    build_rho, rho_fock = state_builder(_strip("state=", args.state))
    build_h, h_fock = hamiltonian_builder(_strip("ham=", args.ham))
    if rho_fock != h_fock:
        raise SpecError("state and Hamiltonian act on different spaces")
    cfg = _fock(args)
    if rho_fock:
        report, dim, ok = converge(lambda c: fisher_discord(build_rho(c), build_h(c)), cfg,
                                   scalar=lambda r: r.c)
        report = replace(report, truncation_dim=dim, converged=ok)
    else:
        report = fisher_discord(build_rho(cfg), build_h(cfg))
    print(report.as_lines())
    return 0


def cmd_sweep(args) -> int:
    if args.family is None and (args.state is None or args.ham is None):
        raise SpecError("give --family, or both --state and --ham")
    if args.family is not None and (args.state or args.ham):
        raise SpecError("--family cannot be combined with --state/--ham")
    spec = SweepSpec(
        param=args.param,
        grid=Grid(args.start, args.stop, args.count),
        family=args.family,
        state=args.state,
        hamiltonian=args.ham,
        fixed=_assignments(args.set),
        fock=_fock(args),
        spectral=not args.closed_only,
    )
    text = to_csv(spec, run_sweep(spec, args.jobs))
    if args.out:
        with open(args.out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_extremum(args) -> int:
    x, v = extremum(args.family, alias(args.param), tuple(args.bracket), args.mode,
                    dict(_assignments(args.set)), args.tol)
    print(f"argopt={x!r}")
    print(f"value={v!r}")
    return 0


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise SpecError("--trials must be at least 1")
    if args.corrupt is not None and args.corrupt not in family_ids():
        raise SpecError(f"unknown family {args.corrupt!r}")
    results = run_suite(seed=args.seed, trials=args.trials, corrupt=args.corrupt,
                        oracle=not args.no_oracle,
                        progress=lambda r: print(format_row(r), flush=True))
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        print("failed: " + ", ".join(failed))
        return EXIT_VERIFY
    return 0


def cmd_figures(args) -> int:
    paths = run_figures(args.out, _fock(args), spectral=not args.closed_only,
                        names=args.only, jobs=args.jobs, points=args.points)
    for path in paths:
        print(path)
    return 0


COMMANDS = {
    "compute": cmd_compute,
    "sweep": cmd_sweep,
    "extremum": cmd_extremum,
    "verify": cmd_verify,
    "figures": cmd_figures,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings.simplefilter("default", TruncationWarning)
    try:
        return COMMANDS[args.command](args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        # remaining bad configuration, e.g. an inconsistent --dim/--max-dim
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

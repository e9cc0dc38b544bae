"""Command-line front end: ``zetatab {list,verify,sweep,table,constants}``.

Exit codes: 0 when every verdict is CONFIRMED (or the command produces no
verdicts), 1 when any verdict is FAILED, MIXED or UNDETERMINED, 2 for usage
errors, unknown identities and domain violations.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from typing import Sequence

from . import identities as ids
from . import report, specfun
from .errors import DomainViolation, EmptyGridAfterDomainFilter, UnknownIdentity
from .identities import PARAM_NAMES, ParamPoint
from .quad import QuadConfig
from .verify import CONFIRMED, IdentityVerdict, classify, reproduce_table, sweep, verify_point

__all__ = ["parse_complex", "build_parser", "run", "main"]

ENV_MAX_LEVEL = "ZETATAB_MAX_LEVEL"

_CONSTANT_ORDER = ("euler_gamma", "catalan", "glaisher_log", "pi")


class UsageError(Exception):
    """Bad command line; reported on stderr with exit status 2."""


def parse_complex(text: str) -> complex:
    """Parse ``"re"``, ``"re+imi"``, ``"imi"`` or ``"i"`` (``j`` also accepted)."""
    t = text.strip().replace(" ", "").lower()
    if not t:
        raise ValueError("empty number")
    if t[-1] in "ij":
        head = t[:-1]
        # a bare unit imaginary: "i", "-i", "2+i"
        if head == "" or head[-1] in "+-":
            head += "1"
        t = head + "j"
    value = complex(t)
    if value != value or abs(value) == float("inf"):
        raise ValueError(f"not a finite number: {text!r}")
    return value


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid complex number {text!r} (use forms like 0.5, 1+0.5i, -2i)")


def _complex_list_arg(text: str) -> tuple[complex, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty value list")
    return tuple(_complex_arg(p) for p in parts)


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=report.FORMATS, default="markdown",
                        help="output format (default: markdown)")
    common.add_argument("--output", "-o", metavar="PATH", help="write the report here instead of stdout")

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=_positive_float,
                     help="relative tolerance (default: each identity's own)")

    parser = argparse.ArgumentParser(
        prog="zetatab",
        description="Audit closed-form evaluations of log/atanh integrals on (0, 1) "
                    "against tanh-sinh quadrature.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("list", parents=[common], help="list registered identities")

    p_verify = sub.add_parser("verify", parents=[common, tol], help="verify one identity at one parameter point")
    p_verify.add_argument("--identity", "-i", required=True)
    for name in PARAM_NAMES:
        p_verify.add_argument(f"--{name}", type=_complex_arg, metavar="Z",
                              help=f"value of {name}, e.g. 0.5 or 1+0.5i")

    p_sweep = sub.add_parser("sweep", parents=[common, tol], help="verify one identity over a parameter grid")
    p_sweep.add_argument("--identity", "-i", required=True)
    for name in PARAM_NAMES:
        p_sweep.add_argument(f"--{name}", type=_complex_list_arg, metavar="Z[,Z...]",
                             help=f"comma-separated values of {name} (default: the identity's grid)")
    p_sweep.add_argument("--workers", type=_positive_int, default=1, help="threads for grid points")

    p_table = sub.add_parser("table", parents=[common, tol], help="audit every row of the integral table")
    p_table.add_argument("--workers", type=_positive_int, default=1, help="threads for grid points")

    sub.add_parser("constants", parents=[common], help="print the classical constants")
    return parser


def _quad_config() -> QuadConfig:
    raw = os.environ.get(ENV_MAX_LEVEL)
    if raw is None or raw.strip() == "":
        return QuadConfig()
    try:
        return QuadConfig(max_level=int(raw))
    except ValueError as exc:
        raise UsageError(f"{ENV_MAX_LEVEL}={raw!r}: {exc}") from None


def _config_dict(args, qcfg: QuadConfig) -> dict:
    cfg = {
        "tol": getattr(args, "tol", None),
        "quad": {"abs_tol": qcfg.abs_tol, "max_level": qcfg.max_level, "clip_eps": qcfg.clip_eps},
    }
    if getattr(args, "identity", None):
        cfg["identity"] = args.identity
    return cfg


def _given_params(args) -> dict:
    return {name: getattr(args, name) for name in PARAM_NAMES if getattr(args, name) is not None}


def _reject_unused(ident, given: dict) -> None:
    extra = sorted(set(given) - set(ident.uses))
    if extra:
        used = ", ".join(n for n in PARAM_NAMES if n in ident.uses) or "none"
        raise UsageError(f"identity {ident.id} does not use parameter(s) {', '.join(extra)} (uses: {used})")


def _cmd_verify(args, qcfg):
    ident = ids.get(args.identity)
    given = _given_params(args)
    _reject_unused(ident, given)
    pp = ParamPoint(**given)
    msg = ids.check_domain(ident.id, pp)
    if msg:
        raise DomainViolation(f"{ident.id}: {msg}")
    rec = verify_point(ident.id, pp, args.tol, qcfg)
    matching = tuple(n for n in ident.readings if rec.quad_converged and rec.reading_rel_err[n] <= rec.tol)
    verdict = IdentityVerdict(ident.id, (rec,), classify((rec,)), ident.status_hint, (), matching)
    return [verdict]


def _cmd_sweep(args, qcfg):
    ident = ids.get(args.identity)
    given = _given_params(args)
    _reject_unused(ident, given)
    axes = []
    for name in PARAM_NAMES:
        if name not in ident.uses:
            continue
        values = given.get(name) or ident.default_grid.get(name)
        if values is None:
            raise UsageError(f"identity {ident.id} needs values for {name}")
        axes.append((name, values))
    grid = [ParamPoint(**dict(zip((n for n, _ in axes), combo)))
            for combo in itertools.product(*(v for _, v in axes))]
    return [sweep(ident.id, grid, args.tol, qcfg, workers=args.workers)]


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _exit_code(verdicts) -> int:
    return 0 if all(v.verdict == CONFIRMED for v in verdicts) else 1


def _dispatch(args) -> int:
    qcfg = _quad_config()
    config = _config_dict(args, qcfg)
    if args.command == "list":
        _emit(report.render_list(config, ids.registry(), args.format), args.output)
        return 0
    if args.command == "constants":
        values = [(name, specfun.constant(name)) for name in _CONSTANT_ORDER]
        _emit(report.render_constants(config, values, args.format), args.output)
        return 0
    if args.command == "table":
        rows = reproduce_table(args.tol, qcfg, workers=args.workers)
        _emit(report.render_table(config, rows, args.format), args.output)
        return _exit_code([v for _, v in rows])
    verdicts = _cmd_verify(args, qcfg) if args.command == "verify" else _cmd_sweep(args, qcfg)
    _emit(report.render_verdicts(args.command, config, verdicts, args.format), args.output)
    return _exit_code(verdicts)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors this way
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (UsageError, UnknownIdentity, DomainViolation, EmptyGridAfterDomainFilter) as exc:
        print(f"zetatab: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"zetatab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

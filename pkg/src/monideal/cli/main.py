"""``monideal`` command-line entry point.

Exit codes: 0 success or property holds up to the bound, 1 property fails,
2 usage/parse/evaluation error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from .. import closure, decomposition, properties
from ..errors import MonIdealError, ResourceLimitError, budget
from ..ideal import MonomialIdeal, independence_number
from ..transforms import PolarizationMap, depolarize, polarize
from ..combinatorics import Clutter
from . import report as rp
from .evaluate import EvalError, Evaluator, load_ideal_json
from .syntax import ParseError, parse

CHECKS = {
    "pp": properties.check_persistence,
    "spp": properties.check_strong_persistence,
    "sspp": properties.check_symbolic_strong_persistence,
    "ntf": properties.check_normally_torsion_free,
    "nearly-ntf": properties.classify_nearly_ntf,
    "well-nntf": properties.check_well_nearly_ntf,
    "normal": closure.check_normal,
}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--budget-gens", type=int, default=200_000, metavar="N",
                    help="largest generator or component count allowed (default 200000)")
    ap.add_argument("--budget-seconds", type=float, default=600.0, metavar="S",
                    help="wall-clock limit per command (default 600)")
    ap.add_argument("--seed", type=int, default=None,
                    help="recorded in the report; only randomized harnesses use it")
    sub = ap.add_subparsers(dest="command", required=True)

    expr_help = "expression text, '@FILE' to read a script, or '-' for stdin"
    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr", help=expr_help)

    p = sub.add_parser("ass", help="associated primes of a power, or a table of powers")
    p.add_argument("expr", help=expr_help)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--power", type=int, default=None, metavar="S")
    g.add_argument("--table", type=int, default=None, metavar="T")

    p = sub.add_parser("decompose", help="irredundant irreducible decomposition")
    p.add_argument("expr", help=expr_help)

    p = sub.add_parser("symbolic", help="symbolic power")
    p.add_argument("expr", help=expr_help)
    p.add_argument("--power", type=int, required=True, metavar="S")

    p = sub.add_parser("closure", help="integral closure and normality of the ideal itself")
    p.add_argument("expr", help=expr_help)

    p = sub.add_parser("check", help="bounded property check")
    p.add_argument("property", choices=sorted(CHECKS))
    p.add_argument("expr", help=expr_help)
    p.add_argument("--max-power", type=int, required=True, metavar="T")
    p.add_argument("--ell-max", type=int, default=None, metavar="L")

    p = sub.add_parser("beta1", help="largest set of pairwise coprime minimal generators")
    p.add_argument("expr", help=expr_help)

    p = sub.add_parser("polarize", help="polarization with its naming map (JSON-loadable)")
    p.add_argument("expr", help=expr_help)
    p.add_argument("--structured-names", action="store_true",
                   help="name shadows z_(i,j) with zero-based indices")

    p = sub.add_parser("depolarize", help="undo a polarization stored by 'polarize --format json'")
    p.add_argument("file", help="JSON file written by polarize, or '-' for stdin")
    return ap


def _read_source(arg: str) -> tuple[str, Path]:
    if arg == "-":
        return sys.stdin.read(), Path.cwd()
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            return path.read_text(encoding="utf-8"), path.resolve().parent
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return arg, Path.cwd()


def _evaluate(text: str, base: Path) -> Any:
    return Evaluator(base_dir=base).run(parse(text))


def _need_ideal(value: Any) -> MonomialIdeal:
    if isinstance(value, MonomialIdeal):
        return value
    raise UsageError(f"the expression evaluates to {type(value).__name__}, not an ideal")


def _dispatch(args, value: Any, state: dict) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "eval":
        if isinstance(value, MonomialIdeal):
            return rp.ideal_payload(value), rp.EXIT_OK
        if isinstance(value, Clutter):
            return rp.clutter_payload(value), rp.EXIT_OK
        raise UsageError(f"the expression evaluates to {type(value).__name__}")
    I = _need_ideal(value)
    if cmd == "ass":
        if args.table is not None:
            try:
                table = properties.ass_table(I, args.table)
            except ResourceLimitError as exc:
                state["partial"] = rp.ass_payload(exc.table)
                raise
            return rp.ass_payload(table), rp.EXIT_OK
        s = args.power or 1
        row = decomposition.associated_primes(properties.powers_of(I)[s])
        table = properties.AssTable(I, s, [[]] * (s - 1) + [row])
        return rp.ass_payload(table, powers=[s]), rp.EXIT_OK
    if cmd == "decompose":
        return rp.decomposition_payload(decomposition.irreducible_decomposition(I)), rp.EXIT_OK
    if cmd == "symbolic":
        return rp.ideal_payload(properties.symbolic_power(I, args.power)), rp.EXIT_OK
    if cmd == "closure":
        rep = closure.is_integrally_closed(I)
        return rp.closure_payload(closure.integral_closure(I), rep), rp.EXIT_OK
    if cmd == "check":
        fn = CHECKS[args.property]
        if args.property == "well-nntf":
            rep = fn(I, args.max_power, args.ell_max)
        else:
            if args.ell_max is not None:
                raise UsageError("--ell-max only applies to well-nntf")
            rep = fn(I, args.max_power)
        return rp.property_payload(rep), rp.EXIT_OK if rep.holds else rp.EXIT_FAILS
    if cmd == "beta1":
        cert = independence_number(I)
        return {"kind": "beta1", "beta1": cert.size,
                "members": [str(u) for u in cert.members]}, rp.EXIT_OK
    if cmd == "polarize":
        P, pmap = polarize(I, structured=args.structured_names)
        return {"kind": "polarization", "ideal": rp.ideal_json(P), "text": str(P),
                "map": pmap.to_dict()}, rp.EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def _depolarize_payload(args) -> dict:
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        try:
            raw = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file} is not JSON: {exc}") from None
    if "payload" in data:  # a full RunReport
        data = data["payload"]
    if "map" not in data or "ideal" not in data:
        raise UsageError("expected an object with 'ideal' and 'map' keys")
    pmap = PolarizationMap.from_dict(data["map"])
    J = load_ideal_json(data["ideal"])
    if J.ring != pmap.shadow_ring:
        J = MonomialIdeal.from_exps(pmap.shadow_ring, J.exps)
    return rp.ideal_payload(depolarize(J, pmap))


def run(argv: Sequence[str] | None = None) -> tuple[rp.RunReport, str]:
    """Execute one command; returns the report and the chosen format."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = rp.RunReport(command=["monideal", *argv], input_sha256=None, seed=args.seed)
    state: dict = {}
    t0 = time.monotonic()
    try:
        with budget(max_gens=args.budget_gens, seconds=args.budget_seconds) as b:
            try:
                if args.command == "depolarize":
                    rep.payload = _depolarize_payload(args)
                else:
                    text, base = _read_source(args.expr)
                    rep.input_sha256 = hashlib.sha256(text.encode("utf-8")).hexdigest()
                    value = _evaluate(text, base)
                    rep.payload, rep.exit_code = _dispatch(args, value, state)
                rep.status = "ok" if rep.exit_code == rp.EXIT_OK else "property-fails"
            finally:
                rep.peak_generators = b.peak_gens
    except ResourceLimitError as exc:
        rep.exit_code, rep.status, rep.error = rp.EXIT_BUDGET, "budget-exceeded", str(exc)
        rep.payload = state.get("partial", {})
    except (ParseError, EvalError, UsageError, MonIdealError, ValueError) as exc:
        rep.exit_code, rep.status, rep.error = rp.EXIT_USAGE, "error", str(exc)
    rep.elapsed_seconds = time.monotonic() - t0
    return rep, args.format


def main(argv: Sequence[str] | None = None) -> int:
    rep, fmt = run(argv)
    if rep.error and fmt == "text":
        print(f"monideal: {rep.error}", file=sys.stderr)
    print(rep.to_json() if fmt == "json" else rep.to_text(include_error=False))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

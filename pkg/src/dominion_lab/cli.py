"""Command-line front end.

Exit codes: 0 success, 1 law counterexample, 2 input error, 3 internal
assertion (for example, dominion methods disagreeing).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import monoid as mon
from .laws import EnumerationConfig, LAWS, enumerate_monoids, run_laws
from .monoid import (
    Invertible,
    Nilpotent,
    classify_element,
    find_zero,
    is_inverse_monoid,
)
from .morphisms import Submonoid, generated_submonoid, is_subdirectly_irreducible
from .pushout import DominionDiscrepancy, dominion, pushout_over
from .textio import (
    ParseError,
    dump_congruence,
    dump_dominion,
    dump_hom,
    dump_monoid,
    dump_witness,
    load_monoid,
)
from .varieties import VarietySignature, generated_variety, satisfies, variety_core
from .zigzag import default_cap, search_witness

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
CAP_ENV = "DOMINION_LAB_CAP"


class InputError(Exception):
    pass


def _emit(args, text: str, record: dict) -> None:
    if args.format == "records":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _sig(text):
    try:
        return VarietySignature.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _cap(args, B) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    return default_cap(B)


def _submonoid(B, spec: list[str]) -> Submonoid:
    if not spec or spec[0] not in ("elements", "generate"):
        raise InputError("submonoid spec must start with 'elements' or 'generate'")
    try:
        xs = [int(x) for x in spec[1:]]
        B.check(*xs)
    except (ValueError, IndexError) as exc:
        raise InputError(f"bad element in submonoid spec: {exc}") from None
    if spec[0] == "generate":
        return generated_submonoid(B, xs)
    try:
        return Submonoid(B, frozenset(xs))
    except ValueError as exc:
        raise InputError(f"not a submonoid: {exc}") from None


def _describe(c) -> str:
    if isinstance(c, Invertible):
        return f"invertible, inverse {c.inverse}"
    if isinstance(c, Nilpotent):
        return f"nilpotent, degree {c.degree}"
    return "neither"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# -- commands ---------------------------------------------------------------------


def cmd_analyze(args) -> int:
    M = load_monoid(args.path)
    zero = find_zero(M)
    si = is_subdirectly_irreducible(M)
    var = generated_variety(M)
    inv = is_inverse_monoid(M)
    classes = {a: classify_element(M, a) for a in M.elements}
    record = {
        "monoid": M.name,
        "order": M.order,
        "zero": zero,
        "classification": {a: _describe(c) for a, c in classes.items()},
        "inverse_monoid": inv,
        "si": si.si,
        "monolith": si.monolith.blocks() if si.monolith else None,
        "variety": str(var),
    }
    lines = [
        f"order {M.order}; SI: {_yn(si.si)}; variety: {var}; inverse monoid: {_yn(inv)}",
        f"zero: {'none' if zero is None else f'{zero} ({M.label(zero)})'}",
    ]
    lines += [f"  {a} ({M.label(a)}): {_describe(c)}" for a, c in classes.items()]
    if si.monolith:
        lines.append(dump_congruence(si.monolith, "monolith"))
    if args.variety is not None:
        member = satisfies(M, args.variety)
        core = variety_core(M, args.variety)
        record.update(member=member, core=sorted(core))
        lines.append(f"in {args.variety}: {_yn(member)}; core size {len(core)}")
    _emit(args, "\n".join(lines), record)
    return EXIT_OK


def cmd_dominion(args) -> int:
    B = load_monoid(args.path)
    A = _submonoid(B, args.spec)
    report = dominion(B, A.universe, method=args.method, cap=_cap(args, B))
    status = "dominion = A (absolutely closed)" if report.closed else "escapes A: " + " ".join(
        f"{b} ({B.label(b)})" for b in sorted(report.escapes)
    )
    lines = [dump_dominion(B.name, A.universe, report.elements, args.method), status]
    if args.witnesses:
        lines += [dump_witness(w) for _, w in sorted(report.witnesses.items())]
    record = {
        "monoid": B.name,
        "sub": sorted(A.universe),
        "dominion": sorted(report.elements),
        "escapes": sorted(report.escapes),
        "method": args.method,
    }
    _emit(args, "\n".join(lines), record)
    return EXIT_OK


def cmd_zigzag(args) -> int:
    B = load_monoid(args.path)
    A = _submonoid(B, args.spec)
    try:
        B.check(args.target)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    w = search_witness(B, A.universe, args.target, _cap(args, B))
    text = dump_witness(w) if w is not None else "none"
    record = {"target": args.target, "witness": None}
    if w is not None:
        record["witness"] = {"n": w.n, "args": w.args, "z": w.spine_z, "w": w.spine_w, "value": w.value}
    _emit(args, text, record)
    return EXIT_OK


def cmd_pushout(args) -> int:
    B = load_monoid(args.path)
    A = _submonoid(B, args.spec)
    po = pushout_over(B, A.universe)
    # maps go in comment lines so the file loads as a plain monoid file
    text = dump_monoid(po.monoid) + f"# {dump_hom(po.p1, 'p1')}\n# {dump_hom(po.p2, 'p2')}\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = EnumerationConfig(args.max_order, args.variety, args.si_only)
    text = "".join(dump_monoid(M) for M in enumerate_monoids(cfg))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_laws(args) -> int:
    cfg = EnumerationConfig(args.max_order, args.variety, args.si_only)
    reports = run_laws(cfg, args.law)
    for r in reports:
        _emit(args, str(r) + "".join(f"\n  {c}" for c in r.counterexamples[:10]), r.record())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


BUILTINS = {
    "nine_element": mon.nine_element,
    "trivial": mon.trivial,
}


def cmd_builtin(args) -> int:
    name = args.name
    try:
        if name in BUILTINS:
            M = BUILTINS[name]()
        elif name.startswith("cyclic:"):
            M = mon.cyclic(int(name.split(":")[1]))
        elif name.startswith("monogenic:"):
            n, m = name.split(":")[1].split(",")
            M = mon.monogenic(int(n), int(m))
        else:
            raise InputError(f"unknown builtin {name!r}")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(dump_monoid(M))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dominion-lab", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "records"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="elementwise, SI and variety analysis of a monoid file")
    a.add_argument("path")
    a.add_argument("--variety", type=_sig)
    a.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("dominion", cmd_dominion, "dominion of a submonoid"),
        ("zigzag", cmd_zigzag, "search a zigzag witness for one element"),
        ("pushout", cmd_pushout, "write the amalgamated pushout B *_A B"),
    ):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("path")
        c.add_argument("spec", nargs="+", help="'elements i j ...' or 'generate i j ...'")
        if name != "pushout":
            c.add_argument("--cap", type=int)
        c.set_defaults(func=func)
        if name == "dominion":
            c.add_argument("--method", choices=("both", "pushout", "zigzag"), default="both")
            c.add_argument("--witnesses", action="store_true")
        elif name == "zigzag":
            c.add_argument("--target", type=int, required=True)
        else:
            c.add_argument("--out")

    e = sub.add_parser("enumerate", help="commutative monoids up to isomorphism")
    e.add_argument("--max-order", type=int, required=True)
    e.add_argument("--variety", type=_sig)
    e.add_argument("--si-only", action="store_true")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    lw = sub.add_parser("laws", help="law harness")
    lsub = lw.add_subparsers(dest="action", required=True)
    run = lsub.add_parser("run")
    run.add_argument("--max-order", type=int, default=4)
    run.add_argument("--variety", type=_sig)
    run.add_argument("--si-only", action="store_true")
    run.add_argument("--law", action="append", choices=sorted(LAWS))
    run.add_argument("--format", choices=("text", "records"), default=argparse.SUPPRESS)
    run.set_defaults(func=cmd_laws)

    b = sub.add_parser("builtin", help="print a built-in monoid (nine_element, trivial, cyclic:S, monogenic:N,M)")
    b.add_argument("name")
    b.set_defaults(func=cmd_builtin)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DominionDiscrepancy, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

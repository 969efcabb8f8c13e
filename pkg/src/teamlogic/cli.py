"""Command-line interface: ``teamlogic <subcommand> ...``.

Exit codes: 0 pass/true, 1 counterexample/false, 2 usage, parse or cap error.
``--format machine`` prints one JSON object per line instead of text.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceeded, TeamLogicError
from .harness import PROPERTIES, SweepSpec, check_equiv, run_sweep
from .model import load_structure, load_team, team_rel
from .quantifiers import BUILTIN_NAMES, default_registry, dual, format_quantifier, load_quantifiers
from .semantics import EvalConfig, eval_eso, eval_team
from .syntax.ast import NormalFormSentence, Signature
from .syntax.ops import check_dialect
from .syntax.parser import parse_formula
from .syntax.printer import to_text
from .transform import translate

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class _Out:
    def __init__(self, machine: bool, stream=None):
        self.machine = machine
        self.stream = stream or sys.stdout

    def emit(self, text: str, **record):
        if self.machine:
            print(json.dumps(record, sort_keys=True, default=str), file=self.stream)
        else:
            print(text, file=self.stream)


def parse_sizes(text: str) -> tuple:
    """``2,3`` or ``1..4``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or any(n < 1 for n in out):
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    return tuple(out)


def _registry(args):
    reg = default_registry()
    for path in getattr(args, "quantifiers_file", None) or ():
        load_quantifiers(path, reg)
    return reg


def _config(args) -> EvalConfig:
    return EvalConfig(
        or_mode=getattr(args, "or_mode", "paper"),
        exists_mode=getattr(args, "exists_mode", "paper"),
        gq_search=getattr(args, "gq_search", "full"),
        registry=_registry(args),
    )


def _formula(text: str, args):
    return parse_formula(text, registry=_registry(args))


# ------------------------------------------------------------ subcommands


def cmd_eval(args, out: _Out) -> int:
    M = load_structure(args.model)
    X = load_team(args.team, M.size)
    phi = _formula(args.formula, args)
    if args.dialect:
        check_dialect(phi, args.dialect)
    value = eval_team(M, X, phi, _config(args))
    out.emit(str(value).lower(), command="eval", formula=to_text(phi), value=value)
    return EXIT_TRUE if value else EXIT_FALSE


def _assignment(items) -> dict:
    s = {}
    for item in items or ():
        name, _, val = item.partition("=")
        if not name or not val:
            raise TeamLogicError(f"bad assignment {item!r}; expected x=VALUE")
        s[name] = int(val)
    return s


def cmd_eval_eso(args, out: _Out) -> int:
    M = load_structure(args.model)
    phi = _formula(args.formula, args)
    interp = {}
    for item in args.rel or ():
        name, _, path = item.partition("=")
        if not name or not path:
            raise TeamLogicError(f"bad --rel {item!r}; expected NAME=FILE")
        interp[name] = team_rel(load_team(path, M.size))
    value = eval_eso(M, phi, interp, _config(args), _assignment(args.assign))
    out.emit(str(value).lower(), command="eval-eso", formula=to_text(phi), value=value)
    return EXIT_TRUE if value else EXIT_FALSE


def cmd_translate(args, out: _Out) -> int:
    phi = _formula(args.formula, args)
    domain = tuple(v for v in args.domain.split(",") if v) if args.domain else None
    res = translate(phi, args.to, flavor=args.flavor, quantifier=args.quantifier,
                    arity=args.arity, relation=args.relation, domain=domain)
    text = str(res.output) if isinstance(res.output, NormalFormSentence) else to_text(res.output)
    fresh = {k: v for k, v in sorted(res.fresh.items())}
    if out.machine:
        out.emit("", command="translate", to=args.to, output=text, fresh=fresh,
                 notes=res.notes, requires_min_size=res.requires_min_size)
    else:
        out.emit(text)
        if fresh:
            out.emit("fresh: " + ", ".join(f"{k}/{v}" for k, v in fresh.items()))
        if res.requires_min_size > 1:
            out.emit(f"valid on universes of size >= {res.requires_min_size}")
        for note in res.notes:
            out.emit(f"note: {note}")
    return EXIT_TRUE


def _report_exit(report) -> int:
    if report.verdict == "pass":
        return EXIT_TRUE
    if report.verdict == "counterexample":
        return EXIT_FALSE
    return EXIT_ERROR


def _emit_report(report, out: _Out, command: str):
    if out.machine:
        out.emit("", command=command, **report.record())
        for extra in report.counterexamples[1:]:
            out.emit("", command=command, property=report.property, counterexample=extra)
        return
    out.emit(report.summary())
    for cx in report.counterexamples or ([report.counterexample] if report.counterexample else []):
        for key, val in cx.items():
            val = str(val)
            if "\n" in val:
                out.emit(f"  {key}:")
                for line in val.splitlines():
                    out.emit(f"    {line}")
            else:
                out.emit(f"  {key}: {val}")


def cmd_sweep(args, out: _Out) -> int:
    if args.exhaustive:
        source = "exhaustive"
    elif args.formula:
        source = "list"
    else:
        source = "random"
    spec = SweepSpec(
        property=args.property,
        signature=Signature.parse(args.signature),
        sizes=args.sizes,
        quantifiers=tuple(q for q in args.quantifiers.split(",") if q),
        source=source,
        depth=args.depth,
        formulas=tuple(_formula(f, args) for f in args.formula or ()),
        count=args.count,
        seed=args.seed,
        cfg=_config(args),
        collect_all=args.all,
        flavor=args.flavor,
        quantifier=args.quantifier,
    )
    report = run_sweep(spec)
    _emit_report(report, out, "sweep")
    return _report_exit(report)


def cmd_check_equiv(args, out: _Out) -> int:
    sig = Signature.parse(args.signature) if args.signature else None
    report = check_equiv(_formula(args.lhs, args), _formula(args.rhs, args), args.sizes, sig,
                         _config(args), collect_all=args.all)
    _emit_report(report, out, "check-equiv")
    return _report_exit(report)


def cmd_quant(args, out: _Out) -> int:
    reg = _registry(args)
    if args.list:
        names = list(dict.fromkeys([*BUILTIN_NAMES, *reg.keys()]))
        for name in names:
            Q = reg[name]
            out.emit(f"{name}/{Q.arity}" + (f"  {Q.description}" if Q.description else ""),
                     command="quant", name=name, arity=Q.arity, description=Q.description)
        return EXIT_TRUE
    if args.validate:
        Q = reg[args.validate]
        ok = True
        for n in args.sizes:
            mono = Q.is_monotone_on(n)
            empty_out, full_in = Q.check_nontriviality(n)
            ok &= mono
            out.emit(f"{Q.name} size {n}: monotone={mono} empty-excluded={empty_out} full-included={full_in}",
                     command="quant", name=Q.name, size=n, monotone=mono,
                     empty_excluded=empty_out, full_included=full_in)
        return EXIT_TRUE if ok else EXIT_FALSE
    if args.dual:
        Q = reg[args.dual]
        D = dual(Q)
        sizes = args.sizes
        if out.machine:
            for n in sizes:
                out.emit("", command="quant", name=D.name, size=n, members=[sorted(A) for A in D.members(n)])
        else:
            out.emit(format_quantifier(D, sizes).rstrip("\n"))
        return EXIT_TRUE
    if args.show:
        Q = reg[args.show]
        sizes = (args.size,) if args.size else args.sizes
        if out.machine:
            for n in sizes:
                out.emit("", command="quant", name=Q.name, size=n, members=[sorted(A) for A in Q.members(n)])
        else:
            out.emit(format_quantifier(Q, sizes).rstrip("\n"))
        return EXIT_TRUE
    raise TeamLogicError("quant needs one of --list, --validate, --dual, --show")


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="teamlogic", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--quantifiers-file", action="append", metavar="FILE",
                        help="extensional quantifier definitions to register")
    modes = argparse.ArgumentParser(add_help=False)
    modes.add_argument("--or-mode", choices=("paper", "strict"), default="paper")
    modes.add_argument("--exists-mode", choices=("paper", "lax"), default="paper")
    modes.add_argument("--gq-search", choices=("full", "minimal"), default="full")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common, modes], help="team semantics: M, X |= phi")
    e.add_argument("--model", required=True, metavar="FILE")
    e.add_argument("--team", required=True, metavar="FILE")
    e.add_argument("--formula", required=True)
    e.add_argument("--dialect", choices=("dq", "iq", "fo"))
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("eval-eso", parents=[common], help="ESO(Q) truth in a structure")
    s.add_argument("--model", required=True, metavar="FILE")
    s.add_argument("--formula", required=True)
    s.add_argument("--rel", action="append", metavar="R=FILE", help="interpret R as the relation of a team file")
    s.add_argument("--assign", action="append", metavar="x=VALUE")
    s.set_defaults(func=cmd_eval_eso)

    t = sub.add_parser("translate", parents=[common], help="normal form and translations")
    t.add_argument("--to", required=True, choices=("nf", "flat", "dq", "total", "eso"))
    t.add_argument("--formula", required=True)
    t.add_argument("--flavor", choices=("d", "i"), default="d")
    t.add_argument("--quantifier")
    t.add_argument("--arity", type=int, default=1)
    t.add_argument("--relation", default="_R")
    t.add_argument("--domain", help="team variable order for --to eso, e.g. x,y")
    t.set_defaults(func=cmd_translate)

    w = sub.add_parser("sweep", parents=[common, modes], help="run a property sweep")
    w.add_argument("--property", required=True, choices=PROPERTIES)
    w.add_argument("--sizes", type=parse_sizes, default=(2,))
    w.add_argument("--signature", default="P/1")
    w.add_argument("--quantifiers", default="exists,forall,most")
    w.add_argument("--count", type=int, default=500)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--depth", type=int, default=2)
    w.add_argument("--exhaustive", action="store_true")
    w.add_argument("--all", action="store_true", help="collect every counterexample")
    w.add_argument("--formula", action="append", help="check these formulas instead of a generated space")
    w.add_argument("--flavor", choices=("d", "i"), default="d")
    w.add_argument("--quantifier")
    w.set_defaults(func=cmd_sweep)

    c = sub.add_parser("check-equiv", parents=[common, modes], help="compare two sentences on all small structures")
    c.add_argument("--lhs", required=True)
    c.add_argument("--rhs", required=True)
    c.add_argument("--sizes", type=parse_sizes, default=(2, 3))
    c.add_argument("--signature")
    c.add_argument("--all", action="store_true")
    c.set_defaults(func=cmd_check_equiv)

    q = sub.add_parser("quant", parents=[common], help="inspect quantifiers")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--validate", metavar="NAME")
    g.add_argument("--dual", metavar="NAME")
    g.add_argument("--show", metavar="NAME")
    q.add_argument("--sizes", type=parse_sizes, default=(1, 2, 3, 4))
    q.add_argument("--size", type=int)
    q.set_defaults(func=cmd_quant)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    out = _Out(args.format == "machine")
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        _error(out, "cap", exc)
    except (TeamLogicError, KeyError, OSError, ValueError) as exc:
        _error(out, type(exc).__name__, exc)
    return EXIT_ERROR


def _error(out: _Out, kind: str, exc: Exception):
    msg = str(exc) if not isinstance(exc, KeyError) else f"unknown name {exc.args[0]!r}"
    if out.machine:
        out.emit("", error=kind, message=msg)
    else:
        print(f"error: {msg}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``fuzzypn <command> ...``.

Exit status is 0 on success, 1 on model/validation/runtime errors and 2 on
usage errors. Every command is a thin wrapper around library calls.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import automaton, cw, net as net_mod, reasoner
from .extend import extend as extend_net
from .dot import to_dot
from .errors import FuzzyPNError
from .formats import WordList, dumps, load
from .fuzzyset import format_degree

EPSILON = "ε"


class UsageError(Exception):
    pass


def format_marking(m) -> str:
    return "[" + ", ".join(format_degree(x) for x in m) + "]"


def format_string(s) -> str:
    return " ".join(s) if s else EPSILON


def _parse_marking(text: str, fpn) -> tuple:
    try:
        values = json.loads(text if text.strip().startswith("[") else f"[{text}]")
    except json.JSONDecodeError:
        raise UsageError(f"cannot read marking {text!r}; write it like [0.9, 1, 0, 0, 0]") from None
    if not isinstance(values, list) or any(isinstance(v, (bool, str, list, dict)) or v is None for v in values):
        raise UsageError(f"cannot read marking {text!r}")
    return net_mod.as_marking(values, fpn)


def _words_arg(text: str) -> tuple[str, ...]:
    text = text.strip()
    return () if text in ("", EPSILON) else tuple(text.split())


def _model(path: str, *kinds: str):
    doc = load(path)
    if kinds and doc.kind not in kinds:
        raise UsageError(f"{path}: expected a model of kind {' or '.join(kinds)}, got {doc.kind}")
    return doc.body


def _checked_fpn(model) -> net_mod.FPN:
    if isinstance(model, cw.FPNCW):
        cw.check(model)
        return model.fpn
    net_mod.check(model)
    if isinstance(model, net_mod.WeightedFPN):
        return net_mod.normalize_w(model)
    return model


def _checked(model):
    if isinstance(model, automaton.FACW):
        problems = automaton.validate(model)
        if problems:
            raise FuzzyPNError("; ".join(problems))
        return model
    return cw.check(model)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


NET_KINDS = ("fpn", "weighted-fpn", "fpncw", "fpncmw")
CW_KINDS = ("fpncw", "fpncmw")


def cmd_validate(args) -> int:
    model = _model(args.model)
    if isinstance(model, WordList):
        print("ok")
        return 0
    if isinstance(model, automaton.FACW):
        problems = automaton.validate(model)
    elif isinstance(model, cw.FPNCW):
        problems = cw.validate(model)
    else:
        problems = net_mod.validate(model)
    if not problems:
        print("ok")
        return 0
    for p in problems:
        print(p)
    return 1


def cmd_fire(args) -> int:
    fpn = _checked_fpn(_model(args.net, *NET_KINDS))
    m = _parse_marking(args.marking, fpn) if args.marking else fpn.m0
    print(format_marking(net_mod.fire(fpn, m, args.transition)))
    return 0


def cmd_run(args) -> int:
    fpn = _checked_fpn(_model(args.net, *NET_KINDS))
    m = _parse_marking(args.marking, fpn) if args.marking else fpn.m0
    result = net_mod.fire_seq(fpn, m, _words_arg(args.sequence))
    print("undefined" if result is None else format_marking(result))
    return 0


def cmd_reach(args) -> int:
    fpn = _checked_fpn(_model(args.net, *NET_KINDS))
    for m in net_mod.reachable(fpn, args.budget):
        print(format_marking(m))
    return 0


def cmd_accept(args) -> int:
    model = _checked(_model(args.model, *CW_KINDS, "facw"))
    s = _words_arg(args.words)
    if isinstance(model, automaton.FACW):
        d = automaton.accept_facw(model, s)
    elif args.oracle:
        d = cw.accept_oracle(model, s)
    else:
        d = cw.accept(model, s)
    print(format_degree(d))
    return 0


def cmd_table(args) -> int:
    model = _checked(_model(args.model, *CW_KINDS, "facw"))
    if args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    if isinstance(model, automaton.FACW):
        names = [w.name for w in model.alphabet]
        rows = ((s, automaton.accept_facw(model, s)) for s in cw.all_strings(names, args.max_len))
    else:
        rows = cw.language_table(model, args.max_len).items()
    for s, d in rows:
        if d > 0 or args.all:
            print(f"{format_string(s)}\t{format_degree(d)}")
    return 0


def cmd_rules(args) -> int:
    model = cw.check(_model(args.net, *CW_KINDS))
    rb = reasoner.build_rule_base(model)
    for i, group in enumerate(rb.groups, 1):
        places = ", ".join(group[0].antecedents) or "-"
        print(f"# group {i}: input places {{{places}}}")
        for rule in group:
            print(reasoner.format_rule(rule))
    return 0


def cmd_extend(args) -> int:
    model = cw.check(_model(args.net, *CW_KINDS))
    words = _model(args.words, "words")
    result = extend_net(model, words.words)
    _emit(dumps(result), args.output)
    if args.explain:
        stream = sys.stdout if args.output else sys.stderr
        for t, pr in result.provenance.items():
            parts = ", ".join(f"{r} (overlap {format_degree(h)})" for r, h in zip(pr.rules, pr.overlaps))
            print(
                f"{t}: group {pr.group}, word {pr.word}, alpha {format_degree(result.fpn.alpha[t])}, "
                f"from {parts}",
                file=stream,
            )
        inert = [w for w in result.new_words if w not in result.labels.values()]
        for w in inert:
            print(f"{w}: no matching rules, no transition added", file=stream)
    return 0


def cmd_convert(args) -> int:
    if args.to_facw:
        model = cw.check(_model(args.model, *CW_KINDS))
        out = automaton.fpncw_to_facw(model, args.budget)
    else:
        out = automaton.facw_to_fpncw(_checked(_model(args.model, "facw")))
    _emit(dumps(out), args.output)
    return 0


def cmd_export_dot(args) -> int:
    model = _model(args.model, *NET_KINDS, "facw")
    _emit(to_dot(model), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzypn", description="Fuzzy Petri nets for computing with words."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", help="report structural violations of a model file")
    p.add_argument("model")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fire", help="fire one transition")
    p.add_argument("net")
    p.add_argument("-m", "--marking", help="marking such as [0.9, 1, 0, 0, 0] (default: M0)")
    p.add_argument("-t", "--transition", required=True)
    p.set_defaults(func=cmd_fire)

    p = sub.add_parser("run", help="fire a transition sequence")
    p.add_argument("net")
    p.add_argument("-s", "--sequence", required=True, help='space separated, e.g. "t1 t2"')
    p.add_argument("-m", "--marking", help="start marking (default: M0)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("reach", help="list reachable markings in BFS order")
    p.add_argument("net")
    p.add_argument("--budget", type=int, default=net_mod.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("accept", help="acceptance degree of a word string")
    p.add_argument("model")
    p.add_argument("-w", "--words", required=True, help='space separated, e.g. "M S"; "" for the empty string')
    p.add_argument("--oracle", action="store_true", help="use brute-force enumeration")
    p.set_defaults(func=cmd_accept)

    p = sub.add_parser("table", help="language table up to a string length")
    p.add_argument("model")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include strings accepted with degree 0")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("rules", help="print the rule base")
    p.add_argument("net")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("extend", help="extend a net with new words")
    p.add_argument("net")
    p.add_argument("words", help="words file (kind: words)")
    p.add_argument("-o", "--output")
    p.add_argument("--explain", action="store_true", help="print provenance of each new transition")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("convert", help="convert between nets and automata")
    p.add_argument("model")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-facw", action="store_true")
    g.add_argument("--to-fpncw", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--budget", type=int, default=net_mod.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("export-dot", help="write Graphviz DOT text")
    p.add_argument("model")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fuzzypn: {exc}", file=sys.stderr)
        return 2
    except (FuzzyPNError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"fuzzypn: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

    permeq validate  -s SYS -t TERM
    permeq flatten   -s SYS -t TERM
    permeq greedy    -s SYS -t TERM [--via tragr|swap]
    permeq tragr     -s SYS -t TERM [--dot|--json] [-o FILE]
    permeq readback  -s SYS -g TRAGR.json [--stages DIR]
    permeq equiv     -s SYS -t TERM1 -u TERM2
    permeq evolution -s SYS -t TERM

Exit status: 0 on success (or "equivalent"), 1 for "not equivalent",
2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .equivalence import canonical_greedy, canonical_greedy_by_swapping, equiv
from .logicality import flatten
from .proofterm import MultistepReduction, classify, parse_proofterm, to_reduction
from .rewrite import RewriteError, parse_system, show
from .toposort import ts_stages
from .tragr import evaluate, parse_tragr, serialize_tragr, to_dot


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def render_evolution(r: MultistepReduction) -> str:
    """Schematic evolution: strings interleaved with rows marking where rules fire.

    A rule occurrence is drawn as its name's initial repeated over the width
    of its left-hand side; untouched letters are drawn as ``.``.
    """
    strings = [r.source] + [step.tgt for step in r.steps]
    width = max([len(a) for s in strings for a in s] + [1])

    def cells(values) -> str:
        return " ".join(v.ljust(width) for v in values).rstrip()

    rows = [cells(r.source)]
    for step in r.steps:
        marks = []
        for item in step.items:
            if hasattr(item, "rule"):
                marks += [item.name[0]] * len(item.rule.lhs)
            else:
                marks.append(".")
        rows.append(cells(marks))
        rows.append(cells(step.tgt))
    return "\n".join(rows) + "\n"


def _cmd_validate(args, system):
    term = parse_proofterm(_read(args.term), system)
    print("OK")
    print(f"source: {show(term.src)}")
    print(f"target: {show(term.tgt)}")
    print(f"class: {classify(term).value}")
    return 0


def _cmd_flatten(args, system):
    print(flatten(parse_proofterm(_read(args.term), system)))
    return 0


def _cmd_greedy(args, system):
    term = parse_proofterm(_read(args.term), system)
    route = canonical_greedy if args.via == "tragr" else canonical_greedy_by_swapping
    print(route(term))
    return 0


def _cmd_tragr(args, system):
    g = evaluate(parse_proofterm(_read(args.term), system))
    _write(to_dot(g) if args.dot else serialize_tragr(g), args.output)
    return 0


def _cmd_readback(args, system):
    g = parse_tragr(_read(args.tragr), system)
    stages = ts_stages(g)
    if args.stages:
        out = Path(args.stages)
        out.mkdir(parents=True, exist_ok=True)
        for k, stage in enumerate(stages, 1):
            (out / f"stage-{k}.json").write_text(serialize_tragr(stage.tragr), encoding="utf-8")
    print(MultistepReduction(g.source, tuple(s.multistep for s in stages[:-1])))
    return 0


def _cmd_equiv(args, system):
    p = parse_proofterm(_read(args.term), system)
    q = parse_proofterm(_read(args.term2), system)
    if equiv(p, q):
        print("equivalent")
        return 0
    print("not equivalent")
    return 1


def _cmd_evolution(args, system):
    sys.stdout.write(render_evolution(to_reduction(parse_proofterm(_read(args.term), system))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permeq", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, term=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("-s", "--system", required=True, help="rewrite system file")
        if term:
            p.add_argument("-t", "--term", required=True, help="proof term file, or - for stdin")
        p.set_defaults(func=func)
        return p

    command("validate", _cmd_validate, "check a proof term and report its source and target")
    command("flatten", _cmd_flatten, "sequentialise a proof term into single steps")
    p = command("greedy", _cmd_greedy, "canonical greedy multistep reduction")
    p.add_argument("--via", choices=("tragr", "swap"), default="tragr")
    p = command("tragr", _cmd_tragr, "trace graph of a proof term")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p = command("readback", _cmd_readback, "topological multi-sort of a tragr document", term=False)
    p.add_argument("-g", "--tragr", required=True)
    p.add_argument("--stages", metavar="DIR", help="write one tragr document per stage")
    p = command("equiv", _cmd_equiv, "decide permutation equivalence")
    p.add_argument("-u", "--term2", required=True)
    command("evolution", _cmd_evolution, "ASCII rendering of a reduction")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        system = parse_system(_read(args.system))
        return args.func(args, system)
    except RewriteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

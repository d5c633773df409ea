"""Command line entry point: ``salimit <subcommand> [--flags]``.

JSON goes to stdout unless ``--output`` names a file (written atomically).
Exact rationals are printed as "num/den" strings.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import SalimitError
from .intervals import (follower_cover, follower_distance, format_code, in_B_certified)
from .orbits import (Budget, default_budget, enumerate_backward, salpha_prefix_approx, verify_structure,
                     witness_depths, witness_orbit)
from .serialize import dumps, frac_str, parse_fraction, write_atomic
from .square import SquarePoint, apply_F, embed_E, figure_csv, figure_rectangles, phi, preimage_point
from .subshift import (OMEGA0, member_language, member_point, omega, parse_structure, predecessor_symbols,
                       successor_symbols, word_predecessor_symbols)
from .trees import FamilyTree, named_branch, tree_from_json
from .verify import SUITES, run
from .words import SymbolicPoint, as_word, format_word


def _emit(args, data, text: str | None = None) -> None:
    out = text if text is not None else dumps(data)
    if getattr(args, "output", None):
        write_atomic(args.output, out)
    else:
        sys.stdout.write(out)


def _tree_and_branch(args):
    if args.tree:
        with open(args.tree) as fh:
            tree = tree_from_json(json.load(fh))
    else:
        params = json.loads(args.params) if args.params else {}
        tree = FamilyTree(args.family, params)
    witness = named_branch(args.branch) if args.branch else tree.default_witness()
    if witness is None:
        raise SalimitError("the tree has no default branch; pass --branch")
    return tree, witness


def _point(text: str) -> SymbolicPoint:
    return SymbolicPoint.parse(text)


def _budget(args):
    return Budget(args.budget) if args.budget else Budget(default_budget())


# -- subcommands -----------------------------------------------------------------

def cmd_omega(args):
    if args.n == 0:
        _emit(args, None, str(OMEGA0) + "\n")
        return 0
    tree, witness = _tree_and_branch(args)
    _emit(args, None, str(omega(args.n, tree, witness)) + "\n")
    return 0


def cmd_member(args):
    if args.point:
        p = _point(args.point)
        _emit(args, {"point": str(p), "member": member_point(p)})
    else:
        w = as_word(args.word)
        _emit(args, {"word": format_word(w), "member": member_language(w)})
    return 0


def cmd_parse(args):
    parses = parse_structure(as_word(args.word), args.max_level)
    _emit(args, {"word": args.word, "parses": [p.to_json() for p in parses]})
    return 0


def cmd_pred(args):
    if args.point:
        p = _point(args.point)
        _emit(args, {"point": str(p), "predecessors": sorted(predecessor_symbols(p))})
    else:
        w = as_word(args.word)
        _emit(args, {"word": format_word(w), "predecessors": sorted(word_predecessor_symbols(w))})
    return 0


def cmd_succ(args):
    w = as_word(args.word)
    _emit(args, {"word": format_word(w), "successors": sorted(successor_symbols(w))})
    return 0


def cmd_backward(args):
    start = _point(args.start)
    en = enumerate_backward(start, args.depth, args.limit, _budget(args))
    data = {"start": str(start), "depth": args.depth, "complete": en.complete, "nodes": en.nodes,
            "segments": [s.to_json() for s in en.segments]}
    if start == OMEGA0:
        reports = [verify_structure(s) for s in en.segments]
        data["structure"] = [r.to_json() for r in reports]
        data["structure_ok"] = all(r.ok for r in reports)
    _emit(args, data)
    return 0 if en.complete else 1


def cmd_salpha(args):
    probe = salpha_prefix_approx(args.k, args.N, _budget(args))
    _emit(args, {"k": args.k, "depth": args.N,
                 "prefixes": sorted(format_word(p) for p in probe.prefixes),
                 "witnesses": {format_word(p): str(x) for p, x in sorted(probe.witnesses.items())}})
    return 0


def cmd_witness(args):
    tree, witness = _tree_and_branch(args)
    seg = witness_orbit(tree, witness, args.n_max)
    _emit(args, {"n_max": args.n_max, "depths": witness_depths(witness, args.n_max),
                 "segment": seg.to_json(), "structure": verify_structure(seg).to_json()})
    return 0


def cmd_embed(args):
    p = _point(args.point)
    e = embed_E(p)
    _emit(args, {"point": str(p), "e": frac_str(e.x), "E": e.to_json()})
    return 0


def _square_point(args) -> SquarePoint:
    return SquarePoint(parse_fraction(args.x), parse_fraction(args.y))


def cmd_map(args):
    p = _square_point(args)
    orbit = [p]
    for _ in range(args.steps):
        orbit.append(apply_F(orbit[-1], args.depth))
    _emit(args, {"depth": args.depth, "orbit": [q.to_json() for q in orbit]})
    return 0


def cmd_phi(args):
    x = parse_fraction(args.x)
    _emit(args, {"x": frac_str(x), "phi": phi(x, args.depth).to_json()})
    return 0


def cmd_preimage(args):
    pre = preimage_point(_square_point(args), args.depth)
    _emit(args, {"target": _square_point(args).to_json(), **pre.to_json()})
    return 0


def cmd_cover(args):
    _emit(args, follower_cover(args.symbol, args.depth).to_json())
    return 0


def cmd_dist(args):
    x = parse_fraction(args.x)
    fd = follower_distance(x, args.symbol, args.depth)
    _emit(args, {"x": frac_str(x), "symbol": args.symbol, "depth": args.depth,
                 "distance": fd.enclosure.to_json(),
                 "nearest": format_code(fd.nearest) if fd.nearest else None})
    return 0


def cmd_in_b(args):
    x = parse_fraction(args.x)
    symbols = [args.symbol] if args.symbol is not None else list(range(5))
    _emit(args, {"x": frac_str(x), "depth": args.depth,
                 "verdicts": {str(i): in_B_certified(x, i, args.depth).value for i in symbols}})
    return 0


def cmd_figure(args):
    data = figure_rectangles(args.strip, args.res, args.depth)
    if args.format == "csv":
        _emit(args, None, figure_csv(data))
    else:
        _emit(args, data)
    return 0


def cmd_verify(args):
    reports = run(args.suite, args.fast, args.depth, args.seed)
    data = {"ok": all(r.ok for r in reports), "suites": [r.to_json() for r in reports]}
    _emit(args, data)
    return 0 if data["ok"] else 1


# -- parser -----------------------------------------------------------------------

def _tree_flags(p):
    p.add_argument("--family", default="increasing", help="built-in tree family")
    p.add_argument("--params", help="JSON object of family parameters")
    p.add_argument("--tree", help="JSON file with a tree")
    p.add_argument("--branch", help="'primes', 'zeros', 'naturals' or a digit list like 2,3,5")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="salimit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the result to this file")
    common.add_argument("--budget", type=int, help="node budget (default: SALIMIT_BUDGET or 10^6)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("omega", cmd_omega, "print omega_n(T, y)")
    p.add_argument("--n", type=int, required=True)
    _tree_flags(p)

    p = add("member", cmd_member, "language or point membership")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--point")

    p = add("parse", cmd_parse, "block-structure parses of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--max-level", type=int)

    p = add("pred", cmd_pred, "predecessor symbols")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--point")

    p = add("succ", cmd_succ, "successor symbols of a word")
    p.add_argument("--word", required=True)

    p = add("backward", cmd_backward, "enumerate backward segments")
    p.add_argument("--start", default=str(OMEGA0))
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--limit", type=int)

    p = add("salpha", cmd_salpha, "prefix probe of the special alpha-limit set of omega_0")
    p.add_argument("--k", "--prefix-len", dest="k", type=int, required=True)
    p.add_argument("--N", "--depth", dest="N", type=int, required=True)

    p = add("witness", cmd_witness, "witness orbit through omega_1 .. omega_n")
    p.add_argument("--n-max", type=int, required=True)
    _tree_flags(p)

    p = add("embed", cmd_embed, "embed a point of 5^N in the interval and square")
    p.add_argument("--point", required=True)

    for name, fn, text in (("map", cmd_map, "iterate F"), ("preimage", cmd_preimage, "preimage under F")):
        p = add(name, fn, text)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
        p.add_argument("--depth", type=int, default=8)
        if name == "map":
            p.add_argument("--steps", type=int, default=1)

    p = add("phi", cmd_phi, "certified value of phi")
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=int, default=8)

    p = add("cover", cmd_cover, "cylinder cover of A_i")
    p.add_argument("--symbol", type=int, required=True)
    p.add_argument("--depth", type=int, default=6)

    p = add("dist", cmd_dist, "distance to A_i")
    p.add_argument("--x", required=True)
    p.add_argument("--symbol", type=int, required=True)
    p.add_argument("--depth", type=int, default=6)

    p = add("in-b", cmd_in_b, "certified membership in B_i")
    p.add_argument("--x", required=True)
    p.add_argument("--symbol", type=int)
    p.add_argument("--depth", type=int, default=6)

    p = add("figure", cmd_figure, "strip images under F (float, not certified)")
    p.add_argument("--strip", default="4", help="lap: I0..I4, D0..D3, or a bare increasing index")
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("verify", cmd_verify, "run invariant suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--fast", action="store_true")
    p.add_argument("--depth", type=int)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SalimitError, ValueError) as exc:
        print(f"salimit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from chromqsym import lab
from chromqsym.engine import cqf, default_workers
from chromqsym.graph import LabeledGraph, parse_graph_text
from chromqsym.qsym import Composition, is_palindromic, is_symmetric
from chromqsym.ribbon import (
    ANCHORS,
    RibbonDiagram,
    corners,
    find_subribbon,
    is_regular,
    pattern_to_composition,
    render,
)

MAX_N_CQF = 12
MAX_N_CLASSIFY = 9


class InputError(ValueError):
    pass


def _inline_graph(tokens: list[str]) -> LabeledGraph:
    text = " ".join(tokens).strip()
    if text.startswith("n=") and " " in text:
        head, *edges = text.split()
        text = "\n".join([head] + [e.replace("-", " ") for e in edges])
    return parse_graph_text(text)


def _read_graph(args) -> LabeledGraph:
    if args.file and args.input:
        raise InputError("give either an inline graph or --file, not both")
    if args.file:
        return parse_graph_text(Path(args.file).read_text())
    if not args.input:
        raise InputError("no graph given")
    return _inline_graph(args.input)


def _int_arg(tokens: list[str], key: str) -> int:
    if len(tokens) != 1:
        raise InputError(f"expected a single '{key}=<int>' argument")
    tok = tokens[0]
    if tok.startswith(key + "="):
        tok = tok[len(key) + 1:]
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"expected '{key}=<int>', got {tokens[0]!r}") from None


def _parse_composition(text: str) -> Composition:
    try:
        return Composition(int(p) for p in text.replace(" ", "").strip("()").split(","))
    except ValueError:
        raise InputError(f"bad composition {text!r}") from None


def _ribbon_arg(tokens: list[str]) -> RibbonDiagram:
    text = " ".join(tokens).strip()
    if text.startswith("pattern="):
        word = text[len("pattern="):]
        if set(word) - {"a", "d"}:
            raise InputError(f"pattern must use only a and d, got {word!r}")
        return RibbonDiagram(pattern_to_composition(word))
    if text.startswith("composition="):
        return RibbonDiagram(_parse_composition(text[len("composition="):]))
    if text.startswith("path:"):
        G = parse_graph_text(text)
        word = "".join("a" if x < y else "d" for x, y in zip(G.order, G.order[1:]))
        return RibbonDiagram.from_pattern(word)
    raise InputError("ribbon input must be pattern=<word>, composition=<parts> or path: <labels>")


def _verdict_text(Q, m) -> str:
    pal, pal_w = is_palindromic(Q, m)
    sym, sym_w = is_symmetric(Q)
    pal_s = "yes" if pal else f"no (witness {pal_w[0]} at q^{pal_w[1]})"
    sym_s = "yes" if sym else f"no (witness {sym_w[0]}/{sym_w[1]})"
    return f"palindromic: {pal_s}, symmetric: {sym_s}"


def cmd_cqf(args) -> int:
    G = _read_graph(args)
    if G.n > MAX_N_CQF and not args.allow_large:
        raise InputError(f"n={G.n} exceeds {MAX_N_CQF}; pass --allow-large to override")
    Q = cqf(G, method=args.method, n_jobs=args.workers)
    if args.json:
        if args.with_verdicts:
            pal, pal_w = is_palindromic(Q, G.m)
            sym, sym_w = is_symmetric(Q)
            out = {
                "expansion": Q.to_dict(),
                "palindromic": pal,
                "palindromic_witness": None if pal else {"alpha": list(pal_w[0]), "power": pal_w[1]},
                "symmetric": sym,
                "witness": None if sym else [list(a) for a in sym_w],
            }
            print(json.dumps(out))
        else:
            print(Q.to_json())
        return 0
    print(f"{G}  (n={G.n}, m={G.m})")
    for alpha, poly in Q.items():
        print(f"  ({poly}) M{alpha}")
    print(_verdict_text(Q, G.m))
    return 0


def cmd_classify(args) -> int:
    n = _int_arg(args.input, "n")
    if n > MAX_N_CLASSIFY and not args.allow_large:
        raise InputError(f"n={n} exceeds {MAX_N_CLASSIFY}; pass --allow-large to override")
    if n < 2:
        raise InputError("classify needs n >= 2")
    report = lab.classify_paths(n, n_jobs=args.workers, max_n=max(n, MAX_N_CLASSIFY))
    text = report.to_json() if args.json else report.to_text()
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    if not report.theorem_holds:
        print(f"verification failed: symmetric patterns {report.symmetric_patterns}", file=sys.stderr)
        return 1
    return 0


def cmd_ribbon(args) -> int:
    R = _ribbon_arg(args.input)
    cs = corners(R)
    regular, sites = is_regular(R)
    info = {
        "pattern": R.pattern,
        "composition": list(R.composition),
        "lu": len(cs.lu),
        "rl": len(cs.rl),
        "lu_cells": [list(R.cells[i]) for i in cs.lu],
        "rl_cells": [list(R.cells[i]) for i in cs.rl],
        "regular": regular,
        "regular_sites": sites,
    }
    if args.sub:
        beta = _parse_composition(args.sub)
        info["subribbon"] = {"beta": list(beta), "anchor": args.anchor,
                             "matches": find_subribbon(R, beta, args.anchor)}
    if len(R.composition) not in (1, R.n):
        info["cases"] = [str(label) for label in lab.main_theorem_case_analysis(R)]
    if args.json:
        print(json.dumps(info))
        return 0
    print(render(R))
    print(f"composition: {R.composition}   pattern: {R.pattern or '-'}")
    print(f"LU={len(cs.lu)} RL={len(cs.rl)}")
    print(f"regular: {'yes' if regular else 'no'}" + (f" (sub-ribbons at cells {sites})" if sites else ""))
    if "subribbon" in info:
        sub = info["subribbon"]
        print(f"{Composition(sub['beta'])} sub-ribbon ({args.anchor}): "
              + (f"at cells {sub['matches']}" if sub["matches"] else "none"))
    if "cases" in info:
        print("cases: " + "; ".join(info["cases"]))
    return 0


def cmd_verify_star(args) -> int:
    n = _int_arg(args.input, "n")
    rows = lab.verify_star(n)
    if args.json:
        print(json.dumps([
            {"center": r.center, "palindromic": r.palindromic, "symmetric": r.symmetric,
             "expected_palindromic": r.expected_palindromic,
             "c_1_rest": list(r.c_1_rest.coeffs), "c_rest_1": list(r.c_rest_1.coeffs), "ok": r.ok}
            for r in rows
        ]))
    else:
        print("center  palindromic  symmetric  c(1,n-1)  c(n-1,1)  ok")
        for r in rows:
            print(f"{r.center:>6}  {str(r.palindromic):<11}  {str(r.symmetric):<9}  "
                  f"{str(r.c_1_rest):<8}  {str(r.c_rest_1):<8}  {'ok' if r.ok else 'FAIL'}")
    if not all(r.ok for r in rows):
        print(f"verification failed for star n={n}", file=sys.stderr)
        return 1
    return 0


def cmd_verify_bipartite(args) -> int:
    if args.file:
        chunks = [c for c in Path(args.file).read_text().split("---") if c.strip()]
        graphs = [parse_graph_text(c) for c in chunks]
    elif args.input:
        graphs = [_inline_graph(args.input)]
    else:
        sizes = [int(s) for s in args.sizes.split(",")]
        graphs = lab.random_trees_unequal_bipartition(args.random, sizes, args.seed)
    rows = lab.verify_bipartite(graphs)
    for r in rows:
        if r.status == "skipped":
            line = f"skipped  {r.graph}: {r.note}"
        else:
            line = (f"{'ok     ' if r.ok else 'FAIL   '}  {r.graph}: sides {r.sizes}, "
                    f"r={r.r} s={r.s} palindromic={r.palindromic}")
        print(line)
    if not all(r.ok for r in rows):
        print("verification failed", file=sys.stderr)
        return 1
    return 0


def cmd_witness(args) -> int:
    R = RibbonDiagram(_parse_composition(args.composition))
    if args.kind == "zeta":
        pairs = lab.admissible_pairs(R)
        i, b = (args.i, args.b) if args.i and args.b else pairs[0]
        sets = lab.stacked_sets(R, i, b)
        print(f"ribbon {R.composition}, rows {i},{i + 1}, b={b}: "
              f"|A|={len(sets['A'])} |B'|={len(sets['Bprime'])} |B|={len(sets['B'])}")
        for T in sets["A"].members[: args.limit]:
            print(f"  zeta({T.compact()}) = {lab.zeta(T, b, i).compact()}")
        W = lab.bprime_minus_b_witness(R, i, b)
        print(f"B' minus B witness: {W.compact()}")
        print(render(W))
    else:
        sets = lab.regular_sets(R)
        print(f"ribbon {R.composition}: |A|={len(sets['A'])} |B|={len(sets['B'])}")
        for T in sets["B"].members[: args.limit]:
            print(f"  psi({T.compact()}) = {lab.psi(T).compact()}")
        W = lab.psi_nonsurjectivity_witness(R, site=args.site)
        print(f"A member outside psi(B): {W.compact()}")
        print(render(W))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromqsym", description="Chromatic quasisymmetric functions of labeled graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workers=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if workers:
            p.add_argument("--workers", type=int, default=None,
                           help="worker processes (default: $CHROMQSYM_WORKERS or 1)")
            p.add_argument("--allow-large", action="store_true", help="lift the n safety bound")

    p = sub.add_parser("cqf", help="M-basis expansion with symmetry/palindromicity verdicts")
    p.add_argument("input", nargs="*", help="e.g. 'path: 3 4 1 2', 'star: n=5 center=3', 'n=3 1-2 2-3'")
    p.add_argument("--file", help="graph file in the plain-text format")
    p.add_argument("--method", choices=("fast", "oracle"), default="fast")
    p.add_argument("--with-verdicts", action="store_true", help="wrap JSON output with verdicts")
    common(p)
    p.set_defaults(func=cmd_cqf)

    p = sub.add_parser("classify", help="verdicts for every labeled path on n vertices")
    p.add_argument("input", nargs=1, help="n=<int>")
    p.add_argument("--output", help="write the report here instead of stdout")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ribbon", help="ribbon diagram, corners, regularity and sub-ribbon queries")
    p.add_argument("input", nargs="+", help="pattern=<word>, composition=<parts> or path: <labels>")
    p.add_argument("--sub", help="sub-ribbon composition to search for, e.g. 1,1,3")
    p.add_argument("--anchor", choices=ANCHORS, default="anywhere")
    common(p, workers=False)
    p.set_defaults(func=cmd_ribbon)

    p = sub.add_parser("verify-star", help="check the star-graph classification for one n")
    p.add_argument("input", nargs=1, help="n=<int>")
    common(p, workers=False)
    p.set_defaults(func=cmd_verify_star)

    p = sub.add_parser("verify-bipartite", help="check the unequal-bipartition criterion")
    p.add_argument("input", nargs="*", help="inline graph (otherwise random trees)")
    p.add_argument("--file", help="graphs in the plain-text format separated by '---' lines")
    p.add_argument("--random", type=int, default=50, help="number of random trees")
    p.add_argument("--sizes", default="4,6,8,10", help="tree sizes to draw from")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_bipartite)

    p = sub.add_parser("witness", help="example tableaux for the zeta and psi maps")
    p.add_argument("kind", choices=("zeta", "psi"))
    p.add_argument("composition", help="ribbon composition, e.g. 3,3,4")
    p.add_argument("--i", type=int, help="lower row of the adjacent pair (zeta)")
    p.add_argument("--b", type=int, help="repeated color (zeta)")
    p.add_argument("--site", type=int, help="first cell of the regular (2,1) sub-ribbon to use (psi)")
    p.add_argument("--limit", type=int, default=3, help="how many map examples to print")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        try:
            args.workers = default_workers()
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except lab.VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (InputError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

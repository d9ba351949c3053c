"""Command-line surface.

Subcommands: classify-tree, verify-claims, check-partition, find-partition,
census, trend, count, cliques-construct, trees, equivalence.  Data goes to
stdout (JSON unless --format says otherwise), diagnostics to stderr (enable
with TFREE_LOG=1).  Exit codes: 0 success, 2 assertion failure, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import census as X
from . import certify as C
from . import counting as K
from . import graphs as G
from . import suite as S
from . import trees as T
from .graphs import Family, Graph

EXIT_OK = 0
EXIT_ASSERTION = 2
EXIT_INPUT = 3


class InputError(ValueError):
    pass


def _parse_tree(text: str) -> T.Tree:
    try:
        if "-" in text:
            return T.tree_from_edge_text(text)
        return T.tree_from_graph(G.parse_graph6(text))
    except (ValueError, KeyError, IndexError) as exc:
        raise InputError(f"bad tree {text!r}: {exc}") from exc


def _parse_graph(text: str) -> Graph:
    try:
        if "-" in text:
            return T.tree_from_edge_text(text).to_graph()
        return G.parse_graph6(text)
    except (ValueError, KeyError, IndexError) as exc:
        raise InputError(f"bad graph {text!r}: {exc}") from exc


def _emit(payload, fmt: str, csv_rows: Optional[list[str]] = None) -> None:
    if fmt == "csv" and csv_rows is not None:
        print("\n".join(csv_rows))
    elif fmt == "text":
        print(_as_text(payload))
    else:
        print(json.dumps(payload, indent=1, sort_keys=True))


def _as_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, dict) for x in v)):
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            _as_text(v, indent) if isinstance(v, dict) else f"{pad}- {_inline(v)}"
            for v in payload
        )
    return f"{pad}{payload}"


def _inline(v) -> str:
    return json.dumps(v) if isinstance(v, list) else str(v)


# ---------------------------------------------------------------------------
# subcommand handlers (return exit codes)
# ---------------------------------------------------------------------------


def _cmd_classify_tree(args) -> int:
    t = _parse_tree(args.tree)
    cls = T.classify(t)
    matching, kind = T.matching_status(t)
    payload = {
        "schema": "tfree-classify/1",
        "tree_id": T.tree_id(t),
        "n": t.n,
        "edges": sorted(list(e) for e in t.edges),
        "alpha": T.alpha(t),
        "matching_kind": kind.value,
        "matching_edges": sorted(list(e) for e in matching.edges),
        "missed": sorted(matching.missed),
        "class": cls.kind.value,
        "center": cls.center,
        "base_vertices": sorted(G.bits(cls.base)) if cls.base is not None else None,
        "chain_edge": list(cls.chain.edge) if cls.chain else None,
    }
    result = S.SuiteResult()
    S.check_tree(t, result)
    result.trees_checked = 1
    payload["claims"] = result.to_json_dict()
    _emit(payload, args.format)
    return EXIT_OK if result.ok else EXIT_ASSERTION


def _cmd_verify_claims(args) -> int:
    res = S.verify_claims(args.max_n)
    _emit(res.to_json_dict(), args.format)
    return EXIT_OK if res.ok else EXIT_ASSERTION


def _cmd_check_partition(args) -> int:
    g = _parse_graph(args.graph)
    t = _parse_tree(args.tree)
    try:
        p = C.Partition.from_vector(args.parts)
    except C.CertifyError as exc:
        raise InputError(str(exc)) from exc
    if p.host_n != g.n:
        raise InputError("partition length does not match graph order")
    verdict = C.CertifyVerdict()
    wit = C.is_witnessing(g, p, t)
    verdict.witnessing = wit.witnessing
    verdict.failing_assignment = wit.failing_assignment
    if p.nonempty():
        structural, detail = C.structural_certifying(g, p, t)
        verdict.structural = structural
        ok_int, _, fail_int = C.is_interesting(g, p, t, args.threshold)
        verdict.interesting = ok_int
        if not structural:
            verdict.failing_condition = detail
        elif not ok_int:
            verdict.failing_condition = fail_int
    payload = verdict.to_json_dict()
    payload["schema"] = "tfree-verdict/1"
    if verdict.structural:
        payload["case"] = C.shape_certifying_case(g, p, t)
        payload["noncliques"] = sum(
            1 for m in p.parts if not G.is_clique_mask(g, m)
        )
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_find_partition(args) -> int:
    g = _parse_graph(args.graph)
    t = _parse_tree(args.tree)
    p = C.find_certifying(g, t, mode=args.mode, size_threshold=args.threshold)
    payload = {
        "schema": "tfree-found/1",
        "mode": args.mode,
        "found": p is not None,
        "parts": p.to_vector() if p is not None else None,
        "case": C.shape_certifying_case(g, p, t) if p is not None else None,
    }
    _emit(payload, args.format)
    return EXIT_OK if p is not None else EXIT_ASSERTION


def _cmd_census(args) -> int:
    t = _parse_tree(args.tree)
    rep = X.run_census(t, args.n, shards=args.shards, long_run=args.long_run)
    csv_rows = [
        "tree_id,n,total_graphs,t_free,sound_certified,avg_certificates",
        f"{rep.tree_id},{rep.n},{rep.total_graphs},{rep.t_free},{rep.sound_certified},{rep.avg_certificates_per_graph}",
    ]
    _emit(rep.to_json_dict(), args.format, csv_rows)
    return EXIT_OK


def _cmd_trend(args) -> int:
    t = _parse_tree(args.tree)
    rep = X.trend(t, range(args.n_min, args.n_max + 1), shards=args.shards)
    _emit(rep.to_json_dict(), args.format, rep.csv_rows())
    if rep.trend_holds is False:
        return EXIT_ASSERTION
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.family:
        fam = Family[args.family]
        rows = []
        ok = True
        for l in range(0, args.max_l + 1):
            exact = K.count_family(fam, l)
            entry = {"l": l, "count": exact}
            if l <= 6:
                oracle = K.count_family_oracle(fam, l)
                entry["oracle"] = oracle
                ok = ok and oracle == exact
            rows.append(entry)
        payload = {"schema": "tfree-count/1", "family": args.family, "rows": rows, "ok": ok}
        csv_rows = ["l,count,oracle"] + [
            f"{r['l']},{r['count']},{r.get('oracle', '')}" for r in rows
        ]
        _emit(payload, args.format, csv_rows)
        return EXIT_OK if ok else EXIT_ASSERTION
    if args.table == "families":
        rows = K.family_table_rows(args.max_l)
        csv_rows = ["l,f1,f2,f3,f4,bell,bell_times_2^l"] + [
            f"{r['l']},{r['f1']},{r['f2']},{r['f3']},{r['f4']},{r['bell']},{r['bell_times_2^l']}"
            for r in rows
        ]
        _emit({"schema": "tfree-count/1", "table": "families", "rows": rows}, args.format, csv_rows)
        return EXIT_OK
    if args.table == "matchings":
        ls = [int(x) for x in args.l_values.split(",")] if args.l_values else [10, 100, 1000, 10000]
        rows = K.matchings_table_rows(ls)
        csv_rows = ["l,matchings_log2,estimate_log2,ratio"] + [
            f"{r['l']},{r['matchings_log2']:.6f},{r['estimate_log2']:.6f},{r['ratio']:.6f}"
            for r in rows
        ]
        _emit({"schema": "tfree-count/1", "table": "matchings", "rows": rows}, args.format, csv_rows)
        return EXIT_OK
    raise InputError("count needs --family or --table")


def _cmd_cliques_construct(args) -> int:
    cc = C.edge_disjoint_cliques(args.j)
    payload = {
        "schema": "tfree-cliques/1",
        "j": cc.j,
        "part_size": cc.q,
        "prime": cc.r,
        "guaranteed": cc.r * cc.r,
        "count": len(cc.cliques),
        "cliques": [list(c) for c in cc.cliques],
    }
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_trees(args) -> int:
    ts = T.enumerate_trees(args.n)
    payload = {
        "schema": "tfree-trees/1",
        "n": args.n,
        "count": len(ts),
        "trees": [
            {
                "tree_id": T.tree_id(t),
                "edges": sorted(list(e) for e in t.edges),
                "alpha": T.alpha(t),
                "class": T.classify(t).kind.value if t.n >= 2 else None,
            }
            for t in ts
        ],
    }
    csv_rows = ["tree_id,alpha,class"] + [
        f"{r['tree_id']},{r['alpha']},{r['class']}" for r in payload["trees"]
    ]
    _emit(payload, args.format, csv_rows)
    return EXIT_OK


def _cmd_equivalence(args) -> int:
    t = _parse_tree(args.tree)
    rep = X.sampled_equivalence(t, args.n, args.samples, args.seed, shards=args.shards)
    _emit(rep.to_json_dict(), args.format)
    return EXIT_OK if not rep.discrepancies else EXIT_ASSERTION


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tfree",
        description="Verification lab for certifying partitions of graphs without a fixed induced tree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p = sub.add_parser("classify-tree", help="classify one tree and run its claim suite")
    p.add_argument("--tree", required=True, help='edge list "0-1,1-2,..." or graph6')
    add_format(p)
    p.set_defaults(func=_cmd_classify_tree)

    p = sub.add_parser("verify-claims", help="run the claim suite over all trees up to a size")
    p.add_argument("--max-n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_verify_claims)

    p = sub.add_parser("check-partition", help="witnessing/structural/interesting verdict")
    p.add_argument("--graph", required=True, help="graph6 (or edge list of a tree-shaped host)")
    p.add_argument("--tree", required=True)
    p.add_argument("--parts", required=True, help='part-index vector "0,1,0,0,1,..."')
    p.add_argument("--threshold", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_check_partition)

    p = sub.add_parser("find-partition", help="exhaustive certifying-partition search")
    p.add_argument("--graph", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--mode", choices=["sound", "interesting"], default="sound")
    p.add_argument("--threshold", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_find_partition)

    p = sub.add_parser("census", help="exhaustive labeled census for one tree and size")
    p.add_argument("--tree", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--long-run", action="store_true", help="allow n=8")
    add_format(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("trend", help="certified proportions over a size range")
    p.add_argument("--tree", required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_trend)

    p = sub.add_parser("count", help="exact counting tables")
    p.add_argument("--family", choices=["F1", "F2", "F3", "F4"])
    p.add_argument("--table", choices=["families", "matchings"])
    p.add_argument("--max-l", type=int, default=12)
    p.add_argument("--l-values", help="comma-separated sizes for the matchings table")
    add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("cliques-construct", help="edge-disjoint transversal cliques")
    p.add_argument("--j", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_cliques_construct)

    p = sub.add_parser("trees", help="all trees of one size up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("equivalence", help="sampled structural-vs-witnessing agreement")
    p.add_argument("--tree", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True, help="explicit seed (no ambient entropy)")
    p.add_argument("--shards", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_equivalence)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad input; remap to the input-error code
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"error": "input", "detail": str(exc)}))
        return EXIT_INPUT
    except (C.CertifyError, T.TreeError, G.GraphError, ValueError) as exc:
        print(json.dumps({"error": "input", "detail": str(exc)}))
        return EXIT_INPUT
    except AssertionError as exc:
        print(json.dumps({"error": "assertion", "detail": str(exc)}))
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())

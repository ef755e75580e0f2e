"""Command-line front door.

Exit codes: 0 success, 1 invariant failure, 2 input error.  All commands
read a graph document (JSON) unless noted; ``gen`` writes documents.
"""

from __future__ import annotations

import argparse
import json
import sys

from .planegraph import (
    GraphInputError,
    InvariantError,
    parse_plane_graph,
    build_dual,
    overlay_dot,
    check_strong_connectivity,
    biconnected_blocks,
)
from .arborescence import build_arb_tree, clocked_arborescence
from .rootpolytope import (
    coordinate_matrix,
    triangulation_from_arbtree,
    verify_shelling,
    f_vector,
    h_from_f,
    h_from_shelling,
)
from .parking import parking_for_dual
from .homfly import (
    CrossingCapExceeded,
    median_diagram,
    homfly_skein,
    top_coefficient,
    top_via_tree,
    top_via_h,
    top_via_p,
    homogeneous_top,
    DecoratedSubgraph,
)
from .laurent import conway_and_alexander
from .verify import verify_graph
from . import gen as genmod

COMMANDS = (
    "faces", "dual", "arbtree", "triangulate", "hvector", "parking",
    "top", "homfly", "homogeneous", "verify", "gen",
)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homflytop",
        description="Invariants of plane bipartite graphs and their special "
        "alternating links",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="graph document path ('-' for stdin)")
    parser.add_argument("--r0", help="root face as 'EDGE,ev' or 'EDGE,ve' dart")
    parser.add_argument("--kappa", type=int, help="distinguished edge id")
    parser.add_argument("--cap", type=int, default=14, help="oracle crossing cap")
    parser.add_argument(
        "--format", choices=("json", "text", "dot", "csv"), default="text"
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for gen")
    parser.add_argument("--count", type=int, default=1, help="graphs to generate")
    parser.add_argument(
        "--max-edges", type=int, default=10, help="edge cap for gen"
    )
    parser.add_argument(
        "--all-roots",
        action="store_true",
        help="report per-root results where meaningful",
    )
    return parser


def _load(args, with_document=False):
    if not args.input:
        raise GraphInputError("--input is required for this command")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    doc = json.loads(text)
    if args.kappa is not None:
        doc["kappa"] = args.kappa
        doc.pop("r0", None)
    if args.r0 is not None:
        try:
            edge, direction = args.r0.split(",")
            doc["r0"] = [int(edge), direction.strip()]
        except ValueError as exc:
            raise GraphInputError(f"--r0 must look like '3,ve': {exc}") from exc
        if args.kappa is None:
            doc.pop("kappa", None)
    g, dual = parse_plane_graph(doc)
    if with_document:
        return g, dual, doc
    return g, dual


def _emit(payload, args, as_text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(as_text(payload))


def cmd_faces(args) -> int:
    g, dual = _load(args)
    if args.format == "dot":
        print(g.to_dot())
        return 0
    payload = {
        "faces": [
            [[c, "ev" if d == 0 else "ve"] for c, d in walk] for walk in g.faces
        ],
        "r0": dual.r0,
    }
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"face {i}: " + " ".join(f"{c}{'>' if d == 'ev' else '<'}" for c, d in walk)
            for i, walk in enumerate(p["faces"])
        ) + f"\nr0 = face {p['r0']}",
    )
    return 0


def cmd_dual(args) -> int:
    g, dual = _load(args)
    if args.format == "dot":
        print(overlay_dot(g, dual))
        return 0
    payload = {
        "edges": [[dual.tail[c], dual.head[c]] for c in range(dual.n_edges)],
        "r0": dual.r0,
        "kappa": dual.kappa,
        "strongly_connected": check_strong_connectivity(dual),
    }
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"{c}: r{t} -> r{h}" for c, (t, h) in enumerate(p["edges"])
        ) + f"\nr0 = r{p['r0']}, kappa = {p['kappa']}",
    )
    return 0


def cmd_arbtree(args) -> int:
    g, dual = _load(args)
    tree = build_arb_tree(dual)
    if args.format == "dot":
        print(tree.to_dot())
        return 0
    payload = tree.to_json()
    payload["clocked"] = sorted(clocked_arborescence(dual))
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"type {leaf['type']}: A={leaf['arborescence']} S={leaf['skipped']} "
            f"k={leaf['k']}"
            for leaf in p["leaves"]
        ),
    )
    return 0


def cmd_triangulate(args) -> int:
    g, dual = _load(args)
    tree = build_arb_tree(dual)
    tri = triangulation_from_arbtree(tree, g)
    counts = verify_shelling(tri)
    payload = tri.to_json()
    payload["attach_counts"] = counts
    payload["coordinate_matrix"] = coordinate_matrix(g)
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"simplex {i}: {s}" for i, s in enumerate(p["simplices"])
        ) + f"\nattach counts: {p['attach_counts']}",
    )
    return 0


def cmd_hvector(args) -> int:
    g, dual = _load(args)
    pairs = dual.admissible_pairs() if args.all_roots else [(dual.r0, dual.kappa)]
    results = []
    for r0, kappa in pairs:
        tree = build_arb_tree(dual.with_root(r0, kappa))
        tri = triangulation_from_arbtree(tree, g)
        counts = verify_shelling(tri)
        f = f_vector(tri)
        h = h_from_f(f)
        if h != h_from_shelling(counts, tri.dimension):
            raise InvariantError("h-vector routes disagree")
        results.append(
            {
                "r0": r0,
                "kappa": kappa,
                "f": str(f),
                "h": str(h),
                "f_coeffs": sorted(f.coeffs.items()),
                "h_coeffs": sorted(h.coeffs.items()),
            }
        )
    if args.all_roots and len({r["h"] for r in results}) != 1:
        raise InvariantError("h-vector depends on the (r0, kappa) choice")
    payload = {"results": results}
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"r0={r['r0']} kappa={r['kappa']}: f = {r['f']}; h = {r['h']}"
            for r in p["results"]
        ),
    )
    return 0


def cmd_parking(args) -> int:
    g, dual = _load(args)
    roots = (
        sorted({r for r, _ in dual.admissible_pairs()})
        if args.all_roots
        else [dual.r0]
    )
    results = []
    for r0 in roots:
        kappa = min(c for c in range(dual.n_edges) if dual.head[c] == r0)
        rooted = dual.with_root(r0, kappa)
        parkings, p = parking_for_dual(rooted)
        results.append(
            {
                "r0": r0,
                "functions": [
                    {"values": {str(k): v for k, v in sorted(pi.items())},
                     "index": sum(pi.values())}
                    for pi in parkings
                ],
                "p": str(p),
                "p_coeffs": sorted(p.coeffs.items()),
            }
        )
    if args.all_roots and len({r["p"] for r in results}) != 1:
        raise InvariantError("parking enumerator depends on the root")
    if args.format == "csv":
        print("r0,exponent,coefficient")
        for r in results:
            for e, c in r["p_coeffs"]:
                print(f"{r['r0']},{e},{c}")
        return 0
    payload = {"results": results}
    _emit(
        payload, args,
        lambda p: "\n".join(
            f"r0={r['r0']}: p(u) = {r['p']} ({len(r['functions'])} parking functions)"
            for r in p["results"]
        ),
    )
    return 0


def cmd_top(args) -> int:
    g, dual = _load(args)
    n, s = g.n_edges, g.n_vertices
    tree = build_arb_tree(dual)
    tri = triangulation_from_arbtree(tree, g)
    h = h_from_f(f_vector(tri))
    _, p = parking_for_dual(dual)
    t_tree = top_via_tree(tree, n, s)
    t_h = top_via_h(h, n, s)
    t_p = top_via_p(p, n, s)
    if not (t_tree == t_h == t_p):
        raise InvariantError("top formulas disagree")
    payload = {
        "z_exponent": t_tree.z_exponent,
        "top": str(t_tree.poly),
        "routes": {"tree": str(t_tree.poly), "h": str(t_h.poly), "p": str(t_p.poly)},
    }
    if n <= args.cap:
        P = homfly_skein(median_diagram(g), cap=args.cap)
        oracle = top_coefficient(P, n, s)
        payload["oracle"] = str(oracle.poly)
        if oracle.poly != t_tree.poly:
            raise InvariantError("oracle top disagrees with the formulas")
    _emit(
        payload, args,
        lambda p: f"top (coefficient of z^{p['z_exponent']}) = {p['top']}",
    )
    return 0


def cmd_homfly(args) -> int:
    g, dual = _load(args)
    d = median_diagram(g)
    P = homfly_skein(d, cap=args.cap)
    nabla, alex, half = conway_and_alexander(P)
    payload = {
        "homfly": str(P),
        "pd": d.pd_code(),
        "n": d.n_crossings,
        "s": d.seifert_circle_count(),
        "writhe": d.writhe(),
        "conway": str(nabla),
        "alexander": str(alex),
        "alexander_half_integer": half,
    }
    _emit(
        payload, args,
        lambda p: (
            f"P(v,z) = {p['homfly']}\n"
            f"n = {p['n']}, s = {p['s']}, writhe = {p['writhe']}\n"
            f"conway = {p['conway']}\nalexander = {p['alexander']}"
            + (" (half-integer graded)" if p["alexander_half_integer"] else "")
        ),
    )
    return 0


def cmd_homogeneous(args) -> int:
    g, dual, doc = _load(args, with_document=True)
    signs = [int(s) for s in doc.get("signs", [1] * g.n_edges)]
    if len(signs) != g.n_edges:
        raise GraphInputError("signs list must cover every edge")
    names = list(g.e_vertices) + list(g.v_vertices)
    blocks = biconnected_blocks(names, list(g.edges), signs)
    pos, neg = [], []
    for block in blocks.blocks:
        sub = _block_subgraph(g, block.edge_ids)
        sub_dual = build_dual(sub, kappa_edge=0)
        _, p = parking_for_dual(sub_dual)
        (pos if block.sign > 0 else neg).append(p)
    formula = homogeneous_top(blocks, pos, neg)
    payload = {
        "blocks": [
            {"sign": b.sign, "edges": list(b.edge_ids)} for b in blocks.blocks
        ],
        "writhe": blocks.writhe,
        "top": str(formula),
    }
    if g.n_edges <= args.cap:
        dotted = frozenset(c for c, s in enumerate(signs) if s < 0)
        d = median_diagram(
            g, DecoratedSubgraph(frozenset(range(g.n_edges)), dotted)
        )
        P = homfly_skein(d, cap=args.cap)
        slice_ = top_coefficient(P, d.n_crossings, d.seifert_circle_count())
        payload["oracle"] = str(slice_.poly)
        if slice_.poly != formula:
            raise InvariantError("product formula disagrees with the oracle")
    _emit(payload, args, lambda p: f"top = {p['top']}")
    return 0


def _block_subgraph(g, edge_ids):
    from .planegraph import PlaneBipartiteGraph

    keep = set(edge_ids)
    edge_map = {c: i for i, c in enumerate(sorted(keep))}
    touched = g.incident_vertices(keep)
    edges = [g.edges[c] for c in sorted(keep)]
    rotations = {
        x: [edge_map[c] for c in g.rotations[x] if c in keep]
        for x in g.rotations
        if x in touched
    }
    return PlaneBipartiteGraph(
        [e for e in g.e_vertices if e in touched],
        [v for v in g.v_vertices if v in touched],
        edges,
        rotations,
    )


def cmd_verify(args) -> int:
    g, dual = _load(args)
    report = verify_graph(g, dual, cap=args.cap)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for check in report.checks:
            mark = "ok " if check["ok"] else "FAIL"
            detail = f"  ({check['detail']})" if check["detail"] else ""
            print(f"[{mark}] {check['invariant']}{detail}")
        print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def cmd_gen(args) -> int:
    docs = genmod.corpus_documents(args.seed, args.count, max_edges=args.max_edges)
    for doc in docs:
        print(json.dumps(doc, sort_keys=True))
    return 0


HANDLERS = {
    "faces": cmd_faces,
    "dual": cmd_dual,
    "arbtree": cmd_arbtree,
    "triangulate": cmd_triangulate,
    "hvector": cmd_hvector,
    "parking": cmd_parking,
    "top": cmd_top,
    "homfly": cmd_homfly,
    "homogeneous": cmd_homogeneous,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (GraphInputError, CrossingCapExceeded, FileNotFoundError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "input", "message": str(exc)}), file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(json.dumps({"error": "invariant", "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Whole-pipeline verification of a plane bipartite graph.

For every admissible (root, kappa) pair the tree of arborescences is built
and checked against the brute-force enumeration, the triangulation is
validated and shelled, the two h-vector routes are compared, the parking
bijection is round-tripped, and the three top formulas are compared with
each other and (under the crossing cap) with the skein oracle's z-slice.
Morton audits run on the full diagram and on every type-II leaf diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import Laurent1
from .planegraph import (
    PlaneBipartiteGraph,
    DualDigraph,
    InvariantError,
    check_strong_connectivity,
)
from .arborescence import (
    build_arb_tree,
    clocked_arborescence,
    spanning_arborescences_bruteforce,
)
from .rootpolytope import (
    triangulation_from_arbtree,
    verify_shelling,
    f_vector,
    h_from_f,
    h_from_shelling,
)
from .parking import (
    parking_for_dual,
    parking_from_leaf,
    arborescence_from_parking,
    leaf_enumerator,
)
from .homfly import (
    median_diagram,
    homfly_skein,
    top_coefficient,
    top_via_tree,
    top_via_h,
    top_via_p,
    decorated_subgraph_at,
    morton_audit,
)


@dataclass
class VerifyReport:
    ok: bool
    checks: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks.append({"invariant": name, "ok": bool(ok), "detail": detail})
        if not ok:
            self.ok = False

    def failures(self):
        return [c for c in self.checks if not c["ok"]]

    def to_json(self):
        return {"ok": self.ok, "summary": self.summary, "checks": self.checks}


def verify_graph(
    g: PlaneBipartiteGraph, dual: DualDigraph, cap: int = 14
) -> VerifyReport:
    report = VerifyReport(ok=True)
    n, s = g.n_edges, g.n_vertices
    report.record(
        "euler-formula", g.n_vertices - g.n_edges + g.n_faces == 2,
        f"V={g.n_vertices} E={g.n_edges} F={g.n_faces}",
    )
    report.record("dual-strongly-connected", check_strong_connectivity(dual))

    oracle_top = None
    oracle_note = "skipped (over crossing cap)"
    if n <= cap:
        diagram = median_diagram(g)
        P = homfly_skein(diagram, cap=cap)
        morton_audit(diagram, strict=False, cap=cap)
        ns = diagram.seifert_circle_count()
        report.record(
            "median-counts", diagram.n_crossings == n and ns == s,
            f"n={diagram.n_crossings} s={ns}",
        )
        oracle_top = top_coefficient(P, n, s).poly
        oracle_note = str(oracle_top)
        report.summary["homfly"] = str(P)

    tops: set[Laurent1] = set()
    h_values: set[Laurent1] = set()
    p_by_root: dict[int, Laurent1] = {}
    brute_by_root: dict[int, set] = {}
    for r0, kappa in dual.admissible_pairs():
        rooted = dual.with_root(r0, kappa)
        if r0 not in brute_by_root:
            brute_by_root[r0] = spanning_arborescences_bruteforce(rooted)
        brute = brute_by_root[r0]
        tree = build_arb_tree(rooted)
        leaves = tree.type_one_leaves()
        tag = f"r0={r0} kappa={kappa}"

        report.record(
            f"leaves-match-bruteforce [{tag}]",
            {a for a, _ in leaves} == brute and len(leaves) == len(brute),
            f"{len(leaves)} type-I leaves",
        )
        report.record(
            f"clocked-is-first-leaf [{tag}]",
            leaves[0][0] == clocked_arborescence(rooted) and leaves[0][1] == 0,
        )

        tri = triangulation_from_arbtree(tree, g)
        counts = verify_shelling(tri)
        f = f_vector(tri)
        h = h_from_f(f)
        report.record(
            f"h-from-f-equals-h-from-shelling [{tag}]",
            h == h_from_shelling(counts, tri.dimension),
        )
        report.record(
            f"attach-counts-match-skipped [{tag}]",
            sorted(counts) == sorted(k for _, k in leaves),
        )
        report.record(f"h-count [{tag}]", h.eval_int(1) == len(tri.simplices))
        h_values.add(h)

        parkings, p = parking_for_dual(rooted)
        p_by_root[r0] = p
        report.record(f"leaf-enumerator-equals-p [{tag}]", leaf_enumerator(tree) == p)
        round_trips = True
        images = set()
        for leaf in tree.leaves:
            if leaf.leaf_type != "I":
                continue
            pi = parking_from_leaf(rooted, leaf.a, leaf.s)
            images.add(tuple(sorted(pi.items())))
            if sum(pi.values()) != len(leaf.s):
                round_trips = False
            if arborescence_from_parking(rooted, pi) != leaf.a:
                round_trips = False
        expected = {tuple(sorted(pi.items())) for pi in parkings}
        report.record(f"parking-bijection [{tag}]", round_trips and images == expected)

        t_tree = top_via_tree(tree, n, s)
        t_h = top_via_h(h, n, s)
        t_p = top_via_p(p, n, s)
        agree = t_tree == t_h == t_p
        if oracle_top is not None:
            agree = agree and t_tree.poly == oracle_top
        report.record(
            f"top-three-ways [{tag}]", agree,
            f"tree={t_tree.poly} oracle={oracle_note}",
        )
        tops.add(t_tree.poly)

        if n <= cap:
            strict_ok = True
            try:
                for leaf in tree.type_two_leaves():
                    sub = decorated_subgraph_at(g, leaf)
                    morton_audit(median_diagram(g, sub), strict=True, cap=cap)
            except InvariantError as exc:
                strict_ok = False
                report.record(f"type-two-morton-strict [{tag}]", False, str(exc))
            if strict_ok:
                report.record(f"type-two-morton-strict [{tag}]", True)

    report.record("p-root-independent", len(set(p_by_root.values())) == 1)
    report.record("h-choice-independent", len(h_values) == 1)
    report.record("top-choice-independent", len(tops) == 1)
    report.summary.update(
        {
            "edges": n,
            "vertices": s,
            "faces": g.n_faces,
            "arborescences": {str(r): len(b) for r, b in sorted(brute_by_root.items())},
            "h": str(next(iter(h_values))),
            "p_by_root": {str(r): str(p) for r, p in sorted(p_by_root.items())},
            "top": str(next(iter(tops))),
        }
    )
    return report

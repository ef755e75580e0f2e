"""Spanning arborescences of the directed dual, organized in a binary tree.

The augmenting-edge search walks the boundary of a regular neighborhood of
the current root component.  That boundary is realized combinatorially as
the contour walk around the tree in the embedded dual: each tree edge is
traversed twice, and at every dual vertex the incident edge ends are scanned
in the inherited rotation order.  The walk starts at the end of kappa's dual
edge at the root face and runs counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .planegraph import DualDigraph, InvariantError


def _root_component(dual: DualDigraph, a: frozenset[int]) -> set[int]:
    seen = {dual.r0}
    grew = True
    while grew:
        grew = False
        for c in a:
            if dual.tail[c] in seen and dual.head[c] not in seen:
                seen.add(dual.head[c])
                grew = True
    return seen


def _contour_slots(dual: DualDigraph, a: frozenset[int]):
    """Yield non-tree edge-end slots along the contour of the root component.

    A slot is the primal dart (c, 0) or (c, 1): the tail end or head end of
    dual edge c at the current vertex.  Tree edge ends are traversed, not
    yielded.
    """
    start_r, start_i = dual.slot_index[(dual.kappa, 1)]
    r, i = start_r, start_i
    steps = 0
    limit = 4 * dual.n_edges + 4
    while True:
        steps += 1
        if steps > limit:
            raise InvariantError("contour walk failed to close up")
        walk = dual.rotations[r]
        i = (i + 1) % len(walk)
        if (r, i) == (start_r, start_i):
            return
        c, end = walk[i]
        if c in a:
            # cross to the other end of the tree edge and keep scanning there
            r, i = dual.slot_index[(c, 1 - end)]
            continue
        yield (c, end)


def augmenting_edge(
    dual: DualDigraph, a: frozenset[int], s: frozenset[int]
) -> int | None:
    """First dual edge along the contour that can extend the arborescence.

    The edge must leave the root component of ``a`` toward an isolated
    vertex and must not have been skipped.  Ends pointing into the root
    component and edges internal to it are passed over silently.
    """
    component = _root_component(dual, a)
    for c, end in _contour_slots(dual, a):
        if end != 0:
            continue  # head end: the dual edge points into this vertex
        if dual.head[c] in component:
            continue  # loop at or edge into the root component
        if c in s:
            continue
        return c
    return None


def clocked_arborescence(dual: DualDigraph) -> frozenset[int]:
    """Greedy depth-first arborescence from (r0, kappa).

    Turns counterclockwise around each visited vertex, descending along each
    selected edge immediately and resuming the scan on return.  Independent
    of the arborescence-tree machinery; equals the tree's rightmost leaf.
    """
    visited = {dual.r0}
    chosen: set[int] = set()

    def scan(r: int, start_i: int):
        walk = dual.rotations[r]
        i = start_i
        for _ in range(len(walk)):
            i = (i + 1) % len(walk)
            c, end = walk[i]
            if end != 0 or dual.head[c] in visited:
                continue
            chosen.add(c)
            visited.add(dual.head[c])
            _, j = dual.slot_index[(c, 1)]
            scan(dual.head[c], j)

    _, start = dual.slot_index[(dual.kappa, 1)]
    scan(dual.r0, start)
    if len(visited) != dual.n_vertices:
        raise InvariantError("clocked search did not reach every dual vertex")
    return frozenset(chosen)


@dataclass
class ArbNode:
    """Node of the binary arborescence tree: (arborescence, skipped edges)."""

    a: frozenset[int]
    s: frozenset[int]
    augmenting: int | None = None
    right: "ArbNode | None" = None
    left: "ArbNode | None" = None
    leaf_type: str | None = None  # "I" or "II" for leaves

    @property
    def is_leaf(self) -> bool:
        return self.augmenting is None


@dataclass
class ArbTree:
    """Materialized binary tree with leaves in right-to-left order."""

    dual: DualDigraph
    root: ArbNode
    leaves: list[ArbNode]

    def type_one_leaves(self) -> list[tuple[frozenset[int], int]]:
        """(arborescence, skipped count) per type-I leaf, rightmost first."""
        return [(leaf.a, len(leaf.s)) for leaf in self.leaves if leaf.leaf_type == "I"]

    def type_two_leaves(self) -> list[ArbNode]:
        return [leaf for leaf in self.leaves if leaf.leaf_type == "II"]

    def to_json(self):
        return {
            "r0": self.dual.r0,
            "kappa": self.dual.kappa,
            "leaves": [
                {
                    "type": leaf.leaf_type,
                    "arborescence": sorted(leaf.a),
                    "skipped": sorted(leaf.s),
                    "k": len(leaf.s),
                }
                for leaf in self.leaves
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph ArbTree {", "  ordering=out;"]
        names: dict[int, str] = {}

        def visit(node: ArbNode):
            idx = len(names)
            names[id(node)] = f"n{idx}"
            label = f"A={sorted(node.a)} S={sorted(node.s)}"
            if node.leaf_type:
                label += f" type {node.leaf_type}"
            lines.append(f'  n{idx} [label="{label}"];')
            if not node.is_leaf:
                visit(node.right)
                visit(node.left)
                lines.append(f"  n{idx} -> {names[id(node.right)]} [label=R];")
                lines.append(f"  n{idx} -> {names[id(node.left)]} [label=L];")

        visit(self.root)
        lines.append("}")
        return "\n".join(lines)


def build_arb_tree(dual: DualDigraph) -> ArbTree:
    """Grow the full binary tree of (arborescence, skipped set) nodes.

    Right descendant adds the augmenting edge, left descendant skips it.
    Leaves are collected rightmost-first, so the first type-I leaf is the
    clocked arborescence.
    """
    spanning_size = dual.n_vertices - 1
    leaves: list[ArbNode] = []

    def grow(a: frozenset[int], s: frozenset[int]) -> ArbNode:
        delta = augmenting_edge(dual, a, s)
        node = ArbNode(a, s, augmenting=delta)
        if delta is None:
            node.leaf_type = "I" if len(a) == spanning_size else "II"
            if node.leaf_type == "II":
                _check_type_two(dual, a, s)
            leaves.append(node)
            return node
        node.right = grow(a | {delta}, s)
        node.left = grow(a, s | {delta})
        return node

    root = grow(frozenset(), frozenset())
    return ArbTree(dual, root, leaves)


def _check_type_two(dual: DualDigraph, a: frozenset[int], s: frozenset[int]):
    component = _root_component(dual, a)
    if len(component) == dual.n_vertices:
        raise InvariantError("leaf classified II but arborescence is spanning")
    for c in range(dual.n_edges):
        if dual.tail[c] in component and dual.head[c] not in component and c not in s:
            raise InvariantError(
                f"type II leaf has unskipped escaping edge {c}: "
                "contradicts the leaf classification"
            )


def spanning_arborescences_bruteforce(dual: DualDigraph) -> set[frozenset[int]]:
    """All spanning arborescences, found independently of the tree machinery.

    Enumerates spanning trees of the underlying undirected dual graph and
    keeps the ones all of whose edges point away from the root.
    """
    n = dual.n_vertices
    found: set[frozenset[int]] = set()
    non_loops = [c for c in range(dual.n_edges) if dual.tail[c] != dual.head[c]]
    if n == 1:
        return {frozenset()}
    for subset in combinations(non_loops, n - 1):
        # undirected spanning tree check
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for c in subset:
            ra, rb = find(dual.tail[c]), find(dual.head[c])
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if not acyclic:
            continue
        # orient from r0: every edge's tail must be the endpoint nearer r0
        dist = {dual.r0: 0}
        frontier = [dual.r0]
        order_ok = True
        while frontier:
            nxt = []
            for r in frontier:
                for c in subset:
                    if dual.tail[c] == r and dual.head[c] not in dist:
                        dist[dual.head[c]] = dist[r] + 1
                        nxt.append(dual.head[c])
                    elif dual.head[c] == r and dual.tail[c] not in dist:
                        # edge points toward r0: not an arborescence
                        order_ok = False
            frontier = nxt
        if order_ok and len(dist) == n:
            found.add(frozenset(subset))
    return found

"""Parking functions of a rooted digraph, their enumerator, and the
bijection with type-I leaves of the arborescence tree.

The brute-force subset test is the semantic oracle straight from the
definition; the tree bijection is the structured route.  A naive
deletion-contraction Tutte polynomial supports the two cross-check
identities (doubled digraphs, and duals whose E class is all degree 2).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .laurent import Laurent1, Laurent2
from .planegraph import DualDigraph, InvariantError
from .arborescence import ArbTree, augmenting_edge


# -- definitions on a generic rooted digraph --------------------------------
# A digraph is (n_vertices, arcs, r0) with arcs a sequence of (tail, head)
# pairs over vertices 0..n-1.  DualDigraph supplies this via .arcs().


def relative_indegree(arcs, r_subset, r) -> int:
    """Edges ending at r whose startpoint lies outside the subset."""
    r_subset = set(r_subset)
    if r not in r_subset:
        raise ValueError("vertex must belong to the subset")
    return sum(1 for tail, head in arcs if head == r and tail not in r_subset)


def is_parking_function(values: dict[int, int], n_vertices: int, arcs, r0: int) -> bool:
    """Brute-force check of the subset condition.

    ``values`` must be defined exactly on the non-root vertices; every
    nonempty subset of them must contain a vertex whose value is below its
    relative in-degree from outside the subset.
    """
    others = [r for r in range(n_vertices) if r != r0]
    if set(values) != set(others):
        raise ValueError("function must be defined exactly on the non-root vertices")
    for mask in range(1, 1 << len(others)):
        subset = {others[i] for i in range(len(others)) if mask >> i & 1}
        if not any(
            values[r] < relative_indegree(arcs, subset, r) for r in subset
        ):
            return False
    return True


def enumerate_parking(n_vertices: int, arcs, r0: int) -> list[dict[int, int]]:
    """All parking functions, by brute force over the finite value box."""
    others = [r for r in range(n_vertices) if r != r0]
    if not others:
        return [{}]
    bounds = []
    for r in others:
        indeg = sum(1 for tail, head in arcs if head == r and tail != r)
        bounds.append(range(indeg))
    out = []
    for combo in product(*bounds):
        values = dict(zip(others, combo))
        if is_parking_function(values, n_vertices, arcs, r0):
            out.append(values)
    return out


def parking_enumerator(parking_functions) -> Laurent1:
    """p(u) = sum of u^(index) over the given parking functions."""
    out: dict[int, int] = {}
    for values in parking_functions:
        i = sum(values.values())
        out[i] = out.get(i, 0) + 1
    return Laurent1(out, "u")


def parking_for_dual(dual: DualDigraph) -> tuple[list[dict[int, int]], Laurent1]:
    parkings = enumerate_parking(dual.n_vertices, dual.arcs(), dual.r0)
    return parkings, parking_enumerator(parkings)


# -- the bijection with type-I leaves ----------------------------------------


def parking_from_leaf(
    dual: DualDigraph, a: frozenset[int], s: frozenset[int]
) -> dict[int, int]:
    """Count, per non-root vertex, the skipped edges pointing to it."""
    if len(a) != dual.n_vertices - 1:
        raise ValueError("leaf is not type I: arborescence is not spanning")
    values = {r: 0 for r in range(dual.n_vertices) if r != dual.r0}
    for c in s:
        head = dual.head[c]
        if head == dual.r0:
            raise InvariantError("skipped edge points at the root")
        values[head] += 1
    return values


def arborescence_from_parking(dual: DualDigraph, values: dict[int, int]) -> frozenset[int]:
    """Walk the (lazily evaluated) arborescence tree guided by the function.

    At the augmenting edge delta = (q, r): skip it while the function value
    at r exceeds the number of already-skipped edges into r, else add it.
    Parking functions always end at a type-I leaf.
    """
    if not is_parking_function(values, dual.n_vertices, dual.arcs(), dual.r0):
        raise ValueError("not a parking function of this rooted digraph")
    a: frozenset[int] = frozenset()
    s: frozenset[int] = frozenset()
    skipped_into = {r: 0 for r in values}
    while True:
        delta = augmenting_edge(dual, a, s)
        if delta is None:
            if len(a) != dual.n_vertices - 1:
                raise InvariantError(
                    "parking-guided walk reached a type II leaf"
                )
            return a
        r = dual.head[delta]
        if values[r] > skipped_into[r]:
            s = s | {delta}
            skipped_into[r] += 1
        else:
            a = a | {delta}


def leaf_enumerator(tree: ArbTree) -> Laurent1:
    """Enumerator of skipped-edge counts over type-I leaves."""
    out: dict[int, int] = {}
    for _, k in tree.type_one_leaves():
        out[k] = out.get(k, 0) + 1
    return Laurent1(out, "u")


# -- Tutte polynomial and the two cross-check identities ---------------------


def tutte(n_vertices: int, edges) -> Laurent2:
    """Tutte polynomial of a connected undirected multigraph.

    Deletion-contraction with loop/bridge base cases, memoized on a
    canonical form.  Edges are (u, w) pairs over 0..n-1; loops allowed.
    Intended for small graphs (the cross-checks cap at ten edges).
    """
    edges = [tuple(sorted(pair)) for pair in edges]
    if len(edges) > 10:
        raise ValueError("tutte computation capped at 10 edges")
    if not _connected(n_vertices, edges):
        raise ValueError("graph is not connected")
    return _tutte_canonical(_canonical_multigraph(n_vertices, edges))


def _connected(n_vertices, edges) -> bool:
    if n_vertices <= 1:
        return True
    adjacency = {x: set() for x in range(n_vertices)}
    for u, w in edges:
        adjacency[u].add(w)
        adjacency[w].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for y in adjacency[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n_vertices


def _canonical_multigraph(n_vertices, edges) -> tuple:
    """Relabel vertices by descending degree; edges sorted."""
    # exact canonicity is not required, only determinism; the memo just
    # sees more hits when the relabeled forms coincide
    degree = {x: 0 for x in range(n_vertices)}
    for u, w in edges:
        degree[u] += 1
        degree[w] += 1
    order = sorted(range(n_vertices), key=lambda x: (-degree[x], x))
    relabel = {x: i for i, x in enumerate(order)}
    new_edges = tuple(sorted(tuple(sorted((relabel[u], relabel[w]))) for u, w in edges))
    return (n_vertices, new_edges)


@lru_cache(maxsize=None)
def _tutte_canonical(key: tuple) -> Laurent2:
    n_vertices, edges = key
    if not edges:
        return Laurent2.const(1, ("x", "y"))
    edges = list(edges)
    u, w = edges[0]
    rest = edges[1:]
    if u == w:
        # loop: y * T(G - e)
        return Laurent2.term(1, 0, 1, ("x", "y")) * _tutte_canonical(
            _canonical_multigraph(n_vertices, rest)
        )
    if not _connected(n_vertices, rest):
        # bridge: x * T(G / e)
        merged = _contract(n_vertices, rest, u, w)
        return Laurent2.term(1, 1, 0, ("x", "y")) * _tutte_canonical(
            _canonical_multigraph(*merged)
        )
    deleted = _tutte_canonical(_canonical_multigraph(n_vertices, rest))
    contracted = _tutte_canonical(_canonical_multigraph(*_contract(n_vertices, rest, u, w)))
    return deleted + contracted


def _contract(n_vertices, edges, u, w):
    """Identify w with u and relabel to a dense range."""
    def squash(x):
        x = u if x == w else x
        return x - 1 if x > w else x

    new_edges = [tuple(sorted((squash(a), squash(b)))) for a, b in edges]
    return n_vertices - 1, new_edges


def doubled_digraph(n_vertices: int, edges):
    """Replace each undirected edge by a pair of opposite arcs."""
    arcs = []
    for u, w in edges:
        arcs.append((u, w))
        arcs.append((w, u))
    return n_vertices, arcs


def tutte_doubled_identity(n_vertices: int, edges, r0: int = 0) -> bool:
    """Check p_J(u) = u^b1(K) * T_K(1, 1/u) for J the doubled digraph of K."""
    t = tutte(n_vertices, edges)
    b1 = len(edges) - n_vertices + 1
    # u^b1 * T(1, 1/u): term x^i y^j evaluates to u^(b1 - j)
    expected: dict[int, int] = {}
    for (_, j), c in t.coeffs.items():
        e = b1 - j
        expected[e] = expected.get(e, 0) + c
    if any(e < 0 for e in expected):
        return False
    _, arcs = doubled_digraph(n_vertices, edges)
    p = parking_enumerator(enumerate_parking(n_vertices, arcs, r0))
    return p == Laurent1(expected, "u")


def tutte_dual_identity(dual: DualDigraph) -> bool:
    """Check p_G*(u) = u^(|V|-1) * T_K*(1/u, 1) when E is all degree 2.

    Here K* is the graph on the V class whose edges are the E-vertices.
    """
    g = dual.graph
    neighbors: dict[str, list[str]] = {e: [] for e in g.e_vertices}
    for e, v in g.edges:
        neighbors[e].append(v)
    if any(len(vs) != 2 for vs in neighbors.values()):
        raise ValueError("identity requires every E-vertex to have degree 2")
    vpos = {v: i for i, v in enumerate(g.v_vertices)}
    kstar_edges = [tuple(sorted((vpos[a], vpos[b]))) for a, b in neighbors.values()]
    t = tutte(len(g.v_vertices), kstar_edges)
    shift = len(g.v_vertices) - 1
    expected: dict[int, int] = {}
    for (i, _), c in t.coeffs.items():
        e = shift - i
        expected[e] = expected.get(e, 0) + c
    if any(e < 0 for e in expected):
        return False
    _, p = parking_for_dual(dual)
    return p == Laurent1(expected, "u")

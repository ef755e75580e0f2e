"""Link diagrams from the median construction and a skein HOMFLY oracle.

Diagrams are stored strand-combinatorially: crossing c owns two passes,
2c and 2c+1, one per strand running through it, and ``succ`` maps each pass
to the next pass reached walking forward along the link.  ``over[c]`` tells
which of the two passes (by parity) is the over-strand, so switching a
crossing touches neither ``succ`` nor the pass labels.  Crossing-free
components are carried as a count of free loops.  Smoothing, switching,
Seifert circles and components are all permutation surgery; the oracle
never needs coordinates, and planarity is the responsibility of the
construction that produced the diagram.

The oracle resolves the first crossing that breaks descending order
(components in a fixed order, each walked from a basepoint) with the skein
relation P+ = v^2 P- + vz P0 and bottoms out on descending diagrams, which
are unlinks.  Values are memoized on canonical codes of connected pieces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .laurent import Laurent1, Laurent2
from .planegraph import PlaneBipartiteGraph, InvariantError
from .arborescence import ArbNode, ArbTree


class CrossingCapExceeded(ValueError):
    """Input diagram exceeds the configured crossing cap of the oracle."""


UNLINK_FACTOR = Laurent2({(-1, -1): 1, (1, -1): -1})  # (1/v - v)/z
_V2 = Laurent2({(2, 0): 1})
_VZ = Laurent2({(1, 1): 1})
_VINV2 = Laurent2({(-2, 0): 1})
_MINUS_VINVZ = Laurent2({(-1, 1): -1})


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented link diagram as a pass permutation with crossing data."""

    signs: tuple[int, ...]
    succ: tuple[int, ...]
    over: tuple[int, ...]
    free_loops: int = 0

    def __post_init__(self):
        if len(self.succ) != 2 * len(self.signs) or len(self.over) != len(self.signs):
            raise ValueError("succ must list both passes of every crossing")
        if sorted(self.succ) != list(range(len(self.succ))):
            raise ValueError("succ is not a permutation of the passes")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("crossing signs must be +1 or -1")
        if any(b not in (0, 1) for b in self.over):
            raise ValueError("over bits must be 0 or 1")

    # -- counting ---------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    def writhe(self) -> int:
        return sum(self.signs)

    def over_pass(self, c: int) -> int:
        return 2 * c + self.over[c]

    def under_pass(self, c: int) -> int:
        return 2 * c + 1 - self.over[c]

    def _cycles(self, step) -> list[list[int]]:
        seen = [False] * len(self.succ)
        cycles = []
        for start in range(len(self.succ)):
            if seen[start]:
                continue
            cycle = []
            p = start
            while not seen[p]:
                seen[p] = True
                cycle.append(p)
                p = step(p)
            cycles.append(cycle)
        return cycles

    def components(self) -> list[list[int]]:
        """Link components as pass cycles (free loops not included)."""
        return self._cycles(lambda p: self.succ[p])

    def component_count(self) -> int:
        return len(self.components()) + self.free_loops

    def seifert_circle_count(self) -> int:
        """Circles left by the orientation-preserving smoothing of every crossing."""
        if not self.signs:
            return self.free_loops
        return len(self._cycles(lambda p: self.succ[p] ^ 1)) + self.free_loops

    # -- surgery ----------------------------------------------------------

    def switch(self, c: int) -> "LinkDiagram":
        """Swap over and under strands at crossing c, flipping its sign.

        The strands themselves (and hence the walk order) are untouched.
        """
        signs = tuple(-s if i == c else s for i, s in enumerate(self.signs))
        over = tuple(1 - b if i == c else b for i, b in enumerate(self.over))
        return LinkDiagram(signs, self.succ, over, self.free_loops)

    def smooth(self, c: int) -> "LinkDiagram":
        """Orientation-preserving smoothing of crossing c.

        Each strand entering the crossing exits along the other strand;
        components closing up entirely inside the crossing become free
        loops.
        """
        u, o = 2 * c, 2 * c + 1
        su, so = self.succ[u], self.succ[o]
        free = self.free_loops
        if su == o and so == u:
            free += 2
        elif (su == u and so == o) or so == u or su == o:
            free += 1

        def renumber(p):
            return p - 2 if p > o else p

        succ = []
        for p, q in enumerate(self.succ):
            if p in (u, o):
                continue
            while q in (u, o):
                q = so if q == u else su
            succ.append(renumber(q))
        signs = tuple(s for i, s in enumerate(self.signs) if i != c)
        over = tuple(b for i, b in enumerate(self.over) if i != c)
        return LinkDiagram(signs, tuple(succ), over, free)

    def relabel(self, perm) -> "LinkDiagram":
        """Renumber crossings by perm (old index -> new index)."""
        n = self.n_crossings

        def m(p):
            return 2 * perm[p // 2] + (p & 1)

        succ = [0] * (2 * n)
        for p, q in enumerate(self.succ):
            succ[m(p)] = m(q)
        signs = [0] * n
        over = [0] * n
        for i in range(n):
            signs[perm[i]] = self.signs[i]
            over[perm[i]] = self.over[i]
        return LinkDiagram(tuple(signs), tuple(succ), tuple(over), self.free_loops)

    # -- structure --------------------------------------------------------

    def split_parts(self) -> list["LinkDiagram"]:
        """Connected pieces of the crossing-interaction structure.

        Two components belong to one piece when some crossing involves both.
        Free loops are dropped; the caller accounts for them.
        """
        comps = self.components()
        comp_of = {}
        for i, cyc in enumerate(comps):
            for p in cyc:
                comp_of[p] = i
        parent = list(range(len(comps)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in range(self.n_crossings):
            a, b = find(comp_of[2 * c]), find(comp_of[2 * c + 1])
            if a != b:
                parent[a] = b
        groups: dict[int, list[int]] = {}
        for c in range(self.n_crossings):
            groups.setdefault(find(comp_of[2 * c]), []).append(c)
        parts = []
        for crossings in groups.values():
            crossings.sort()
            index = {c: i for i, c in enumerate(crossings)}
            succ = []
            for c in crossings:
                for p in (2 * c, 2 * c + 1):
                    q = self.succ[p]
                    succ.append(2 * index[q // 2] + (q & 1))
            parts.append(
                LinkDiagram(
                    tuple(self.signs[c] for c in crossings),
                    tuple(succ),
                    tuple(self.over[c] for c in crossings),
                    0,
                )
            )
        return parts

    def _traversal(self):
        """First visits to crossings, in walk order."""
        seen_crossings = set()
        for comp in sorted(self.components(), key=min):
            start = min(comp)
            p = start
            while True:
                c = p // 2
                if c not in seen_crossings:
                    seen_crossings.add(c)
                    yield p
                p = self.succ[p]
                if p == start:
                    break

    def first_bad_crossing(self) -> int | None:
        """First crossing reached on its under-strand in basepoint order.

        Components are walked in order of their minimal pass, each from that
        pass.  None means the diagram is descending, hence an unlink.
        """
        for p in self._traversal():
            c = p // 2
            if p != self.over_pass(c):
                return c
        return None

    def canonical_code(self):
        """Relabeling-invariant code; defined for interaction-connected diagrams."""
        best = None
        for start in range(len(self.succ)):
            code = self._code_from(start)
            if best is None or code < best:
                best = code
        return best

    def _code_from(self, start: int):
        number: dict[int, int] = {}
        seq: list[tuple[int, int]] = []
        visited: set[int] = set()
        pending = start
        while pending is not None:
            p = pending
            while p not in visited:
                visited.add(p)
                c = p // 2
                if c not in number:
                    number[c] = len(number)
                seq.append((number[c], 1 if p == self.over_pass(c) else 0))
                p = self.succ[p]
            seq.append((-1, -1))
            pending = None
            # next component: partner pass of the lowest-numbered crossing
            # whose other pass is unvisited
            best_crossing = None
            for c, idx in number.items():
                for q in (2 * c, 2 * c + 1):
                    if q not in visited and (
                        best_crossing is None or idx < best_crossing[0]
                    ):
                        best_crossing = (idx, q)
            if best_crossing is not None:
                pending = best_crossing[1]
        if len(visited) != len(self.succ):
            raise InvariantError("canonical code requires a connected diagram")
        signs = tuple(
            s
            for _, s in sorted(
                (number[c], self.signs[c]) for c in range(self.n_crossings)
            )
        )
        return (tuple(seq), signs)

    # -- PD interchange -----------------------------------------------------

    def pd_code(self) -> dict:
        """Arc-label 4-tuples per crossing plus the orientation (sign) list.

        Tuple order: incoming under arc first, then counterclockwise; for a
        positive crossing the over strand runs from slot 4 to slot 2, for a
        negative one from slot 2 to slot 4.
        """
        out_arc: dict[int, int] = {}
        in_arc: dict[int, int] = {}
        label = 0
        for comp in sorted(self.components(), key=min):
            start = min(comp)
            p = start
            while True:
                label += 1
                out_arc[p] = label
                in_arc[self.succ[p]] = label
                p = self.succ[p]
                if p == start:
                    break
        tuples = []
        for c in range(self.n_crossings):
            u, o = self.under_pass(c), self.over_pass(c)
            if self.signs[c] > 0:
                tuples.append([in_arc[u], out_arc[o], out_arc[u], in_arc[o]])
            else:
                tuples.append([in_arc[u], in_arc[o], out_arc[u], out_arc[o]])
        return {
            "crossings": tuples,
            "signs": list(self.signs),
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_pd(cls, document) -> "LinkDiagram":
        """Rebuild a diagram from the pd_code() format (dict or JSON text).

        The imported diagram uses pass 2c for the under strand of crossing
        c (over bit 0 throughout); compare via canonical codes.
        """
        if isinstance(document, (str, bytes)):
            document = json.loads(document)
        tuples = document["crossings"]
        signs = document["signs"]
        if len(tuples) != len(signs):
            raise ValueError("crossing tuples and sign list disagree in length")
        in_of: dict[int, int] = {}
        out_of: dict[int, int] = {}
        for c, (quad, sign) in enumerate(zip(tuples, signs)):
            a, b, cc, d = quad
            u, o = 2 * c, 2 * c + 1
            over_in, over_out = (d, b) if sign > 0 else (b, d)
            for arc, p in ((a, u), (over_in, o)):
                if arc in in_of:
                    raise ValueError(f"arc {arc} enters two passes")
                in_of[arc] = p
            for arc, p in ((cc, u), (over_out, o)):
                if arc in out_of:
                    raise ValueError(f"arc {arc} leaves two passes")
                out_of[arc] = p
        if set(in_of) != set(out_of):
            raise ValueError("arc labels do not match up")
        succ = [0] * (2 * len(signs))
        for arc, p in out_of.items():
            succ[p] = in_of[arc]
        return cls(
            tuple(signs),
            tuple(succ),
            tuple(1 for _ in signs),
            int(document.get("free_loops", 0)),
        )


# -- median construction -----------------------------------------------------


@dataclass(frozen=True)
class DecoratedSubgraph:
    """Spanning subgraph with a dotted subset, as produced by tree nodes."""

    present: frozenset[int]
    dotted: frozenset[int]

    def __post_init__(self):
        if not self.dotted <= self.present:
            raise ValueError("dotted edges must be present")


def decorated_subgraph_at(g: PlaneBipartiteGraph, node: ArbNode) -> DecoratedSubgraph:
    """Subgraph of G at a tree node: duals of the non-arborescence edges,
    with the skipped edges dotted."""
    present = frozenset(range(g.n_edges)) - node.a
    return DecoratedSubgraph(present, frozenset(node.s))


def median_diagram(
    g: PlaneBipartiteGraph, subgraph: DecoratedSubgraph | None = None
) -> LinkDiagram:
    """Link diagram of the median construction on a decorated subgraph.

    One crossing per present edge (positive when solid, negative when
    dotted) and one Seifert circle per vertex; vertices missing from the
    subgraph contribute crossing-free unknot components.  Seifert circles
    run counterclockwise around E-vertices and clockwise around V-vertices;
    each strand crosses from one circle to the other, and for the full
    solid graph the result is the positive special alternating diagram.

    Crossings are numbered by ascending present edge id; pass 2i runs from
    the E-circle to the V-circle and is the over strand of a solid edge.
    """
    if subgraph is None:
        subgraph = DecoratedSubgraph(frozenset(range(g.n_edges)), frozenset())
    present = sorted(subgraph.present)
    dotted = subgraph.dotted
    index = {c: i for i, c in enumerate(present)}

    circles: dict[str, list[int]] = {}
    for x in g.e_vertices:
        circles[x] = [c for c in g.rotations[x] if c in index]
    for x in g.v_vertices:
        circles[x] = [c for c in reversed(g.rotations[x]) if c in index]

    def into_v(c):  # pass entering along the E-circle, leaving along the V-circle
        return 2 * index[c]

    def into_e(c):  # pass entering along the V-circle, leaving along the E-circle
        return 2 * index[c] + 1

    succ = [0] * (2 * len(present))
    for c in present:
        e, v = g.edges[c]
        ring_v = circles[v]
        ring_e = circles[e]
        next_on_v = ring_v[(ring_v.index(c) + 1) % len(ring_v)]
        next_on_e = ring_e[(ring_e.index(c) + 1) % len(ring_e)]
        succ[into_v(c)] = into_e(next_on_v)
        succ[into_e(c)] = into_v(next_on_e)
    signs = tuple(-1 if c in dotted else 1 for c in present)
    over = tuple(1 if c in dotted else 0 for c in present)
    free = sum(1 for ring in circles.values() if not ring)
    return LinkDiagram(signs, tuple(succ), over, free)


def seifert_count(d: LinkDiagram) -> int:
    return d.seifert_circle_count()


def writhe(d: LinkDiagram) -> int:
    return d.writhe()


# -- the skein oracle ---------------------------------------------------------


def homfly_skein(d: LinkDiagram, cap: int = 14) -> Laurent2:
    """HOMFLY polynomial of the link presented by the diagram.

    Descending-diagram recursion: P+ = v^2 P- + vz P0 applied at the first
    crossing violating descending order, with unlinks as the base case.
    Raises CrossingCapExceeded when the diagram has more than ``cap``
    crossings.

    Every run is audited against the degree bound maxdeg_z <= n - s + 1;
    a violation would mean the computation is broken.
    """
    if d.n_crossings > cap:
        raise CrossingCapExceeded(
            f"{d.n_crossings} crossings exceeds the cap of {cap}"
        )
    value = _homfly(d, {})
    maxdeg = value.max_degree_second()
    bound = d.n_crossings - d.seifert_circle_count() + 1
    if maxdeg is not None and maxdeg > bound:
        raise InvariantError(
            f"z-degree {maxdeg} exceeds the bound {bound} on an oracle run"
        )
    return value


def _homfly(d: LinkDiagram, memo) -> Laurent2:
    free = d.free_loops
    if free:
        d = LinkDiagram(d.signs, d.succ, d.over, 0)
    if d.n_crossings == 0:
        return UNLINK_FACTOR ** (free - 1) if free else Laurent2.const(1)
    parts = d.split_parts()
    if len(parts) > 1 or free:
        result = UNLINK_FACTOR ** (len(parts) + free - 1)
        for part in parts:
            result = result * _homfly_connected(part, memo)
        return result
    return _homfly_connected(d, memo)


def _homfly_connected(d: LinkDiagram, memo) -> Laurent2:
    key = d.canonical_code()
    if key in memo:
        return memo[key]
    bad = d.first_bad_crossing()
    if bad is None:
        value = UNLINK_FACTOR ** (len(d.components()) - 1)
    elif d.signs[bad] > 0:
        value = _V2 * _homfly(d.switch(bad), memo) + _VZ * _homfly(d.smooth(bad), memo)
    else:
        value = _VINV2 * _homfly(d.switch(bad), memo) + _MINUS_VINVZ * _homfly(
            d.smooth(bad), memo
        )
    memo[key] = value
    return value


# -- tops ---------------------------------------------------------------------


@dataclass(frozen=True)
class TopPolynomial:
    """Coefficient of z^(n - s + 1) in a HOMFLY value, as a polynomial in v."""

    poly: Laurent1
    z_exponent: int


def top_coefficient(P: Laurent2, n: int, s: int) -> TopPolynomial:
    """Extract the z^(n - s + 1) slice of a HOMFLY value."""
    k = n - s + 1
    return TopPolynomial(Laurent1(P.slice_second(k).coeffs, "v"), k)


def top_via_tree(tree: ArbTree, n: int, s: int) -> TopPolynomial:
    """Each type-I leaf with k skipped edges contributes v^(n - s + 1 + 2k)."""
    out: dict[int, int] = {}
    for _, k in tree.type_one_leaves():
        e = n - s + 1 + 2 * k
        out[e] = out.get(e, 0) + 1
    return TopPolynomial(Laurent1(out, "v"), n - s + 1)


def top_via_h(h: Laurent1, n: int, s: int) -> TopPolynomial:
    """v^(n + s - 1) * h(1/v^2)."""
    out = {n + s - 1 - 2 * e: c for e, c in h.coeffs.items()}
    return TopPolynomial(Laurent1(out, "v"), n - s + 1)


def top_via_p(p: Laurent1, n: int, s: int) -> TopPolynomial:
    """v^(n - s + 1) * p(v^2)."""
    out = {n - s + 1 + 2 * e: c for e, c in p.coeffs.items()}
    return TopPolynomial(Laurent1(out, "v"), n - s + 1)


def homogeneous_top(blocks, positive_enumerators, negative_enumerators) -> Laurent1:
    """Closed form for the top of a homogeneous link from its block data.

    ``blocks`` is a SignedBlockGraph; the enumerator lists hold the dual
    parking enumerators of the positive and negative blocks respectively.
    For a single positive block this reduces to v^(n - s + 1) p(v^2).
    """
    k, l = blocks.k_positive, blocks.l_negative
    if len(positive_enumerators) != k or len(negative_enumerators) != l:
        raise ValueError("one enumerator per block is required")
    s_plus, n_plus, s_minus, n_minus = blocks.totals()
    w = n_plus - n_minus
    sign = (-1) ** (n_minus - s_minus + l)
    result = Laurent1.term(sign, w - s_plus + s_minus + k - l, "v")
    for p in positive_enumerators:
        result = result * p.substitute_power(2, "v")
    for p in negative_enumerators:
        result = result * p.substitute_power(-2, "v")
    return result


# -- Morton bound auditing -----------------------------------------------------


@dataclass(frozen=True)
class MortonReport:
    n: int
    s: int
    max_z_degree: int | None
    bound: int
    strict_bound: int | None
    ok: bool
    strict_ok: bool | None


def morton_audit(
    d: LinkDiagram, strict: bool = False, cap: int = 14
) -> MortonReport:
    """Check the z-degree of the diagram's HOMFLY value against n - s + 1.

    With ``strict`` (diagrams with an alternating contour, e.g. medians of
    type-II leaves) the sharper bound n - s - 1 is asserted as well.  A
    violated bound means the implementation is broken, not the theorem.
    """
    P = homfly_skein(d, cap=cap)
    n = d.n_crossings
    s = d.seifert_circle_count()
    maxdeg = P.max_degree_second()
    bound = n - s + 1
    ok = maxdeg is None or maxdeg <= bound
    strict_bound = n - s - 1 if strict else None
    strict_ok = (maxdeg is None or maxdeg <= strict_bound) if strict else None
    if not ok or strict_ok is False:
        raise InvariantError(
            f"Morton bound violated: maxdeg_z={maxdeg}, n={n}, s={s}, "
            f"strict={strict}"
        )
    return MortonReport(n, s, maxdeg, bound, strict_bound, ok, strict_ok)

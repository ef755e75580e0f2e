"""Plane bipartite graphs as rotation systems, their faces and directed duals.

A graph is stored dart-based: every edge joins an E-vertex to a V-vertex and
carries two darts, ``(edge_id, 0)`` pointing E -> V and ``(edge_id, 1)``
pointing V -> E.  Rotations list, for each vertex, the incident edge ids in
counterclockwise order.  Faces are traced keeping the face on the left of
each dart, so the face permutation is rotation^(-1) composed with reversal.

The planar dual is directed by the frozen convention: the dual edge of a
primal edge runs from the face left of the E -> V dart to the face left of
the V -> E dart, which puts the E-endpoint on the traveller's right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

Dart = tuple[int, int]  # (edge id, direction); 0 = E->V, 1 = V->E


class GraphInputError(ValueError):
    """Raised for malformed or non-planar input documents."""


class InvariantError(RuntimeError):
    """A theorem-backed internal check failed; indicates an implementation bug."""


class PlaneBipartiteGraph:
    """Connected plane bipartite combinatorial map on the sphere.

    Attributes:
        e_vertices, v_vertices: vertex names of the two color classes.
        edges: tuple of (e_name, v_name) pairs; the index is the edge id.
        rotations: vertex name -> tuple of incident edge ids, CCW.
        faces: tuple of faces, each a tuple of darts walked with the face on
            the left; faces are ordered by their minimal dart.
    """

    def __init__(self, e_vertices, v_vertices, edges, rotations):
        self.e_vertices = tuple(e_vertices)
        self.v_vertices = tuple(v_vertices)
        self.edges = tuple((e, v) for e, v in edges)
        self.rotations = {x: tuple(r) for x, r in rotations.items()}
        self._validate_structure()
        self.faces = self._trace_faces()
        self._face_of = {
            d: i for i, walk in enumerate(self.faces) for d in walk
        }
        self._check_euler()

    # -- basic accessors -------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_vertices(self) -> int:
        return len(self.e_vertices) + len(self.v_vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def dart_tail(self, dart: Dart) -> str:
        c, direction = dart
        return self.edges[c][direction]

    def dart_head(self, dart: Dart) -> str:
        c, direction = dart
        return self.edges[c][1 - direction]

    def face_of(self, dart: Dart) -> int:
        return self._face_of[dart]

    def vertex_edges(self, x: str) -> tuple[int, ...]:
        return self.rotations[x]

    def is_e_vertex(self, x: str) -> bool:
        return x in self._e_set

    def incident_vertices(self, edge_ids) -> set[str]:
        out = set()
        for c in edge_ids:
            out.update(self.edges[c])
        return out

    # -- construction checks ---------------------------------------------

    def _validate_structure(self):
        self._e_set = set(self.e_vertices)
        self._v_set = set(self.v_vertices)
        if len(self._e_set) != len(self.e_vertices) or len(self._v_set) != len(
            self.v_vertices
        ):
            raise GraphInputError("duplicate vertex names")
        if self._e_set & self._v_set:
            raise GraphInputError("color classes are not disjoint")
        if not self.edges:
            raise GraphInputError("graph has no edges")
        for c, (e, v) in enumerate(self.edges):
            if e not in self._e_set or v not in self._v_set:
                raise GraphInputError(
                    f"edge {c} does not join the E class to the V class"
                )
        expected = {x: [] for x in self.e_vertices + self.v_vertices}
        for c, (e, v) in enumerate(self.edges):
            expected[e].append(c)
            expected[v].append(c)
        unknown = set(self.rotations) - set(expected)
        if unknown:
            raise GraphInputError(f"rotation given for unknown vertices {unknown}")
        for x, incident in expected.items():
            rot = self.rotations.get(x)
            if rot is None:
                raise GraphInputError(f"missing rotation for vertex {x!r}")
            if sorted(rot) != sorted(incident):
                raise GraphInputError(
                    f"rotation at {x!r} is not a permutation of its incident edges"
                )
        # connectivity over vertices
        adjacency = {x: set() for x in expected}
        for e, v in self.edges:
            adjacency[e].add(v)
            adjacency[v].add(e)
        seen = {self.e_vertices[0] if self.e_vertices else self.v_vertices[0]}
        stack = list(seen)
        while stack:
            for y in adjacency[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != self.n_vertices:
            raise GraphInputError("graph is not connected")

    def _rotation_next(self, dart: Dart) -> Dart:
        """Next dart out of the same tail vertex, counterclockwise."""
        x = self.dart_tail(dart)
        rot = self.rotations[x]
        i = self._rot_index[(x, dart[0])]
        c = rot[(i + 1) % len(rot)]
        return (c, 0 if x in self._e_set else 1)

    def _rotation_prev(self, dart: Dart) -> Dart:
        x = self.dart_tail(dart)
        rot = self.rotations[x]
        i = self._rot_index[(x, dart[0])]
        c = rot[(i - 1) % len(rot)]
        return (c, 0 if x in self._e_set else 1)

    def _trace_faces(self):
        # bipartite edges are never loops, so (vertex, edge id) identifies a dart
        self._rot_index = {}
        for x, rot in self.rotations.items():
            for i, c in enumerate(rot):
                self._rot_index[(x, c)] = i
        darts = [(c, d) for c in range(self.n_edges) for d in (0, 1)]
        remaining = set(darts)
        faces = []
        for start in darts:
            if start not in remaining:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                remaining.discard(d)
                # face stays on the left: step to rotation-predecessor of the
                # reversed dart
                d = self._rotation_prev((d[0], 1 - d[1]))
                if d == start:
                    break
            faces.append(tuple(walk))
        faces.sort(key=lambda walk: min(walk))
        return tuple(faces)

    def _check_euler(self):
        euler = self.n_vertices - self.n_edges + self.n_faces
        if euler != 2:
            raise GraphInputError(
                f"rotation system is not planar: V - E + F = {euler}, expected 2"
            )

    # -- exports ----------------------------------------------------------

    def to_document(self, r0_dart: Dart | None = None, kappa: int | None = None):
        doc = {
            "E": list(self.e_vertices),
            "V": list(self.v_vertices),
            "edges": [list(p) for p in self.edges],
            "rotation": {x: list(r) for x, r in self.rotations.items()},
        }
        if kappa is not None:
            doc["kappa"] = kappa
        if r0_dart is not None:
            doc["r0"] = [r0_dart[0], "ev" if r0_dart[1] == 0 else "ve"]
        return doc

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for x in self.e_vertices:
            lines.append(f'  "{x}" [shape=box];')
        for x in self.v_vertices:
            lines.append(f'  "{x}" [shape=circle];')
        for c, (e, v) in enumerate(self.edges):
            lines.append(f'  "{e}" -- "{v}" [label="{c}"];')
        lines.append("}")
        return "\n".join(lines)


@dataclass
class DualDigraph:
    """Directed planar dual with a root face and distinguished primal edge.

    Dual edges are indexed by the primal edge ids.  The rotation at a dual
    vertex (= face of the primal graph) is the face walk itself: crossing the
    primal dart (c, 0) is the tail end of dual edge c, crossing (c, 1) is its
    head end.
    """

    graph: PlaneBipartiteGraph
    tail: tuple[int, ...]
    head: tuple[int, ...]
    rotations: tuple[tuple[Dart, ...], ...]  # per face, the face walk
    r0: int
    kappa: int
    slot_index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.slot_index:
            for r, walk in enumerate(self.rotations):
                for i, dart in enumerate(walk):
                    self.slot_index[dart] = (r, i)

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @property
    def n_edges(self) -> int:
        return len(self.tail)

    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.tail, self.head))

    def out_edges(self, r: int) -> list[int]:
        return [c for c in range(self.n_edges) if self.tail[c] == r]

    def in_edges(self, r: int) -> list[int]:
        return [c for c in range(self.n_edges) if self.head[c] == r]

    def with_root(self, r0: int, kappa: int) -> "DualDigraph":
        if self.head[kappa] != r0:
            raise GraphInputError(
                f"kappa {kappa} is inadmissible: its dual edge points to face "
                f"{self.head[kappa]}, not {r0}"
            )
        return DualDigraph(
            self.graph, self.tail, self.head, self.rotations, r0, kappa,
            self.slot_index,
        )

    def admissible_pairs(self) -> list[tuple[int, int]]:
        """All (r0, kappa) pairs: every edge points at exactly one root."""
        return [(self.head[c], c) for c in range(self.n_edges)]

    def to_dot(self) -> str:
        lines = ["digraph Gdual {"]
        for r in range(self.n_vertices):
            mark = " (r0)" if r == self.r0 else ""
            lines.append(f'  r{r} [label="r{r}{mark}"];')
        for c in range(self.n_edges):
            style = ' style=bold' if c == self.kappa else ""
            lines.append(f'  r{self.tail[c]} -> r{self.head[c]} [label="{c}"{style}];')
        lines.append("}")
        return "\n".join(lines)


def build_dual(
    g: PlaneBipartiteGraph,
    r0_face: int | None = None,
    kappa_edge: int | None = None,
) -> DualDigraph:
    """Orient the planar dual and fix the root data.

    The dual edge of primal edge c runs from face_of((c, 0)) to
    face_of((c, 1)).  If kappa is given and r0 is not, the root is derived;
    if both are given they must be compatible.
    """
    tail = tuple(g.face_of((c, 0)) for c in range(g.n_edges))
    head = tuple(g.face_of((c, 1)) for c in range(g.n_edges))
    if kappa_edge is None:
        kappa_edge = 0 if r0_face is None else min(
            (c for c in range(g.n_edges) if head[c] == r0_face), default=None
        )
        if kappa_edge is None:
            raise GraphInputError(f"no edge has its dual pointing to face {r0_face}")
    if r0_face is None:
        r0_face = head[kappa_edge]
    dual = DualDigraph(g, tail, head, g.faces, r0_face, kappa_edge)
    if dual.head[kappa_edge] != r0_face:
        raise GraphInputError(
            f"kappa {kappa_edge} is inadmissible: its dual edge points to face "
            f"{dual.head[kappa_edge]}, not {r0_face}"
        )
    return dual


def overlay_dot(g: PlaneBipartiteGraph, dual: DualDigraph) -> str:
    """Primal graph and directed dual in one DOT document."""
    lines = ["digraph Overlay {"]
    for x in g.e_vertices:
        lines.append(f'  "{x}" [shape=box];')
    for x in g.v_vertices:
        lines.append(f'  "{x}" [shape=circle];')
    for c, (e, v) in enumerate(g.edges):
        lines.append(f'  "{e}" -> "{v}" [dir=none, label="{c}"];')
    for r in range(dual.n_vertices):
        mark = " (r0)" if r == dual.r0 else ""
        lines.append(f'  r{r} [shape=diamond, style=dashed, label="r{r}{mark}"];')
    for c in range(dual.n_edges):
        style = ", style=bold" if c == dual.kappa else ", style=dashed"
        lines.append(
            f'  r{dual.tail[c]} -> r{dual.head[c]} [label="{c}*"{style}];'
        )
    lines.append("}")
    return "\n".join(lines)


def parse_plane_graph(document) -> tuple[PlaneBipartiteGraph, DualDigraph]:
    """Parse an input document (dict or JSON text) into graph and dual.

    Schema: {"E": [...], "V": [...], "edges": [[e, v], ...],
             "rotation": {vertex: [edge ids CCW]},
             "r0": [edge_id, "ev"|"ve"] (optional),
             "kappa": edge_id (optional)}.

    The r0 entry names the face to the left of the given dart.  Defaults:
    kappa = 0, r0 = head of kappa's dual edge.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise GraphInputError("document must be a JSON object")
    try:
        e_vertices = [str(x) for x in document["E"]]
        v_vertices = [str(x) for x in document["V"]]
        edges = [(str(e), str(v)) for e, v in document["edges"]]
        rotations = {
            str(x): [int(c) for c in r] for x, r in document["rotation"].items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed document: {exc}") from exc
    g = PlaneBipartiteGraph(e_vertices, v_vertices, edges, rotations)

    kappa = document.get("kappa")
    r0 = None
    if "r0" in document:
        try:
            c, direction = document["r0"]
            c = int(c)
        except (TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed r0 dart: {exc}") from exc
        if direction not in ("ev", "ve"):
            raise GraphInputError("r0 dart direction must be 'ev' or 've'")
        if not 0 <= c < g.n_edges:
            raise GraphInputError(f"r0 dart edge {c} out of range")
        r0 = g.face_of((c, 0 if direction == "ev" else 1))
    if kappa is not None and not 0 <= int(kappa) < g.n_edges:
        raise GraphInputError(f"kappa {kappa} out of range")
    dual = build_dual(g, r0, int(kappa) if kappa is not None else None)
    return g, dual


def trace_faces(g: PlaneBipartiteGraph):
    """The traced faces of the map (computed at construction time)."""
    return g.faces


def dual_subgraph(g: PlaneBipartiteGraph, primal_edges) -> frozenset[int]:
    """Edge ids of the dual subgraph: the complement of the given set.

    A set of edges of G is paired with the complementary set of dual edges,
    so applying this twice returns the original set.
    """
    keep = set(primal_edges)
    return frozenset(c for c in range(g.n_edges) if c not in keep)


def check_strong_connectivity(dual: DualDigraph) -> bool:
    """Whether every dual vertex reaches every other along directed edges.

    True for every dual of a connected plane bipartite graph; exposed as a
    sanity oracle for that fact.
    """
    n = dual.n_vertices
    if n <= 1:
        return True

    def reach(start, forward):
        seen = {start}
        stack = [start]
        while stack:
            r = stack.pop()
            for c in range(dual.n_edges):
                a, b = (dual.tail[c], dual.head[c])
                if not forward:
                    a, b = b, a
                if a == r and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    return len(reach(0, True)) == n and len(reach(0, False)) == n


# -- signed block decomposition ------------------------------------------


@dataclass
class SignedBlock:
    sign: int
    vertices: frozenset
    edge_ids: tuple[int, ...]


@dataclass
class SignedBlockGraph:
    """Biconnected blocks of a connected graph with sign-homogeneous blocks.

    Vertices shared by several blocks (cut vertices) are counted once per
    block in the totals.
    """

    blocks: list[SignedBlock]

    @property
    def k_positive(self) -> int:
        return sum(1 for b in self.blocks if b.sign > 0)

    @property
    def l_negative(self) -> int:
        return sum(1 for b in self.blocks if b.sign < 0)

    def totals(self):
        s_plus = sum(len(b.vertices) for b in self.blocks if b.sign > 0)
        n_plus = sum(len(b.edge_ids) for b in self.blocks if b.sign > 0)
        s_minus = sum(len(b.vertices) for b in self.blocks if b.sign < 0)
        n_minus = sum(len(b.edge_ids) for b in self.blocks if b.sign < 0)
        return s_plus, n_plus, s_minus, n_minus

    @property
    def writhe(self) -> int:
        _, n_plus, _, n_minus = self.totals()
        return n_plus - n_minus


def biconnected_blocks(vertices, edges, signs) -> SignedBlockGraph:
    """Split a connected multigraph into biconnected blocks.

    Args:
        vertices: iterable of vertex names.
        edges: list of (u, w) pairs; the index is the edge id.
        signs: per-edge +1/-1 labels; each block must be sign-homogeneous.
    """
    vertices = list(vertices)
    if not vertices:
        raise GraphInputError("empty graph")
    adjacency = {x: [] for x in vertices}
    for i, (u, w) in enumerate(edges):
        adjacency[u].append((w, i))
        adjacency[w].append((u, i))

    index: dict = {}
    low: dict = {}
    stack: list[int] = []
    blocks: list[list[int]] = []
    placed: set[int] = set()
    counter = [0]

    def dfs(root):
        index[root] = low[root] = counter[0]
        counter[0] += 1
        work = [(root, None, iter(adjacency[root]))]
        while work:
            x, entry_eid, it = work[-1]
            advanced = False
            for y, eid in it:
                if eid in placed:
                    continue
                placed.add(eid)
                stack.append(eid)
                if y not in index:
                    index[y] = low[y] = counter[0]
                    counter[0] += 1
                    work.append((y, eid, iter(adjacency[y])))
                    advanced = True
                    break
                if index[y] < low[x]:
                    low[x] = index[y]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[x] < low[parent]:
                    low[parent] = low[x]
                if low[x] >= index[parent]:
                    block = []
                    while True:
                        eid = stack.pop()
                        block.append(eid)
                        if eid == entry_eid:
                            break
                    blocks.append(block)

    dfs(vertices[0])
    if len(index) != len(vertices) or stack:
        raise GraphInputError("graph is not connected")

    out = []
    for block in blocks:
        touched = set()
        for eid in block:
            touched.update(edges[eid])
        block_signs = {signs[eid] for eid in block}
        if len(block_signs) != 1:
            raise GraphInputError("block mixes positive and negative edges")
        out.append(
            SignedBlock(block_signs.pop(), frozenset(touched), tuple(sorted(block)))
        )
    out.sort(key=lambda b: b.edge_ids)
    return SignedBlockGraph(out)

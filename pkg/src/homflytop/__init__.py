"""Tower of invariants of a connected plane bipartite graph.

Starting from a rotation-system description of a plane bipartite graph, the
package builds the binary tree of spanning arborescences of the directed
planar dual, and derives from it a shelled triangulation of the root
polytope (with f- and h-vectors), the parking-function enumerator of the
dual, and the top coefficient of the HOMFLY polynomial of the induced
special alternating link.  An independent skein-recursion HOMFLY oracle for
small diagrams lets every identity be checked exactly.
"""

from .laurent import Laurent1, Laurent2, conway_and_alexander
from .planegraph import (
    GraphInputError,
    InvariantError,
    PlaneBipartiteGraph,
    DualDigraph,
    SignedBlock,
    SignedBlockGraph,
    parse_plane_graph,
    trace_faces,
    build_dual,
    overlay_dot,
    dual_subgraph,
    check_strong_connectivity,
    biconnected_blocks,
)
from .arborescence import (
    ArbNode,
    ArbTree,
    augmenting_edge,
    build_arb_tree,
    clocked_arborescence,
    spanning_arborescences_bruteforce,
)
from .rootpolytope import (
    Triangulation,
    affine_independence_check,
    compatible,
    coordinate_matrix,
    hypertrees,
    spanning_trees,
    triangulation_from_arbtree,
    verify_shelling,
    f_vector,
    h_from_f,
    h_from_shelling,
)
from .parking import (
    relative_indegree,
    is_parking_function,
    enumerate_parking,
    parking_enumerator,
    parking_for_dual,
    parking_from_leaf,
    arborescence_from_parking,
    leaf_enumerator,
    tutte,
    doubled_digraph,
    tutte_doubled_identity,
    tutte_dual_identity,
)
from .homfly import (
    LinkDiagram,
    DecoratedSubgraph,
    TopPolynomial,
    MortonReport,
    CrossingCapExceeded,
    UNLINK_FACTOR,
    decorated_subgraph_at,
    median_diagram,
    seifert_count,
    writhe,
    homfly_skein,
    top_coefficient,
    top_via_tree,
    top_via_h,
    top_via_p,
    homogeneous_top,
    morton_audit,
)
from .verify import VerifyReport, verify_graph
from .gen import random_plane_bipartite, corpus, corpus_documents

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Edge blow-ups of lollipop graphs and exact small-scale Turán checks."""

from .blowup import (
    BlowupResult,
    blowup,
    blowup_edge_count,
    decomposition_family_bruteforce,
    decomposition_host,
    decomposition_member_check,
    split_family,
    split_vertex,
    vertex_split,
)
from .canon import GraphFamily, canonical_form, canonical_labeling, is_isomorphic
from .constructions import (
    ConstructionSpec,
    LollipopParams,
    Prediction,
    edge_count_formula,
    lollipop,
    predicted_extremal,
    realize,
    small_case_family,
    y_family,
)
from .containment import (
    BlowupEmbedding,
    Embedding,
    FreenessCertificate,
    SearchBudgetExceeded,
    blowup_contains,
    freeness_certificate,
    min_vertex_cover,
    subgraph_contains,
    verify_blowup_embedding,
    verify_embedding,
)
from .generation import generate_graphs, graph_counts
from .graph import Graph, complete_multipartite, disjoint_union, join, make_basic, turan
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .turan import (
    Decomposition,
    SymmetryWitness,
    TuranResult,
    dnpr_check,
    ex_bruteforce,
    random_maximal_lowerbound,
    saturation_report,
    symmetric_check,
    verify_decomposition,
)

__version__ = "0.1.0"

"""Extremal graphs that just miss being hamiltonian-connected.

Tools for the maximum-size and maximum-clique-count questions over
graphs of a given order and exact minimum degree that admit no spanning
path between some vertex pair: the two extremal families, the bound
formulas, the closure and disintegration transforms behind them, fast
sufficiency certificates, an exact bitmask oracle, and exhaustive
small-order verification.
"""

from .bounds import (
    BoundResult,
    KINDS,
    extremal_family,
    phi,
    phi_s,
    reference_bound,
    size_threshold,
)
from .cliques import binomial, count_cliques, f_s_formula, g_s_formula, lambda_s
from .constructions import (
    FAMILIES,
    ConstructionSpec,
    build_F,
    build_G,
    build_classical,
    hub_vertices,
)
from .errors import (
    CapacityError,
    EnumerationBudgetError,
    Graph6ParseError,
    ParameterError,
)
from .graph import (
    Graph,
    add_edge,
    complement,
    complete,
    connected_components,
    cycle,
    decode_graph6,
    degree_sequence,
    degeneracy_order,
    disjoint_union,
    edge_count,
    empty_graph,
    encode_graph6,
    export_dot,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    min_degree,
    relabel,
    remove_edge,
    vertex_connectivity,
)
from .oracle import (
    DEFAULT_DP_CAP,
    HcReport,
    hamilton_cycle,
    hamilton_path,
    hamiltonian_connected,
    is_hamiltonian_connected,
)
from .sufficiency import (
    Outcome,
    Verdict,
    lick_test,
    ore_test,
    separator_certificate,
    size_test,
)
from .transforms import (
    ClosureResult,
    DisintegrationTrace,
    hc_closure,
    t_disintegration,
)
from .verify import (
    CliqueExtremalReport,
    CorollaryProbe,
    ExtremalReport,
    canonical_form,
    exhaustive_clique_extremal,
    exhaustive_extremal,
    sample_corollary1,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "CapacityError",
    "CliqueExtremalReport",
    "ClosureResult",
    "ConstructionSpec",
    "CorollaryProbe",
    "DEFAULT_DP_CAP",
    "DisintegrationTrace",
    "EnumerationBudgetError",
    "ExtremalReport",
    "FAMILIES",
    "Graph",
    "Graph6ParseError",
    "HcReport",
    "KINDS",
    "Outcome",
    "ParameterError",
    "Verdict",
    "add_edge",
    "binomial",
    "build_F",
    "build_G",
    "build_classical",
    "canonical_form",
    "complement",
    "complete",
    "connected_components",
    "count_cliques",
    "cycle",
    "decode_graph6",
    "degeneracy_order",
    "degree_sequence",
    "disjoint_union",
    "edge_count",
    "empty_graph",
    "encode_graph6",
    "exhaustive_clique_extremal",
    "exhaustive_extremal",
    "export_dot",
    "extremal_family",
    "f_s_formula",
    "from_edges",
    "g_s_formula",
    "hamilton_cycle",
    "hamilton_path",
    "hamiltonian_connected",
    "hc_closure",
    "hub_vertices",
    "induced_subgraph",
    "is_connected",
    "is_hamiltonian_connected",
    "join",
    "lambda_s",
    "lick_test",
    "min_degree",
    "ore_test",
    "phi",
    "phi_s",
    "reference_bound",
    "relabel",
    "remove_edge",
    "sample_corollary1",
    "separator_certificate",
    "size_test",
    "size_threshold",
    "t_disintegration",
    "vertex_connectivity",
]

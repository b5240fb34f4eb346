"""Exact tree-depth, t-uniqueness, and critical graphs on small graphs."""

__version__ = "0.1.0"

from .canon import canonical_form, enumerate_connected_graphs, is_isomorphic
from .constructions import (
    ConstructionSpec,
    adjoin,
    edge_join,
    family_Gk,
    family_Q,
    family_R,
    generate_S_family,
    verify_construction,
)
from .criticality import (
    classify,
    conjecture_stress,
    critical_spanning_subgraph,
    find_critical_graphs,
    is_induced_subgraph_critical,
    is_minor_critical,
    is_subgraph_critical,
)
from .exceptions import (
    CapacityError,
    DomainError,
    Graph6ParseError,
    GraphInputError,
    SpecValidationError,
    TdcritError,
)
from .graph import (
    Graph,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    path_graph,
)
from .graph6 import emit_graph6, parse_graph6
from .solver import (
    TreeDepthResult,
    is_feasible_ranking,
    optimal_ranking,
    td_cycle,
    td_path,
    tree_depth,
    tree_depth_bruteforce,
)
from .uniqueness import (
    decomposition_optimum,
    is_1_unique_graph,
    is_1_unique_vertex,
    is_t_unique_vertex,
    quotient_graph,
    star_clique_transform,
    uniqueness_profile,
)

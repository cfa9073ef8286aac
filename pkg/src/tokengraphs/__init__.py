"""Token graphs F_k(G), exact automorphism groups, and executable checks of
structural claims about them.

Vertices of a base graph are 0-based internally; anything printed for a
person (cycle notation, subset labels, CLI input) is 1-based.
"""
from .errors import (
    CapacityError,
    ContractViolation,
    DisconnectedError,
    ElementCapError,
    ParameterError,
    SearchTimeout,
    TokenGraphError,
)
from .formats import from_edge_list, from_graph6, to_dot, to_edge_list, to_graph6
from .graph import (
    FAMILIES,
    FamilySpec,
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    fan_graph,
    grid_graph,
    induced_subgraph,
    join_with_apex,
    make_family,
    path_graph,
    star_graph,
    wheel_graph,
)
from .path_metrics import all_pairs_bfs, all_pairs_formula, bfs_distance, token_path_distance
from .perm import Permutation, PermGroup
from .search import (
    SearchConfig,
    automorphism_report,
    complement_involution,
    count_automorphisms,
    find_automorphism_group,
    find_isomorphism,
    induced_automorphism,
    induced_subgroup,
    is_isomorphic,
)
from .tokens import (
    TokenGraph,
    build_token_graph,
    colex_rank,
    colex_unrank,
    complement_relabel,
    delete_and_project,
)

__version__ = "0.1.0"

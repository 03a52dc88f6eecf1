"""Smooth travel groupoids on finite connected graphs."""

from .construction import (
    InvalidSeedError,
    TreeFamily,
    branches,
    build_tree_family,
    construct_smooth,
    default_seed,
    derive_u_tree,
    downward_groupoid,
    family_from_trees,
    upward_groupoid,
)
from .graph import (
    DistanceMap,
    Graph,
    GraphError,
    ParseError,
    SpanningTree,
    count_v_spanning_trees,
    distances,
    enumerate_spanning_trees,
    is_connected,
    is_v_spanning_tree,
    next_vertex,
    parse_graph,
    validate_spanning_tree,
)
from .groupoid import (
    AxiomReport,
    OperationTable,
    PreconditionError,
    Walk,
    axiom_report,
    derived_graph,
    fiber,
    iterate,
    parse_table,
    prop1_check,
    prop2_check,
    smooth_via_fibers,
    walk,
)
from .oracle import (
    enumerate_non_confusing,
    enumerate_travel_groupoids,
    generate_connected_graphs,
    random_connected_graph,
    verify_counting_theorem,
)

__version__ = "0.1.0"

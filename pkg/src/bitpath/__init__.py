"""Shortest paths on bit-row graph representations, flat and multilevel."""

from .bitgraph import (
    DimensionError,
    EdgeForm,
    Graph,
    Path,
    advance,
    and_law,
    or_law,
    step_backward,
    step_forward,
    support,
    vertex_form,
)
from .edgelist import (
    ParseError,
    generate_modmul,
    load_hierarchy,
    parse_edge_list,
    save_hierarchy,
    write_edge_list,
)
from .hierarchy import (
    Hierarchy,
    Level,
    Partition,
    build_hierarchy,
    choose_start_level,
    dumb_refinement,
    hierarchical_shortest_path,
    pair_partition,
    refine_path,
    thicken,
)
from .solver import ShortestPathSolver
from .unvalued import (
    LayerMeet,
    QueryResult,
    enumerate_paths,
    format_path,
    meet_layers,
    shortest_path_length,
    shortest_paths,
)
from .valued import (
    DomainError,
    WeightedQueryResult,
    build_valued_hierarchy,
    hierarchical_weighted_path,
    min_cost_at_hops,
    rationalize_weights,
    shortest_weighted_path,
    thicken_valued,
)

__version__ = "0.1.0"

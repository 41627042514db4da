from ._core import (
    Graph,
    EnumerationStats,
    parse_graph,
    load_graph,
    generate_graph,
    connected_components,
    max_degree,
    induced_is_connected,
    count_upper_bound,
    enumerate_k_subgraphs,
    enumerate_stats,
    simple_enumerate,
    brute_force_enumerate,
)

__all__ = [
    "Graph",
    "EnumerationStats",
    "parse_graph",
    "load_graph",
    "generate_graph",
    "connected_components",
    "max_degree",
    "induced_is_connected",
    "count_upper_bound",
    "enumerate_k_subgraphs",
    "enumerate_stats",
    "simple_enumerate",
    "brute_force_enumerate",
]

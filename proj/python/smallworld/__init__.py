from ._core import (
    VERSION,
    CapacityError,
    ConvergenceError,
    DomainError,
    Graph,
    IoError,
    ParseError,
    ball_set,
    bfs_distances,
    compute_Z,
    conductance,
    cut_report,
    diameter,
    distance_to_stationarity,
    edge_probability,
    greedy_route,
    is_expanding,
    load_graph,
    mixing_time,
    run_sweep_config,
    sample_graph,
    save_graph,
    spectral_gap,
    stationary,
    torus_distance,
    torus_graph,
)

__version__ = "1.0.0"

"""Path factors of order at least three: sun toughness, degree sums and deletion robustness."""

from .connectivity import edge_connectivity, vertex_connectivity
from .corpus import CorpusSpec, corpus_stream, exhaustive, gnp, graph6_file
from .factor import (
    Obstruction,
    PathFactor,
    certify,
    find_p3_factor,
    has_p3_factor,
    sun_criterion_violation,
    validate_obstruction,
    validate_path_factor,
)
from .families import big_sun_on_core, generate_family, remark1, remark2
from .graph import (
    BudgetExceeded,
    Graph,
    Graph6Error,
    GraphError,
    components,
    delete_edges,
    delete_vertices,
    from_edge_list,
    omega,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .matching import brute_matching_oracle, has_perfect_matching, is_factor_critical, maximum_matching
from .robustness import (
    HuntReport,
    RobustnessVerdict,
    SigmaValue,
    TheoremVerdict,
    check_theorem,
    hunt,
    is_critical,
    is_deleted,
    sigma_k,
)
from .sun import SunDecomposition, ToughnessResult, is_sun, isolated_count, sun_count, sun_toughness

__version__ = "0.1.0"

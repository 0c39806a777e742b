"""Rooted y-monotone minimum spanning trees, exactly.

A y-MMST is the minimum-total-length geometric spanning structure in which
every point can reach a designated root by a path of strictly decreasing y.
This package builds them from point sets, draws arbitrary rooted trees on
the integer grid so that the drawing's y-MMST is the input tree, verifies
claimed drawings, cross-checks everything with a brute-force oracle, and
certifies that star-shaped instances force exponential drawing width. All
geometry is exact: coordinates are arbitrary-precision integers and every
comparison is made on squared distances or sound fixed-point bounds.
"""

from .analysis import (
    Certificate,
    CertStatus,
    OracleResult,
    Violation,
    WidthBoundReport,
    brute_force_ymmst,
    certify_width_lower_bound,
    gen_star_pointset,
    max_degree,
    verify_ymmst_drawing,
)
from .drawing import (
    DrawnTree,
    OpCounts,
    RootedTree,
    count_ops,
    draw_depth1,
    draw_tree,
    resolve_coordinates,
    stack_y,
    step_x,
)
from .errors import (
    FormatError,
    InvalidPointSetError,
    InvalidTreeError,
    NotAStarError,
    OracleLimitError,
    TranslatedChainError,
    YmmstError,
)
from .exactgeom import Point, cmp_dist, isqrt, sq_dist
from .mmst import (
    GeomTree,
    RootedPointSet,
    build_ymmst,
    check_y_monotone_connectivity,
    nearest_below,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertStatus",
    "DrawnTree",
    "FormatError",
    "GeomTree",
    "InvalidPointSetError",
    "InvalidTreeError",
    "NotAStarError",
    "OpCounts",
    "OracleLimitError",
    "OracleResult",
    "Point",
    "RootedPointSet",
    "RootedTree",
    "TranslatedChainError",
    "Violation",
    "WidthBoundReport",
    "YmmstError",
    "brute_force_ymmst",
    "build_ymmst",
    "certify_width_lower_bound",
    "check_y_monotone_connectivity",
    "cmp_dist",
    "count_ops",
    "draw_depth1",
    "draw_tree",
    "gen_star_pointset",
    "isqrt",
    "max_degree",
    "nearest_below",
    "resolve_coordinates",
    "sq_dist",
    "stack_y",
    "step_x",
    "verify_ymmst_drawing",
]

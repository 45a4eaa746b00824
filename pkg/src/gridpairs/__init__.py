"""Digital images on integer lattices and their boundary pairs.

The library represents subsets of grids s * Z^m exactly (finite or
cofinite point sets), extracts and validates boundary pairs, reconstructs
sets from their boundary pairs, transfers sets between nested grids with
the restriction and interpolation operators, and transfers boundary
pairs directly with the lifted variants of these operators.
"""

from .geometry import INFINITE, Distance, Point, ball_points, chebyshev, rd
from .gridset import (
    Component,
    GridSet,
    Mode,
    Window,
    complement,
    components_within,
    dist_point_set,
    hausdorff,
    hausdorff_semi,
    is_connected,
    member,
)
from .layers import boundary0, boundary1, layer, recover_boundaries, trace
from .lifted import lift_interpolate, lift_restrict
from .paths import Path, concatenate, straight_path
from .pairs import (
    AxiomCheck,
    AxiomReport,
    BoundaryPair,
    InvalidPairError,
    closer_set_window,
    reconstruct,
    validate,
)
from .transfer import GridRatio, interpolate, is_voronoi_cover, restrict

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Distance",
    "Point",
    "ball_points",
    "chebyshev",
    "rd",
    "Component",
    "GridSet",
    "Mode",
    "Window",
    "complement",
    "components_within",
    "dist_point_set",
    "hausdorff",
    "hausdorff_semi",
    "is_connected",
    "member",
    "boundary0",
    "boundary1",
    "layer",
    "recover_boundaries",
    "trace",
    "lift_interpolate",
    "lift_restrict",
    "Path",
    "concatenate",
    "straight_path",
    "AxiomCheck",
    "AxiomReport",
    "BoundaryPair",
    "InvalidPairError",
    "closer_set_window",
    "reconstruct",
    "validate",
    "GridRatio",
    "interpolate",
    "is_voronoi_cover",
    "restrict",
    "__version__",
]

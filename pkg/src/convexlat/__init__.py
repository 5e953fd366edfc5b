"""convexlat: exact-arithmetic analysis of convex lattices from planar point sets."""

from convexlat.geom import (  # noqa: F401
    EMPTY,
    Point,
    Polytope,
    Rational,
    between,
    contains,
    convex_hull,
    extreme_points,
    interior_contains,
    join,
    meet,
    orient,
    pt,
)

__version__ = "0.1.0"

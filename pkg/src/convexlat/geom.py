"""Exact planar convex geometry over the rationals.

Coordinates are `fractions.Fraction` throughout, so every predicate
(orientation, betweenness, membership) is decided exactly and the
canonical encoding of a polytope is a reliable equality/dedup key.
All values are immutable and every function is pure, which makes the
whole kernel safe to use from concurrent workers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


class RationalFormatError(ValueError):
    """String is not of the form "p" or "p/q" with q > 0."""


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact rational (q must be positive)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise RationalFormatError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`: "p/q", or "p" when q == 1."""
    return str(Fraction(value))


@dataclass(frozen=True, order=True)
class Point:
    """A point of the rational plane; ordering is lexicographic (x, then y)."""

    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point":
        """Build a point, coercing ints/strings/Fractions to exact rationals."""
        return Point(Fraction(x), Fraction(y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def to_json(self) -> list[str]:
        return [format_rational(self.x), format_rational(self.y)]

    @staticmethod
    def from_json(obj) -> "Point":
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise RationalFormatError(f"a point must be a 2-element array, got {obj!r}")
        return Point(parse_rational(obj[0]), parse_rational(obj[1]))


def pt(x, y) -> Point:
    """Shorthand for :meth:`Point.of`."""
    return Point.of(x, y)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of (p, q, r): +1 counter-clockwise, -1 clockwise, 0 collinear."""
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orient(p, q, r) == 0


def between(a: Point, b: Point, c: Point) -> bool:
    """True iff a, b, c are collinear and b lies strictly inside segment a-c.

    The three points must be pairwise distinct.
    """
    if a == b or b == c or a == c:
        raise ValueError("between() requires pairwise distinct points")
    if orient(a, c, b) != 0:
        return False
    return (min(a.x, c.x) <= b.x <= max(a.x, c.x)
            and min(a.y, c.y) <= b.y <= max(a.y, c.y))


def _on_closed_segment(a: Point, b: Point, p: Point) -> bool:
    # Membership of p in the closed segment a-b (a == b allowed).
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


@dataclass(frozen=True)
class Polytope:
    """A canonical bounded convex polytope: empty set, point, segment or polygon.

    The vertex tuple *is* the canonical encoding:

    * 0 vertices: the empty set,
    * 1 vertex: a single point,
    * 2 vertices: a segment, endpoints in lexicographic order,
    * >= 3 vertices: a strictly convex polygon, counter-clockwise,
      starting at the lexicographically smallest vertex.

    Two polytopes describe the same point set iff they are equal.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        v = self.vertices
        if len(v) == 2:
            if v[0] >= v[1]:
                raise ValueError("segment endpoints must be distinct and lex-ordered")
        elif len(v) >= 3:
            if min(v) != v[0]:
                raise ValueError("polygon ring must start at the lex-min vertex")
            n = len(v)
            for i in range(n):
                if orient(v[i - 1], v[i], v[(i + 1) % n]) <= 0:
                    raise ValueError("polygon ring must be strictly convex and CCW")

    @property
    def kind(self) -> str:
        return ("empty", "point", "segment")[len(self.vertices)] \
            if len(self.vertices) < 3 else "polygon"

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": [p.to_json() for p in self.vertices]}

    def __repr__(self) -> str:
        coords = ", ".join(f"({p.x},{p.y})" for p in self.vertices)
        return f"Polytope<{self.kind}: {coords}>"


EMPTY = Polytope(())


def singleton(p: Point) -> Polytope:
    return Polytope((p,))


def segment(a: Point, b: Point) -> Polytope:
    if a == b:
        return singleton(a)
    return Polytope((a, b)) if a < b else Polytope((b, a))


def convex_hull(points: Iterable[Point]) -> Polytope:
    """Canonical convex hull via the monotone chain, exact and deterministic."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return Polytope(tuple(pts))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2:
        # All input points collinear: lex-min and lex-max are the endpoints.
        return Polytope((pts[0], pts[-1]))
    # The chain starts at the lex-min point already.
    return Polytope(tuple(ring))


def polytope_of(points: Iterable[Point]) -> Polytope:
    """Alias of :func:`convex_hull`; the only public constructor for polygons."""
    return convex_hull(points)


def extreme_points(P: Polytope) -> frozenset[Point]:
    """The extreme points of P; for the empty set, the empty set."""
    return frozenset(P.vertices)


def contains(P: Polytope, p: Point) -> bool:
    """Exact membership of p in the closed set P."""
    v = P.vertices
    if not v:
        return False
    if len(v) == 1:
        return v[0] == p
    if len(v) == 2:
        return _on_closed_segment(v[0], v[1], p)
    n = len(v)
    return all(orient(v[i], v[(i + 1) % n], p) >= 0 for i in range(n))


def interior_contains(P: Polytope, p: Point) -> bool:
    """Membership in the interior of P relative to its affine span.

    For a segment this excludes the endpoints; for a single point it
    coincides with `contains`; the empty set has empty interior.
    """
    v = P.vertices
    if not v:
        return False
    if len(v) == 1:
        return v[0] == p
    if len(v) == 2:
        return _on_closed_segment(v[0], v[1], p) and p != v[0] and p != v[1]
    n = len(v)
    return all(orient(v[i], v[(i + 1) % n], p) > 0 for i in range(n))


def _edges(P: Polytope) -> list[tuple[Point, Point]]:
    v = P.vertices
    if len(v) == 2:
        return [(v[0], v[1])]
    return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    """Intersection point of lines p1p2 and q1q2, or None when parallel/coincident."""
    dx1, dy1 = p2.x - p1.x, p2.y - p1.y
    dx2, dy2 = q2.x - q1.x, q2.y - q1.y
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        return None
    t = ((q1.x - p1.x) * dy2 - (q1.y - p1.y) * dx2) / denom
    return Point(p1.x + t * dx1, p1.y + t * dy1)


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> tuple[Point, ...]:
    """Intersection of closed segments a-b and c-d as a canonical point tuple.

    Returns () when disjoint, a 1-tuple for a single common point, and the
    lex-sorted endpoints of the overlap when the segments are collinear and
    overlap in a segment.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        p1, p2 = sorted((a, b))
        q1, q2 = sorted((c, d))
        lo = max(p1, q1)
        hi = min(p2, q2)
        if lo > hi:
            return ()
        return (lo,) if lo == hi else (lo, hi)
    hits: list[Point] = []
    if o1 == 0 and _on_closed_segment(a, b, c):
        hits.append(c)
    if o2 == 0 and _on_closed_segment(a, b, d):
        hits.append(d)
    if o3 == 0 and _on_closed_segment(c, d, a):
        hits.append(a)
    if o4 == 0 and _on_closed_segment(c, d, b):
        hits.append(b)
    if hits:
        # Non-collinear segments meet in at most one point.
        return (hits[0],)
    if o1 * o2 < 0 and o3 * o4 < 0:
        p = line_intersection(a, b, c, d)
        assert p is not None
        return (p,)
    return ()


def join(P: Polytope, Q: Polytope) -> Polytope:
    """Least upper bound: the convex hull of the union (exact for polytopes)."""
    return convex_hull(P.vertices + Q.vertices)


def meet(P: Polytope, Q: Polytope) -> Polytope:
    """Greatest lower bound: the set intersection, as a canonical polytope.

    Every extreme point of the intersection of two convex polytopes is a
    vertex of one inside the other, or a boundary/boundary crossing, so the
    hull of those candidates is exactly the intersection.
    """
    if P.is_empty or Q.is_empty:
        return EMPTY
    if len(P.vertices) == 1:
        return P if contains(Q, P.vertices[0]) else EMPTY
    if len(Q.vertices) == 1:
        return Q if contains(P, Q.vertices[0]) else EMPTY
    candidates = [v for v in P.vertices if contains(Q, v)]
    candidates += [v for v in Q.vertices if contains(P, v)]
    for a, b in _edges(P):
        for c, d in _edges(Q):
            candidates.extend(segment_intersection(a, b, c, d))
    return convex_hull(candidates)


def area2(P: Polytope) -> Fraction:
    """Twice the (exact) area of P; zero for degenerate kinds."""
    v = P.vertices
    if len(v) < 3:
        return Fraction(0)
    total = Fraction(0)
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        total += a.x * b.y - b.x * a.y
    return total


def centroid(points: Iterable[Point]) -> Point:
    """Arithmetic mean of a nonempty collection of points."""
    pts = list(points)
    if not pts:
        raise ValueError("centroid of an empty collection")
    n = len(pts)
    return Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)


def interpolate(a: Point, b: Point, t: Fraction) -> Point:
    """The affine combination a + t*(b - a)."""
    t = Fraction(t)
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def map_polytope(P: Polytope, f: Callable[[Point], Point]) -> Polytope:
    """Image of P under a point map, re-canonicalized.

    Correct whenever f is an invertible affine map (vertices map to vertices).
    """
    return convex_hull(f(v) for v in P.vertices)

"""Independent brute-force oracles used to freeze expected test values.

Nothing here calls the polytope meet/join/hull code paths being tested:
membership goes through Caratheodory-style enumeration of simplices, the
closure family is built from that membership, and bijections are found by
exhaustive search.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from convexlat.geom import Point, orient


def sign(x) -> int:
    return (x > 0) - (x < 0)


def on_closed_segment(a: Point, b: Point, p: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def in_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    """Closed-triangle membership by orientation signs (degenerate-safe)."""
    if orient(a, b, c) == 0:
        return (on_closed_segment(a, b, p) or on_closed_segment(b, c, p)
                or on_closed_segment(a, c, p))
    d1 = orient(a, b, p)
    d2 = orient(b, c, p)
    d3 = orient(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def hull_contains(points, p: Point) -> bool:
    """p in conv(points), by Caratheodory: some simplex of <= 3 points holds p."""
    pts = list(points)
    if p in pts:
        return True
    for a, b in combinations(pts, 2):
        if on_closed_segment(a, b, p):
            return True
    for a, b, c in combinations(pts, 3):
        if in_triangle(a, b, c, p):
            return True
    return False


def solve_lines(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    """Exact 2x2 linear solve for the crossing of two non-parallel lines."""
    a1, b1 = p2.y - p1.y, p1.x - p2.x
    c1 = a1 * p1.x + b1 * p1.y
    a2, b2 = q2.y - q1.y, q1.x - q2.x
    c2 = a2 * q1.x + b2 * q1.y
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise ValueError("parallel lines")
    return Point(Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))


def closure_mask(points, mask: int) -> int:
    """Smallest superset of `mask` closed under 'lies in the hull of'."""
    chosen = [p for i, p in enumerate(points) if mask >> i & 1]
    out = mask
    for i, p in enumerate(points):
        if not mask >> i & 1 and hull_contains(chosen, p):
            out |= 1 << i
    return out


def closed_family(points) -> frozenset[int]:
    """All closures of subsets of `points`, as index bitmasks."""
    n = len(points)
    return frozenset(closure_mask(points, m) for m in range(1 << n))


def equivalent_brute(xs, ys):
    """Exhaustive search for an index bijection carrying one closure family
    onto the other; returns the mapping tuple or None."""
    if len(xs) != len(ys):
        return None
    fx = closed_family(xs)
    fy = closed_family(ys)
    if len(fx) != len(fy):
        return None
    n = len(xs)
    for perm in permutations(range(n)):
        mapped = set()
        for m in fx:
            img = 0
            for i in range(n):
                if m >> i & 1:
                    img |= 1 << perm[i]
            mapped.add(img)
        if mapped == fy:
            return perm
    return None


def automorphism_count_brute(xs) -> int:
    n = len(xs)
    fx = closed_family(xs)
    count = 0
    for perm in permutations(range(n)):
        mapped = set()
        for m in fx:
            img = 0
            for i in range(n):
                if m >> i & 1:
                    img |= 1 << perm[i]
            mapped.add(img)
        if mapped == fx:
            count += 1
    return count

"""Relative convex hulls, relative lattices, configuration equivalence,
counting invariants, named configuration constructors and the grid census.

A configuration is a finite labeled set of distinct rational points; all
operations are invariant under relabeling/permutation.  Subsets are handled
as index bitmasks internally and as frozensets of points at the API surface.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from convexlat.geom import Point, Polytope, contains, convex_hull, orient
from convexlat.lattice import (
    ClosureSystem,
    FiniteLattice,
    is_isomorphic,
    lattice_of_closure_system,
)


class ConfigurationError(ValueError):
    """Invalid configuration data (duplicate points, bad labels, bad JSON)."""


@dataclass(frozen=True)
class Configuration:
    """A finite set of distinct points, optionally labeled."""

    points: tuple[Point, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            seen = set()
            for i, p in enumerate(self.points):
                if p in seen:
                    raise ConfigurationError(
                        f"duplicate point at index {i}: ({p.x},{p.y})")
                seen.add(p)
        if self.labels is not None and len(self.labels) != len(self.points):
            raise ConfigurationError("labels must match points one-to-one")

    def __len__(self) -> int:
        return len(self.points)

    def index_of(self, p: Point) -> int:
        return self.points.index(p)

    def subset(self, indices: Iterable[int]) -> "Configuration":
        idx = sorted(set(indices))
        labels = None if self.labels is None else tuple(self.labels[i] for i in idx)
        return Configuration(tuple(self.points[i] for i in idx), labels)

    def mask_points(self, mask: int) -> frozenset[Point]:
        return frozenset(p for i, p in enumerate(self.points) if mask >> i & 1)

    def to_json(self) -> dict:
        out = {"points": [p.to_json() for p in self.points]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @staticmethod
    def from_json(obj) -> "Configuration":
        if not isinstance(obj, dict) or "points" not in obj:
            raise ConfigurationError('expected an object with a "points" array')
        raw = obj["points"]
        if not isinstance(raw, list):
            raise ConfigurationError('"points" must be an array')
        pts = tuple(Point.from_json(entry) for entry in raw)
        labels = obj.get("labels")
        if labels is not None:
            if (not isinstance(labels, list)
                    or any(not isinstance(s, str) for s in labels)):
                raise ConfigurationError('"labels" must be an array of strings')
            labels = tuple(labels)
        return Configuration(pts, labels)

    @staticmethod
    def of(*coords, labels: Sequence[str] | None = None) -> "Configuration":
        pts = tuple(Point(Fraction(x), Fraction(y)) for x, y in coords)
        return Configuration(pts, None if labels is None else tuple(labels))


def parse_configuration(text: str) -> Configuration:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return Configuration.from_json(obj)


# ---------------------------------------------------------------------------
# Relative hull and the closure family


class _HullCache:
    """Per-configuration cache of subset closures, keyed by bitmask."""

    def __init__(self, config: Configuration):
        self.config = config
        self.points = config.points
        self.n = len(config.points)
        self._closures: dict[int, int] = {}

    def closure(self, mask: int) -> int:
        got = self._closures.get(mask)
        if got is not None:
            return got
        chosen = [p for i, p in enumerate(self.points) if mask >> i & 1]
        hull = convex_hull(chosen)
        out = mask
        for i, p in enumerate(self.points):
            if not mask >> i & 1 and contains(hull, p):
                out |= 1 << i
        self._closures[mask] = out
        self._closures[out] = out
        return out


_CACHES: dict[Configuration, _HullCache] = {}


def _cache(config: Configuration) -> _HullCache:
    cache = _CACHES.get(config)
    if cache is None:
        cache = _HullCache(config)
        if len(_CACHES) > 256:
            _CACHES.clear()
        _CACHES[config] = cache
    return cache


def _mask_of(config: Configuration, subset: Iterable[Point]) -> int:
    mask = 0
    for p in subset:
        try:
            mask |= 1 << config.points.index(p)
        except ValueError:
            raise ConfigurationError(
                f"point ({p.x},{p.y}) is not in the configuration") from None
    return mask


def rch(config: Configuration, subset: Iterable[Point]) -> frozenset[Point]:
    """Relative convex hull: the configuration points inside the hull of the subset."""
    mask = _mask_of(config, subset)
    return config.mask_points(_cache(config).closure(mask))


def is_relatively_convex(config: Configuration, subset: Iterable[Point]) -> bool:
    subset = frozenset(subset)
    return rch(config, subset) == subset


def closed_family(config: Configuration) -> frozenset[int]:
    """All relatively convex subsets, as index bitmasks.

    Uses direct closure-of-every-subset up to 12 points and lexicographic
    next-closure enumeration above that (same result, fewer closures).
    """
    cache = _cache(config)
    n = cache.n
    if n <= 12:
        return frozenset(cache.closure(m) for m in range(1 << n))
    return frozenset(_next_closure_family(cache))


def _next_closure_family(cache: _HullCache) -> list[int]:
    # Ganter-style lectic enumeration: pivot from the highest bit down, keep
    # only the part of the current set below the pivot, accept the candidate
    # when it introduces no new element below the pivot.
    n = cache.n
    family = [cache.closure(0)]
    current = family[0]
    full = (1 << n) - 1
    while current != full:
        advanced = False
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                continue
            candidate = cache.closure((current & (bit - 1)) | bit)
            if not (candidate & (bit - 1) & ~current):
                current = candidate
                family.append(current)
                advanced = True
                break
        if not advanced:  # pragma: no cover - full set is always reachable
            break
    return family


def relative_lattice(config: Configuration, max_points: int = 16) -> FiniteLattice:
    """The lattice of relatively convex subsets (meet = intersection,
    join = relative hull of the union).  Payloads are point frozensets."""
    if len(config) > max_points:
        raise ConfigurationError(
            f"configuration has {len(config)} points, limit is {max_points}")
    system = ClosureSystem(len(config), closed_family(config))
    return lattice_of_closure_system(system, payload=config.mask_points)


def rext(config: Configuration) -> frozenset[Point]:
    """Points whose removal leaves a relatively convex set."""
    out = []
    pts = config.points
    for i, p in enumerate(pts):
        rest = [q for j, q in enumerate(pts) if j != i]
        if not contains(convex_hull(rest), p):
            out.append(p)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Equivalence of configurations


def _apply_perm(family: frozenset[int], perm: Sequence[int], n: int) -> frozenset[int]:
    out = set()
    for mask in family:
        img = 0
        rest = mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            img |= 1 << perm[i]
        out.add(img)
    return frozenset(out)


def _point_signatures(config: Configuration, family: frozenset[int]) -> list[tuple]:
    """Per-point invariants under closure-family bijections."""
    n = len(config)
    containing = [0] * n
    by_size: list[dict[int, int]] = [dict() for _ in range(n)]
    for mask in family:
        size = bin(mask).count("1")
        rest = mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            containing[i] += 1
            by_size[i][size] = by_size[i].get(size, 0) + 1
    return [(containing[i], tuple(sorted(by_size[i].items()))) for i in range(n)]


def _search_point_bijection(x: Configuration, y: Configuration
                            ) -> list[int] | None:
    """Backtracking search for an index bijection carrying closed sets of x
    exactly onto closed sets of y."""
    n = len(x)
    fx = closed_family(x)
    fy = closed_family(y)
    if len(fx) != len(fy):
        return None
    sig_x = _point_signatures(x, fx)
    sig_y = _point_signatures(y, fy)
    if sorted(sig_x) != sorted(sig_y):
        return None
    cx = _cache(x)
    cy = _cache(y)
    # pair-closure tables: which points land in the closure of each pair
    pair_x = {}
    pair_y = {}
    for i, j in combinations(range(n), 2):
        pair_x[i, j] = cx.closure((1 << i) | (1 << j))
        pair_y[i, j] = cy.closure((1 << i) | (1 << j))

    def pair_mask(table, i, j):
        return table[(i, j) if i < j else (j, i)]

    mapping = [-1] * n
    used = [False] * n

    def consistent(k: int, v: int) -> bool:
        for i in range(n):
            if mapping[i] < 0 or i == k:
                continue
            for j in range(n):
                m = mapping[j]
                if m < 0 or j in (i, k):
                    continue
                want = bool(pair_mask(pair_x, i, j) >> k & 1)
                got = bool(pair_mask(pair_y, mapping[i], m) >> v & 1)
                if want != got:
                    return False
                want = bool(pair_mask(pair_x, i, k) >> j & 1)
                got = bool(pair_mask(pair_y, mapping[i], v) >> m & 1)
                if want != got:
                    return False
        return True

    def back(k: int) -> bool:
        if k == n:
            return _apply_perm(fx, mapping, n) == fy
        for v in range(n):
            if used[v] or sig_y[v] != sig_x[k] or not consistent(k, v):
                continue
            mapping[k] = v
            used[v] = True
            if back(k + 1):
                return True
            used[v] = False
            mapping[k] = -1
        return False

    return list(mapping) if back(0) else None


def equivalent(x: Configuration, y: Configuration, method: str = "family"
               ) -> dict[Point, Point] | None:
    """A point bijection witnessing that x and y have isomorphic relative
    lattices, or None.

    `method` selects the engine: "family" searches point bijections against
    the closure families directly, "lattice" extracts the bijection from a
    lattice isomorphism via atoms, "both" runs the two and insists they agree.
    """
    if len(x) != len(y):
        return None
    if method not in ("family", "lattice", "both"):
        raise ValueError(f"unknown method {method!r}")
    result_family = result_lattice = None
    if method in ("family", "both"):
        perm = _search_point_bijection(x, y)
        result_family = None if perm is None else {
            x.points[i]: y.points[perm[i]] for i in range(len(x))}
    if method in ("lattice", "both"):
        lx = relative_lattice(x)
        ly = relative_lattice(y)
        iso = is_isomorphic(lx, ly)
        if iso is None:
            result_lattice = None
        else:
            point_map = {}
            for a in lx.atoms():
                (p,) = lx.payloads[a]
                (q,) = ly.payloads[iso[a]]
                point_map[p] = q
            result_lattice = point_map
    if method == "family":
        return result_family
    if method == "lattice":
        return result_lattice
    if (result_family is None) != (result_lattice is None):
        raise AssertionError("equivalence engines disagree")
    return result_family


# ---------------------------------------------------------------------------
# Small-configuration classifiers and counting invariants

#: Canonical names for the configuration classes of sizes 1..4.
SIZE_CLASS_NAMES = {
    1: ("line1",),
    2: ("line2",),
    3: ("line3", "apex2"),
    4: ("line4", "apex3", "subdiamond_0_2", "subdiamond_1_1"),
}


def classify_triple(a: Point, b: Point, c: Point) -> str:
    """"line3" when collinear, else "apex2" (a triangle)."""
    return "line3" if orient(a, b, c) == 0 else "apex2"


def classify_quad(pts: Sequence[Point]) -> str:
    """The equivalence class of 4 distinct points.

    line4: all collinear; apex3: exactly one collinear triple;
    subdiamond_0_2: no collinear triple, one point inside the others' triangle;
    subdiamond_1_1: convex position, no collinear triple.
    """
    collinear_triples = sum(
        1 for t in combinations(pts, 3) if orient(*t) == 0)
    if collinear_triples == 4:
        return "line4"
    if collinear_triples >= 1:
        return "apex3"
    hull = convex_hull(pts)
    return "subdiamond_1_1" if len(hull.vertices) == 4 else "subdiamond_0_2"


@dataclass(frozen=True)
class InvariantProfile:
    """Counting invariants of a configuration: subconfiguration counts of
    every class of size <= 4, plus the relative extreme point count."""

    size: int
    rext_size: int
    counts: tuple[tuple[str, int], ...]

    def __post_init__(self):
        got = dict(self.counts)
        for k in (3, 4):
            if self.size >= k:
                total = sum(got.get(name, 0) for name in SIZE_CLASS_NAMES[k])
                if total != comb(self.size, k):
                    raise AssertionError(
                        f"size-{k} counts sum to {total}, expected C({self.size},{k})")

    def count(self, name: str) -> int:
        return dict(self.counts).get(name, 0)

    def to_json(self) -> dict:
        return {"size": self.size, "rext": self.rext_size,
                "counts": dict(self.counts)}


def invariant_profile(config: Configuration) -> InvariantProfile:
    pts = config.points
    n = len(pts)
    counts: dict[str, int] = {}
    counts["line1"] = n
    counts["line2"] = comb(n, 2)
    if n >= 3:
        counts["line3"] = counts["apex2"] = 0
        for t in combinations(pts, 3):
            counts[classify_triple(*t)] += 1
    if n >= 4:
        for name in SIZE_CLASS_NAMES[4]:
            counts[name] = 0
        for q in combinations(pts, 4):
            counts[classify_quad(q)] += 1
    return InvariantProfile(
        size=n,
        rext_size=len(rext(config)),
        counts=tuple(sorted(counts.items())),
    )


def count_subconfigs(config: Configuration, target: Configuration) -> int:
    """Number of |target|-subsets of the configuration equivalent to target."""
    k = len(target)
    if k > len(config):
        return 0
    if k == 1:
        return len(config)
    if k == 2:
        return comb(len(config), 2)
    if k == 3:
        name = classify_triple(*target.points)
        return sum(1 for t in combinations(config.points, 3)
                   if classify_triple(*t) == name)
    if k == 4:
        name = classify_quad(target.points)
        return sum(1 for q in combinations(config.points, 4)
                   if classify_quad(q) == name)
    total = 0
    for idx in combinations(range(len(config)), k):
        if equivalent(config.subset(idx), target) is not None:
            total += 1
    return total


# ---------------------------------------------------------------------------
# Named configurations


def _collinear_triples(points: Sequence[Point]) -> frozenset[frozenset[Point]]:
    return frozenset(frozenset(t) for t in combinations(points, 3)
                     if orient(*t) == 0)


def _check_structure(config: Configuration,
                     intended: Iterable[Iterable[Point]]) -> Configuration:
    """Assert that the realization has exactly the intended collinear triples."""
    want = set()
    for group in intended:
        group = list(group)
        for t in combinations(group, 3):
            want.add(frozenset(t))
    got = _collinear_triples(config.points)
    if got != frozenset(want):
        raise ConfigurationError(
            f"realization has wrong collinearity structure: got {len(got)} "
            f"collinear triples, intended {len(want)}")
    return config


def collinear(n: int) -> Configuration:
    """n collinear points (on the x-axis at integer positions)."""
    if n < 1:
        raise ConfigurationError("need at least one point")
    cfg = Configuration.of(*[(i, 0) for i in range(n)])
    return _check_structure(cfg, [cfg.points])


def collinear_with_apex(n: int) -> Configuration:
    """n collinear points plus one point off the line."""
    if n < 1:
        raise ConfigurationError("need at least one base point")
    base = [(i, 0) for i in range(n)]
    cfg = Configuration.of(*base, (0, 1))
    return _check_structure(cfg, [cfg.points[:-1]])


def diamond(p: int, q: int) -> Configuration:
    """Two crossing lines: p+q+1 points on the x-axis and a 3-point vertical
    line through the origin, whose middle point is the crossing."""
    if p < 0 or q < 0:
        raise ConfigurationError("side counts must be nonnegative")
    axis = [(i, 0) for i in range(-p, q + 1)]
    cfg = Configuration.of(*axis, (0, -1), (0, 1))
    vertical = [Point(Fraction(0), Fraction(v)) for v in (-1, 0, 1)]
    return _check_structure(cfg, [cfg.points[:p + q + 1], vertical])


def subdiamond(p: int, q: int) -> Configuration:
    """A diamond with the crossing point removed."""
    if p < 0 or q < 0:
        raise ConfigurationError("side counts must be nonnegative")
    axis = [(i, 0) for i in range(-p, q + 1) if i != 0]
    cfg = Configuration.of(*axis, (0, -1), (0, 1))
    on_axis = [pt for pt in cfg.points if pt.y == 0]
    return _check_structure(cfg, [on_axis])


def vee() -> Configuration:
    """Two rays of three collinear points sharing their endpoint: the apex at
    the origin, each ray's far point twice as far as its near point."""
    cfg = Configuration.of((0, 0), (1, 0), (2, 0), (0, 1), (0, 2),
                           labels=("o", "a", "a'", "b", "b'"))
    return _check_structure(cfg, [cfg.points[:3], (cfg.points[0],) + cfg.points[3:]])


def sporadic_six() -> Configuration:
    """Six points whose only collinear triples form a pinwheel: each of the
    three lines holds one outer-triangle vertex and two inner-triangle
    vertices.  The unique 6-point configuration beyond the two-line families
    that still generates a finite convex lattice."""
    cfg = Configuration.of((3, 0), (-2, 3), (0, -2), (1, 0), (0, 1), (0, 0),
                           labels=("a", "b", "c", "a'", "b'", "c'"))
    a, b, c, a2, b2, c2 = cfg.points
    return _check_structure(cfg, [(a, a2, c2), (b, b2, a2), (c, c2, b2)])


def pentagon() -> Configuration:
    """Five points in convex position, no three collinear."""
    cfg = Configuration.of((1, 0), (3, 0), (4, 2), (2, 4), (0, 2))
    return _check_structure(cfg, [])


def quad_with_edge_point() -> Configuration:
    """A convex quadrilateral with a fifth point interior to one hull edge."""
    cfg = Configuration.of((0, 0), (2, 0), (4, 0), (1, 2), (3, 2))
    return _check_structure(cfg, [cfg.points[:3]])


def triangle_with_edge_and_inner() -> Configuration:
    """A triangle with one point interior to an edge and one interior point."""
    cfg = Configuration.of((0, 0), (2, 0), (4, 0), (2, 4), (1, 1))
    return _check_structure(cfg, [cfg.points[:3]])


def quad_with_inner() -> Configuration:
    """A convex quadrilateral with a generic interior point (off both
    diagonals, no collinear triple)."""
    cfg = Configuration.of((0, 0), (3, 0), (4, 3), (1, 4), (2, 1))
    return _check_structure(cfg, [])


def triangle_with_two_inner() -> Configuration:
    """A triangle with two generic interior points (no collinear triple)."""
    cfg = Configuration.of((0, 0), (4, 0), (2, 4), (2, 1), (3, 1))
    return _check_structure(cfg, [])


def five_point_catalog() -> dict[str, Configuration]:
    """Twelve pairwise non-equivalent 5-point configurations."""
    return {
        "line5": collinear(5),
        "apex4": collinear_with_apex(4),
        "vee5": vee(),
        "diamond_0_2": diamond(0, 2),
        "diamond_1_1": diamond(1, 1),
        "subdiamond_0_3": subdiamond(0, 3),
        "subdiamond_1_2": subdiamond(1, 2),
        "quad_edge_point": quad_with_edge_point(),
        "triangle_edge_inner": triangle_with_edge_and_inner(),
        "quad_inner": quad_with_inner(),
        "triangle_two_inner": triangle_with_two_inner(),
        "pentagon": pentagon(),
    }


def four_point_catalog() -> dict[str, Configuration]:
    return {
        "line4": collinear(4),
        "apex3": collinear_with_apex(3),
        "subdiamond_0_2": subdiamond(0, 2),
        "subdiamond_1_1": subdiamond(1, 1),
    }


def three_point_catalog() -> dict[str, Configuration]:
    return {
        "line3": collinear(3),
        "apex2": collinear_with_apex(2),
    }


# ---------------------------------------------------------------------------
# Census over a finite grid


@dataclass(frozen=True)
class CensusClass:
    label: str
    representative: Configuration
    profile: InvariantProfile
    members: int

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "representative": self.representative.to_json(),
            "profile": self.profile.to_json(),
            "canonical_members": self.members,
        }


@dataclass(frozen=True)
class CensusReport:
    n: int
    grid: int
    classes: tuple[CensusClass, ...]
    partial: bool
    subsets_seen: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "grid": self.grid,
            "partial": self.partial,
            "subsets_seen": self.subsets_seen,
            "class_count": len(self.classes),
            "classes": [c.to_json() for c in self.classes],
        }


def _grid_symmetries(g: int):
    last = g - 1
    return (
        lambda p: p,
        lambda p: Point(last - p.x, p.y),
        lambda p: Point(p.x, last - p.y),
        lambda p: Point(last - p.x, last - p.y),
        lambda p: Point(p.y, p.x),
        lambda p: Point(last - p.y, p.x),
        lambda p: Point(p.y, last - p.x),
        lambda p: Point(last - p.y, last - p.x),
    )


def _canonical_under_grid(points: tuple[Point, ...], g: int) -> tuple[Point, ...]:
    best = None
    for f in _grid_symmetries(g):
        image = tuple(sorted(f(p) for p in points))
        if best is None or image < best:
            best = image
    return best


def _signature(config: Configuration) -> tuple:
    profile = invariant_profile(config)
    hull = convex_hull(config.points)
    boundary = sum(
        1 for p in config.points
        if contains(hull, p) and not (len(hull.vertices) >= 3
                                      and _strictly_inside(hull, p)))
    line_sizes = _maximal_line_sizes(config.points)
    return (profile.rext_size, profile.counts, boundary, line_sizes)


def _strictly_inside(P: Polytope, p: Point) -> bool:
    v = P.vertices
    n = len(v)
    return all(orient(v[i], v[(i + 1) % n], p) > 0 for i in range(n))


def _maximal_line_sizes(points: Sequence[Point]) -> tuple[int, ...]:
    lines: dict[tuple, set[Point]] = {}
    for a, b in combinations(points, 2):
        dx, dy = b.x - a.x, b.y - a.y
        c = dy * a.x - dx * a.y
        # normalize the (dy, -dx, c) line form
        if dy != 0:
            dx, c = dx / dy, c / dy
            key = (1, Fraction(dx), Fraction(c))
        else:
            key = (0, 1, Fraction(a.y))
        lines.setdefault(key, set()).update((a, b))
    sizes = sorted((len(v) for v in lines.values() if len(v) >= 3), reverse=True)
    return tuple(sizes)


def census(n: int, grid: int, max_subsets: int | None = None) -> CensusReport:
    """Partition all n-subsets of the grid x grid integer lattice into
    configuration equivalence classes.

    Subsets are first canonicalized under the grid's eight symmetries (a
    pruning step only; class identity is always decided by `equivalent`).
    """
    if n < 1 or grid < 1:
        raise ConfigurationError("census needs n >= 1 and grid >= 1")
    grid_points = [Point(Fraction(x), Fraction(y))
                   for x in range(grid) for y in range(grid)]
    seen: set[tuple[Point, ...]] = set()
    buckets: dict[tuple, list[int]] = {}
    reps: list[Configuration] = []
    profiles: list[InvariantProfile] = []
    members: list[int] = []
    partial = False
    subsets_seen = 0
    for combo in combinations(grid_points, n):
        if max_subsets is not None and subsets_seen >= max_subsets:
            partial = True
            break
        subsets_seen += 1
        canon = _canonical_under_grid(combo, grid)
        if canon in seen:
            continue
        seen.add(canon)
        config = Configuration(canon)
        sig = _signature(config)
        placed = False
        for class_id in buckets.get(sig, ()):
            if equivalent(config, reps[class_id]) is not None:
                members[class_id] += 1
                placed = True
                break
        if not placed:
            buckets.setdefault(sig, []).append(len(reps))
            reps.append(config)
            profiles.append(invariant_profile(config))
            members.append(1)

    order = sorted(range(len(reps)),
                   key=lambda i: (_signature(reps[i]), reps[i].points))
    named = _catalog_for_size(n)
    classes = []
    for rank, i in enumerate(order):
        label = f"class_{rank}"
        for name, rep in named.items():
            if len(rep) == n and equivalent(reps[i], rep) is not None:
                label = name
                break
        classes.append(CensusClass(label, reps[i], profiles[i], members[i]))
    return CensusReport(n, grid, tuple(classes), partial, subsets_seen)


def _catalog_for_size(n: int) -> dict[str, Configuration]:
    if n == 1:
        return {"line1": collinear(1)}
    if n == 2:
        return {"line2": collinear(2)}
    if n == 3:
        return three_point_catalog()
    if n == 4:
        return four_point_catalog()
    if n == 5:
        return five_point_catalog()
    return {}

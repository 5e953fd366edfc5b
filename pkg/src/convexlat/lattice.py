"""Finite bounded lattices and the machinery around them.

A lattice is built either from a closure system (closed sets as index
bitmasks) or from an explicit order; isomorphism and automorphism search
run on the order structure alone, so element payloads (point sets,
polytopes, ...) only travel along for reporting.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence


class LatticeError(ValueError):
    """The given data does not describe a (closure system of a) lattice."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class ClosureSystem:
    """A family of closed subsets of {0..size-1}, closed under intersection.

    Subsets are bitmasks; `size <= 64` keeps all subset work cheap.
    """

    size: int
    closed: frozenset[int]

    def __post_init__(self):
        if self.size < 0 or self.size > 64:
            raise LatticeError("ground set size must be in 0..64")
        full = (1 << self.size) - 1
        if full not in self.closed:
            raise LatticeError("the full ground set must be closed")
        for a in self.closed:
            if a & ~full:
                raise LatticeError("closed set outside the ground set")
        closed = self.closed
        for a, b in combinations(closed, 2):
            if (a & b) not in closed:
                raise LatticeError(
                    f"family not closed under intersection: {a:b} & {b:b}")

    def closure(self, mask: int) -> int:
        """The smallest closed superset of `mask`."""
        out = (1 << self.size) - 1
        for c in self.closed:
            if c & mask == mask and c & out != out:
                out &= c
        return out


class FiniteLattice:
    """A finite bounded lattice given by its order relation.

    `payloads[i]` is an arbitrary value attached to element i.  The order
    is stored as bitmask rows: `up[i]` has bit j set iff i <= j.  Meets and
    joins are resolved order-theoretically and verified to exist.
    """

    def __init__(self, payloads: Sequence, leq: Callable[[int, int], bool]):
        self.payloads = list(payloads)
        n = len(self.payloads)
        self.n = n
        up = [0] * n
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if leq(i, j):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up = up
        self.down = down
        self._validate_order()
        self._down_index = {down[i]: i for i in range(n)}
        self._up_index = {up[i]: i for i in range(n)}
        self._covers_up: list[tuple[int, ...]] | None = None
        self._heights: list[int] | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_closure_system(cls, system: ClosureSystem,
                            payload: Callable[[int], object] = lambda m: m
                            ) -> "FiniteLattice":
        """Lattice of closed sets: meet = intersection, join = closure of union."""
        masks = sorted(system.closed, key=lambda m: (_popcount(m), m))
        index = {m: i for i, m in enumerate(masks)}
        lat = cls([payload(m) for m in masks],
                  lambda i, j: masks[i] & masks[j] == masks[i])
        lat.masks = masks
        lat.mask_index = index
        return lat

    def _validate_order(self):
        n = self.n
        for i in range(n):
            if not self.up[i] >> i & 1:
                raise LatticeError("order not reflexive")
        for i in range(n):
            for j in range(n):
                if i != j and self.up[i] >> j & 1 and self.up[j] >> i & 1:
                    raise LatticeError("order not antisymmetric")
        for i in range(n):
            ui = self.up[i]
            rest = ui
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if self.up[j] & ~ui:
                    raise LatticeError("order not transitive")
        if n:
            tops = [i for i in range(n) if self.up[i] == 1 << i]
            bots = [i for i in range(n) if self.down[i] == 1 << i]
            if len(tops) != 1 or len(bots) != 1:
                raise LatticeError("lattice must have a unique top and bottom")

    # -- basic queries -----------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @property
    def top(self) -> int:
        return self._down_index[(1 << self.n) - 1]

    @property
    def bottom(self) -> int:
        return self._up_index[(1 << self.n) - 1]

    def meet(self, i: int, j: int) -> int:
        common = self.down[i] & self.down[j]
        k = self._down_index.get(common)
        if k is None or not common >> k & 1:
            raise LatticeError(f"elements {i},{j} have no meet")
        return k

    def join(self, i: int, j: int) -> int:
        common = self.up[i] & self.up[j]
        k = self._up_index.get(common)
        if k is None or not common >> k & 1:
            raise LatticeError(f"elements {i},{j} have no join")
        return k

    def validate_lattice(self):
        """Check every pair has a meet and a join (raises LatticeError if not)."""
        for i in range(self.n):
            for j in range(i, self.n):
                self.meet(i, j)
                self.join(i, j)

    def atoms(self) -> list[int]:
        b = self.bottom
        return [i for i in range(self.n)
                if i != b and self.down[i] == (1 << i) | (1 << b)]

    def coatoms(self) -> list[int]:
        t = self.top
        return [i for i in range(self.n)
                if i != t and self.up[i] == (1 << i) | (1 << t)]

    def covers_up(self) -> list[tuple[int, ...]]:
        """covers_up()[i] = the elements covering i (Hasse out-neighbours)."""
        if self._covers_up is None:
            out = []
            for i in range(self.n):
                strict = self.up[i] & ~(1 << i)
                covers = []
                rest = strict
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if not strict & (self.down[j] & ~(1 << j)):
                        covers.append(j)
                out.append(tuple(covers))
            self._covers_up = out
        return self._covers_up

    def heights(self) -> list[int]:
        """Longest-chain height of every element above the bottom."""
        if self._heights is None:
            order = sorted(range(self.n), key=lambda i: _popcount(self.down[i]))
            h = [0] * self.n
            for i in order:
                below = self.down[i] & ~(1 << i)
                rest = below
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if h[j] + 1 > h[i]:
                        h[i] = h[j] + 1
            self._heights = h
        return self._heights

    def is_atomistic(self) -> bool:
        """Every element is the join of the atoms below it."""
        atom_mask = 0
        for a in self.atoms():
            atom_mask |= 1 << a
        for i in range(self.n):
            mask = self.down[i] & atom_mask
            j = self.bottom
            rest = mask
            while rest:
                a = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                j = self.join(j, a)
            if j != i:
                return False
        return True


def lattice_of_closure_system(system: ClosureSystem,
                              payload: Callable[[int], object] = lambda m: m
                              ) -> FiniteLattice:
    return FiniteLattice.from_closure_system(system, payload)


# ---------------------------------------------------------------------------
# Isomorphism / automorphism search


def _refine_colors(lat: FiniteLattice, init: list) -> list[int]:
    covers_up = lat.covers_up()
    covers_down = [[] for _ in range(lat.n)]
    for i, cs in enumerate(covers_up):
        for j in cs:
            covers_down[j].append(i)
    colors = init
    while True:
        sigs = []
        for i in range(lat.n):
            sigs.append((colors[i],
                         tuple(sorted(colors[j] for j in covers_up[i])),
                         tuple(sorted(colors[j] for j in covers_down[i]))))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _initial_colors(lat: FiniteLattice) -> list:
    h = lat.heights()
    atoms = set(lat.atoms())
    coatoms = set(lat.coatoms())
    return [(h[i], _popcount(lat.up[i]), _popcount(lat.down[i]),
             i in atoms, i in coatoms) for i in range(lat.n)]


def _joint_colors(l1: FiniteLattice, l2: FiniteLattice) -> tuple[list[int], list[int]]:
    init1 = _initial_colors(l1)
    init2 = _initial_colors(l2)
    ranking = {s: r for r, s in enumerate(sorted(set(init1) | set(init2)))}
    c1 = _refine_colors(l1, [ranking[s] for s in init1])
    c2 = _refine_colors(l2, [ranking[s] for s in init2])
    # One more joint normalization so color ids are comparable across the two.
    def sig(lat, colors):
        covers_up = lat.covers_up()
        covers_down = [[] for _ in range(lat.n)]
        for i, cs in enumerate(covers_up):
            for j in cs:
                covers_down[j].append(i)
        return [(colors[i], tuple(sorted(colors[j] for j in covers_up[i])),
                 tuple(sorted(colors[j] for j in covers_down[i])))
                for i in range(lat.n)]
    s1, s2 = sig(l1, c1), sig(l2, c2)
    ranking = {s: r for r, s in enumerate(sorted(set(s1) | set(s2)))}
    return [ranking[s] for s in s1], [ranking[s] for s in s2]


def _is_order_isomorphism(l1: FiniteLattice, l2: FiniteLattice,
                          mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(l1.n)):
        return False
    for i in range(l1.n):
        img = 0
        rest = l1.up[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            img |= 1 << mapping[j]
        if img != l2.up[mapping[i]]:
            return False
    return True


def _search_isomorphism(l1: FiniteLattice, l2: FiniteLattice,
                        collect_all: bool) -> list[list[int]]:
    """Backtracking search for order isomorphisms l1 -> l2.

    When both lattices are atomistic the search branches on atom images only
    and extends by joins; otherwise it assigns every element.  Color
    refinement prunes both variants.
    """
    results: list[list[int]] = []
    if l1.n != l2.n:
        return results
    c1, c2 = _joint_colors(l1, l2)
    if sorted(c1) != sorted(c2):
        return results
    classes2: dict[int, list[int]] = {}
    for j, c in enumerate(c2):
        classes2.setdefault(c, []).append(j)

    if l1.n == 0:
        return [[]]

    if l1.is_atomistic() and l2.is_atomistic():
        atoms1 = l1.atoms()
        atoms2 = set(l2.atoms())
        mapping = [-1] * l1.n
        mapping[l1.bottom] = l2.bottom

        def extend(k: int, used: set[int]) -> bool:
            if k == len(atoms1):
                full = _extend_by_joins(l1, l2, mapping)
                if full is not None and _is_order_isomorphism(l1, l2, full):
                    results.append(full)
                    return not collect_all
                return False
            a = atoms1[k]
            for b in classes2.get(c1[a], ()):
                if b in used or b not in atoms2:
                    continue
                mapping[a] = b
                if extend(k + 1, used | {b}):
                    return True
                mapping[a] = -1
            return False

        extend(0, set())
        return results

    # general element-by-element backtracking
    order = sorted(range(l1.n), key=lambda i: (len(classes2.get(c1[i], ())), i))
    mapping = [-1] * l1.n
    used = [False] * l2.n

    def ok(i: int, j: int) -> bool:
        for i2 in order:
            j2 = mapping[i2]
            if j2 < 0:
                continue
            if l1.leq(i, i2) != l2.leq(j, j2) or l1.leq(i2, i) != l2.leq(j2, j):
                return False
        return True

    def back(k: int) -> bool:
        if k == l1.n:
            m = list(mapping)
            if _is_order_isomorphism(l1, l2, m):
                results.append(m)
                return not collect_all
            return False
        i = order[k]
        for j in classes2.get(c1[i], ()):
            if used[j] or not ok(i, j):
                continue
            mapping[i] = j
            used[j] = True
            if back(k + 1):
                return True
            used[j] = False
            mapping[i] = -1
        return False

    back(0)
    return results


def _extend_by_joins(l1: FiniteLattice, l2: FiniteLattice,
                     partial: list[int]) -> list[int] | None:
    """Complete an atom mapping to all elements via joins of atoms."""
    mapping = list(partial)
    atom_mask = 0
    for a in l1.atoms():
        atom_mask |= 1 << a
    for i in range(l1.n):
        if mapping[i] >= 0:
            continue
        img = l2.bottom
        rest = l1.down[i] & atom_mask
        while rest:
            a = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            img = l2.join(img, mapping[a])
        mapping[i] = img
    if sorted(mapping) != list(range(l1.n)):
        return None
    return mapping


def is_isomorphic(l1: FiniteLattice, l2: FiniteLattice) -> list[int] | None:
    """A verified lattice isomorphism l1 -> l2 (as an index map), or None.

    An order isomorphism between lattices preserves meets and joins; both
    are re-checked on the returned map anyway.
    """
    found = _search_isomorphism(l1, l2, collect_all=False)
    if not found:
        return None
    mapping = found[0]
    assert _preserves_operations(l1, l2, mapping)
    return mapping


def _preserves_operations(l1: FiniteLattice, l2: FiniteLattice,
                          mapping: Sequence[int]) -> bool:
    for i in range(l1.n):
        for j in range(i, l1.n):
            if mapping[l1.meet(i, j)] != l2.meet(mapping[i], mapping[j]):
                return False
            if mapping[l1.join(i, j)] != l2.join(mapping[i], mapping[j]):
                return False
    return True


def automorphisms(lat: FiniteLattice) -> list[tuple[int, ...]]:
    """The full automorphism group, sorted, as index permutations."""
    perms = _search_isomorphism(lat, lat, collect_all=True)
    return sorted(tuple(p) for p in perms)


def is_lattice_morphism(mapping: Sequence[int], l1: FiniteLattice,
                        l2: FiniteLattice) -> bool:
    """Does `mapping` preserve all pairwise meets and joins? (exhaustive)"""
    if len(mapping) != l1.n or any(not 0 <= j < l2.n for j in mapping):
        raise LatticeError("mapping is not total from l1 into l2")
    for i in range(l1.n):
        for j in range(i, l1.n):
            if mapping[l1.meet(i, j)] != l2.meet(mapping[i], mapping[j]):
                return False
            if mapping[l1.join(i, j)] != l2.join(mapping[i], mapping[j]):
                return False
    return True


def is_join_morphism(mapping: Sequence[int], l1: FiniteLattice,
                     l2: FiniteLattice) -> bool:
    """Does `mapping` preserve all pairwise joins? (exhaustive)"""
    if len(mapping) != l1.n or any(not 0 <= j < l2.n for j in mapping):
        raise LatticeError("mapping is not total from l1 into l2")
    for i in range(l1.n):
        for j in range(i, l1.n):
            if mapping[l1.join(i, j)] != l2.join(mapping[i], mapping[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# Export


def covering_digraph(lat: FiniteLattice) -> tuple[tuple[int, int], ...]:
    """Hasse diagram edges (lower, upper), deterministically ordered."""
    edges = []
    for i, covers in enumerate(lat.covers_up()):
        for j in covers:
            edges.append((i, j))
    return tuple(sorted(edges))


def export_dot(lat: FiniteLattice,
               label: Callable[[object], str] = str) -> str:
    """Hasse diagram in DOT form; output is stable across runs."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(lat.n):
        lines.append(f'  n{i} [label="{label(lat.payloads[i])}"];')
    for i, j in covering_digraph(lat):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_json(lat: FiniteLattice,
                    payload_json: Callable[[object], object] = lambda p: p) -> dict:
    return {
        "elements": [payload_json(p) for p in lat.payloads],
        "cover_edges": [list(e) for e in covering_digraph(lat)],
        "bottom": lat.bottom,
        "top": lat.top,
    }

"""Minimal laminar distinguishing line sets, their orientations and stars."""
from __future__ import annotations

from dataclasses import dataclass

from .profiles import Profile, Region, distinguishable
from .search import SearchDefect
from .sepsys import SeparationPool, nested_sides


@dataclass(frozen=True)
class Line:
    """An unoriented nontrivial bipartition, stored by its canonical side."""

    side: int      # the orientation not containing pixel 0
    order: int

    def orientations(self, full: int) -> tuple[int, int]:
        return self.side, self.side ^ full


def line_of(pool: SeparationPool, side: int) -> Line:
    if side in (0, pool.full_mask):
        raise ValueError("a line must be a nontrivial bipartition")
    canon = pool.canonical_side(side)
    return Line(canon, pool.order_of(canon))


@dataclass(frozen=True)
class TreeSet:
    """A laminar set of lines over one pool."""

    pool: SeparationPool
    lines: tuple[Line, ...]      # sorted by (order, side)

    def __iter__(self):
        return iter(self.lines)

    def __len__(self):
        return len(self.lines)

    @property
    def full_mask(self) -> int:
        return self.pool.full_mask


def make_tree_set(pool: SeparationPool, lines) -> TreeSet:
    lines = sorted(set(lines), key=lambda l: (l.order, l.side))
    return TreeSet(pool, tuple(lines))


def is_laminar(pool: SeparationPool, lines) -> bool:
    lines = list(lines)
    full = pool.full_mask
    for i, a in enumerate(lines):
        for b in lines[i + 1:]:
            if not nested_sides(a.side, b.side, full):
                return False
    return True


def _line_orientation_in(line: Line, p: Profile) -> int | None:
    """The side of the line chosen by p, or None if p does not orient it."""
    if line.side in p.chosen:
        return line.side
    other = line.side ^ p.stratum.full_mask
    if other in p.chosen:
        return other
    return None


def line_distinguishes(line: Line, p: Profile, q: Profile) -> bool:
    a, b = _line_orientation_in(line, p), _line_orientation_in(line, q)
    return a is not None and b is not None and a != b


def min_distinguishers(p: Profile, q: Profile, pool: SeparationPool) -> frozenset[Line]:
    """All minimum-order lines distinguishing p from q (the efficiency oracle)."""
    if not distinguishable(p, q):
        raise ValueError("profiles are not distinguishable")
    ell = min(p.k, q.k)
    stratum = pool.stratum(ell)
    candidates = [line_of(pool, c) for c in stratum.pairs
                  if line_distinguishes(line_of(pool, c), p, q)]
    best = min(line.order for line in candidates)
    return frozenset(line for line in candidates if line.order == best)


# -- orientations of a tree set ----------------------------------------------


def consistent_orientations(t: TreeSet) -> list[frozenset[int]]:
    """All consistent orientations of the tree set, as chosen-side sets."""
    full = t.full_mask
    out: list[frozenset[int]] = []

    def descend(i: int, chosen: list[int]):
        if i == len(t.lines):
            out.append(frozenset(chosen))
            return
        line = t.lines[i]
        for side in (line.side, line.side ^ full):
            if all(s & side or (s ^ full) == side for s in chosen):
                chosen.append(side)
                descend(i + 1, chosen)
                chosen.pop()

    descend(0, [])
    return sorted(out, key=sorted)


def _maximal_elements(sides, full: int) -> frozenset[int]:
    """Maximal under <= (reverse inclusion): the inclusion-minimal sides."""
    sides = list(sides)
    return frozenset(
        s for s in sides
        if not any(o != s and o & s == o for o in sides)
    )


def splitting_stars(t: TreeSet) -> list[frozenset[int]]:
    """Maximal-element sets of the consistent orientations (the tree nodes)."""
    full = t.full_mask
    return [_maximal_elements(o, full) for o in consistent_orientations(t)]


def extensions(p: Profile, t: TreeSet) -> list[frozenset[int]]:
    """Consistent orientations of t extending p's partial orientation."""
    partial = {side for line in t.lines
               if (side := _line_orientation_in(line, p)) is not None}
    return [o for o in consistent_orientations(t) if partial <= o]


def outline(rho: Region, t: TreeSet) -> frozenset[int]:
    """Maximal elements of the complexity-level profile's restriction to t."""
    p = rho.members[0]
    oriented = [side for line in t.lines
                if (side := _line_orientation_in(line, p)) is not None]
    return _maximal_elements(oriented, t.full_mask)


# -- construction and verification -------------------------------------------


def _efficiently_distinguished(pair, lines) -> bool:
    candidates, _ = pair
    return any(line in candidates for line in lines)


def build_distinguishing_tree_set(profiles, pool: SeparationPool) -> TreeSet:
    """A minimal laminar set of efficient distinguishers for the profiles.

    Greedy by increasing minimum distinguishing order with nestedness
    backtracking, then a deletion pass; candidate outputs failing plain
    minimality fall through to the next greedy solution.
    """
    profiles = sorted(set(profiles), key=lambda p: (p.k, sorted(p.chosen)))
    for i, p in enumerate(profiles):
        for q in profiles[i + 1:]:
            if not distinguishable(p, q):
                raise ValueError("profiles must be pairwise distinguishable")
    pairs = []
    for i, p in enumerate(profiles):
        for q in profiles[i + 1:]:
            candidates = min_distinguishers(p, q, pool)
            pairs.append((candidates, (p, q)))
    pairs.sort(key=lambda pr: (min(l.order for l in pr[0]),
                               sorted(l.side for l in pr[0])))
    full = pool.full_mask

    def plain_ok(lines, without=None) -> bool:
        kept = [l for l in lines if l != without]
        return all(any(line_distinguishes(l, p, q) for l in kept)
                   for _, (p, q) in pairs)

    def efficient_ok(lines, without=None) -> bool:
        kept = [l for l in lines if l != without]
        return all(any(l in cands for l in kept) for cands, _ in pairs)

    def solutions(i: int, lines: list[Line]):
        if i == len(pairs):
            yield list(lines)
            return
        candidates, _ = pairs[i]
        if any(l in candidates for l in lines):
            yield from solutions(i + 1, lines)
            return
        for cand in sorted(candidates, key=lambda l: (l.order, l.side)):
            if all(nested_sides(cand.side, l.side, full) for l in lines):
                lines.append(cand)
                yield from solutions(i + 1, lines)
                lines.pop()

    for lines in solutions(0, []):
        # deletion pass: drop lines while every pair stays efficiently
        # distinguished
        changed = True
        while changed:
            changed = False
            for l in sorted(lines, key=lambda l: (-l.order, -l.side)):
                if efficient_ok(lines, without=l):
                    lines.remove(l)
                    changed = True
                    break
        if all(not plain_ok(lines, without=l) for l in lines):
            return make_tree_set(pool, lines)
    raise SearchDefect("no minimal laminar efficient distinguisher set found")


@dataclass(frozen=True)
class TreeSetReport:
    laminar: bool
    efficiency: bool
    minimality: bool
    bijection: bool

    @property
    def ok(self) -> bool:
        return self.laminar and self.efficiency and self.minimality and self.bijection


def verify_tree_set(t: TreeSet, profiles, pool: SeparationPool) -> TreeSetReport:
    """Independent check of efficiency, minimality and the orientation
    bijection, plus laminarity."""
    profiles = sorted(set(profiles), key=lambda p: (p.k, sorted(p.chosen)))
    laminar = is_laminar(pool, t.lines)
    prof_pairs = [(p, q) for i, p in enumerate(profiles) for q in profiles[i + 1:]]

    efficiency = all(
        any(line in min_distinguishers(p, q, pool) for line in t.lines)
        for p, q in prof_pairs
    )
    minimality = all(
        any(not any(line_distinguishes(l, p, q)
                    for l in t.lines if l != removed)
            for p, q in prof_pairs)
        for removed in t.lines
    ) if t.lines else True

    orientations = consistent_orientations(t)
    exts = [extensions(p, t) for p in profiles]
    bijection = (
        len(orientations) == len(profiles)
        and all(len(e) == 1 for e in exts)
        and len({e[0] for e in exts}) == len(profiles)
    )
    return TreeSetReport(laminar, efficiency, minimality, bijection)

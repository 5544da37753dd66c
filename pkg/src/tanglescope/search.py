"""Backtracking searches for consistent orientations of a stratum.

One engine serves profile enumeration, F'-tangle enumeration and F-tangle
existence.  It keeps an explicit assignment per separation pair and
propagates to a fixed point after every decision:

- consistency: a chosen side forces every stratum superset's pair toward
  the superset (the other orientation would be disjoint from a chosen
  side);
- profile mode: two chosen sides force their intersection's pair toward
  the intersection wherever that pair lies in the stratum (the profile
  condition);
- fprime/ftangle modes: the same, but only for co-pointing chosen sides
  (sides whose union is everything) — avoiding the star {r, s, (r & s)*},
  which for co-pointing r, s is both a void 3-star and a violator of the
  profile condition;
- ftangle mode additionally rejects single-pixel sides.

Each rule is a direct consequence of the orientation property being
searched for, and each is detected the moment the last side of a
violating configuration is assigned: a violation always consists of sides
x, y whose forced consequence contradicts a third assigned side, and the
pairwise scan against all previously chosen sides runs on every
assignment.  Leaves of the search are therefore exactly the orientations
sought, with no post-filtering.
"""
from __future__ import annotations

import sys

import numpy as np

from .sepsys import Stratum

_VECTOR_THRESHOLD = 400

_MODES = ("profile", "fprime", "ftangle")


class SearchDefect(RuntimeError):
    """Internal invariant failure in an exhaustive search."""


def _popcount(x: int) -> int:
    return x.bit_count()


def _bump_recursion(extra: int) -> None:
    limit = 4 * extra + 10000
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)


def _is_full_universe(stratum: Stratum) -> bool:
    npix = stratum.full_mask.bit_count()
    return len(stratum.pairs) == (1 << (npix - 1)) - 1


def _principal_orientations(stratum: Stratum) -> list[frozenset[int]]:
    full = stratum.full_mask
    out = set()
    for p in range(full.bit_length()):
        chosen = [full]
        for c in stratum.pairs:
            chosen.append(c if c >> p & 1 else c ^ full)
        out.add(frozenset(chosen))
    return sorted(out, key=sorted)


class _AssignmentSearch:
    """DPLL-style search over one side per pair, propagating to conflict
    or fixed point after each decision."""

    def __init__(self, stratum: Stratum, mode: str):
        assert mode in _MODES
        self.mode = mode
        self.full = stratum.full_mask
        # branch on small underlying sets first: they decide the most
        self.pairs = sorted(
            stratum.pairs,
            key=lambda c: (min(_popcount(c), _popcount(c ^ self.full)), c),
        )
        self.index: dict[int, int] = {}
        for i, c in enumerate(self.pairs):
            self.index[c] = i
            self.index[c ^ self.full] = i
        self.status: list[int | None] = [None] * len(self.pairs)
        self.chosen: list[int] = []

    def _propagate(self, side: int) -> int | None:
        """Assign `side` and close under forcing.  Returns the number of
        assignments made, or None on conflict (caller rolls back using
        the length of self.chosen recorded beforehand)."""
        made = 0
        queue = [side]
        while queue:
            s = queue.pop()
            if self.mode == "ftangle" and _popcount(s) == 1:
                return None  # single-pixel star
            i = self.index[s]
            cur = self.status[i]
            if cur is not None:
                if cur != s:
                    return None
                continue
            # forced intersections with previously chosen sides
            for y in self.chosen:
                if self.mode == "profile" or y | s == self.full:
                    j = y & s
                    if j == 0:
                        return None  # disjoint chosen sides: inconsistent
                    pj = self.index.get(j)
                    if pj is not None:
                        if self.status[pj] is None:
                            queue.append(j)
                        elif self.status[pj] != j:
                            return None  # {s, y, j*} fully present
            self.status[i] = s
            self.chosen.append(s)
            made += 1
            # consistency: every stratum superset of s is forced
            for pk, c in enumerate(self.pairs):
                if self.status[pk] is None:
                    d = c ^ self.full
                    if c & s == s:
                        queue.append(c)
                    elif d & s == s:
                        queue.append(d)
        return made

    def _rollback(self, count: int) -> None:
        for _ in range(count):
            s = self.chosen.pop()
            self.status[self.index[s]] = None

    def run(self, find_one: bool = False) -> list[frozenset[int]]:
        _bump_recursion(len(self.pairs))
        results: list[frozenset[int]] = []

        def descend(start: int) -> bool:
            for i in range(start, len(self.pairs)):
                if self.status[i] is not None:
                    continue
                c = self.pairs[i]
                d = c ^ self.full
                first, second = (d, c) if _popcount(d) >= _popcount(c) else (c, d)
                for choice in (first, second):
                    before = len(self.chosen)
                    made = self._propagate(choice)
                    if made is None:
                        self._rollback(len(self.chosen) - before)
                        continue
                    if descend(i + 1):
                        return True
                    self._rollback(made)
                return False
            results.append(frozenset(self.chosen) | {self.full})
            return find_one

        descend(0)
        return results


def _member_lookup(arr: np.ndarray, full: int) -> np.ndarray:
    lookup = np.zeros(full + 1, dtype=bool)
    lookup[arr] = True
    return lookup


# -- independent orientation checkers (used as oracles, not by the engine) ----


def violates_profile_condition(chosen: frozenset[int], full: int) -> bool:
    """True iff some chosen x, y have the inverse of their join chosen."""
    members = list(chosen)
    if len(members) <= _VECTOR_THRESHOLD:
        for i, x in enumerate(members):
            for y in members[i:]:
                if (x & y) ^ full in chosen:
                    return True
        return False
    arr = np.array(members, dtype=np.uint64)
    lookup = _member_lookup(arr, full)
    fullv = np.uint64(full)
    for x in arr:
        if lookup[(x & arr) ^ fullv].any():
            return True
    return False


def violates_fprime(chosen: frozenset[int], full: int) -> bool:
    """True iff some star subset consists of x, y and the inverse of their
    join — co-pointing x, y (union everything) with comp(x & y) chosen."""
    members = list(chosen)
    if len(members) <= _VECTOR_THRESHOLD:
        for i, x in enumerate(members):
            for y in members[i:]:
                if x | y == full and (x & y) ^ full in chosen:
                    return True
        return False
    arr = np.array(members, dtype=np.uint64)
    lookup = _member_lookup(arr, full)
    fullv = np.uint64(full)
    for x in arr:
        pointing = (x | arr) == fullv
        z = ((x & arr) ^ fullv)[pointing]
        if z.size and lookup[z].any():
            return True
    return False


def violates_star_avoidance(chosen: frozenset[int], full: int) -> bool:
    """True iff the orientation contains a single pixel or a void star with
    at most three elements."""
    if any(_popcount(m) == 1 for m in chosen):
        return True
    # void 2-stars need complementary members and void 1-stars the empty
    # side; neither occurs in an orientation, leaving void 3-stars: two
    # members x, y with disjoint inverses plus the union of those inverses
    # (the unique choice of third member z with x & y & z empty that still
    # points toward both)
    members = [m for m in chosen if m != full]
    if len(members) <= _VECTOR_THRESHOLD:
        for i, x in enumerate(members):
            a = x ^ full
            for y in members[i + 1:]:
                b = y ^ full
                if a & b == 0 and (a | b) in chosen:
                    return True
        return False
    comp = np.array(members, dtype=np.uint64) ^ np.uint64(full)
    lookup = _member_lookup(np.array(members, dtype=np.uint64), full)
    for a in comp:
        disjoint = (a & comp) == 0
        u = (a | comp)[disjoint]
        if u.size and lookup[u].any():
            return True
    return False


# -- public entry points ------------------------------------------------------


def enumerate_profile_orientations(stratum: Stratum) -> list[frozenset[int]]:
    """All profiles of the stratum as chosen-side sets, canonically sorted."""
    if _is_full_universe(stratum):
        # over the full universe every profile is principal: if no single
        # pixel is chosen then every inverse of one is, and for a minimal
        # chosen member m with p in m the profile condition applied to m
        # and {p}* forces m minus p in, descending to a single pixel
        return _principal_orientations(stratum)
    found = _AssignmentSearch(stratum, "profile").run()
    return sorted(found, key=sorted)


def enumerate_fprime_orientations(stratum: Stratum) -> list[frozenset[int]]:
    """All consistent orientations avoiding stars of the form r, s, (r v s)*."""
    if _is_full_universe(stratum):
        # as for profiles: the forcing star {m, {p}*, (m minus p)*} lies in
        # F' whenever its members are present, which over the full universe
        # they always are, so the same descent applies; conversely every
        # principal orientation avoids F' since all its members share a pixel
        return _principal_orientations(stratum)
    found = _AssignmentSearch(stratum, "fprime").run()
    return sorted(found, key=sorted)


def find_star_avoiding_orientation(stratum: Stratum) -> frozenset[int] | None:
    """One consistent orientation avoiding void <=3-stars and single pixels."""
    if _is_full_universe(stratum):
        # no avoiding orientation exists over the full universe: single
        # pixels force every inverse of one in, and a minimal member m
        # with p in m then closes the void 3-star {m, {p}*, (m minus p)*}
        return None
    hits = _AssignmentSearch(stratum, "ftangle").run(find_one=True)
    if not hits:
        return None
    if violates_star_avoidance(hits[0], stratum.full_mask):
        raise SearchDefect("F-tangle search returned a star-containing orientation")
    return hits[0]

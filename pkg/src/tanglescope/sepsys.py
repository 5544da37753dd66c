"""The separation-system algebra over bipartitions of the pixel set.

A pixel set A (int bitmask) is one orientation of the bipartition
(complement, A).  The partial order is reverse inclusion, the involution is
complementation, join is intersection and meet is union.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .canvas import DEFAULT_PIXEL_CAP, HARD_PIXEL_CAP, CanvasSizeError, WeightedCanvas


class UniverseMismatchError(ValueError):
    """Operation mixing separations from different weighted canvases."""


class SeparationPool:
    """Candidate pool of oriented separations with cached orders.

    Exact mode holds every subset of the pixel set; connected mode is a
    labelled heuristic restricted to sides whose both halves induce
    4-connected subgraphs (plus the degenerate pair).
    """

    def __init__(self, wc: WeightedCanvas, mode: str, sides: "np.ndarray | None",
                 orders_by_side: dict[int, int] | None):
        self.wc = wc
        self.mode = mode
        self.npixels = wc.npixels
        self.full_mask = wc.full_mask
        self._sides = sides              # exact mode: None (implicit 0..2^n-1)
        self._orders_by_side = orders_by_side
        self._profile_cache: dict[int, tuple] = {}

    # -- membership / orders -------------------------------------------------

    def __contains__(self, side: int) -> bool:
        if self.mode == "exact":
            return 0 <= side <= self.full_mask
        return side in self._orders_by_side

    def order_of(self, side: int) -> int:
        if self.mode == "exact":
            return int(self.wc.all_orders()[side])
        return self._orders_by_side[side]

    def sides(self):
        if self.mode == "exact":
            return range(self.full_mask + 1)
        return iter(self._ordered_sides)

    def __len__(self) -> int:
        if self.mode == "exact":
            return self.full_mask + 1
        return len(self._orders_by_side)

    @cached_property
    def _ordered_sides(self):
        assert self.mode == "connected"
        return sorted(self._orders_by_side, key=lambda s: (self._orders_by_side[s], s))

    @cached_property
    def max_order(self) -> int:
        if self.mode == "exact":
            return int(self.wc.all_orders().max())
        return max(self._orders_by_side.values())

    def sep(self, side: int) -> "OrientedSep":
        if side not in self:
            raise UniverseMismatchError(f"side {side:#x} is not in this pool")
        return OrientedSep(side, self)

    def canonical_side(self, side: int) -> int:
        """The orientation of side's pair that does not contain pixel 0."""
        return side if not side & 1 else side ^ self.full_mask

    # -- strata --------------------------------------------------------------

    def stratum(self, k: int) -> "Stratum":
        if k < 1:
            raise ValueError("stratum index k must be at least 1")
        if self.mode == "exact":
            orders = self.wc.all_orders()
            members = np.nonzero(orders < k)[0]
            pairs = sorted(
                int(s) for s in members
                if not s & 1 and 0 < s < self.full_mask
                and orders[int(s) ^ self.full_mask] < k
            )
            # exact pools are complement-closed, so the second check is
            # redundant there but keeps this correct for trimmed pools
            member_set = frozenset(int(s) for s in members)
        else:
            member_set = frozenset(s for s, o in self._orders_by_side.items() if o < k)
            pairs = sorted(s for s in member_set
                           if not s & 1 and 0 < s < self.full_mask
                           and (s ^ self.full_mask) in member_set)
        pairs.sort(key=lambda s: (self.order_of(s), s))
        return Stratum(self, k, tuple(pairs), member_set)


@dataclass(frozen=True)
class Stratum:
    """All oriented separations of order below k, closed under inversion."""

    pool: SeparationPool
    k: int
    pairs: tuple[int, ...]           # canonical side (pixel 0 outside) per line
    members: frozenset[int]

    @property
    def full_mask(self) -> int:
        return self.pool.full_mask

    def order_of(self, side: int) -> int:
        return self.pool.order_of(side)

    def __contains__(self, side: int) -> bool:
        return side in self.members


def build_universe(wc: WeightedCanvas, mode: str = "exact",
                   max_order: int | None = None,
                   pixel_cap: int = DEFAULT_PIXEL_CAP) -> SeparationPool:
    """Materialize the candidate pool of oriented separations."""
    if mode == "exact":
        cap = min(pixel_cap, HARD_PIXEL_CAP)
        if wc.npixels > cap:
            raise CanvasSizeError(
                f"{wc.npixels} pixels exceeds the exact-mode pixel cap {cap}"
            )
        if max_order is None:
            return SeparationPool(wc, "exact", None, None)
        orders = wc.all_orders()
        keep = {int(s): int(orders[s]) for s in np.nonzero(orders <= max_order)[0]}
        keep[0] = int(orders[0])
        keep[wc.full_mask] = int(orders[wc.full_mask])
        return SeparationPool(wc, "connected", None, keep)
    if mode != "connected":
        raise ValueError(f"unknown pool mode {mode!r}")
    sides = _connected_coconnected_sides(wc)
    orders = {s: wc.order(s) for s in sides}
    if max_order is not None:
        orders = {s: o for s, o in orders.items()
                  if o <= max_order or s in (0, wc.full_mask)}
    return SeparationPool(wc, "connected", None, orders)


def _connected_coconnected_sides(wc: WeightedCanvas) -> set[int]:
    """All sides whose both halves are 4-connected, plus the degenerate pair."""
    canvas = wc.canvas
    n = canvas.npixels
    neighbours = [0] * n
    for p, q in canvas.edges:
        neighbours[p] |= 1 << q
        neighbours[q] |= 1 << p

    def is_connected(mask: int) -> bool:
        if mask == 0:
            return True
        seed = mask & -mask
        seen = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                grow |= neighbours[b.bit_length() - 1]
            frontier = grow & mask & ~seen
            seen |= frontier
        return seen == mask

    out = {0, canvas.full_mask}
    # grow connected subsets from each root, extending only by higher pixel
    # ids reachable from the current set, so each subset is found once
    def grow(root: int, mask: int, ext: int):
        comp = mask ^ canvas.full_mask
        if is_connected(comp):
            out.add(mask)
            out.add(comp)
        while ext:
            b = ext & -ext
            ext ^= b
            p = b.bit_length() - 1
            new_ext = ext | (neighbours[p] & ~mask & ~((1 << (root + 1)) - 1) & ~ext)
            grow(root, mask | b, new_ext & ~(mask | b))
    for root in range(n):
        seed = 1 << root
        ext = neighbours[root] & ~((1 << (root + 1)) - 1)
        grow(root, seed, ext)
    return out


# -- oriented separations and their algebra ----------------------------------


@dataclass(frozen=True)
class OrientedSep:
    """One orientation of a bipartition, bound to its pool."""

    side: int
    pool: SeparationPool

    @property
    def order(self) -> int:
        return self.pool.order_of(self.side)

    def __repr__(self):
        return f"OrientedSep({self.side:#x}, order={self.order})"


def _same_pool(a: OrientedSep, b: OrientedSep) -> None:
    if a.pool is not b.pool:
        raise UniverseMismatchError("separations belong to different universes")


def inverse(a: OrientedSep) -> OrientedSep:
    return OrientedSep(a.side ^ a.pool.full_mask, a.pool)


def leq(a: OrientedSep, b: OrientedSep) -> bool:
    """a <= b, i.e. side(a) is a superset of side(b)."""
    _same_pool(a, b)
    return a.side | b.side == a.side


def join(a: OrientedSep, b: OrientedSep) -> OrientedSep:
    _same_pool(a, b)
    return OrientedSep(a.side & b.side, a.pool)


def meet(a: OrientedSep, b: OrientedSep) -> OrientedSep:
    _same_pool(a, b)
    return OrientedSep(a.side | b.side, a.pool)


def classify(a: OrientedSep, stratum: Stratum) -> frozenset[str]:
    """Labels from {small, cosmall, trivial, cotrivial, proper,
    degenerate-pair-member} applying to a within the stratum."""
    if a.pool is not stratum.pool:
        raise UniverseMismatchError("separation is not from the stratum's pool")
    if a.side not in stratum:
        raise ValueError("separation is not a member of the stratum")
    full = a.pool.full_mask
    labels = set()
    if a.side == full:
        labels.add("small")
    if a.side == 0:
        labels.add("cosmall")
    if a.side in (0, full):
        labels.add("degenerate-pair-member")
    # in this universe only the full side can sit strictly below both
    # orientations of another pair
    has_proper_pair = any(0 < s < full for s in stratum.pairs)
    if a.side == full and has_proper_pair:
        labels.add("trivial")
    if a.side == 0 and has_proper_pair:
        labels.add("cotrivial")
    if 0 < a.side < full:
        labels.add("proper")
    return frozenset(labels)


def is_nested(a: OrientedSep, b: OrientedSep) -> bool:
    """True iff the two underlying bipartitions have comparable orientations."""
    _same_pool(a, b)
    return nested_sides(a.side, b.side, a.pool.full_mask)


def nested_sides(x: int, y: int, full: int) -> bool:
    return (x & y == x or x & y == y or x & y == 0 or x | y == full)


def is_star(seps) -> bool:
    """True iff all distinct elements point towards each other."""
    seps = list(seps)
    for s in seps[1:]:
        _same_pool(seps[0], s)
    full = seps[0].pool.full_mask if seps else 0
    sides = [s.side for s in seps]
    for i, x in enumerate(sides):
        for y in sides[i + 1:]:
            if x == y:
                continue
            # x <= y* and y <= x* both reduce to x | y == full; two
            # orientations of one pair point away from each other
            if x | y != full or x ^ y == full:
                return False
    return True


def is_void(seps) -> bool:
    seps = list(seps)
    if not seps:
        return False
    inter = seps[0].pool.full_mask
    for s in seps:
        inter &= s.side
    return inter == 0


def is_single_pixel(seps) -> bool:
    seps = list(seps)
    return len(seps) == 1 and seps[0].side.bit_count() == 1


def is_consistent(seps) -> bool:
    """No two members of distinct pairs point away from each other."""
    seps = list(seps)
    for s in seps[1:]:
        _same_pool(seps[0], s)
    full = seps[0].pool.full_mask if seps else 0
    sides = [s.side for s in seps]
    return consistent_sides(sides, full)


def consistent_sides(sides, full: int) -> bool:
    # disjoint members of distinct pairs are exactly the witnessing
    # configurations r-inverse, s with r strictly below s
    sides = list(sides)
    for i, x in enumerate(sides):
        for y in sides[i + 1:]:
            if x & y == 0 and (x ^ full) != y:
                return False
    return True

"""Tangle duality: the standard star set F, F-tangles, chop trees and the
maximum supported resolution of a picture."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .canvas import Canvas, Picture, WeightedCanvas
from .profiles import Profile
from .search import (SearchDefect, enumerate_fprime_orientations,
                     find_star_avoiding_orientation)
from .sepsys import SeparationPool, Stratum, build_universe
from .treeset import Line, line_of

_ENUMERATE_LIMIT = 400


@dataclass(frozen=True)
class StarSetF:
    """The standard star set over a stratum: void stars with at most three
    elements and single pixels; co-trivial singletons are void 1-stars."""

    stratum: Stratum
    kind: str = "standard"

    def __contains__(self, star) -> bool:
        sides = sorted(set(star))
        full = self.stratum.full_mask
        if any(s not in self.stratum.members for s in sides):
            return False
        for i, x in enumerate(sides):
            for y in sides[i + 1:]:
                if x | y != full or x ^ y == full:
                    return False  # not a star
        if len(sides) == 1 and sides[0].bit_count() == 1:
            return True  # single pixel
        if not sides:
            return False
        inter = full
        for s in sides:
            inter &= s
        return inter == 0 and len(sides) <= 3

    def enumerate(self) -> list[frozenset[int]]:
        """All member stars; only for small strata."""
        members = sorted(self.stratum.members)
        if len(members) > _ENUMERATE_LIMIT:
            raise ValueError("stratum too large for star enumeration")
        out = []
        for r in (1, 2, 3):
            for combo in combinations(members, r):
                if combo in self:
                    out.append(frozenset(combo))
        return out


def standard_F(stratum: Stratum) -> StarSetF:
    return StarSetF(stratum)


def _assert_profile(chosen: frozenset[int], stratum: Stratum) -> None:
    """Vectorized consistency + profile-condition + unfocus verification."""
    full = stratum.full_mask
    if any(s.bit_count() == 1 for s in chosen):
        raise SearchDefect("F-tangle search returned a focused orientation")
    arr = np.array(sorted(chosen), dtype=np.uint64)
    fullv = np.uint64(full)
    lookup = np.zeros(full + 1, dtype=bool)
    lookup[arr] = True
    for x in arr:
        disjoint = (x & arr) == 0
        if np.count_nonzero(disjoint) - int(x ^ full in chosen) > 0:
            raise SearchDefect("F-tangle search returned an inconsistent orientation")
        if lookup[(x & arr) ^ fullv].any():
            raise SearchDefect("F-tangle search returned a non-profile")


def find_f_tangle(stratum: Stratum, f: StarSetF | None = None) -> Profile | None:
    """An F-tangle of the stratum for the standard F, or None.

    Every hit is re-verified to be an unfocused profile before it is
    returned; a failure is an internal defect.
    """
    if f is not None and f.kind != "standard":
        raise NotImplementedError("only the standard star set is supported")
    chosen = find_star_avoiding_orientation(stratum)
    if chosen is None:
        return None
    _assert_profile(chosen, stratum)
    return Profile(stratum, chosen)


def enumerate_f_prime_tangles(stratum: Stratum) -> tuple[Profile, ...]:
    """All tangles over the stars violating the profile condition."""
    found = enumerate_fprime_orientations(stratum)
    return tuple(Profile(stratum, chosen) for chosen in found)


# -- chop trees ---------------------------------------------------------------


@dataclass(frozen=True)
class ChopNode:
    """A part of the recursive bipartition; leaves carry single pixels."""

    part: int
    children: tuple["ChopNode", ...]   # () for leaves, 2 otherwise

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class ChopTree:
    """A rooted-at-an-edge decomposition by lines of order below k whose
    splitting stars are void 3-stars or single pixels."""

    k: int
    roots: tuple[ChopNode, ...]   # two halves, or one leaf for a 1-pixel canvas

    def nodes(self):
        for root in self.roots:
            yield from root.walk()

    def lines(self, pool: SeparationPool) -> frozenset[Line]:
        full = pool.full_mask
        return frozenset(line_of(pool, n.part) for n in self.nodes()
                         if 0 < n.part < full)


def build_chop_tree(wc: WeightedCanvas, k: int,
                    pool: SeparationPool | None = None) -> ChopTree | None:
    """The dual witness: recursively split parts by lines of order below k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if wc.npixels == 0:
        raise ValueError("empty canvas")
    if wc.npixels == 1:
        return ChopTree(k, (ChopNode(wc.full_mask, ()),))
    if pool is None:
        pool = build_universe(wc)
    full = pool.full_mask
    stratum = pool.stratum(k)
    sides = sorted((s for s in stratum.members if 0 < s < full),
                   key=lambda s: (stratum.order_of(s), s))
    side_set = set(sides)
    memo: dict[int, ChopNode | None] = {}

    def choppable(part: int) -> ChopNode | None:
        if part.bit_count() == 1:
            return ChopNode(part, ())
        if part in memo:
            return memo[part]
        memo[part] = None   # cycle-safe; overwritten on success
        candidates = []
        for c1 in sides:
            if c1 & part == c1 and c1 != part:
                c2 = part & ~c1
                if c1 < c2 and c2 in side_set:
                    candidates.append((max(stratum.order_of(c1),
                                           stratum.order_of(c2)), c1, c2))
        for _, c1, c2 in sorted(candidates):
            left, right = choppable(c1), choppable(c2)
            if left is not None and right is not None:
                memo[part] = ChopNode(part, (left, right))
                break
        return memo[part]

    for a in sides:
        if a & 1:
            continue   # root halves canonically: pixel 0 in the second part
        b = a ^ full
        if b not in side_set:
            continue
        left, right = choppable(a), choppable(b)
        if left is not None and right is not None:
            return ChopTree(k, (left, right))
    return None


@dataclass(frozen=True)
class ChopTreeReport:
    laminar: bool
    orders_below_k: bool
    leaves_biject_pixels: bool
    stars_ok: bool

    @property
    def ok(self) -> bool:
        return (self.laminar and self.orders_below_k
                and self.leaves_biject_pixels and self.stars_ok)


def verify_chop_tree(tree: ChopTree, wc: WeightedCanvas,
                     pool: SeparationPool | None = None) -> ChopTreeReport:
    """Independent validation of the chop-tree invariants."""
    if pool is None:
        pool = build_universe(wc)
    full = pool.full_mask
    nodes = list(tree.nodes())
    parts = [n.part for n in nodes]

    laminar = all(
        a & b in (0, a, b) or a | b == full
        for i, a in enumerate(parts) for b in parts[i + 1:]
    )
    orders_below_k = all(
        pool.order_of(n.part) < tree.k for n in nodes if 0 < n.part < full
    ) and (len(tree.roots) == 1
           or all(pool.order_of(r.part) < tree.k for r in tree.roots))

    leaf_parts = [n.part for n in nodes if not n.children]
    union = 0
    for p in leaf_parts:
        union |= p
    leaves_biject_pixels = (
        all(p.bit_count() == 1 for p in leaf_parts)
        and union == full
        and len(leaf_parts) == wc.npixels
    )

    def star_ok(node: ChopNode) -> bool:
        if not node.children:
            return node.part.bit_count() == 1   # single-pixel star
        if len(node.children) != 2:
            return False
        c1, c2 = (c.part for c in node.children)
        if c1 & c2 or c1 | c2 != node.part:
            return False
        star = [node.part, c1 ^ full, c2 ^ full]
        pairwise = all(x | y == full for x, y in combinations(star, 2))
        inter = star[0] & star[1] & star[2]
        return pairwise and inter == 0   # void 3-star

    roots_ok = (len(tree.roots) == 1 or
                (tree.roots[0].part | tree.roots[1].part == full
                 and not tree.roots[0].part & tree.roots[1].part))
    stars_ok = roots_ok and all(star_ok(n) for n in nodes)
    return ChopTreeReport(laminar, orders_below_k, leaves_biject_pixels, stars_ok)


# -- the dichotomy and resolution ---------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    k: int
    f_tangle: Profile | None
    chop_tree: ChopTree | None
    chop_tree_report: ChopTreeReport | None

    @property
    def exclusive(self) -> bool:
        return (self.f_tangle is None) != (self.chop_tree is None)

    @property
    def ok(self) -> bool:
        return self.exclusive and (
            self.chop_tree is None or self.chop_tree_report.ok
        )


def verify_duality(wc: WeightedCanvas, k: int,
                   pool: SeparationPool | None = None) -> DualityReport:
    """Run both sides of the dichotomy; exactly one must succeed."""
    if pool is None:
        pool = build_universe(wc)
    tangle = find_f_tangle(pool.stratum(k))
    tree = build_chop_tree(wc, k, pool)
    report = verify_chop_tree(tree, wc, pool) if tree is not None else None
    return DualityReport(k, tangle, tree, report)


def induced_subcanvas(wc: WeightedCanvas, subset: int) -> WeightedCanvas:
    """The weighted canvas on a pixel subset with its internal edges.

    The offset N is inherited from the parent so that sub-canvas orders are
    comparable across subsets of one picture.
    """
    if subset == 0:
        raise ValueError("pixel subset must be nonempty")
    if subset & ~wc.full_mask:
        raise ValueError("pixel subset outside the canvas")
    pixels = [p for p in range(wc.npixels) if subset >> p & 1]
    remap = {p: i for i, p in enumerate(pixels)}
    edges = []
    delta = []
    for (p, q), d in zip(wc.canvas.edges, wc.delta):
        if p in remap and q in remap:
            edges.append((remap[p], remap[q]))
            delta.append(d)
    incident: list[list[int]] = [[] for _ in pixels]
    for i, (p, q) in enumerate(edges):
        incident[p].append(i)
        incident[q].append(i)
    canvas = Canvas(len(pixels), 1, tuple(edges), tuple(tuple(v) for v in incident))
    picture = Picture(canvas, wc.picture.n,
                      tuple(wc.picture.values[p] for p in pixels))
    return WeightedCanvas(picture, tuple(delta), wc.N)


def max_supported_resolution(wc: WeightedCanvas, subset: int | None = None,
                             pixel_cap: int | None = None) -> int:
    """The largest k admitting an unfocused k-profile, found via F-tangles."""
    if subset is not None:
        wc = induced_subcanvas(wc, subset)
    kwargs = {} if pixel_cap is None else {"pixel_cap": pixel_cap}
    pool = build_universe(wc, "exact", **kwargs)
    best = 0
    for k in range(1, pool.max_order + 2):
        # existence is downward-closed in k (restrictions of unfocused
        # profiles are unfocused), so stop at the first failure
        if find_f_tangle(pool.stratum(k)) is None:
            break
        best = k
    return best

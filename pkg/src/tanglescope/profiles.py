"""Profiles of strata, their enumeration, equivalence classes and regions."""
from __future__ import annotations

from dataclasses import dataclass

from .canvas import WeightedCanvas
from .search import enumerate_profile_orientations
from .sepsys import SeparationPool, Stratum, build_universe, consistent_sides


@dataclass(frozen=True)
class Orientation:
    """One chosen orientation per separation of a stratum.

    `chosen` holds the chosen side of every nondegenerate pair plus the
    full pixel set (the forced orientation of the degenerate pair)."""

    stratum: Stratum
    chosen: frozenset[int]

    @property
    def k(self) -> int:
        return self.stratum.k

    @property
    def pool(self) -> SeparationPool:
        return self.stratum.pool


@dataclass(frozen=True)
class Profile(Orientation):
    """A consistent orientation satisfying the profile condition."""


def orientation_of(stratum: Stratum, chosen) -> Orientation:
    return Orientation(stratum, frozenset(chosen) | {stratum.full_mask})


def is_profile(o: Orientation) -> bool:
    """Definition-level profile check, independent of the search engine."""
    full = o.stratum.full_mask
    chosen = o.chosen
    if full not in chosen or 0 in chosen:
        return False
    allowed = {full}
    for c in o.stratum.pairs:
        d = c ^ full
        if (c in chosen) == (d in chosen):
            return False
        allowed.add(c)
        allowed.add(d)
    if not chosen <= allowed:
        return False
    if not consistent_sides(list(chosen), full):
        return False
    members = list(chosen)
    for i, x in enumerate(members):
        for y in members[i:]:
            if ((x & y) ^ full) in chosen:
                return False
    return True


def enumerate_profiles(stratum: Stratum) -> tuple[Profile, ...]:
    """The complete, canonically ordered list of profiles of the stratum."""
    cache = stratum.pool._profile_cache
    key = stratum.k
    if key not in cache:
        found = enumerate_profile_orientations(stratum)
        cache[key] = tuple(Profile(stratum, chosen) for chosen in found)
    return cache[key]


def restrict(p: Profile, ell: int) -> Profile:
    """The induced profile on the order-below-ell stratum."""
    if ell > p.k:
        raise ValueError(f"cannot restrict a {p.k}-profile upward to {ell}")
    sub = p.pool.stratum(ell)
    return Profile(sub, frozenset(s for s in p.chosen if s in sub.members))


def induces(p: Profile, q: Profile) -> bool:
    if q.k > p.k:
        raise ValueError("a profile can only induce profiles of lower or equal order")
    return restrict(p, q.k) == q


def is_focused(p: Orientation) -> bool:
    return any(s.bit_count() == 1 for s in p.chosen)


def is_principal(p: Orientation) -> bool:
    """True iff the profile is exactly 'everything containing some pixel p'."""
    full = p.stratum.full_mask
    for pix in range(full.bit_length()):
        bit = 1 << pix
        if all((c & bit != 0) == (c in p.chosen)
               for pair in p.stratum.pairs for c in (pair, pair ^ full)):
            return True
    return False


def distinguishes(line_side: int, p: Orientation, q: Orientation) -> bool:
    full = p.stratum.full_mask
    other = line_side ^ full
    return ((line_side in p.chosen and other in q.chosen)
            or (other in p.chosen and line_side in q.chosen))


def distinguishable(p: Orientation, q: Orientation) -> bool:
    return not (p.chosen <= q.chosen or q.chosen <= p.chosen)


def equivalent(p: Profile, q: Profile) -> bool:
    """Equivalence of profiles: the higher one induces the lower and is the
    only profile doing so at every intermediate level."""
    if p.pool is not q.pool:
        raise ValueError("profiles from different pools")
    if p.k == q.k:
        return p == q
    hi, lo = (p, q) if p.k > q.k else (q, p)
    if restrict(hi, lo.k) != lo:
        return False
    for mid in range(lo.k, hi.k + 1):
        inducing = [r for r in enumerate_profiles(hi.pool.stratum(mid))
                    if restrict(r, lo.k) == lo]
        if inducing != [restrict(hi, mid)]:
            return False
    return True


@dataclass(frozen=True)
class Region:
    """An equivalence class of profiles containing no focused profile."""

    members: tuple[Profile, ...]   # ascending stratum index

    @property
    def complexity(self) -> int:
        return self.members[0].k

    @property
    def cohesion(self) -> int:
        return self.members[-1].k

    @property
    def visibility(self) -> int:
        return self.cohesion - self.complexity


def profile_levels(pool: SeparationPool) -> dict[int, tuple[Profile, ...]]:
    """Profiles per stratum index, up to the first level where every profile
    is focused (no higher level can host an unfocused profile, since
    restrictions of unfocused profiles are unfocused)."""
    levels: dict[int, tuple[Profile, ...]] = {}
    max_k = pool.max_order + 1
    for k in range(1, max_k + 1):
        profs = enumerate_profiles(pool.stratum(k))
        levels[k] = profs
        if all(is_focused(p) for p in profs):
            break
    return levels


def equivalence_classes(pool: SeparationPool) -> list[tuple[Profile, ...]]:
    """All equivalence classes of profiles reachable below the focus horizon.

    A class is a maximal chain of unique extensions: a k-profile is
    equivalent to the (k-1)-profile it induces exactly when it is the only
    k-profile inducing it."""
    levels = profile_levels(pool)
    ks = sorted(levels)
    children: dict[Profile, list[Profile]] = {}
    for k in ks[1:]:
        for p in levels[k]:
            children.setdefault(restrict(p, k - 1), []).append(p)
    classes = []
    starts = list(levels[ks[0]])
    for k in ks[1:]:
        for p in levels[k]:
            if len(children[restrict(p, k - 1)]) != 1:
                starts.append(p)
    for q in starts:
        chain = [q]
        while True:
            ext = children.get(chain[-1], [])
            if len(ext) != 1:
                break
            chain.append(ext[0])
        classes.append(tuple(chain))
    classes.sort(key=lambda ch: (ch[0].k, sorted(ch[0].chosen)))
    return classes


def regions(wc: WeightedCanvas, pool: SeparationPool | None = None,
            pixel_cap: int | None = None) -> tuple[Region, ...]:
    """Discover all regions of the picture: unfocused equivalence classes."""
    if pool is None:
        kwargs = {} if pixel_cap is None else {"pixel_cap": pixel_cap}
        pool = build_universe(wc, "exact", **kwargs)
    out = [Region(chain) for chain in equivalence_classes(pool)
           if not any(is_focused(p) for p in chain)]
    return tuple(out)


def refines(sigma: Region, rho: Region) -> bool:
    """True iff the profiles in sigma induce those in rho."""
    if sigma == rho:
        return True
    if sigma.complexity <= rho.cohesion:
        return False
    return restrict(sigma.members[0], rho.cohesion) == rho.members[-1]

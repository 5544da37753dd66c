"""End-to-end analysis pipeline and the versioned JSON report."""
from __future__ import annotations

import json

from .canvas import WeightedCanvas
from .duality import build_chop_tree, find_f_tangle, verify_chop_tree
from .profiles import Profile, refines, regions, restrict
from .sepsys import build_universe
from .treeset import (TreeSet, build_distinguishing_tree_set, outline,
                      splitting_stars, verify_tree_set)

SCHEMA_VERSION = 1

# chop-tree searches are quadratic in the stratum size; above this many
# oriented sides the per-k verdict records the tree side as not attempted
CHOP_TREE_PAIR_LIMIT = 40000


def _hex(side: int) -> str:
    return f"{side:#x}"


def select_representatives(region_list) -> list[Profile]:
    """One maximal profile per region, dropping any that another induces."""
    reps = [r.members[-1] for r in region_list]
    reps.sort(key=lambda p: (p.k, sorted(p.chosen)))
    kept: list[Profile] = []
    for p in reps:
        if any(q.k >= p.k and restrict(q, p.k) == p for q in reps if q != p):
            continue
        kept.append(p)
    return kept


def analyze(wc: WeightedCanvas, mode: str = "exact",
            pixel_cap: int | None = None) -> tuple[dict, bool]:
    """Full analysis; returns (report, all verifications passed)."""
    kwargs = {} if pixel_cap is None else {"pixel_cap": pixel_cap}
    pool = build_universe(wc, mode, **kwargs)
    region_list = regions(wc, pool=pool)

    reps = select_representatives(region_list)
    if len(reps) >= 2:
        tree = build_distinguishing_tree_set(reps, pool)
        tree_report = verify_tree_set(tree, reps, pool)
        tree_ok = tree_report.ok
        tree_verified = {
            "laminar": tree_report.laminar,
            "efficiency": tree_report.efficiency,
            "minimality": tree_report.minimality,
            "bijection": tree_report.bijection,
        }
    else:
        tree = TreeSet(pool, ())
        tree_ok = True
        tree_verified = {"laminar": True, "efficiency": True,
                         "minimality": True, "bijection": True}

    resolution = 0
    for k in range(1, pool.max_order + 2):
        if find_f_tangle(pool.stratum(k)) is None:
            break
        resolution = k

    verdicts = []
    duality_ok = True
    for k in range(1, max(resolution + 1, 1) + 1):
        tangle = find_f_tangle(pool.stratum(k))
        stratum = pool.stratum(k)
        if len(stratum.pairs) <= CHOP_TREE_PAIR_LIMIT:
            chop = build_chop_tree(wc, k, pool)
            chop_found = chop is not None
            chop_valid = (verify_chop_tree(chop, wc, pool).ok
                          if chop is not None else None)
            ok = (tangle is not None) != chop_found and chop_valid is not False
            duality_ok = duality_ok and ok
        else:
            chop_found = None
            chop_valid = None
            ok = None
        verdicts.append({
            "k": k,
            "f_tangle": tangle is not None,
            "chop_tree": chop_found,
            "chop_tree_valid": chop_valid,
            "ok": ok,
        })

    region_entries = []
    for i, rho in enumerate(region_list):
        refined = [j for j, tau in enumerate(region_list)
                   if j != i and refines(rho, tau)]
        region_entries.append({
            "id": i,
            "complexity": rho.complexity,
            "cohesion": rho.cohesion,
            "visibility": rho.visibility,
            "refines": refined,
        })

    report = {
        "schema": SCHEMA_VERSION,
        "picture": {
            "width": wc.canvas.width,
            "height": wc.canvas.height,
            "n": wc.picture.n,
            "N": wc.N,
            "mode": mode,
        },
        "max_order": pool.max_order,
        "regions": region_entries,
        "tree_set": [{"side": _hex(l.side), "order": l.order}
                     for l in tree.lines],
        "splitting_stars": [sorted(_hex(s) for s in star)
                            for star in splitting_stars(tree)],
        "outlines": [{"region": i, "star": sorted(_hex(s) for s in outline(rho, tree))}
                     for i, rho in enumerate(region_list)],
        "duality": {
            "verdicts": verdicts,
            "max_supported_resolution": resolution,
        },
        "verified": {
            "tree_set": tree_verified,
            "duality": duality_ok,
        },
    }
    return report, tree_ok and duality_ok


def encode_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def decode_report(text: str) -> dict:
    report = json.loads(text)
    if report.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {report.get('schema')!r}")
    return report

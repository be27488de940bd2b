"""Structured invariant records shared by the CLI, batch mode and the cache."""

from __future__ import annotations

import time

from .braid import BraidWord, canonical_projection, format_braid
from .cache import Cache, cache_key
from .cover import h1_order
from .dynamics import entropy_details
from .errors import CorruptCache, NotFishnet
from .plat import fishnet_parse, is_highly_twisted, jm_distance, plat_components

ENTROPY_DIGITS = 5


def round_entropy(x: float) -> float:
    return round(float(x), ENTROPY_DIGITS)


def distance_record(w: BraidWord) -> dict:
    try:
        g = fishnet_parse(w)
    except NotFishnet:
        return {"fishnet": False, "highly_twisted": False, "distance": None}
    twisted = is_highly_twisted(g)
    d = jm_distance(g) if twisted and g.width >= 3 else None
    return {
        "fishnet": True,
        "width": g.width,
        "height": g.height,
        "highly_twisted": twisted,
        "distance": d,
    }


def invariants(w: BraidWord) -> dict:
    """Deterministic invariants of one braid word."""
    w = w.reduced()
    comps = plat_components(w)
    ent = entropy_details(w)
    return {
        "braid": format_braid(w),
        "strands": w.strands,
        "permutation": canonical_projection(w).as_list(),
        "components": comps.components,
        "bridges": list(comps.bridges_per_component),
        "entropy": round_entropy(ent.value),
        "entropy_converged": ent.converged,
        "h1_order": h1_order(w),
        "distance": distance_record(w)["distance"],
    }


def cached_invariants(w: BraidWord, cache: Cache | None) -> dict:
    """Invariants via the cache; a corrupt entry is recomputed and overwritten."""
    if cache is None:
        return invariants(w)
    key = cache_key(w)
    try:
        hit = cache.get(key)
    except CorruptCache:
        hit = None
    if hit is not None:
        return hit["invariants"]
    inv = invariants(w)
    cache.put(key, {"key": key, "invariants": inv, "created": time.time()})
    return inv

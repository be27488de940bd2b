"""Families of prime hyperbolic knots from powers of a plat braid.

For a pseudo-Anosov braid the plat closures of its 1-component powers have
bridge distance growing linearly in the power. Distances are exact only for
highly twisted plats; otherwise an entry records that the distance is
tracked by a lower bound whose threshold is not computed, and no
hyperbolicity is claimed for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .braid import BraidWord, canonical_projection, format_braid, permutation_order
from .diagram import build_diagram
from .dynamics import DEFAULT_MAX_ITER, DEFAULT_TOL, Verdict, entropy, nt_classify
from .errors import (
    InsufficientData,
    NotAKnot,
    NotFishnet,
    NotPseudoAnosov,
    TooFewStrands,
)
from .plat import fishnet_parse, is_highly_twisted, is_knot, jm_distance, knot_powers, plat_components

ENTROPY_CHECK_TOL = 1e-2
SPOT_CHECKS = 3


@dataclass(frozen=True)
class Exact:
    value: int

    def as_dict(self) -> dict:
        return {"kind": "Exact", "value": self.value}


@dataclass(frozen=True)
class LowerBoundTrack:
    note: str = (
        "distance grows at least linearly in the power and bounds the bridge "
        "distance of the cover splitting from below; the threshold is not computed"
    )

    def as_dict(self) -> dict:
        return {"kind": "LowerBoundTrack", "value": None}


Distance = Union[Exact, LowerBoundTrack]


def genus_lower_bound(d: int) -> int:
    """Seifert genus is at least ceil((d - 1) / 2) for bridge distance d."""
    if d < 0:
        raise ValueError("distance must be nonnegative")
    return max(0, math.ceil((d - 1) / 2))


@dataclass(frozen=True)
class FamilyEntry:
    power: int
    word: BraidWord
    components: int
    entropy: float
    entropy_recomputed: bool
    distance: Distance
    prime: bool
    hyperbolic: bool
    rationale: tuple[str, ...]
    genus_lower_bound: Optional[int]

    def as_dict(self) -> dict:
        return {
            "power": self.power,
            "components": self.components,
            "entropy": round(self.entropy, 5),
            "entropy_recomputed": self.entropy_recomputed,
            "distance": self.distance.as_dict(),
            "prime": self.prime,
            "hyperbolic": self.hyperbolic,
            "genus_lower_bound": self.genus_lower_bound,
            "rationale": list(self.rationale),
        }


@dataclass(frozen=True)
class FamilyReport:
    braid: BraidWord
    verdict: Verdict
    k: int
    assume_generic: bool
    entries: tuple[FamilyEntry, ...]
    warnings: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "braid": format_braid(self.braid),
            "strands": self.braid.strands,
            "verdict": self.verdict.value,
            "k": self.k,
            "assume_generic": self.assume_generic,
            "entries": [e.as_dict() for e in self.entries],
            "warnings": list(self.warnings),
        }


def _highly_twisted(w: BraidWord) -> bool:
    try:
        g = fishnet_parse(w)
    except NotFishnet:
        return False
    return g.width >= 3 and is_highly_twisted(g)


def _classify_distance(word: BraidWord) -> tuple[Distance, list[str]]:
    if _highly_twisted(word):
        d = jm_distance(fishnet_parse(word))
        return Exact(d), [f"highly twisted plat: exact distance {d}"]
    return LowerBoundTrack(), ["not highly twisted: distance only tracked from below"]


def _flags(distance: Distance) -> tuple[bool, bool, list[str]]:
    if not isinstance(distance, Exact):
        return False, False, ["no flags without an exact distance"]
    d = distance.value
    notes = []
    prime = d >= 2
    hyperbolic = d >= 3
    notes.append("prime: distance >= 2" if prime else "primeness not certified (distance < 2)")
    notes.append(
        "hyperbolic: distance >= 3" if hyperbolic else "hyperbolicity not certified (distance < 3)"
    )
    return prime, hyperbolic, notes


def generate_family(
    w: BraidWord,
    max_power: int,
    assume_generic: bool = False,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> FamilyReport:
    """Knot powers of ``w`` up to ``max_power`` with their invariants."""
    if w.strands < 6:
        raise TooFewStrands(
            f"B_{w.strands} is excluded: on 4 strands the powers of the pseudo-Anosov "
            "braid s2 s1^-1 s2^2 s3 all close up to the figure-eight knot, "
            "so at least 6 strands are needed"
        )
    if not is_knot(w):
        raise NotAKnot("the plat closure of the input braid has more than one component")
    report = nt_classify(w, tol, max_iter)
    if report.verdict is Verdict.PERIODIC:
        raise NotPseudoAnosov("the braid is periodic, so distances of its powers stay bounded")
    warnings = []
    if report.verdict is Verdict.UNDETERMINED:
        warnings.append("Nielsen-Thurston type undetermined; entropy did not certify growth")
    k = permutation_order(canonical_projection(w))
    if _highly_twisted(w) and not assume_generic:
        assume_generic = True
        warnings.append("genericity assumed automatically for a highly twisted plat")
    elif not assume_generic:
        warnings.append("genericity of the pseudo-Anosov map is not certified")
    else:
        warnings.append("genericity taken as given by the caller")

    powers = knot_powers(w, max_power)
    base = report.entropy_estimate
    recomputed: dict[int, float] = {}
    for m in powers[:SPOT_CHECKS]:
        recomputed[m] = entropy(w ** m, tol, max_iter)
    if any(abs(v - m * base) > ENTROPY_CHECK_TOL for m, v in recomputed.items()):
        warnings.append("entropy shortcut failed its spot check; all powers recomputed")
        for m in powers:
            if m not in recomputed:
                recomputed[m] = entropy(w ** m, tol, max_iter)

    entries = []
    for m in powers:
        word = w ** m
        comps = plat_components(word).components
        if comps != 1:
            raise AssertionError(f"power {m} was listed as a knot but has {comps} components")
        distance, notes = _classify_distance(word)
        prime, hyperbolic, flag_notes = _flags(distance)
        genus = genus_lower_bound(distance.value) if isinstance(distance, Exact) else None
        entries.append(
            FamilyEntry(
                power=m,
                word=word,
                components=comps,
                entropy=recomputed.get(m, m * base),
                entropy_recomputed=m in recomputed,
                distance=distance,
                prime=prime,
                hyperbolic=hyperbolic,
                rationale=tuple(notes + flag_notes),
                genus_lower_bound=genus,
            )
        )
    return FamilyReport(w, report.verdict, k, assume_generic, tuple(entries), tuple(warnings))


class Witness(NamedTuple):
    m1: int
    m2: int
    reason: str
    separated: bool


def distinctness_witnesses(report: FamilyReport) -> list[Witness]:
    """Pairs of entries told apart by genus bounds.

    For exact distances d1 < d2 the knot of power m2 has genus at least
    genus_lower_bound(d2); if that exceeds the Seifert-surface genus of the
    power-m1 diagram, the two knots differ.
    """
    exact = [e for e in report.entries if isinstance(e.distance, Exact)]
    if len(exact) < 2:
        raise InsufficientData("need at least two entries with exact distance")
    upper = {e.power: build_diagram(e.word).seifert_genus_bound() for e in exact}
    out = []
    for i, e1 in enumerate(exact):
        for e2 in exact[i + 1 :]:
            lo, hi = sorted((e1, e2), key=lambda e: e.distance.value)
            if lo.distance.value == hi.distance.value:
                continue
            g_lo = hi.genus_lower_bound
            g_up = upper[lo.power]
            if g_lo > g_up:
                reason = f"genus({hi.power}) >= {g_lo} > {g_up} >= genus({lo.power})"
                out.append(Witness(e1.power, e2.power, reason, True))
            else:
                out.append(Witness(e1.power, e2.power, "not separable at desk scale", False))
    return out

"""Plat-closure combinatorics.

The plat closure of a braid on 2n strands caps strand pairs (2i-1, 2i) at
the top and at the bottom. Its components are read off a 2-regular graph
built from the braid permutation, so component counts of powers only need
permutation powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .braid import BraidWord, Permutation, canonical_projection
from .errors import NotFishnet, NotHighlyTwisted, WidthTooSmall


@dataclass(frozen=True)
class PlatGraph:
    vertices: int
    top_edges: tuple[tuple[int, int], ...]
    bottom_edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return sum(e.count(v) for e in self.top_edges + self.bottom_edges)

    def cycles(self) -> list[list[int]]:
        """Vertex cycles, each starting at its smallest vertex, ordered by it."""
        top = {}
        bottom = {}
        for u, v in self.top_edges:
            top[u], top[v] = v, u
        for u, v in self.bottom_edges:
            bottom[u], bottom[v] = v, u
        seen: set[int] = set()
        out = []
        for start in range(1, self.vertices + 1):
            if start in seen:
                continue
            cyc = []
            v, use_top = start, True
            while True:
                cyc.append(v)
                seen.add(v)
                v = top[v] if use_top else bottom[v]
                use_top = not use_top
                if v == start and use_top:
                    break
            out.append(cyc)
        return out


@dataclass(frozen=True)
class PlatComponentSummary:
    components: int
    bridges_per_component: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"components": self.components, "bridges": list(self.bridges_per_component)}


def plat_graph(p: Permutation) -> PlatGraph:
    k = len(p)
    if k % 2:
        raise ValueError(f"plat graphs need an even number of vertices, got {k}")
    top = tuple((2 * i - 1, 2 * i) for i in range(1, k // 2 + 1))
    bottom = tuple((p(2 * i - 1), p(2 * i)) for i in range(1, k // 2 + 1))
    return PlatGraph(k, top, bottom)


def component_summary(g: PlatGraph) -> PlatComponentSummary:
    # every cycle alternates top/bottom edges, so its top-edge count is half its length
    cycles = g.cycles()
    return PlatComponentSummary(len(cycles), tuple(len(c) // 2 for c in cycles))


def plat_components(w: BraidWord) -> PlatComponentSummary:
    return component_summary(plat_graph(canonical_projection(w)))


def is_knot(w: BraidWord) -> bool:
    return plat_components(w).components == 1


def knot_powers(w: BraidWord, max_power: int) -> list[int]:
    """Powers 1..max_power whose plat closure has one component."""
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    p = canonical_projection(w)
    out = []
    q = Permutation.identity(len(p))
    for m in range(1, max_power + 1):
        q = q * p
        if component_summary(plat_graph(q)).components == 1:
            out.append(m)
    return out


@dataclass(frozen=True)
class TwistRow:
    """One row of twist boxes; ``boxes`` maps generator index to half twists."""

    parity: int  # 0: boxes at s2, s4, ...; 1: boxes at s1, s3, ...
    boxes: dict[int, int] = field(default_factory=dict)

    def slots(self, width: int) -> list[int]:
        start = 2 if self.parity == 0 else 1
        return list(range(start, 2 * width, 2))


@dataclass(frozen=True)
class TwistGrid:
    width: int
    rows: tuple[TwistRow, ...]

    @property
    def height(self) -> int:
        """Plat height: a fishnet of height h carries h - 1 rows of boxes."""
        return len(self.rows) + 1

    def matrix(self) -> list[list[int | None]]:
        """Rows as lists over their slot positions; missing boxes are None."""
        return [[r.boxes.get(j) for j in r.slots(self.width)] for r in self.rows]


def fishnet_parse(w: BraidWord) -> TwistGrid:
    """Group letters into alternating-parity rows of twist boxes.

    Letters are read left to right and collected into maximal runs of
    generators of one parity; within a run the generators commute, so each
    run is a product of disjoint boxes sigma_j^a.
    """
    if w.strands % 2:
        raise NotFishnet(f"fishnet plats need an even strand count, got {w.strands}")
    rows: list[TwistRow] = []
    for x in w.letters:
        j = abs(x)
        parity = j % 2
        if not rows or rows[-1].parity != parity:
            rows.append(TwistRow(parity, {}))
        boxes = rows[-1].boxes
        boxes[j] = boxes.get(j, 0) + (1 if x > 0 else -1)
    width = w.strands // 2
    for r in rows:
        bad = set(r.boxes) - set(r.slots(width))
        if bad:
            raise NotFishnet(f"boxes {sorted(bad)} do not fit a width-{width} row")
    return TwistGrid(width, tuple(rows))


def is_highly_twisted(g: TwistGrid) -> bool:
    if not g.rows:
        return False
    for a, b in zip(g.rows, g.rows[1:]):
        if a.parity == b.parity:
            return False
    for r in g.rows:
        slots = r.slots(g.width)
        if not slots:
            return False
        for j in slots:
            if abs(r.boxes.get(j, 0)) < 3:
                return False
    return True


def jm_distance(g: TwistGrid) -> int:
    """Exact bridge distance ceil(h / (2(m - 2))) of a highly twisted plat.

    ``h`` is the plat height (rows + 1) and ``m`` the width.
    """
    if g.width < 3:
        raise WidthTooSmall(f"width {g.width} < 3: the distance formula needs m >= 3")
    if not is_highly_twisted(g):
        raise NotHighlyTwisted("every twist box needs at least 3 half twists")
    return math.ceil(g.height / (2 * (g.width - 2)))

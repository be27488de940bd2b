"""Plat diagrams as data: PD and Gauss codes, Seifert circles, SVG.

Strand positions run 1..k from left to right and letters are drawn top to
bottom. sigma_i crosses positions i and i+1; for a positive letter the strand
running from top-left to bottom-right passes over. Bridges cap positions
(2j-1, 2j) above the first letter and below the last.

Edge labels follow a traversal that starts at the leftmost top bridge and
heads down position 1; further components start at the leftmost unvisited
bridge. A PD entry lists the four edge labels of a crossing counterclockwise,
starting with the incoming under-edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import intlinalg as la
from .braid import BraidWord
from .errors import UnsupportedFormat

TL, TR, BL, BR = "TL", "TR", "BL", "BR"
_CCW = (TL, BL, BR, TR)
_THROUGH = {TL: BR, BR: TL, TR: BL, BL: TR}


@dataclass(frozen=True)
class Crossing:
    index: int  # 1-based, braid order
    position: int  # generator index i
    sign: int
    ports: dict  # port name -> edge label
    under_in: str
    over_in: str

    @property
    def over_ports(self) -> frozenset:
        # positive letters carry the TL-BR strand over
        return frozenset((TL, BR) if self.sign > 0 else (TR, BL))


@dataclass(frozen=True)
class PlatDiagram:
    strands: int
    crossings: tuple[Crossing, ...]
    top_bridges: tuple[tuple[int, int], ...]
    bottom_bridges: tuple[tuple[int, int], ...]
    pd: tuple[tuple[int, int, int, int], ...]
    gauss: tuple[tuple[int, ...], ...]
    seifert_circles: int
    components: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def seifert_genus_bound(self) -> int:
        """Genus of the Seifert-algorithm surface, (c - s - mu + 2) / 2."""
        return (self.crossing_count - self.seifert_circles - self.components + 2) // 2


def _wires(w: BraidWord):
    """Wire links between nodes; a node is ("top", p), ("bot", p) or (c, port)."""
    k = w.strands
    last = {p: ("top", p) for p in range(1, k + 1)}
    wire = {}

    def link(a, b):
        wire[a] = b
        wire[b] = a

    for c, x in enumerate(w.letters):
        i = abs(x)
        link(last[i], (c, TL))
        link(last[i + 1], (c, TR))
        last[i], last[i + 1] = (c, BL), (c, BR)
    for p in range(1, k + 1):
        link(last[p], ("bot", p))
    return wire


def _cap(node):
    side, p = node
    return (side, p + 1 if p % 2 else p - 1)


def build_diagram(w: BraidWord) -> PlatDiagram:
    """Diagram of the plat closure of the freely reduced word."""
    w = w.reduced()
    if w.strands % 2:
        raise ValueError("plat diagrams need an even strand count")
    wire = _wires(w)
    n_cross = len(w.letters)
    ports = [dict() for _ in range(n_cross)]
    under_in: dict[int, str] = {}
    over_in: dict[int, str] = {}
    seen_top: set[int] = set()
    gauss = []
    label = 0
    components = 0
    for start_p in range(1, w.strands + 1, 2):
        if start_p in seen_top:
            continue
        components += 1
        start = ("top", start_p)
        passes = []  # (crossing, entry port, exit port)
        node = start
        while True:
            if node[0] == "top":
                seen_top.add(node[1])
                seen_top.add(_cap(node)[1])
            nxt = wire[node]
            if nxt[0] in ("top", "bot"):
                node = _cap(nxt)
            else:
                c, port = nxt
                out = _THROUGH[port]
                passes.append((c, port, out))
                node = (c, out)
            if node == start:
                break
        base = label + 1
        count = len(passes)
        code = []
        for t, (c, inp, out) in enumerate(passes):
            ports[c][inp] = base + t
            ports[c][out] = base + (t + 1) % count
            x = _sign_of(w.letters[c])
            if inp in ((TL, BR) if x > 0 else (TR, BL)):
                over_in[c] = inp
                code.append(c + 1)
            else:
                under_in[c] = inp
                code.append(-(c + 1))
        label += count
        gauss.append(tuple(code))
    crossings = tuple(
        Crossing(c + 1, abs(x), _sign_of(x), dict(ports[c]), under_in[c], over_in[c])
        for c, x in enumerate(w.letters)
    )
    pd = tuple(_pd_entry(cr) for cr in crossings)
    bridges = tuple((2 * j - 1, 2 * j) for j in range(1, w.strands // 2 + 1))
    return PlatDiagram(
        strands=w.strands,
        crossings=crossings,
        top_bridges=bridges,
        bottom_bridges=bridges,
        pd=pd,
        gauss=tuple(gauss),
        seifert_circles=_seifert_circles(crossings, gauss),
        components=components,
    )


def _sign_of(x: int) -> int:
    return 1 if x > 0 else -1


def _pd_entry(cr: Crossing) -> tuple[int, int, int, int]:
    start = _CCW.index(cr.under_in)
    return tuple(cr.ports[_CCW[(start + j) % 4]] for j in range(4))


def _seifert_circles(crossings, gauss) -> int:
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for cr in crossings:
        for lab in cr.ports.values():
            find(lab)
        # oriented smoothing: each incoming edge joins the other strand's exit
        u_out = cr.ports[_THROUGH[cr.under_in]]
        o_out = cr.ports[_THROUGH[cr.over_in]]
        union(cr.ports[cr.under_in], o_out)
        union(cr.ports[cr.over_in], u_out)
    circles = len({find(x) for x in parent})
    return circles + sum(1 for g in gauss if not g)


def pd_code(w: BraidWord) -> list[list[int]]:
    return [list(x) for x in build_diagram(w).pd]


def gauss_code(w: BraidWord) -> list[list[int]]:
    return [list(x) for x in build_diagram(w).gauss]


def pd_is_valid(pd) -> bool:
    """Every edge label occurs exactly twice."""
    counts: dict[int, int] = {}
    for entry in pd:
        for lab in entry:
            counts[lab] = counts.get(lab, 0) + 1
    return all(v == 2 for v in counts.values())


def _faces(pd):
    """Faces as lists of corners (crossing, j); corner j sits between slots j and j+1."""
    ends: dict[int, list] = {}
    for c, entry in enumerate(pd):
        for j, lab in enumerate(entry):
            ends.setdefault(lab, []).append((c, j))

    def other(c, j):
        a, b = ends[pd[c][j]]
        if a == (c, j):
            return b
        return a

    face_of: dict[tuple[int, int], int] = {}
    faces = []
    for c in range(len(pd)):
        for j in range(4):
            if (c, j) in face_of:
                continue
            fid = len(faces)
            corners = []
            cur = (c, j)
            while cur not in face_of:
                face_of[cur] = fid
                corners.append(cur)
                cc, k = cur
                cur = other(cc, (k + 1) % 4)
            faces.append(corners)
    return faces, face_of


def goeritz_determinant(pd) -> int:
    """|det| of a reduced Goeritz matrix built from the PD faces.

    Valid for connected diagrams; an empty PD (crossingless unknot) gives 1.
    """
    if not pd:
        return 1
    faces, face_of = _faces(pd)
    colour = {0: 0}
    queue = [0]
    while queue:
        f = queue.pop()
        for c, k in faces[f]:
            # neighbouring corners at a crossing lie in opposite colours
            for nb in ((c, (k + 1) % 4), (c, (k - 1) % 4)):
                g = face_of[nb]
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    queue.append(g)
    white = sorted(f for f, col in colour.items() if col == 0)
    index = {f: i for i, f in enumerate(white)}
    g = [[0] * len(white) for _ in white]
    for c in range(len(pd)):
        a, b = face_of[(c, 0)], face_of[(c, 2)]
        if colour[a] == 0:
            eta = 1
        else:
            a, b = face_of[(c, 1)], face_of[(c, 3)]
            eta = -1
        if a == b:
            continue
        i, j = index[a], index[b]
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    reduced = [row[1:] for row in g[1:]]
    return abs(la.det(reduced))


_CELL = 40
_ROW = 40
_PAD = 30


def _svg(w: BraidWord) -> str:
    w = w.reduced()
    k = w.strands
    rows = max(len(w.letters), 1)
    width = 2 * _PAD + (k - 1) * _CELL
    height = 2 * _PAD + rows * _ROW + _CELL
    y0 = _PAD + _CELL / 2
    y1 = y0 + rows * _ROW

    def x(p):
        return _PAD + (p - 1) * _CELL

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">',
    ]
    r = _CELL / 2
    for p in range(1, k + 1, 2):
        parts.append(f'<path d="M {x(p)} {y0} A {r} {r} 0 0 1 {x(p + 1)} {y0}"/>')
        parts.append(f'<path d="M {x(p)} {y1} A {r} {r} 0 0 0 {x(p + 1)} {y1}"/>')
    if not w.letters:
        for p in range(1, k + 1):
            parts.append(f'<line x1="{x(p)}" y1="{y0}" x2="{x(p)}" y2="{y1}"/>')
    gap = 0.18
    for t, lt in enumerate(w.letters):
        top, bot = y0 + t * _ROW, y0 + (t + 1) * _ROW
        i = abs(lt)
        for p in range(1, k + 1):
            if p not in (i, i + 1):
                parts.append(f'<line x1="{x(p)}" y1="{top}" x2="{x(p)}" y2="{bot}"/>')
        xa, xb = x(i), x(i + 1)
        # over strand drawn whole, under strand split around the centre
        if lt > 0:
            over, under = (xa, xb), (xb, xa)
        else:
            over, under = (xb, xa), (xa, xb)
        parts.append(f'<line x1="{over[0]}" y1="{top}" x2="{over[1]}" y2="{bot}"/>')
        ux0, ux1 = under
        for s0, s1 in ((0.0, 0.5 - gap), (0.5 + gap, 1.0)):
            parts.append(
                f'<line x1="{ux0 + (ux1 - ux0) * s0:g}" y1="{top + _ROW * s0:g}" '
                f'x2="{ux0 + (ux1 - ux0) * s1:g}" y2="{top + _ROW * s1:g}"/>'
            )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


FORMATS = ("pd", "gauss", "svg")


def export_diagram(w: BraidWord, fmt: str) -> bytes:
    """Serialise the plat diagram as ``pd`` or ``gauss`` JSON, or ``svg``."""
    if fmt == "pd":
        return (json.dumps(pd_code(w)) + "\n").encode()
    if fmt == "gauss":
        return (json.dumps(gauss_code(w)) + "\n").encode()
    if fmt == "svg":
        return _svg(w).encode()
    raise UnsupportedFormat(f"unknown diagram format {fmt!r}; choose from {', '.join(FORMATS)}")

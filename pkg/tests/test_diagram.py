import json
import random

import pytest

from platknots.braid import BraidWord, parse_braid
from platknots.cover import h1_order
from platknots.diagram import (
    build_diagram,
    export_diagram,
    gauss_code,
    goeritz_determinant,
    pd_code,
    pd_is_valid,
    _faces,
)
from platknots.errors import UnsupportedFormat
from platknots.plat import is_knot, plat_components

from oracles import all_words


def random_word(rng, strands, max_len=8):
    gens = [g for i in range(1, strands) for g in (i, -i)]
    return BraidWord(strands, tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))


def test_pd_valid_on_random_words():
    rng = random.Random(2024)
    for _ in range(500):
        w = random_word(rng, rng.choice([4, 6, 8]))
        d = build_diagram(w)
        assert pd_is_valid(d.pd)
        assert d.crossing_count == len(w.reduced())
        assert d.components == plat_components(w).components
        labels = sorted({x for e in d.pd for x in e})
        assert labels == list(range(1, 2 * len(d.pd) + 1))


def test_face_count_of_connected_diagrams():
    rng = random.Random(8)
    for _ in range(200):
        w = random_word(rng, 6).reduced()
        if w.letters and is_knot(w):
            faces, _ = _faces(build_diagram(w).pd)
            assert len(faces) == len(w) + 2


def test_trefoil_pd_determinant():
    pd = pd_code(parse_braid("s2^3", 4))
    assert len(pd) == 3
    assert goeritz_determinant(pd) == 3


def test_single_crossing_gauss():
    assert gauss_code(BraidWord(4, (1,))) == [[1, -1], []]
    assert gauss_code(BraidWord(4, (2,))) == [[-1, 1]]


def test_gauss_entries_cover_each_crossing_twice():
    d = build_diagram(parse_braid("s2^2 s4 s1 s3 s5 s2", 6))
    flat = [x for comp in d.gauss for x in comp]
    assert sorted(flat) == sorted([c for c in range(1, 8)] + [-c for c in range(1, 8)])


def test_goeritz_matches_h1_order():
    for letters in all_words(4, 5):
        w = BraidWord(4, letters)
        if is_knot(w):
            assert goeritz_determinant(pd_code(w)) == h1_order(w)


def test_figure_eight_determinant():
    assert goeritz_determinant(pd_code(parse_braid("s2 s1^-1 s2^2 s3", 4))) == 5


def test_seifert_bound_of_trefoil_and_unknot():
    assert build_diagram(parse_braid("s2^3", 4)).seifert_genus_bound() == 1
    assert build_diagram(BraidWord(4, (2,))).seifert_genus_bound() == 0


def test_svg_of_trivial_plat():
    svg = export_diagram(BraidWord(6), "svg").decode()
    assert svg.count("<path") == 6 and svg.count("<line") == 6


def test_exports_are_deterministic():
    w = parse_braid("s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3", 6)
    for fmt in ("pd", "gauss", "svg"):
        assert export_diagram(w, fmt) == export_diagram(w, fmt)
    assert json.loads(export_diagram(w, "pd")) == pd_code(w)


def test_unsupported_format():
    with pytest.raises(UnsupportedFormat):
        export_diagram(BraidWord(4), "png")

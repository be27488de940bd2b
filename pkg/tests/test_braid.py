import pytest
from hypothesis import given, strategies as st

from platknots.braid import (
    BraidWord,
    Permutation,
    canonical_projection,
    format_braid,
    free_reduce,
    full_twist,
    garside_delta,
    parse_braid,
    parse_numeric,
    format_numeric,
    permutation_order,
    power,
)
from platknots.errors import BraidSyntaxError, IndexOutOfRange, OddStrands, StrandMismatch

from oracles import trace_strands


def words(strands=6, max_size=12):
    gens = [g for i in range(1, strands) for g in (i, -i)]
    return st.lists(st.sampled_from(gens), max_size=max_size).map(
        lambda xs: BraidWord(strands, tuple(xs))
    )


def test_parse_exponents_and_runs():
    w = parse_braid("s2^2 s1^-1 s3 s2^-3", 4)
    assert w.letters == (2, 2, -1, 3, -2, -2, -2)
    assert format_braid(w) == "s2^2 s1^-1 s3 s2^-3"


@pytest.mark.parametrize(
    "text,strands,err",
    [("s2^x", 4, BraidSyntaxError), ("t1", 4, BraidSyntaxError), ("s4", 4, IndexOutOfRange),
     ("s0", 4, IndexOutOfRange), ("s1", 5, OddStrands)],
)
def test_parse_errors(text, strands, err):
    with pytest.raises(err):
        parse_braid(text, strands)


def test_odd_strands_allowed_on_request():
    assert parse_braid("s1 s2^-1", 3, allow_odd=True).letters == (1, -2)


@given(words())
def test_format_parse_roundtrip(w):
    assert parse_braid(format_braid(w), w.strands).letters == w.letters


@given(words())
def test_numeric_roundtrip(w):
    assert parse_numeric(format_numeric(w)) == w


def test_numeric_errors():
    with pytest.raises(BraidSyntaxError):
        parse_numeric("6 1 2")
    with pytest.raises(OddStrands):
        parse_numeric("5: 1 2")


@given(words())
def test_free_reduce_idempotent_and_cancels_inverse(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert free_reduce(w * ~w).letters == ()


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        BraidWord(4, (1,)) * BraidWord(6, (1,))


def test_delta_squared_exponent_sum():
    assert full_twist(6).exponent_sum() == 30
    assert len(garside_delta(4)) == 6


@given(words(), words())
def test_projection_homomorphism(a, b):
    assert canonical_projection(a * b) == canonical_projection(a) * canonical_projection(b)


@given(words(), st.integers(0, 10))
def test_projection_of_powers(w, m):
    assert canonical_projection(power(w, m)) == canonical_projection(w) ** m


@given(words())
def test_projection_matches_mirrored_strand_trace(w):
    k = w.strands
    traced = trace_strands(k, w.letters)
    p = canonical_projection(w)
    # labels count punctures from the right
    for top, bottom in traced.items():
        assert p(k + 1 - top) == k + 1 - bottom


def test_projection_ignores_signs():
    assert canonical_projection(parse_braid("s1 s2^-1", 4)) == canonical_projection(
        parse_braid("s1^-1 s2", 4)
    )


@pytest.mark.parametrize(
    "images,order", [((3, 1, 4, 2), 4), ((2, 5, 1, 3, 6, 4), 6), ((3, 5, 1, 6, 2, 4), 2), ((1, 2, 3), 1)]
)
def test_orders(images, order):
    p = Permutation(images)
    assert permutation_order(p) == order
    assert (p ** order).is_identity()
    assert all(not (p ** j).is_identity() for j in range(1, order))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))

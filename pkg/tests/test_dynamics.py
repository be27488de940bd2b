import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from platknots.braid import BraidWord, full_twist, garside_delta, parse_braid
from platknots.dynamics import (
    LamVector,
    Verdict,
    act,
    braid_equal,
    canonical_seed,
    entropy,
    entropy_details,
    is_periodic,
    is_trivial,
    nt_classify,
)
from platknots.errors import DimensionMismatch, NoConvergence, ZeroSeed


def vectors(k):
    return st.lists(st.integers(-40, 40), min_size=2 * (k - 2), max_size=2 * (k - 2)).map(
        lambda xs: LamVector(k, tuple(xs))
    )


@pytest.mark.parametrize("k", [4, 5, 6])
@given(data=st.data())
def test_braid_relations(k, data):
    v = data.draw(vectors(k))
    for i in range(1, k - 1):
        lhs = act(BraidWord(k, (i, i + 1, i)), v)
        rhs = act(BraidWord(k, (i + 1, i, i + 1)), v)
        assert lhs == rhs
    for i in range(1, k):
        for j in range(i + 2, k):
            assert act(BraidWord(k, (i, j)), v) == act(BraidWord(k, (j, i)), v)
        assert act(BraidWord(k, (i, -i)), v) == v


@given(vectors(6))
def test_action_is_homogeneous(v):
    w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6)
    doubled = LamVector(6, tuple(2 * x for x in v.coords))
    assert act(w, doubled).coords == tuple(2 * x for x in act(w, v).coords)


def test_full_twist_is_central_and_nontrivial():
    d2 = full_twist(5)
    assert not is_trivial(d2)
    assert is_trivial(d2 * ~d2)
    assert all(act(d2, v) == v for v in [canonical_seed(5)])


def test_word_problem():
    a = BraidWord(4, (1, 2, 1))
    b = BraidWord(4, (2, 1, 2))
    assert braid_equal(a, b)
    assert not braid_equal(BraidWord(4, (1, 2)), BraidWord(4, (2, 1)))


def test_periodic_examples():
    assert is_periodic(garside_delta(6))
    assert is_periodic(BraidWord(4, (1, 2, 3)))
    assert not is_periodic(parse_braid("s2^2 s4 s1 s3 s5 s2", 6))


def test_dimension_and_seed_errors():
    with pytest.raises(DimensionMismatch):
        LamVector(5, (0, 1))
    with pytest.raises(DimensionMismatch):
        act(BraidWord(4, (1,)), canonical_seed(5))
    with pytest.raises(ZeroSeed):
        entropy_details(BraidWord(4, (1, -2)), seeds=[LamVector(4, (0, 0, 0, 0))])


def test_known_entropies():
    assert abs(entropy(BraidWord(3, (1, -2))) - math.log((3 + math.sqrt(5)) / 2)) < 1e-4
    assert entropy(full_twist(4)) == 0.0
    assert entropy(BraidWord(4)) == 0.0


def test_polynomial_growth_reports_zero():
    # s2^3 in B_4 is reducible: iterates grow linearly, not exponentially
    assert entropy(BraidWord(4, (2, 2, 2))) < 1e-4


def test_no_convergence_carries_estimate():
    with pytest.raises(NoConvergence) as info:
        entropy(parse_braid("s2^2 s4 s1 s3 s5 s2", 6), tol=1e-12, max_iter=20)
    assert info.value.estimate is not None and info.value.iterations == 20


def test_exact_and_float_modes_agree():
    rng = random.Random(7)
    for _ in range(20):
        letters = tuple(rng.choice([1, -1, 2, -2, 3, -3, 4, -4, 5, -5]) for _ in range(8))
        w = BraidWord(6, letters)
        a = entropy_details(w, mode="exact", max_iter=400)
        b = entropy_details(w, mode="float", max_iter=400)
        if a.converged and b.converged:
            assert abs(a.value - b.value) < 1e-3


def test_classification():
    assert nt_classify(BraidWord(4, (1, 2, 3))).verdict is Verdict.PERIODIC
    assert nt_classify(BraidWord(3, (1, -2))).verdict is Verdict.PSEUDO_ANOSOV_LIKELY
    assert nt_classify(BraidWord(4, (1, 2))).verdict is Verdict.UNDETERMINED

from __future__ import annotations

import pytest

from vietacluster.cubic import CubicParams, NotASolution, cubic_residual, pairwise_coprime, vieta
from vietacluster.quartic import (
    NotAPerfectSquare,
    QuarticParams,
    exact_sqrt,
    from_cubic,
    quartic_children,
    quartic_jump,
    quartic_jump_first,
    quartic_jump_second,
    quartic_jump_third,
    quartic_residual,
    to_cubic,
)
from vietacluster.tree import EnumBound, FamilySpec, generate, max_number_gaps, triples

Q1 = QuarticParams(1)


def test_residual_examples():
    assert quartic_residual(Q1, (21, 11, 1)) == 0
    assert quartic_residual(Q1, (1, 1, 1)) == 0
    assert quartic_residual(QuarticParams(0), (2, 1, 1)) == 0


def test_jump_examples():
    assert quartic_jump_second(Q1, (3, 1, 1)) == (3, 4, 1)
    assert quartic_jump_third(Q1, (1, 2, 1)) == (1, 2, 5)
    assert quartic_jump_first(Q1, (1, 2, 5)) == (741, 2, 5)


def test_children_examples():
    assert [c for c, _ in quartic_children(Q1, (1, 1, 1))] == [(3, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert [c for c, _ in quartic_children(Q1, (21, 2, 1))] == [(21, 11, 1), (21, 2, 25)]
    assert [c for c, _ in quartic_children(Q1, (1, 5, 2))] == [(741, 5, 2), (1, 5, 13)]


def test_cubic_correspondence_examples():
    assert to_cubic(Q1, (3, 4, 1)) == (3, 16, 1)
    assert cubic_residual(CubicParams(2, 1, 2), (3, 16, 1)) == 0
    assert from_cubic(Q1, (21, 121, 1)) == (21, 11, 1)
    assert to_cubic(Q1, (1, 1, 1)) == (1, 1, 1)


def test_errors():
    with pytest.raises(NotASolution):
        to_cubic(Q1, (2, 2, 2))
    with pytest.raises(NotASolution):
        from_cubic(Q1, (2, 2, 2))
    with pytest.raises(NotAPerfectSquare):
        exact_sqrt(120)
    with pytest.raises(NotAPerfectSquare):
        exact_sqrt(-4)
    assert exact_sqrt(10**40) == 10**20


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_conjugation_and_round_trip(k):
    q = QuarticParams(k)
    for t in triples(generate(FamilySpec.quartic(k), EnumBound.depth(6))):
        assert from_cubic(q, to_cubic(q, t)) == t
        assert pairwise_coprime(t)
        for d in range(3):
            assert to_cubic(q, quartic_jump(q, t, d)) == vieta(q.cubic(), to_cubic(q, t), d)


def test_eleven_is_never_maximal():
    sols = triples(generate(FamilySpec.quartic(1), EnumBound.entry(1000)))
    assert any(11 in t for t in sols)
    assert 11 in max_number_gaps(FamilySpec.quartic(1), sols)

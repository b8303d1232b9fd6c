from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vietacluster.equations import Equation
from vietacluster.gcp import enumerate_a2
from vietacluster.symmetric import NotSymmetric, a2_variables, build_symmetric_equation, elementary

A2_CLEARED = {(2, 0): 1, (0, 2): 1, (1, 0): 2, (0, 1): 2, (2, 1): 1, (1, 2): 1, (0, 0): 1, (1, 1): -9}


def test_sum_gives_known_equation():
    assert build_symmetric_equation(elementary(1)).cleared_terms() == A2_CLEARED


def test_product_gives_same_equation():
    assert build_symmetric_equation(elementary(5)).cleared == build_symmetric_equation(elementary(1)).cleared


def test_constant_is_trivial():
    rel = build_symmetric_equation([((0, 0, 0, 0, 0), 1)])
    assert rel.is_trivial()
    assert rel.residual(Fraction(3, 7), 11) == 0
    assert str(rel) == "0"


def test_asymmetric_rejected():
    with pytest.raises(NotSymmetric):
        build_symmetric_equation([((1, 0, 0, 0, 0), 1)])
    with pytest.raises(NotSymmetric):
        build_symmetric_equation([((1, 0, 0, 0, 0), 1), ((0, 1, 0, 0, 0), 1), ((0, 0, 1, 0, 0), 1),
                                  ((0, 0, 0, 1, 0), 1), ((0, 0, 0, 0, 1), 2)])


def test_bad_input_shape():
    with pytest.raises(ValueError):
        build_symmetric_equation([((1, 0, 0), 1)])


def test_box_search_finds_five_pairs():
    assert build_symmetric_equation(elementary(1)).solutions_in_box(1000) == [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]


def test_stored_equation_agrees():
    eq = Equation.of("a2")
    rel = build_symmetric_equation(elementary(1))
    for x in range(1, 30):
        for y in range(1, 30):
            assert rel.residual(x, y) == eq.residual((x, y))


def test_generators_are_the_orbit_variables():
    seen = {v for cluster in enumerate_a2() for v in cluster}
    assert seen == set(a2_variables())


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.integers(1, 4))
def test_power_sums_vanish_on_clusters(degrees, scale):
    f = []
    for d in degrees:
        for i in range(5):
            f.append((tuple(d if j == i else 0 for j in range(5)), scale))
    rel = build_symmetric_equation(f)
    for cluster in enumerate_a2():
        x, y = (int(v.evaluate((1, 1))) for v in cluster)
        assert rel.residual(x, y) == 0

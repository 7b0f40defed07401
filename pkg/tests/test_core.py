import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import f_of, rational_functions
from ratcrit import (
    DuplicateLocationError,
    NonFiniteError,
    PreconditionError,
    RationalFunction,
    WeightedPoint,
    ZeroMultiplicityError,
    as_point,
    degree,
    make_rational_function,
    min_distance,
    multiplicity_at,
    rho,
    rho_continuity_bound,
)

SQ3 = math.sqrt(3)


def test_make_from_pairs():
    f = make_rational_function([(1, 1), (-1, 1)])
    assert f.locations == [1, -1]
    assert f.multiplicities == [1, 1]


def test_duplicate_location_rejected():
    with pytest.raises(DuplicateLocationError):
        make_rational_function([(0, 1), (0, 2)])


def test_empty_is_constant():
    f = make_rational_function([])
    assert len(f) == 0 and degree(f) == 0


def test_zero_multiplicity_rejected():
    with pytest.raises(ZeroMultiplicityError):
        WeightedPoint(0, 0)


def test_non_integer_multiplicity_rejected():
    with pytest.raises(ZeroMultiplicityError):
        WeightedPoint(0, 1.5)


def test_non_finite_location_rejected():
    with pytest.raises(NonFiniteError):
        WeightedPoint(complex(math.inf, 0), 1)


def test_as_point_accepts_pairs():
    assert as_point((1.5, -2)) == complex(1.5, -2)


def test_zeros_and_poles_split():
    f = f_of((0, 1), (1, -1))
    assert [p.location for p in f.zeros] == [0]
    assert [p.location for p in f.poles] == [1]


def test_times_and_power():
    g = f_of((0, 1))
    h = f_of((1, -1))
    assert g.times(h).multiplicities == [1, -1]
    assert h.power(3).multiplicities == [-3]
    with pytest.raises(DuplicateLocationError):
        g.times(g)


@pytest.mark.parametrize("z, expected", [(1, 1), (0.5, 0), (-1, 1)])
def test_multiplicity_at_polynomial(z, expected):
    assert multiplicity_at(f_of((1, 1), (-1, 1)), z) == expected


def test_multiplicity_at_pole():
    assert multiplicity_at(f_of((0, 1), (1, -1)), 1) == -1


@pytest.mark.parametrize(
    "pairs, expected",
    [([(0, 2), (1, 1), (-2, -3)], 6), ([(1, 1), (-1, 1)], 2), ([], 0)],
)
def test_degree(pairs, expected):
    assert degree(f_of(*pairs)) == expected


def test_min_distance_cubic():
    f = f_of((0, 1), (SQ3, 1), (-SQ3, 1))
    assert min_distance(f, 0) == pytest.approx(1.7320508, abs=1e-7)


def test_min_distance_singleton_is_infinite():
    assert min_distance(f_of((0, 4)), 0) == math.inf


def test_min_distance_off_locations():
    assert min_distance(f_of((1, 1), (-1, 1)), 0) == 1


def test_rho_examples():
    assert rho(f_of((1, 1), (-1, 1)), 1) == 0.5
    assert rho(f_of((0, 1), (1, 1), (3, 1)), 0) == pytest.approx(4 / 3, rel=1e-15)
    assert rho(f_of((0, 5)), 0) == 0


def test_continuity_bound_example():
    f = f_of((1, 1), (-1, 1))
    assert rho_continuity_bound(f, 0, 0.5) == pytest.approx(4.0, rel=1e-15)
    assert rho(f, 0.5) == pytest.approx(1 / 0.5 + 1 / 1.5, rel=1e-15)
    assert rho_continuity_bound(f, 0, 0) == 2.0


def test_continuity_bound_preconditions():
    f = f_of((1, 1), (-1, 1))
    with pytest.raises(PreconditionError):
        rho_continuity_bound(f, 1, 1.1)
    with pytest.raises(PreconditionError):
        rho_continuity_bound(f, 0, 1.0)


@given(rational_functions(min_points=2), st.complex_numbers(max_magnitude=3))
def test_inverse_distance_below_rho(f, z):
    if min_distance(f, z) == math.inf:
        return
    assert 1 / min_distance(f, z) <= rho(f, z) * (1 + 1e-12)


@given(
    rational_functions(),
    st.complex_numbers(max_magnitude=3),
    st.floats(0, 0.99),
    st.floats(0, 2 * math.pi),
)
def test_continuity_bound_dominates(f, z1, frac, angle):
    if multiplicity_at(f, z1) != 0:
        return
    d = min_distance(f, z1)
    if math.isinf(d):
        return
    z2 = z1 + frac * d * complex(math.cos(angle), math.sin(angle))
    assert rho(f, z2) <= rho_continuity_bound(f, z1, z2) * (1 + 1e-12)


@given(rational_functions(), st.complex_numbers(max_magnitude=3))
def test_multiplicity_zero_off_locations(f, z):
    assert (multiplicity_at(f, z) != 0) == (z in f.locations)
    assert degree(f) == sum(abs(m) for m in f.multiplicities)


@given(rational_functions(min_points=2), st.complex_numbers(max_magnitude=3), st.randoms())
def test_permutation_invariance(f, z, rnd):
    pts = list(f.points)
    rnd.shuffle(pts)
    g = RationalFunction(tuple(pts))
    assert min_distance(g, z) == min_distance(f, z)
    assert rho(g, z) == rho(f, z)  # fsum is order independent

import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from closed_forms import CLOSED_FORM_CASES
from conftest import f_of, rational_functions
from ratcrit import (
    NonConvergenceError,
    Polynomial,
    RationalFunction,
    ZeroPolynomialError,
    cluster_roots,
    critical_points,
    expected_critical_count,
    find_roots,
    log_derivative,
    poly_eval,
    poly_from_roots,
)


def match_multiset(found, expected, tol):
    """Each expected (root, mult) has a found root within tol with equal mult."""
    found = list(found)
    for r, m in expected:
        i = min(range(len(found)), key=lambda j: abs(found[j][0] - r))
        z, fm = found.pop(i)
        assert abs(z - r) <= tol, (z, r)
        assert fm == m, (z, fm, m)
    assert not found


def test_conjugate_pair():
    res = find_roots(Polynomial([1, 0, 1]))
    match_multiset(res.roots, [(1j, 1), (-1j, 1)], 1e-12)


def test_quadratic_against_formula():
    res = find_roots(Polynomial([3, -8, 3]))
    disc = math.sqrt(64 - 36)
    match_multiset(res.roots, [((8 - disc) / 6, 1), ((8 + disc) / 6, 1)], 1e-12)
    assert res.locations[0] == pytest.approx(0.4514162, abs=1e-7)
    assert res.locations[1] == pytest.approx(2.2152504, abs=1e-7)


def test_triple_root():
    res = find_roots(Polynomial([-1, 3, -3, 1]))
    match_multiset(res.roots, [(1, 3)], 1e-10)


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        find_roots(Polynomial([]))


def test_constant_has_no_roots():
    res = find_roots(Polynomial([4]))
    assert res.roots == [] and res.total_count == 0


def test_roots_at_origin_are_exact():
    res = find_roots(Polynomial([0, 0, -1, 1]))
    match_multiset(res.roots, [(0, 2), (1, 1)], 1e-14)


def test_non_convergence_carries_iterate():
    with pytest.raises(NonConvergenceError) as info:
        find_roots(poly_from_roots([(k, 1) for k in range(1, 21)]), tol=1e-300, max_iters=3)
    assert info.value.iterate is not None


@pytest.mark.parametrize("case", CLOSED_FORM_CASES, ids=lambda c: f"deg{sum(m for _, m in c)}")
def test_closed_form_regression(case):
    res = find_roots(poly_from_roots(case))
    match_multiset(res.roots, case, 1e-8)
    assert res.total_count == sum(m for _, m in case)


def test_residual_certificate():
    p = poly_from_roots(CLOSED_FORM_CASES[-1])
    res = find_roots(p)
    scale = np.max(np.abs(p.coefficients))
    for z, _ in res.roots:
        assert abs(poly_eval(p, z)) / (scale * max(1, abs(z)) ** p.degree) <= 1e-9


def test_cluster_examples():
    merged = cluster_roots([1.0000001, 0.9999999], 1e-5)
    assert len(merged) == 1 and merged[0][1] == 2
    assert merged[0][0] == pytest.approx(1.0, abs=1e-15)
    assert cluster_roots([0, 1], 1e-5) == [(0, 1), (1, 1)]
    assert cluster_roots([], 1e-5) == []


def test_cluster_is_single_linkage():
    # a chain links end to end even though the ends are 2 radii apart
    assert [m for _, m in cluster_roots([0, 0.9, 1.8], 1.0)] == [3]


def test_critical_points_examples():
    res = critical_points(f_of((1, 1), (-1, 1)))
    match_multiset(res.roots, [(0, 1)], 1e-14)
    assert res.deficiency_at_infinity == 0
    res = critical_points(f_of((0, 2), (1, 1)))
    match_multiset(res.roots, [(2 / 3, 1)], 1e-14)
    res = critical_points(f_of((0, 1), (1, -1)))
    assert res.roots == [] and res.deficiency_at_infinity == 1


@given(
    st.complex_numbers(max_magnitude=3, allow_nan=False),
    st.complex_numbers(max_magnitude=3, allow_nan=False),
    st.complex_numbers(min_magnitude=0.1, max_magnitude=3, allow_nan=False),
)
def test_quadratics_match_formula(b, c, a):
    disc = cmath.sqrt(b * b - 4 * a * c)
    r1, r2 = (-b + disc) / (2 * a), (-b - disc) / (2 * a)
    if abs(r1 - r2) < 1e-3:
        return
    res = find_roots(Polynomial([c, b, a]))
    match_multiset(res.roots, [(r1, 1), (r2, 1)], 1e-8 * max(1, abs(r1), abs(r2)))


@given(st.lists(st.complex_numbers(max_magnitude=2), min_size=1, max_size=8), st.integers(0, 2**32 - 1))
def test_perturbation_stability(roots, seed):
    if any(abs(a - b) < 1e-2 for i, a in enumerate(roots) for b in roots[i + 1:]):
        return
    p = poly_from_roots((r, 1) for r in roots)
    rng = np.random.default_rng(seed)
    noise = 1 + 1e-12 * (rng.uniform(-1, 1, len(p.coefficients)) + 1j * rng.uniform(-1, 1, len(p.coefficients)))
    base = find_roots(p)
    moved = find_roots(Polynomial(p.coefficients * noise))
    assert moved.total_count == base.total_count == len(roots)
    match_multiset(moved.roots, base.roots, 1e-6)


@given(st.lists(st.tuples(st.complex_numbers(max_magnitude=2), st.integers(1, 3)), min_size=1, max_size=5))
def test_count_conservation(pairs):
    p = poly_from_roots(pairs)
    res = find_roots(p)
    assert res.total_count == p.degree
    assert len(res.expanded()) == p.degree


@given(rational_functions(min_points=2))
def test_critical_count_plus_deficiency(f):
    res = critical_points(f)
    assert res.finite_count + res.deficiency_at_infinity == expected_critical_count(f)
    assert res.total_count == expected_critical_count(f)
    assert res.finite_count == log_derivative(f).numerator.degree


def _shifted(f, c, s=1.0):
    return RationalFunction(tuple((s * p.location + c, p.multiplicity) for p in f.points))


def _assert_equivariant(base, moved, c, s):
    assert moved.total_count == base.total_count
    pred = [(s * z + c, m) for z, m in base.roots]
    match_multiset(moved.roots, pred, 1e-9 * max(1, abs(c), s))


@given(rational_functions(min_points=2, poles=False), st.complex_numbers(max_magnitude=5))
def test_translation_equivariance(f, c):
    _assert_equivariant(critical_points(f), critical_points(_shifted(f, c)), c, 1.0)


@given(rational_functions(min_points=2, poles=False), st.floats(0.25, 4.0))
def test_scaling_equivariance(f, s):
    _assert_equivariant(critical_points(f), critical_points(_shifted(f, 0, s)), 0, s)

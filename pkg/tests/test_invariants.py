"""Exact invariants against naive oracles, the decomposition identity,
and the rectangular coefficient routes."""
from __future__ import annotations

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    det_laplace,
    hf_matchings,
    perm_sum,
    pf_matchings,
    random_antisymmetric,
)
from primepoints.errors import InvalidArgumentError, ResourceLimitError
from primepoints.invariants import (
    VarietyFamily,
    VarietyPoint,
    b_coefficient,
    b_coefficient_by_determinants,
    big_p,
    coordinate_count,
    decompose,
    delta_eval,
    det,
    det_family,
    haf_family,
    hf,
    perm,
    perm_family,
    pf,
    pf_family,
    point_matrix,
    quad_family,
    quad_form,
    rect_family,
    upper_entries,
)
from primepoints.matrices import IntMatrix, matmul, omega, transpose, z_select


def _square(draw_entries, n):
    return st.lists(st.lists(draw_entries, min_size=n, max_size=n),
                    min_size=n, max_size=n)


def test_det_frozen():
    assert det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(IntMatrix.from_rows([[3, 79, 127], [3, 5, 7], [11, 13, 17]])) == 4
    assert det(IntMatrix(0, 0, ())) == 1


def test_perm_frozen():
    assert perm(IntMatrix.from_rows([[1, 2], [3, 4]])) == 10
    assert perm(IntMatrix.from_rows([[1, 1, 1]] * 3)) == 6


def test_pf_frozen():
    m = point_matrix(VarietyPoint(pf_family(2), (3, 3, 3, 5, 5, 5)))
    assert m.entry(1, 2) == 3 and m.entry(2, 1) == -3
    assert pf(m) == 15  # af - be + cd = 15 - 15 + 15


def test_hf_frozen():
    m = IntMatrix.from_rows([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
    assert hf(m) == 3  # three perfect matchings of K4


def test_pf_requires_antisymmetric_even():
    with pytest.raises(InvalidArgumentError):
        pf(IntMatrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(InvalidArgumentError):
        pf(IntMatrix.from_rows([[0]]))


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(
    lambda n: _square(st.integers(-30, 30), n)))
def test_det_matches_laplace(rows):
    assert det(IntMatrix.from_rows(rows)) == det_laplace(rows)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(
    lambda n: _square(st.integers(-20, 20), n)))
def test_perm_matches_permutation_sum(rows):
    assert perm(IntMatrix.from_rows(rows)) == perm_sum(rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pf_matches_matching_sum(seed):
    rng = Random(seed)
    n = rng.choice((2, 4, 6))
    rows = random_antisymmetric(rng, n, 30)
    assert pf(IntMatrix.from_rows(rows)) == pf_matchings(rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_hf_matches_matching_sum(seed):
    rng = Random(seed)
    n = rng.choice((2, 4, 6))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randrange(-30, 31)
    assert hf(IntMatrix.from_rows(rows)) == hf_matchings(rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cayley_pf_squared_is_det(seed):
    rng = Random(seed)
    n = rng.choice((2, 4, 6, 8))
    m = IntMatrix.from_rows(random_antisymmetric(rng, n, 50))
    assert pf(m) ** 2 == det(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pf_congruence_covariance(seed):
    rng = Random(seed)
    n = rng.choice((2, 4, 6))
    x = IntMatrix.from_rows(random_antisymmetric(rng, n, 20))
    g = IntMatrix.from_rows([[rng.randrange(-5, 6) for _ in range(n)]
                             for _ in range(n)])
    assert pf(matmul(matmul(transpose(g), x), g)) == det(g) * pf(x)


def test_big_p_square_shape_sign():
    # pf(omega(1)) = 1 and pf(omega(2)) = -1 pin the interleaved convention
    rng = Random(7)
    for _ in range(20):
        m2 = IntMatrix.from_rows([[rng.randrange(-9, 10) for _ in range(2)]
                                  for _ in range(2)])
        assert big_p(m2, 1) == det(m2)
        m4 = IntMatrix.from_rows([[rng.randrange(-9, 10) for _ in range(4)]
                                  for _ in range(4)])
        assert big_p(m4, 2) == -det(m4)


def test_big_p_is_pf_of_gram():
    rng = Random(11)
    for _ in range(20):
        # 2l x 2n with l=3, n=2
        m = IntMatrix.from_rows([[rng.randrange(-9, 10) for _ in range(4)]
                                 for _ in range(6)])
        gram = matmul(matmul(transpose(m), omega(3)), m)
        assert big_p(m, 3) == pf(gram)


def test_quad_form_layout():
    point = VarietyPoint(quad_family(3, 2), (1, 2, 3, 4, 5, 6, 7, 8))
    # xi.y + sum of squares: 1*4 + 2*5 + 3*6 + 49 + 64
    assert quad_form(point) == 4 + 10 + 18 + 49 + 64


def test_coordinate_counts():
    assert coordinate_count(det_family(3)) == 9
    assert coordinate_count(perm_family(2)) == 4
    assert coordinate_count(pf_family(2)) == 6
    assert coordinate_count(haf_family(3)) == 15
    assert coordinate_count(quad_family(3, 2)) == 8
    assert coordinate_count(rect_family(2, 1)) == 8


def test_point_matrix_pf_vs_haf_mirror():
    uppers = (1, 2, 3, 4, 5, 6)
    anti = point_matrix(VarietyPoint(pf_family(2), uppers))
    sym = point_matrix(VarietyPoint(haf_family(2), uppers))
    assert anti.entry(3, 1) == -2 and sym.entry(3, 1) == 2
    assert upper_entries(anti) == uppers
    assert upper_entries(sym) == uppers


def test_delta_eval_dispatch():
    assert delta_eval(VarietyPoint(det_family(2), (1, 2, 3, 4))) == -2
    assert delta_eval(VarietyPoint(perm_family(2), (1, 2, 3, 4))) == 10
    assert delta_eval(VarietyPoint(pf_family(2), (3, 3, 3, 5, 5, 5))) == 15
    assert delta_eval(VarietyPoint(quad_family(2, 1), (1, 2, 3, 4, 5))) == 3 + 8 + 25


def test_family_validation():
    with pytest.raises(InvalidArgumentError):
        VarietyFamily("bogus", 2)
    with pytest.raises(InvalidArgumentError):
        rect_family(1, 2)  # ell < n
    with pytest.raises(InvalidArgumentError):
        VarietyPoint(det_family(2), (1, 2, 3))


_ALL_FAMILIES = (
    det_family(2), det_family(3), perm_family(2), perm_family(3),
    pf_family(2), haf_family(2), quad_family(3, 2), rect_family(2, 1),
    rect_family(2, 2),
)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, len(_ALL_FAMILIES) - 1))
def test_decomposition_identity(seed, pick):
    """delta(point) == sum(F_i * xi_i) + G for every family layout."""
    family = _ALL_FAMILIES[pick]
    rng = Random(seed)
    coords = tuple(rng.randrange(-15, 16) for _ in range(coordinate_count(family)))
    point = VarietyPoint(family, coords)
    dec = decompose(point)
    assert sum(f * x for f, x in zip(dec.f_values, dec.xi)) + dec.g_value \
        == delta_eval(point)


def test_b_coefficient_routes_agree():
    rng = Random(3)
    for ell, n in ((1, 1), (2, 1), (2, 2), (3, 2)):
        for _ in range(25):
            y = IntMatrix.from_rows([[rng.randrange(-9, 10)
                                      for _ in range(2 * n - 1)]
                                     for _ in range(2 * ell)])
            for i in range(1, 2 * ell + 1):
                assert b_coefficient(y, i) \
                    == b_coefficient_by_determinants(y, i)


def test_rect_closing_formula():
    # P(x) equals the sum of det(Z_t(x)) over increasing tuples t
    from itertools import combinations
    rng = Random(5)
    for ell, n in ((2, 1), (2, 2), (3, 2)):
        for _ in range(15):
            x = IntMatrix.from_rows([[rng.randrange(-7, 8)
                                      for _ in range(2 * n)]
                                     for _ in range(2 * ell)])
            total = sum(det(z_select(x, t))
                        for t in combinations(range(1, ell + 1), n))
            assert big_p(x, ell) == total


def test_perm_order_cap():
    big = IntMatrix(21, 21, tuple([1] * 441))
    with pytest.raises(ResourceLimitError):
        perm(big)


def test_exact_arithmetic_handles_big_entries():
    m = IntMatrix.from_rows([[2 ** 64, 1], [1, 2 ** 64]])
    assert det(m) == 2 ** 128 - 1

"""Obstruction classes, hypothesis gates, reachability, and epsilon."""
from __future__ import annotations

import pytest

from primepoints.congruence import (
    ReachabilitySet,
    assemble_point,
    block_sizes,
    epsilon_for_family,
    epsilon_of_y,
    obstruction_admits_primes,
    odd_residue_reachability,
    phi2,
)
from primepoints.errors import (
    HypothesisViolationError,
    InvalidArgumentError,
    ResourceLimitError,
    UndefinedEpsilonError,
)
from primepoints.invariants import (
    VarietyPoint,
    decompose,
    delta_eval,
    det_family,
    haf_family,
    perm_family,
    pf_family,
    quad_family,
    rect_family,
)
from primepoints.matrices import IntMatrix


def test_phi2_frozen():
    assert phi2(1) == 0
    assert phi2(4) == 3
    assert phi2(7) == 4
    assert phi2(8) == 7


def test_phi2_is_two_adic_factorial_valuation():
    # phi2(n) = v_2(n!) by Legendre
    from math import factorial
    for n in range(1, 40):
        v = 0
        f = factorial(n)
        while f % 2 == 0:
            f //= 2
            v += 1
        assert phi2(n) == v


def test_epsilon_for_family():
    assert epsilon_for_family(det_family(3)) == 2
    assert epsilon_for_family(det_family(5)) == 4
    assert epsilon_for_family(quad_family(3, 1)) == 1
    assert epsilon_for_family(pf_family(4)) == 1
    assert epsilon_for_family(haf_family(4)) == 1
    assert epsilon_for_family(rect_family(2, 2)) == 3
    assert epsilon_for_family(perm_family(3)) == 1
    assert epsilon_for_family(perm_family(7)) == 4
    assert epsilon_for_family(perm_family(12)) == 9


def test_obstruction_det():
    r = obstruction_admits_primes(det_family(3), 12)
    assert r.admissible and r.modulus == 4
    assert r.admissible_class_description == (0, 4)
    assert not obstruction_admits_primes(det_family(3), 6).admissible


def test_obstruction_perm_both_moduli():
    # n = 3 = 2^2 - 1: class modulus is twice the statement modulus
    r = obstruction_admits_primes(perm_family(3), 2)
    assert r.admissible
    assert r.modulus == 2 and r.admissible_class_description == (2, 4)
    assert not obstruction_admits_primes(perm_family(3), 4).admissible
    assert not obstruction_admits_primes(perm_family(3), 1).admissible
    # n = 4 is not of the 2^s - 1 form: plain class mod 2^(n-s)
    r4 = obstruction_admits_primes(perm_family(4), 8)
    assert r4.admissible_class_description == (0, 4)
    assert r4.admissible


def test_obstruction_pf_haf_quad_rect():
    assert obstruction_admits_primes(pf_family(2), 15).admissible
    assert not obstruction_admits_primes(pf_family(2), 4).admissible
    assert obstruction_admits_primes(haf_family(2), 7).admissible
    assert obstruction_admits_primes(quad_family(3, 0), 27).admissible
    assert not obstruction_admits_primes(quad_family(3, 0), 4).admissible
    assert obstruction_admits_primes(quad_family(3, 1), 4).admissible
    assert obstruction_admits_primes(rect_family(2, 1), 6).admissible
    assert not obstruction_admits_primes(rect_family(2, 1), 3).admissible


def test_hypothesis_gates():
    for family in (det_family(2), quad_family(2, 5), perm_family(2),
                   pf_family(1), haf_family(1), rect_family(1, 1)):
        with pytest.raises(HypothesisViolationError):
            obstruction_admits_primes(family, 2)


def test_reachability_det3():
    r = odd_residue_reachability(det_family(3), 2)
    assert r.modulus == 4 and r.residues == (0,)
    coords = r.witnesses[0]
    assert all(c % 2 == 1 for c in coords)
    assert delta_eval(VarietyPoint(det_family(3), coords)) % 4 == 0


def test_reachability_pf2_and_quad():
    assert odd_residue_reachability(pf_family(2), 1).residues == (1,)
    assert odd_residue_reachability(quad_family(3, 0), 1).residues == (1,)
    assert odd_residue_reachability(quad_family(3, 1), 1).residues == (0,)
    assert odd_residue_reachability(rect_family(2, 1), 1).residues == (0,)


def test_reachability_witnesses_check_out():
    r = odd_residue_reachability(pf_family(2), 2)
    for residue, coords in r.witnesses.items():
        assert all(c % 2 == 1 for c in coords)
        point = VarietyPoint(pf_family(2), coords)
        assert delta_eval(point) % 4 == residue


def test_reachability_budget(monkeypatch):
    monkeypatch.setenv("PRIMEPOINTS_BUDGET", "100")
    with pytest.raises(ResourceLimitError):
        odd_residue_reachability(det_family(3), 2)


def test_block_sizes_and_assemble_round_trip():
    cases = (
        (det_family(3), ()),
        (perm_family(3), ()),
        (pf_family(2), ()),
        (haf_family(2), ()),
        (quad_family(3, 2), (9, 11)),
        (rect_family(2, 1), ()),
    )
    from random import Random
    rng = Random(1)
    for family, z_fill in cases:
        n_xi, n_y, n_z = block_sizes(family)
        assert n_z == len(z_fill) or family.kind == "quad"
        xi = tuple(rng.randrange(1, 20) for _ in range(n_xi))
        y = tuple(rng.randrange(-9, 10) for _ in range(n_y))
        z = tuple(z_fill) if family.kind == "quad" else ()
        point = assemble_point(family, xi, y, z)
        dec = decompose(point)
        assert dec.xi == xi
        assert sum(f * u for f, u in zip(dec.f_values, xi)) + dec.g_value \
            == delta_eval(point)


def test_epsilon_of_y_det_frozen():
    y = IntMatrix.from_rows([[1, 1, 1], [1, 1, 3]])
    assert epsilon_of_y(det_family(3), y) == 2


def test_epsilon_of_y_quad_is_min_valuation_plus_one():
    assert epsilon_of_y(quad_family(3, 0), (4, 6, 8)) == 2
    assert epsilon_of_y(quad_family(3, 0), (3, 6, 8)) == 1


def test_epsilon_of_y_undefined_when_all_vanish():
    y = IntMatrix.from_rows([[1, 1, 1], [1, 1, 1]])
    with pytest.raises(UndefinedEpsilonError):
        epsilon_of_y(det_family(3), y)


def test_epsilon_of_y_shape_checks():
    with pytest.raises(InvalidArgumentError):
        epsilon_of_y(det_family(3), IntMatrix.from_rows([[1, 1, 1]]))
    with pytest.raises(InvalidArgumentError):
        epsilon_of_y(quad_family(3, 0), (1, 2))

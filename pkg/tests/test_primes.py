"""Primality, sieve, CRT, and primes in arithmetic progressions."""
from __future__ import annotations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from primepoints.errors import (
    BudgetError,
    IncompatibleSystemError,
    InvalidArgumentError,
    NoPrimesGuaranteedError,
    UnsupportedInputError,
)
from primepoints.primes import (
    Progression,
    crt,
    extended_gcd,
    is_prime,
    primes_in_system,
    primes_up_to,
)


def test_is_prime_small_cases():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    # signed convention: |n| prime counts
    assert is_prime(-7)
    assert not is_prime(-1)
    assert not is_prime(1)


def test_is_prime_known_pseudoprime_traps():
    # strong pseudoprimes to small bases
    assert not is_prime(3215031751)
    assert not is_prime(341550071728321)
    assert is_prime(2 ** 61 - 1)


def test_is_prime_bound():
    with pytest.raises(UnsupportedInputError):
        is_prime(2 ** 64)


@given(st.integers(2, 10 ** 6))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_primes_up_to():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert len(primes_up_to(10 ** 5)) == 9592
    with pytest.raises(InvalidArgumentError):
        primes_up_to(1)


def test_extended_gcd_identity():
    g, s, t = extended_gcd(3, 5)
    assert (g, s, t) == (1, 2, -1)
    for a, b in ((12, 18), (-4, 6), (0, 5), (7, 0)):
        g, s, t = extended_gcd(a, b)
        assert g == abs(__import__("math").gcd(a, b))
        assert s * a + t * b == g


def test_crt_pair():
    got = crt([Progression(4, 5), Progression(5, 12)])
    assert got == Progression(29, 60)


def test_crt_incompatible():
    with pytest.raises(IncompatibleSystemError):
        crt([Progression(1, 4), Progression(2, 6)])


def test_crt_rejects_bad_progression():
    with pytest.raises(InvalidArgumentError):
        Progression(3, 0)


def test_primes_in_system_one_mod_four():
    assert primes_in_system([Progression(1, 4)], 3) == (5, 13, 17)


def test_primes_in_system_crt_combination():
    got = primes_in_system([Progression(1, 4), Progression(2, 3)], 3)
    assert got == (5, 17, 29)
    for p in got:
        assert p % 4 == 1 and p % 3 == 2


def test_primes_in_system_start_skips_ahead():
    got = primes_in_system([Progression(1, 4)], 2, start=10)
    assert got == (13, 17)


def test_primes_in_system_no_primes():
    with pytest.raises(NoPrimesGuaranteedError):
        primes_in_system([Progression(2, 4)], 1)


def test_primes_in_system_budget(monkeypatch):
    monkeypatch.setenv("PRIMEPOINTS_BUDGET", "1")
    # sole candidate within budget is 25, composite
    with pytest.raises(BudgetError):
        primes_in_system([Progression(25, 10 ** 9 + 7)], 1)


@given(st.integers(1, 60), st.integers(2, 60))
def test_primes_in_system_respects_progression(a, n):
    g = __import__("math").gcd(a, n)
    if g != 1:
        return
    got = primes_in_system([Progression(a, n)], 4)
    for p in got:
        assert sympy.isprime(p) and p % n == a % n

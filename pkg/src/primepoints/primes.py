"""Primality, sieving, primes in arithmetic progressions, and CRT.

Convention: an integer p is prime iff |p| is a rational prime >= 2, so
negative primes are allowed. Operations that need positive primes say so.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    BudgetError,
    IncompatibleSystemError,
    InvalidArgumentError,
    NoPrimesGuaranteedError,
    ResourceLimitError,
    UnsupportedInputError,
    budget_limit,
)

_MAX_MAGNITUDE = 2 ** 64
_SIEVE_CAP = 10 ** 8
_SYSTEM_CANDIDATE_BUDGET = 10 ** 7

# Deterministic Miller-Rabin witnesses, sufficient for all inputs below 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """True iff |n| is a rational prime; deterministic for |n| < 2^64."""
    if abs(n) >= _MAX_MAGNITUDE:
        raise UnsupportedInputError(f"|n| must be below 2^64, got magnitude {abs(n)}")
    m = abs(n)
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def primes_up_to(T: int) -> tuple[int, ...]:
    """All primes p with 2 <= p <= T, ascending."""
    if T < 2:
        raise InvalidArgumentError(f"T must be at least 2, got {T}")
    if T > _SIEVE_CAP:
        raise ResourceLimitError(f"sieve cap is {_SIEVE_CAP}, got T={T}")
    sieve = bytearray([1]) * (T + 1)
    sieve[0] = sieve[1] = 0
    p = 2
    while p * p <= T:
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
        p += 1
    return tuple(i for i in range(2, T + 1) if sieve[i])


@dataclass(frozen=True)
class Progression:
    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidArgumentError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, n: int) -> bool:
        return n % self.modulus == self.residue


def crt(system: Sequence[Progression]) -> Progression:
    """Combine pairwise-coprime progressions into one; no merging of
    compatible non-coprime systems."""
    if not system:
        raise InvalidArgumentError("progression system must be nonempty")
    x, L = system[0].residue, system[0].modulus
    for prog in system[1:]:
        r, mod = prog.residue, prog.modulus
        g, s, _ = extended_gcd(L, mod)
        if g != 1:
            raise IncompatibleSystemError(
                f"moduli {L} and {mod} share the factor {g}")
        # x' = x + L * s * (r - x) solves both congruences
        x = (x + L * s * (r - x)) % (L * mod)
        L *= mod
    return Progression(x, L)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def primes_in_system(system: Sequence[Progression], count: int, start: int = 2) -> tuple[int, ...]:
    """First `count` primes >= start lying in every progression, ascending."""
    if count < 1:
        raise InvalidArgumentError(f"count must be positive, got {count}")
    combined = crt(system)
    x, L = combined.residue, combined.modulus
    if gcd(x, L) != 1:
        raise NoPrimesGuaranteedError(
            f"gcd({x}, {L}) = {gcd(x, L)} != 1: at most finitely many primes lie "
            f"in the combined progression")
    budget = budget_limit(_SYSTEM_CANDIDATE_BUDGET)
    n = start + ((x - start) % L)
    found: list[int] = []
    for _ in range(budget):
        if is_prime(n):
            found.append(n)
            if len(found) == count:
                return tuple(found)
        n += L
    raise BudgetError(
        f"candidate budget {budget} exhausted after finding {len(found)} of "
        f"{count} primes in progression ({x} mod {L}) from {start}")

"""Reference implementations used only by tests. Deliberately naive and
independent of the package's algorithms: Laplace recursion, permutation
sums, matching enumerations, brute-force prime solution counting."""
from __future__ import annotations

from itertools import permutations, product
from math import gcd

import sympy


def det_laplace(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_laplace(minor)
        total += term if j % 2 == 0 else -term
    return total


def perm_sum(rows: list[list[int]]) -> int:
    n = len(rows)
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= rows[i][sigma[i]]
        total += prod
    return total


def _matchings(indices: tuple[int, ...]):
    if not indices:
        yield ()
        return
    first, rest = indices[0], indices[1:]
    for pos in range(len(rest)):
        partner = rest[pos]
        remaining = rest[:pos] + rest[pos + 1:]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def _crossing_sign(pairs) -> int:
    sign = 1
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            i, j = pairs[a]
            k, l = pairs[b]
            # pairs are (lo, hi) with all four entries distinct
            if i < k < j < l or k < i < l < j:
                sign = -sign
    return sign


def pf_matchings(rows: list[list[int]]) -> int:
    n = len(rows)
    if n % 2:
        raise ValueError("pfaffian needs even order")
    total = 0
    for pairs in _matchings(tuple(range(n))):
        prod = 1
        for i, j in pairs:
            prod *= rows[i][j]
        total += _crossing_sign(pairs) * prod
    return total


def hf_matchings(rows: list[list[int]]) -> int:
    n = len(rows)
    if n % 2:
        raise ValueError("hafnian needs even order")
    total = 0
    for pairs in _matchings(tuple(range(n))):
        prod = 1
        for i, j in pairs:
            prod *= rows[i][j]
        total += prod
    return total


def primes_to(T: int) -> list[int]:
    return list(sympy.primerange(2, T + 1))


def count_solutions_brute(alphas: tuple[int, ...], m: int, T: int,
                          mode: str = "signed", allow_two: bool = True) -> int:
    """Full product enumeration; only usable for tiny n and T."""
    primes = [p for p in primes_to(T) if allow_two or p != 2]
    if mode == "signed":
        cands = [-p for p in primes] + primes
    else:
        cands = primes
    count = 0
    for combo in product(cands, repeat=len(alphas)):
        if sum(a * c for a, c in zip(alphas, combo)) == m:
            count += 1
    return count


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def two_coprime(a: int, b: int) -> bool:
    return is_power_of_two(gcd(abs(a), abs(b)))


def check_coprime_tuple(alphas, beta, gamma, residues, y) -> bool:
    """Validator written against the definitions only: sympy primality,
    2-power congruences, and a 2-power gcd of the form with gamma."""
    if len(y) != len(alphas):
        return False
    for v, (q, s) in zip(y, residues):
        if not sympy.isprime(v):
            return False
        if v % 2 ** s != q % 2 ** s:
            return False
    f = sum(a * v for a, v in zip(alphas, y)) + beta
    return two_coprime(f, gamma)


def odd_random_matrix(rng, n: int, bound: int = 50) -> list[list[int]]:
    """Random matrix with every entry odd."""
    out = []
    for _ in range(n):
        row = []
        for _ in range(n):
            v = rng.randrange(-bound, bound + 1) | 1
            row.append(v)
        out.append(row)
    return out


def random_antisymmetric(rng, n: int, bound: int = 50) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randrange(-bound, bound + 1)
            rows[i][j] = v
            rows[j][i] = -v
    return rows


def random_symmetric_zero_diag(rng, n: int, bound: int = 50) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randrange(-bound, bound + 1)
            rows[i][j] = v
            rows[j][i] = v
    return rows

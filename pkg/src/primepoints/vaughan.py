"""Solvability conditions for a1*p1 + ... + an*pn = m over primes, exact
brute-force counting/enumeration, and a normalized growth statistic that
stands in for positivity of the singular series."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from math import gcd, log
from typing import Iterator

from .errors import InvalidArgumentError, ResourceLimitError, budget_limit
from .primes import primes_up_to

_T_CAP = 10 ** 5
_COUNT_N_CAP = 4
_CAND_BUDGET = 10 ** 7
_SAMPLE_CAP = 20

MODES = ("signed", "positive")


@dataclass(frozen=True)
class LinearEquation:
    alphas: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        alphas = tuple(self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if len(alphas) < 3:
            raise InvalidArgumentError(f"need at least 3 coefficients, got {len(alphas)}")
        for a in alphas:
            if not isinstance(a, int) or isinstance(a, bool) or a == 0:
                raise InvalidArgumentError(f"coefficients must be nonzero integers, got {a!r}")
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m == 0:
            raise InvalidArgumentError(f"m must be a nonzero integer, got {self.m!r}")

    @property
    def n(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class ConditionReport:
    gcd_all: int
    per_index_ok: tuple[bool, ...]
    parity_ok: bool
    solvable: bool


@dataclass(frozen=True)
class PrimeCountReport:
    T: int
    mode: str
    count: int
    solutions_sampled: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GrowthPoint:
    T: int
    count: int
    normalized: float


def check_conditions(eq: LinearEquation) -> ConditionReport:
    """Both solvability conditions: dropping any one coefficient in favor of m
    must preserve the gcd, and sum(alphas) - m must vanish mod 2*gcd(g, m)."""
    g = gcd(*eq.alphas)
    per_index = tuple(
        gcd(*(a for j, a in enumerate(eq.alphas) if j != i), eq.m) == g
        for i in range(eq.n)
    )
    parity = (sum(eq.alphas) - eq.m) % (2 * gcd(g, eq.m)) == 0
    return ConditionReport(
        gcd_all=g,
        per_index_ok=per_index,
        parity_ok=parity,
        solvable=all(per_index) and parity,
    )


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise InvalidArgumentError(f"mode must be one of {MODES}, got {mode!r}")


def _check_T(T: int) -> None:
    if not isinstance(T, int) or isinstance(T, bool) or T < 2:
        raise InvalidArgumentError(f"T must be an integer >= 2, got {T!r}")
    if T > _T_CAP:
        raise ResourceLimitError(f"T={T} exceeds the cap {_T_CAP}")


def _solutions(eq: LinearEquation, T: int, mode: str,
               allow_two: bool) -> Iterator[tuple[int, ...]]:
    """Ordered prime tuples solving the equation, lexicographically: the first
    n-1 slots run over candidates in ascending order, the last is solved."""
    primes = primes_up_to(T)
    if not allow_two:
        primes = [p for p in primes if p != 2]
    if mode == "signed":
        cands = [-p for p in reversed(primes)] + list(primes)
    else:
        cands = list(primes)
    n = eq.n
    total = len(cands) ** (n - 1)
    budget = budget_limit(_CAND_BUDGET)
    if total > budget:
        raise ResourceLimitError(
            f"{total} candidate prefixes exceed the budget {budget}")
    prime_set = set(primes)
    a_last = eq.alphas[-1]
    head = eq.alphas[:-1]
    for prefix in product(cands, repeat=n - 1):
        t = eq.m - sum(a * p for a, p in zip(head, prefix))
        q, r = divmod(t, a_last)
        if r != 0 or abs(q) not in prime_set:
            continue
        if mode == "positive" and q < 0:
            continue
        yield prefix + (q,)


def count_prime_solutions(eq: LinearEquation, T: int, mode: str = "signed",
                          allow_two: bool = True) -> PrimeCountReport:
    _check_mode(mode)
    _check_T(T)
    if eq.n > _COUNT_N_CAP:
        raise ResourceLimitError(
            f"exact counting is capped at {_COUNT_N_CAP} coefficients, got {eq.n}")
    count = 0
    sampled: list[tuple[int, ...]] = []
    for sol in _solutions(eq, T, mode, allow_two):
        count += 1
        if len(sampled) < _SAMPLE_CAP:
            sampled.append(sol)
    return PrimeCountReport(T=T, mode=mode, count=count,
                            solutions_sampled=tuple(sampled))


def enumerate_prime_solutions(eq: LinearEquation, T: int, mode: str = "signed",
                              limit: int = 16,
                              allow_two: bool = True) -> tuple[tuple[int, ...], ...]:
    _check_mode(mode)
    _check_T(T)
    if limit < 1:
        raise InvalidArgumentError(f"limit must be >= 1, got {limit}")
    return tuple(islice(_solutions(eq, T, mode, allow_two), limit))


def growth_report(eq: LinearEquation, T_list: tuple[int, ...], mode: str = "signed",
                  allow_two: bool = True) -> tuple[GrowthPoint, ...]:
    """Count at each bound with the normalized statistic
    count * (log T)^n / T^(n-1); bounded away from 0 when solvable."""
    if not T_list:
        raise InvalidArgumentError("T_list must be nonempty")
    if any(b <= a for a, b in zip(T_list, T_list[1:])):
        raise InvalidArgumentError(f"bounds must be strictly increasing, got {T_list}")
    points = []
    for T in T_list:
        report = count_prime_solutions(eq, T, mode, allow_two)
        normalized = report.count * log(T) ** eq.n / T ** (eq.n - 1)
        points.append(GrowthPoint(T=T, count=report.count, normalized=normalized))
    return tuple(points)

"""Constructive pipeline: prime-avoiding Bezout coefficients, the nu
selector, prime tuples keeping a linear form 2-coprime to a target, and the
recursive generator of odd-prime vectors for an intertwined pair."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from random import Random

from .errors import BudgetError, InvalidArgumentError
from .intertwined import (
    IntertwinedWitness,
    SparsePoly,
    _constant_value,
    poly_eval,
    validate_witness,
)
from .primes import Progression, crt, extended_gcd, is_prime, primes_in_system

_RETRY_CAP = 32


def _check_nonzero_int(value: int, what: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value == 0:
        raise InvalidArgumentError(f"{what} must be a nonzero integer, got {value!r}")


def is_two_coprime(a: int, b: int) -> bool:
    """True iff the only common prime factor of a and b is 2 (gcd a power
    of 2, counting 1)."""
    _check_nonzero_int(a, "a")
    _check_nonzero_int(b, "b")
    g = gcd(a, b)
    return g & (g - 1) == 0


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _check_avoiding_pre(alphas: tuple[int, ...], p: int) -> int:
    if not alphas:
        raise InvalidArgumentError("need at least one coefficient")
    for a in alphas:
        _check_nonzero_int(a, "coefficient")
    if p == 2:
        raise InvalidArgumentError("p must be odd")
    if p < 3 or not is_prime(p):
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
    d = gcd(*alphas)
    if d % p == 0:
        raise InvalidArgumentError(f"{p} divides gcd{alphas} = {d}")
    return d


def _bezout_seed(alphas: tuple[int, ...]) -> tuple[int, list[int]]:
    g, coeffs = alphas[0], [1]
    for a in alphas[1:]:
        g2, s, t = extended_gcd(g, a)
        coeffs = [c * s for c in coeffs] + [t]
        g = g2
    if g < 0:
        g, coeffs = -g, [-c for c in coeffs]
    return g, coeffs


def bezout_avoiding_prime(alphas: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Coefficients t with sum(t_i * alpha_i) = gcd(alphas) and p dividing no
    t_i; at most two adjustment rounds on the extended-gcd seed."""
    alphas = tuple(alphas)
    d = _check_avoiding_pre(alphas, p)
    mu = _bezout_seed(alphas)[1]
    if all(c % p != 0 for c in mu):
        return tuple(mu)
    pivots = [r for r in range(len(alphas)) if mu[r] % p != 0 and alphas[r] % p != 0]
    # nonempty: were every index to fail, p would divide sum(mu_i alpha_i) = d
    r = pivots[-1]
    moved = [i for i in range(len(alphas)) if i != r and mu[i] % p == 0]
    for c in (1, 2):
        t = list(mu)
        for i in moved:
            t[i] += c * alphas[r]
        t[r] -= c * sum(alphas[i] for i in moved)
        if all(x % p != 0 for x in t):
            if sum(x * a for x, a in zip(t, alphas)) != d:
                raise RuntimeError("adjusted coefficients no longer present the gcd")
            return tuple(t)
    raise RuntimeError("both adjustment rounds left a coefficient divisible by p")


def nu_for_prime(alphas: tuple[int, ...], beta: int, p: int) -> int:
    """nu in 1..p-1 with p dividing neither nu nor nu*gcd(alphas) + beta,
    pinned down by the least delta in 1..p-1 avoiding beta mod p."""
    alphas = tuple(alphas)
    d = _check_avoiding_pre(alphas, p)
    delta = next(c for c in range(1, p) if c != beta % p)
    return ((delta - beta) * pow(d, -1, p)) % p


@dataclass(frozen=True)
class TwoCoprimeSpec:
    alphas: tuple[int, ...]
    beta: int
    gamma: int
    residues: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        alphas = tuple(self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if not alphas:
            raise InvalidArgumentError("need at least one coefficient")
        for a in alphas:
            _check_nonzero_int(a, "coefficient")
        if not isinstance(self.beta, int) or isinstance(self.beta, bool):
            raise InvalidArgumentError(f"beta must be an integer, got {self.beta!r}")
        _check_nonzero_int(self.gamma, "gamma")
        residues = tuple((q, s) for q, s in self.residues)
        object.__setattr__(self, "residues", residues)
        if len(residues) != len(alphas):
            raise InvalidArgumentError(
                f"{len(residues)} residue pairs for {len(alphas)} coefficients")
        for q, s in residues:
            if not isinstance(q, int) or q < 0 or q % 2 == 0:
                raise InvalidArgumentError(f"q must be odd and non-negative, got {q}")
            if not isinstance(s, int) or s < 0:
                raise InvalidArgumentError(f"s must be a non-negative integer, got {s}")
        if not is_two_coprime(self.gamma, gcd(*alphas)):
            raise InvalidArgumentError(
                f"gamma={self.gamma} shares an odd prime with gcd{alphas}")


def _odd_prime_factors(n: int) -> list[int]:
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def validate_two_coprime_tuple(spec: TwoCoprimeSpec, y: tuple[int, ...]) -> bool:
    """Independent check: positive primes, the 2-power residues, and the
    linear form 2-coprime to gamma. Shares no state with the generator."""
    if len(y) != len(spec.alphas):
        return False
    for v, (q, s) in zip(y, spec.residues):
        if v < 2 or not is_prime(v):
            return False
        if s > 0 and v % 2 ** s != q % 2 ** s:
            return False
    f = sum(a * v for a, v in zip(spec.alphas, y)) + spec.beta
    return _is_power_of_two(gcd(f, spec.gamma))


def two_coprime_tuples(spec: TwoCoprimeSpec, count: int,
                       seed: int = 1) -> tuple[tuple[int, ...], ...]:
    """`count` tuples of positive primes meeting the residue constraints with
    f(y) 2-coprime to gamma; deterministic given (spec, seed)."""
    if count < 1:
        raise InvalidArgumentError(f"count must be >= 1, got {count}")
    per_prime = []
    for p in _odd_prime_factors(spec.gamma):
        per_prime.append((p, nu_for_prime(spec.alphas, spec.beta, p),
                          bezout_avoiding_prime(spec.alphas, p)))
    rng = Random(seed)
    columns = []
    for i, (q, s) in enumerate(spec.residues):
        system = []
        if s > 0:
            system.append(Progression(q % 2 ** s, 2 ** s))
        for p, nu, t in per_prime:
            system.append(Progression(nu * t[i] % p, p))
        if not system:
            system.append(Progression(0, 1))
        combined = crt(system)
        if gcd(combined.residue, combined.modulus) != 1:
            raise RuntimeError(
                f"coordinate {i + 1}: residue system blocks all primes")
        start = 2 + rng.randrange(4) * combined.modulus
        columns.append(primes_in_system(system, count, start))
    tuples = tuple(tuple(col[j] for col in columns) for j in range(count))
    for y in tuples:
        if not validate_two_coprime_tuple(spec, y):
            raise RuntimeError(f"generated tuple {y} fails the validator")
    return tuples


def _bumped(residues: tuple[tuple[int, int], ...],
            indices: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # force oddness: every emitted coordinate must be an odd prime
    return tuple((residues[i - 1][0], max(residues[i - 1][1], 1)) for i in indices)


def _eval_at(poly: SparsePoly, assign: dict[int, int]) -> int:
    point = [assign.get(i, 0) for i in range(1, poly.arity + 1)]
    return poly_eval(poly, point)


def _solve_witness(witness: IntertwinedWitness, m: int,
                   residues: tuple[tuple[int, int], ...], rng: Random,
                   count: int) -> list[dict[int, int]]:
    base: dict[int, int] = {}
    if witness.depth >= 2:
        i1, i2, cw = witness.child
        for _ in range(_RETRY_CAP):
            try:
                child = _solve_witness(cw, m, residues, rng, 1)[0]
            except BudgetError as e:
                raise BudgetError(f"stage child-recursion: {e}") from e
            avals = [_eval_at(c, child) for c in witness.coeffs]
            if all(avals) and _is_power_of_two(gcd(*avals)):
                base.update(child)
                break
        else:
            raise BudgetError(
                f"stage child-recursion: no coefficient vector with a 2-power "
                f"gcd in {_RETRY_CAP} attempts")
    for wv in witness.w_vars:
        q, s = residues[wv - 1][0], max(residues[wv - 1][1], 1)
        prog = Progression(q % 2 ** s, 2 ** s)
        start = 2 + rng.randrange(4) * prog.modulus
        try:
            base[wv] = primes_in_system([prog], 1, start)[0]
        except BudgetError as e:
            raise BudgetError(f"stage w-primes: {e}") from e
    if witness.depth == 1:
        avals = [_constant_value(c) for c in witness.coeffs]
    else:
        avals = [_eval_at(c, base) for c in witness.coeffs]
    beta_val = _eval_at(witness.beta, base)
    out = []
    for _ in range(count):
        for _ in range(_RETRY_CAP):
            spec = TwoCoprimeSpec(tuple(avals), beta_val, m,
                                  _bumped(residues, witness.u_vars))
            try:
                u = two_coprime_tuples(spec, 1, rng.randrange(2 ** 30))[0]
            except BudgetError as e:
                raise BudgetError(f"stage u-tuples: {e}") from e
            f_val = sum(a * x for a, x in zip(avals, u)) + beta_val
            if f_val != 0:
                break
        else:
            raise BudgetError(f"stage u-tuples: the form vanished {_RETRY_CAP} times")
        for _ in range(_RETRY_CAP):
            spec2 = TwoCoprimeSpec(tuple(avals), beta_val, lcm(m, f_val),
                                   _bumped(residues, witness.utilde_vars))
            try:
                ut = two_coprime_tuples(spec2, 1, rng.randrange(2 ** 30))[0]
            except BudgetError as e:
                raise BudgetError(f"stage utilde-tuples: {e}") from e
            ft_val = witness.mirror * (sum(a * x for a, x in zip(avals, ut)) + beta_val)
            if ft_val != 0:
                break
        else:
            raise BudgetError(
                f"stage utilde-tuples: the form vanished {_RETRY_CAP} times")
        for x, y in ((f_val, m), (ft_val, m), (f_val, ft_val)):
            if not is_two_coprime(x, y):
                raise RuntimeError(f"pair ({x}, {y}) is not 2-coprime")
        assign = dict(base)
        assign.update(zip(witness.u_vars, u))
        assign.update(zip(witness.utilde_vars, ut))
        out.append(assign)
    return out


def intertwined_prime_points(F: SparsePoly, F_tilde: SparsePoly,
                             witness: IntertwinedWitness, m: int,
                             residues: tuple[tuple[int, int], ...], count: int,
                             seed: int = 1) -> tuple[tuple[int, ...], ...]:
    """Vectors of odd primes honoring the residue constraints such that
    F(y), F_tilde(y), m are pairwise 2-coprime, built by the recursive
    two-stage chaining over the witness."""
    _check_nonzero_int(m, "m")
    if count < 1:
        raise InvalidArgumentError(f"count must be >= 1, got {count}")
    if len(residues) != witness.arity:
        raise InvalidArgumentError(
            f"{len(residues)} residue pairs for arity {witness.arity}")
    for q, s in residues:
        if q % 2 == 0 or q < 0 or s < 0:
            raise InvalidArgumentError(f"residue pair ({q}, {s}) invalid")
    verdict = validate_witness(F, F_tilde, witness, trials=20,
                               coordinate_range=50, seed=seed * 31 + 7)
    if not verdict.ok:
        raise InvalidArgumentError(f"witness rejected: {verdict.failure}")
    rng = Random(seed)
    assigns = _solve_witness(witness, m, residues, rng, count)
    vectors = []
    for assign in assigns:
        vector = tuple(assign[i] for i in range(1, witness.arity + 1))
        f_val, ft_val = poly_eval(F, vector), poly_eval(F_tilde, vector)
        if f_val == 0 or ft_val == 0:
            raise RuntimeError("a form vanished at an emitted vector")
        for x, y in ((f_val, m), (ft_val, m), (f_val, ft_val)):
            if not is_two_coprime(x, y):
                raise RuntimeError(f"output pair ({x}, {y}) is not 2-coprime")
        vectors.append(vector)
    return tuple(vectors)

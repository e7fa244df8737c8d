"""Sparse exact multivariate polynomials at small arity, the recursive
certificate for pairs carrying an iterated linear structure, randomized and
symbolic validation, and constructors for the determinant, permanent,
pfaffian, hafnian, and row-coefficient pairs.

Variable indices are 1-based. Constructors order variables canonically:
shared block first (row-major), then the first polynomial's private line,
then the second's.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from random import Random

from .errors import InvalidArgumentError, ResourceLimitError
from .invariants import VarietyFamily
from .matrices import hat_index

Exps = tuple[int, ...]

_SYMBOLIC_ARITY_CAP = 12


@dataclass(frozen=True)
class SparsePoly:
    arity: int
    terms: tuple[tuple[Exps, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.arity, int) or isinstance(self.arity, bool) or self.arity < 0:
            raise InvalidArgumentError(f"arity must be a non-negative integer, got {self.arity!r}")
        for exps, coeff in self.terms:
            if len(exps) != self.arity:
                raise InvalidArgumentError(
                    f"exponent vector {exps} has length {len(exps)}, arity is {self.arity}")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exps):
                raise InvalidArgumentError(f"exponents must be non-negative integers: {exps}")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff == 0:
                raise InvalidArgumentError(f"coefficients must be nonzero integers, got {coeff!r}")
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))


def _canon(arity: int, mapping: dict[Exps, int]) -> SparsePoly:
    return SparsePoly(arity, tuple((e, c) for e, c in mapping.items() if c != 0))


def const_poly(arity: int, c: int) -> SparsePoly:
    if c == 0:
        return SparsePoly(arity, ())
    return SparsePoly(arity, (((0,) * arity, c),))


def var_poly(arity: int, index: int) -> SparsePoly:
    """The monomial x_index, 1-based."""
    if not 1 <= index <= arity:
        raise InvalidArgumentError(f"variable index {index} out of range 1..{arity}")
    exps = tuple(1 if i == index - 1 else 0 for i in range(arity))
    return SparsePoly(arity, ((exps, 1),))


def _check_same_arity(a: SparsePoly, b: SparsePoly) -> None:
    if a.arity != b.arity:
        raise InvalidArgumentError(f"arity mismatch: {a.arity} vs {b.arity}")


def poly_add(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    _check_same_arity(a, b)
    acc = dict(a.terms)
    for exps, coeff in b.terms:
        acc[exps] = acc.get(exps, 0) + coeff
    return _canon(a.arity, acc)


def poly_scale(p: SparsePoly, c: int) -> SparsePoly:
    if c == 0:
        return SparsePoly(p.arity, ())
    return SparsePoly(p.arity, tuple((e, c * k) for e, k in p.terms))


def poly_sub(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return poly_add(a, poly_scale(b, -1))


def poly_mul(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    _check_same_arity(a, b)
    acc: dict[Exps, int] = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            key = tuple(x + y for x, y in zip(ea, eb))
            acc[key] = acc.get(key, 0) + ca * cb
    return _canon(a.arity, acc)


def poly_support(p: SparsePoly) -> frozenset[int]:
    """1-based indices of variables appearing in some term."""
    out = set()
    for exps, _ in p.terms:
        for i, e in enumerate(exps):
            if e:
                out.add(i + 1)
    return frozenset(out)


def poly_eval(p: SparsePoly, point: tuple[int, ...] | list[int]) -> int:
    if len(point) != p.arity:
        raise InvalidArgumentError(
            f"point has {len(point)} coordinates, arity is {p.arity}")
    total = 0
    for exps, coeff in p.terms:
        prod = coeff
        for x, e in zip(point, exps):
            if e:
                prod *= x ** e
        total += prod
    return total


def _is_constant(p: SparsePoly) -> bool:
    return all(not any(exps) for exps, _ in p.terms)


def _constant_value(p: SparsePoly) -> int:
    total = 0
    for exps, coeff in p.terms:
        if not any(exps):
            total += coeff
    return total


# ---------------------------------------------------------------------------
# Polynomial matrices (entries are SparsePoly) at tiny sizes.

PolyRows = list[list[SparsePoly]]


def _poly_rows(arity: int, ids: list[list[int]]) -> PolyRows:
    return [[var_poly(arity, v) for v in row] for row in ids]


def _det_polymat(rows: PolyRows, signed: bool = True) -> SparsePoly:
    n = len(rows)
    arity = rows[0][0].arity if n else 0
    acc: dict[Exps, int] = {}
    for perm in permutations(range(n)):
        sign = 1
        if signed:
            seen = [False] * n
            for start in range(n):
                if seen[start]:
                    continue
                length, j = 0, start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        prod = const_poly(arity, sign)
        for i in range(n):
            prod = poly_mul(prod, rows[i][perm[i]])
        for exps, coeff in prod.terms:
            acc[exps] = acc.get(exps, 0) + coeff
    if n == 0:
        return const_poly(arity, 1)
    return _canon(arity, acc)


def _perm_polymat(rows: PolyRows) -> SparsePoly:
    return _det_polymat(rows, signed=False)


def _pf_polymat(rows: PolyRows, signed: bool = True) -> SparsePoly:
    """Pfaffian (signed) or hafnian (unsigned) of a square poly matrix whose
    upper entries carry the values; recursion along the first active index."""
    n = len(rows)
    if n % 2 != 0:
        raise InvalidArgumentError(f"order must be even, got {n}")
    arity = rows[0][0].arity if n else 0

    def rec(active: tuple[int, ...]) -> SparsePoly:
        if not active:
            return const_poly(arity, 1)
        first, rest = active[0], active[1:]
        total = const_poly(arity, 0)
        for pos in range(len(rest)):
            sub = rec(rest[:pos] + rest[pos + 1:])
            term = poly_mul(rows[first][rest[pos]], sub)
            if signed and pos % 2 == 1:
                term = poly_scale(term, -1)
            total = poly_add(total, term)
        return total

    return rec(tuple(range(n)))


def _gram_polymat(x: PolyRows) -> PolyRows:
    """x^T * Omega * x for x with 2l rows: entry (a,b) sums the symplectic
    pairings of columns a and b."""
    ell2 = len(x)
    ell = ell2 // 2
    cols = len(x[0])
    arity = x[0][0].arity
    out = [[const_poly(arity, 0) for _ in range(cols)] for _ in range(cols)]
    for a in range(cols):
        for b in range(cols):
            acc = const_poly(arity, 0)
            for i in range(ell):
                acc = poly_add(acc, poly_mul(x[i][a], x[i + ell][b]))
                acc = poly_sub(acc, poly_mul(x[i + ell][a], x[i][b]))
            out[a][b] = acc
    return out


def _p_polymat(x: PolyRows) -> SparsePoly:
    return _pf_polymat(_gram_polymat(x))


def _b_polymat(y: PolyRows, i: int) -> SparsePoly:
    """Row coefficient of the last-column expansion of the symplectic pairing
    invariant; mirrors invariants.b_coefficient on poly entries."""
    ell2 = len(y)
    ell = ell2 // 2
    cols = len(y[0])
    arity = y[0][0].arity
    ih = hat_index(i, ell)
    sign = 1 if i <= ell else -1
    if cols == 1:
        return poly_scale(y[ih - 1][0], -sign)
    drop = sorted((i - 1, ih - 1))
    total = const_poly(arity, 0)
    for k in range(cols):
        sub = [[row[c] for c in range(cols) if c != k]
               for r, row in enumerate(y) if r not in drop]
        term = poly_mul(y[ih - 1][k], _p_polymat(sub))
        if k % 2 == 0:  # 1-based column k+1 odd
            term = poly_scale(term, -1)
        total = poly_add(total, term)
    return poly_scale(total, sign)


def _upper_index_map(order: int) -> dict[tuple[int, int], int]:
    out = {}
    idx = 1
    for i in range(1, order + 1):
        for j in range(i + 1, order + 1):
            out[(i, j)] = idx
            idx += 1
    return out


def symbolic_invariant(family: VarietyFamily) -> SparsePoly:
    """Full sparse expansion of the family's defining polynomial over its
    coordinate layout."""
    kind, n = family.kind, family.n
    if kind in ("det", "perm"):
        if n > 4:
            raise ResourceLimitError(f"{kind} symbolic expansion capped at n=4, got {n}")
        arity = n * n
        rows = [[var_poly(arity, (i - 1) * n + j) for j in range(1, n + 1)]
                for i in range(1, n + 1)]
        return _det_polymat(rows, signed=(kind == "det"))
    if kind in ("pf", "haf"):
        if 2 * n > 6:
            raise ResourceLimitError(f"{kind} symbolic expansion capped at order 6, got {2 * n}")
        order = 2 * n
        arity = n * (2 * n - 1)
        upper = _upper_index_map(order)
        rows: PolyRows = [[const_poly(arity, 0)] * order for _ in range(order)]
        for (i, j), v in upper.items():
            p = var_poly(arity, v)
            rows[i - 1][j - 1] = p
            rows[j - 1][i - 1] = poly_scale(p, -1 if kind == "pf" else 1)
        return _pf_polymat(rows, signed=(kind == "pf"))
    if kind == "rect":
        ell = family.ell
        arity = 4 * ell * n
        if arity > 24:
            raise ResourceLimitError(
                f"rect symbolic expansion capped at 24 variables, got {arity}")
        width = 2 * n
        rows = [[var_poly(arity, (i - 1) * width + j) for j in range(1, width + 1)]
                for i in range(1, 2 * ell + 1)]
        return _p_polymat(rows)
    # quad
    k = family.k
    arity = 2 * n + k
    if arity > 25:
        raise ResourceLimitError(f"quad symbolic expansion capped at 25 variables, got {arity}")
    total = const_poly(arity, 0)
    for i in range(1, n + 1):
        total = poly_add(total, poly_mul(var_poly(arity, i), var_poly(arity, n + i)))
    for j in range(1, k + 1):
        z = var_poly(arity, 2 * n + j)
        total = poly_add(total, poly_mul(z, z))
    return total


# ---------------------------------------------------------------------------
# Witnesses.

@dataclass(frozen=True)
class IntertwinedWitness:
    arity: int
    depth: int
    u_vars: tuple[int, ...]
    utilde_vars: tuple[int, ...]
    v_vars: tuple[int, ...]
    w_vars: tuple[int, ...]
    coeffs: tuple[SparsePoly, ...]
    beta: SparsePoly
    mirror: int = 1
    child: "tuple[int, int, IntertwinedWitness] | None" = None


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _structural(w: IntertwinedWitness, scope: frozenset[int]) -> str | None:
    if w.depth < 1:
        return f"depth must be >= 1, got {w.depth}"
    sets = (w.u_vars, w.utilde_vars, w.v_vars, w.w_vars)
    seen: set[int] = set()
    for name, s in zip(("u", "utilde", "v", "w"), sets):
        for v in s:
            if v in seen:
                return f"variable {v} appears twice across the {name} partition"
            seen.add(v)
    if seen != scope:
        return (f"u/utilde/v/w do not partition the scope: "
                f"missing {sorted(scope - seen)}, extra {sorted(seen - scope)}")
    if len(w.u_vars) != len(w.utilde_vars) or not w.u_vars:
        return (f"|u|={len(w.u_vars)} and |utilde|={len(w.utilde_vars)} "
                "must be equal and >= 1")
    if len(w.coeffs) != len(w.u_vars):
        return f"{len(w.coeffs)} coefficients for {len(w.u_vars)} u-variables"
    if w.mirror not in (1, -1):
        return f"mirror must be +1 or -1, got {w.mirror}"
    if w.beta.arity != w.arity or any(c.arity != w.arity for c in w.coeffs):
        return "coefficient/beta arity differs from the witness arity"
    vset = frozenset(w.v_vars)
    for pos, c in enumerate(w.coeffs):
        if not poly_support(c) <= vset:
            return f"coefficient {pos} involves variables outside v"
    if w.depth == 1:
        if w.v_vars:
            return "depth-1 witness must have empty v"
        if w.child is not None:
            return "depth-1 witness must not have a child"
        if not poly_support(w.beta) <= frozenset(w.w_vars):
            return "depth-1 beta involves variables outside w"
        if not all(_is_constant(c) for c in w.coeffs):
            return "depth-1 coefficients must be integer constants"
        g = gcd(*(abs(_constant_value(c)) for c in w.coeffs)) if w.coeffs else 0
        if g == 0 or g & (g - 1) != 0:
            return f"gcd of depth-1 coefficients is {g}, not a power of 2"
        return None
    if w.child is None:
        return f"depth-{w.depth} witness requires a child"
    if not poly_support(w.beta) <= frozenset(w.v_vars) | frozenset(w.w_vars):
        return "beta involves variables outside v and w"
    i1, i2, cw = w.child
    if not (0 <= i1 < len(w.coeffs) and 0 <= i2 < len(w.coeffs)) or i1 == i2:
        return f"child coefficient indices ({i1}, {i2}) invalid"
    if cw.arity != w.arity:
        return f"child arity {cw.arity} differs from {w.arity}"
    if cw.depth != w.depth - 1:
        return f"child depth {cw.depth}, expected {w.depth - 1}"
    return _structural(cw, vset)


def _identities_at(F: SparsePoly, Ft: SparsePoly, w: IntertwinedWitness,
                   point: list[int], label: str) -> str | None:
    coeff_vals = [poly_eval(c, point) for c in w.coeffs]
    beta_val = poly_eval(w.beta, point)
    lhs = sum(a * point[u - 1] for a, u in zip(coeff_vals, w.u_vars)) + beta_val
    if poly_eval(F, point) != lhs:
        return f"identity for the first polynomial fails {label}"
    rhs = w.mirror * (sum(a * point[t - 1] for a, t in zip(coeff_vals, w.utilde_vars))
                      + beta_val)
    if poly_eval(Ft, point) != rhs:
        return f"identity for the second polynomial fails {label}"
    if w.child is not None:
        i1, i2, cw = w.child
        return _identities_at(w.coeffs[i1], w.coeffs[i2], cw, point, label)
    return None


def _symbolic_identities(F: SparsePoly, Ft: SparsePoly,
                         w: IntertwinedWitness) -> str | None:
    arity = w.arity
    lhs = SparsePoly(arity, w.beta.terms)
    rhs = SparsePoly(arity, w.beta.terms)
    for c, u, t in zip(w.coeffs, w.u_vars, w.utilde_vars):
        lhs = poly_add(lhs, poly_mul(c, var_poly(arity, u)))
        rhs = poly_add(rhs, poly_mul(c, var_poly(arity, t)))
    if lhs != F:
        return "symbolic identity for the first polynomial fails"
    if poly_scale(rhs, w.mirror) != Ft:
        return "symbolic identity for the second polynomial fails"
    if w.child is not None:
        i1, i2, cw = w.child
        return _symbolic_identities(w.coeffs[i1], w.coeffs[i2], cw)
    return None


def validate_witness(F: SparsePoly, F_tilde: SparsePoly, witness: IntertwinedWitness,
                     trials: int = 50, coordinate_range: int = 100, seed: int = 1,
                     symbolic: bool = False) -> ValidationResult:
    """Structural checks plus the two linear identities, either at seeded
    random integer points or by exact expansion (arity <= 12)."""
    if F.arity != witness.arity or F_tilde.arity != witness.arity:
        raise InvalidArgumentError(
            f"polynomial arity {F.arity}/{F_tilde.arity} differs from "
            f"witness arity {witness.arity}")
    fail = _structural(witness, frozenset(range(1, witness.arity + 1)))
    if fail:
        return ValidationResult(False, fail)
    if symbolic:
        if witness.arity > _SYMBOLIC_ARITY_CAP:
            raise InvalidArgumentError(
                f"symbolic mode capped at arity {_SYMBOLIC_ARITY_CAP}, got {witness.arity}")
        fail = _symbolic_identities(F, F_tilde, witness)
        return ValidationResult(fail is None, fail)
    if trials < 1 or coordinate_range < 1:
        raise InvalidArgumentError("trials and coordinate_range must be >= 1")
    for k in range(trials):
        rng = Random(seed * 1_000_003 + k)
        point = [rng.randint(-coordinate_range, coordinate_range)
                 for _ in range(witness.arity)]
        fail = _identities_at(F, F_tilde, witness, point, f"at trial {k}")
        if fail:
            return ValidationResult(False, fail)
    return ValidationResult(True, None)


def scale_pair_witness(witness: IntertwinedWitness, s: int, rho: int) -> IntertwinedWitness:
    """Witness for (s*F, rho*s*F_tilde) given one for (F, F_tilde); rho is a
    sign, s should be a power of 2 in magnitude to keep depth-1 gcds valid."""
    if s == 0 or rho not in (1, -1):
        raise InvalidArgumentError("s must be nonzero and rho a sign")
    child = witness.child
    if child is not None:
        i1, i2, cw = child
        child = (i1, i2, scale_pair_witness(cw, s, 1))
    return IntertwinedWitness(
        arity=witness.arity,
        depth=witness.depth,
        u_vars=witness.u_vars,
        utilde_vars=witness.utilde_vars,
        v_vars=witness.v_vars,
        w_vars=witness.w_vars,
        coeffs=tuple(poly_scale(c, s) for c in witness.coeffs),
        beta=poly_scale(witness.beta, s),
        mirror=rho * witness.mirror,
        child=child,
    )


# ---------------------------------------------------------------------------
# Constructors: determinant / permanent line pairs.

def _line_witness(arity: int, a_ids: list[list[int]], b_ids: list[list[int]],
                  axis: str, pos: int, scope: frozenset[int],
                  signed: bool) -> IntertwinedWitness:
    """Witness for (op(A), op(B)) where A and B differ exactly in one line:
    column `pos` (axis='column') or row `pos` (axis='row'), 1-based."""
    size = len(a_ids)
    if size == 1:
        u, ut = a_ids[0][0], b_ids[0][0]
        return IntertwinedWitness(
            arity=arity, depth=1,
            u_vars=(u,), utilde_vars=(ut,), v_vars=(),
            w_vars=tuple(sorted(scope - {u, ut})),
            coeffs=(const_poly(arity, 1),), beta=const_poly(arity, 0),
        )
    if axis == "column":
        u_vars = tuple(a_ids[i][pos - 1] for i in range(size))
        ut_vars = tuple(b_ids[i][pos - 1] for i in range(size))
        minors = [[[a_ids[r][c] for c in range(size) if c != pos - 1]
                   for r in range(size) if r != i] for i in range(size)]
        child_axis, child_pos = "row", 1
    else:
        u_vars = tuple(a_ids[pos - 1][j] for j in range(size))
        ut_vars = tuple(b_ids[pos - 1][j] for j in range(size))
        minors = [[[a_ids[r][c] for c in range(size) if c != j]
                   for r in range(size) if r != pos - 1] for j in range(size)]
        child_axis, child_pos = "column", 1
    top_sign = 1 if (1 + pos) % 2 == 0 else -1
    coeffs = []
    for k, minor in enumerate(minors):
        poly = _det_polymat(_poly_rows(arity, minor), signed=signed)
        if signed and k % 2 == 1:
            poly = poly_scale(poly, -1)
        if signed:
            poly = poly_scale(poly, top_sign)
        coeffs.append(poly)
    v_vars = tuple(sorted(scope - set(u_vars) - set(ut_vars)))
    # the pair (minor 0 of A, minor 1 of A) differs in exactly one line again
    raw = _line_witness(arity, minors[0], minors[1], child_axis, child_pos,
                        frozenset(v_vars), signed)
    if signed:
        raw = scale_pair_witness(raw, top_sign, -1)
    return IntertwinedWitness(
        arity=arity, depth=raw.depth + 1,
        u_vars=u_vars, utilde_vars=ut_vars, v_vars=v_vars, w_vars=(),
        coeffs=tuple(coeffs), beta=const_poly(arity, 0),
        child=(0, 1, raw),
    )


def _line_pair(k: int, axis: str, index: int,
               signed: bool) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    if k < 1 or k > 4:
        raise ResourceLimitError(f"line pairs are capped at k=4, got {k}")
    if axis not in ("row", "column"):
        raise InvalidArgumentError(f"axis must be 'row' or 'column', got {axis!r}")
    if not 1 <= index <= k:
        raise InvalidArgumentError(f"index {index} out of range 1..{k}")
    arity = k * (k + 1)
    shared = k * (k - 1)
    u_ids = list(range(shared + 1, shared + k + 1))
    ut_ids = list(range(shared + k + 1, shared + 2 * k + 1))
    a_ids, b_ids = [], []
    nxt = 1
    for r in range(k):
        row_a, row_b = [], []
        for c in range(k):
            if axis == "column" and c == index - 1:
                row_a.append(u_ids[r])
                row_b.append(ut_ids[r])
            elif axis == "row" and r == index - 1:
                row_a.append(u_ids[c])
                row_b.append(ut_ids[c])
            else:
                row_a.append(nxt)
                row_b.append(nxt)
                nxt += 1
        a_ids.append(row_a)
        b_ids.append(row_b)
    F = _det_polymat(_poly_rows(arity, a_ids), signed=signed)
    Ft = _det_polymat(_poly_rows(arity, b_ids), signed=signed)
    witness = _line_witness(arity, a_ids, b_ids, axis, index,
                            frozenset(range(1, arity + 1)), signed)
    return F, Ft, witness


def det_pair_witness(k: int, axis: str = "column",
                     index: int = 1) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    """Determinants of two k x k matrices identical except in one line."""
    return _line_pair(k, axis, index, signed=True)


def perm_pair_witness(k: int, axis: str = "column",
                      index: int = 1) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    """Permanents of two k x k matrices identical except in one line."""
    return _line_pair(k, axis, index, signed=False)


# ---------------------------------------------------------------------------
# Constructors: pfaffian / hafnian first-line pairs.

def _matching_poly(arity: int, indices: list[int],
                   lookup: dict[frozenset[int], int], signed: bool) -> SparsePoly:
    if not indices:
        return const_poly(arity, 1)
    first, rest = indices[0], indices[1:]
    total = const_poly(arity, 0)
    for p in range(len(rest)):
        sub = _matching_poly(arity, rest[:p] + rest[p + 1:], lookup, signed)
        term = poly_mul(var_poly(arity, lookup[frozenset((first, rest[p]))]), sub)
        if signed and p % 2 == 1:
            term = poly_scale(term, -1)
        total = poly_add(total, term)
    return total


def _pair_vars(ids: list[int], lookup: dict[frozenset[int], int]) -> set[int]:
    return {lookup[frozenset((a, b))] for x, a in enumerate(ids)
            for b in ids[x + 1:]}


def _matching_witness(arity: int, first_a: int, first_b: int, rest: list[int],
                      lookup: dict[frozenset[int], int], scope: frozenset[int],
                      signed: bool) -> IntertwinedWitness:
    u_vars = tuple(lookup[frozenset((first_a, t))] for t in rest)
    ut_vars = tuple(lookup[frozenset((first_b, t))] for t in rest)
    if len(rest) == 1:
        return IntertwinedWitness(
            arity=arity, depth=1,
            u_vars=u_vars, utilde_vars=ut_vars, v_vars=(),
            w_vars=tuple(sorted(scope - set(u_vars) - set(ut_vars))),
            coeffs=(const_poly(arity, 1),), beta=const_poly(arity, 0),
        )
    coeffs = []
    for p in range(len(rest)):
        poly = _matching_poly(arity, rest[:p] + rest[p + 1:], lookup, signed)
        if signed and p % 2 == 1:
            poly = poly_scale(poly, -1)
        coeffs.append(poly)
    v_vars = tuple(sorted(_pair_vars(rest, lookup)))
    w_vars = tuple(sorted(scope - set(u_vars) - set(ut_vars) - set(v_vars)))
    # coefficients 0 and 1 are (up to the pfaffian sign) the matchings of
    # rest minus its first element vs rest minus its second
    raw = _matching_witness(arity, rest[1], rest[0], rest[2:], lookup,
                            frozenset(v_vars), signed)
    if signed:
        raw = scale_pair_witness(raw, 1, -1)
    return IntertwinedWitness(
        arity=arity, depth=raw.depth + 1,
        u_vars=u_vars, utilde_vars=ut_vars, v_vars=v_vars, w_vars=w_vars,
        coeffs=tuple(coeffs), beta=const_poly(arity, 0),
        child=(0, 1, raw),
    )


def _matching_pair(n: int, signed: bool) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    if n < 1 or 2 * n > 6:
        raise ResourceLimitError(f"matching pairs are capped at order 6, got {2 * n}")
    rest = list(range(2, 2 * n + 1))
    lookup: dict[frozenset[int], int] = {}
    nxt = 1
    for x, a in enumerate(rest):
        for b in rest[x + 1:]:
            lookup[frozenset((a, b))] = nxt
            nxt += 1
    for t in rest:
        lookup[frozenset((-1, t))] = nxt
        nxt += 1
    for t in rest:
        lookup[frozenset((-2, t))] = nxt
        nxt += 1
    arity = nxt - 1
    F = _matching_poly(arity, [-1] + rest, lookup, signed)
    Ft = _matching_poly(arity, [-2] + rest, lookup, signed)
    witness = _matching_witness(arity, -1, -2, rest, lookup,
                                frozenset(range(1, arity + 1)), signed)
    return F, Ft, witness


def pf_pair_witness(n: int) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    """Pfaffians of two antisymmetric 2n x 2n matrices sharing everything but
    the first row and column."""
    return _matching_pair(n, signed=True)


def haf_pair_witness(n: int) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    """Hafnians of two symmetric zero-diagonal matrices sharing everything but
    the first row and column."""
    return _matching_pair(n, signed=False)


# ---------------------------------------------------------------------------
# Constructor: row-coefficient pairs of the symplectic pairing invariant.

def _b_witness(ids: list[list[int]], i: int, arity: int,
               scope: frozenset[int]) -> IntertwinedWitness:
    ell2 = len(ids)
    ell = ell2 // 2
    cols = len(ids[0])
    ih = hat_index(i, ell)
    sign = 1 if i <= ell else -1
    u_vars = tuple(ids[ih - 1])
    ut_vars = tuple(ids[i - 1])
    if cols == 1:
        return IntertwinedWitness(
            arity=arity, depth=1,
            u_vars=u_vars, utilde_vars=ut_vars, v_vars=(),
            w_vars=tuple(sorted(scope - set(u_vars) - set(ut_vars))),
            coeffs=(const_poly(arity, -sign),), beta=const_poly(arity, 0),
            mirror=-1,
        )
    drop = sorted((i - 1, ih - 1))
    shared = [row for r, row in enumerate(ids) if r not in drop]
    coeffs = []
    for k in range(cols):
        sub = [[row[c] for c in range(cols) if c != k] for row in shared]
        poly = _p_polymat(_poly_rows(arity, sub))
        poly = poly_scale(poly, sign if k % 2 == 1 else -sign)
        coeffs.append(poly)
    v_vars = tuple(sorted(v for row in shared for v in row))
    # coefficients 0 and 1 come from deleting columns 1 and 2; cycling the
    # leftover column to the back flips both invariants once
    n1 = [[row[c] for c in range(2, cols)] + [row[1]] for row in shared]
    n2 = [[row[c] for c in range(2, cols)] + [row[0]] for row in shared]
    raw = _p_pair_witness(n1, n2, arity, frozenset(v_vars))
    raw = scale_pair_witness(raw, sign, -1)
    return IntertwinedWitness(
        arity=arity, depth=raw.depth + 1,
        u_vars=u_vars, utilde_vars=ut_vars, v_vars=v_vars, w_vars=(),
        coeffs=tuple(coeffs), beta=const_poly(arity, 0),
        mirror=-1, child=(0, 1, raw),
    )


def _p_pair_witness(a_ids: list[list[int]], b_ids: list[list[int]], arity: int,
                    scope: frozenset[int]) -> IntertwinedWitness:
    """Witness for the invariants of two 2l x 2n blocks equal except in the
    last column; the coefficients are the shared block's row coefficients."""
    ell2 = len(a_ids)
    cols = len(a_ids[0])
    u_vars = tuple(row[-1] for row in a_ids)
    ut_vars = tuple(row[-1] for row in b_ids)
    shared = [row[:-1] for row in a_ids]
    coeffs = tuple(_b_polymat(_poly_rows(arity, shared), j)
                   for j in range(1, ell2 + 1))
    v_vars = tuple(sorted(v for row in shared for v in row))
    w_vars = tuple(sorted(scope - set(u_vars) - set(ut_vars) - set(v_vars)))
    child = _b_witness(shared, 1, arity, frozenset(v_vars))
    return IntertwinedWitness(
        arity=arity, depth=child.depth + 1,
        u_vars=u_vars, utilde_vars=ut_vars, v_vars=v_vars, w_vars=w_vars,
        coeffs=coeffs, beta=const_poly(arity, 0),
        child=(0, ell2 // 2, child),
    )


def b_pair_witness(ell: int, n: int,
                   i: int) -> tuple[SparsePoly, SparsePoly, IntertwinedWitness]:
    """The i-th and hat(i)-th row coefficients of a 2l x (2n-1) block, as an
    intertwined pair over the block's own variables."""
    if ell < 1 or n < 1 or ell < n:
        raise InvalidArgumentError(f"need ell >= n >= 1, got ell={ell}, n={n}")
    if ell > 2 or n > 2:
        raise ResourceLimitError(f"row-coefficient pairs are capped at ell=2, n=2")
    if not 1 <= i <= 2 * ell:
        raise InvalidArgumentError(f"row index {i} out of range 1..{2 * ell}")
    cols = 2 * n - 1
    arity = 2 * ell * cols
    ids = [[(r - 1) * cols + c for c in range(1, cols + 1)]
           for r in range(1, 2 * ell + 1)]
    rows = _poly_rows(arity, ids)
    F = _b_polymat(rows, i)
    Ft = _b_polymat(rows, hat_index(i, ell))
    witness = _b_witness(ids, i, arity, frozenset(range(1, arity + 1)))
    return F, Ft, witness

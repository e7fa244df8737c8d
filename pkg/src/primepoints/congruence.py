"""Power-of-two congruence machinery: the 2-adic factorial exponent, the
per-family epsilon, admissibility predicates for the six families, epsilon of
a concrete y-block, and exhaustive odd-residue reachability with witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import (
    HypothesisViolationError,
    InvalidArgumentError,
    ResourceLimitError,
    UndefinedEpsilonError,
    budget_limit,
)
from .invariants import (
    Decomposition,
    VarietyFamily,
    VarietyPoint,
    coordinate_count,
    decompose,
    delta_eval,
)
from .matrices import IntMatrix

_REACH_COMBO_BUDGET = 2 ** 22


def phi2(n: int) -> int:
    """Exponent of 2 in n!: n minus the binary digit sum of n."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return n - bin(n).count("1")


def _perm_s(n: int) -> int:
    # s = floor(log2(n+1))
    return (n + 1).bit_length() - 1


def epsilon_for_family(family: VarietyFamily) -> int:
    """The family's epsilon: the largest e such that 2^(e-1) divides every
    row coefficient F_i(y) at every odd y. At least 1 by definition."""
    kind = family.kind
    if kind == "det":
        return max(1, family.n - 1)
    if kind in ("quad", "pf", "haf"):
        return 1
    if kind == "rect":
        return 2 * family.n - 1
    # perm
    return max(1, family.n - _perm_s(family.n))


@dataclass(frozen=True)
class ObstructionReport:
    family: VarietyFamily
    m: int
    epsilon: int
    modulus: int
    admissible: bool
    admissible_class_description: tuple[int, int]  # (residue, class modulus)


def _admissible_class(family: VarietyFamily) -> tuple[int, int]:
    kind = family.kind
    n = family.n
    if kind == "det":
        return (0, 2 ** (n - 1))
    if kind == "quad":
        return ((n + family.k) % 2, 2)
    if kind in ("pf", "haf"):
        return (1, 2)
    if kind == "rect":
        return (0, 2 ** (2 * n - 1))
    s = _perm_s(n)
    if n == 2 ** s - 1:
        # statement modulus is twice 2^epsilon for these n; both appear in the report
        return (2 ** (n - s), 2 ** (n - s + 1))
    return (0, 2 ** (n - s))


def _check_theorem_hypotheses(family: VarietyFamily) -> None:
    kind, n = family.kind, family.n
    if kind in ("det", "quad", "perm") and n < 3:
        raise HypothesisViolationError(f"{kind} requires n >= 3, got n={n}")
    if kind in ("pf", "haf") and n < 2:
        raise HypothesisViolationError(f"{kind} requires n >= 2, got n={n}")
    if kind == "rect" and family.ell < 2:
        raise HypothesisViolationError(f"rect requires ell >= 2, got ell={family.ell}")


def obstruction_admits_primes(family: VarietyFamily, m: int) -> ObstructionReport:
    """Whether m passes the family's congruence class; errors outside the
    proven size range rather than extrapolating."""
    if m == 0:
        raise InvalidArgumentError("m must be nonzero")
    _check_theorem_hypotheses(family)
    residue, class_mod = _admissible_class(family)
    eps = epsilon_for_family(family)
    return ObstructionReport(
        family=family,
        m=m,
        epsilon=eps,
        modulus=2 ** eps,
        admissible=(m % class_mod == residue),
        admissible_class_description=(residue, class_mod),
    )


@dataclass(frozen=True)
class ReachabilitySet:
    family: VarietyFamily
    e: int
    modulus: int
    residues: tuple[int, ...]
    witnesses: dict[int, tuple[int, ...]]  # residue -> odd point coordinates


def assemble_point(family: VarietyFamily, xi: Sequence[int], y: Sequence[int],
                   z: Sequence[int]) -> VarietyPoint:
    """Inverse of the decomposition layout: place xi into its distinguished
    slots and y (plus z for quad) into the rest."""
    kind = family.kind
    n = family.n
    if kind == "quad":
        return VarietyPoint(family, tuple(xi) + tuple(y) + tuple(z))
    if kind in ("det", "perm"):
        return VarietyPoint(family, tuple(xi) + tuple(y))
    if kind in ("pf", "haf"):
        # first row of the upper triangle, then the remaining uppers
        return VarietyPoint(family, tuple(xi) + tuple(y))
    # rect: xi is the last column of a 2l x 2n matrix
    ell2 = 2 * family.ell
    width = 2 * n
    coords: list[int] = []
    yi = iter(y)
    for i in range(ell2):
        for j in range(width):
            coords.append(xi[i] if j == width - 1 else next(yi))
    return VarietyPoint(family, tuple(coords))


def block_sizes(family: VarietyFamily) -> tuple[int, int, int]:
    """(xi count, y count, z count) in the decomposition layout."""
    kind, n = family.kind, family.n
    if kind == "quad":
        return n, n, family.k
    if kind in ("det", "perm"):
        return n, n * (n - 1), 0
    if kind in ("pf", "haf"):
        d = 2 * n - 1
        return d, coordinate_count(family) - d, 0
    ell2 = 2 * family.ell
    return ell2, ell2 * (2 * n - 1), 0


def odd_residue_reachability(family: VarietyFamily, e: int) -> ReachabilitySet:
    """Exact set of residues the invariant attains mod 2^e on odd points.

    The xi block enters linearly, so residues are collected as
    sum F_i(y)*u_i + G(z) over odd residues u_i, y, z mod 2^e.
    """
    if e < 1:
        raise InvalidArgumentError(f"e must be >= 1, got {e}")
    mod = 2 ** e
    odd = tuple(range(1, mod, 2))
    n_xi, n_y, n_z = block_sizes(family)
    combos = len(odd) ** (n_xi + n_y + n_z)
    budget = budget_limit(_REACH_COMBO_BUDGET)
    if combos > budget:
        raise ResourceLimitError(
            f"{combos} odd residue combinations exceed the budget {budget}")
    witnesses: dict[int, tuple[int, ...]] = {}
    for yz in product(odd, repeat=n_y + n_z):
        y, z = yz[:n_y], yz[n_y:]
        base = assemble_point(family, (1,) * n_xi, y, z)
        dec = decompose(base)
        g = dec.g_value
        for u in product(odd, repeat=n_xi):
            r = (sum(f * ui for f, ui in zip(dec.f_values, u)) + g) % mod
            if r not in witnesses:
                point = assemble_point(family, u, y, z)
                witnesses[r] = point.coordinates
                if len(witnesses) == mod:
                    break
        if len(witnesses) == mod:
            break
    return ReachabilitySet(
        family=family,
        e=e,
        modulus=mod,
        residues=tuple(sorted(witnesses)),
        witnesses=witnesses,
    )


def _f_values_of_y(family: VarietyFamily, y: "IntMatrix | Sequence[int]") -> Decomposition:
    kind = family.kind
    if kind == "quad":
        yvals = tuple(int(v) for v in y)
        if len(yvals) != family.n:
            raise InvalidArgumentError(
                f"quad y-block needs {family.n} values, got {len(yvals)}")
        n_xi = family.n
        point = assemble_point(family, (1,) * n_xi, yvals, (1,) * family.k)
        return decompose(point)
    if not isinstance(y, IntMatrix):
        raise InvalidArgumentError(f"{kind} y-block must be an IntMatrix")
    n = family.n
    if kind in ("det", "perm"):
        want = (n - 1, n)
    elif kind in ("pf", "haf"):
        want = (2 * n - 1, 2 * n - 1)
    else:
        want = (2 * family.ell, 2 * n - 1)
    if (y.rows, y.cols) != want:
        raise InvalidArgumentError(
            f"{kind} y-block must be {want[0]}x{want[1]}, got {y.rows}x{y.cols}")
    if kind in ("pf", "haf"):
        # y is the matrix left after deleting the first row/column; its uppers
        # are the point's trailing coordinates
        from .invariants import upper_entries
        yvals = upper_entries(y)
    else:
        yvals = y.entries
    n_xi = block_sizes(family)[0]
    point = assemble_point(family, (1,) * n_xi, yvals, ())
    return decompose(point)


def epsilon_of_y(family: VarietyFamily, y: "IntMatrix | Sequence[int]") -> int:
    """Largest e with 2^(e-1) dividing every F_i(y); errors if all vanish."""
    dec = _f_values_of_y(family, y)
    nonzero = [abs(v) for v in dec.f_values if v != 0]
    if not nonzero:
        raise UndefinedEpsilonError("every coefficient F_i(y) is zero")
    return min((v & -v).bit_length() - 1 for v in nonzero) + 1

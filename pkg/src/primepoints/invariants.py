"""Exact polynomial invariants (determinant, permanent, Pfaffian, hafnian,
the symplectic-product polynomial on rectangular matrices, and the quadric
form), plus the row-coefficient decomposition of each into
sum_i F_i(y) * xi_i + G(z).

Family layouts for points are documented on VarietyPoint. Decomposition
distinguishes the first row for Det/Perm, the first row/column for Pf/Haf,
and the last column for the rectangular family.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidArgumentError, ResourceLimitError
from .matrices import IntMatrix, hat_index, matmul, minor, omega, transpose, z_select

_PERM_CAP = 20
_PF_CAP = 7  # half-order cap for the pf/hf entry points

_FAMILY_KINDS = ("det", "quad", "pf", "rect", "perm", "haf")


@dataclass(frozen=True)
class VarietyFamily:
    """Tagged union of the six families.

    kind: det | quad | pf | rect | perm | haf
    n: size parameter (matrix order for det/perm; half-order for pf/haf;
       column half-count for rect; vector length for quad)
    k: squares count, quad only
    ell: row half-count, rect only (ell >= n)
    """
    kind: str
    n: int
    k: int = 0
    ell: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _FAMILY_KINDS:
            raise InvalidArgumentError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise InvalidArgumentError(f"n must be >= 1, got {self.n}")
        if self.kind == "quad":
            if self.k < 0:
                raise InvalidArgumentError(f"k must be >= 0, got {self.k}")
        elif self.k != 0:
            raise InvalidArgumentError(f"k applies to quad only, got k={self.k}")
        if self.kind == "rect":
            if self.ell < self.n:
                raise InvalidArgumentError(
                    f"rect requires ell >= n, got ell={self.ell}, n={self.n}")
        elif self.ell != 0:
            raise InvalidArgumentError(f"ell applies to rect only, got ell={self.ell}")


def det_family(n: int) -> VarietyFamily:
    return VarietyFamily("det", n)


def quad_family(n: int, k: int) -> VarietyFamily:
    return VarietyFamily("quad", n, k=k)


def pf_family(n: int) -> VarietyFamily:
    return VarietyFamily("pf", n)


def rect_family(ell: int, n: int) -> VarietyFamily:
    return VarietyFamily("rect", n, ell=ell)


def perm_family(n: int) -> VarietyFamily:
    return VarietyFamily("perm", n)


def haf_family(n: int) -> VarietyFamily:
    return VarietyFamily("haf", n)


def coordinate_count(family: VarietyFamily) -> int:
    if family.kind in ("det", "perm"):
        return family.n * family.n
    if family.kind == "quad":
        return 2 * family.n + family.k
    if family.kind in ("pf", "haf"):
        return family.n * (2 * family.n - 1)
    return 2 * family.ell * 2 * family.n  # rect


@dataclass(frozen=True)
class VarietyPoint:
    """Integer point in a family-specific canonical layout.

    Det/Perm: n^2 entries row-major.
    Quad: (xi_1..xi_n, y_1..y_n, z_1..z_k).
    Pf/Haf: the n(2n-1) strictly-upper-triangle entries row by row.
    Rect: 2l x 2n entries row-major.
    """
    family: VarietyFamily
    coordinates: tuple[int, ...]

    def __post_init__(self) -> None:
        want = coordinate_count(self.family)
        if len(self.coordinates) != want:
            raise InvalidArgumentError(
                f"{self.family.kind} point needs {want} coordinates, "
                f"got {len(self.coordinates)}")


@dataclass(frozen=True)
class Decomposition:
    xi: tuple[int, ...]
    f_values: tuple[int, ...]
    g_value: int


def det(x: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not x.is_square():
        raise InvalidArgumentError(f"determinant needs a square matrix, got "
                                   f"{x.rows}x{x.cols}")
    n = x.rows
    if n == 0:
        return 1
    a = x.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def perm(x: IntMatrix) -> int:
    """Exact permanent, Ryser's inclusion-exclusion with Gray-code updates."""
    if not x.is_square():
        raise InvalidArgumentError(f"permanent needs a square matrix, got "
                                   f"{x.rows}x{x.cols}")
    n = x.rows
    if n > _PERM_CAP:
        raise ResourceLimitError(f"permanent cap is n <= {_PERM_CAP}, got {n}")
    if n == 0:
        return 1
    cols = [[x.entry(i, j) for i in range(1, n + 1)] for j in range(1, n + 1)]
    rowsum = [0] * n
    total = 0
    prev_gray = 0
    sign = 1 if n % 2 == 0 else -1  # (-1)^n, updated by subset parity below
    for counter in range(1, 1 << n):
        gray = counter ^ (counter >> 1)
        changed = gray ^ prev_gray
        j = changed.bit_length() - 1
        col = cols[j]
        if gray & changed:
            for i in range(n):
                rowsum[i] += col[i]
        else:
            for i in range(n):
                rowsum[i] -= col[i]
        prev_gray = gray
        prod = 1
        for s in rowsum:
            prod *= s
            if prod == 0:
                break
        if bin(gray).count("1") % 2 == 0:
            total += prod
        else:
            total -= prod
    return sign * total


def _check_antisymmetric(x: IntMatrix) -> None:
    if not x.is_square():
        raise InvalidArgumentError("antisymmetric matrix must be square")
    for i in range(1, x.rows + 1):
        if x.entry(i, i) != 0:
            raise InvalidArgumentError(f"diagonal entry ({i},{i}) must be 0")
        for j in range(i + 1, x.cols + 1):
            if x.entry(i, j) != -x.entry(j, i):
                raise InvalidArgumentError(
                    f"entries ({i},{j}) and ({j},{i}) are not opposite")


def _check_symmetric_zero_diag(x: IntMatrix) -> None:
    if not x.is_square():
        raise InvalidArgumentError("symmetric matrix must be square")
    for i in range(1, x.rows + 1):
        if x.entry(i, i) != 0:
            raise InvalidArgumentError(f"diagonal entry ({i},{i}) must be 0")
        for j in range(i + 1, x.cols + 1):
            if x.entry(i, j) != x.entry(j, i):
                raise InvalidArgumentError(
                    f"entries ({i},{j}) and ({j},{i}) differ")


def _pf_core(rows: list[list[int]], signed: bool) -> int:
    """First-row expansion with memoization over the surviving index subset.

    signed=True gives the Pfaffian, signed=False the hafnian.
    """
    n2 = len(rows)
    memo: dict[tuple[int, ...], int] = {}

    def rec(active: tuple[int, ...]) -> int:
        if not active:
            return 1
        got = memo.get(active)
        if got is not None:
            return got
        first = active[0]
        total = 0
        for pos in range(1, len(active)):
            j = active[pos]
            entry = rows[first][j]
            if entry != 0:
                rest = active[1:pos] + active[pos + 1:]
                term = entry * rec(rest)
                if signed and pos % 2 == 0:
                    total -= term
                else:
                    total += term
        memo[active] = total
        return total

    return rec(tuple(range(n2)))


def pf(x: IntMatrix) -> int:
    """Exact Pfaffian of an antisymmetric even-order matrix."""
    _check_antisymmetric(x)
    if x.rows % 2 != 0:
        raise InvalidArgumentError(f"Pfaffian needs even order, got {x.rows}")
    if x.rows > 2 * _PF_CAP:
        raise ResourceLimitError(f"Pfaffian cap is order {2 * _PF_CAP}, got {x.rows}")
    return _pf_core(x.to_rows(), signed=True)


def hf(x: IntMatrix) -> int:
    """Exact hafnian of a symmetric zero-diagonal even-order matrix."""
    _check_symmetric_zero_diag(x)
    if x.rows % 2 != 0:
        raise InvalidArgumentError(f"hafnian needs even order, got {x.rows}")
    if x.rows > 2 * _PF_CAP:
        raise ResourceLimitError(f"hafnian cap is order {2 * _PF_CAP}, got {x.rows}")
    return _pf_core(x.to_rows(), signed=False)


def big_p(x: IntMatrix, ell: int) -> int:
    """pf(x^T Omega_l x) for a 2l x 2n matrix with l >= n."""
    if ell < 1 or x.rows != 2 * ell:
        raise InvalidArgumentError(
            f"x must have 2*ell rows, got {x.rows} rows with ell={ell}")
    if x.cols % 2 != 0 or x.cols == 0 or x.cols > x.rows:
        raise InvalidArgumentError(
            f"x must be 2l x 2n with l >= n >= 1, got {x.rows}x{x.cols}")
    product = matmul(matmul(transpose(x), omega(ell)), x)
    return _pf_core(product.to_rows(), signed=True)


def quad_form(point: VarietyPoint) -> int:
    if point.family.kind != "quad":
        raise InvalidArgumentError(f"quad_form needs a quad point, got {point.family.kind}")
    n, k = point.family.n, point.family.k
    xi = point.coordinates[:n]
    y = point.coordinates[n:2 * n]
    z = point.coordinates[2 * n:]
    assert len(z) == k
    return sum(a * b for a, b in zip(xi, y)) + sum(c * c for c in z)


def point_matrix(point: VarietyPoint) -> IntMatrix:
    """The matrix a det/perm/pf/haf/rect point denotes."""
    fam = point.family
    if fam.kind in ("det", "perm"):
        return IntMatrix(fam.n, fam.n, point.coordinates)
    if fam.kind == "rect":
        return IntMatrix(2 * fam.ell, 2 * fam.n, point.coordinates)
    if fam.kind in ("pf", "haf"):
        n2 = 2 * fam.n
        entries = [[0] * n2 for _ in range(n2)]
        pos = 0
        for i in range(n2):
            for j in range(i + 1, n2):
                v = point.coordinates[pos]
                pos += 1
                entries[i][j] = v
                entries[j][i] = -v if fam.kind == "pf" else v
        return IntMatrix.from_rows(entries)
    raise InvalidArgumentError(f"{fam.kind} points do not denote a matrix")


def upper_entries(x: IntMatrix) -> tuple[int, ...]:
    return tuple(x.entry(i, j)
                 for i in range(1, x.rows + 1) for j in range(i + 1, x.cols + 1))


def delta_eval(point: VarietyPoint) -> int:
    fam = point.family
    if fam.kind == "det":
        return det(point_matrix(point))
    if fam.kind == "perm":
        return perm(point_matrix(point))
    if fam.kind == "pf":
        return pf(point_matrix(point))
    if fam.kind == "haf":
        return hf(point_matrix(point))
    if fam.kind == "rect":
        return big_p(point_matrix(point), fam.ell)
    return quad_form(point)


def _b_sign(i: int, ell: int) -> int:
    # Orientation of the (i, ihat) symplectic pairing: +1 below the fold.
    return 1 if i <= ell else -1


def b_coefficient(y: IntMatrix, i: int) -> int:
    """Column-expansion coefficient of the symplectic product polynomial,
    computed through the minor-expansion recursion.

    y has shape 2l x (2n-1); the coefficient multiplies xi_i when a 2l x 2n
    matrix with y as its first 2n-1 columns is expanded along its last column.
    """
    ell2, cols = y.rows, y.cols
    if ell2 % 2 != 0 or ell2 == 0 or cols % 2 != 1 or cols > ell2 - 1:
        raise InvalidArgumentError(
            f"y must be 2l x (2n-1) with l >= n >= 1, got {ell2}x{cols}")
    ell = ell2 // 2
    if not 1 <= i <= ell2:
        raise InvalidArgumentError(f"i must lie in 1..{ell2}, got {i}")
    ih = hat_index(i, ell)
    if cols == 1:
        return -_b_sign(i, ell) * y.entry(ih, 1)
    total = 0
    for k in range(1, cols + 1):
        sub = minor(y, sorted((i, ih)), (k,))
        term = y.entry(ih, k) * big_p(sub, ell - 1)
        total += -term if k % 2 == 1 else term
    return _b_sign(i, ell) * total


def b_coefficient_by_determinants(y: IntMatrix, i: int) -> int:
    """Same coefficient as b_coefficient, as a sum of (2n-1)x(2n-1) minors:
    determinants of the row-hat stacks over all (n-1)-subsets avoiding the
    pair of i.
    """
    ell2, cols = y.rows, y.cols
    if ell2 % 2 != 0 or ell2 == 0 or cols % 2 != 1 or cols > ell2 - 1:
        raise InvalidArgumentError(
            f"y must be 2l x (2n-1) with l >= n >= 1, got {ell2}x{cols}")
    ell = ell2 // 2
    if not 1 <= i <= ell2:
        raise InvalidArgumentError(f"i must lie in 1..{ell2}, got {i}")
    n = (cols + 1) // 2
    ih = hat_index(i, ell)
    base = i if i <= ell else i - ell
    total = 0
    for t in combinations([a for a in range(1, ell + 1) if a != base], n - 1):
        rows = list(y.row(ih))
        for tj in t:
            rows.extend(y.row(tj))
            rows.extend(y.row(hat_index(tj, ell)))
        stacked = IntMatrix(cols, cols, tuple(rows))
        total += det(stacked)
    return -_b_sign(i, ell) * total


def decompose(point: VarietyPoint) -> Decomposition:
    """Split the invariant as sum_i F_i(y) xi_i + G(z).

    xi is the first row (Det/Perm), the first row of the upper triangle
    (Pf/Haf), the xi block (Quad), or the last column (Rect).
    """
    fam = point.family
    if fam.kind == "quad":
        n, k = fam.n, fam.k
        xi = point.coordinates[:n]
        y = point.coordinates[n:2 * n]
        z = point.coordinates[2 * n:]
        return Decomposition(xi, y, sum(c * c for c in z))
    if fam.kind in ("det", "perm"):
        x = point_matrix(point)
        n = fam.n
        xi = x.row(1)
        y = minor(x, (1,), ())
        fvals = []
        for j in range(1, n + 1):
            sub = minor(y, (), (j,))
            val = det(sub) if fam.kind == "det" else perm(sub)
            if fam.kind == "det" and j % 2 == 0:
                val = -val
            fvals.append(val)
        return Decomposition(xi, tuple(fvals), 0)
    if fam.kind in ("pf", "haf"):
        x = point_matrix(point)
        n2 = 2 * fam.n
        xi = tuple(x.entry(1, j) for j in range(2, n2 + 1))
        y = minor(x, (1,), (1,))
        fvals = []
        for j in range(1, n2):
            sub = minor(y, (j,), (j,))
            val = pf(sub) if fam.kind == "pf" else hf(sub)
            if fam.kind == "pf" and j % 2 == 0:
                val = -val
            fvals.append(val)
        return Decomposition(xi, tuple(fvals), 0)
    # rect: expand along the last column
    x = point_matrix(point)
    last = 2 * fam.n
    xi = tuple(x.entry(i, last) for i in range(1, 2 * fam.ell + 1))
    y = minor(x, (), (last,))
    fvals = tuple(b_coefficient(y, i) for i in range(1, 2 * fam.ell + 1))
    return Decomposition(xi, fvals, 0)

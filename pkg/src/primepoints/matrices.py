"""Exact integer matrices, minors, and the structured matrices used throughout.

All indices at the public interface are 1-based. Entries are arbitrary
precision integers; JSON serialization uses decimal strings so nothing is
ever squeezed through a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InvalidArgumentError(
                f"matrix dimensions must be non-negative, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidArgumentError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")
        if any(not isinstance(e, int) or isinstance(e, bool) for e in self.entries):
            raise InvalidArgumentError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise InvalidArgumentError("ragged rows")
        return cls(r, c, tuple(int(e) for row in rows for e in row))

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise InvalidArgumentError(f"entry ({i},{j}) out of range for "
                                       f"{self.rows}x{self.cols}")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rows:
            raise InvalidArgumentError(f"row {i} out of range")
        base = (i - 1) * self.cols
        return self.entries[base:base + self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_json_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [str(e) for e in self.entries]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "IntMatrix":
        try:
            rows = int(data["rows"])
            cols = int(data["cols"])
            entries = tuple(int(e) for e in data["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"malformed matrix JSON: {exc}")
        return cls(rows, cols, entries)


def _check_index_set(indices: Iterable[int], bound: int, what: str) -> tuple[int, ...]:
    idx = tuple(indices)
    if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
        raise InvalidArgumentError(f"{what} must be strictly increasing: {idx}")
    if any(not 1 <= i <= bound for i in idx):
        raise InvalidArgumentError(f"{what} out of range 1..{bound}: {idx}")
    return idx


def minor(x: IntMatrix, delete_rows: Iterable[int], delete_cols: Iterable[int]) -> IntMatrix:
    """Remove the 1-based rows and columns listed; the input is unchanged."""
    dr = set(_check_index_set(sorted(set(delete_rows)), x.rows, "row index set"))
    dc = set(_check_index_set(sorted(set(delete_cols)), x.cols, "column index set"))
    kept_rows = [i for i in range(1, x.rows + 1) if i not in dr]
    kept_cols = [j for j in range(1, x.cols + 1) if j not in dc]
    entries = tuple(x.entry(i, j) for i in kept_rows for j in kept_cols)
    return IntMatrix(len(kept_rows), len(kept_cols), entries)


def identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(1 if i == j else 0
                                 for i in range(n) for j in range(n)))


def omega(ell: int) -> IntMatrix:
    """The 2l x 2l block matrix [[0, I], [-I, 0]]."""
    if ell < 1:
        raise InvalidArgumentError(f"omega needs l >= 1, got {ell}")
    n2 = 2 * ell
    entries = [0] * (n2 * n2)
    for i in range(ell):
        entries[i * n2 + (i + ell)] = 1
        entries[(i + ell) * n2 + i] = -1
    return IntMatrix(n2, n2, tuple(entries))


def hat_index(i: int, ell: int) -> int:
    """Pairing map on 1..2l: i and i+l swap, with representative in 1..2l."""
    if not 1 <= i <= 2 * ell:
        raise InvalidArgumentError(f"index {i} out of range 1..{2 * ell}")
    h = (i + ell) % (2 * ell)
    return h if h != 0 else 2 * ell


def z_select(x: IntMatrix, t: Iterable[int]) -> IntMatrix:
    """Stack rows R_t1, R_t1hat, ..., R_tk, R_tkhat of a 2l-row matrix."""
    if x.rows % 2 != 0 or x.rows == 0:
        raise InvalidArgumentError(f"z_select needs an even positive row count, got {x.rows}")
    ell = x.rows // 2
    idx = _check_index_set(t, ell, "t")
    out: list[int] = []
    for ti in idx:
        out.extend(x.row(ti))
        out.extend(x.row(hat_index(ti, ell)))
    return IntMatrix(2 * len(idx), x.cols, tuple(out))


def transpose(x: IntMatrix) -> IntMatrix:
    entries = tuple(x.entry(i, j)
                    for j in range(1, x.cols + 1) for i in range(1, x.rows + 1))
    return IntMatrix(x.cols, x.rows, entries)


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise InvalidArgumentError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    arows = a.to_rows()
    bcols = [[b.entry(i, j) for i in range(1, b.rows + 1)] for j in range(1, b.cols + 1)]
    entries = tuple(sum(r[k] * c[k] for k in range(a.cols))
                    for r in arows for c in bcols)
    return IntMatrix(a.rows, b.cols, entries)

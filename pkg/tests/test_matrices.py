"""IntMatrix layout, minors, the hat pairing, and omega."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primepoints.errors import InvalidArgumentError
from primepoints.matrices import (
    IntMatrix,
    hat_index,
    identity,
    matmul,
    minor,
    omega,
    transpose,
    z_select,
)


def test_entry_is_one_based():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.entry(1, 1) == 1
    assert m.entry(2, 1) == 3
    assert m.row(2) == (3, 4)


def test_shape_mismatch_rejected():
    with pytest.raises(InvalidArgumentError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(InvalidArgumentError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_entries_must_be_int():
    with pytest.raises(InvalidArgumentError):
        IntMatrix(1, 1, (1.5,))
    with pytest.raises(InvalidArgumentError):
        IntMatrix(1, 1, (True,))


def test_json_round_trip():
    m = IntMatrix.from_rows([[10 ** 30, -2], [0, 7]])
    assert IntMatrix.from_json_dict(m.to_json_dict()) == m


def test_minor_deletes_rows_and_cols():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert minor(m, (2,), (1,)).to_rows() == [[2, 3], [8, 9]]
    assert minor(m, (1, 3), ()).to_rows() == [[4, 5, 6]]


def test_minor_rejects_out_of_range():
    m = identity(3)
    with pytest.raises(InvalidArgumentError):
        minor(m, (4,), ())
    # duplicates collapse rather than erroring
    assert minor(m, (2, 2), ()).rows == 2


def test_omega_blocks():
    assert omega(1).to_rows() == [[0, 1], [-1, 0]]
    w = omega(2)
    assert w.rows == w.cols == 4
    assert w.entry(1, 3) == 1 and w.entry(3, 1) == -1
    assert w.entry(2, 4) == 1 and w.entry(4, 2) == -1
    assert w.entry(1, 2) == 0


def test_hat_index_is_an_involution():
    for ell in (1, 2, 3):
        for i in range(1, 2 * ell + 1):
            h = hat_index(i, ell)
            assert 1 <= h <= 2 * ell and h != i
            assert hat_index(h, ell) == i
    assert hat_index(1, 2) == 3
    assert hat_index(4, 2) == 2


def test_z_select_stacks_row_pairs():
    # 4 rows, ell=2: t=(1,) stacks row 1 and row hat(1)=3
    m = IntMatrix.from_rows([[1, 2], [3, 4], [5, 6], [7, 8]])
    assert z_select(m, (1,)).to_rows() == [[1, 2], [5, 6]]
    assert z_select(m, (2,)).to_rows() == [[3, 4], [7, 8]]
    assert z_select(m, (1, 2)).rows == 4


def test_z_select_requires_increasing_t():
    m = IntMatrix.from_rows([[1, 2], [3, 4], [5, 6], [7, 8]])
    with pytest.raises(InvalidArgumentError):
        z_select(m, (2, 1))


def test_matmul_and_transpose():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[5, 6], [7, 8]])
    assert matmul(a, b).to_rows() == [[19, 22], [43, 50]]
    assert transpose(a).to_rows() == [[1, 3], [2, 4]]


@given(st.lists(st.lists(st.integers(-100, 100), min_size=2, max_size=4),
                min_size=2, max_size=4).filter(
                    lambda rows: len({len(r) for r in rows}) == 1))
def test_transpose_involutive(rows):
    m = IntMatrix.from_rows(rows)
    assert transpose(transpose(m)) == m

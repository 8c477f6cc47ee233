"""Dense square matrices of Python integers.

Entries are arbitrary-precision ints, so nothing here can overflow.  Matrices
are immutable values; every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.rows)
        for r in self.rows:
            if len(r) != m:
                raise ValueError(f"matrix is not square: row of length {len(r)} in a {m}-row matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


def identity(m: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))


def zeros(m: int) -> IntMatrix:
    return IntMatrix(tuple((0,) * m for _ in range(m)))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} x {b.dim}")
    cols = list(zip(*b.rows))
    return IntMatrix(
        tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a.rows)
    )


def mat_pow(a: IntMatrix, n: int) -> IntMatrix:
    """Return ``a**n`` by binary exponentiation; ``a**0`` is the identity."""
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    result = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return identity(a.dim) if result is None else result


def trace(a: IntMatrix) -> int:
    return sum(a.rows[i][i] for i in range(a.dim))


def sum_all(a: IntMatrix) -> int:
    return sum(sum(r) for r in a.rows)


def sum_off_diagonal(a: IntMatrix) -> int:
    return sum_all(a) - trace(a)


def mask_indices(mask: int, width: int) -> list[int]:
    if mask >> width:
        raise ValueError(f"mask {mask:#x} has bits at or above width {width}")
    return [i for i in range(width) if mask >> i & 1]


def delete_rows_cols(a: IntMatrix, keep: int) -> IntMatrix:
    """Principal submatrix on the indices whose bits are set in ``keep``."""
    idx = mask_indices(keep, a.dim)
    rows = a.rows
    return IntMatrix(tuple(tuple(rows[i][j] for j in idx) for i in idx))

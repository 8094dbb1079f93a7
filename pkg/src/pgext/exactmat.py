"""Exact integer matrices and Smith normal form with transformation matrices.

Everything here runs on Python's arbitrary-precision integers; there is no
floating point and no overflow. Matrices are immutable, so they can be
hashed, shared between threads and used as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

__all__ = ["IntMatrix", "SNFResult", "snf", "p_valuation"]


class IntMatrix:
    """An immutable rows x cols matrix of Python ints, stored row-major.

    >>> m = IntMatrix([[1, 2], [3, 4]])
    >>> m[0, 1]
    2
    >>> (m @ IntMatrix.identity(2)) == m
    True
    >>> m.det()
    -2
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(row) for row in entries)
        if data:
            ncols = len(data[0])
            if cols is not None and cols != ncols:
                raise ValidationError("bad_matrix", "explicit cols disagrees with row length")
        else:
            ncols = 0 if cols is None else cols
        for row in data:
            if len(row) != ncols:
                raise ValidationError("bad_matrix", "rows have unequal lengths")
            for x in row:
                if not isinstance(x, int):
                    raise ValidationError("bad_matrix", f"non-integer entry {x!r}")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError("shape_mismatch", f"cannot multiply {self.shape} by {other.shape}")
        ot = other.data
        return IntMatrix(
            [
                [sum(a * ot[k][j] for k, a in enumerate(row)) for j in range(other.cols)]
                for row in self.data
            ],
            cols=other.cols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValidationError("shape_mismatch", f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self.data], cols=self.cols)

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for row in self.data for x in row)

    def det(self) -> int:
        """Determinant by the Bareiss fraction-free elimination (exact).

        >>> IntMatrix([[2, 0], [1, 2]]).det()
        4
        >>> IntMatrix([], cols=0).det()
        1
        """
        if self.rows != self.cols:
            raise ValidationError("shape_mismatch", "determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form D = U @ M @ V of the input M.

    D is diagonal with non-negative entries d1 | d2 | ... (zeros trailing);
    U and V are square and unimodular.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[k, k] for k in range(min(self.D.rows, self.D.cols)))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) > 0 and x*a + y*b = g."""
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


def snf(matrix: IntMatrix) -> SNFResult:
    """Smith normal form with transforms: returns (D, U, V) with U @ M @ V = D.

    Deterministic: the pivot is always the smallest-|entry| nonzero of the
    trailing block, ties broken in row-major scan order. Diagonal entries
    are normalized non-negative with the sign pushed into U.
    """
    if matrix.rows == 0 or matrix.cols == 0:
        raise ValidationError("empty_matrix", "Smith normal form needs a non-empty matrix")
    nrows, ncols = matrix.rows, matrix.cols
    d = [list(row) for row in matrix.data]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(a, b):
        d[a], d[b] = d[b], d[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for m in (d, v):
            for row in m:
                row[a], row[b] = row[b], row[a]

    def combine_rows(a, b, w, x, y, z):
        # rows (a, b) <- (w*row_a + x*row_b, y*row_a + z*row_b), det wz - xy = +-1
        for m in (d, u):
            ra, rb = m[a], m[b]
            m[a] = [w * p + x * q for p, q in zip(ra, rb)]
            m[b] = [y * p + z * q for p, q in zip(ra, rb)]

    def combine_cols(a, b, w, x, y, z):
        for m in (d, v):
            for row in m:
                p, q = row[a], row[b]
                row[a] = w * p + x * q
                row[b] = y * p + z * q

    def clear_in_column(t, i):
        # zero d[i][t] against the pivot d[t][t] by a unimodular row op
        a, b = d[t][t], d[i][t]
        if b % a == 0:
            combine_rows(t, i, 1, 0, -(b // a), 1)
        else:
            g, x, y = _xgcd(a, b)
            combine_rows(t, i, x, y, -(b // g), a // g)

    def clear_in_row(t, j):
        a, b = d[t][t], d[t][j]
        if b % a == 0:
            combine_cols(t, j, 1, 0, -(b // a), 1)
        else:
            g, x, y = _xgcd(a, b)
            combine_cols(t, j, x, y, -(b // g), a // g)

    for t in range(min(nrows, ncols)):
        best = None
        where = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                e = d[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    where = (i, j)
        if where is None:
            break
        if where[0] != t:
            swap_rows(t, where[0])
        if where[1] != t:
            swap_cols(t, where[1])
        while True:
            for i in range(t + 1, nrows):
                if d[i][t] != 0:
                    clear_in_column(t, i)
            for j in range(t + 1, ncols):
                if d[t][j] != 0:
                    clear_in_row(t, j)
            if any(d[i][t] != 0 for i in range(t + 1, nrows)):
                continue  # column ops dirtied the pivot column; go again
            pivot = d[t][t]
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if d[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull the non-divisible row up next to the pivot and re-reduce;
            # |pivot| strictly shrinks, so this terminates
            combine_rows(t, offender, 1, 1, 0, 1)

    for k in range(min(nrows, ncols)):
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            u[k] = [-x for x in u[k]]

    return SNFResult(D=IntMatrix(d, cols=ncols), U=IntMatrix(u), V=IntMatrix(v))


def p_valuation(n: int, p: int) -> int:
    """Largest k such that p**k divides n.

    >>> p_valuation(8, 2)
    3
    >>> p_valuation(5, 2)
    0
    """
    if n == 0:
        raise ValidationError("zero_input", "valuation of 0 is undefined")
    if p < 2:
        raise ValidationError("not_prime", f"{p} is not a prime")
    k = 0
    m = abs(n)
    while m % p == 0:
        m //= p
        k += 1
    return k

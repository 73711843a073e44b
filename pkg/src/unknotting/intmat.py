"""Exact integer/rational linear algebra on small dense symmetric matrices.

Everything here works with arbitrary-precision Python ints and
fractions.Fraction; no floating point is used anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class SingularFormError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionError("matrix dimensions must be positive")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise DimensionError("ragged rows")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return IntMatrix(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def diag(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("incompatible shapes for product")
        bt = list(zip(*other.entries))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def submatrix(self, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(self.entries[i][j] for j in keep_cols) for i in keep_rows)
        )

    def leading_minor(self, k: int) -> int:
        idx = range(k)
        return det_exact(self.submatrix(idx, idx))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @staticmethod
    def from_json(data) -> "IntMatrix":
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("expected a JSON array of arrays of integers")
        for row in data:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("matrix entries must be integers")
        return IntMatrix.from_rows(data)

    def __str__(self) -> str:
        return json.dumps(self.to_json())


def det_exact(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: IntMatrix) -> IntMatrix:
    """Classical adjugate; adj(M)·M = det(M)·I."""
    if not m.is_square():
        raise DimensionError("adjugate of a non-square matrix")
    n = m.rows
    if n == 1:
        return IntMatrix.from_rows([[1]])
    idx = list(range(n))
    rows = []
    for j in range(n):
        row = []
        for i in range(n):
            keep_r = [r for r in idx if r != i]
            keep_c = [c for c in idx if c != j]
            cof = det_exact(m.submatrix(keep_r, keep_c))
            if (i + j) % 2:
                cof = -cof
            row.append(cof)
        rows.append(row)
    return IntMatrix.from_rows(rows)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a matrix with determinant +-1."""
    d = det_exact(m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = adjugate(m)
    if d == 1:
        return adj
    return IntMatrix.from_rows([[-x for x in row] for row in adj.entries])


def quadratic_value(q: IntMatrix, xi: Sequence[int]) -> Fraction:
    """xi^T Q^{-1} xi, exactly, via the adjugate."""
    if not q.is_square():
        raise DimensionError("form matrix must be square")
    if len(xi) != q.rows:
        raise DimensionError("vector length mismatch")
    d = det_exact(q)
    if d == 0:
        raise SingularFormError("form is singular")
    adj = adjugate(q)
    s = sum(xi[i] * adj.entries[i][j] * xi[j] for i in range(q.rows) for j in range(q.rows))
    return Fraction(s, d)


@dataclass(frozen=True)
class SnfDecomposition:
    """U·M·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... ."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(x for x in self.d.diag() if x != 1)


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a, dst, src, c):
    a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]


def _add_col(a, dst, src, c):
    for row in a:
        row[dst] += c * row[src]


def _scale_row(a, i, c):
    a[i] = [c * x for x in a[i]]


def smith_normal_form(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transform tracking.

    Pivots are chosen as the minimal-absolute-value nonzero entry of the
    remaining block, which keeps intermediate entries small and makes the
    result deterministic.
    """
    if not m.is_square():
        raise DimensionError("SNF implemented for square matrices")
    n = m.rows
    if det_exact(m) == 0:
        raise SingularFormError("SNF requires nonzero determinant here")
    a = [list(row) for row in m.entries]
    u = [list(row) for row in IntMatrix.identity(n).entries]
    v = [list(row) for row in IntMatrix.identity(n).entries]

    for t in range(n):
        while True:
            # minimal |nonzero| pivot in the trailing block
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            pi, pj = best
            if pi != t:
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(a, t, pj)
                _swap_cols(v, t, pj)
            p = a[t][t]
            done = True
            for i in range(t + 1, n):
                q, r = divmod(a[i][t], p)
                if r != 0:
                    done = False
                if q != 0:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
            for j in range(t + 1, n):
                q, r = divmod(a[t][j], p)
                if r != 0:
                    done = False
                if q != 0:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
            if not done:
                continue
            if any(a[i][t] for i in range(t + 1, n)) or any(
                a[t][j] for j in range(t + 1, n)
            ):
                continue
            # enforce divisibility of the trailing block by the pivot
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(a, t, bad, 1)
            _add_row(u, t, bad, 1)
        if a[t][t] < 0:
            _scale_row(a, t, -1)
            _scale_row(u, t, -1)

    return SnfDecomposition(
        u=IntMatrix.from_rows(u), d=IntMatrix.from_rows(a), v=IntMatrix.from_rows(v)
    )


def rational_to_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)

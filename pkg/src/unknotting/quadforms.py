"""Form-level predicates and transforms on symmetric integer matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import IntMatrix, det_exact


class ParityError(ValueError):
    pass


def is_positive_definite(m: IntMatrix) -> bool:
    """Sylvester criterion: all leading principal minors positive."""
    if not m.is_symmetric():
        raise ValueError("positive-definiteness is only defined for symmetric matrices")
    return all(m.leading_minor(k) > 0 for k in range(1, m.rows + 1))


def is_identity_mod2(m: IntMatrix) -> bool:
    if not m.is_square():
        return False
    return all(
        m.entries[i][j] % 2 == (1 if i == j else 0)
        for i in range(m.rows)
        for j in range(m.rows)
    )


def lift_tilde(q: IntMatrix) -> IntMatrix:
    """Double the rank by the 2x2-block substitution.

    Odd entries 2m-1 become [[m,1],[1,2]] on the diagonal; even entries 2a
    become [[a,0],[0,0]] off the diagonal.  The result has the same
    determinant as the input.
    """
    if not q.is_symmetric():
        raise ValueError("lift requires a symmetric matrix")
    if not is_identity_mod2(q):
        raise ParityError("lift requires odd diagonal and even off-diagonal entries")
    r = q.rows
    out = [[0] * (2 * r) for _ in range(2 * r)]
    for i in range(r):
        m = (q.entries[i][i] + 1) // 2
        out[2 * i][2 * i] = m
        out[2 * i][2 * i + 1] = 1
        out[2 * i + 1][2 * i] = 1
        out[2 * i + 1][2 * i + 1] = 2
        for j in range(r):
            if j == i:
                continue
            out[2 * i][2 * j] = q.entries[i][j] // 2
    return IntMatrix.from_rows(out)


def diag_mod4_census(q: IntMatrix) -> int:
    """Number of diagonal entries congruent to 3 mod 4."""
    count = 0
    for x in q.diag():
        if x % 2 == 0:
            raise ParityError("diagonal entries must be odd")
        if x % 4 == 3:
            count += 1
    return count


def reduce_basis(q: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Greedy size reduction; returns (Q', P) with Q' = P·Q·P^T, P unimodular.

    Repeatedly replaces a basis vector v_i by v_i - k·v_j (integer k chosen
    to minimize the new diagonal entry) while that strictly decreases the
    diagonal product.  The tracked transform lets callers transport group
    labels between the two forms.
    """
    if not q.is_symmetric():
        raise ValueError("basis reduction requires a symmetric matrix")
    n = q.rows
    a = [list(row) for row in q.entries]
    p = [list(row) for row in IntMatrix.identity(n).entries]

    def apply(i: int, j: int, k: int) -> None:
        # v_i <- v_i - k v_j
        for t in range(n):
            a[i][t] -= k * a[j][t]
        for t in range(n):
            a[t][i] -= k * a[t][j]
        for t in range(n):
            p[i][t] -= k * p[j][t]

    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or a[j][j] == 0:
                    continue
                k = _nearest_int(a[i][j], a[j][j])
                if k == 0:
                    continue
                new_diag = a[i][i] - 2 * k * a[i][j] + k * k * a[j][j]
                if new_diag < a[i][i]:
                    apply(i, j, k)
                    changed = True
    return IntMatrix.from_rows(a), IntMatrix.from_rows(p)


def _nearest_int(num: int, den: int) -> int:
    """Round num/den to a nearest integer (ties broken downward)."""
    if den < 0:
        num, den = -num, -den
    q, r = divmod(num, den)
    if 2 * r > den:
        return q + 1
    return q


@dataclass(frozen=True)
class FormCandidate:
    """A candidate linking form together with its block lift."""

    q: IntMatrix
    lift: IntMatrix
    neg_count: int

    @staticmethod
    def from_form(q: IntMatrix) -> "FormCandidate":
        return FormCandidate(q=q, lift=lift_tilde(q), neg_count=diag_mod4_census(q))

    @staticmethod
    def from_triple(m1: int, a: int, m2: int) -> "FormCandidate":
        q = IntMatrix.from_rows([[2 * m1 - 1, 2 * a], [2 * a, 2 * m2 - 1]])
        return FormCandidate.from_form(q)

    def triple(self) -> tuple[int, int, int] | None:
        if self.q.rows != 2:
            return None
        return (
            (self.q.entries[0][0] + 1) // 2,
            self.q.entries[0][1] // 2,
            (self.q.entries[1][1] + 1) // 2,
        )


def check_lift_minors(q: IntMatrix) -> bool:
    """Minor identities tying a form to its lift (used by the test suite)."""
    qt = lift_tilde(q)
    deltas = [1] + [qt.leading_minor(k) for k in range(1, qt.rows + 1)]
    for k in range(1, q.rows + 1):
        if deltas[2 * k] != q.leading_minor(k):
            return False
        if 2 * deltas[2 * k - 1] != deltas[2 * k - 2] + deltas[2 * k]:
            return False
    return det_exact(qt) == det_exact(q)

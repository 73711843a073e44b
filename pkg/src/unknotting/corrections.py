"""Correction-term functions by exact minimization over characteristic covectors.

For a positive-definite symmetric Q with odd determinant, the value at a
group element g is the minimum of (xi^T Q^{-1} xi - r) / 4 over the
characteristic covectors xi in the coset g.  The minimization runs over the
finite box -Q_ii <= xi_i <= Q_ii - 2 and tracks only integer numerators, so
it is exact throughout.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .intmat import (
    IntMatrix,
    SingularFormError,
    adjugate,
    det_exact,
    inverse_unimodular,
    smith_normal_form,
)
from .quadforms import is_positive_definite

Label = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group presented by a square integer matrix.

    Elements are labelled by tuples modulo the invariant factors; the
    projection from integer vectors is read off a Smith decomposition
    U·Q·V = D, under which x maps to (U·x) mod D on the nontrivial factors.
    """

    invariant_factors: tuple[int, ...]
    rank: int
    u: IntMatrix
    u_inv: IntMatrix
    nontrivial: tuple[int, ...]  # indices of diagonal entries > 1

    @staticmethod
    def from_form(q: IntMatrix) -> "AbelianGroup":
        snf = smith_normal_form(q)
        diag = snf.d.diag()
        nontrivial = tuple(i for i, d in enumerate(diag) if d != 1)
        return AbelianGroup(
            invariant_factors=tuple(diag[i] for i in nontrivial),
            rank=q.rows,
            u=snf.u,
            u_inv=inverse_unimodular(snf.u),
            nontrivial=nontrivial,
        )

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def zero(self) -> Label:
        return (0,) * len(self.invariant_factors)

    def project(self, xi: Sequence[int]) -> Label:
        y = self.u.mul_vec(xi)
        return tuple(y[i] % d for i, d in zip(self.nontrivial, self.invariant_factors))

    def representative(self, label: Label) -> tuple[int, ...]:
        e = [0] * self.rank
        for i, a in zip(self.nontrivial, label):
            e[i] = a
        return self.u_inv.mul_vec(e)

    def elements(self) -> Iterator[Label]:
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def neg(self, label: Label) -> Label:
        return tuple((-a) % d for a, d in zip(label, self.invariant_factors))

    def add(self, x: Label, y: Label) -> Label:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def scale(self, k: int, x: Label) -> Label:
        return tuple((k * a) % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x: Label) -> int:
        import math

        order = 1
        for a, d in zip(x, self.invariant_factors):
            order = math.lcm(order, d // math.gcd(a, d))
        return order


def coset_label(group: AbelianGroup, xi: Sequence[int]) -> Label:
    """Group element of a covector; the zero label is the spin structure."""
    return group.project(xi)


def characteristic_box(q: IntMatrix) -> Iterator[tuple[int, ...]]:
    """All covectors with xi_i = Q_ii mod 2 and -Q_ii <= xi_i <= Q_ii - 2,
    in lexicographic order.  Exactly prod(Q_ii) of them."""
    ranges = [range(-d, d - 1, 2) for d in q.diag()]
    return itertools.product(*ranges)


def box_size(q: IntMatrix) -> int:
    n = 1
    for d in q.diag():
        n *= d
    return n


@dataclass(frozen=True)
class CorrectionTable:
    form: IntMatrix
    group: AbelianGroup
    values: dict[Label, Fraction]
    argmin_witness: Optional[dict[Label, tuple[int, ...]]] = None

    @property
    def spin_value(self) -> Fraction:
        return self.values[self.group.zero]

    def min_nonspin(self) -> Fraction:
        zero = self.group.zero
        return min(v for g, v in self.values.items() if g != zero)

    def value_multiset(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.values.values()))

    def to_json(self) -> dict:
        return {
            "factors": list(self.group.invariant_factors),
            "values": {
                _label_str(g): str(v) for g, v in sorted(self.values.items())
            },
        }


def _label_str(label: Label) -> str:
    return "(" + ",".join(str(a) for a in label) + ")"


def _scan_box(args):
    """Minimize the covector numerator per coset over one slice of the box.

    Top-level so it can run in a worker process.  Returns
    {label: (numerator, argmin covector)} with the lexicographically first
    argmin per label.
    """
    entries, adj_entries, u_entries, nontrivial, factors, first_values = args
    r = len(entries)
    diag = [entries[i][i] for i in range(r)]
    ranges = [range(-d, d - 1, 2) for d in diag[1:]]
    adj = adj_entries
    u = u_entries
    best: dict[Label, tuple[int, tuple[int, ...]]] = {}
    for x0 in first_values:
        for rest in itertools.product(*ranges):
            xi = (x0,) + rest
            s = 0
            for i in range(r):
                row = adj[i]
                xii = xi[i]
                if xii:
                    s += xii * sum(row[j] * xi[j] for j in range(r))
            label = tuple(
                sum(u[i][j] * xi[j] for j in range(r)) % d
                for i, d in zip(nontrivial, factors)
            )
            cur = best.get(label)
            if cur is None or s < cur[0]:
                best[label] = (s, xi)
    return best


def correction_table(
    q: IntMatrix, jobs: int = 1, with_witness: bool = True
) -> CorrectionTable:
    """Exact correction-term table of a positive-definite odd-determinant form.

    The box may be partitioned along the first coordinate and evaluated in
    parallel; partial minima are merged in partition order so the argmin
    tie-break (first in lexicographic order) is independent of scheduling.
    """
    if not q.is_symmetric():
        raise ValueError("form must be symmetric")
    if not is_positive_definite(q):
        raise ValueError("form must be positive-definite")
    det = det_exact(q)
    if det % 2 == 0:
        raise SingularFormError("even determinant is not supported")
    r = q.rows
    group = AbelianGroup.from_form(q)
    adj = adjugate(q)

    d0 = q.entries[0][0]
    first_values = list(range(-d0, d0 - 1, 2))
    base = (
        q.entries,
        adj.entries,
        group.u.entries,
        group.nontrivial,
        group.invariant_factors,
    )
    if jobs > 1 and len(first_values) > 1:
        chunks = [first_values[i::jobs] for i in range(jobs)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(_scan_box, [base + (c,) for c in chunks]))
        # merge deterministically: smaller numerator wins, ties go to the
        # lexicographically earlier argmin
        best: dict[Label, tuple[int, tuple[int, ...]]] = {}
        for part in partials:
            for label, (s, xi) in part.items():
                cur = best.get(label)
                if cur is None or s < cur[0] or (s == cur[0] and xi < cur[1]):
                    best[label] = (s, xi)
    else:
        best = _scan_box(base + (first_values,))

    values = {
        label: Fraction(s - r * det, 4 * det) for label, (s, _) in best.items()
    }
    witness = {label: xi for label, (_, xi) in best.items()} if with_witness else None
    if len(values) != group.order:
        raise AssertionError("characteristic box missed a coset")
    return CorrectionTable(form=q, group=group, values=values, argmin_witness=witness)


def transport_table(table: CorrectionTable, p: IntMatrix) -> CorrectionTable:
    """Relabel a table through the congruence Q -> P·Q·P^T.

    On covectors the congruence acts by xi -> P·xi, which preserves both the
    quadratic value and the characteristic condition, so the value multiset
    is unchanged; only the group labels move.
    """
    if det_exact(p) not in (1, -1):
        raise ValueError("transform must be unimodular")
    src = table.group
    q_dst = (p @ table.form) @ p.transpose()
    dst = AbelianGroup.from_form(q_dst)
    values: dict[Label, Fraction] = {}
    witness: Optional[dict[Label, tuple[int, ...]]] = (
        {} if table.argmin_witness is not None else None
    )
    for label, v in table.values.items():
        rep = src.representative(label)
        new_label = dst.project(p.mul_vec(rep))
        values[new_label] = v
        if witness is not None:
            witness[new_label] = p.mul_vec(table.argmin_witness[label])
    if len(values) != len(table.values):
        raise AssertionError("transport was not a bijection")
    return CorrectionTable(
        form=q_dst, group=dst, values=values, argmin_witness=witness
    )


def table_fingerprint(q: IntMatrix, jobs: int = 1) -> tuple:
    """(invariant factors, sorted value multiset) of a form's table.

    Both parts are invariant under unimodular congruence, so the basis is
    reduced first to shrink the covector box.
    """
    from .quadforms import reduce_basis

    reduced, _ = reduce_basis(q)
    table = correction_table(reduced, jobs=jobs, with_witness=False)
    return (table.group.invariant_factors, table.value_multiset())

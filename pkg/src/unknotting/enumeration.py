"""Enumeration of candidate linking forms for a given determinant.

Rank 2 is handled exactly by the triple parametrization
Q = [[2m1-1, 2a], [2a, 2m2-1]] with 0 <= a < m1 <= m2.  For rank >= 3 a
sound superset of the classes congruent to the identity mod 2 (up to
congruence by unimodular matrices that are the identity mod 2) is built in
two stages:

  1. enumerate representatives of all positive-definite classes of the
     given determinant via a Minkowski-reduced scan (for rank 3 the reduced
     diagonal product is classically bounded by twice the determinant);
  2. push each representative through lifts of the GL(r, F_2) coset
     representatives and keep the images that are congruent to the identity
     mod 2 with the requested number of diagonal entries = 3 mod 4.

Stage 2 is exhaustive over the cosets of the mod-2 congruence subgroup, so
every admissible class is hit at least once; duplicates are pruned by an
exact canonical form and, optionally, by correction-table fingerprint.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import isqrt

from .corrections import AbelianGroup, table_fingerprint
from .intmat import IntMatrix, det_exact, smith_normal_form
from .quadforms import (
    diag_mod4_census,
    is_identity_mod2,
    is_positive_definite,
)


def enumerate_rank2(delta: int, n: int) -> list[tuple[int, int, int]]:
    """All triples (m1, a, m2) with (2m1-1)(2m2-1) - 4a^2 = delta,
    0 <= a < m1 <= m2 and exactly n of {m1, m2} even."""
    if delta <= 0 or delta % 2 == 0:
        raise ValueError("determinant must be odd and positive")
    if n not in (0, 1, 2):
        raise ValueError("n must be 0, 1 or 2")
    out = []
    for a in range(0, (delta - 1) // 4 + 1):
        big = delta + 4 * a * a
        for d1 in range(1, isqrt(big) + 1, 2):
            if big % d1 != 0:
                continue
            d2 = big // d1
            m1 = (d1 + 1) // 2
            m2 = (d2 + 1) // 2
            if not a < m1 <= m2:
                continue
            if (m1 % 2 == 0) + (m2 % 2 == 0) != n:
                continue
            out.append((m1, a, m2))
    return sorted(out)


def triple_form(m1: int, a: int, m2: int) -> IntMatrix:
    return IntMatrix.from_rows([[2 * m1 - 1, 2 * a], [2 * a, 2 * m2 - 1]])


def _minkowski_classes_rank2(delta: int) -> list[IntMatrix]:
    # reduced binary forms: 0 <= 2b <= d1 <= d2
    out = []
    d1 = 1
    while 3 * d1 * d1 <= 4 * delta:
        for b in range(0, d1 // 2 + 1):
            num = delta + b * b
            if num % d1 == 0 and num // d1 >= d1:
                out.append(IntMatrix.from_rows([[d1, b], [b, num // d1]]))
        d1 += 1
    return out


def _minkowski_classes_rank3(delta: int) -> list[IntMatrix]:
    # reduced ternary forms satisfy d1 <= d2 <= d3, |2 q_ij| <= d_i (i < j),
    # and d1 d2 d3 <= 2 delta; solve for d3 from the determinant
    out = []
    d1 = 1
    while d1 ** 3 <= 2 * delta:
        d2 = d1
        while d1 * d2 * d2 <= 2 * delta:
            for q12 in range(-(d1 // 2), d1 // 2 + 1):
                det2 = d1 * d2 - q12 * q12
                if det2 <= 0:
                    continue
                for q13 in range(-(d1 // 2), d1 // 2 + 1):
                    for q23 in range(-(d2 // 2), d2 // 2 + 1):
                        num = delta + d1 * q23 * q23 - 2 * q12 * q13 * q23 + d2 * q13 * q13
                        if num % det2 != 0:
                            continue
                        d3 = num // det2
                        if d3 < d2 or d1 * d2 * d3 > 2 * delta:
                            continue
                        m = IntMatrix.from_rows(
                            [[d1, q12, q13], [q12, d2, q23], [q13, q23, d3]]
                        )
                        if is_positive_definite(m):
                            out.append(m)
            d2 += 1
        d1 += 1
    return out


def _minkowski_classes_generic(r: int, delta: int) -> list[IntMatrix]:
    # bounded scan for experimental ranks >= 4; diagonal product bound
    # 2^(r-2) * delta, off-diagonals |2 q_ij| <= d_i
    bound = (1 << (r - 2)) * delta
    out = []

    def diags(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        start = prefix[-1] if prefix else 1
        d = start
        prod = 1
        for x in prefix:
            prod *= x
        while prod * d ** remaining <= bound:
            yield from diags(prefix + [d], remaining - 1)
            d += 1

    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for diag in diags([], r):
        ranges = [range(-(diag[i] // 2), diag[i] // 2 + 1) for i, _ in pairs]
        for offs in itertools.product(*ranges):
            m = [[0] * r for _ in range(r)]
            for i in range(r):
                m[i][i] = diag[i]
            for (i, j), v in zip(pairs, offs):
                m[i][j] = v
                m[j][i] = v
            mm = IntMatrix.from_rows(m)
            if det_exact(mm) == delta and is_positive_definite(mm):
                out.append(mm)
    return out


def minkowski_classes(r: int, delta: int) -> list[IntMatrix]:
    """At least one representative per GL(r, Z)-class of positive-definite
    forms with the given determinant (duplicates permitted)."""
    if r == 1:
        return [IntMatrix.from_rows([[delta]])]
    if r == 2:
        return _minkowski_classes_rank2(delta)
    if r == 3:
        return _minkowski_classes_rank3(delta)
    return _minkowski_classes_generic(r, delta)


@lru_cache(maxsize=None)
def mod2_coset_lifts(r: int) -> tuple[IntMatrix, ...]:
    """One unimodular integer lift per element of GL(r, F_2).

    These represent the cosets of the mod-2 congruence subgroup inside
    GL(r, Z).  For r <= 3 every invertible 0/1 matrix already has
    determinant +-1; for larger r an entry is nudged by 2 to fix the
    determinant without changing the mod-2 class.
    """
    lifts = []
    for bits in itertools.product((0, 1), repeat=r * r):
        m = IntMatrix.from_rows(
            [bits[i * r : (i + 1) * r] for i in range(r)]
        )
        d = det_exact(m)
        if d % 2 == 0:
            continue
        if d in (1, -1):
            lifts.append(m)
            continue
        lifts.append(_fix_determinant(m))
    return tuple(lifts)


def _fix_determinant(m: IntMatrix) -> IntMatrix:
    # breadth-first search over +-2 nudges of single entries
    from collections import deque

    r = m.rows
    seen = {m.entries}
    queue = deque([m])
    while queue:
        cur = queue.popleft()
        for i in range(r):
            for j in range(r):
                for step in (2, -2):
                    rows = [list(row) for row in cur.entries]
                    rows[i][j] += step
                    cand = IntMatrix.from_rows(rows)
                    if cand.entries in seen:
                        continue
                    d = det_exact(cand)
                    if d in (1, -1):
                        return cand
                    seen.add(cand.entries)
                    queue.append(cand)
    raise AssertionError("no unimodular lift found")  # unreachable


def even_size_reduce(q: IntMatrix) -> IntMatrix:
    """Size reduction using only even multiples (stays in the same class
    under mod-2-identity congruences), followed by a deterministic
    diagonal sort and sign normalization."""
    n = q.rows
    a = [list(row) for row in q.entries]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                # best even k for v_i <- v_i - k v_j
                k = 2 * _nearest(a[i][j], 2 * a[j][j])
                if k == 0:
                    continue
                new_diag = a[i][i] - 2 * k * a[i][j] + k * k * a[j][j]
                if new_diag < a[i][i]:
                    for t in range(n):
                        a[i][t] -= k * a[j][t]
                    for t in range(n):
                        a[t][i] -= k * a[t][j]
                    changed = True
    order = sorted(range(n), key=lambda i: (a[i][i], a[i]))
    a = [[a[i][j] for j in order] for i in order]
    # flip signs of rows to make the first nonzero off-diagonal entry of
    # each row (in scan order) nonnegative
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] < 0:
                for t in range(n):
                    a[j][t] = -a[j][t]
                for t in range(n):
                    a[t][j] = -a[t][j]
            if a[i][j] != 0:
                break
    return IntMatrix.from_rows(a)


def _nearest(num: int, den: int) -> int:
    if den < 0:
        num, den = -num, -den
    q, r = divmod(num, den)
    return q + 1 if 2 * r > den else q


def enumerate_rank_r_superset(r: int, delta: int, n: int) -> list[IntMatrix]:
    """Sound superset of the mod-2-identity congruence classes of
    positive-definite forms = I (mod 2) with determinant delta and exactly
    n diagonal entries = 3 (mod 4)."""
    if delta <= 0 or delta % 2 == 0:
        raise ValueError("determinant must be odd and positive")
    if not 0 <= n <= r:
        raise ValueError("n must lie between 0 and the rank")
    if r == 1:
        want = 3 if n == 1 else 1
        return [IntMatrix.from_rows([[delta]])] if delta % 4 == want else []
    seen: set = set()
    out = []
    for cls in minkowski_classes(r, delta):
        for p in mod2_coset_lifts(r):
            b = (p @ cls) @ p.transpose()
            if not is_identity_mod2(b):
                continue
            if diag_mod4_census(b) != n:
                continue
            b = even_size_reduce(b)
            if b.entries not in seen:
                seen.add(b.entries)
                out.append(b)
    return sorted(out, key=lambda m: m.entries)


def dedupe_by_fingerprint(candidates: list[IntMatrix], jobs: int = 1) -> list[IntMatrix]:
    """Keep one candidate per correction-table fingerprint.  Lossy-safe for
    the obstruction: the verdict only depends on the table."""
    seen = set()
    out = []
    for q in candidates:
        fp = table_fingerprint(q, jobs=jobs)
        if fp not in seen:
            seen.add(fp)
            out.append(q)
    return out


def filter_by_group(candidates: list[IntMatrix], target: AbelianGroup) -> list[IntMatrix]:
    """Keep candidates whose invariant factors match the target group's."""
    out = []
    for q in candidates:
        if smith_normal_form(q).invariant_factors() == target.invariant_factors:
            out.append(q)
    return out

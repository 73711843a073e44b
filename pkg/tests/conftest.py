import random

import pytest

from unknotting.intmat import IntMatrix, det_exact
from unknotting.quadforms import is_identity_mod2, is_positive_definite


def random_int_matrix(rng: random.Random, n: int, bound: int = 5) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    )


def random_nonsingular(rng: random.Random, n: int, bound: int = 5) -> IntMatrix:
    while True:
        m = random_int_matrix(rng, n, bound)
        if det_exact(m) != 0:
            return m


def random_unimodular(rng: random.Random, n: int, ops: int = 8) -> IntMatrix:
    """Product of random elementary row operations; determinant +-1."""
    a = [list(row) for row in IntMatrix.identity(n).entries]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    if rng.random() < 0.5:
        rng.shuffle(a)
    m = IntMatrix.from_rows(a)
    assert det_exact(m) in (1, -1)
    return m


def random_unimodular_mod2(rng: random.Random, n: int, ops: int = 6) -> IntMatrix:
    """Random element of the mod-2 congruence subgroup (even elementary ops)."""
    a = [list(row) for row in IntMatrix.identity(n).entries]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = 2 * rng.randint(-1, 1)
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
    m = IntMatrix.from_rows(a)
    assert det_exact(m) in (1, -1) and is_identity_mod2_transform(m)
    return m


def is_identity_mod2_transform(m: IntMatrix) -> bool:
    return is_identity_mod2(m)


def random_pd_form(rng: random.Random, n: int, diag_bound: int = 7) -> IntMatrix:
    """Random positive-definite symmetric form with odd determinant and a
    moderate covector box (basis-reduced so diagonal entries stay small)."""
    from unknotting.quadforms import reduce_basis

    while True:
        d = IntMatrix.diagonal([rng.randrange(1, diag_bound + 1, 2) for _ in range(n)])
        p = random_unimodular(rng, n, ops=4)
        q = (p @ d) @ p.transpose()
        if det_exact(q) % 2 == 1 and is_positive_definite(q):
            q, _ = reduce_basis(q)
            if max(q.diag()) <= 3 * diag_bound:
                return q


def random_pd_identity_mod2(rng: random.Random, n: int, diag_bound: int = 9) -> IntMatrix:
    """Random positive-definite form congruent to the identity mod 2."""
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = rng.randrange(1, diag_bound + 1, 2)
            for j in range(i):
                rows[i][j] = rows[j][i] = 2 * rng.randint(-1, 1)
        q = IntMatrix.from_rows(rows)
        if is_positive_definite(q) and det_exact(q) % 2 == 1:
            return q


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240824)

import pytest

from unknotting.intmat import IntMatrix, det_exact
from unknotting.quadforms import (
    FormCandidate,
    ParityError,
    check_lift_minors,
    diag_mod4_census,
    is_identity_mod2,
    is_positive_definite,
    lift_tilde,
    reduce_basis,
)

from conftest import random_pd_form, random_pd_identity_mod2, random_unimodular_mod2


def test_positive_definite_examples():
    assert is_positive_definite(IntMatrix.from_rows([[2, 1], [1, 2]]))
    assert not is_positive_definite(IntMatrix.from_rows([[1, 2], [2, 1]]))
    assert not is_positive_definite(IntMatrix.from_rows([[-1]]))
    with pytest.raises(ValueError):
        is_positive_definite(IntMatrix.from_rows([[1, 2], [0, 1]]))


def test_lift_examples():
    assert lift_tilde(IntMatrix.from_rows([[3]])) == IntMatrix.from_rows(
        [[2, 1], [1, 2]]
    )
    assert lift_tilde(IntMatrix.from_rows([[3, 0], [0, 11]])) == IntMatrix.from_rows(
        [[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 6, 1], [0, 0, 1, 2]]
    )
    assert lift_tilde(IntMatrix.from_rows([[7, 4], [4, 7]])) == IntMatrix.from_rows(
        [[4, 1, 2, 0], [1, 2, 0, 0], [2, 0, 4, 1], [0, 0, 1, 2]]
    )


def test_lift_requires_parity():
    with pytest.raises(ParityError):
        lift_tilde(IntMatrix.from_rows([[2]]))
    with pytest.raises(ParityError):
        lift_tilde(IntMatrix.from_rows([[3, 1], [1, 3]]))


def test_lift_minor_identities(rng):
    # determinant preservation and both leading-minor identities
    for _ in range(1000):
        n = rng.randint(1, 4)
        q = random_pd_identity_mod2(rng, n)
        assert check_lift_minors(q)


def test_census_examples():
    assert diag_mod4_census(IntMatrix.from_rows([[3, 0], [0, 11]])) == 2
    assert diag_mod4_census(IntMatrix.from_rows([[1]])) == 0
    with pytest.raises(ParityError):
        diag_mod4_census(IntMatrix.from_rows([[2]]))


def test_census_invariant_under_mod2_congruence(rng):
    for _ in range(200):
        n = rng.randint(1, 3)
        q = random_pd_identity_mod2(rng, n)
        p = random_unimodular_mod2(rng, n)
        b = (p @ q) @ p.transpose()
        assert is_identity_mod2(b)
        assert diag_mod4_census(b) == diag_mod4_census(q)


def test_reduce_basis_invariants(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        q = random_pd_form(rng, n)
        reduced, p = reduce_basis(q)
        assert det_exact(p) in (1, -1)
        assert (p @ q) @ p.transpose() == reduced
        assert is_positive_definite(reduced)
        assert det_exact(reduced) == det_exact(q)
        # diagonal product never larger than the input's
        prod_in = prod_out = 1
        for d in q.diag():
            prod_in *= d
        for d in reduced.diag():
            prod_out *= d
        assert prod_out <= prod_in


def test_form_candidate_triple_round_trip():
    c = FormCandidate.from_triple(4, 2, 4)
    assert c.q == IntMatrix.from_rows([[7, 4], [4, 7]])
    assert c.triple() == (4, 2, 4)
    assert c.neg_count == 2
    assert c.lift.rows == 4

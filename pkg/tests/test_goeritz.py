import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unknotting.goeritz import (
    InvalidDiagramError,
    KnotProblem,
    WhiteGraph,
    goeritz_from_white_graph,
    minus_continued_fraction,
    normalize_two_bridge,
    signature_from_diagram,
    two_bridge_goeritz,
    validate_problem,
)
from unknotting.intmat import IntMatrix, det_exact
from unknotting.quadforms import is_positive_definite


@st.composite
def coprime_pairs(draw):
    p = draw(st.integers(min_value=3, max_value=60))
    q = draw(st.integers(min_value=1, max_value=p - 1))
    if math.gcd(p, q) != 1:
        q = next(x for x in range(q, p) if math.gcd(p, x) == 1)
    return p, q


@given(coprime_pairs())
@settings(max_examples=300, deadline=None)
def test_minus_continued_fraction_properties(pq):
    p, q = pq
    coeffs = minus_continued_fraction(p, q)
    assert all(a >= 2 for a in coeffs)
    # fold back: value of the expansion equals p/q
    from fractions import Fraction

    val = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        val = a - 1 / val
    assert val == Fraction(p, q)


@given(coprime_pairs())
@settings(max_examples=50, deadline=None)
def test_two_bridge_goeritz_properties(pq):
    p, q = pq
    m = two_bridge_goeritz(p, q)
    assert is_positive_definite(m)
    assert det_exact(m) == p


def test_two_bridge_examples():
    assert two_bridge_goeritz(3, 1) == IntMatrix.from_rows([[3]])
    m = two_bridge_goeritz(51, 16)
    assert m.diag() == (4, 2, 2, 2, 2, 4)
    assert det_exact(m) == 51


def test_normalize_two_bridge():
    variants = normalize_two_bridge(51, 35)
    assert (51, 16) in variants
    assert (51, 35) in variants
    assert all(math.gcd(p, q) == 1 for p, q in variants)


def test_white_graph_validation():
    with pytest.raises(InvalidDiagramError):
        WhiteGraph.from_edges(2, [(1, 1)])
    with pytest.raises(InvalidDiagramError):
        WhiteGraph.from_edges(2, [(1, 3)])
    g = WhiteGraph.from_edges(4, [(1, 2), (3, 4)])
    assert not g.is_connected()
    with pytest.raises(InvalidDiagramError):
        goeritz_from_white_graph(g)


def test_goeritz_drop_vertex_det_invariant(rng):
    # the Goeritz determinant does not depend on which vertex is dropped
    for _ in range(100):
        n = rng.randint(3, 6)
        edges = [(i, i + 1) for i in range(1, n)]  # spanning path
        for _ in range(rng.randint(1, 8)):
            a, b = rng.sample(range(1, n + 1), 2)
            edges.append((a, b))
        g = WhiteGraph.from_edges(n, edges)
        dets = {
            det_exact(goeritz_from_white_graph(g, drop_vertex=v))
            for v in range(1, n + 1)
        }
        assert len(dets) == 1


def test_white_graph_json_round_trip():
    g = WhiteGraph.from_edges(3, [(1, 2), (1, 2), (2, 3)])
    assert WhiteGraph.from_json(g.to_json()) == g


def test_signature_from_diagram():
    assert signature_from_diagram(4, 0) == 4
    assert signature_from_diagram(2, 0) == 2


def test_problem_json_round_trip():
    kp = KnotProblem(
        name="t",
        determinant=3,
        signature=2,
        goeritz=IntMatrix.from_rows([[3]]),
        split=(1, 1),
        unknotting_upper_bound=1,
    )
    assert KnotProblem.from_json(kp.to_json()) == kp


def test_validate_problem_failures():
    bad = KnotProblem(
        name="bad",
        determinant=5,
        signature=4,
        goeritz=IntMatrix.from_rows([[3]]),
        split=(0, 0),
        unknotting_upper_bound=None,
    )
    res = validate_problem(bad)
    assert not res.ok
    assert "goeritz-determinant" in res.failures
    assert "negative-crossings-bound" in res.failures
    # det 5 = 1 mod 4 but signature 4 wants det = 1 mod 4: congruence holds
    assert "det-signature-congruence" not in res.failures

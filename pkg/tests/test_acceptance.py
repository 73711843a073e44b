"""Acceptance gate: one test (and one printed PASS line) per criterion.

All rational comparisons are exact; each criterion carries a wall-clock
budget, asserted with time.monotonic.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

from unknotting.corrections import correction_table, table_fingerprint
from unknotting.enumeration import enumerate_rank_r_superset
from unknotting.fixtures import all_fixtures
from unknotting.goeritz import KnotProblem
from unknotting.obstruction import candidate_table, problem_candidates, verdict
from unknotting.quadforms import FormCandidate, lift_tilde, reduce_basis

import test_corrections
import test_enumeration
import test_intmat
import test_quadforms

FIXTURES = all_fixtures()


def _report(k, label, t0, budget):
    elapsed = time.monotonic() - t0
    assert elapsed < budget, f"criterion {k} over budget: {elapsed:.2f}s >= {budget}s"
    print(f"\nCRITERION {k} ({label}): PASS ({elapsed:.2f}s < {budget}s)")


def test_criterion_1_rank4_correction_table():
    t0 = time.monotonic()
    fx = FIXTURES["9_10"]
    table = correction_table(fx.problem.goeritz)
    assert table.spin_value == Fraction(-1)
    assert table.value_multiset() == tuple(sorted(fx.expected["array"]))
    _report(1, "rank-4 correction table of 9_10", t0, 1.0)


def test_criterion_2_candidate_tables():
    fx = FIXTURES["9_10"]
    for triple in ((2, 0, 6), (4, 2, 4)):
        t0 = time.monotonic()
        table = candidate_table(FormCandidate.from_triple(*triple))
        arr = fx.expected["candidate_arrays"][triple]
        assert table.value_multiset() == tuple(sorted(arr))
        decisive = fx.expected["decisive_values"][triple]
        assert decisive in table.values.values()
        _report(2, f"lifted table of {triple}", t0, 1.0)


def test_criterion_3_corollary_verdicts():
    t0 = time.monotonic()
    for name in ("9_10", "9_13", "9_38", "10_53", "10_101", "10_120"):
        fx = FIXTURES[name]
        assert fx.problem.split == (0, 2)
        cands = problem_candidates(fx.problem)
        report = verdict(fx.problem, cands)
        assert report.verdict == "obstructed"
        if "candidate_minima" in fx.expected:
            for c in cands:
                want = fx.expected["candidate_minima"][c.triple()]
                assert candidate_table(c).min_nonspin() == want
        target = correction_table(fx.problem.goeritz)
        assert target.min_nonspin() == fx.expected["min_mg"]
    _report(3, "six obstructed verdicts with exact minima", t0, 5.0)


def test_criterion_4_9_35():
    t0 = time.monotonic()
    fx = FIXTURES["9_35"]
    table = correction_table(fx.problem.goeritz)
    assert table.spin_value == Fraction(-1, 2)
    assert table.group.invariant_factors == (3, 9)
    cands = problem_candidates(fx.problem)
    assert [c.triple() for c in cands] == [(2, 0, 5)]
    assert min(candidate_table(cands[0]).values.values()) == Fraction(-17, 18)
    assert verdict(fx.problem, cands).verdict == "obstructed"
    kp = fx.problem
    alt = KnotProblem(kp.name, kp.determinant, kp.signature, kp.goeritz, (0, 2))
    assert verdict(alt, []).verdict == "inapplicable"
    _report(4, "9_35 pipeline", t0, 1.0)


def test_criterion_5_11a365():
    t0 = time.monotonic()
    fx = FIXTURES["11a365"]
    superset = enumerate_rank_r_superset(3, 51, 3)
    fps = {table_fingerprint(q, jobs=4) for q in superset}
    for s in fx.expected["survivors"]:
        assert table_fingerprint(s, jobs=4) in fps
    report = verdict(fx.problem, problem_candidates(fx.problem), jobs=4)
    assert report.verdict == "obstructed"
    reduced, _ = reduce_basis(lift_tilde(fx.expected["reduced_box_form"]))
    size = 1
    for d in reduced.diag():
        size *= d
    assert size == 320 == 2**5 * 10
    _report(5, "11a365 rank-3 superset and verdict", t0, 60.0)


def test_criterion_6_property_suites():
    t0 = time.monotonic()
    test_intmat.test_snf_properties(random.Random(1))
    test_corrections.test_symmetry_values(random.Random(2))
    test_corrections.test_coset_parity_well_defined(random.Random(3))
    test_corrections.test_basis_invariance_and_transport(random.Random(4))
    test_corrections.test_direct_sum_additivity(random.Random(5))
    test_corrections.test_box_widening_soundness(random.Random(6))
    test_enumeration.test_rank2_matches_brute_force()
    test_enumeration.test_superset_rank3_validation_oracle()
    _report(6, "property suites", t0, 600.0)


def test_criterion_7_lift_minor_identities():
    t0 = time.monotonic()
    test_quadforms.test_lift_minor_identities(random.Random(7))
    _report(7, "lift determinant/minor identities", t0, 120.0)


def test_criterion_8_reproduce_determinism():
    t0 = time.monotonic()
    cmd = [sys.executable, "-m", "unknotting.cli", "--jobs", "2", "reproduce", "all"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    _report(8, "byte-identical reproduce all", t0, 120.0)

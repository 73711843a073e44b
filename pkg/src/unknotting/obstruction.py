"""Obstruction engine: search for a group isomorphism compatible with the
correction tables, and assemble verdicts.

A candidate table refutes the knot table unless some isomorphism phi between
the underlying groups satisfies, at every element g,

    candidate(g) >= target(phi(g))   and   candidate(g) - target(phi(g)) in 2Z.

The check runs in stages of increasing cost; the report records which stage
decided each candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .corrections import (
    AbelianGroup,
    CorrectionTable,
    Label,
    correction_table,
)
from .goeritz import KnotProblem, validate_problem
from .quadforms import FormCandidate, reduce_basis

EXTERNAL_NOTES = {
    "9_35": "unknotting number bound u >= 3 for signature 2 relies on "
    "Traczyk's criterion for unknotting number two of alternating knots",
    "10_145": "determinant-3 case settled by the refined signature bound "
    "for a single negative crossing change [det3]",
}


@dataclass(frozen=True)
class Isomorphism:
    """Group isomorphism recorded by the images of the canonical generators."""

    src_factors: tuple[int, ...]
    dst_factors: tuple[int, ...]
    images: tuple[Label, ...]

    def apply(self, label: Label) -> Label:
        out = [0] * len(self.dst_factors)
        for a, img in zip(label, self.images):
            for t, (x, d) in enumerate(zip(img, self.dst_factors)):
                out[t] = (out[t] + a * x) % d
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "src_factors": list(self.src_factors),
            "dst_factors": list(self.dst_factors),
            "images": [list(img) for img in self.images],
        }


def enumerate_isomorphisms(a: AbelianGroup, b: AbelianGroup) -> Iterator[Isomorphism]:
    """Every isomorphism a -> b, once each, as generator images.

    An isomorphism preserves element orders, so the i-th canonical generator
    (of order d_i) must land on an element of order exactly d_i; each such
    tuple of images defines a homomorphism, which is an isomorphism iff its
    image has full size.
    """
    if a.invariant_factors != b.invariant_factors:
        return
    factors = a.invariant_factors
    pools = [
        [g for g in b.elements() if b.element_order(g) == d] for d in factors
    ]

    def extend(chosen: list[Label], k: int) -> Iterator[Isomorphism]:
        if k == len(factors):
            phi = Isomorphism(factors, factors, tuple(chosen))
            image = {phi.apply(g) for g in a.elements()}
            if len(image) == a.order:
                yield phi
            return
        for img in pools[k]:
            chosen.append(img)
            yield from extend(chosen, k + 1)
            chosen.pop()

    yield from extend([], 0)


@dataclass(frozen=True)
class Certificate:
    """Outcome of checking one candidate against the knot's table."""

    candidate: FormCandidate
    stage: str  # group-mismatch | spin-value | min-value |
    #             exhausted-isomorphisms | witness
    decisive_value: Optional[Fraction] = None
    witness: Optional[Isomorphism] = None
    checked_values: Optional[dict[Label, tuple[Fraction, Fraction]]] = None

    @property
    def is_witness(self) -> bool:
        return self.stage == "witness"

    def to_json(self) -> dict:
        data: dict = {"candidate": self.candidate.q.to_json(), "stage": self.stage}
        if self.decisive_value is not None:
            data["decisive_value"] = str(self.decisive_value)
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        if self.checked_values is not None:
            data["checked_values"] = {
                "(" + ",".join(str(x) for x in g) + ")": [str(u), str(v)]
                for g, (u, v) in sorted(self.checked_values.items())
            }
        return data


def _even_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 == 0


def _phi_satisfies(
    phi: Isomorphism, cand: CorrectionTable, targ: CorrectionTable
) -> Optional[dict[Label, tuple[Fraction, Fraction]]]:
    checked = {}
    for g, v in cand.values.items():
        w = targ.values[phi.apply(g)]
        if v < w or not _even_integer(v - w):
            return None
        checked[g] = (v, w)
    return checked


def check_candidate(
    candidate: FormCandidate,
    candidate_table: CorrectionTable,
    target_table: CorrectionTable,
    slow_verify: bool = False,
) -> Certificate:
    """Stage the isomorphism search; return the first witness found, else the
    strongest refutation reached."""
    cand, targ = candidate_table, target_table
    if cand.group.invariant_factors != targ.group.invariant_factors:
        return Certificate(candidate, "group-mismatch")

    # phi(0) = 0 for any isomorphism, so the spin values must pair up
    diff = cand.spin_value - targ.spin_value
    if cand.spin_value < targ.spin_value or not _even_integer(diff):
        return Certificate(candidate, "spin-value", decisive_value=cand.spin_value)

    # every candidate value must dominate some target value of matching
    # parity (phi sends its coset somewhere); refute on the smallest value
    # with no such partner
    targ_values = sorted(set(targ.values.values()))
    for v in sorted(set(cand.values.values())):
        if not any(w <= v and _even_integer(v - w) for w in targ_values):
            if slow_verify:
                assert all(
                    _phi_satisfies(phi, cand, targ) is None
                    for phi in enumerate_isomorphisms(cand.group, targ.group)
                ), "min-value refutation contradicted by full scan"
            return Certificate(candidate, "min-value", decisive_value=v)

    for phi in enumerate_isomorphisms(cand.group, targ.group):
        checked = _phi_satisfies(phi, cand, targ)
        if checked is not None:
            return Certificate(
                candidate, "witness", witness=phi, checked_values=checked
            )
    return Certificate(candidate, "exhausted-isomorphisms")


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str  # obstructed | not_obstructed | inapplicable
    applicability: dict[str, bool]
    candidates: tuple[Certificate, ...] = ()
    external_notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "applicability": dict(self.applicability),
            "candidates": [c.to_json() for c in self.candidates],
            "external_notes": list(self.external_notes),
        }


def problem_candidates(kp: KnotProblem) -> list[FormCandidate]:
    """Candidate linking forms for a knot problem: rank p + n, determinant
    det K, n diagonal entries = 3 mod 4, filtered to forms presenting the
    same group as the Goeritz matrix."""
    from .enumeration import (
        enumerate_rank2,
        enumerate_rank_r_superset,
        filter_by_group,
        triple_form,
    )

    p, n = kp.split
    r = p + n
    group = AbelianGroup.from_form(kp.goeritz)
    if r == 2:
        forms = [triple_form(*t) for t in enumerate_rank2(kp.determinant, n)]
    else:
        forms = enumerate_rank_r_superset(r, kp.determinant, n)
    return [FormCandidate.from_form(q) for q in filter_by_group(forms, group)]


def candidate_table(candidate: FormCandidate, jobs: int = 1) -> CorrectionTable:
    """Correction table of a candidate's block lift, computed on a reduced
    basis (values are congruence-invariant; only labels move, and the
    isomorphism scan does not depend on the labelling)."""
    reduced, _ = reduce_basis(candidate.lift)
    return correction_table(reduced, jobs=jobs)


def verdict(
    kp: KnotProblem,
    candidates: list[FormCandidate],
    jobs: int = 1,
    slow_verify: bool = False,
) -> ObstructionReport:
    """Assemble the obstruction report for one knot problem.

    Inapplicable when the number of negative crossing changes is not half
    the signature (no candidates are evaluated); otherwise obstructed iff
    every candidate is refuted.
    """
    _, n = kp.split
    applicability = {
        "negative-changes-equal-half-signature": 2 * n == kp.signature,
        "problem-valid": validate_problem(kp).ok,
    }
    notes = (EXTERNAL_NOTES[kp.name],) if kp.name in EXTERNAL_NOTES else ()
    if not all(applicability.values()):
        return ObstructionReport(
            verdict="inapplicable", applicability=applicability, external_notes=notes
        )
    targ = correction_table(kp.goeritz, jobs=jobs)
    certs = []
    found_witness = False
    for c in candidates:
        cert = check_candidate(
            c, candidate_table(c, jobs=jobs), targ, slow_verify=slow_verify
        )
        certs.append(cert)
        if cert.is_witness:
            found_witness = True
    if found_witness:
        notes = notes + (
            "a compatible isomorphism exists; the obstruction is silent and "
            "no conclusion about the unknotting number follows",
        )
    return ObstructionReport(
        verdict="not_obstructed" if found_witness else "obstructed",
        applicability=applicability,
        candidates=tuple(certs),
        external_notes=notes,
    )

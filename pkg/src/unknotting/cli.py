"""Command-line front end.

Commands: mq, enumerate, obstruct, goeritz (white-graph | two-bridge),
reproduce.  Machine mode (--json, the default) prints canonical JSON with
sorted keys so output is byte-for-byte deterministic; --human prints
aligned text.  Exit codes: 0 success, 1 reproduction mismatch, 2 parse or
validation error, 3 unusable form (indefinite or even determinant),
10 obstructed, 11 not obstructed, 12 inapplicable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corrections import correction_table, table_fingerprint
from .enumeration import enumerate_rank2, enumerate_rank_r_superset, triple_form
from .fixtures import FixtureEntry, all_fixtures
from .goeritz import (
    InvalidDiagramError,
    KnotProblem,
    WhiteGraph,
    goeritz_from_white_graph,
    two_bridge_goeritz,
    validate_problem,
)
from .intmat import IntMatrix, det_exact, smith_normal_form
from .obstruction import candidate_table, problem_candidates, verdict
from .quadforms import is_positive_definite, reduce_basis

EXIT_PARSE = 2
EXIT_BAD_FORM = 3
EXIT_OBSTRUCTED = 10
EXIT_NOT_OBSTRUCTED = 11
EXIT_INAPPLICABLE = 12


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(data: dict, human_lines, args) -> None:
    if args.human:
        for line in human_lines:
            print(line)
    else:
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _load_json(path: str):
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CliError(f"cannot read {path}: {e}", EXIT_PARSE)


def _load_matrix(path: str) -> IntMatrix:
    try:
        m = IntMatrix.from_json(_load_json(path))
    except ValueError as e:
        raise CliError(str(e), EXIT_PARSE)
    if not m.is_symmetric():
        raise CliError("matrix is not symmetric", EXIT_PARSE)
    return m


def cmd_mq(args) -> int:
    q = _load_matrix(args.matrix_file)
    if not is_positive_definite(q):
        raise CliError("matrix is not positive-definite", EXIT_BAD_FORM)
    if det_exact(q) % 2 == 0:
        raise CliError("determinant must be odd", EXIT_BAD_FORM)
    reduced, p = reduce_basis(q)
    table = correction_table(reduced, jobs=args.jobs)
    data = {
        "input": q.to_json(),
        "reduced": reduced.to_json(),
        "transform": p.to_json(),
        "spin": str(table.spin_value),
        "min_nonspin": str(table.min_nonspin()) if table.group.order > 1 else None,
        "table": table.to_json(),
    }
    lines = [
        f"form: {q}",
        f"reduced: {reduced}  (transform {p})",
        f"group factors: {list(table.group.invariant_factors)}",
        f"spin value: {table.spin_value}",
    ]
    if table.group.order > 1:
        lines.append(f"min over nonzero elements: {table.min_nonspin()}")
    lines.append("values:")
    for g, v in sorted(table.values.items()):
        lines.append(f"  {g}: {v}")
    _emit(data, lines, args)
    return 0


def cmd_enumerate(args) -> int:
    if args.det <= 0 or args.det % 2 == 0:
        raise CliError("--det must be odd and positive", EXIT_PARSE)
    if args.rank == 2:
        triples = enumerate_rank2(args.det, args.neg)
        forms = [triple_form(*t) for t in triples]
    else:
        triples = None
        forms = enumerate_rank_r_superset(args.rank, args.det, args.neg)
    if args.group:
        try:
            factors = tuple(int(x) for x in args.group.split(","))
        except ValueError:
            raise CliError("--group expects comma-separated integers", EXIT_PARSE)
        keep = [
            smith_normal_form(q).invariant_factors() == factors for q in forms
        ]
        if triples is not None:
            triples = [t for t, k in zip(triples, keep) if k]
        forms = [q for q, k in zip(forms, keep) if k]
    data = {
        "rank": args.rank,
        "det": args.det,
        "neg": args.neg,
        "forms": [q.to_json() for q in forms],
    }
    lines = []
    if triples is not None:
        data["triples"] = [list(t) for t in triples]
        lines = [f"({m1},{a},{m2})" for m1, a, m2 in triples]
    else:
        lines = [str(q) for q in forms]
    _emit(data, lines, args)
    return 0


def _load_problem(path: str) -> KnotProblem:
    try:
        kp = KnotProblem.from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as e:
        raise CliError(f"invalid problem file: {e}", EXIT_PARSE)
    check = validate_problem(kp)
    if not check.ok:
        raise CliError(
            "problem validation failed: " + ", ".join(check.failures), EXIT_PARSE
        )
    return kp


def cmd_obstruct(args) -> int:
    kp = _load_problem(args.problem_file)
    report = verdict(
        kp, problem_candidates(kp), jobs=args.jobs, slow_verify=args.slow_verify
    )
    data = report.to_json()
    lines = [f"{kp.name}: {report.verdict}"]
    for cert in report.candidates:
        extra = f" ({cert.decisive_value})" if cert.decisive_value is not None else ""
        lines.append(f"  candidate {cert.candidate.q}: {cert.stage}{extra}")
    for note in report.external_notes:
        lines.append(f"  note: {note}")
    _emit(data, lines, args)
    return {
        "obstructed": EXIT_OBSTRUCTED,
        "not_obstructed": EXIT_NOT_OBSTRUCTED,
        "inapplicable": EXIT_INAPPLICABLE,
    }[report.verdict]


def cmd_goeritz(args) -> int:
    if args.mode == "white-graph":
        try:
            g = WhiteGraph.from_json(_load_json(args.source))
            m = goeritz_from_white_graph(g)
        except (InvalidDiagramError, KeyError, TypeError, ValueError) as e:
            raise CliError(f"invalid white graph: {e}", EXIT_PARSE)
    else:
        try:
            m = two_bridge_goeritz(args.p, args.q)
        except ValueError as e:
            raise CliError(str(e), EXIT_PARSE)
    _emit({"goeritz": m.to_json(), "det": det_exact(m)}, [str(m)], args)
    return 0


# --- reproduction of the fixture computations ---------------------------


def _checks_common(entry: FixtureEntry, jobs: int):
    kp, exp = entry.problem, entry.expected
    yield "problem-valid", validate_problem(kp).ok
    if "goeritz" in exp:
        yield "goeritz-matrix", kp.goeritz == exp["goeritz"]
    target = correction_table(kp.goeritz, jobs=jobs)
    if "array" in exp:
        yield "value-array", target.value_multiset() == tuple(sorted(exp["array"]))
    if "spin_value" in exp:
        yield "spin-value", target.spin_value == exp["spin_value"]
    if "group_factors" in exp:
        yield "group-factors", target.group.invariant_factors == exp["group_factors"]
    if "min_mg" in exp:
        yield "min-value", target.min_nonspin() == exp["min_mg"]


def _checks_rank2(entry: FixtureEntry, jobs: int):
    kp, exp = entry.problem, entry.expected
    _, n = kp.split
    if "enumeration" in exp:
        yield "enumeration", enumerate_rank2(kp.determinant, n) == exp["enumeration"]
    cands = problem_candidates(kp)
    got = sorted(c.triple() for c in cands)
    yield "candidates", got == sorted(exp["triples"])
    by_triple = {c.triple(): c for c in cands}
    if "candidate_minima" in exp:
        ok = True
        for t, want in exp["candidate_minima"].items():
            table = candidate_table(by_triple[t], jobs=jobs)
            if table.min_nonspin() != want:
                ok = False
        yield "candidate-minima", ok
    if "candidate_arrays" in exp:
        ok = True
        for t, arr in exp["candidate_arrays"].items():
            table = candidate_table(by_triple[t], jobs=jobs)
            if table.value_multiset() != tuple(sorted(arr)):
                ok = False
        yield "candidate-arrays", ok
    if "decisive_values" in exp:
        report = verdict(kp, cands, jobs=jobs)
        got_dec = {
            c.candidate.triple(): c.decisive_value for c in report.candidates
        }
        yield "decisive-values", got_dec == exp["decisive_values"]


def _checks_verdict(entry: FixtureEntry, jobs: int, slow_verify: bool):
    kp, exp = entry.problem, entry.expected
    cands = problem_candidates(kp)
    report = verdict(kp, cands, jobs=jobs, slow_verify=slow_verify)
    yield "verdict", report.verdict == exp["verdict"]
    if "verdict_when_split_0_2" in exp:
        alt = KnotProblem(
            name=kp.name,
            determinant=kp.determinant,
            signature=kp.signature,
            goeritz=kp.goeritz,
            split=(0, 2),
            unknotting_upper_bound=kp.unknotting_upper_bound,
        )
        alt_report = verdict(alt, [])
        yield "alt-split-verdict", alt_report.verdict == exp["verdict_when_split_0_2"]


def _checks_rank3(entry: FixtureEntry, jobs: int):
    kp, exp = entry.problem, entry.expected
    _, n = kp.split
    superset = enumerate_rank_r_superset(3, kp.determinant, n)
    fps = {table_fingerprint(q, jobs=jobs) for q in superset}
    survivors_found = all(
        table_fingerprint(s, jobs=jobs) in fps for s in exp["survivors"]
    )
    yield "superset-contains-survivors", survivors_found
    from .quadforms import lift_tilde

    reduced, _ = reduce_basis(lift_tilde(exp["reduced_box_form"]))
    size = 1
    for d in reduced.diag():
        size *= d
    yield "reduced-box", size == exp["reduced_box"]


def reproduce_fixture(entry: FixtureEntry, jobs: int = 1, slow_verify: bool = False):
    """Recompute every golden value of one fixture; yields (check, ok)."""
    yield from _checks_common(entry, jobs)
    if entry.problem.split[0] + entry.problem.split[1] == 2:
        yield from _checks_rank2(entry, jobs)
    else:
        yield from _checks_rank3(entry, jobs)
    yield from _checks_verdict(entry, jobs, slow_verify)


def cmd_reproduce(args) -> int:
    fixtures = all_fixtures()
    if args.name == "all":
        names = sorted(fixtures)
    elif args.name in fixtures:
        names = [args.name]
    else:
        raise CliError(f"unknown fixture {args.name!r}", EXIT_PARSE)
    results = {}
    all_ok = True
    for name in names:
        checks = dict(
            reproduce_fixture(fixtures[name], jobs=args.jobs, slow_verify=args.slow_verify)
        )
        results[name] = checks
        all_ok &= all(checks.values())
    lines = []
    for name in names:
        for check, ok in results[name].items():
            lines.append(f"{name} {check}: {'PASS' if ok else 'FAIL'}")
    lines.append("RESULT: " + ("PASS" if all_ok else "FAIL"))
    _emit({"results": results, "ok": all_ok}, lines, args)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unknotting",
        description="Exact unknotting obstructions from positive-definite Goeritz forms.",
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="machine output (default)")
    mode.add_argument("--human", action="store_true", help="human-readable output")
    parser.add_argument(
        "--jobs", type=int, default=os.cpu_count() or 1, help="worker processes"
    )
    parser.add_argument(
        "--slow-verify",
        action="store_true",
        help="run the full isomorphism scan even when an early stage refutes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mq", help="correction table of a form")
    p.add_argument("matrix_file")
    p.set_defaults(func=cmd_mq)

    p = sub.add_parser("enumerate", help="candidate forms for a determinant")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--det", type=int, required=True)
    p.add_argument("--neg", type=int, required=True)
    p.add_argument("--group", default=None, help="comma-separated invariant factors")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("obstruct", help="run the obstruction on a problem file")
    p.add_argument("problem_file")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("goeritz", help="build a Goeritz matrix")
    gsub = p.add_subparsers(dest="mode", required=True)
    g = gsub.add_parser("white-graph")
    g.add_argument("source")
    g.set_defaults(func=cmd_goeritz, mode="white-graph")
    g = gsub.add_parser("two-bridge")
    g.add_argument("p", type=int)
    g.add_argument("q", type=int)
    g.set_defaults(func=cmd_goeritz, mode="two-bridge")

    p = sub.add_parser("reproduce", help="recompute and diff the reference fixtures")
    p.add_argument("name")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())

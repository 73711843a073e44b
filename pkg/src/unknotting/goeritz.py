"""Goeritz matrices from white-graph data or two-bridge parameters.

Knot diagrams are not parsed here; the input is the white multigraph of a
chessboard colouring (with the convention that makes the Goeritz matrix
positive-definite) or the parameters (p, q) of a two-bridge knot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .intmat import IntMatrix, det_exact
from .quadforms import is_positive_definite


class InvalidDiagramError(ValueError):
    pass


@dataclass(frozen=True)
class WhiteGraph:
    """White multigraph of a chessboard colouring; vertices are 1-based.

    The last vertex is the one dropped when forming the Goeritz matrix.
    Repeated edges encode multiplicity; loops are forbidden.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_edges(vertex_count: int, edges: Sequence[Sequence[int]]) -> "WhiteGraph":
        norm = []
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise InvalidDiagramError("white graph may not contain loops")
            if not (1 <= a <= vertex_count and 1 <= b <= vertex_count):
                raise InvalidDiagramError("edge endpoint out of range")
            norm.append((min(a, b), max(a, b)))
        return WhiteGraph(vertex_count=vertex_count, edges=tuple(sorted(norm)))

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @staticmethod
    def from_json(data: dict) -> "WhiteGraph":
        return WhiteGraph.from_edges(int(data["vertices"]), data["edges"])


def goeritz_from_white_graph(g: WhiteGraph, drop_vertex: Optional[int] = None) -> IntMatrix:
    """Goeritz matrix: vertex degrees on the diagonal, minus edge
    multiplicities off it, with one vertex (by default the last) dropped."""
    if g.vertex_count < 2:
        raise InvalidDiagramError("need at least two white regions")
    if not g.is_connected():
        raise InvalidDiagramError("white graph must be connected")
    drop = g.vertex_count if drop_vertex is None else drop_vertex
    keep = [v for v in range(1, g.vertex_count + 1) if v != drop]
    index = {v: i for i, v in enumerate(keep)}
    k = len(keep)
    m = [[0] * k for _ in range(k)]
    for a, b in g.edges:
        if a in index:
            m[index[a]][index[a]] += 1
        if b in index:
            m[index[b]][index[b]] += 1
        if a in index and b in index:
            m[index[a]][index[b]] -= 1
            m[index[b]][index[a]] -= 1
    return IntMatrix.from_rows(m)


def minus_continued_fraction(p: int, q: int) -> list[int]:
    """Coefficients of p/q = a_1 - 1/(a_2 - 1/(... - 1/a_k)), all a_i >= 2."""
    if not (0 < q < p) or math.gcd(p, q) != 1:
        raise ValueError("need 0 < q < p with gcd(p, q) = 1")
    coeffs = []
    while q > 0:
        a = -(-p // q)  # ceil
        coeffs.append(a)
        p, q = q, a * q - p
    return coeffs


def two_bridge_goeritz(p: int, q: int) -> IntMatrix:
    """Tridiagonal positive-definite form with determinant p for S(p, q)."""
    coeffs = minus_continued_fraction(p, q)
    k = len(coeffs)
    m = [[0] * k for _ in range(k)]
    for i, a in enumerate(coeffs):
        m[i][i] = a
        if i + 1 < k:
            m[i][i + 1] = -1
            m[i + 1][i] = -1
    return IntMatrix.from_rows(m)


def normalize_two_bridge(p: int, q: int) -> list[tuple[int, int]]:
    """The four classical parameter variants of a two-bridge knot.

    Returns (p, q), (p, p-q), (p, q^{-1} mod p), (p, p - q^{-1} mod p),
    deduplicated and sorted, so the caller can pick the representative with
    the mirror/orientation it needs.
    """
    if math.gcd(p, q) != 1:
        raise ValueError("need gcd(p, q) = 1")
    q %= p
    qinv = pow(q, -1, p)
    variants = {(p, q), (p, p - q), (p, qinv), (p, p - qinv)}
    return sorted(variants)


def signature_from_diagram(k: int, mu: int) -> int:
    """Knot signature from an alternating diagram: k white-graph rows minus
    the number of positive crossings."""
    return k - mu


@dataclass(frozen=True)
class KnotProblem:
    name: str
    determinant: int
    signature: int
    goeritz: IntMatrix
    split: tuple[int, int]  # (p, n) positive/negative crossing changes
    unknotting_upper_bound: Optional[int] = None

    def to_json(self) -> dict:
        data = {
            "name": self.name,
            "determinant": self.determinant,
            "signature": self.signature,
            "goeritz": self.goeritz.to_json(),
            "split": {"p": self.split[0], "n": self.split[1]},
        }
        if self.unknotting_upper_bound is not None:
            data["unknotting_upper_bound"] = self.unknotting_upper_bound
        return data

    @staticmethod
    def from_json(data: dict) -> "KnotProblem":
        return KnotProblem(
            name=str(data["name"]),
            determinant=int(data["determinant"]),
            signature=int(data["signature"]),
            goeritz=IntMatrix.from_json(data["goeritz"]),
            split=(int(data["split"]["p"]), int(data["split"]["n"])),
            unknotting_upper_bound=(
                int(data["unknotting_upper_bound"])
                if data.get("unknotting_upper_bound") is not None
                else None
            ),
        )


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    failures: tuple[str, ...] = field(default_factory=tuple)


def validate_problem(kp: KnotProblem) -> ValidationResult:
    """Structured sanity checks on a knot problem; never raises."""
    failures = []
    if not kp.goeritz.is_symmetric():
        failures.append("goeritz-symmetric")
    else:
        if not is_positive_definite(kp.goeritz):
            failures.append("goeritz-positive-definite")
        if det_exact(kp.goeritz) != kp.determinant:
            failures.append("goeritz-determinant")
    if kp.determinant % 2 == 0 or kp.determinant <= 0:
        failures.append("determinant-odd-positive")
    if kp.determinant % 4 != (kp.signature + 1) % 4:
        failures.append("det-signature-congruence")
    _, n = kp.split
    if 2 * n < kp.signature:
        failures.append("negative-crossings-bound")
    return ValidationResult(ok=not failures, failures=tuple(failures))

"""Subdivision patterns, witnesses, and the independent witness verifier.

A pattern is a digraph F whose every arc e carries a tuple (a, b, r, q) with
q >= 2 and a, b coprime to q.  A witness embeds a subdivision of F into a
labeled digraph D: an injective branch-vertex map plus one branching path
per pattern arc, the paths pairwise internally disjoint and internally
disjoint from all branch vertices, and each path P satisfying

    a * |A(P) & z1| + b * |A(P) & z2|  ==  r   (mod q).

Residues are normalized to 0..q-1 on construction (inputs using q itself as
the representative of zero are accepted and mapped).  Verification is
deliberately independent of every construction and search routine in this
package; it recounts everything from the raw digraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .digraph import DirectedPath, LabeledDigraph


@dataclass(frozen=True)
class PatternArc:
    tail: int
    head: int
    a: int
    b: int
    r: int
    q: int

    def __post_init__(self):
        if self.tail == self.head:
            raise ValueError("pattern arcs may not be loops")
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        if math.gcd(self.a, self.q) != 1 or math.gcd(self.b, self.q) != 1:
            raise ValueError("a and b must be coprime to the modulus")
        object.__setattr__(self, "a", self.a % self.q)
        object.__setattr__(self, "b", self.b % self.q)
        object.__setattr__(self, "r", self.r % self.q)

    @property
    def key(self) -> tuple[int, int]:
        return (self.tail, self.head)


@dataclass(frozen=True)
class SubdivisionPattern:
    """Pattern digraph on dense vertices 0..num_vertices-1 with per-arc
    congruence tuples.  No loops, no repeated (tail, head) pairs; digons
    (both orientations of a pair) are fine."""

    num_vertices: int
    arcs: tuple[PatternArc, ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for e in self.arcs:
            if not (0 <= e.tail < self.num_vertices and 0 <= e.head < self.num_vertices):
                raise ValueError(f"pattern arc {e.key} uses an unknown vertex")
            if e.key in seen:
                raise ValueError(f"duplicate pattern arc {e.key}")
            seen.add(e.key)
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs, key=lambda e: e.key)))

    def without_arc(self, key: tuple[int, int]) -> "SubdivisionPattern":
        return SubdivisionPattern(self.num_vertices,
                                  tuple(e for e in self.arcs if e.key != key))

    def out_degree(self, v: int) -> int:
        return sum(1 for e in self.arcs if e.tail == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for e in self.arcs if e.head == v)


@dataclass(frozen=True, eq=False)
class SubdivisionWitness:
    """branch[p] is the digraph vertex standing for pattern vertex p; paths
    maps each pattern arc key to its branching path."""

    branch: tuple[int, ...]
    paths: dict[tuple[int, int], DirectedPath] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubdivisionWitness):
            return NotImplemented
        return self.branch == other.branch and self.paths == other.paths


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def path_residue(D: LabeledDigraph, path: DirectedPath, a: int, b: int, q: int) -> int:
    c1, c2 = D.label_counts(path.arcs())
    return (a * c1 + b * c2) % q


def verify_witness(D: LabeledDigraph, pattern: SubdivisionPattern,
                   witness: SubdivisionWitness) -> VerificationReport:
    """Check a claimed subdivision witness clause by clause; the report names
    the first violated clause."""
    branch = witness.branch
    if len(branch) != pattern.num_vertices:
        return VerificationReport(False, "branch-map",
                                  f"expected {pattern.num_vertices} branch vertices, "
                                  f"got {len(branch)}")
    if len(set(branch)) != len(branch):
        return VerificationReport(False, "branch-map", "branch map is not injective")
    for v in branch:
        if not D.has_vertex(v):
            return VerificationReport(False, "branch-map", f"unknown digraph vertex {v}")

    keys = {e.key for e in pattern.arcs}
    if set(witness.paths) != keys:
        missing = sorted(keys - set(witness.paths))
        extra = sorted(set(witness.paths) - keys)
        return VerificationReport(False, "paths-complete",
                                  f"missing {missing}, unexpected {extra}")

    for e in pattern.arcs:
        p = witness.paths[e.key]
        if p.length < 1:
            return VerificationReport(False, f"path{e.key}", "branching path has no arcs")
        if not p.valid_in(D):
            return VerificationReport(False, f"path{e.key}", "not a directed path of the digraph")
        if p.first != branch[e.tail] or p.last != branch[e.head]:
            return VerificationReport(False, f"path{e.key}",
                                      f"endpoints {p.first}->{p.last} do not match "
                                      f"branch vertices {branch[e.tail]}->{branch[e.head]}")

    branch_set = set(branch)
    used: dict[int, tuple[int, int]] = {}
    for e in pattern.arcs:
        for v in witness.paths[e.key].interior:
            if v in branch_set:
                return VerificationReport(False, "disjointness",
                                          f"path {e.key} passes through branch vertex {v}")
            if v in used:
                return VerificationReport(False, "disjointness",
                                          f"paths {used[v]} and {e.key} share interior vertex {v}")
            used[v] = e.key

    for e in pattern.arcs:
        got = path_residue(D, witness.paths[e.key], e.a, e.b, e.q)
        if got != e.r:
            return VerificationReport(False, f"congruence{e.key}",
                                      f"residue {got} != required {e.r} (mod {e.q})")
    return VerificationReport(True)

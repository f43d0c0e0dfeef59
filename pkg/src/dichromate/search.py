"""Complete-at-desk-scale search for congruence-constrained subdivisions.

``residue_path`` finds a simple directed u-v path whose label counts hit a
target residue, with interior vertices banned from a designated endpoint set
and from an arbitrary forbidden set.  The search is depth-first over simple
paths, pruned by a walk relaxation: a product-state BFS over
(vertex, z1-count mod q, z2-count mod q) marks which states can still reach
the target as *walks*; a partial path whose frontier state cannot finish as
a walk certainly cannot finish as a path.  The relaxation is keyed on the
raw count pair rather than the combined residue, so one table serves every
(a, b, target) query with the same modulus.

``find_subdivision`` layers a branch-map enumeration on top: injective maps
of pattern vertices into the digraph (degree-feasibility pruned), then one
residue-constrained path per pattern arc, routed most-constrained first with
full backtracking across both path choices and maps.  Exhausting the space
within budget proves non-existence; running out of budget is reported as an
explicit third outcome, never conflated with absence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import DirectedPath, LabeledDigraph
from .subdivision import (PatternArc, SubdivisionPattern, SubdivisionWitness,
                          VerificationReport, verify_witness)

FOUND = "found"
ABSENT = "absent"
INDETERMINATE = "indeterminate"


class BudgetExhausted(Exception):
    pass


class SearchBudget:
    """Shared node-expansion counter; ``charge`` raises once the limit is hit."""

    def __init__(self, limit: int):
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.spent = 0

    def charge(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExhausted


@dataclass(frozen=True)
class ResidueQuery:
    """Find a simple directed path from u to v with
    a*|arcs in z1| + b*|arcs in z2| == target (mod q); interior vertices must
    avoid ``endpoints`` (which must contain u and v) and ``forbidden`` (which
    may not touch u or v)."""

    u: int
    v: int
    a: int
    b: int
    q: int
    target: int
    endpoints: frozenset[int] = frozenset()
    forbidden: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        if math.gcd(self.a, self.q) != 1 or math.gcd(self.b, self.q) != 1:
            raise ValueError("a and b must be coprime to the modulus")
        if self.u == self.v:
            raise ValueError("endpoints must be distinct")
        endpoints = self.endpoints or frozenset((self.u, self.v))
        if self.u not in endpoints or self.v not in endpoints:
            endpoints = endpoints | {self.u, self.v}
        object.__setattr__(self, "endpoints", endpoints)
        if {self.u, self.v} & self.forbidden:
            raise ValueError("u and v may not be forbidden")
        object.__setattr__(self, "a", self.a % self.q)
        object.__setattr__(self, "b", self.b % self.q)
        object.__setattr__(self, "target", self.target % self.q)


def walk_reach_table(D: LabeledDigraph, query: ResidueQuery) -> dict[int, set[tuple[int, int]]]:
    """For each vertex w, the set of count pairs (c1 mod q, c2 mod q) some
    walk from w to v can contribute, where the walk's vertices after w avoid
    the endpoint and forbidden sets (v itself excepted).  Computed by a
    reverse flood over the product graph."""
    q = query.q
    blocked_interior = (query.endpoints | query.forbidden) - {query.v}
    table: dict[int, set[tuple[int, int]]] = {query.v: {(0, 0)}}
    stack: list[tuple[int, int, int]] = [(query.v, 0, 0)]
    while stack:
        z, c1, c2 = stack.pop()
        if z != query.v and z in blocked_interior:
            continue
        for w in D.in_neighbors(z):
            if w in query.forbidden:
                continue
            arc = (w, z)
            e1 = (c1 + (arc in D.z1)) % q
            e2 = (c2 + (arc in D.z2)) % q
            states = table.setdefault(w, set())
            if (e1, e2) not in states:
                states.add((e1, e2))
                stack.append((w, e1, e2))
    return table


def _qualifies(query: ResidueQuery, states: set[tuple[int, int]], c1: int, c2: int) -> bool:
    q = query.q
    for e1, e2 in states:
        if (query.a * (c1 + e1) + query.b * (c2 + e2)) % q == query.target:
            return True
    return False


def iter_residue_paths(D: LabeledDigraph, query: ResidueQuery,
                       budget: SearchBudget | None = None,
                       table: dict[int, set[tuple[int, int]]] | None = None) -> Iterator[DirectedPath]:
    """All qualifying simple paths, in deterministic depth-first order."""
    if not D.has_vertex(query.u) or not D.has_vertex(query.v):
        raise ValueError("query endpoints are not vertices of the digraph")
    if table is None:
        table = walk_reach_table(D, query)
    q = query.q
    banned_interior = query.endpoints | query.forbidden

    path = [query.u]
    on_path = {query.u}
    counts = [(0, 0)]

    def extensions(v: int) -> list[int]:
        return [w for w in D.out_neighbors(v)
                if w == query.v or (w not in banned_interior and w not in on_path)]

    stack: list[list[int]] = [extensions(query.u)]
    while stack:
        options = stack[-1]
        if not options:
            stack.pop()
            on_path.discard(path.pop())
            counts.pop()
            continue
        w = options.pop(0)
        if budget is not None:
            budget.charge()
        v = path[-1]
        c1, c2 = counts[-1]
        arc = (v, w)
        n1 = (c1 + (arc in D.z1)) % q
        n2 = (c2 + (arc in D.z2)) % q
        if w == query.v:
            if (query.a * n1 + query.b * n2) % q == query.target:
                yield DirectedPath(tuple(path) + (w,))
            continue
        states = table.get(w)
        if not states or not _qualifies(query, states, n1, n2):
            continue
        path.append(w)
        on_path.add(w)
        counts.append((n1, n2))
        stack.append(extensions(w))


def residue_path(D: LabeledDigraph, query: ResidueQuery,
                 budget: SearchBudget | None = None) -> DirectedPath | None:
    """First qualifying path in deterministic order, or None after a complete
    search proves there is none."""
    for p in iter_residue_paths(D, query, budget=budget):
        return p
    return None


@dataclass
class SearchOutcome:
    """Three-valued search result: found (with witness), proven absent, or
    indeterminate because the budget ran out."""

    status: str
    witness: object | None = None
    expansions: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _feasible_images(D: LabeledDigraph, pattern: SubdivisionPattern) -> list[list[int]]:
    cands: list[list[int]] = []
    for p in range(pattern.num_vertices):
        need_out = pattern.out_degree(p)
        need_in = pattern.in_degree(p)
        cands.append([v for v in D.vertices
                      if len(D.out_neighbors(v)) >= need_out
                      and len(D.in_neighbors(v)) >= need_in])
    return cands


def find_subdivision(D: LabeledDigraph, pattern: SubdivisionPattern,
                     budget: int = 10 ** 7) -> SearchOutcome:
    """Complete search for a subdivision witness within a node-expansion
    budget.  Deterministic: the lexicographically smallest feasible branch
    map that admits a routing wins, and within a map the first path family
    in depth-first order."""
    tracker = SearchBudget(budget)
    candidates = _feasible_images(D, pattern)
    arcs = list(pattern.arcs)

    def route(branch: list[int], idx: int, order: list[PatternArc],
              used_interiors: frozenset[int],
              paths: dict[tuple[int, int], DirectedPath]) -> SubdivisionWitness | None:
        if idx == len(order):
            return SubdivisionWitness(tuple(branch), dict(paths))
        e = order[idx]
        query = ResidueQuery(u=branch[e.tail], v=branch[e.head], a=e.a, b=e.b,
                             q=e.q, target=e.r, endpoints=frozenset(branch),
                             forbidden=used_interiors)
        for p in iter_residue_paths(D, query, budget=tracker):
            paths[e.key] = p
            got = route(branch, idx + 1, order, used_interiors | set(p.interior), paths)
            if got is not None:
                return got
            del paths[e.key]
        return None

    def assign(branch: list[int], used: set[int]) -> SubdivisionWitness | None:
        p = len(branch)
        if p == pattern.num_vertices:
            if not arcs:
                return SubdivisionWitness(tuple(branch), {})
            sizes = []
            for e in arcs:
                query = ResidueQuery(u=branch[e.tail], v=branch[e.head], a=e.a,
                                     b=e.b, q=e.q, target=e.r,
                                     endpoints=frozenset(branch))
                table = walk_reach_table(D, query)
                sizes.append((sum(len(s) for s in table.values()), e.key, e))
            order = [e for _, _, e in sorted(sizes, key=lambda t: (t[0], t[1]))]
            return route(branch, 0, order, frozenset(), {})
        for v in candidates[p]:
            if v in used:
                continue
            tracker.charge()
            branch.append(v)
            used.add(v)
            got = assign(branch, used)
            if got is not None:
                return got
            used.discard(branch.pop())
        return None

    try:
        witness = assign([], set())
    except BudgetExhausted:
        return SearchOutcome(INDETERMINATE, None, tracker.spent)
    if witness is None:
        return SearchOutcome(ABSENT, None, tracker.spent)
    report = verify_witness(D, pattern, witness)
    assert report.ok, f"search produced an invalid witness: {report.failure}"
    return SearchOutcome(FOUND, witness, tracker.spent)


# ---------------------------------------------------------------------------
# Undirected graphs: biorientation and the projected subdivision search.

Edge = tuple[int, int]


def _edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class UndirectedLabeledGraph:
    """A simple undirected graph with two (possibly overlapping) edge classes."""

    __slots__ = ("vertices", "edges", "b1", "b2", "_adj")

    def __init__(self, vertices, edges, b1=(), b2=()):
        self.vertices = tuple(sorted(set(int(v) for v in vertices)))
        vset = set(self.vertices)
        keys = [_edge_key(int(u), int(v)) for u, v in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        for u, v in keys:
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
        self.edges = frozenset(keys)
        self.b1 = frozenset(_edge_key(int(u), int(v)) for u, v in b1)
        self.b2 = frozenset(_edge_key(int(u), int(v)) for u, v in b2)
        if not self.b1 <= self.edges or not self.b2 <= self.edges:
            raise ValueError("b1/b2 contain pairs that are not edges")
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_key(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def edge_label_counts(self, edges) -> tuple[int, int]:
        c1 = c2 = 0
        for u, v in edges:
            key = _edge_key(u, v)
            if key in self.b1:
                c1 += 1
            if key in self.b2:
                c2 += 1
        return c1, c2


def biorient(G: UndirectedLabeledGraph) -> LabeledDigraph:
    """Each edge uv becomes the two arcs (u, v) and (v, u); edge classes lift
    to both orientations."""
    arcs: list[Edge] = []
    z1: list[Edge] = []
    z2: list[Edge] = []
    for u, v in sorted(G.edges):
        arcs.extend([(u, v), (v, u)])
        if (u, v) in G.b1:
            z1.extend([(u, v), (v, u)])
        if (u, v) in G.b2:
            z2.extend([(u, v), (v, u)])
    return LabeledDigraph(G.vertices, arcs, z1, z2)


@dataclass(frozen=True)
class UndirectedPatternEdge:
    u: int
    v: int
    a: int
    b: int
    r: int
    q: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("pattern edges may not be loops")
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        if math.gcd(self.a, self.q) != 1 or math.gcd(self.b, self.q) != 1:
            raise ValueError("a and b must be coprime to the modulus")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)
        object.__setattr__(self, "a", self.a % self.q)
        object.__setattr__(self, "b", self.b % self.q)
        object.__setattr__(self, "r", self.r % self.q)

    @property
    def key(self) -> Edge:
        return (self.u, self.v)


@dataclass(frozen=True)
class UndirectedPattern:
    num_vertices: int
    edges: tuple[UndirectedPatternEdge, ...]

    def __post_init__(self):
        seen: set[Edge] = set()
        for e in self.edges:
            if not (0 <= e.u < self.num_vertices and 0 <= e.v < self.num_vertices):
                raise ValueError(f"pattern edge {e.key} uses an unknown vertex")
            if e.key in seen:
                raise ValueError(f"duplicate pattern edge {e.key}")
            seen.add(e.key)
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.key)))

    def bioriented(self) -> SubdivisionPattern:
        arcs = []
        for e in self.edges:
            arcs.append(PatternArc(e.u, e.v, e.a, e.b, e.r, e.q))
            arcs.append(PatternArc(e.v, e.u, e.a, e.b, e.r, e.q))
        return SubdivisionPattern(self.num_vertices, tuple(arcs))


@dataclass(frozen=True, eq=False)
class UndirectedWitness:
    branch: tuple[int, ...]
    paths: dict[Edge, tuple[int, ...]] = field(default_factory=dict)


def verify_undirected_witness(G: UndirectedLabeledGraph, pattern: UndirectedPattern,
                              witness: UndirectedWitness) -> VerificationReport:
    branch = witness.branch
    if len(branch) != pattern.num_vertices or len(set(branch)) != len(branch):
        return VerificationReport(False, "branch-map", "not an injective full map")
    for v in branch:
        if v not in G._adj:
            return VerificationReport(False, "branch-map", f"unknown graph vertex {v}")
    keys = {e.key for e in pattern.edges}
    if set(witness.paths) != keys:
        return VerificationReport(False, "paths-complete", "path set mismatch")
    branch_set = set(branch)
    used: dict[int, Edge] = {}
    for e in pattern.edges:
        seq = witness.paths[e.key]
        if len(seq) < 2 or len(set(seq)) != len(seq):
            return VerificationReport(False, f"path{e.key}", "not a simple path")
        if {seq[0], seq[-1]} != {branch[e.u], branch[e.v]}:
            return VerificationReport(False, f"path{e.key}", "endpoints do not match")
        for x, y in zip(seq, seq[1:]):
            if not G.has_edge(x, y):
                return VerificationReport(False, f"path{e.key}", f"({x}, {y}) is not an edge")
        for v in seq[1:-1]:
            if v in branch_set:
                return VerificationReport(False, "disjointness",
                                          f"path {e.key} passes through branch vertex {v}")
            if v in used:
                return VerificationReport(False, "disjointness",
                                          f"paths {used[v]} and {e.key} share vertex {v}")
            used[v] = e.key
        c1, c2 = G.edge_label_counts(zip(seq, seq[1:]))
        if (e.a * c1 + e.b * c2) % e.q != e.r:
            return VerificationReport(False, f"congruence{e.key}",
                                      f"residue {(e.a * c1 + e.b * c2) % e.q} != {e.r}")
    return VerificationReport(True)


def find_subdivision_undirected(G: UndirectedLabeledGraph, pattern: UndirectedPattern,
                                budget: int = 10 ** 7) -> SearchOutcome:
    """Biorient G and the pattern, search for a directed witness, then drop
    orientations: for each pattern edge keep the branching path routed along
    the edge's canonical orientation.  Label counts are preserved because
    the classes lift to both arc orientations."""
    D = biorient(G)
    outcome = find_subdivision(D, pattern.bioriented(), budget=budget)
    if outcome.status != FOUND:
        return SearchOutcome(outcome.status, None, outcome.expansions)
    directed = outcome.witness
    assert isinstance(directed, SubdivisionWitness)
    paths = {e.key: directed.paths[(e.u, e.v)].vertices for e in pattern.edges}
    witness = UndirectedWitness(directed.branch, paths)
    report = verify_undirected_witness(G, pattern, witness)
    assert report.ok, f"projection produced an invalid witness: {report.failure}"
    return SearchOutcome(FOUND, witness, outcome.expansions)

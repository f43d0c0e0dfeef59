"""Structural decompositions of digraphs with large mu.

Three constructions, each returning explicit, re-checkable witnesses:

* level split -- among all (BFS level, strong component) pairs, the one of
  maximum oracle-mu; with an exact oracle its value is at least half of
  mu(D), because odd and even levels can be colored with separate palettes.
* connector set -- a vertex set X with D[X] strongly connected, oracle-mu at
  least a quarter of mu(D), and an explicit X-path between every ordered
  pair of X-vertices (endpoints in X, interior outside X).
* nested connector sequence -- iterated connector sets S_0 .. S_m with the
  locality property that S_m-paths recorded at iteration i stay inside
  S_m together with the shell S_{i-1} minus S_i.

Guarantees are always relative to the oracle actually used; degenerate
below-threshold outcomes are returned flagged, never silently certified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (IN, OUT, DirectedPath, LabeledDigraph, Leveling,
                      first_path_to_set, is_strongly_connected, leveling,
                      shortest_path_via_arcs, strong_components)
from .errors import ConstructionFailed, OracleUnavailable, PreconditionViolation
from .oracles import MuOracle


@dataclass(frozen=True)
class LevelSplitResult:
    level_index: int
    component: frozenset[int]
    mu_of_component: int | None
    provenance: str
    verified: bool


def level_split(D: LabeledDigraph, lev: Leveling, oracle: MuOracle,
                min_level: int = 0) -> LevelSplitResult:
    """The (level, strong component) pair of maximum oracle-mu.

    Ties break towards the smaller level index, then the component with the
    smaller leading vertex.  Candidates the oracle cannot evaluate are
    skipped and the result is flagged unverified; if nothing is evaluable
    the largest candidate component is returned unverified.
    """
    if not is_strongly_connected(D):
        raise PreconditionViolation("level_split requires a strongly connected digraph")
    covered = set()
    for level in lev.levels:
        covered |= level
    if covered != set(D.vertices):
        raise ValueError("leveling does not partition the digraph's vertices")

    candidates: list[tuple[int, frozenset[int]]] = []
    for i, level in enumerate(lev.levels):
        if i < min_level:
            continue
        for comp in strong_components(D.induced(level)):
            candidates.append((i, comp))
    if not candidates:
        raise ValueError(f"no levels at index >= {min_level}")

    best: tuple[int, int, int, frozenset[int]] | None = None
    verified = True
    for i, comp in candidates:
        try:
            value = oracle.mu(comp)
        except OracleUnavailable:
            verified = False
            continue
        key = (-value, i, min(comp))
        if best is None or key < (best[0], best[1], best[2]):
            best = (-value, i, min(comp), comp)
    if best is None:
        i, comp = max(candidates, key=lambda c: (len(c[1]), -c[0], -min(c[1])))
        return LevelSplitResult(i, comp, None, oracle.name, False)
    return LevelSplitResult(best[1], best[3], -best[0], oracle.name, verified)


class ConnectorSet:
    """A connector set X plus the machinery to realize X-paths on demand.

    The construction keeps the in-leveling used to escape from X towards the
    starting vertex, the entry path into the intermediate component, and the
    out-leveling used to descend back into X; the path for an ordered pair is
    spliced from those pieces, verified, and cached.
    """

    def __init__(self, D: LabeledDigraph, X: frozenset[int], x0: int, x1: int,
                 entry_path: DirectedPath, in_lev: Leveling, X1: frozenset[int],
                 out_lev: Leveling, mu_value: int | None, provenance: str,
                 flags: tuple[str, ...]):
        self.D = D
        self.X = X
        self.x0 = x0
        self.x1 = x1
        self.entry_path = entry_path
        self.in_lev = in_lev
        self.X1 = X1
        self.out_lev = out_lev
        self.mu_value = mu_value
        self.provenance = provenance
        self.flags = flags
        self._in_level_of = in_lev.level_of()
        self._out_level_of = out_lev.level_of()
        self._table: dict[tuple[int, int], DirectedPath] = {}

    def escape_path(self, u: int) -> DirectedPath:
        """Directed path from u down the in-leveling to the starting vertex,
        one vertex per level; it meets X1 only at u."""
        if u not in self.X1:
            raise ValueError(f"{u} is not in the intermediate component")
        seq = [u]
        level = self._in_level_of[u]
        while level > 0:
            prev = self.in_lev.levels[level - 1]
            seq.append(min(w for w in self.D.out_neighbors(seq[-1]) if w in prev))
            level -= 1
        return DirectedPath(tuple(seq))

    def descent_path(self, u: int) -> DirectedPath:
        """Directed path from x1 to u inside D[X1], one vertex per level of
        the out-leveling; it meets X only at u."""
        if u not in self.X:
            raise ValueError(f"{u} is not in the connector set")
        seq = [u]
        level = self._out_level_of[u]
        while level > 0:
            prev = self.out_lev.levels[level - 1]
            seq.append(min(w for w in self.D.in_neighbors(seq[-1])
                           if w in self.X1 and self._out_level_of.get(w) == level - 1))
            level -= 1
        seq.reverse()
        return DirectedPath(tuple(seq))

    def path(self, x: int, y: int) -> DirectedPath:
        """A verified X-path from x to y (lazily built and cached)."""
        if x == y:
            raise ValueError("an X-path joins two distinct vertices")
        if x not in self.X or y not in self.X:
            raise ValueError("endpoints must lie in the connector set")
        key = (x, y)
        if key in self._table:
            return self._table[key]
        union = set(self.escape_path(x).arcs()) | set(self.entry_path.arcs())
        towards = shortest_path_via_arcs(union, x, self.x1)
        if towards is None:
            raise ConstructionFailed("connector-path", f"no route from {x} to {self.x1}")
        down = self.descent_path(y)
        seq = towards.vertices + down.vertices[1:]
        if len(set(seq)) != len(seq):
            raise ConstructionFailed("connector-path", f"splice for ({x}, {y}) is not simple")
        path = DirectedPath(seq)
        if not path.valid_in(self.D):
            raise ConstructionFailed("connector-path", f"splice for ({x}, {y}) leaves the digraph")
        if any(v in self.X for v in path.interior):
            raise ConstructionFailed("connector-path", f"splice for ({x}, {y}) re-enters X")
        self._table[key] = path
        return path

    def known_paths(self) -> dict[tuple[int, int], DirectedPath]:
        return dict(self._table)


def connector_set(D: LabeledDigraph, oracle: MuOracle, start: int | None = None) -> ConnectorSet:
    """Connector set via in-leveling, level split, entry path, out-leveling,
    and a second level split.  ``start`` overrides the default starting
    vertex (the smallest identifier)."""
    if not is_strongly_connected(D):
        raise PreconditionViolation("connector_set requires a strongly connected digraph")
    x0 = min(D.vertices) if start is None else start
    if not D.has_vertex(x0):
        raise ValueError(f"unknown start vertex {x0}")
    flags: list[str] = []

    in_lev = leveling(D, x0, IN)
    split1 = level_split(D, in_lev, oracle)
    if not split1.verified:
        flags.append("unverified-entry-split")
    X1 = split1.component
    if split1.level_index == 0:
        flags.append("degenerate-entry-level")
        x1 = x0
        entry = DirectedPath((x0,))
    else:
        entry = first_path_to_set(D, [x0], X1)
        assert entry is not None  # strong connectivity guarantees a route
        x1 = entry.last

    sub = D.induced(X1)
    out_lev = leveling(sub, x1, OUT)
    split2 = level_split(sub, out_lev, oracle)
    if not split2.verified:
        flags.append("unverified-exit-split")
    if split2.level_index == 0:
        flags.append("degenerate-exit-level")
    return ConnectorSet(D, split2.component, x0, x1, entry, in_lev, X1, out_lev,
                        split2.mu_of_component, oracle.name, tuple(flags))


class NestedSequence:
    """Sets S_0 .. S_m from iterated connector extraction, with per-level
    path realization confined to per-level shells."""

    def __init__(self, D: LabeledDigraph, sets: tuple[frozenset[int], ...],
                 connectors: tuple[ConnectorSet, ...], provenance: str,
                 flags: tuple[str, ...]):
        self.D = D
        self.sets = sets
        self.connectors = connectors
        self.provenance = provenance
        self.flags = flags

    @property
    def m(self) -> int:
        return len(self.sets) - 1

    @property
    def mu_values(self) -> tuple[int | None, ...]:
        return tuple(c.mu_value for c in self.connectors)

    def shell(self, i: int) -> frozenset[int]:
        """S_{i-1} minus S_i, the region available to level-i paths."""
        if not 1 <= i <= self.m:
            raise ValueError(f"level index {i} out of range")
        return self.sets[i - 1] - self.sets[i]

    def path(self, x: int, y: int, i: int) -> DirectedPath:
        """An S_i-path from x to y living inside S_i plus the level-i shell.

        For x, y in the innermost set this realizes the locality property:
        the interior stays inside S_{i-1} minus S_i.
        """
        if not 1 <= i <= self.m:
            raise ValueError(f"level index {i} out of range")
        p = self.connectors[i - 1].path(x, y)
        shell = self.shell(i)
        if any(v not in shell for v in p.interior):
            raise ConstructionFailed("locality", f"level-{i} path leaves its shell")
        return p


def nested_connector_sequence(D: LabeledDigraph, m: int, oracle: MuOracle,
                              start: int | None = None) -> NestedSequence:
    """Iterate connector extraction m times; m = 0 yields just S_0 = V(D)."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError("m must be a nonnegative integer")
    if not is_strongly_connected(D):
        raise PreconditionViolation("nested_connector_sequence requires a strongly "
                                    "connected digraph")
    sets = [frozenset(D.vertices)]
    connectors: list[ConnectorSet] = []
    flags: list[str] = []
    for i in range(m):
        host = D.induced(sets[-1])
        cs = connector_set(host, oracle, start=start if i == 0 else None)
        connectors.append(cs)
        sets.append(cs.X)
        flags.extend(f"level-{i + 1}:{f}" for f in cs.flags)
    return NestedSequence(D, tuple(sets), tuple(connectors), oracle.name, tuple(flags))

"""Unbalanced cycles: detection, shortest such cycle, greedy disjoint packing.

A directed cycle is unbalanced when it meets z1 and z2 a different number of
times, i.e. when its total arc weight is nonzero.  Detection runs in linear
time via vertex potentials: inside one strong component fix a root, give each
vertex the accumulated weight of a spanning-tree path from the root, and
compare potential differences against arc weights.  Every cycle weight
vanishes exactly when every intra-component arc is consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .digraph import Arc, LabeledDigraph, strong_components


@dataclass(frozen=True)
class DirectedCycle:
    """A simple directed cycle in canonical rotation (smallest vertex first).

    ``z1_count`` and ``z2_count`` are the label counts of its arcs in the
    host digraph it was built from; they are stable across induced subgraphs
    because labels restrict with the arcs.
    """

    vertices: tuple[int, ...]
    z1_count: int
    z2_count: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def weight(self) -> int:
        return self.z1_count - self.z2_count

    def arcs(self) -> Iterator[Arc]:
        return zip(self.vertices, self.vertices[1:] + self.vertices[:1])

    @classmethod
    def from_vertices(cls, D: LabeledDigraph, seq) -> "DirectedCycle":
        seq = tuple(int(v) for v in seq)
        if len(seq) < 2:
            raise ValueError("a directed cycle has length at least 2")
        if len(set(seq)) != len(seq):
            raise ValueError("cycle vertices must be pairwise distinct")
        arcs = list(zip(seq, seq[1:] + seq[:1]))
        for u, v in arcs:
            if not D.has_arc(u, v):
                raise ValueError(f"({u}, {v}) is not an arc of the digraph")
        k = seq.index(min(seq))
        c1, c2 = D.label_counts(arcs)
        return cls(seq[k:] + seq[:k], c1, c2)


def is_unbalanced(cycle: DirectedCycle) -> bool:
    """True iff the cycle meets z1 and z2 a different number of times."""
    return cycle.weight != 0


def _component_unbalanced(D: LabeledDigraph, comp: frozenset[int]) -> bool:
    root = min(comp)
    pot = {root: 0}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in D.out_neighbors(u):
            if w in comp and w not in pot:
                pot[w] = pot[u] + D.weight((u, w))
                stack.append(w)
    for u in comp:
        for w in D.out_neighbors(u):
            if w in comp and pot[w] - pot[u] != D.weight((u, w)):
                return True
    return False


def has_unbalanced_cycle(D: LabeledDigraph) -> bool:
    """Linear-time decision via potential consistency per strong component."""
    return any(_component_unbalanced(D, comp) for comp in strong_components(D))


def _shortest_through_root(D: LabeledDigraph, comp: frozenset[int], root: int,
                           max_len: int) -> tuple[int, ...] | None:
    """Shortest closed walk with nonzero total weight through ``root``,
    searched inside one strong component by BFS over (vertex, weight) states.
    Returns the walk's vertex sequence without the final root, or None if no
    such walk of length <= max_len exists."""
    if max_len < 2:
        return None
    start = (root, 0)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    frontier = [start]
    depth = 0
    while frontier and depth < max_len:
        depth += 1
        nxt: list[tuple[int, int]] = []
        for state in frontier:
            v, w = state
            for z in D.out_neighbors(v):
                w2 = w + D.weight((v, z))
                if z == root:
                    if w2 != 0:
                        seq = [v]
                        cur = parent[state]
                        while cur is not None:
                            seq.append(cur[0])
                            cur = parent[cur]
                        seq.reverse()
                        return tuple(seq)
                    continue
                if z not in comp:
                    continue
                s2 = (z, w2)
                if s2 not in parent:
                    parent[s2] = state
                    nxt.append(s2)
        frontier = nxt
    return None


def shortest_unbalanced_cycle(D: LabeledDigraph) -> DirectedCycle | None:
    """A minimum-length unbalanced directed cycle, or None when D is balanced.

    Per root vertex, a BFS over (vertex, accumulated weight) states finds the
    shortest nonzero-weight closed walk through that root; the global minimum
    over roots is attained by a simple cycle, because a shorter decomposition
    of a non-simple walk would itself contain a nonzero-weight closed walk.
    Ties break towards the smallest root.
    """
    best: tuple[int, ...] | None = None
    for comp in strong_components(D):
        if not _component_unbalanced(D, comp):
            continue
        cap = len(comp)
        for root in sorted(comp):
            max_len = cap if best is None else min(cap, len(best) - 1)
            found = _shortest_through_root(D, comp, root, max_len)
            if found is not None and (best is None or len(found) < len(best)):
                best = found
                if len(best) == 2:
                    break
        if best is not None and len(best) == 2:
            break
    if best is None:
        return None
    return DirectedCycle.from_vertices(D, best)


@dataclass(frozen=True)
class CyclePacking:
    """Result of greedy disjoint-cycle extraction; may fall short of the
    requested count when the residual digraph becomes balanced."""

    requested: int
    cycles: tuple[DirectedCycle, ...]

    @property
    def complete(self) -> bool:
        return len(self.cycles) == self.requested

    @property
    def shortfall(self) -> int:
        return self.requested - len(self.cycles)


def disjoint_unbalanced_cycles(D: LabeledDigraph, t: int) -> CyclePacking:
    """Up to ``t`` pairwise vertex-disjoint unbalanced cycles, extracted by
    repeatedly taking a shortest unbalanced cycle and deleting its vertices.
    When mu(D) >= 2t the packing is guaranteed complete."""
    if not isinstance(t, int) or isinstance(t, bool) or t <= 0:
        raise ValueError("t must be a positive integer")
    cycles: list[DirectedCycle] = []
    remaining = D
    while len(cycles) < t:
        c = shortest_unbalanced_cycle(remaining)
        if c is None:
            break
        cycles.append(c)
        remaining = remaining.induced(set(remaining.vertices) - set(c.vertices))
    return CyclePacking(requested=t, cycles=tuple(cycles))

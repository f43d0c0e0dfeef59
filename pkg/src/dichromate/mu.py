"""Exact computation and certification of the unbalanced dichromatic number.

mu(D, z1, z2) is the least number of parts in a vertex partition of D such
that no part induces an unbalanced directed cycle.  With z1 = A(D) and
z2 = empty this is the ordinary dichromatic number.

The solver reduces to strong components (mu is the maximum over them, since
no directed cycle crosses components), then runs iterative deepening on the
part count k: a backtracking assignment in a fixed vertex order, with
symmetry breaking (a vertex may open part c only when parts 0..c-1 are
already open) and a balance re-test of the touched part after every
assignment.  The exhausted search at k-1 is the lower-bound certificate,
recorded as a trace of explored node counts; the returned partition is the
upper-bound certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .balance import has_unbalanced_cycle
from .digraph import LabeledDigraph, strong_components
from .errors import MuBoundExceeded


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty vertex blocks; callers check coverage against a digraph."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        total = 0
        union: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            total += len(b)
            union |= b
        if len(union) != total:
            raise ValueError("blocks must be pairwise disjoint")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        norm = sorted((frozenset(b) for b in blocks), key=lambda b: min(b) if b else -1)
        return cls(tuple(norm))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def covers(self, D: LabeledDigraph) -> bool:
        union: set[int] = set()
        for b in self.blocks:
            union |= b
        return union == set(D.vertices)


@dataclass(frozen=True)
class ComponentTrace:
    """Search record for one strong component: (k, nodes explored) per depth."""

    component: frozenset[int]
    attempts: tuple[tuple[int, int], ...]
    value: int


@dataclass(frozen=True)
class MuResult:
    value: int
    certificate: VertexPartition
    lower_bound_trace: tuple[ComponentTrace, ...]


def verify_partition(D: LabeledDigraph, partition: VertexPartition) -> bool:
    """True iff every block induces a balanced subdigraph.  The blocks must
    partition V(D) exactly."""
    if not partition.covers(D):
        raise ValueError("blocks do not partition the vertex set")
    return all(not has_unbalanced_cycle(D.induced(b)) for b in partition.blocks)


def _search_k(sub: LabeledDigraph, order: list[int], k: int) -> tuple[list[frozenset[int]] | None, int]:
    """Backtracking k-part assignment; returns (blocks or None, nodes explored)."""
    n = len(order)
    classes: list[set[int]] = [set() for _ in range(k)]
    nodes = 0

    def rec(idx: int, opened: int) -> bool:
        nonlocal nodes
        if idx == n:
            return True
        v = order[idx]
        for c in range(min(opened + 1, k)):
            nodes += 1
            classes[c].add(v)
            if not has_unbalanced_cycle(sub.induced(classes[c])):
                if rec(idx + 1, max(opened, c + 1)):
                    return True
            classes[c].remove(v)
        return False

    if rec(0, 0):
        return [frozenset(c) for c in classes if c], nodes
    return None, nodes


def _solve_component(sub: LabeledDigraph, limit: int | None):
    """Iterative deepening over the part count for one strong component."""
    if sub.n == 0:
        return 0, [], []
    order = sorted(
        sub.vertices,
        key=lambda v: (-(len(sub.out_neighbors(v)) + len(sub.in_neighbors(v))), v),
    )
    attempts: list[tuple[int, int]] = []
    k = 1
    while True:
        if limit is not None and k > limit:
            return None, None, attempts
        blocks, nodes = _search_k(sub, order, k)
        attempts.append((k, nodes))
        if blocks is not None:
            return k, blocks, attempts
        k += 1


def mu_exact(D: LabeledDigraph, limit: int | None = None) -> MuResult:
    """Exact mu with an upper-bound certificate partition and a lower-bound
    search trace.

    With ``limit`` set, the computation is abandoned as soon as the answer is
    provably greater than ``limit``, raising MuBoundExceeded with the best
    bounds known; this serves threshold queries without paying for the exact
    value.
    """
    comps = strong_components(D)
    if not comps:
        return MuResult(0, VertexPartition(()), ())
    traces: list[ComponentTrace] = []
    comp_blocks: list[list[frozenset[int]]] = []
    value = 0
    for comp in comps:
        sub = D.induced(comp)
        k, blocks, attempts = _solve_component(sub, limit)
        if k is None:
            assert limit is not None
            raise MuBoundExceeded(lower_bound=limit + 1,
                                  upper_bound=mu_greedy_upper(D).num_blocks)
        traces.append(ComponentTrace(comp, tuple(attempts), k))
        comp_blocks.append(blocks)
        value = max(value, k)
    merged: list[frozenset[int]] = []
    for i in range(value):
        blk: set[int] = set()
        for blocks in comp_blocks:
            if i < len(blocks):
                blk |= blocks[i]
        merged.append(frozenset(blk))
    return MuResult(value, VertexPartition.from_blocks(merged), tuple(traces))


def mu_component_max(D: LabeledDigraph) -> int:
    """max over strong components H of mu(H).  Equals mu_exact(D).value; the
    two are computed independently so the reduction is testable."""
    comps = strong_components(D)
    if not comps:
        return 0
    return max(mu_exact(D.induced(c)).value for c in comps)


def mu_greedy_upper(D: LabeledDigraph) -> VertexPartition:
    """Fast valid partition: each vertex joins the first block whose induced
    subdigraph stays balanced.  Block count upper-bounds the exact value."""
    blocks: list[set[int]] = []
    for v in D.vertices:
        placed = False
        for b in blocks:
            b.add(v)
            if not has_unbalanced_cycle(D.induced(b)):
                placed = True
                break
            b.remove(v)
        if not placed:
            blocks.append({v})
    return VertexPartition.from_blocks(frozenset(b) for b in blocks)

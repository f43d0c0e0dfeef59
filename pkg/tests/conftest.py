"""Shared builders for the test suite."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from dichromate import LabeledDigraph, gen_bioriented_clique


def digraph(n, arcs, z1=(), z2=()):
    return LabeledDigraph.on_range(n, arcs, z1, z2)


def directed_cycle_graph(n, z1_indices=(), z2_indices=()):
    """Directed n-cycle 0 -> 1 -> ... -> 0; class membership given by arc
    indices (arc i is (i, (i+1) % n))."""
    arcs = [(i, (i + 1) % n) for i in range(n)]
    return LabeledDigraph.on_range(n, arcs,
                                   z1=[arcs[i] for i in z1_indices],
                                   z2=[arcs[i] for i in z2_indices])


def bio_clique(n):
    return gen_bioriented_clique(n).digraph


def digon(z1=(), z2=()):
    return LabeledDigraph.on_range(2, [(0, 1), (1, 0)], z1, z2)

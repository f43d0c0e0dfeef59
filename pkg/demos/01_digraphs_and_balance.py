"""Labeled digraphs and unbalanced cycles.

A digraph carries two arc classes, z1 and z2.  A directed cycle is
*unbalanced* when it meets the two classes a different number of times;
equivalently its total weight under w(arc) = [arc in z1] - [arc in z2] is
nonzero.  This walk-through builds a few small digraphs and exercises the
balance toolkit on them.
"""

from dichromate import (LabeledDigraph, disjoint_unbalanced_cycles,
                        has_unbalanced_cycle, shortest_unbalanced_cycle,
                        strong_components)

# A 6-cycle with alternating class membership: three z1 arcs vs three z2
# arcs, so its one cycle is perfectly balanced.
arcs = [(i, (i + 1) % 6) for i in range(6)]
alternating = LabeledDigraph.on_range(6, arcs,
                                      z1=[arcs[0], arcs[2], arcs[4]],
                                      z2=[arcs[1], arcs[3], arcs[5]])
print("alternating 6-cycle unbalanced?", has_unbalanced_cycle(alternating))

# Flip one arc out of z2 and the cycle tips over.
tilted = LabeledDigraph.on_range(6, arcs, z1=[arcs[0], arcs[2], arcs[4]],
                                 z2=[arcs[1], arcs[3]])
print("tilted 6-cycle unbalanced?   ", has_unbalanced_cycle(tilted))
print("shortest unbalanced cycle:   ", shortest_unbalanced_cycle(tilted).vertices)

# A bioriented clique with every arc in z1 is as unbalanced as it gets:
# every digon has weight 2.  Greedy extraction peels disjoint digons.
n = 8
clique_arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
clique = LabeledDigraph.on_range(n, clique_arcs, z1=clique_arcs)
print("clique strong components:    ", strong_components(clique))
packing = disjoint_unbalanced_cycles(clique, 4)
print(f"disjoint unbalanced cycles ({len(packing.cycles)} of {packing.requested}):")
for cycle in packing.cycles:
    print("   ", cycle.vertices, "weight", cycle.weight)

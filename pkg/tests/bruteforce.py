"""Independent brute-force oracles used to check the library.

Everything here is deliberately naive and self-contained: cycle and path
enumeration by DFS, mu by full set-partition enumeration, strong components
by mutual reachability, and a plain path-length subdivision finder.  None of
it shares code with the implementations under test.
"""

from __future__ import annotations

from itertools import permutations

from dichromate import UndirectedLabeledGraph


def reachable_set(D, start):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in D.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def scc_mutual_reachability(D):
    """Strong components via pairwise mutual reachability."""
    reach = {v: reachable_set(D, v) for v in D.vertices}
    comps = []
    assigned = set()
    for v in D.vertices:
        if v in assigned:
            continue
        comp = {w for w in D.vertices if w in reach[v] and v in reach[w]}
        assigned |= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def simple_cycles(D):
    """All simple directed cycles, canonicalized to start at their smallest
    vertex.  DFS restricted to vertices >= the start vertex."""
    for s in D.vertices:
        path = [s]
        on_path = {s}

        def dfs():
            v = path[-1]
            for w in D.out_neighbors(v):
                if w == s and len(path) >= 2:
                    yield tuple(path)
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from dfs()
                    on_path.discard(path.pop())

        yield from dfs()


def is_balanced_brute(D):
    for cyc in simple_cycles(D):
        c1, c2 = D.label_counts(zip(cyc, cyc[1:] + cyc[:1]))
        if c1 != c2:
            return False
    return True


def unbalanced_cycle_lengths(D):
    out = []
    for cyc in simple_cycles(D):
        c1, c2 = D.label_counts(zip(cyc, cyc[1:] + cyc[:1]))
        if c1 != c2:
            out.append(len(cyc))
    return out


def iter_set_partitions(items):
    """All set partitions via restricted growth strings."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            blocks = {}
            for x, c in zip(items, rgs):
                blocks.setdefault(c, []).append(x)
            yield [frozenset(b) for b in blocks.values()]
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def mu_brute(D, cache=None):
    """Minimum number of parts over all set partitions where every block's
    induced subdigraph has only balanced cycles."""
    if D.n == 0:
        return 0
    if cache is None:
        cache = {}

    def balanced(block):
        if block not in cache:
            cache[block] = is_balanced_brute(D.induced(block))
        return cache[block]

    best = D.n
    for partition in iter_set_partitions(D.vertices):
        if len(partition) >= best:
            continue
        if all(balanced(b) for b in partition):
            best = len(partition)
    return best


def min_balanced_partition_size(D):
    return mu_brute(D)


def all_simple_paths(D, u, v, banned_interior=frozenset()):
    """All simple directed u-v paths whose interior avoids banned_interior."""
    if u == v:
        return
    path = [u]
    on_path = {u}

    def dfs():
        x = path[-1]
        for w in D.out_neighbors(x):
            if w == v:
                yield tuple(path) + (v,)
            elif w not in on_path and w not in banned_interior and w != v:
                path.append(w)
                on_path.add(w)
                yield from dfs()
                on_path.discard(path.pop())

    yield from dfs()


def path_count_pairs(D, u, v, banned_interior=frozenset()):
    """Set of (|z1 arcs|, |z2 arcs|) over all simple u-v paths."""
    pairs = set()
    for p in all_simple_paths(D, u, v, banned_interior):
        pairs.add(D.label_counts(zip(p, p[1:])))
    return pairs


def residue_reachable(D, u, v, a, b, q, target, banned_interior=frozenset()):
    return any((a * c1 + b * c2) % q == target % q
               for c1, c2 in path_count_pairs(D, u, v, banned_interior))


def brute_find_subdivision(D, pattern):
    """Complete enumeration over injective branch maps and path tuples,
    constrained by the pattern's label congruences.  Returns a
    (branch, paths) pair or None."""
    arcs = sorted(pattern.arcs, key=lambda e: e.key)
    verts = sorted(D.vertices)

    for branch in permutations(verts, pattern.num_vertices):
        branch_set = set(branch)

        def route(i, used):
            if i == len(arcs):
                return {}
            e = arcs[i]
            u, v = branch[e.tail], branch[e.head]
            for p in all_simple_paths(D, u, v, banned_interior=branch_set | used):
                c1, c2 = D.label_counts(zip(p, p[1:]))
                if (e.a * c1 + e.b * c2) % e.q != e.r:
                    continue
                rest = route(i + 1, used | set(p[1:-1]))
                if rest is not None:
                    rest[e.key] = p
                    return rest
            return None

        paths = route(0, set())
        if paths is not None:
            return branch, paths
    return None


def brute_find_subdivision_by_length(D, pattern):
    """Plain path-length-residue subdivision finder: identical enumeration,
    but each branching path is constrained only by |arcs| mod q."""
    arcs = sorted(pattern.arcs, key=lambda e: e.key)
    verts = sorted(D.vertices)

    for branch in permutations(verts, pattern.num_vertices):
        branch_set = set(branch)

        def route(i, used):
            if i == len(arcs):
                return {}
            e = arcs[i]
            u, v = branch[e.tail], branch[e.head]
            for p in all_simple_paths(D, u, v, banned_interior=branch_set | used):
                if (len(p) - 1) % e.q != e.r:
                    continue
                rest = route(i + 1, used | set(p[1:-1]))
                if rest is not None:
                    rest[e.key] = p
                    return rest
            return None

        paths = route(0, set())
        if paths is not None:
            return branch, paths
    return None


def undirected_simple_cycles(G):
    """All undirected simple cycles (length >= 3), canonical: smallest vertex
    first, second vertex smaller than last."""
    for s in G.vertices:
        path = [s]
        on_path = {s}

        def dfs():
            x = path[-1]
            for w in G.neighbors(x):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from dfs()
                    on_path.discard(path.pop())

        yield from dfs()


def mu_star_brute(G):
    """Undirected analogue of mu by partition enumeration."""
    if not G.vertices:
        return 0
    cache = {}

    def balanced(block):
        if block not in cache:
            sub_edges = [e for e in G.edges if e[0] in block and e[1] in block]
            sub = UndirectedLabeledGraph(block, sub_edges,
                                         b1=[e for e in sub_edges if e in G.b1],
                                         b2=[e for e in sub_edges if e in G.b2])
            ok = True
            for cyc in undirected_simple_cycles(sub):
                c1, c2 = sub.edge_label_counts(zip(cyc, cyc[1:] + cyc[:1]))
                if c1 != c2:
                    ok = False
                    break
            cache[block] = ok
        return cache[block]

    best = len(G.vertices)
    for partition in iter_set_partitions(G.vertices):
        if len(partition) >= best:
            continue
        if all(balanced(b) for b in partition):
            best = len(partition)
    return best

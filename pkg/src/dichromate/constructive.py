"""The constructive extraction pipeline.

Starting from a digraph of large mu, the pipeline produces, in order:

* a directed cycle carrying at least two arcs that lie in exactly one of
  z1, z2 (``two_arc_cycle``);
* a "special set" stage: nested sets U inside Y, plus a path P into U whose
  first arc lies in the symmetric difference and whose first two vertices
  are reachable from an anchor by paths of known label residues
  (``special_set``);
* 2q-3 iterated special-set stages, the gadgets (``gadget_sequences``);
* a residue-universal set X: between any ordered pair of X-vertices and for
  any coprime target, an explicit X-path achieving the target residue
  (``residue_universal_set``);
* a full subdivision witness by induction on the pattern's arcs
  (``extract_subdivision``).

Each sufficiency threshold is exposed as a pure function, but the
constructions run best-effort on inputs of any size: the thresholds are
sufficient, not necessary.  No operation ever returns an unverified object;
each runs its own independent condition checker and raises
ConstructionFailed (naming the stage) rather than emitting a walk that
merely resembles the intended structure.

The only tunable is ``floor``: the mu level to which a residue class is
shrunk before extracting the two-arc cycle.  The certified value is 1536;
desk-scale runs on generated families use something like 14, the smallest
value for which the two-arc stage can succeed on fully z1-labeled
bioriented cliques.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import DirectedCycle, disjoint_unbalanced_cycles
from .decomposition import level_split, nested_connector_sequence
from .digraph import (IN, OUT, DirectedPath, LabeledDigraph, Leveling,
                      bfs_tree, first_path_to_set, is_strongly_connected,
                      leveling, shortest_path_via_arcs, strong_components,
                      tree_path)
from .errors import ConstructionFailed, OracleUnavailable, PreconditionViolation
from .oracles import MuOracle
from .subdivision import SubdivisionPattern, SubdivisionWitness, verify_witness

TWO_ARC_MU_THRESHOLD = 1536
CORE_FLOOR = 1536


def special_set_threshold(q: int) -> int:
    """mu level sufficient for the special-set stage at modulus q."""
    return 3072 * q * q


def gadget_threshold(q: int) -> int:
    """mu level sufficient for the full 2q-3 gadget iteration."""
    return 1536 * 2 ** (2 * q - 3) * (q * q + 1) - 3072


def universal_threshold(q: int, n_target: int) -> int:
    """mu level sufficient for a residue-universal set whose retained set
    still has mu at least ``n_target``."""
    return 2 ** (2 * q - 2) * max(1536 * (q * q + 1), 2 * n_target + 3072) - 6144


def subdivision_threshold(pattern: SubdivisionPattern) -> int:
    """Recursive sufficiency threshold for extracting the full pattern."""
    if not pattern.arcs:
        return pattern.num_vertices
    f = sorted(pattern.arcs, key=lambda e: (-e.q, e.key))[0]
    inner = subdivision_threshold(pattern.without_arc(f.key))
    return universal_threshold(f.q, max(inner, 2))


def _delta_arcs(D: LabeledDigraph, arcs) -> list:
    return [a for a in arcs if (a in D.z1) != (a in D.z2)]


def two_arc_cycle(D: LabeledDigraph, oracle: MuOracle) -> DirectedCycle:
    """A directed cycle with at least two arcs in exactly one of z1, z2.

    Built from a depth-4 nested connector sequence: two pivot vertices and
    two disjoint unbalanced cycles inside the innermost set, joined by four
    locality paths whose interiors live in pairwise disjoint shells.
    """
    seq = nested_connector_sequence(D, 4, oracle)
    inner = seq.sets[4]
    if len(inner) < 2:
        raise ConstructionFailed("pivots", f"innermost set has {len(inner)} < 2 vertices")
    v1, v2 = sorted(inner)[:2]
    packing = disjoint_unbalanced_cycles(D.induced(inner - {v1, v2}), 2)
    if not packing.complete:
        raise ConstructionFailed("disjoint-cycles",
                                 f"found {len(packing.cycles)} of 2 disjoint unbalanced cycles")
    c1, c2 = packing.cycles
    e1 = _delta_arcs(D, c1.arcs())[0]
    e2 = _delta_arcs(D, c2.arcs())[0]
    p1 = seq.path(v1, e1[0], 1)
    p2 = seq.path(e1[1], v2, 2)
    p3 = seq.path(v2, e2[0], 3)
    p4 = seq.path(e2[1], v1, 4)
    ring = p1.vertices + p2.vertices + p3.vertices[1:] + p4.vertices[:-1]
    try:
        cycle = DirectedCycle.from_vertices(D, ring)
    except ValueError as exc:
        raise ConstructionFailed("splice", str(exc)) from exc
    if len(_delta_arcs(D, cycle.arcs())) < 2:
        raise ConstructionFailed("splice", "fewer than two arcs in exactly one class")
    return cycle


@dataclass(frozen=True)
class SpecialSetResult:
    """One special-set stage.  ``path`` runs inside D[Y], starts with an arc
    in exactly one of z1, z2, and meets U only at its last vertex ``w``; the
    witnesses are anchor-to-path routes whose z1/z2 counts are congruent to
    (r, s) mod q.  Residues are normalized to 0..q-1."""

    x: int
    q: int
    U: frozenset[int]
    Y: frozenset[int]
    w: int
    path: DirectedPath
    r: int
    s: int
    witness_first: DirectedPath
    witness_second: DirectedPath
    cycle: DirectedCycle
    y_class: frozenset[int]
    core: frozenset[int]
    provenance: str


def special_set(D: LabeledDigraph, x: int, q: int, oracle: MuOracle,
                floor: int = CORE_FLOOR) -> SpecialSetResult:
    """One stage of the gadget construction:
    BFS tree from x, level split, residue-class refinement, minimal core,
    two-arc cycle inside the core, then a cut of cycle-plus-exit-path whose
    first arc distinguishes the classes."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    if not D.has_vertex(x):
        raise ValueError(f"unknown vertex {x}")
    if not is_strongly_connected(D):
        raise PreconditionViolation("special_set requires a strongly connected digraph")

    tree = bfs_tree(D, x, OUT)
    lev = leveling(D, x, OUT)
    if len(lev.levels) < 2:
        raise ConstructionFailed("level-split", "no levels beyond the root")
    split = level_split(D, lev, oracle, min_level=1)
    Y = split.component

    tpaths = {v: tree_path(tree, v) for v in sorted(Y)}
    classes: dict[tuple[int, int], set[int]] = {}
    for v, p in tpaths.items():
        k1, k2 = D.label_counts(p.arcs())
        classes.setdefault((k1 % q, k2 % q), set()).add(v)
    best_key: tuple[int, int] | None = None
    best_val = -1
    for key in sorted(classes):
        val = oracle.mu(classes[key])
        if val > best_val:
            best_key, best_val = key, val
    assert best_key is not None
    r, s = best_key
    y_class = frozenset(classes[best_key])

    if not oracle.mu_at_least(y_class, floor):
        raise ConstructionFailed("core-floor",
                                 f"best residue class has mu below the floor {floor}")
    core = set(y_class)
    for v in sorted(y_class):
        trial = core - {v}
        if trial and oracle.mu_at_least(trial, floor):
            core = trial
    core_set = frozenset(core)

    cycle = two_arc_cycle(D.induced(core_set), oracle)

    residual = Y - core_set
    if not residual:
        raise ConstructionFailed("residual", "nothing remains outside the core")
    target = oracle.mu(residual)
    U = set(residual)
    for v in sorted(residual):
        trial = U - {v}
        if trial and oracle.mu(trial) == target:
            U = trial
    U_set = frozenset(U)

    exit_path = first_path_to_set(D.induced(Y), set(cycle.vertices), U_set)
    assert exit_path is not None  # D[Y] is strongly connected
    z = exit_path.first
    e = next(a for a in _delta_arcs(D, cycle.arcs()) if a[0] != z)
    ring = cycle.vertices
    i0 = ring.index(e[0])
    seg = []
    for j in range(len(ring)):
        v = ring[(i0 + j) % len(ring)]
        seg.append(v)
        if v == z:
            break
    path = DirectedPath(tuple(seg) + exit_path.vertices[1:])

    result = SpecialSetResult(
        x=x, q=q, U=U_set, Y=Y, w=path.last, path=path, r=r, s=s,
        witness_first=tpaths[path.vertices[0]],
        witness_second=tpaths[path.vertices[1]],
        cycle=cycle, y_class=y_class, core=core_set, provenance=oracle.name,
    )
    problems = check_special_set(D, x, q, result, oracle=oracle, floor=floor)
    if problems:
        raise ConstructionFailed("self-check", problems[0])
    return result


def check_special_set(D: LabeledDigraph, x: int, q: int, res: SpecialSetResult,
                      oracle: MuOracle | None = None,
                      floor: int = CORE_FLOOR) -> list[str]:
    """Independent verifier for the special-set conditions; returns the list
    of violations (empty when everything holds).  The mu inequality is only
    checked when an oracle is supplied."""
    problems: list[str] = []
    vall = set(D.vertices)
    if not (res.U <= res.Y <= vall - {x}):
        problems.append("U, Y are not nested inside V(D) minus the anchor")
    if not is_strongly_connected(D.induced(res.U)):
        problems.append("D[U] is not strongly connected")
    if not is_strongly_connected(D.induced(res.Y)):
        problems.append("D[Y] is not strongly connected")
    p = res.path
    if p.length < 1:
        problems.append("path has no arcs")
    if not set(p.vertices) <= res.Y:
        problems.append("path leaves Y")
    if not p.valid_in(D):
        problems.append("path is not a directed path of the digraph")
    if set(p.vertices) & res.U != {res.w} or p.last != res.w:
        problems.append("path does not meet U exactly at its last vertex")
    first_arc = (p.vertices[0], p.vertices[1]) if p.length >= 1 else None
    if first_arc is not None and (first_arc in D.z1) == (first_arc in D.z2):
        problems.append("first arc of the path is not in exactly one class")
    for v, wit in ((p.vertices[0], res.witness_first), (p.vertices[1], res.witness_second)):
        if wit.first != x or wit.last != v:
            problems.append(f"witness for {v} does not run from the anchor to {v}")
            continue
        if not wit.valid_in(D):
            problems.append(f"witness for {v} is not a directed path of the digraph")
        if not set(wit.vertices) <= (vall - res.Y) | {v}:
            problems.append(f"witness for {v} re-enters Y")
        k1, k2 = D.label_counts(wit.arcs())
        if k1 % q != res.r or k2 % q != res.s:
            problems.append(f"witness for {v} has residues ({k1 % q}, {k2 % q}), "
                            f"expected ({res.r}, {res.s})")
    if oracle is not None:
        try:
            if oracle.mu(res.U) < oracle.mu(vall) / 2 - floor:
                problems.append("mu(D[U]) fell below mu(D)/2 minus the floor")
        except OracleUnavailable:
            pass
    return problems


@dataclass(frozen=True)
class GadgetSequences:
    """2q-3 iterated special-set stages.

    Index j (0-based) is stage j+1: ``x_sets[j]`` is the stage's host set,
    ``anchors[j]`` its anchor, and ``paths[j]`` the gadget path whose first
    arc lies in exactly one class.  ``witnesses[j]`` holds the two
    anchor-to-path routes backing the residue pair (r[j], s[j]); ``mu_trace``
    records the oracle's value of each host set (None where unavailable) so
    the halving recurrence can be audited.
    """

    q: int
    x_sets: tuple[frozenset[int], ...]
    y_sets: tuple[frozenset[int], ...]
    anchors: tuple[int, ...]
    paths: tuple[DirectedPath, ...]
    r: tuple[int, ...]
    s: tuple[int, ...]
    witnesses: tuple[tuple[DirectedPath, DirectedPath], ...]
    mu_trace: tuple[int | None, ...]
    provenance: str

    @property
    def steps(self) -> int:
        return len(self.paths)


def _maybe_mu(oracle: MuOracle, subset) -> int | None:
    try:
        return oracle.mu(subset)
    except OracleUnavailable:
        return None


def gadget_sequences(D: LabeledDigraph, x: int, q: int, oracle: MuOracle,
                     floor: int = CORE_FLOOR) -> GadgetSequences:
    """Iterate the special-set stage 2q-3 times, each stage continuing inside
    the previous stage's U from the previous stage's exit vertex."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    if not D.has_vertex(x):
        raise ValueError(f"unknown vertex {x}")
    steps = 2 * q - 3
    x_sets = [frozenset(D.vertices)]
    anchors = [x]
    y_sets: list[frozenset[int]] = []
    paths: list[DirectedPath] = []
    rs: list[int] = []
    ss: list[int] = []
    witnesses: list[tuple[DirectedPath, DirectedPath]] = []
    for i in range(steps):
        host = D.induced(x_sets[i])
        try:
            res = special_set(host, anchors[i], q, oracle, floor=floor)
        except ConstructionFailed as exc:
            raise ConstructionFailed(exc.stage, str(exc), step=i + 1) from exc
        y_sets.append(res.Y)
        x_sets.append(res.U)
        anchors.append(res.w)
        paths.append(res.path)
        rs.append(res.r)
        ss.append(res.s)
        witnesses.append((res.witness_first, res.witness_second))
    gs = GadgetSequences(q=q, x_sets=tuple(x_sets), y_sets=tuple(y_sets),
                         anchors=tuple(anchors), paths=tuple(paths),
                         r=tuple(rs), s=tuple(ss), witnesses=tuple(witnesses),
                         mu_trace=tuple(_maybe_mu(oracle, xs) for xs in x_sets),
                         provenance=oracle.name)
    problems = check_gadget_sequences(D, x, q, gs, floor=floor)
    if problems:
        raise ConstructionFailed("self-check", problems[0])
    return gs


def check_gadget_sequences(D: LabeledDigraph, x: int, q: int, gs: GadgetSequences,
                           floor: int = CORE_FLOOR) -> list[str]:
    """Independent verifier for the six gadget-sequence conditions."""
    problems: list[str] = []
    steps = 2 * q - 3
    if gs.steps != steps or len(gs.x_sets) != steps + 1:
        return [f"expected {steps} stages, found {gs.steps}"]
    if gs.x_sets[0] != frozenset(D.vertices) or gs.anchors[0] != x:
        problems.append("stage 1 does not start from the whole digraph and its anchor")
    if not is_strongly_connected(D.induced(gs.x_sets[-1])):
        problems.append("final host set is not strongly connected")
    for i in range(steps):
        xi, yi, xnext = gs.x_sets[i], gs.y_sets[i], gs.x_sets[i + 1]
        tag = f"stage {i + 1}"
        if gs.anchors[i] not in xi:
            problems.append(f"{tag}: anchor outside its host set")
        if not (xnext <= yi <= xi - {gs.anchors[i]}):
            problems.append(f"{tag}: nesting X_next <= Y <= X minus anchor fails")
        if not is_strongly_connected(D.induced(xi)):
            problems.append(f"{tag}: host set not strongly connected")
        if not is_strongly_connected(D.induced(yi)):
            problems.append(f"{tag}: Y not strongly connected")
        p = gs.paths[i]
        if p.length < 1 or not p.valid_in(D) or not set(p.vertices) <= yi:
            problems.append(f"{tag}: gadget path invalid or outside Y")
        if set(p.vertices) & xnext != {gs.anchors[i + 1]} or p.last != gs.anchors[i + 1]:
            problems.append(f"{tag}: gadget path does not meet the next host set "
                            "exactly at its last vertex")
        first_arc = (p.vertices[0], p.vertices[1])
        if (first_arc in D.z1) == (first_arc in D.z2):
            problems.append(f"{tag}: first arc not in exactly one class")
        for v, wit in ((p.vertices[0], gs.witnesses[i][0]), (p.vertices[1], gs.witnesses[i][1])):
            if wit.first != gs.anchors[i] or wit.last != v or not wit.valid_in(D):
                problems.append(f"{tag}: witness for {v} malformed")
                continue
            if not set(wit.vertices) <= (xi - yi) | {v}:
                problems.append(f"{tag}: witness for {v} leaves X minus Y")
            k1, k2 = D.label_counts(wit.arcs())
            if k1 % q != gs.r[i] or k2 % q != gs.s[i]:
                problems.append(f"{tag}: witness residues ({k1 % q}, {k2 % q}) != "
                                f"({gs.r[i]}, {gs.s[i]})")
        lo, hi = gs.mu_trace[i + 1], gs.mu_trace[i]
        if lo is not None and hi is not None and lo < hi / 2 - floor:
            problems.append(f"{tag}: mu halving recurrence violated ({lo} < {hi}/2 - {floor})")
    return problems


class ResidueUniversalSet:
    """A vertex set X such that, between any ordered pair of X-vertices, an
    X-path achieving any coprime congruence target can be assembled from the
    stored entry route, gadget stages, and exit descent.

    Every answered query is re-verified from the raw digraph (simple,
    endpoints in X, interior outside X, correct residue) before it is
    returned.
    """

    def __init__(self, D: LabeledDigraph, q: int, n_target: int, X: frozenset[int],
                 x0: int, entry_path: DirectedPath, in_lev: Leveling,
                 x_star: frozenset[int], gadgets: GadgetSequences,
                 exit_lev: Leveling, chosen: tuple[int, ...], side: str,
                 mu_of_x: int | None, provenance: str, flags: tuple[str, ...]):
        self.D = D
        self.q = q
        self.n_target = n_target
        self.X = X
        self.x0 = x0
        self.entry_path = entry_path
        self.in_lev = in_lev
        self.x_star = x_star
        self.gadgets = gadgets
        self.exit_lev = exit_lev
        self.chosen = chosen
        self.side = side
        self.mu_of_x = mu_of_x
        self.provenance = provenance
        self.flags = flags
        self._in_level_of = in_lev.level_of()
        self._exit_level_of = exit_lev.level_of()

    @property
    def x_entry(self) -> int:
        return self.gadgets.anchors[0]

    @property
    def x_exit(self) -> int:
        return self.gadgets.anchors[-1]

    def entry_route(self, u: int) -> DirectedPath:
        """Path from u to the gadget anchor, spliced from the in-leveling
        escape of u and the stored entry path; meets the intermediate
        component only at u and the anchor."""
        seq = [u]
        level = self._in_level_of[u]
        while level > 0:
            prev = self.in_lev.levels[level - 1]
            seq.append(min(w for w in self.D.out_neighbors(seq[-1]) if w in prev))
            level -= 1
        union = set(zip(seq, seq[1:])) | set(self.entry_path.arcs())
        route = shortest_path_via_arcs(union, u, self.x_entry)
        if route is None:
            raise ConstructionFailed("assembly", f"no entry route from {u}")
        return route

    def exit_route(self, v: int) -> DirectedPath:
        """Descent from the last gadget anchor to v along the exit leveling,
        one vertex per level; meets X only at v."""
        seq = [v]
        level = self._exit_level_of[v]
        last_set = self.gadgets.x_sets[-1]
        while level > 0:
            prev = self.exit_lev.levels[level - 1]
            seq.append(min(w for w in self.D.in_neighbors(seq[-1])
                           if w in last_set and self._exit_level_of.get(w) == level - 1))
            level -= 1
        seq.reverse()
        return DirectedPath(tuple(seq))

    def assemble(self, u: int, v: int, k: int) -> list[int]:
        """Vertex sequence of the k-th candidate walk from u to v: candidate
        k routes through the first k-1 chosen gadget arcs, entering each of
        those gadget paths at its first vertex instead of its second."""
        if not 1 <= k <= self.q:
            raise ValueError(f"candidate index {k} out of 1..{self.q}")
        include = set(self.chosen[:k - 1])
        walk = list(self.entry_route(u).vertices)
        for j in range(self.gadgets.steps):
            first_wit, second_wit = self.gadgets.witnesses[j]
            if j in include:
                pieces = (first_wit.vertices, self.gadgets.paths[j].vertices)
            else:
                pieces = (second_wit.vertices, self.gadgets.paths[j].vertices[1:])
            for piece in pieces:
                assert piece[0] == walk[-1]
                walk.extend(piece[1:])
        exitp = self.exit_route(v).vertices
        assert exitp[0] == walk[-1]
        walk.extend(exitp[1:])
        return walk

    def _walk_counts(self, walk: list[int]) -> tuple[int, int]:
        return self.D.label_counts(zip(walk, walk[1:]))

    def query(self, u: int, v: int, a: int, b: int, target: int) -> DirectedPath:
        """An X-path from u to v with a*|z1 arcs| + b*|z2 arcs| == target
        (mod q), verified before return."""
        import math
        if u == v or u not in self.X or v not in self.X:
            raise ValueError("endpoints must be distinct vertices of X")
        if math.gcd(a, self.q) != 1 or math.gcd(b, self.q) != 1:
            raise ValueError("a and b must be coprime to the modulus")
        q = self.q
        c1, c2 = self._walk_counts(self.assemble(u, v, 1))
        need = (target - a * c1 - b * c2) % q
        coeff = a if self.side == "z1" else b
        delta = (pow(coeff, -1, q) * need) % q
        k = delta + 1
        walk = self.assemble(u, v, k)
        if len(set(walk)) != len(walk):
            raise ConstructionFailed("assembly",
                                     f"candidate {k} for ({u}, {v}) is not a simple path")
        path = DirectedPath(tuple(walk))
        if not path.valid_in(self.D):
            raise ConstructionFailed("assembly", "candidate leaves the digraph")
        if any(w in self.X for w in path.interior):
            raise ConstructionFailed("assembly", "candidate re-enters X")
        g1, g2 = self.D.label_counts(path.arcs())
        if (a * g1 + b * g2) % q != target % q:
            raise ConstructionFailed("assembly",
                                     f"candidate residue {(a * g1 + b * g2) % q} != {target % q}")
        return path


def residue_universal_set(D: LabeledDigraph, q: int, n_target: int, oracle: MuOracle,
                          floor: int = CORE_FLOOR,
                          start: int | None = None) -> ResidueUniversalSet:
    """Entry split, gadgets, exit split; then classify the gadget first-arcs
    and keep q-1 of them on the majority side of the symmetric difference.
    ``start`` overrides the default entry-leveling starting vertex."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    if not is_strongly_connected(D):
        raise PreconditionViolation("residue_universal_set requires a strongly "
                                    "connected digraph")
    flags: list[str] = []
    x0 = min(D.vertices) if start is None else start
    if not D.has_vertex(x0):
        raise ValueError(f"unknown start vertex {x0}")
    in_lev = leveling(D, x0, IN)
    if len(in_lev.levels) < 2:
        raise ConstructionFailed("entry-split", "no levels beyond the start")
    split1 = level_split(D, in_lev, oracle, min_level=1)
    if not split1.verified:
        flags.append("unverified-entry-split")
    x_star = split1.component
    entry = first_path_to_set(D, [x0], x_star)
    assert entry is not None
    x1 = entry.last

    gadgets = gadget_sequences(D.induced(x_star), x1, q, oracle, floor=floor)

    last_set = gadgets.x_sets[-1]
    exit_host = D.induced(last_set)
    exit_lev = leveling(exit_host, gadgets.anchors[-1], OUT)
    if len(exit_lev.levels) < 2:
        raise ConstructionFailed("exit-split", "no levels beyond the last anchor")
    split2 = level_split(exit_host, exit_lev, oracle, min_level=1)
    if not split2.verified:
        flags.append("unverified-exit-split")
    X = split2.component
    if len(X) < 2:
        raise ConstructionFailed("exit-split", "universal set needs at least two vertices")

    z1_side: list[int] = []
    z2_side: list[int] = []
    for j, p in enumerate(gadgets.paths):
        arc = (p.vertices[0], p.vertices[1])
        if arc in D.z1 and arc not in D.z2:
            z1_side.append(j)
        elif arc in D.z2 and arc not in D.z1:
            z2_side.append(j)
        else:
            raise ConstructionFailed("assembly", f"gadget {j + 1} first arc not in "
                                                 "exactly one class")
    side = "z1" if len(z1_side) >= q - 1 else "z2"
    chosen = tuple((z1_side if side == "z1" else z2_side)[:q - 1])
    assert len(chosen) == q - 1  # one side always holds q-1 of the 2q-3 arcs

    rus = ResidueUniversalSet(D, q, n_target, X, x0, entry, in_lev, x_star,
                              gadgets, exit_lev, chosen, side,
                              split2.mu_of_component, oracle.name, tuple(flags))
    problems = check_residue_universal_set(D, rus)
    if problems:
        raise ConstructionFailed("assembly", problems[0])
    return rus


def check_residue_universal_set(D: LabeledDigraph, rus: ResidueUniversalSet,
                                pairs=None) -> list[str]:
    """Independent verifier: for sample ordered pairs, the q candidate walks
    must be simple X-paths whose residues on the chosen side step through all
    q values while the other side stays constant."""
    problems: list[str] = []
    if not is_strongly_connected(D.induced(rus.X)):
        problems.append("D[X] is not strongly connected")
    if pairs is None:
        xs = sorted(rus.X)
        pairs = [(xs[0], xs[1]), (xs[1], xs[0])]
    q = rus.q
    for u, v in pairs:
        main: list[int] = []
        other: list[int] = []
        for k in range(1, q + 1):
            walk = rus.assemble(u, v, k)
            if len(set(walk)) != len(walk):
                problems.append(f"candidate {k} for ({u}, {v}) is not simple")
                continue
            path = DirectedPath(tuple(walk))
            if not path.valid_in(D):
                problems.append(f"candidate {k} for ({u}, {v}) leaves the digraph")
            if path.first != u or path.last != v:
                problems.append(f"candidate {k} for ({u}, {v}) has wrong endpoints")
            if any(w in rus.X for w in path.interior):
                problems.append(f"candidate {k} for ({u}, {v}) re-enters X")
            k1, k2 = D.label_counts(path.arcs())
            if rus.side == "z1":
                main.append(k1 % q)
                other.append(k2 % q)
            else:
                main.append(k2 % q)
                other.append(k1 % q)
        if len(main) == q:
            if sorted(main) != list(range(q)):
                problems.append(f"({u}, {v}): chosen-side residues {main} do not cover 0..q-1")
            if len(set(other)) != 1:
                problems.append(f"({u}, {v}): other-side residues {other} are not constant")
    return problems


def extract_subdivision(D: LabeledDigraph, pattern: SubdivisionPattern,
                        oracle: MuOracle, floor: int = CORE_FLOOR,
                        start: int | None = None) -> SubdivisionWitness:
    """Induction on the pattern's arcs: peel the arc with the largest
    modulus, build a residue-universal set, recurse inside it, then route
    the peeled arc with a residue query.  The final witness is verified
    against the original digraph before it is returned.  ``start`` overrides
    the outermost entry-leveling starting vertex."""

    def biggest_component(host: LabeledDigraph) -> LabeledDigraph:
        comps = strong_components(host)
        if len(comps) <= 1:
            return host
        best = None
        for comp in comps:
            value = _maybe_mu(oracle, comp)
            key = (-(value if value is not None else -1), min(comp))
            if best is None or key < best[0]:
                best = (key, comp)
        return host.induced(best[1])

    def rec(host: LabeledDigraph, pat: SubdivisionPattern, depth: int) -> SubdivisionWitness:
        if not pat.arcs:
            k = pat.num_vertices
            if host.n < k:
                raise ConstructionFailed("base", f"{host.n} vertices cannot seat {k} "
                                                 "branch vertices", depth=depth)
            return SubdivisionWitness(tuple(sorted(host.vertices)[:k]), {})
        f = sorted(pat.arcs, key=lambda e: (-e.q, e.key))[0]
        rest = pat.without_arc(f.key)
        target = max(subdivision_threshold(rest), 2)
        host = biggest_component(host)
        entry = None
        if depth == 0 and start is not None and host.has_vertex(start):
            entry = start
        try:
            rus = residue_universal_set(host, f.q, target, oracle, floor=floor,
                                        start=entry)
        except ConstructionFailed as exc:
            raise ConstructionFailed(exc.stage, str(exc), depth=depth) from exc
        inner = rec(host.induced(rus.X), rest, depth + 1)
        u = inner.branch[f.tail]
        v = inner.branch[f.head]
        try:
            route = rus.query(u, v, f.a, f.b, f.r)
        except ConstructionFailed as exc:
            raise ConstructionFailed(exc.stage, str(exc), depth=depth) from exc
        paths = dict(inner.paths)
        paths[f.key] = route
        return SubdivisionWitness(inner.branch, paths)

    witness = rec(D, pattern, 0)
    report = verify_witness(D, pattern, witness)
    if not report.ok:
        raise ConstructionFailed("verify", f"{report.failure}: {report.detail}")
    return witness

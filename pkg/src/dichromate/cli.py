"""Command-line surface.

Subcommands: mu, check-balanced, find-cycles, find-subdivision, verify, gen,
bench.  Exit codes: 0 success/pass, 1 negative result (fail / none found),
2 usage error or malformed input, 3 budget-indeterminate.  All file output
is written atomically; everything is deterministic given the input files,
flags, and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .balance import disjoint_unbalanced_cycles, has_unbalanced_cycle, shortest_unbalanced_cycle
from .constructive import CORE_FLOOR, extract_subdivision
from .digraph import LabeledDigraph
from .errors import (ConstructionFailed, MuBoundExceeded, OracleUnavailable,
                     ParseError, PreconditionViolation)
from .formats import (Instance, emit_instance, emit_witness, instance_to_dot,
                      parse_instance, parse_pattern, parse_witness,
                      write_text_atomic)
from .generators import (BIORIENTED_CLIQUE, gen_bioriented_clique, gen_planted,
                         gen_random)
from .mu import VertexPartition, mu_exact
from .oracles import BiorientedCliqueOracle, ExactMuOracle, HintMuOracle, MuOracle
from .search import ABSENT, FOUND, INDETERMINATE, find_subdivision
from .subdivision import SubdivisionWitness, verify_witness

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str) -> Instance:
    return parse_instance(_read(path))


def _emit_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out, text)


def _make_oracle(kind: str, instance: Instance) -> MuOracle:
    if kind == "exact":
        return ExactMuOracle(instance.digraph)
    if kind == "analytic":
        if instance.family != BIORIENTED_CLIQUE:
            raise ValueError("--oracle analytic requires a bioriented_clique family tag")
        return BiorientedCliqueOracle(instance.digraph)
    if kind.startswith("hints:"):
        with open(kind.split(":", 1)[1], encoding="utf-8") as fh:
            raw = json.load(fh)
        table = {tuple(int(t) for t in key.split(",") if t): value
                 for key, value in raw.items()}
        return HintMuOracle(table)
    raise ValueError(f"unknown oracle {kind!r} (use exact, analytic, or hints:FILE)")


def _cmd_mu(args) -> int:
    instance = _load_instance(args.instance)
    D = instance.digraph
    if args.oracle == "analytic":
        if instance.family != BIORIENTED_CLIQUE:
            print("error: --oracle analytic requires a bioriented_clique family tag",
                  file=sys.stderr)
            return EXIT_USAGE
        oracle = BiorientedCliqueOracle(D)  # re-validates the family shape
        value = oracle.mu(D.vertices)
        cert = VertexPartition.from_blocks([v] for v in D.vertices) if D.n else None
        provenance = oracle.name
    elif args.oracle.startswith("hints:"):
        oracle = _make_oracle(args.oracle, instance)
        value = oracle.mu(D.vertices)
        cert = None
        provenance = "hints"
    else:
        try:
            result = mu_exact(D, limit=args.limit)
        except MuBoundExceeded as exc:
            print(f"mu > {args.limit}")
            print(f"bounds {exc.lower_bound} {exc.upper_bound}")
            print("oracle exact")
            return EXIT_INDETERMINATE
        value, cert, provenance = result.value, result.certificate, "exact"
    print(f"mu {value}")
    print(f"oracle {provenance}")
    if cert is not None:
        for i, block in enumerate(cert.blocks):
            print(f"block {i} " + " ".join(str(v) for v in sorted(block)))
    return EXIT_OK


def _cmd_check_balanced(args) -> int:
    instance = _load_instance(args.instance)
    D = instance.digraph
    if args.subset:
        D = D.induced(args.subset)
    if not has_unbalanced_cycle(D):
        print("balanced")
        return EXIT_OK
    cycle = shortest_unbalanced_cycle(D)
    assert cycle is not None
    print("unbalanced")
    print("cycle " + " ".join(str(v) for v in cycle.vertices))
    print(f"weight {cycle.weight}")
    return EXIT_NEGATIVE


def _cmd_find_cycles(args) -> int:
    instance = _load_instance(args.instance)
    packing = disjoint_unbalanced_cycles(instance.digraph, args.count)
    print(f"found {len(packing.cycles)} of {packing.requested}")
    for cycle in packing.cycles:
        print("cycle " + " ".join(str(v) for v in cycle.vertices))
    return EXIT_OK if packing.complete else EXIT_NEGATIVE


def _permuted(D: LabeledDigraph, seed: int | None):
    """Relabeling by a seeded permutation; returns (digraph, back-map)."""
    if seed is None:
        return D, None
    rng = random.Random(seed)
    perm = list(D.vertices)
    rng.shuffle(perm)
    fwd = {v: perm[i] for i, v in enumerate(D.vertices)}
    back = {w: v for v, w in fwd.items()}
    relabeled = LabeledDigraph(
        [fwd[v] for v in D.vertices],
        [(fwd[u], fwd[v]) for u, v in D.arcs],
        [(fwd[u], fwd[v]) for u, v in D.z1],
        [(fwd[u], fwd[v]) for u, v in D.z2],
    )
    return relabeled, back


def _map_witness_back(witness: SubdivisionWitness, back) -> SubdivisionWitness:
    if back is None:
        return witness
    from .digraph import DirectedPath
    return SubdivisionWitness(
        tuple(back[v] for v in witness.branch),
        {key: DirectedPath(tuple(back[v] for v in p.vertices))
         for key, p in witness.paths.items()},
    )


def _cmd_find_subdivision(args) -> int:
    instance = _load_instance(args.instance)
    pattern = parse_pattern(_read(args.pattern))
    D = instance.digraph
    if args.mode == "direct":
        search_D, back = _permuted(D, args.seed)
        outcome = find_subdivision(search_D, pattern, budget=args.budget)
        if outcome.status == INDETERMINATE:
            print(f"indeterminate after {outcome.expansions} expansions", file=sys.stderr)
            return EXIT_INDETERMINATE
        if outcome.status == ABSENT:
            print("none", file=sys.stderr)
            return EXIT_NEGATIVE
        witness = _map_witness_back(outcome.witness, back)
    else:
        choice = args.oracle
        if choice == "auto":
            choice = "analytic" if instance.family == BIORIENTED_CLIQUE else "exact"
        oracle = _make_oracle(choice, instance)
        try:
            witness = extract_subdivision(D, pattern, oracle, floor=args.floor,
                                          start=args.start)
        except ConstructionFailed as exc:
            print(f"construction failed at stage {exc.stage}: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
    report = verify_witness(D, pattern, witness)
    if not report.ok:
        print(f"internal error: witness failed verification ({report.failure})",
              file=sys.stderr)
        return EXIT_NEGATIVE
    _emit_output(emit_witness(witness), args.out)
    if args.dot:
        write_text_atomic(args.dot, instance_to_dot(instance, witness=witness))
    return EXIT_OK


def _cmd_verify(args) -> int:
    instance = _load_instance(args.instance)
    pattern = parse_pattern(_read(args.pattern))
    witness = parse_witness(_read(args.witness))
    report = verify_witness(instance.digraph, pattern, witness)
    if args.dot:
        write_text_atomic(args.dot, instance_to_dot(instance, witness=witness))
    if report.ok:
        print("pass")
        return EXIT_OK
    print(f"fail {report.failure}: {report.detail}")
    return EXIT_NEGATIVE


def _cmd_gen(args) -> int:
    if args.kind == "clique":
        instance = gen_bioriented_clique(args.n)
    elif args.kind == "random":
        instance = gen_random(args.n, args.arc_p, args.z1_p, args.z2_p, seed=args.seed)
    else:
        pattern = parse_pattern(_read(args.pattern))
        instance = gen_planted(pattern, extra_vertices=args.extra_vertices,
                               extra_arcs=args.extra_arcs, z1_probability=args.z1_p,
                               z2_probability=args.z2_p, seed=args.seed)
    _emit_output(emit_instance(instance), args.out)
    if args.dot:
        write_text_atomic(args.dot, instance_to_dot(instance))
    return EXIT_OK


def _bench_rows():
    from .subdivision import PatternArc, SubdivisionPattern
    rows = []

    def timed(suite, name, D, fn):
        t0 = time.perf_counter()
        result = fn()
        rows.append((suite, name, D.n, D.arc_count, time.perf_counter() - t0, result))

    for n in range(1, 7):
        D = gen_bioriented_clique(n).digraph
        timed("mu", f"clique-{n}", D, lambda D=D: mu_exact(D).value)
    for seed in range(4):
        D = gen_random(8, 0.3, 0.5, 0.3, seed=seed).digraph
        timed("mu", f"random-8-{seed}", D, lambda D=D: mu_exact(D).value)
        timed("balance", f"random-8-{seed}", D, lambda D=D: has_unbalanced_cycle(D))
    triangle = SubdivisionPattern(3, (PatternArc(0, 1, 1, 1, 1, 2),
                                      PatternArc(1, 2, 1, 1, 0, 2),
                                      PatternArc(2, 0, 1, 1, 1, 3)))
    for seed in range(3):
        inst = gen_planted(triangle, extra_vertices=4, extra_arcs=10, seed=seed)
        timed("direct", f"planted-{seed}", inst.digraph,
              lambda inst=inst: find_subdivision(inst.digraph, triangle).status)
    single = SubdivisionPattern(2, (PatternArc(0, 1, 1, 1, 1, 2),))
    inst = gen_bioriented_clique(24)
    oracle = BiorientedCliqueOracle(inst.digraph)
    timed("constructive", "clique-24-single-arc", inst.digraph,
          lambda: len(extract_subdivision(inst.digraph, single, oracle, floor=14).paths))
    return rows


def _cmd_bench(args) -> int:
    rows = _bench_rows()
    print("suite,name,n,arcs,seconds,result")
    for suite, name, n, arcs, seconds, result in rows:
        if args.suite in ("all", suite):
            print(f"{suite},{name},{n},{arcs},{seconds:.6f},{result}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dichromate",
        description="Unbalanced dichromatic numbers and congruence-constrained "
                    "subdivisions in arc-labeled digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="exact mu with certificate partition")
    p.add_argument("instance")
    p.add_argument("--limit", type=int, default=None,
                   help="abandon once the answer is provably above this")
    p.add_argument("--oracle", default="exact",
                   help="exact (default), analytic, or hints:FILE")
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser("check-balanced", help="unbalanced-cycle decision with witness")
    p.add_argument("instance")
    p.add_argument("--subset", type=int, nargs="+", default=None,
                   help="restrict to the induced subdigraph on these vertices")
    p.set_defaults(func=_cmd_check_balanced)

    p = sub.add_parser("find-cycles", help="greedy disjoint unbalanced cycle packing")
    p.add_argument("instance")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_find_cycles)

    p = sub.add_parser("find-subdivision",
                       help="search or construct a congruence-constrained subdivision")
    p.add_argument("instance")
    p.add_argument("pattern")
    p.add_argument("--mode", choices=("direct", "constructive"), default="direct")
    p.add_argument("--budget", type=int, default=10 ** 7)
    p.add_argument("--seed", type=int, default=None,
                   help="direct mode: search under a seeded vertex relabeling")
    p.add_argument("--oracle", default="auto",
                   help="constructive mode: auto, exact, analytic, or hints:FILE")
    p.add_argument("--floor", type=int, default=CORE_FLOOR,
                   help="constructive mode: mu floor for the core-shrinking stage")
    p.add_argument("--start", type=int, default=None,
                   help="constructive mode: override the entry-leveling start vertex")
    p.add_argument("--out", default=None)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=_cmd_find_subdivision)

    p = sub.add_parser("verify", help="check a witness file against instance and pattern")
    p.add_argument("instance")
    p.add_argument("pattern")
    p.add_argument("witness")
    p.add_argument("--dot", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a generated instance")
    gensub = p.add_subparsers(dest="kind", required=True)
    g = gensub.add_parser("clique", help="fully z1-labeled bioriented clique")
    g.add_argument("--n", type=int, required=True)
    g = gensub.add_parser("random", help="independent-arc random digraph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--arc-p", type=float, default=0.3)
    g.add_argument("--z1-p", type=float, default=0.5)
    g.add_argument("--z2-p", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g = gensub.add_parser("planted", help="instance with a planted subdivision")
    g.add_argument("--pattern", required=True)
    g.add_argument("--extra-vertices", type=int, default=0)
    g.add_argument("--extra-arcs", type=int, default=0)
    g.add_argument("--z1-p", type=float, default=0.3)
    g.add_argument("--z2-p", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    for kind_parser in gensub.choices.values():
        kind_parser.add_argument("--out", default=None)
        kind_parser.add_argument("--dot", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="timing table (CSV) over generated suites")
    p.add_argument("suite", choices=("all", "mu", "balance", "direct", "constructive"))
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleUnavailable as exc:
        print(f"oracle unavailable: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolation as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

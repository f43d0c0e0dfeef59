"""Line-oriented text formats for instances, patterns, and witnesses, plus
DOT export.

All three formats are UTF-8 text, one record per line, with a fixed header
naming the record kind and the format version (pinned at 1).  Canonical form
sorts arcs and records and normalizes flags, so emit(parse(text)) is
byte-identical for canonical files.  Blank lines and '#' comments are
accepted on input and dropped on output.

Instance files::

    digraph 1
    n 5
    a <tail> <head> <z1 0/1> <z2 0/1>
    meta family <token>
    meta mu_analytic <int>
    meta planted_witness <one-line JSON>

Pattern files::

    pattern 1
    n <vertex count>
    e <tail> <head> <a> <b> <r> <q>

Witness files::

    witness 1
    branch <pattern vertex> <digraph vertex>
    path <pattern tail> <pattern head> <v0> <v1> ...
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

from .digraph import DirectedPath, LabeledDigraph
from .errors import ParseError
from .subdivision import PatternArc, SubdivisionPattern, SubdivisionWitness

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Instance:
    """A labeled digraph plus optional generator-certified metadata.

    ``mu_analytic`` may only be emitted by generators whose family carries a
    proof obligation (currently the fully z1-labeled bioriented cliques);
    ``planted_witness`` is the subdivision planted by ``gen_planted``.
    """

    digraph: LabeledDigraph
    family: str | None = None
    mu_analytic: int | None = None
    planted_witness: SubdivisionWitness | None = None
    planted_pattern: SubdivisionPattern | None = None


def _significant_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def _int_field(line_no: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def _flag_field(line_no: int, token: str, what: str) -> bool:
    if token not in ("0", "1"):
        raise ParseError(line_no, f"{what} must be 0 or 1, got {token!r}")
    return token == "1"


def _check_header(line_no: int, line: str, kind: str) -> None:
    parts = line.split()
    if len(parts) != 2 or parts[0] != kind:
        raise ParseError(line_no, f"expected header {kind!r} <version>, got {line!r}")
    version = _int_field(line_no, parts[1], "format version")
    if version != FORMAT_VERSION:
        raise ParseError(line_no, f"unsupported format version {version}")


def _witness_to_json(w: SubdivisionWitness) -> str:
    payload = {
        "branch": list(w.branch),
        "paths": [[t, h, list(w.paths[(t, h)].vertices)] for t, h in sorted(w.paths)],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _witness_from_json(line_no: int, blob: str) -> SubdivisionWitness:
    try:
        payload = json.loads(blob)
        branch = tuple(int(v) for v in payload["branch"])
        paths = {(int(t), int(h)): DirectedPath(tuple(int(v) for v in seq))
                 for t, h, seq in payload["paths"]}
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(line_no, f"malformed witness JSON: {exc}") from None
    return SubdivisionWitness(branch, paths)


def parse_instance(text: str) -> Instance:
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError(0, "empty instance file")
    _check_header(*lines[0], kind="digraph")
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    z1: list[tuple[int, int]] = []
    z2: list[tuple[int, int]] = []
    family: str | None = None
    mu_analytic: int | None = None
    witness: SubdivisionWitness | None = None
    for line_no, line in lines[1:]:
        parts = line.split()
        kind = parts[0]
        if kind == "n":
            if n is not None:
                raise ParseError(line_no, "duplicate vertex count")
            if len(parts) != 2:
                raise ParseError(line_no, "expected: n <count>")
            n = _int_field(line_no, parts[1], "vertex count")
            if n < 0:
                raise ParseError(line_no, "vertex count must be nonnegative")
        elif kind == "a":
            if n is None:
                raise ParseError(line_no, "arc before vertex count")
            if len(parts) != 5:
                raise ParseError(line_no, "expected: a <tail> <head> <z1> <z2>")
            u = _int_field(line_no, parts[1], "tail")
            v = _int_field(line_no, parts[2], "head")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(line_no, f"arc ({u}, {v}) out of vertex range")
            if u == v:
                raise ParseError(line_no, f"loop at vertex {u}")
            if (u, v) in seen:
                raise ParseError(line_no, f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            arcs.append((u, v))
            if _flag_field(line_no, parts[3], "z1 flag"):
                z1.append((u, v))
            if _flag_field(line_no, parts[4], "z2 flag"):
                z2.append((u, v))
        elif kind == "meta":
            if len(parts) < 3:
                raise ParseError(line_no, "expected: meta <key> <value>")
            key = parts[1]
            value = line.split(None, 2)[2]
            if key == "family":
                family = value
            elif key == "mu_analytic":
                mu_analytic = _int_field(line_no, value, "mu_analytic")
            elif key == "planted_witness":
                witness = _witness_from_json(line_no, value)
            else:
                raise ParseError(line_no, f"unknown metadata key {key!r}")
        else:
            raise ParseError(line_no, f"unknown record {kind!r}")
    if n is None:
        raise ParseError(lines[-1][0], "missing vertex count")
    return Instance(LabeledDigraph.on_range(n, arcs, z1, z2), family=family,
                    mu_analytic=mu_analytic, planted_witness=witness)


def emit_instance(instance: Instance) -> str:
    D = instance.digraph
    out = [f"digraph {FORMAT_VERSION}", f"n {D.n}"]
    for u, v in D.arcs:
        out.append(f"a {u} {v} {int((u, v) in D.z1)} {int((u, v) in D.z2)}")
    if instance.family is not None:
        out.append(f"meta family {instance.family}")
    if instance.mu_analytic is not None:
        out.append(f"meta mu_analytic {instance.mu_analytic}")
    if instance.planted_witness is not None:
        out.append(f"meta planted_witness {_witness_to_json(instance.planted_witness)}")
    return "\n".join(out) + "\n"


def parse_pattern(text: str) -> SubdivisionPattern:
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError(0, "empty pattern file")
    _check_header(*lines[0], kind="pattern")
    n: int | None = None
    arcs: list[PatternArc] = []
    for line_no, line in lines[1:]:
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2:
                raise ParseError(line_no, "expected: n <count>")
            n = _int_field(line_no, parts[1], "vertex count")
        elif parts[0] == "e":
            if len(parts) != 7:
                raise ParseError(line_no, "expected: e <tail> <head> <a> <b> <r> <q>")
            vals = [_int_field(line_no, p, "pattern arc field") for p in parts[1:]]
            try:
                arcs.append(PatternArc(*vals))
            except ValueError as exc:
                raise ParseError(line_no, str(exc)) from None
        else:
            raise ParseError(line_no, f"unknown record {parts[0]!r}")
    if n is None:
        raise ParseError(lines[-1][0], "missing vertex count")
    try:
        return SubdivisionPattern(n, tuple(arcs))
    except ValueError as exc:
        raise ParseError(lines[-1][0], str(exc)) from None


def emit_pattern(pattern: SubdivisionPattern) -> str:
    out = [f"pattern {FORMAT_VERSION}", f"n {pattern.num_vertices}"]
    for e in pattern.arcs:
        out.append(f"e {e.tail} {e.head} {e.a} {e.b} {e.r} {e.q}")
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> SubdivisionWitness:
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError(0, "empty witness file")
    _check_header(*lines[0], kind="witness")
    branch: dict[int, int] = {}
    paths: dict[tuple[int, int], DirectedPath] = {}
    for line_no, line in lines[1:]:
        parts = line.split()
        if parts[0] == "branch":
            if len(parts) != 3:
                raise ParseError(line_no, "expected: branch <pattern vertex> <digraph vertex>")
            p = _int_field(line_no, parts[1], "pattern vertex")
            v = _int_field(line_no, parts[2], "digraph vertex")
            if p in branch:
                raise ParseError(line_no, f"duplicate branch record for {p}")
            branch[p] = v
        elif parts[0] == "path":
            if len(parts) < 5:
                raise ParseError(line_no, "expected: path <tail> <head> <v0> <v1> ...")
            t = _int_field(line_no, parts[1], "pattern tail")
            h = _int_field(line_no, parts[2], "pattern head")
            if (t, h) in paths:
                raise ParseError(line_no, f"duplicate path record for ({t}, {h})")
            seq = tuple(_int_field(line_no, p, "path vertex") for p in parts[3:])
            try:
                paths[(t, h)] = DirectedPath(seq)
            except ValueError as exc:
                raise ParseError(line_no, str(exc)) from None
        else:
            raise ParseError(line_no, f"unknown record {parts[0]!r}")
    if sorted(branch) != list(range(len(branch))):
        raise ParseError(lines[-1][0], "branch records must cover 0..k-1")
    return SubdivisionWitness(tuple(branch[i] for i in range(len(branch))), paths)


def emit_witness(witness: SubdivisionWitness) -> str:
    out = [f"witness {FORMAT_VERSION}"]
    for p, v in enumerate(witness.branch):
        out.append(f"branch {p} {v}")
    for (t, h) in sorted(witness.paths):
        seq = " ".join(str(v) for v in witness.paths[(t, h)].vertices)
        out.append(f"path {t} {h} {seq}")
    return "\n".join(out) + "\n"


_WITNESS_PALETTE = ("darkorange", "forestgreen", "deeppink", "teal",
                    "goldenrod", "slateblue", "firebrick", "darkcyan")


def instance_to_dot(instance: Instance, witness: SubdivisionWitness | None = None) -> str:
    """DOT rendering: z1-only arcs crimson, z2-only royal blue, arcs in both
    classes purple, unlabeled arcs gray; witness paths get one palette color
    per pattern arc and branch vertices a double circle."""
    D = instance.digraph
    path_color: dict[tuple[int, int], str] = {}
    branch: set[int] = set()
    if witness is not None:
        for i, key in enumerate(sorted(witness.paths)):
            color = _WITNESS_PALETTE[i % len(_WITNESS_PALETTE)]
            for arc in witness.paths[key].arcs():
                path_color[arc] = color
        branch = set(witness.branch)
    out = ["digraph D {"]
    for v in D.vertices:
        shape = " [shape=doublecircle]" if v in branch else ""
        out.append(f"  {v}{shape};")
    for u, v in D.arcs:
        in1 = (u, v) in D.z1
        in2 = (u, v) in D.z2
        if in1 and in2:
            attrs = ['color="purple"']
        elif in1:
            attrs = ['color="crimson"']
        elif in2:
            attrs = ['color="royalblue"']
        else:
            attrs = ['color="gray60"']
        if (u, v) in path_color:
            attrs += ['penwidth=2.4', 'arrowsize=1.2',
                      f'fillcolor="{path_color[(u, v)]}"', 'style="bold"']
        out.append(f"  {u} -> {v} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def write_text_atomic(path: str, text: str) -> None:
    """Write via a temp file in the target directory plus rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise

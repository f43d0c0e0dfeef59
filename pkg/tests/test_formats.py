import pytest

from conftest import digon
from dichromate import (DirectedPath, Instance, ParseError, PatternArc,
                        SubdivisionPattern, SubdivisionWitness, emit_instance,
                        emit_pattern, emit_witness, gen_bioriented_clique,
                        gen_planted, gen_random, instance_to_dot,
                        parse_instance, parse_pattern, parse_witness,
                        write_text_atomic)

DIGON_FILE = """digraph 1
n 2
a 0 1 1 0
a 1 0 0 0
"""


def test_parse_canonical_digon():
    inst = parse_instance(DIGON_FILE)
    assert inst.digraph.n == 2 and inst.digraph.arc_count == 2
    assert inst.digraph.z1 == {(0, 1)}
    assert emit_instance(inst) == DIGON_FILE


def test_parse_accepts_comments_and_blanks():
    text = "# a digon\n\ndigraph 1\nn 2\na 0 1 1 0\n\na 1 0 0 0\n"
    assert emit_instance(parse_instance(text)) == DIGON_FILE


def test_parse_rejects_duplicate_arc():
    bad = "digraph 1\nn 2\na 0 1 1 0\na 0 1 0 0\n"
    with pytest.raises(ParseError) as info:
        parse_instance(bad)
    assert info.value.line_no == 4


def test_parse_rejects_loop_and_range():
    with pytest.raises(ParseError):
        parse_instance("digraph 1\nn 2\na 1 1 0 0\n")
    with pytest.raises(ParseError):
        parse_instance("digraph 1\nn 2\na 0 5 0 0\n")


def test_parse_rejects_malformed_fields():
    with pytest.raises(ParseError):
        parse_instance("digraph 1\nn 2\na 0 1 2 0\n")
    with pytest.raises(ParseError):
        parse_instance("digraph 1\nn two\n")
    with pytest.raises(ParseError):
        parse_instance("digraph 9\nn 2\n")
    with pytest.raises(ParseError):
        parse_instance("pattern 1\nn 2\n")
    with pytest.raises(ParseError):
        parse_instance("")


def test_round_trip_random_instances():
    for seed in range(100):
        inst = gen_random(7, 0.3, 0.5, 0.3, seed=seed)
        text = emit_instance(inst)
        assert emit_instance(parse_instance(text)) == text


def test_round_trip_metadata():
    inst = gen_bioriented_clique(4)
    text = emit_instance(inst)
    assert "meta family bioriented_clique" in text
    assert "meta mu_analytic 4" in text
    back = parse_instance(text)
    assert back.family == "bioriented_clique" and back.mu_analytic == 4
    assert emit_instance(back) == text


def test_round_trip_planted_witness():
    pattern = SubdivisionPattern(2, (PatternArc(0, 1, 1, 1, 1, 2),))
    inst = gen_planted(pattern, extra_vertices=2, extra_arcs=5, seed=4)
    text = emit_instance(inst)
    back = parse_instance(text)
    assert back.planted_witness == inst.planted_witness
    assert emit_instance(back) == text


def test_pattern_round_trip():
    pattern = SubdivisionPattern(3, (PatternArc(0, 1, 1, 1, 1, 2),
                                     PatternArc(2, 1, 2, 1, 4, 3)))
    text = emit_pattern(pattern)
    back = parse_pattern(text)
    assert back == pattern
    assert emit_pattern(back) == text


def test_pattern_normalizes_residues():
    # q maps to 0 when used as the zero representative
    p = parse_pattern("pattern 1\nn 2\ne 0 1 1 1 2 2\n")
    assert p.arcs[0].r == 0


def test_pattern_rejects_bad_tuples():
    with pytest.raises(ParseError):
        parse_pattern("pattern 1\nn 2\ne 0 1 2 1 0 4\n")  # gcd(2, 4) != 1
    with pytest.raises(ParseError):
        parse_pattern("pattern 1\nn 2\ne 0 1 1 1 0 1\n")  # q < 2
    with pytest.raises(ParseError):
        parse_pattern("pattern 1\nn 1\ne 0 1 1 1 0 2\n")  # head out of range


def test_witness_round_trip():
    w = SubdivisionWitness((4, 7), {(0, 1): DirectedPath((4, 2, 7))})
    text = emit_witness(w)
    back = parse_witness(text)
    assert back == w
    assert emit_witness(back) == text


def test_witness_rejects_gaps():
    with pytest.raises(ParseError):
        parse_witness("witness 1\nbranch 0 3\nbranch 2 4\n")
    with pytest.raises(ParseError):
        parse_witness("witness 1\nbranch 0 3\npath 0 1 3\n")  # too few fields


def test_dot_export_styles_and_witness_overlay():
    pattern = SubdivisionPattern(2, (PatternArc(0, 1, 1, 1, 1, 2),))
    inst = gen_planted(pattern, extra_vertices=1, extra_arcs=3, seed=2)
    dot = instance_to_dot(inst, witness=inst.planted_witness)
    assert dot.startswith("digraph D {")
    assert "doublecircle" in dot
    assert "crimson" in dot or "gray60" in dot
    plain = instance_to_dot(Instance(digon(z1=[(0, 1)], z2=[(0, 1)])))
    assert "purple" in plain


def test_write_text_atomic(tmp_path):
    target = tmp_path / "out.txt"
    write_text_atomic(str(target), "hello\n")
    assert target.read_text() == "hello\n"
    write_text_atomic(str(target), "replaced\n")
    assert target.read_text() == "replaced\n"
    assert list(tmp_path.iterdir()) == [target]

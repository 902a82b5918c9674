import json

import pytest
from hypothesis import given

from conftest import quivers
from quivermut.decider import MutationAcyclic
from quivermut.quiver import Quiver, markov_quiver
from quivermut.textio import ParseError, emit_dot, emit_json, emit_quiver, parse_quiver


def test_parse_single_arrow():
    assert parse_quiver("2\n0 1\n-1 0\n") == Quiver([[0, 1], [-1, 0]])


def test_parse_markov():
    assert parse_quiver("3\n0 2 -2\n-2 0 2\n2 -2 0\n") == markov_quiver()


def test_skew_error_position():
    with pytest.raises(ParseError) as exc:
        parse_quiver("2\n0 1\n1 0\n")
    assert "skew-symmetry violated at (1,0)" in str(exc.value)
    assert (exc.value.line, exc.value.col) == (3, 1)


@pytest.mark.parametrize("text,line,col", [
    ("", 1, 1),
    ("x\n", 1, 1),
    ("0\n", 1, 1),
    ("2\n0 1\n", 3, 1),
    ("2\n0 1 5\n-1 0\n", 2, 5),
    ("2\n0 1\n-1\n", 3, 3),
    ("2\n0 1\n-1 zero\n", 3, 4),
    ("2\n1 0\n0 0\n", 2, 1),
    ("2\n0 1\n-1 0\nfoo\n", 4, 1),
    ("2\n0 1\n-1 0\n# label 5 x\n", 4, 1),
    ("2\n0 1\n-1 0\n# label\n", 4, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_quiver(text)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_emit_single_arrow():
    assert emit_quiver(Quiver([[0, 1], [-1, 0]])) == "2\n0 1\n-1 0\n"


def test_labels_roundtrip():
    text = "2\n0 1\n-1 0\n# label 0 left\n# label 1 right side\n"
    q = parse_quiver(text)
    assert q.labels == ("left", "right side")
    assert emit_quiver(q) == text


def test_comments_and_loose_spacing():
    q = parse_quiver("2\n 0   1\n-1 0\n\n# a comment\n")
    assert emit_quiver(q) == "2\n0 1\n-1 0\n"


def test_partial_labels_default_to_index():
    q = parse_quiver("2\n0 1\n-1 0\n# label 1 b\n")
    assert q.labels == ("0", "b")


def test_dot_markov_edges():
    dot = emit_dot(markov_quiver())
    assert dot.startswith("digraph quiver {\n") and dot.endswith("}\n")
    assert dot.count("->") == 6
    for i, j in ((0, 1), (1, 2), (2, 0)):
        assert dot.count(f"  {i} -> {j};") == 2


def test_dot_labels_quoted():
    dot = emit_dot(Quiver([[0, 1], [-1, 0]], ['a "x"', "b"]))
    assert '0 [label="a \\"x\\""];' in dot


def test_json_acyclic_verdict():
    assert emit_json(MutationAcyclic((1,)), stats=False) == (
        '{"verdict":"mutation-acyclic","witness":[1]}'
    )
    full = json.loads(emit_json(MutationAcyclic((1,))))
    assert full["verdict"] == "mutation-acyclic" and full["witness"] == [1]


@given(quivers(max_n=7, bound=50))
def test_roundtrip_property(q):
    text = emit_quiver(q)
    assert parse_quiver(text) == q
    assert emit_quiver(parse_quiver(text)) == text


def test_fixture_corpus_roundtrip(fixture_paths):
    assert len(fixture_paths) >= 20
    for path in fixture_paths:
        text = path.read_text()
        assert emit_quiver(parse_quiver(text)) == text, path.name

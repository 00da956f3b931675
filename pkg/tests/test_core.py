import pytest
from hypothesis import given

from malleq.core import (
    Atom, Imp, LabelCollision, Plus, Sequent, canonical_pair, negative_plus_labels,
    occurrences, parse_formula, parse_sequent, plus_sides, show_formula, show_sequent,
)
from malleq.errors import ParseError
from strategies import formulas


def test_parse_atom():
    assert parse_formula("a") == Atom("a")


def test_parse_plus_under_imp():
    assert parse_formula("((a +[x] b) -o c)") == Imp(Plus("x", Atom("a"), Atom("b")), Atom("c"))


def test_parse_right_nested_imp():
    assert parse_formula("(a -o (b -o c))") == Imp(Atom("a"), Imp(Atom("b"), Atom("c")))


def test_whitespace_insensitive():
    assert parse_formula(" ( a  -o\n b ) ") == Imp(Atom("a"), Atom("b"))


@pytest.mark.parametrize("text", ["(a + b)", "(a +[] b)", "(a -o b", "A", "(a -o b) c", "(a ? b)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_missing_label_message():
    with pytest.raises(ParseError, match="missing label"):
        parse_formula("(a + b)")


def test_error_position():
    with pytest.raises(ParseError) as e:
        parse_formula("(a -o\n  B)", source="f.txt")
    assert str(e.value).startswith("f.txt:2:3:")


def test_sequent_round_trip():
    s = parse_sequent("a, (a -o b) |- b")
    assert show_sequent(s) == "a, (a -o b) |- b"
    assert parse_sequent("|- (a -o a)").context == ()


def test_duplicate_label_rejected():
    with pytest.raises(LabelCollision):
        parse_sequent("(a +[x] b) |- (a +[x] b)")


@given(formulas())
def test_formula_round_trip(f):
    assert parse_formula(show_formula(f)) == f


def test_occurrences_two_slice_sequent():
    occ = occurrences(parse_sequent("(a +[x] b) |- (a +[y] b)"))
    assert [(o.index, o.atom) for o in occ] == [(0, "a"), (1, "b"), (2, "a"), (3, "b")]
    assert occ[0].position == 1 and occ[2].position == 0
    assert occ[1].path == ("r",)


def test_occurrences_axiom_and_chain():
    assert [o.atom for o in occurrences(parse_sequent("a |- a"))] == ["a", "a"]
    chain = parse_sequent("a, (a -o a), (a -o a), (a -o a) |- a")
    assert [o.index for o in occurrences(chain)] == list(range(8))
    assert chain.size == 8


def test_occurrences_stable():
    s = parse_sequent("(a +[x] b), (c -o d) |- e")
    assert occurrences(s) == occurrences(s)


@pytest.mark.parametrize(
    "text, labels",
    [
        ("(a +[x] b) |- c", {"x"}),
        ("a |- (a +[y] b)", set()),
        ("((a +[x] b) -o c) |- d", set()),
        ("|- ((a +[x] b) -o c)", {"x"}),
    ],
)
def test_negative_plus_labels(text, labels):
    assert negative_plus_labels(parse_sequent(text)) == labels


def test_plus_sides():
    s = parse_sequent("c, ((a -o b) +[x] d) |- e")
    left, right = plus_sides(s, "x")
    assert list(left) == [1, 2] and list(right) == [3]


def test_canonical_pair():
    assert canonical_pair(3, 1) == (1, 3)
    with pytest.raises(ValueError):
        canonical_pair(2, 2)


def test_sequent_offsets():
    s = Sequent((Atom("a"), Imp(Atom("a"), Atom("b"))), Atom("b"))
    assert s.offsets == (0, 1, 3, 4)

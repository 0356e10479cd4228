import pytest
from hypothesis import given, strategies as st

from permeq.rewrite import (DuplicateRule, EmptyRuleSide, NameClash, Rule, RewriteError,
                            SystemSyntaxError, UndeclaredLetter, concat, lstring, make_system,
                            parse_system)

words = st.lists(st.sampled_from("ABC"), max_size=6).map(tuple)


def test_parse_running_example(running):
    assert running.alphabet == ("A", "B")
    assert running.rules["alpha"] == Rule("alpha", ("B", "B"), ("A",))
    assert running.rules["beta"] == Rule("beta", lstring("A A B"), lstring("B A A B"))


def test_parse_inline_example():
    system = parse_system("alphabet: A B\nrules:\n alpha: B B -> A\n beta: A A B -> B A A B")
    assert list(system.rules) == ["alpha", "beta"]


def test_parse_no_rules():
    system = parse_system("alphabet: A\nrules:")
    assert system.alphabet == ("A",) and system.rules == {}


def test_comments_and_blank_lines():
    system = parse_system("# header\nalphabet: A B   # letters\n\nrules:\n  r: A->B  # tight arrow\n")
    assert system.rules["r"].rhs == ("B",)


def test_empty_rhs_rejected():
    with pytest.raises(EmptyRuleSide):
        parse_system("alphabet: A B\nrules:\n bad: A ->")


def test_empty_lhs_rejected():
    with pytest.raises(EmptyRuleSide):
        parse_system("alphabet: A B\nrules:\n bad: -> A")
    with pytest.raises(EmptyRuleSide):
        Rule("bad", (), ("A",))


@pytest.mark.parametrize("text, error", [
    ("alphabet: A\nrules:\n r: A -> B", UndeclaredLetter),
    ("alphabet: A\nrules:\n r: A -> A\n r: A -> A", DuplicateRule),
    ("alphabet: A r\nrules:\n r: A -> A", NameClash),
])
def test_validation_errors(text, error):
    with pytest.raises(error):
        parse_system(text)


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("letters: A\nrules:", 1, 1),
    ("alphabet: A\nrulez:", 2, 1),
    ("alphabet: A\nrules:\n r A -> A", 3, 2),
    ("alphabet: A\nrules:\n r: A -> A -> A", 3, 12),
    ("alphabet: A eps\nrules:", 1, 13),
    ("alphabet: A\nrules:\n 9r: A -> A", 3, 2),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(SystemSyntaxError) as info:
        parse_system(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_all_errors_share_a_base():
    for cls in (SystemSyntaxError, EmptyRuleSide, DuplicateRule, UndeclaredLetter, NameClash):
        assert issubclass(cls, RewriteError)


def test_concat_examples():
    assert concat((), lstring("A B")) == ("A", "B")
    assert concat(lstring("A B"), lstring("A A B")) == lstring("A B A A B")
    assert concat(concat(("A",), ("B",)), ("A",)) == concat(("A",), concat(("B",), ("A",))) == lstring("A B A")


@given(words, words, words)
def test_concat_is_a_monoid(x, y, z):
    assert concat(concat(x, y), z) == concat(x, concat(y, z))
    assert concat((), x) == x == concat(x, ())
    assert len(concat(x, y)) == len(x) + len(y)


def test_make_system_text_rules():
    system = make_system("A B", "alpha: B B -> A; beta: A A B -> B A A B")
    assert system == parse_system("alphabet: A B\nrules:\n alpha: B B -> A\n beta: A A B -> B A A B")


def test_system_str_round_trips(running):
    assert parse_system(str(running)) == running

import random

import pytest
from hypothesis import given, settings, strategies as st

from mimc import (
    EMPTY,
    CleaveBond,
    CleaveMod,
    Conversion,
    CovalentMod,
    CovBond,
    Modification,
    NcBond,
    NcUnbond,
    NonCovalent,
    NonCovBind,
    ParseError,
    Process,
    Production,
    Rec,
    elem,
    parse_caps,
    parse_name,
    parse_process,
    parse_species,
    print_action,
    print_name,
    print_process,
    process_equal,
)

from models import ENZYME
from termgen import random_process, raw


def test_parse_nested_bind():
    (s,) = parse_process("{bind(B){bind(C){}}}.A").molecules
    (g,) = s.caps.items
    assert g.op == NonCovBind(elem("B"), parse_caps("{bind(C){}}"))
    assert s.body == elem("A").body


def test_parse_empty_process():
    assert parse_process("0") == Process()
    assert print_process(Process()) == "0"


def test_parse_enzyme():
    (s,) = parse_process(ENZYME).molecules
    assert isinstance(s.caps, Rec)
    assert print_process(parse_process(ENZYME)) == "rec x1.{bind(A){conv(x1.E | {}.C)}}.E"


def test_print_fixed_point():
    text = "{bind(B){bind(C){}}}.A"
    assert print_process(parse_process(text)) == text


def test_parse_names():
    n = parse_name("(E2F1:DP1)")
    assert isinstance(n.body, NonCovalent)
    assert parse_name("A") == elem("A")
    m = parse_name("['p B]")
    assert isinstance(m.body, CovalentMod) and m.body.modtype == "p"
    assert print_name(parse_name("[B A]")) == "[A B]"


def test_colon_sugar_and_comments():
    p = parse_process("# two molecules\nA:B | C  # trailing\n")
    assert print_process(p) == "{}.({}.A:{}.B) | {}.C"
    assert parse_name("E2F1:DP1") == parse_name("(DP1:E2F1)")


def test_contingency_prefix():
    p = parse_process("{[+(A:B), C; -D] prod({}.M)}.X")
    assert print_process(p) == "{[+(A:B),C;-D]prod({}.M)}.X"
    p = parse_process("{[+;-] conv(0)}.X")
    assert print_process(p) == "{conv(0)}.X"


def test_print_actions():
    e2f1, dp1 = elem("E2F1"), elem("DP1")
    assert print_action(NcBond(e2f1, dp1)) == "ncb(E2F1,DP1)"
    assert print_action(NcUnbond(elem("A"), elem("B"))) == "ncu(A,B)"
    assert print_action(Production(elem("DNA"), frozenset({elem("mRNA")}))) == "prod(DNA,{mRNA})"
    assert print_action(Conversion(parse_name("E:A"), frozenset({elem("C"), elem("E")}))) == "conv((A:E),{C,E})"
    assert print_action(CovBond(elem("A"), elem("B"))) == "cb(A,B)"
    assert print_action(CleaveBond(elem("K"), parse_name("[A B]"))) == "clvb(K,[A B])"
    assert print_action(Modification("p", elem("B"))) == "mod('p,B)"
    assert print_action(CleaveMod(elem("K"), parse_name("['p B]"))) == "clvm(K,['p B])"


def test_pair_actions_are_unordered():
    a, b = elem("A"), elem("B")
    assert NcBond(a, b) == NcBond(b, a)
    assert hash(NcUnbond(a, b)) == hash(NcUnbond(b, a))
    assert CovBond(a, b) != NcBond(a, b)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("{cleave(A)}.B", "cleave target must be a covalent bond or modification"),
        ("x.A", "unbound variable 'x'"),
        ("rec x.x.A", "non-contractive"),
        ("rec x.rec y.x.A", "non-contractive"),
        ("{bind(B){}}.A |", "expected species"),
        ("{frob(A)}.B", "expected capability operator"),
        ("A B", "unexpected trailing input"),
        ("A & B", "unexpected character"),
        ("{bind(B){}.A", "expected '}'"),
        ("[A]", "expected species"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as e:
        parse_process(text)
    assert fragment in str(e.value)
    assert 0 <= e.value.span.start <= e.value.span.end <= len(text)


def test_error_span_points_at_cleave_target():
    text = "{cleave(A)}.B"
    with pytest.raises(ParseError) as e:
        parse_process(text)
    assert text[e.value.span.start : e.value.span.end] == "A"


def test_species_and_caps_entry_points():
    assert parse_species("A").caps == EMPTY
    assert parse_caps("{}") == EMPTY
    with pytest.raises(ParseError):
        parse_caps("{} extra")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip(seed):
    p = random_process(random.Random(seed))
    text = print_process(p)
    q = parse_process(text)
    assert process_equal(p, q)
    assert print_process(q) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_raw_source_round_trip(seed):
    p = random_process(random.Random(seed))
    assert process_equal(parse_process(raw(p)), p)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="AB(){}[]:|.'+-;,x rec bind conv 0", max_size=30))
def test_errors_carry_spans_inside_input(text):
    try:
        parse_process(text)
    except ParseError as e:
        assert e.message
        assert 0 <= e.span.start <= e.span.end <= len(text)

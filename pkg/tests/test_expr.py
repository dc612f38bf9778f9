import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.corpus import default_corpus_spec, expand
from ringlab.errors import ConstructionError, NotIdempotentError, ParseError, RingLabError
from ringlab.expr import Call, Elem, Group, Num, eval_expr, parse_ring_expr


def test_parse_ks():
    node = parse_ring_expr("Ks(Zmod(4), #2)")
    assert node == Call("Ks", (Call("Zmod", (Num(4),)), Elem(2)))


def test_parse_group_ring():
    node = parse_ring_expr("GrpRing(Zmod(2), C(2)xC(2))")
    assert node.name == "GrpRing" and node.args[1] == Group((2, 2))


def test_missing_comma_position():
    with pytest.raises(ParseError) as err:
        parse_ring_expr("Mat(2 Zmod(2))")
    e = err.value
    assert (e.line, e.column, e.code) == (1, 7, "syntax")


@pytest.mark.parametrize("text, code", [
    ("Foo(2)", "unknown-name"),
    ("Zmod(2, 3)", "arity"),
    ("Mat(Zmod(2), 2)", "arity"),
    ("Zmod(", "syntax"),
    ("Zmod(2))", "syntax"),
    ("", "syntax"),
    ("SkewUT(2, GF(4), bogus)", "unknown-name"),
])
def test_diagnostics(text, code):
    with pytest.raises(ParseError) as err:
        parse_ring_expr(text)
    assert err.value.code == code
    assert err.value.line is not None and err.value.column is not None


def test_multiline_position():
    with pytest.raises(ParseError) as err:
        parse_ring_expr("Prod(Zmod(2),\n  Zmod(3) Zmod(4))")
    assert (err.value.line, err.value.column) == (2, 11)


def test_eval_examples():
    assert eval_expr("Zmod(6)").size == 6
    with pytest.raises(NotIdempotentError) as err:
        eval_expr("Corner(Mat(2, Zmod(2)), #2)")
    assert "line 1" in err.value.message
    R = eval_expr("Mns(2, Zmod(8), #2)")
    assert R.size == 4096


def test_eval_errors():
    with pytest.raises(ConstructionError):
        eval_expr("Ks(Mat(2, Zmod(2)), #2)")
    with pytest.raises(RingLabError):
        eval_expr("Quot(Zmod(4), #2, #7)")
    with pytest.raises(ConstructionError):
        eval_expr("Corner(Zmod(4), #0)")
    with pytest.raises(ConstructionError):
        eval_expr("GF(6)")


def test_quot_forms():
    assert eval_expr("Quot(Zmod(12))").size == 6
    assert eval_expr("Quot(Zmod(12), #4)").size == 4


def test_parse_print_roundtrip_on_corpus():
    for node in expand(default_corpus_spec()):
        assert parse_ring_expr(str(node)) == node
        q = Call("Quot", (node,))
        assert parse_ring_expr(str(q)) == q


_atoms = st.sampled_from(["Zmod(2)", "Zmod(3)", "GF(4)", "Zmod(4)"])


def _compound(inner):
    return st.one_of(
        st.builds(lambda a, b: f"Prod({a}, {b})", inner, inner),
        st.builds(lambda k, a: f"UT({k}, {a})", st.integers(1, 3), inner),
        st.builds(lambda a: f"Triv({a})", inner),
        st.builds(lambda a, k: f"PolyQ({a}, {k})", inner, st.integers(1, 4)),
        st.builds(lambda a, g: f"GrpRing({a}, {g})", inner, st.sampled_from(["C(2)", "C(3)xC(2)"])),
        st.builds(lambda a, s: f"Ks({a}, #{s})", inner, st.integers(0, 3)),
    )


@settings(max_examples=150, deadline=None)
@given(st.recursive(_atoms, _compound, max_leaves=4), st.sampled_from(["", " ", "\n"]))
def test_roundtrip_property(text, ws):
    node = parse_ring_expr(text.replace(", ", "," + ws))
    assert parse_ring_expr(str(node)) == node
    assert str(parse_ring_expr(str(node))) == str(node)

import pytest

from ringlab.corpus import default_corpus_spec, expand, iter_rings, load_corpus, parse_corpus
from ringlab.errors import ParseError
from ringlab.search import parse_formula, search_counterexamples

SMALL = """
[corpus]
n_range = [1, 4]
quotients_by_jacobson = true

[families.z]
template = "Zmod({n})"
params = { n = [2, 9] }

[families.pairs]
template = "Prod({a}, {b})"
params = { a = { family = "z" }, b = { family = "z" } }
unordered = true
max_size = 12
"""


def test_expansion_is_stable():
    a = [str(x) for x in expand(default_corpus_spec())]
    b = [str(x) for x in expand(default_corpus_spec())]
    assert a == b and len(a) == len(set(a))
    assert "Zmod(6)" in a


def test_small_corpus_expansion():
    spec = parse_corpus(SMALL)
    texts = [str(x) for x in expand(spec)]
    assert texts[:8] == [f"Zmod({n})" for n in range(2, 10)]
    prods = texts[8:]
    assert "Prod(Zmod(2), Zmod(6))" in prods and "Prod(Zmod(6), Zmod(2))" not in prods
    assert "Prod(Zmod(3), Zmod(5))" not in prods  # size 15 > max_size
    assert spec.ns == [1, 2, 3, 4]


def test_quotients_are_added():
    spec = parse_corpus(SMALL)
    texts = [e.text for e in iter_rings(spec)]
    assert "Quot(Zmod(4))" in texts and "Quot(Zmod(5))" not in texts


@pytest.mark.parametrize("text", [
    "[corpus]\nn_range = [0, 3]\n",
    "[families.x]\nparams = {}\n",
    "[families.x]\ntemplate = \"Zmod({n})\"\nparams = { m = [2, 3] }\n",
    "[families.x]\ntemplate = \"Zmod({n})\"\nparams = { n = { family = \"y\" } }\n",
    "[bogus]\n",
    "[corpus\n",
])
def test_bad_config(text):
    with pytest.raises(ParseError) as err:
        expand(parse_corpus(text))
    assert err.value.code == "corpus-config"


def test_load_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_corpus(tmp_path / "nope.toml")


def test_formula_parser():
    assert str(parse_formula("n_delta_u(2) & !n_uj(2)")) == "(n_delta_u(2) & !n_uj(2))"
    assert str(parse_formula("regular ∧ ¬ reduced ∨ clean")) == "((regular & !reduced) | clean)"
    assert str(parse_formula("not (reduced)")) == "!reduced"
    for bad, code in [("n_delta_u", "arity"), ("reduced(2)", "arity"), ("nope", "unknown-name"),
                      ("regular &", "syntax"), ("(regular", "syntax"), ("regular $", "syntax")]:
        with pytest.raises(ParseError) as err:
            parse_formula(bad)
        assert err.value.code == code


def test_search_examples():
    corpus = ["Zmod(4)", "Zmod(6)", "GF(4)", "Mat(2, Zmod(2))"]
    hits = [str(h) for h in search_counterexamples(corpus, "delta_u & !reduced")]
    assert "Zmod(4)" in hits
    hits = [str(h) for h in search_counterexamples(corpus, "regular & n_delta_u(3)")]
    assert "GF(4)" in hits
    assert search_counterexamples(corpus, "clean", limit=2) == search_counterexamples(corpus, "clean")[:2]

import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from frl.logic import (
    L0, L2, Eq, Gen, Implies, Inv, Mul, Not, One, ParseError, Pow, Quantifier, Sentence,
    Var, classify, clauses, insert_vacuous, negate_primitive, nnf, parse_formula,
    parse_matrix, parse_term, print_formula, print_term,
)
from frl.logic.classify import literals_of_conjunction
from gen import random_sentence

GOLDEN = [tuple(line.split("\t")) for line in
          (Path(__file__).parent / "data" / "golden_sentences.tsv").read_text().splitlines()]


def test_golden_corpus_is_large():
    assert len(GOLDEN) >= 200


@pytest.mark.parametrize("language,text", GOLDEN, ids=range(len(GOLDEN)))
def test_golden_print_is_bit_exact(language, text):
    s = parse_formula(text, language)
    assert print_formula(s) == text
    assert parse_formula(print_formula(s), language) == s


@settings(max_examples=1000)
@given(st.integers(0, 2 ** 32))
def test_random_ast_round_trip(seed):
    s = random_sentence(random.Random(seed))
    assert parse_formula(print_formula(s), s.language) == s


@pytest.mark.parametrize("text,canonical", [
    ("A x . A y . A z . (x*y)*z = x*(y*z)", "A x . A y . A z . x*y*z = x*(y*z)"),
    ("A x . x + -x = 0", "A x . x - x = 0"),
    ("A x . -(-x) = x", "A x . --x = x"),
    ("A x.A y.x*y=y*x", "A x . A y . x*y = y*x"),
    ("A x . x*x = 1 -> x = 1", "A x . (x*x = 1 -> x = 1)"),
    ("A x . x = 1 -> x = 1 -> x = 1", "A x . (x = 1 -> (x = 1 -> x = 1))"),
    ("A x . x = 1 | x = 1 & x = 1", "A x . (x = 1 | (x = 1 & x = 1))"),
    ("A x . ~x = 1 & x = 1", "A x . (~(x = 1) & x = 1)"),
])
def test_canonicalisation(text, canonical):
    assert print_formula(parse_formula(text, L2)) == canonical


def test_parse_examples():
    s = parse_formula("A x . (x*x = 1 -> x = 1)")
    assert s.prefix == ((Quantifier.FORALL, "x"),)
    assert s.matrix == Implies(Eq(Mul(Var("x"), Var("x")), One()), Eq(Var("x"), One()))
    assert parse_formula("E x . ~(x = 1)").is_existential()
    with pytest.raises(ParseError):
        parse_formula("A x . G(x)", L0)


def test_terms():
    assert parse_term("a^-1") == Inv(Gen(1))
    assert parse_term("x^-2") == Pow(Var("x"), -2)
    assert print_term(parse_term("(1 - a)*(1 - b)")) == "(1 - a)*(1 - b)"


@pytest.mark.parametrize("text,language,position", [
    ("A x . (x = 1", L0, 12),
    ("A x . x + 1 = x", L0, 8),
    ("A x . y = 1", L0, 6),
    ("A x . x = 2", L0, 10),
    ("A x . x = [1 + ]", L2, 13),
    ("A x . A x . x = 1", L0, 8),
    ("A x . x = 1 $", L0, 12),
])
def test_errors_carry_positions(text, language, position):
    with pytest.raises(ParseError) as e:
        parse_formula(text, language)
    assert e.value.position == position


def test_zero_ary_prefix_prints_matrix_only():
    assert print_formula(parse_formula("a*b = b*a")) == "a*b = b*a"


def test_classification_examples():
    c = classify(parse_formula("A x . (x*x = 1 -> x = 1)"))
    assert c.strict_universal_horn and c.quasi_identity
    rct = parse_formula("A x . A y . A z . (((~P(y) & x*y = y*x) & y*z = z*y) -> x*z = z*x)", L2)
    c = classify(rct)
    assert c.universal and not c.horn
    c = classify(parse_formula("E x . (x*x = 1 & ~(x = 1))"))
    assert c.existential and c.primitive
    torsion_l2 = classify(parse_formula("A x . ((G(x) & x^2 = 1) -> x = 1)", L2))
    assert torsion_l2.strict_universal_horn and not torsion_l2.quasi_identity


def test_horn_counts_positive_literals():
    assert classify(parse_formula("A x . (x = 1 | ~(x*x = 1))")).strict_basic_horn
    assert not classify(parse_formula("A x . (x = 1 | x*x = 1)")).horn
    c = classify(parse_formula("A x . ((x = 1 -> x*x = 1) & ~(x = x))"))
    assert c.horn and not c.basic_horn
    assert classify(parse_formula("A x . ~(x = 1)")).basic_horn
    assert not classify(parse_formula("A x . ~(x = 1)")).strict_basic_horn


@settings(max_examples=300)
@given(st.integers(0, 2 ** 32), st.sampled_from(list(Quantifier)), st.integers(0, 3))
def test_classify_stable_under_vacuous_quantifier(seed, q, where):
    s = random_sentence(random.Random(seed))
    if not s.prefix:
        return  # quantifier-free sentences count as both universal and existential
    if (q is Quantifier.FORALL and not s.is_universal()) or (q is Quantifier.EXISTS and not s.is_existential()):
        return
    t = insert_vacuous(s, "v", q, min(where, len(s.prefix)))
    assert classify(t) == classify(s)


@given(st.integers(0, 2 ** 32))
def test_double_negation_normalises_away(seed):
    s = random_sentence(random.Random(seed))
    assert nnf(Not(Not(s.matrix))) == nnf(s.matrix)
    assert clauses(Not(Not(s.matrix))) == clauses(s.matrix)


def test_negate_primitive_examples():
    assert print_formula(negate_primitive(parse_formula("E x . (x*x = 1 & ~(x = 1))"))) == "A x . (x*x = 1 -> x = 1)"
    assert print_formula(negate_primitive(parse_formula("E x . ~(x = 1)"))) == "A x . x = 1"
    with pytest.raises(ValueError):
        negate_primitive(parse_formula("E x . E y . x*y = y*x"))
    with pytest.raises(ValueError):
        negate_primitive(parse_formula("E x . (x = 1 | ~(x = 1))"))


def test_sentence_validation():
    with pytest.raises(ValueError):
        Sentence(((Quantifier.FORALL, "x"),), Eq(Var("y"), One()))
    with pytest.raises(ValueError):
        Sentence((), Eq(Var("y"), One()))
    assert parse_matrix("x*y = 1") == Eq(Mul(Var("x"), Var("y")), One())


def test_literals_of_conjunction():
    lits = literals_of_conjunction(parse_formula("E x . (x = 1 & ~~(x*x = 1))").matrix)
    assert [pos for _, pos in lits] == [True, True]

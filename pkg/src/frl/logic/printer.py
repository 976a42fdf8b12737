"""Canonical text for terms, formulas and sentences.

Binary connectives are always parenthesised; terms use the fewest
parentheses that the precedence ``^`` > ``*`` > unary ``-`` > ``+``/``-``
allows.  ``parse(print(s)) == s`` for every AST the parser can produce.
"""

from __future__ import annotations

from ..groupring import format_ring_literal
from ..words import GENERATOR_NAMES
from .syntax import (
    Add, And, Const, Eq, Formula, Gen, Implies, Inv, IsGroupElement, IsScalar,
    Mul, Neg, Not, One, Or, Pow, Sentence, Term, Var, Zero,
)

_SUM, _UNARY, _PRODUCT, _POWER, _PRIMARY = 1, 2, 3, 4, 5


def _term(t: Term) -> tuple[str, int]:
    if isinstance(t, Var):
        return t.name, _PRIMARY
    if isinstance(t, Gen):
        return GENERATOR_NAMES[t.index - 1], _PRIMARY
    if isinstance(t, One):
        return "1", _PRIMARY
    if isinstance(t, Zero):
        return "0", _PRIMARY
    if isinstance(t, Const):
        return format_ring_literal(t.value), _PRIMARY
    if isinstance(t, Inv):
        return _wrap(t.arg, _PRIMARY) + "^-1", _POWER
    if isinstance(t, Pow):
        return f"{_wrap(t.base, _PRIMARY)}^{t.exponent}", _POWER
    if isinstance(t, Mul):
        return _wrap(t.left, _PRODUCT) + "*" + _wrap(t.right, _POWER), _PRODUCT
    if isinstance(t, Neg):
        return "-" + _wrap(t.arg, _UNARY), _UNARY
    if isinstance(t, Add):
        if isinstance(t.right, Neg):
            return _wrap(t.left, _SUM) + " - " + _wrap(t.right.arg, _UNARY), _SUM
        return _wrap(t.left, _SUM) + " + " + _wrap(t.right, _UNARY), _SUM
    raise TypeError(f"not a term: {t!r}")


def _wrap(t: Term, min_level: int) -> str:
    text, level = _term(t)
    return text if level >= min_level else f"({text})"


def print_term(t: Term) -> str:
    return _term(t)[0]


def _formula(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"{print_term(f.left)} = {print_term(f.right)}"
    if isinstance(f, IsGroupElement):
        return f"G({print_term(f.term)})"
    if isinstance(f, IsScalar):
        return f"P({print_term(f.term)})"
    if isinstance(f, Not):
        inner = _formula(f.arg)
        return f"~({inner})" if isinstance(f.arg, Eq) else "~" + inner
    if isinstance(f, And):
        return f"({_formula(f.left)} & {_formula(f.right)})"
    if isinstance(f, Or):
        return f"({_formula(f.left)} | {_formula(f.right)})"
    if isinstance(f, Implies):
        return f"({_formula(f.left)} -> {_formula(f.right)})"
    raise TypeError(f"not a formula: {f!r}")


def print_formula(s) -> str:
    """Text of a Sentence (prefix then matrix) or of a bare formula."""
    if isinstance(s, Sentence):
        prefix = "".join(f"{q.value} {v} . " for q, v in s.prefix)
        return prefix + _formula(s.matrix)
    return _formula(s)

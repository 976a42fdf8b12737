"""Recursive-descent parser for L0/L2 sentences.

Grammar::

    sentence    := (('A' | 'E') var '.')* formula
    formula     := disjunction ('->' formula)?
    disjunction := conjunction ('|' conjunction)*
    conjunction := negation ('&' negation)*
    negation    := '~' negation | 'G(' term ')' | 'P(' term ')'
                 | term '=' term | '(' formula ')'
    term        := unary (('+' | '-') unary)*            (L2)
    unary       := '-' unary | product                   (L2)
    product     := power ('*' power)*
    power       := primary ('^' ['-'] int)*
    primary     := var | generator | '1' | '0' | '[' literal ']' | '(' term ')'

An identifier bound by the prefix is a variable.  Otherwise a single
letter among the first ``rank`` letters is a generator constant, and any
other identifier is a free variable (allowed only in bare formulas).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..groupring import LiteralSyntaxError, parse_ring_literal
from ..words import DEFAULT_RANK, GENERATOR_NAMES
from .syntax import (
    L0, L2, LANGUAGES, Add, And, Const, Eq, Formula, Gen, Implies, Inv,
    IsGroupElement, IsScalar, Mul, Neg, Not, One, Or, Pow, Quantifier, Sentence,
    Term, Var, Zero,
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<lit>\[[^\]]*\])
      | (?P<arrow>->)
      | (?P<int>\d+)
      | (?P<ident>[a-z][a-z0-9_]*)
      | (?P<kw>[AEGP])(?![A-Za-z0-9_])
      | (?P<sym>[.()~&|=*^+\-])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos == n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind in ("arrow", "sym"):
            kind = value
        toks.append(_Tok(kind, value, start))
        pos = m.end()
    toks.append(_Tok("eof", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, language: str, rank: int, allow_free: bool):
        if language not in LANGUAGES:
            raise ValueError(f"unknown language {language!r}")
        self.text = text
        self.language = language
        self.rank = rank
        self.allow_free = allow_free
        self.toks = _tokenize(text)
        self.i = 0
        self.bound: set[str] = set()

    # token helpers

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        t = self.tok
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    # sentences and formulas

    def sentence(self) -> Sentence:
        prefix = []
        while (self.tok.kind == "kw" and self.tok.text in "AE"
               and self.peek().kind == "ident" and self.peek(2).kind == "."):
            q = Quantifier(self.tok.text)
            name = self.peek().text
            if name in self.bound:
                raise self.error(f"variable {name!r} quantified twice", self.peek())
            self.bound.add(name)
            prefix.append((q, name))
            self.i += 3
        matrix = self.formula()
        self.expect("eof")
        return Sentence(tuple(prefix), matrix, self.language)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.negation()
        while self.accept("&"):
            f = And(f, self.negation())
        return f

    def negation(self) -> Formula:
        if self.accept("~"):
            return Not(self.negation())
        tok = self.tok
        if tok.kind == "kw" and tok.text in "GP" and self.peek().kind == "(":
            if self.language == L0:
                raise self.error(f"predicate {tok.text} is not in L0")
            self.i += 2
            t = self.term()
            self.expect(")")
            return IsGroupElement(t) if tok.text == "G" else IsScalar(t)
        if tok.kind == "(":
            start = self.i
            try:
                return self.equation()
            except ParseError as first:
                self.i = start
                self.i += 1
                try:
                    f = self.formula()
                    self.expect(")")
                    return f
                except ParseError as second:
                    raise max(first, second, key=lambda e: e.position) from None
        return self.equation()

    def equation(self) -> Eq:
        left = self.term()
        if self.language == L0 and self.tok.kind in ("+", "-"):
            raise self.error(f"{self.tok.kind!r} is not an operation of L0")
        self.expect("=")
        return Eq(left, self.term())

    # terms

    def term(self) -> Term:
        if self.language == L0:
            return self.product()
        t = self.unary()
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.i += 1
            rhs = self.unary()
            t = Add(t, rhs) if op == "+" else Add(t, Neg(rhs))
        return t

    def unary(self) -> Term:
        if self.accept("-"):
            return Neg(self.unary())
        return self.product()

    def product(self) -> Term:
        t = self.power()
        while self.accept("*"):
            t = Mul(t, self.power())
        return t

    def power(self) -> Term:
        t = self.primary()
        while self.tok.kind == "^":
            self.i += 1
            negative = self.accept("-")
            n = int(self.expect("int").text)
            if negative:
                n = -n
            t = Inv(t) if n == -1 else Pow(t, n)
        return t

    def primary(self) -> Term:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            name = tok.text
            if name in self.bound:
                return Var(name)
            if len(name) == 1 and GENERATOR_NAMES.index(name) < self.rank:
                return Gen(GENERATOR_NAMES.index(name) + 1)
            if self.allow_free:
                return Var(name)
            raise self.error(f"unbound variable {name!r}", tok)
        if tok.kind == "int":
            self.i += 1
            if tok.text == "1":
                return One()
            if tok.text == "0" and self.language == L2:
                return Zero()
            hint = f"; write [{tok.text}]" if self.language == L2 else ""
            raise self.error(f"integer {tok.text} is not a term of {self.language}{hint}", tok)
        if tok.kind == "lit":
            if self.language == L0:
                raise self.error("group-ring literals are not in L0", tok)
            self.i += 1
            try:
                return Const(parse_ring_literal(tok.text, self.rank, offset=tok.pos))
            except LiteralSyntaxError as e:
                raise ParseError(str(e).rsplit(" at position", 1)[0], e.position, self.text) from None
        if tok.kind == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        if tok.kind in ("+", "-") and self.language == L0:
            raise self.error(f"{tok.kind!r} is not an operation of L0")
        found = tok.text or "end of input"
        raise self.error(f"expected a term, found {found!r}")


def parse_formula(text: str, language: str = L0, rank: int = DEFAULT_RANK) -> Sentence:
    """Parse a prenex sentence; every variable must be bound by the prefix."""
    return _Parser(text, language, rank, allow_free=False).sentence()


def parse_matrix(text: str, language: str = L0, rank: int = DEFAULT_RANK) -> Formula:
    """Parse a quantifier-free formula; unknown identifiers become free variables."""
    p = _Parser(text, language, rank, allow_free=True)
    f = p.formula()
    p.expect("eof")
    return f


def parse_term(text: str, language: str = L2, rank: int = DEFAULT_RANK) -> Term:
    p = _Parser(text, language, rank, allow_free=True)
    t = p.term()
    p.expect("eof")
    return t

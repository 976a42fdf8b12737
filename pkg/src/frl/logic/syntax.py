"""Abstract syntax for the group language L0 and the group-ring language L2.

L0 terms are built from variables, generator constants, ``1``, products,
inverses and integer powers.  L2 adds ``0``, sums, negation and bracketed
group-ring constants, and the predicates ``G(t)`` (t is a group element)
and ``P(t)`` (t is a scalar).  Inverses are kept in L2 as a partial
operation: they are defined on trivial units only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Union

from ..groupring import GroupRingElement
from ..words import Word

L0 = "L0"
L2 = "L2"
LANGUAGES = (L0, L2)


# terms

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Gen:
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= 26:
            raise ValueError(f"generator index out of range: {self.index}")


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Const:
    value: GroupRingElement


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Inv:
    arg: "Term"


@dataclass(frozen=True)
class Pow:
    base: "Term"
    exponent: int

    def __post_init__(self):
        if self.exponent == -1:
            raise ValueError("use Inv for exponent -1")


Term = Union[Var, Gen, One, Zero, Const, Mul, Add, Neg, Inv, Pow]
RING_ONLY_TERMS = (Zero, Const, Add, Neg)


# formulas

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class IsGroupElement:
    """``G(t)``."""
    term: Term


@dataclass(frozen=True)
class IsScalar:
    """``P(t)``."""
    term: Term


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Atom = Union[Eq, IsGroupElement, IsScalar]
Formula = Union[Eq, IsGroupElement, IsScalar, Not, And, Or, Implies]
ATOMS = (Eq, IsGroupElement, IsScalar)
PREDICATES = (IsGroupElement, IsScalar)
BINARY = (And, Or, Implies)


class Quantifier(enum.Enum):
    FORALL = "A"
    EXISTS = "E"


@dataclass(frozen=True)
class Sentence:
    """Prenex sentence: quantifier prefix and quantifier-free matrix.

    Vacuous quantification is allowed; variables in the prefix are distinct
    and every free variable of the matrix is bound by it.
    """

    prefix: tuple[tuple[Quantifier, str], ...]
    matrix: Formula
    language: str = L0

    def __post_init__(self):
        if self.language not in LANGUAGES:
            raise ValueError(f"unknown language {self.language!r}")
        names = [v for _, v in self.prefix]
        if len(set(names)) != len(names):
            raise ValueError(f"repeated variable in prefix: {names}")
        free = free_vars(self.matrix) - set(names)
        if free:
            raise ValueError(f"free variables in sentence: {sorted(free)}")
        check_language(self.matrix, self.language)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for _, v in self.prefix)

    def is_universal(self) -> bool:
        return all(q is Quantifier.FORALL for q, _ in self.prefix)

    def is_existential(self) -> bool:
        return all(q is Quantifier.EXISTS for q, _ in self.prefix)

    def __str__(self):
        from .printer import print_formula
        return print_formula(self)


def forall(variables, matrix: Formula, language: str = L0) -> Sentence:
    return Sentence(tuple((Quantifier.FORALL, v) for v in variables), matrix, language)


def exists(variables, matrix: Formula, language: str = L0) -> Sentence:
    return Sentence(tuple((Quantifier.EXISTS, v) for v in variables), matrix, language)


# traversal helpers

def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, (Mul, Add)):
        yield from subterms(t.left)
        yield from subterms(t.right)
    elif isinstance(t, (Neg, Inv)):
        yield from subterms(t.arg)
    elif isinstance(t, Pow):
        yield from subterms(t.base)


def atoms(f: Formula) -> Iterator[Atom]:
    if isinstance(f, ATOMS):
        yield f
    elif isinstance(f, Not):
        yield from atoms(f.arg)
    else:
        yield from atoms(f.left)
        yield from atoms(f.right)


def atom_terms(a: Atom) -> tuple[Term, ...]:
    return (a.left, a.right) if isinstance(a, Eq) else (a.term,)


def formula_terms(f: Formula) -> Iterator[Term]:
    for a in atoms(f):
        for t in atom_terms(a):
            yield from subterms(t)


def free_vars(f: Formula) -> set[str]:
    return {t.name for t in formula_terms(f) if isinstance(t, Var)}


def generators_used(f: Formula) -> int:
    return max((t.index for t in formula_terms(f) if isinstance(t, Gen)), default=0)


def check_language(f: Formula, language: str) -> None:
    if language == L2:
        return
    for a in atoms(f):
        if isinstance(a, PREDICATES):
            raise ValueError(f"predicate {type(a).__name__} is not in L0")
    for t in formula_terms(f):
        if isinstance(t, RING_ONLY_TERMS):
            raise ValueError(f"ring term {type(t).__name__} is not in L0")


# builders

def conj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        raise ValueError("empty conjunction")
    return reduce(And, parts)


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        raise ValueError("empty disjunction")
    return reduce(Or, parts)


def product(parts) -> Term:
    parts = list(parts)
    if not parts:
        return One()
    return reduce(Mul, parts)


def word_term(w: Word) -> Term:
    """A word as a product of generator constants and their inverses."""
    factors = [Gen(x) if x > 0 else Inv(Gen(-x)) for x in w.letters]
    return product(factors)


def ring_constant(x: GroupRingElement) -> Term:
    """Readable L2 term for a constant: ``0``, ``1``, a generator, or a bracket literal."""
    if x.is_zero():
        return Zero()
    if x.is_group_element():
        g = x.as_group_element()
        if isinstance(g, Word):
            if g.is_identity():
                return One()
            if len(g) == 1 and g.letters[0] > 0:
                return Gen(g.letters[0])
    return Const(x)

"""Evaluation of quantifier-free formulas in explicit models, and bounded
checking of universal and existential sentences.

Models are the free group F, the integral group ring Z[F], a finite
permutation group and a group ring (Z/m)[H] over a finite permutation group.
Bounded checks enumerate assignments in a fixed canonical order, so the
counterexample or witness they report is always the first one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .groupring import GroupRingElement, format_ring_literal, unit_inverse
from .logic import (
    L0, Add, And, Const, Eq, Formula, Gen, Implies, Inv, IsGroupElement, IsScalar,
    Mul, Neg, Not, One, Or, Pow, Sentence, Term, Var, Zero, clauses,
    negate_primitive, terms_dnf,
)
from .perms import Permutation
from .words import IDENTITY, Word, ball, format_word


class EvaluationError(ValueError):
    """Unbound variable, or a term or value of the wrong sort for the model."""


class _Undefined(Exception):
    """An inverse of a non-unit; the enclosing atom is false."""


@dataclass(frozen=True)
class DomainBounds:
    word_length: int = 2
    support_size: int = 2
    coeff_bound: int = 2

    def __post_init__(self):
        for name in ("word_length", "support_size", "coeff_bound"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def to_json(self) -> dict:
        return {"word_length": self.word_length, "support_size": self.support_size,
                "coeff_bound": self.coeff_bound}


def signed_coefficients(bound: int) -> list[int]:
    """1, -1, 2, -2, ..., bound, -bound."""
    return [s * c for c in range(1, bound + 1) for s in (1, -1)]


# models

class _GroupModel:
    is_ring = False

    def embed(self, v):
        if isinstance(v, GroupRingElement):
            if not v.is_group_element():
                raise EvaluationError(f"{v} is not a group element")
            v = v.as_group_element()
        if not isinstance(v, self.element_type):
            raise EvaluationError(f"{v!r} is not an element of {self.name}")
        return v

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return x.inverse()

    def power(self, x, n):
        return x ** n

    def format(self, v) -> str:
        return str(v)


class FreeGroup(_GroupModel):
    element_type = Word

    def __init__(self, rank: int = 2):
        self.rank = rank
        self.name = f"F{rank}"
        self.one = IDENTITY

    def generator(self, i: int):
        if i > self.rank:
            raise EvaluationError(f"generator {i} exceeds rank {self.rank}")
        return Word.generator(i)

    def group_domain(self, b: DomainBounds):
        return ball(b.word_length, self.rank)

    def format(self, v) -> str:
        return format_word(v)


class FiniteGroup(_GroupModel):
    """A finite permutation group given by its full element list."""

    element_type = Permutation

    def __init__(self, elements: Sequence[Permutation], gens: Sequence[Permutation] = (),
                 name: str = "H"):
        if not elements:
            raise ValueError("a group has at least one element")
        self.elements = tuple(elements)
        self.gens = tuple(gens)
        self.name = name
        self.one = Permutation.identity(self.elements[0].degree)

    def generator(self, i: int):
        if i > len(self.gens):
            raise EvaluationError(f"{self.name} has no generator constant {i}")
        return self.gens[i - 1]

    def group_domain(self, b: DomainBounds):
        return self.elements


class _RingModel:
    is_ring = True
    modulus: int | None = None

    def embed(self, v):
        if isinstance(v, GroupRingElement):
            if v.modulus != self.modulus:
                raise EvaluationError(f"{v} has the wrong coefficient ring for {self.name}")
            if v.carrier is not None and not isinstance(v.support()[0], self.element_type):
                raise EvaluationError(f"{v} is not an element of {self.name}")
            return v
        if isinstance(v, self.element_type):
            return GroupRingElement.of(v, 1, self.modulus)
        raise EvaluationError(f"{v!r} is not an element of {self.name}")

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        try:
            return unit_inverse(x)
        except ValueError:
            raise _Undefined from None

    def power(self, x, n):
        if n < 0:
            x, n = self.inv(x), -n
        result = self.one
        for _ in range(n):
            result = result * x
        return result

    def is_group_element(self, x) -> bool:
        return x.is_group_element()

    def is_scalar(self, x) -> bool:
        return x.is_scalar()

    def _ring_domain(self, words, b: DomainBounds) -> Iterator[GroupRingElement]:
        coeffs = self._coefficients(b.coeff_bound)
        yield self.zero
        for size in range(1, b.support_size + 1):
            for support in itertools.combinations(words, size):
                for cs in itertools.product(coeffs, repeat=size):
                    yield GroupRingElement(zip(support, cs), self.modulus)

    def _coefficients(self, bound: int) -> list[int]:
        return signed_coefficients(bound)

    def scalar_domain(self, b: DomainBounds) -> list[GroupRingElement]:
        return [self.zero] + [GroupRingElement.of(self.one_group, c, self.modulus)
                              for c in self._coefficients(b.coeff_bound)]

    def format(self, v) -> str:
        return format_ring_literal(v)


class FreeGroupRing(_RingModel):
    element_type = Word

    def __init__(self, rank: int = 2):
        self.rank = rank
        self.name = f"Z[F{rank}]"
        self.one_group = IDENTITY
        self.one = GroupRingElement.one()
        self.zero = GroupRingElement.zero()

    def generator(self, i: int):
        if i > self.rank:
            raise EvaluationError(f"generator {i} exceeds rank {self.rank}")
        return GroupRingElement.of(Word.generator(i))

    def group_domain(self, b: DomainBounds):
        return [GroupRingElement.of(w) for w in ball(b.word_length, self.rank)]

    def ring_domain(self, b: DomainBounds):
        return self._ring_domain(ball(b.word_length, self.rank), b)


class FiniteGroupRing(_RingModel):
    """(Z/m)[H] for a finite permutation group H.

    Ring-sort variables range over supports of at most ``support_size``
    elements with nonzero residues among +-1, ..., +-coeff_bound.
    """

    element_type = Permutation

    def __init__(self, elements: Sequence[Permutation], modulus: int,
                 gens: Sequence[Permutation] = (), name: str = "H"):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.elements = tuple(elements)
        self.modulus = modulus
        self.gens = tuple(gens)
        self.name = f"Z{modulus}[{name}]"
        self.one_group = Permutation.identity(self.elements[0].degree)
        self.one = GroupRingElement.one(self.one_group, modulus)
        self.zero = GroupRingElement.zero(modulus)

    def generator(self, i: int):
        if i > len(self.gens):
            raise EvaluationError(f"{self.name} has no generator constant {i}")
        return GroupRingElement.of(self.gens[i - 1], 1, self.modulus)

    def _coefficients(self, bound: int) -> list[int]:
        residues = (c % self.modulus for c in signed_coefficients(bound))
        return [c for c in dict.fromkeys(residues) if c]

    def group_domain(self, b: DomainBounds):
        return [GroupRingElement.of(g, 1, self.modulus) for g in self.elements]

    def ring_domain(self, b: DomainBounds):
        return self._ring_domain(self.elements, b)


Model = FreeGroup | FiniteGroup | FreeGroupRing | FiniteGroupRing


# compilation to closures over a tuple of values

def _compile_term(t: Term, slots: Mapping[str, int], model) -> Callable:
    if isinstance(t, Var):
        if t.name not in slots:
            raise EvaluationError(f"unbound variable {t.name!r}")
        i = slots[t.name]
        return lambda env: env[i]
    if isinstance(t, Gen):
        g = model.generator(t.index)
        return lambda env: g
    if isinstance(t, One):
        one = model.one
        return lambda env: one
    if isinstance(t, Mul):
        f, g = _compile_term(t.left, slots, model), _compile_term(t.right, slots, model)
        mul = model.mul
        return lambda env: mul(f(env), g(env))
    if isinstance(t, Inv):
        f = _compile_term(t.arg, slots, model)
        inv = model.inv
        return lambda env: inv(f(env))
    if isinstance(t, Pow):
        f = _compile_term(t.base, slots, model)
        n, power = t.exponent, model.power
        return lambda env: power(f(env), n)
    if not model.is_ring:
        raise EvaluationError(f"{type(t).__name__} is not an operation of the group {model.name}")
    if isinstance(t, Zero):
        zero = model.zero
        return lambda env: zero
    if isinstance(t, Const):
        c = model.embed(t.value)
        return lambda env: c
    if isinstance(t, Add):
        f, g = _compile_term(t.left, slots, model), _compile_term(t.right, slots, model)
        return lambda env: f(env) + g(env)
    if isinstance(t, Neg):
        f = _compile_term(t.arg, slots, model)
        return lambda env: -f(env)
    raise TypeError(f"not a term: {t!r}")


def _guarded(test):
    def run(env):
        try:
            return test(env)
        except _Undefined:
            return False
    return run


def _compile(f: Formula, slots: Mapping[str, int], model) -> Callable:
    if isinstance(f, Eq):
        lhs, rhs = _compile_term(f.left, slots, model), _compile_term(f.right, slots, model)
        return _guarded(lambda env: lhs(env) == rhs(env))
    if isinstance(f, (IsGroupElement, IsScalar)):
        if not model.is_ring:
            raise EvaluationError(f"predicates are not interpreted in the group {model.name}")
        t = _compile_term(f.term, slots, model)
        test = model.is_group_element if isinstance(f, IsGroupElement) else model.is_scalar
        return _guarded(lambda env: test(t(env)))
    if isinstance(f, Not):
        g = _compile(f.arg, slots, model)
        return lambda env: not g(env)
    left, right = _compile(f.left, slots, model), _compile(f.right, slots, model)
    if isinstance(f, And):
        return lambda env: left(env) and right(env)
    if isinstance(f, Or):
        return lambda env: left(env) or right(env)
    if isinstance(f, Implies):
        return lambda env: (not left(env)) or right(env)
    raise TypeError(f"not a formula: {f!r}")


def compile_matrix(matrix: Formula, variables: Sequence[str], model) -> Callable:
    """Predicate on value tuples ordered like ``variables``."""
    return _compile(matrix, {v: i for i, v in enumerate(variables)}, model)


def eval_term(t: Term, assignment: Mapping, model):
    names = list(assignment)
    env = tuple(model.embed(assignment[v]) for v in names)
    try:
        return _compile_term(t, {v: i for i, v in enumerate(names)}, model)(env)
    except _Undefined:
        return None


def eval_qf(matrix: Formula, assignment: Mapping, model) -> bool:
    """Truth of a quantifier-free formula under ``assignment``.

    Values may be words or permutations (embedded with coefficient 1 in a
    group ring) or group-ring elements.  An atom containing an inverse of a
    non-unit is false.
    """
    names = list(assignment)
    env = tuple(model.embed(assignment[v]) for v in names)
    return compile_matrix(matrix, names, model)(env)


# verdicts

HOLDS = "holds-at-bound"
REFUTED = "refuted"
WITNESS = "witness"
NO_WITNESS = "no-witness-at-bound"
VERDICTS = (HOLDS, REFUTED, WITNESS, NO_WITNESS)


@dataclass(frozen=True)
class Verdict:
    kind: str
    bounds: DomainBounds
    assignment: dict | None = None
    index: int | None = None
    checked: int = 0
    formatter: Callable = field(default=str, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in VERDICTS:
            raise ValueError(f"unknown verdict {self.kind!r}")

    @property
    def success(self) -> bool:
        return self.kind in (HOLDS, WITNESS)

    def to_json(self) -> dict:
        assignment = {v: self.formatter(x) for v, x in (self.assignment or {}).items()}
        return {"verdict": self.kind, "bounds": self.bounds.to_json(), "assignment": assignment}

    def __str__(self):
        if self.assignment is None:
            b = self.bounds
            return (f"{self.kind} (word_length={b.word_length}, support_size={b.support_size}, "
                    f"coeff_bound={b.coeff_bound})")
        parts = ", ".join(f"{v} = {self.formatter(x)}" for v, x in self.assignment.items())
        return f"{self.kind}: {parts}"


# sorts and domains

def variable_sorts(s: Sentence, model) -> dict[str, str]:
    """Narrowest sound domain per variable: 'group', 'scalar' or 'ring'.

    In a universal sentence a variable whose every clause carries ``~G(x)``
    can only be falsified by group elements; dually in an existential
    sentence when every disjunct asserts ``G(x)``.  Likewise for ``P``.
    """
    if not model.is_ring:
        return {v: "group" for v in s.variables}
    if s.is_universal():
        groups, want = clauses(s.matrix), False
    else:
        groups, want = terms_dnf(s.matrix), True
    sorts = {}
    for v in s.variables:
        x = Var(v)
        if groups and all((IsGroupElement(x), want) in c for c in groups):
            sorts[v] = "group"
        elif groups and all((IsScalar(x), want) in c for c in groups):
            sorts[v] = "scalar"
        else:
            sorts[v] = "ring"
    return sorts


def domain(model, sort: str, b: DomainBounds) -> list:
    if sort == "group":
        return list(model.group_domain(b))
    if sort == "scalar":
        return model.scalar_domain(b)
    return list(model.ring_domain(b))


def assignments(s: Sentence, b: DomainBounds, model) -> Iterator[tuple]:
    """Value tuples in canonical order: the first variable varies slowest."""
    sorts = variable_sorts(s, model)
    domains = [domain(model, sorts[v], b) for v in s.variables]
    return itertools.product(*domains)


def _search(s: Sentence, b: DomainBounds, model, want: bool):
    test = compile_matrix(s.matrix, s.variables, model)
    n = 0
    for n, env in enumerate(assignments(s, b, model), 1):
        if test(env) == want:
            return dict(zip(s.variables, env)), n - 1, n
    return None, None, n


def check_universal_bounded(s: Sentence, b: DomainBounds, model) -> Verdict:
    if not s.is_universal():
        raise ValueError("sentence is not universal")
    found, index, n = _search(s, b, model, want=False)
    kind = HOLDS if found is None else REFUTED
    return Verdict(kind, b, found, index, n, model.format)


def witness_search(s: Sentence, b: DomainBounds, model) -> Verdict:
    if not s.is_existential():
        raise ValueError("sentence is not existential")
    found, index, n = _search(s, b, model, want=True)
    kind = NO_WITNESS if found is None else WITNESS
    return Verdict(kind, b, found, index, n, model.format)


def check_bounded(s: Sentence, b: DomainBounds, model) -> Verdict:
    if s.is_universal():
        return check_universal_bounded(s, b, model)
    if s.is_existential():
        return witness_search(s, b, model)
    raise ValueError("bounded checking needs a universal or existential sentence")


# agreement of a primitive sentence's negation with its Horn translation

@dataclass
class EquivalenceReport:
    total: int = 0
    agreements: int = 0
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def __str__(self):
        return f"{self.agreements}/{self.total} agree"


def equivalence_harness(s: Sentence, b: DomainBounds, rank: int = 2) -> EquivalenceReport:
    """Compare the negation of ``s`` in F with its Horn translation in Z[F]
    on every tuple of words from ball(word_length)."""
    from .encode import primitive_to_horn
    if s.language != L0:
        raise ValueError("equivalence harness takes an L0 sentence")
    negated = negate_primitive(s)
    horn = primitive_to_horn(s)
    group, ring = FreeGroup(rank), FreeGroupRing(rank)
    in_group = compile_matrix(negated.matrix, s.variables, group)
    in_ring = compile_matrix(horn.matrix, s.variables, ring)
    words = ball(b.word_length, rank)
    embedded = {w: GroupRingElement.of(w) for w in words}
    report = EquivalenceReport()
    for env in itertools.product(words, repeat=len(s.variables)):
        report.total += 1
        lhs = in_group(env)
        rhs = in_ring(tuple(embedded[w] for w in env))
        if lhs == rhs:
            report.agreements += 1
        else:
            report.disagreements.append(
                {"assignment": dict(zip(s.variables, env)), "group": lhs, "ring": rhs})
    return report


__all__ = [
    "DomainBounds", "EquivalenceReport", "EvaluationError", "FiniteGroup",
    "FiniteGroupRing", "FreeGroup", "FreeGroupRing", "HOLDS", "NO_WITNESS",
    "REFUTED", "Verdict", "WITNESS", "assignments", "check_bounded",
    "check_universal_bounded", "compile_matrix", "domain", "equivalence_harness",
    "eval_qf", "eval_term", "signed_coefficients", "variable_sorts", "witness_search",
]

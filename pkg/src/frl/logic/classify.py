"""Syntactic classes of sentences: universal, primitive, Horn, quasi-identity.

Horn-ness is read off the clause form of the matrix: implications are
rewritten as disjunctions, negations pushed to the atoms (so ``~~A`` is
``A``), and the result distributed into a conjunction of clauses.  A clause
is basic Horn when it has at most one positive literal.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .syntax import (
    ATOMS, And, Atom, Eq, Formula, Implies, Not, Or, Quantifier, Sentence,
    conj, disj, forall,
)

Literal = tuple[Atom, bool]  # (atom, positive?)
Clause = tuple[Literal, ...]

MAX_CLAUSES = 4096


def nnf(f: Formula, positive: bool = True) -> Formula:
    """Negation normal form over And/Or with Not only on atoms."""
    if isinstance(f, ATOMS):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return nnf(f.arg, not positive)
    if isinstance(f, Implies):
        return nnf(Or(Not(f.left), f.right), positive)
    left, right = nnf(f.left, positive), nnf(f.right, positive)
    is_and = isinstance(f, And)
    return And(left, right) if is_and == positive else Or(left, right)


def _dedupe(items):
    return tuple(dict.fromkeys(items))


def clauses(f: Formula, positive: bool = True) -> list[Clause]:
    """Conjunctive normal form of ``f`` (or of ``~f``) as a list of clauses."""
    if isinstance(f, ATOMS):
        return [((f, positive),)]
    if isinstance(f, Not):
        return clauses(f.arg, not positive)
    if isinstance(f, Implies):
        return clauses(Or(Not(f.left), f.right), positive)
    is_and = isinstance(f, And) == positive
    left, right = clauses(f.left, positive), clauses(f.right, positive)
    if is_and:
        return list(_dedupe(left + right))
    if len(left) * len(right) > MAX_CLAUSES:
        raise ValueError("clause form too large")
    return list(_dedupe(_dedupe(a + b) for a in left for b in right))


def terms_dnf(f: Formula) -> list[Clause]:
    """Disjunctive normal form: each entry is a conjunction of literals."""
    return [tuple((a, not pos) for a, pos in c) for c in clauses(f, positive=False)]


def literals_of_conjunction(f: Formula) -> list[Literal] | None:
    """Literals of ``f`` if its negation normal form is a conjunction of literals."""
    g = nnf(f)
    out: list[Literal] = []
    stack = [g]
    while stack:
        h = stack.pop()
        if isinstance(h, And):
            stack += [h.right, h.left]
        elif isinstance(h, ATOMS):
            out.append((h, True))
        elif isinstance(h, Not):
            out.append((h.arg, False))
        else:
            return None
    return out


@dataclass(frozen=True)
class Classification:
    universal: bool
    existential: bool
    primitive: bool
    basic_horn: bool
    strict_basic_horn: bool
    horn: bool
    strict_universal_horn: bool
    quasi_identity: bool

    _NAMES = {
        "universal": "universal",
        "existential": "existential",
        "primitive": "primitive",
        "basic_horn": "basicHorn",
        "strict_basic_horn": "strictBasicHorn",
        "horn": "horn",
        "strict_universal_horn": "strictUniversalHorn",
        "quasi_identity": "quasiIdentity",
    }

    def flags(self) -> list[str]:
        return [self._NAMES[f.name] for f in fields(self) if getattr(self, f.name)]

    def as_dict(self) -> dict[str, bool]:
        return {self._NAMES[f.name]: getattr(self, f.name) for f in fields(self)}


def classify(s: Sentence) -> Classification:
    universal = s.is_universal()
    existential = s.is_existential()
    cs = clauses(s.matrix)
    positives = [sum(1 for _, pos in c if pos) for c in cs]
    horn = all(n <= 1 for n in positives)
    basic = len(cs) == 1 and positives[0] <= 1
    strict_basic = len(cs) == 1 and positives[0] == 1
    strict_universal = universal and strict_basic
    equational = all(isinstance(a, Eq) for a, _ in cs[0]) if cs else False
    return Classification(
        universal=universal,
        existential=existential,
        primitive=existential and literals_of_conjunction(s.matrix) is not None,
        basic_horn=basic,
        strict_basic_horn=strict_basic,
        horn=horn,
        strict_universal_horn=strict_universal,
        quasi_identity=strict_universal and equational,
    )


def primitive_literals(s: Sentence) -> tuple[list[Atom], list[Atom]]:
    """Split a primitive sentence's matrix into (asserted atoms, negated atoms)."""
    lits = literals_of_conjunction(s.matrix) if s.is_existential() else None
    if lits is None:
        raise ValueError("not a primitive sentence")
    pos = [a for a, p in lits if p]
    neg = [a for a, p in lits if not p]
    return pos, neg


def negate_primitive(s: Sentence) -> Sentence:
    """``E x (and u_i & and ~w_j)`` to ``A x ((and u_i) -> (or w_j))``.

    With no asserted atoms the result is ``A x (or w_j)``.  At least one
    negated atom is required.
    """
    pos, neg = primitive_literals(s)
    if not neg:
        raise ValueError("primitive sentence has no negated atoms; no conclusion to form")
    conclusion = disj(neg)
    matrix = Implies(conj(pos), conclusion) if pos else conclusion
    return forall(s.variables, matrix, s.language)


def insert_vacuous(s: Sentence, name: str, quantifier: Quantifier = Quantifier.FORALL,
                   index: int = 0) -> Sentence:
    prefix = list(s.prefix)
    prefix.insert(index, (quantifier, name))
    return Sentence(tuple(prefix), s.matrix, s.language)

"""Axiom constructors and the translation of negated primitive sentences into
strict universal Horn sentences of the group-ring language.

The translation rests on the fact that in Z[G] with G torsion-free,
``(1 - g_1)...(1 - g_q) = 0`` holds exactly when some ``g_j = 1``.  So
``A x ((and u_i = 1) -> (or w_j = 1))`` over G becomes

    A x ((G(x_1) & ... & G(x_k) & and u_i = 1) -> (1 - w_1)...(1 - w_q) = 0)

over Z[G], which has a single positive atom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groupring import GroupRingElement
from .logic import (
    L0, L2, Add, And, Eq, Implies, Inv, IsGroupElement, IsScalar, Mul, Neg,
    Not, One, Pow, Sentence, Term, Var, Zero, classify, conj, forall, product,
    ring_constant,
)
from .logic.classify import primitive_literals

FAMILIES = ("torsion", "rct", "ct", "square-zero")


def _w_term(atom: Eq) -> Term:
    """The term w with ``atom`` equivalent to ``w = 1`` in a group."""
    if isinstance(atom.right, One):
        return atom.left
    if isinstance(atom.left, One):
        return atom.right
    return Mul(atom.left, Inv(atom.right))


def primitive_to_horn(s: Sentence) -> Sentence:
    """Strict universal Horn L2 sentence equivalent (over Z[G]) to the negation of ``s``."""
    if s.language != L0:
        raise ValueError("translation takes an L0 sentence")
    asserted, negated = primitive_literals(s)
    if not negated:
        raise ValueError("primitive sentence has no negated atoms (q = 0); "
                         "there is no strict Horn conclusion")
    guards = [IsGroupElement(Var(v)) for v in s.variables]
    antecedent = guards + [Eq(a.left, a.right) for a in asserted]
    factors = [Add(One(), Neg(_w_term(a))) for a in negated]
    conclusion = Eq(product(factors), Zero())
    matrix = Implies(conj(antecedent), conclusion) if antecedent else conclusion
    return forall(s.variables, matrix, L2)


def torsion_axiom(n: int) -> tuple[Sentence, Sentence]:
    """``A x (x^n = 1 -> x = 1)`` in L0 and its guarded L2 form."""
    if n < 2:
        raise ValueError(f"torsion axioms need n >= 2, got {n}")
    x = Var("x")
    power_is_one = Eq(Pow(x, n), One())
    trivial = Eq(x, One())
    group_form = forall(["x"], Implies(power_is_one, trivial), L0)
    ring_form = forall(["x"], Implies(And(IsGroupElement(x), power_is_one), trivial), L2)
    return group_form, ring_form


def _commute(s: Term, t: Term) -> Eq:
    return Eq(Mul(s, t), Mul(t, s))


def rct_axiom() -> Sentence:
    """Commutation is transitive through non-scalars."""
    x, y, z = Var("x"), Var("y"), Var("z")
    ante = And(And(Not(IsScalar(y)), _commute(x, y)), _commute(y, z))
    return forall("xyz", Implies(ante, _commute(x, z)), L2)


def ct_axiom_group() -> Sentence:
    """Commutation is transitive through non-identity elements."""
    x, y, z = Var("x"), Var("y"), Var("z")
    ante = And(And(Not(Eq(y, One())), _commute(x, y)), _commute(y, z))
    return forall("xyz", Implies(ante, _commute(x, z)), L0)


def square_zero_axiom() -> Sentence:
    """No nonzero scalar squares to zero."""
    x = Var("x")
    ante = And(IsScalar(x), Eq(Pow(x, 2), Zero()))
    return forall(["x"], Implies(ante, Eq(x, Zero())), L2)


def family(name: str, n_max: int = 6) -> list[Sentence]:
    if name == "torsion":
        out = []
        for n in range(2, n_max + 1):
            out.extend(torsion_axiom(n))
        return out
    if name == "rct":
        return [rct_axiom()]
    if name == "ct":
        return [ct_axiom_group()]
    if name == "square-zero":
        return [square_zero_axiom()]
    raise ValueError(f"unknown axiom family {name!r}; choose from {FAMILIES}")


def diagram_fragment(constants: Sequence[GroupRingElement], depth: int) -> list[Sentence]:
    """Atomic and negated atomic L2 sentences true in Z[F] over the given constants.

    Terms are the constants closed under at most ``depth`` rounds of ``+``
    and ``*``.  Every compound term is equated with its value; one term per
    distinct value is kept and all pairs of those are declared unequal.
    """
    constants = list(constants)
    if len(set(constants)) != len(constants):
        raise ValueError("constants must be pairwise distinct")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    terms: list[tuple[Term, GroupRingElement]] = [(ring_constant(c), c) for c in constants]
    previous = list(terms)
    for _ in range(depth):
        fresh = []
        new_ids = {id(t) for t, _ in previous}
        for s, sv in terms:
            for t, tv in terms:
                if id(s) not in new_ids and id(t) not in new_ids:
                    continue
                fresh.append((Add(s, t), sv + tv))
                fresh.append((Mul(s, t), sv * tv))
        terms += fresh
        previous = fresh
    out: list[Sentence] = []
    base = len(constants)
    for t, v in terms[base:]:
        out.append(Sentence((), Eq(t, ring_constant(v)), L2))
    reps: dict[GroupRingElement, Term] = {}
    for t, v in terms:
        reps.setdefault(v, t)
    items = list(reps.items())
    for i, (v, s) in enumerate(items):
        for w, t in items[i + 1:]:
            left, right = (t, s) if isinstance(s, (One, Zero)) else (s, t)
            out.append(Sentence((), Not(Eq(left, right)), L2))
    return out


# bundles

EXPECTED_FLAGS = {
    "torsion-L0": {"quasiIdentity": True},
    "torsion-L2": {"strictUniversalHorn": True},
    "rct": {"universal": True, "horn": False},
    "ct": {"universal": True},
    "square-zero": {"strictUniversalHorn": True},
    "translated-horn": {"strictUniversalHorn": True},
    "diagram-atom": {"universal": True, "existential": True, "basicHorn": True},
}


@dataclass(frozen=True)
class Axiom:
    name: str
    label: str
    sentence: Sentence


@dataclass
class AxiomBundle:
    axioms: list[Axiom] = field(default_factory=list)

    def add(self, name: str, label: str, sentence: Sentence) -> None:
        if label not in EXPECTED_FLAGS:
            raise ValueError(f"unknown label {label!r}")
        self.axioms.append(Axiom(name, label, sentence))

    def problems(self) -> list[str]:
        """Members whose classification contradicts their label."""
        out = []
        for ax in self.axioms:
            flags = classify(ax.sentence).as_dict()
            for flag, want in EXPECTED_FLAGS[ax.label].items():
                if flags[flag] != want:
                    out.append(f"{ax.name}: expected {flag}={want}")
        return out

    def __iter__(self):
        return iter(self.axioms)

    def __len__(self):
        return len(self.axioms)


def standard_bundle(n_max: int = 6, primitives: Iterable[Sentence] = (),
                    diagram_constants: Sequence[GroupRingElement] = (),
                    diagram_depth: int = 1) -> AxiomBundle:
    bundle = AxiomBundle()
    for n in range(2, n_max + 1):
        g, r = torsion_axiom(n)
        bundle.add(f"torsion-{n}", "torsion-L0", g)
        bundle.add(f"torsion-{n}-ring", "torsion-L2", r)
    bundle.add("rct", "rct", rct_axiom())
    bundle.add("ct", "ct", ct_axiom_group())
    bundle.add("square-zero", "square-zero", square_zero_axiom())
    for i, s in enumerate(primitives):
        bundle.add(f"translated-{i}", "translated-horn", primitive_to_horn(s))
    if diagram_constants:
        for i, s in enumerate(diagram_fragment(diagram_constants, diagram_depth)):
            bundle.add(f"diagram-{i}", "diagram-atom", s)
    return bundle

from .syntax import (
    L0, L2, Add, And, Atom, Const, Eq, Formula, Gen, Implies, Inv, IsGroupElement,
    IsScalar, Mul, Neg, Not, One, Or, Pow, Quantifier, Sentence, Term, Var, Zero,
    atoms, conj, disj, exists, forall, free_vars, generators_used, product,
    ring_constant, word_term,
)
from .parser import ParseError, parse_formula, parse_matrix, parse_term
from .printer import print_formula, print_term
from .classify import (
    Classification, classify, clauses, insert_vacuous, negate_primitive, nnf,
    primitive_literals, terms_dnf,
)

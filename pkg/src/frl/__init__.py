"""Free groups, the integral group ring Z[F], and the first-order languages
over them: exact arithmetic, Stallings automata, finite-quotient separation
certificates, Horn translation of primitive sentences and bounded model
checking."""

from .kernels import BACKEND
from .words import IDENTITY, Word, ball, format_word, parse_word
from .perms import Permutation
from .groupring import (
    GroupRingElement, augmentation, is_trivial_unit, left_mul, one_minus_product,
    parse_ring_literal, right_mul, zero_divisor_probe,
)
from .stallings import SubgroupAutomaton, basis, build_subgroup, intersect, membership
from .quotients import FiniteHom, SeparationCertificate, separate_ring_element, verify_certificate
from .logic import Sentence, classify, parse_formula, print_formula
from .encode import primitive_to_horn
from .modelcheck import DomainBounds, Verdict, check_universal_bounded, eval_qf, witness_search

__version__ = "0.1.0"

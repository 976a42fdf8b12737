"""Group rings R[G] with G a free group or a permutation group and R = Z or Z/m.

Elements are finite formal sums stored as a sorted tuple of
``(group_element, coefficient)`` pairs with no zero coefficients.
"""

from __future__ import annotations

import re
from math import prod
from typing import Iterable, Mapping, Sequence, Union

from . import kernels
from .perms import Permutation, closure
from .words import DEFAULT_RANK, IDENTITY, Word, ball, parse_word, WordSyntaxError

GroupElement = Union[Word, Permutation]


class DomainError(ValueError):
    """Operands live in different group rings."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _carrier_of(g) -> tuple:
    if isinstance(g, Word):
        return ("free",)
    if isinstance(g, Permutation):
        return ("perm", g.degree)
    raise TypeError(f"not a group element: {g!r}")


class GroupRingElement:
    """Immutable element of Z[G] (``modulus=None``) or (Z/m)[G].

    The zero element has no carrier and is compatible with every group.
    """

    __slots__ = ("terms", "modulus", "carrier", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable] = (), modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        carrier = None
        for g, c in items:
            k = _carrier_of(g)
            if carrier is None:
                carrier = k
            elif k != carrier:
                raise DomainError(f"mixed group elements: {carrier} and {k}")
            acc[g] = acc.get(g, 0) + int(c)
        self._set(acc, modulus, carrier)

    def _set(self, acc: dict, modulus, carrier):
        if modulus is not None:
            acc = {g: c % modulus for g, c in acc.items()}
        terms = tuple(sorted(((g, c) for g, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        self.terms = terms
        self.modulus = modulus
        self.carrier = carrier if terms else None
        self._hash = None

    @classmethod
    def _make(cls, acc: dict, modulus, carrier) -> "GroupRingElement":
        x = object.__new__(cls)
        x._set(acc, modulus, carrier)
        return x

    # constructors

    @classmethod
    def zero(cls, modulus: int | None = None) -> "GroupRingElement":
        return cls((), modulus)

    @classmethod
    def one(cls, identity: GroupElement = IDENTITY, modulus: int | None = None) -> "GroupRingElement":
        return cls([(identity, 1)], modulus)

    @classmethod
    def of(cls, g: GroupElement, coeff: int = 1, modulus: int | None = None) -> "GroupRingElement":
        return cls([(g, coeff)], modulus)

    # inspection

    def support(self) -> list:
        return [g for g, _ in self.terms]

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms]

    def coeff(self, g) -> int:
        for h, c in self.terms:
            if h == g:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def max_length(self) -> int:
        return max((len(g) for g, _ in self.terms if isinstance(g, Word)), default=0)

    def identity_element(self):
        if self.carrier is None:
            return None
        if self.carrier[0] == "free":
            return IDENTITY
        return Permutation.identity(self.carrier[1])

    def is_scalar(self) -> bool:
        """Support contained in {1}."""
        return all(g.is_identity() for g, _ in self.terms)

    def is_group_element(self) -> bool:
        """Exactly one group element with coefficient +1."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def as_group_element(self):
        if not self.is_group_element():
            raise ValueError(f"{self} is not a group element")
        return self.terms[0][0]

    # arithmetic

    def _check(self, other: "GroupRingElement"):
        if self.modulus != other.modulus:
            raise DomainError(f"coefficient domains differ: {self.modulus} vs {other.modulus}")
        if self.carrier and other.carrier and self.carrier != other.carrier:
            raise DomainError(f"groups differ: {self.carrier} vs {other.carrier}")
        return self.carrier or other.carrier

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, int):
            ident = self.identity_element() or IDENTITY
            return GroupRingElement.of(ident, other, self.modulus)
        if isinstance(other, (Word, Permutation)):
            return GroupRingElement.of(other, 1, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        carrier = self._check(other)
        acc = dict(self.terms)
        for g, c in other.terms:
            acc[g] = acc.get(g, 0) + c
        return GroupRingElement._make(acc, self.modulus, carrier)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._make({g: -c for g, c in self.terms}, self.modulus, self.carrier)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement._make({g: c * other for g, c in self.terms}, self.modulus, self.carrier)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        carrier = self._check(other)
        if not self.terms or not other.terms:
            return GroupRingElement.zero(self.modulus)
        if carrier == ("free",):
            raw = kernels.convolve_words(
                [(g.letters, c) for g, c in self.terms],
                [(h.letters, d) for h, d in other.terms],
            )
            acc = {Word._reduced(w): c for w, c in raw.items()}
        else:
            acc = {}
            for g, c in self.terms:
                for h, d in other.terms:
                    k = g * h
                    acc[k] = acc.get(k, 0) + c * d
        return GroupRingElement._make(acc, self.modulus, carrier)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring operations")
        ident = self.identity_element() or IDENTITY
        result = GroupRingElement.one(ident, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_support(self, f) -> "GroupRingElement":
        """Apply ``f`` to every group element, summing colliding coefficients."""
        return GroupRingElement([(f(g), c) for g, c in self.terms], self.modulus)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms and self.modulus == other.modulus

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("GroupRingElement", self.terms, self.modulus))
        return self._hash

    def sort_key(self):
        return (len(self.terms), tuple((g.sort_key(), c) for g, c in self.terms))

    def __str__(self):
        return format_ring_literal(self)

    def __repr__(self):
        suffix = f", modulus={self.modulus}" if self.modulus else ""
        return f"GroupRingElement({format_ring_literal(self)!r}{suffix})"


# named operations


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y


def gr_neg(x: GroupRingElement) -> GroupRingElement:
    return -x


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def augmentation(x: GroupRingElement) -> int:
    s = sum(x.coefficients())
    return s % x.modulus if x.modulus else s


def is_trivial_unit(x: GroupRingElement) -> bool:
    """Whether ``x = u*g`` with ``u`` in U(Z) = {1, -1}.

    In Z[F] every unit has this form, so this is the unit test there.
    """
    if x.modulus is not None:
        raise ValueError("trivial-unit test is defined for integer coefficients")
    return len(x.terms) == 1 and x.terms[0][1] in (1, -1)


def unit_inverse(x: GroupRingElement) -> GroupRingElement:
    """Inverse of a trivial unit ``u*g`` (``u`` a unit of the coefficient ring)."""
    if len(x.terms) != 1:
        raise ValueError(f"{x} is not a trivial unit")
    g, c = x.terms[0]
    if x.modulus is None:
        if c not in (1, -1):
            raise ValueError(f"{x} is not a trivial unit")
        cinv = c
    else:
        try:
            cinv = pow(c, -1, x.modulus)
        except ValueError:
            raise ValueError(f"{x} is not a trivial unit") from None
    return GroupRingElement.of(g.inverse(), cinv, x.modulus)


def left_mul(g: GroupElement, x: GroupRingElement) -> GroupRingElement:
    """``g*x``: translate the support on the left, coefficients unchanged."""
    return GroupRingElement([(g * h, c) for h, c in x.terms], x.modulus)


def right_mul(g: GroupElement, x: GroupRingElement) -> GroupRingElement:
    return GroupRingElement([(h * g, c) for h, c in x.terms], x.modulus)


def one_minus_product(gs: Sequence[GroupElement]) -> GroupRingElement:
    """(1 - g_1)(1 - g_2)...(1 - g_n); the empty product is 1 in Z[F]."""
    if not gs:
        return GroupRingElement.one()
    ident = IDENTITY if isinstance(gs[0], Word) else Permutation.identity(gs[0].degree)
    one = GroupRingElement.one(ident)
    return prod((one - GroupRingElement.of(g) for g in gs), start=one)


def zero_divisor_probe(
    u: GroupRingElement,
    radius: int | None = None,
    support: Iterable[GroupElement] | None = None,
    side: str = "right",
    rank: int | None = None,
) -> GroupRingElement | None:
    """Search for a nonzero ``v`` with ``u*v = 0`` (``side="right"``) or ``v*u = 0``.

    The candidate ``v`` ranges over all integer combinations of ``support``
    (default: the ball of the given radius for free-group elements, the
    generated subgroup for permutation elements).  The answer is exact for
    that support: the kernel of ``v -> u*v`` is computed by fraction-free
    elimination.  Returns a primitive integer witness or ``None``.
    """
    if u.modulus is not None:
        raise ValueError("the probe works over integer coefficients")
    if u.is_zero():
        raise ValueError("u = 0 annihilates everything; probe needs u != 0")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if support is None:
        if u.carrier == ("free",):
            if radius is None:
                raise ValueError("radius is required for free-group elements")
            k = max(rank or DEFAULT_RANK, max(g.rank_needed() for g in u.support()))
            support = ball(radius, k)
        else:
            support = closure(u.support())
    domain = list(dict.fromkeys(support))
    row_of: dict = {}
    entries = []
    for j, d in enumerate(domain):
        for g, c in u.terms:
            w = g * d if side == "right" else d * g
            i = row_of.setdefault(w, len(row_of))
            entries.append((i, j, c))
    ncols = len(domain)
    matrix = [[0] * ncols for _ in range(len(row_of))]
    for i, j, c in entries:
        matrix[i][j] += c
    basis = kernels.integer_kernel(matrix, ncols)
    if not basis:
        return None
    v = GroupRingElement(zip(domain, basis[0]))
    check = u * v if side == "right" else v * u
    assert check.is_zero(), "kernel vector failed to annihilate"
    return v


# text syntax: [c1*w1 + c2*w2 - ...]

_FACTOR = r"(?:[a-z]|1)(?:\s*\^\s*-?\d+)?"
_WORD = rf"{_FACTOR}(?:\s*\*\s*{_FACTOR})*"
_TERM = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+)(?:\s*\*\s*(?P<w1>{_WORD}))?|(?P<w2>{_WORD}))\s*"
)


class LiteralSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_ring_literal(text: str, rank: int | None = None, offset: int = 0) -> GroupRingElement:
    """Parse ``[1 - 1*a]`` / ``[2*a*b^-1 + 3]`` into an element of Z[F]."""
    s = text.rstrip()
    start = len(text) - len(text.lstrip())
    if not s[start:].startswith("["):
        raise LiteralSyntaxError("expected '['", offset + start)
    if not s.endswith("]"):
        raise LiteralSyntaxError("expected ']'", offset + len(s))
    body_start = start + 1
    body_end = len(s) - 1
    pos = body_start
    acc: dict = {}
    first = True
    while True:
        m = _TERM.match(s, pos, body_end)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise LiteralSyntaxError("expected a term", offset + pos)
        sign = -1 if m.group("sign") == "-" else 1
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        wtext = m.group("w1") or m.group("w2")
        if wtext is None:
            w = IDENTITY
        else:
            wpos = m.start("w1") if m.group("w1") else m.start("w2")
            try:
                w = parse_word(wtext, rank, offset=offset + wpos)
            except WordSyntaxError as e:
                raise LiteralSyntaxError(str(e), e.position) from None
        acc[w] = acc.get(w, 0) + sign * coef
        pos = m.end()
        first = False
        if pos == body_end:
            break
    return GroupRingElement(acc)


def format_ring_literal(x: GroupRingElement) -> str:
    if not x.terms:
        return "[0]"
    parts = []
    for i, (g, c) in enumerate(x.terms):
        mag = abs(c)
        body = str(mag) if g.is_identity() else f"{mag}*{g}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return "[" + " ".join(parts) + "]"

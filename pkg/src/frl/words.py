"""Freely reduced words in a free group of finite rank.

A word is stored as a tuple of nonzero ints: ``+i`` is the i-th generator,
``-i`` its inverse.  Generators print as ``a``, ``b``, ``c`` ...; the text
syntax is ``a*b^-1*a`` with ``1`` for the identity.
"""

from __future__ import annotations

import enum
import random
import re
import string
from functools import total_ordering
from typing import Iterable, Iterator

from . import kernels

GENERATOR_NAMES = string.ascii_lowercase
DEFAULT_RANK = 2


def letter_key(x: int) -> int:
    """Shortlex letter order a < a^-1 < b < b^-1 < ..."""
    return 2 * x - 1 if x > 0 else -2 * x


@total_ordering
class Word:
    """Immutable freely reduced word.  Reduction happens at construction."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(letters)
        if any(x == 0 for x in letters):
            raise ValueError("letter 0 is not a generator")
        self.letters = kernels.reduce_letters(letters)
        self._hash = None

    @classmethod
    def _reduced(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def generator(cls, index: int) -> "Word":
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
        return cls._reduced((index,))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        # the identity is falsy, like 0 for ints
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word._reduced(kernels.mul_letters(self.letters, other.letters))

    def inverse(self) -> "Word":
        return Word._reduced(tuple(-x for x in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        return word_pow(self, n)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Word", self.letters))
        return self._hash

    def sort_key(self):
        return (len(self.letters), tuple(letter_key(x) for x in self.letters))

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def rank_needed(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def word_mul(u: Word, v: Word) -> Word:
    return u * v


def word_inv(u: Word) -> Word:
    return u.inverse()


def word_pow(u: Word, n: int) -> Word:
    if n < 0:
        u, n = u.inverse(), -n
    result = IDENTITY
    base = u
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


class Order(enum.Enum):
    ONE = "one"
    INFINITE = "infinite"


def word_order(u: Word) -> Order:
    """Free groups are torsion-free: only the identity has finite order."""
    return Order.ONE if u.is_identity() else Order.INFINITE


def generators(rank: int = DEFAULT_RANK) -> list[Word]:
    check_rank(rank)
    return [Word.generator(i) for i in range(1, rank + 1)]


def check_rank(rank: int) -> None:
    if not 2 <= rank <= len(GENERATOR_NAMES):
        raise ValueError(f"rank must be in [2, {len(GENERATOR_NAMES)}], got {rank}")


def _letters_in_order(rank: int) -> list[int]:
    out = []
    for i in range(1, rank + 1):
        out += [i, -i]
    return out


def iter_ball(radius: int, rank: int = DEFAULT_RANK) -> Iterator[Word]:
    """All reduced words of length <= radius, in shortlex order."""
    check_rank(rank)
    if radius < 0:
        return
    letters = _letters_in_order(rank)
    layer = [()]
    yield IDENTITY
    for _ in range(radius):
        nxt = []
        for w in layer:
            last = w[-1] if w else 0
            for x in letters:
                if x != -last:
                    nxt.append(w + (x,))
        for w in nxt:
            yield Word._reduced(w)
        layer = nxt


def ball(radius: int, rank: int = DEFAULT_RANK) -> tuple[Word, ...]:
    return tuple(iter_ball(radius, rank))


def ball_size(radius: int, rank: int = DEFAULT_RANK) -> int:
    """Closed-form count 1 + sum_{l=1..L} 2k(2k-1)^(l-1)."""
    if radius < 0:
        return 0
    return 1 + sum(2 * rank * (2 * rank - 1) ** (l - 1) for l in range(1, radius + 1))


def sphere(radius: int, rank: int = DEFAULT_RANK) -> tuple[Word, ...]:
    return tuple(w for w in iter_ball(radius, rank) if len(w) == radius)


def random_word(rng: random.Random, max_len: int, rank: int = DEFAULT_RANK,
                min_len: int = 0) -> Word:
    """Uniform length in [min_len, max_len], then uniform reduced letters."""
    n = rng.randint(min_len, max_len)
    letters = _letters_in_order(rank)
    out: list[int] = []
    for _ in range(n):
        choices = [x for x in letters if not out or x != -out[-1]]
        out.append(rng.choice(choices))
    return Word._reduced(tuple(out))


def letter_name(x: int) -> str:
    name = GENERATOR_NAMES[abs(x) - 1]
    return name if x > 0 else name + "^-1"


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return "*".join(letter_name(x) for x in w.letters)


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_FACTOR = re.compile(r"\s*(?:([a-z])|(1))\s*(?:\^\s*(-?\d+))?\s*")


def parse_word(text: str, rank: int | None = None, offset: int = 0) -> Word:
    """Parse ``a*b^-1*a`` style text.  ``^n`` exponents are accepted too.

    ``offset`` shifts reported error positions (for embedding in larger texts).
    """
    pos = 0
    letters: list[int] = []
    if not text.strip():
        raise WordSyntaxError("empty word", offset)
    while True:
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError("expected generator or 1", offset + pos)
        name, one, exp = m.groups()
        n = int(exp) if exp is not None else 1
        if name is not None:
            idx = GENERATOR_NAMES.index(name) + 1
            if rank is not None and idx > rank:
                raise WordSyntaxError(f"generator {name!r} exceeds rank {rank}", offset + m.start(1))
            x = idx if n >= 0 else -idx
            letters.extend([x] * abs(n))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise WordSyntaxError(f"unexpected {text[pos]!r}", offset + pos)
        pos += 1
    return Word(letters)

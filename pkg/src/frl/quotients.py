"""Finite quotients of F and the induced maps Z[F] -> Z[S_n] -> Z_p[S_n].

Given a nonzero ``r = n_1 g_1 + ... + n_m g_m`` in Z[F], the pipeline finds
a homomorphism ``phi: F -> S_n`` that keeps every ``g_i g_j^-1`` nontrivial,
so the images of the ``g_i`` stay distinct.  Reducing the induced image
mod the smallest prime that divides no ``n_i`` then gives a nonzero element
of the finite ring Z_p[S_n].
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .groupring import GroupRingElement, is_prime
from .perms import Permutation, symmetric_group
from .words import DEFAULT_RANK, GENERATOR_NAMES, Word

DEFAULT_MAX_DEGREE = 12
EXHAUSTIVE_MAX_DEGREE = 4
RANDOM_SAMPLES_PER_DEGREE = 200


@dataclass(frozen=True)
class FiniteHom:
    """Homomorphism F_k -> S_n given by the images of the k generators."""

    degree: int
    images: tuple[Permutation, ...]

    def __post_init__(self):
        if any(p.degree != self.degree for p in self.images):
            raise ValueError("all generator images must have the hom's degree")

    @classmethod
    def trivial(cls, rank: int = DEFAULT_RANK) -> "FiniteHom":
        return cls(1, tuple(Permutation.identity(1) for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, w: Word) -> Permutation:
        return apply_hom(self, w)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "images": {GENERATOR_NAMES[i]: p.one_line() for i, p in enumerate(self.images)},
        }


def apply_hom(phi: FiniteHom, w: Word) -> Permutation:
    if w.rank_needed() > phi.rank:
        raise ValueError(f"word {w} uses generators beyond the hom's rank {phi.rank}")
    imgs = [p.images for p in phi.images]
    invs = [kernels.perm_inv(p) for p in imgs]
    return Permutation._trusted(kernels.perm_word(imgs, invs, w.letters, phi.degree))


def separates(phi: FiniteHom, ws: Iterable[Word]) -> bool:
    return all(not apply_hom(phi, w).is_identity() for w in ws)


def combine(homs: Sequence[FiniteHom], rank: int | None = None) -> FiniteHom:
    """Direct product: the factors act on consecutive disjoint blocks of points."""
    if not homs:
        return FiniteHom.trivial(rank or DEFAULT_RANK)
    k = homs[0].rank
    if any(h.rank != k for h in homs):
        raise ValueError("homs have different ranks")
    degree = sum(h.degree for h in homs)
    images = []
    for gen in range(k):
        one_line: list[int] = []
        shift = 0
        for h in homs:
            one_line.extend(x + shift for x in h.images[gen].images)
            shift += h.degree
        images.append(Permutation._trusted(tuple(one_line)))
    return FiniteHom(degree, tuple(images))


def _exhaustive(degree: int, rank: int):
    perms = symmetric_group(degree)
    # the first generator's image varies fastest
    for combo in itertools.product(perms, repeat=rank):
        yield FiniteHom(degree, combo[::-1])


def _random(degree: int, rank: int, rng: random.Random, samples: int):
    points = list(range(1, degree + 1))
    for _ in range(samples):
        images = []
        for _ in range(rank):
            rng.shuffle(points)
            images.append(Permutation._trusted(tuple(points)))
        yield FiniteHom(degree, tuple(images))


def candidate_homs(max_degree: int, rank: int, seed: int):
    """Canonical search order: every assignment for small degree, then seeded samples."""
    for d in range(2, min(max_degree, EXHAUSTIVE_MAX_DEGREE) + 1):
        yield from _exhaustive(d, rank)
    rng = random.Random(seed)
    for d in range(EXHAUSTIVE_MAX_DEGREE + 1, max_degree + 1):
        yield from _random(d, rank, rng, RANDOM_SAMPLES_PER_DEGREE)


def find_separating_hom(
    ws: Sequence[Word],
    max_degree: int = DEFAULT_MAX_DEGREE,
    seed: int = 0,
    rank: int | None = None,
) -> FiniteHom | None:
    """A hom to S_n (n <= max_degree) under which no word in ``ws`` dies.

    Returns the first hom in canonical candidate order that separates all of
    ``ws``.  Failing that, per-word separators are combined by direct
    product as long as the total degree stays within ``max_degree``.
    ``None`` means the search budget ran out (not a mathematical statement).
    """
    ws = list(dict.fromkeys(ws))
    if any(w.is_identity() for w in ws):
        raise ValueError("the identity cannot be separated")
    k = max([rank or DEFAULT_RANK] + [w.rank_needed() for w in ws])
    if not ws:
        return FiniteHom.trivial(k)
    best_single: dict[Word, FiniteHom] = {}
    for phi in candidate_homs(max_degree, k, seed):
        alive = [w for w in ws if not apply_hom(phi, w).is_identity()]
        if len(alive) == len(ws):
            return phi
        for w in alive:
            best_single.setdefault(w, phi)
    if len(best_single) < len(ws):
        return None
    # greedy cover by the smallest-degree per-word separators
    remaining = list(ws)
    chosen: list[FiniteHom] = []
    while remaining:
        phi = best_single[remaining[0]]
        chosen.append(phi)
        remaining = [w for w in remaining if apply_hom(phi, w).is_identity()]
    combined = combine(chosen)
    if combined.degree > max_degree:
        return None
    return combined


def induced_ring_hom(phi: FiniteHom, x: GroupRingElement) -> GroupRingElement:
    """Z[F] -> Z[S_n], sum n_j g_j -> sum n_j phi(g_j); colliding images add."""
    if x.is_zero():
        return GroupRingElement.zero(x.modulus)
    return x.map_support(lambda g: apply_hom(phi, g))


def choose_prime(coeffs: Iterable[int]) -> int:
    """Smallest prime dividing none of ``coeffs``."""
    coeffs = list(coeffs)
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    p = 2
    while True:
        if is_prime(p) and all(c % p for c in coeffs):
            return p
        p += 1


def mod_p_reduce(x: GroupRingElement, p: int) -> GroupRingElement:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x.modulus is not None:
        raise ValueError("element already has modular coefficients")
    return GroupRingElement(x.terms, modulus=p)


@dataclass(frozen=True)
class SeparationCertificate:
    hom: FiniteHom
    prime: int
    image: GroupRingElement
    element: GroupRingElement

    def to_json(self) -> dict:
        out = self.hom.to_json()
        out["prime"] = self.prime
        out["image_terms"] = [[c, g.one_line()] for g, c in self.image.terms]
        return out


def pairwise_quotients(support: Sequence[Word]) -> list[Word]:
    return [g * h.inverse() for g, h in itertools.permutations(support, 2)]


def separate_ring_element(
    r: GroupRingElement,
    max_degree: int = DEFAULT_MAX_DEGREE,
    seed: int = 0,
    rank: int | None = None,
) -> SeparationCertificate | None:
    if r.modulus is not None or r.carrier not in (None, ("free",)):
        raise ValueError("separation takes an element of Z[F]")
    if r.is_zero():
        raise ValueError("0 cannot be separated from 0")
    k = max([rank or DEFAULT_RANK] + [g.rank_needed() for g in r.support()])
    phi = find_separating_hom(pairwise_quotients(r.support()), max_degree, seed, k)
    if phi is None:
        return None
    p = choose_prime(r.coefficients())
    image = mod_p_reduce(induced_ring_hom(phi, r), p)
    if image.is_zero():
        raise AssertionError("separating hom produced a zero image")
    return SeparationCertificate(phi, p, image, r)


def verify_certificate(cert: SeparationCertificate, r: GroupRingElement | None = None) -> list[str]:
    """Independent re-check; returns the list of failed conditions (empty if valid)."""
    r = cert.element if r is None else r
    problems = []
    phi = cert.hom
    if not is_prime(cert.prime):
        problems.append("prime is not prime")
    if any(c % cert.prime == 0 for c in r.coefficients()):
        problems.append("prime divides a coefficient")
    # recompute images letter by letter, without the kernels
    def image_of(w: Word) -> tuple:
        acc = list(range(1, phi.degree + 1))
        for x in w.letters:
            g = phi.images[abs(x) - 1]
            step = g.images if x > 0 else g.inverse().images
            acc = [acc[j - 1] for j in step]
        return tuple(acc)

    imgs = [image_of(g) for g in r.support()]
    if len(set(imgs)) != len(imgs):
        problems.append("support images are not pairwise distinct")
    acc: dict = {}
    for img, c in zip(imgs, r.coefficients()):
        acc[img] = (acc.get(img, 0) + c) % cert.prime
    recomputed = sorted((img, c) for img, c in acc.items() if c)
    if not recomputed:
        problems.append("image is zero")
    claimed = sorted((g.images, c) for g, c in cert.image.terms)
    if recomputed != claimed:
        problems.append("claimed image differs from recomputation")
    return problems

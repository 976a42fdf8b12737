"""Folded subgroup graphs (Stallings automata) for finitely generated subgroups of F.

An automaton is kept in canonical form: vertices are numbered ``0..n-1`` by
breadth-first search from the base vertex 0, visiting neighbours in the
letter order a, a^-1, b, b^-1, ...  Two automata accept the same subgroup
exactly when their canonical forms are equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .words import IDENTITY, Word, letter_name

Edge = tuple[int, int, int]  # (source, generator index >= 1, target)


@dataclass(frozen=True)
class SubgroupAutomaton:
    num_vertices: int
    edges: tuple[Edge, ...]
    base: int = 0
    _out: dict = field(default=None, compare=False, repr=False)
    _in: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        out, inn = {}, {}
        for s, l, t in self.edges:
            if (s, l) in out or (t, l) in inn:
                raise ValueError(f"automaton is not folded at edge {(s, l, t)}")
            out[(s, l)] = t
            inn[(t, l)] = s
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inn)

    def step(self, vertex: int, letter: int) -> int | None:
        if letter > 0:
            return self._out.get((vertex, letter))
        return self._in.get((vertex, -letter))

    def accepts(self, w: Word) -> bool:
        return membership(self, w)

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    @property
    def labels(self) -> int:
        return max((l for _, l, _ in self.edges), default=0)

    def __str__(self):
        lines = [f"vertices: {self.num_vertices}  base: {self.base}  rank: {self.rank}"]
        for s, l, t in self.edges:
            lines.append(f"  {s} -{letter_name(l)}-> {t}")
        return "\n".join(lines)


class _UnionFind:
    def __init__(self, n: int, prefer_max: bool = False):
        self.parent = list(range(n))
        self.prefer_max = prefer_max

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        keep, drop = (max(x, y), min(x, y)) if self.prefer_max else (min(x, y), max(x, y))
        self.parent[drop] = keep


def _fold(n: int, edges: Iterable[Edge], reverse: bool = False) -> tuple[_UnionFind, set[Edge]]:
    """Identify vertices until no two edges with one label share a source or a target.

    Candidates are scanned in (vertex, label) order, or the reverse when
    ``reverse`` is set; the folded result does not depend on the order.
    """
    uf = _UnionFind(n, prefer_max=reverse)
    current = set(edges)
    changed = True
    while changed:
        changed = False
        current = {(uf.find(s), l, uf.find(t)) for s, l, t in current}
        out: dict = {}
        inn: dict = {}
        for s, l, t in sorted(current, reverse=reverse):
            s, t = uf.find(s), uf.find(t)
            prev_t = out.setdefault((s, l), t)
            if uf.find(prev_t) != t:
                uf.union(prev_t, t)
                changed = True
                continue
            prev_s = inn.setdefault((t, l), s)
            if uf.find(prev_s) != s:
                uf.union(prev_s, s)
                changed = True
    current = {(uf.find(s), l, uf.find(t)) for s, l, t in current}
    return uf, current


def _core(edges: set[Edge], base: int) -> set[Edge]:
    """Strip hanging trees: drop non-base vertices of degree <= 1 repeatedly."""
    edges = set(edges)
    incident: dict[int, set[Edge]] = {}
    for e in edges:
        incident.setdefault(e[0], set()).add(e)
        incident.setdefault(e[2], set()).add(e)

    def degree(v):
        return sum(2 if e[0] == e[2] else 1 for e in incident.get(v, ()))

    queue = deque(v for v in incident if v != base and degree(v) <= 1)
    while queue:
        v = queue.popleft()
        if v not in incident or degree(v) > 1:
            continue
        for e in list(incident.pop(v)):
            edges.discard(e)
            other = e[2] if e[0] == v else e[0]
            if other in incident:
                incident[other].discard(e)
                if other != base and degree(other) <= 1:
                    queue.append(other)
    return edges


def _canonical(edges: set[Edge], base: int) -> SubgroupAutomaton:
    out: dict = {}
    inn: dict = {}
    labels = set()
    for s, l, t in edges:
        out[(s, l)] = t
        inn[(t, l)] = s
        labels.add(l)
    order = sorted(labels)
    number = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for l in order:
            for nbr in (out.get((v, l)), inn.get((v, l))):
                if nbr is not None and nbr not in number:
                    number[nbr] = len(number)
                    queue.append(nbr)
    renamed = tuple(sorted((number[s], l, number[t]) for s, l, t in edges))
    return SubgroupAutomaton(len(number), renamed, 0)


def build_subgroup(gens: Iterable[Word], reverse: bool = False) -> SubgroupAutomaton:
    """Folded core graph of the subgroup generated by ``gens`` (identities ignored)."""
    edges: list[Edge] = []
    n = 1
    for w in gens:
        if w.is_identity():
            continue
        letters = w.letters
        cur = 0
        for i, x in enumerate(letters):
            if i == len(letters) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            edges.append((cur, x, nxt) if x > 0 else (nxt, -x, cur))
            cur = nxt
    uf, folded = _fold(n, edges, reverse=reverse)
    base = uf.find(0)
    return _canonical(_core(folded, base), base)


def membership(A: SubgroupAutomaton, w: Word) -> bool:
    """Whether ``w`` reads a closed path at the base vertex."""
    v = A.base
    for x in w.letters:
        v = A.step(v, x)
        if v is None:
            return False
    return v == A.base


def intersect(A: SubgroupAutomaton, B: SubgroupAutomaton) -> SubgroupAutomaton:
    """Core of the product graph at (base_A, base_B); accepts exactly A ∩ B."""
    labels = sorted({l for _, l, _ in A.edges} & {l for _, l, _ in B.edges})
    start = (A.base, B.base)
    index = {start: 0}
    queue = deque([start])
    edges: set[Edge] = set()
    while queue:
        pa, pb = pair = queue.popleft()
        for l in labels:
            for x in (l, -l):
                qa, qb = A.step(pa, x), B.step(pb, x)
                if qa is None or qb is None:
                    continue
                nxt = (qa, qb)
                if nxt not in index:
                    index[nxt] = len(index)
                    queue.append(nxt)
                i, j = index[pair], index[nxt]
                edges.add((i, l, j) if x > 0 else (j, l, i))
    return _canonical(_core(edges, 0), 0)


def _tree_paths(A: SubgroupAutomaton) -> tuple[dict[int, Word], set[Edge]]:
    labels = sorted({l for _, l, _ in A.edges})
    path = {A.base: IDENTITY}
    tree: set[Edge] = set()
    queue = deque([A.base])
    while queue:
        v = queue.popleft()
        for l in labels:
            t = A.step(v, l)
            if t is not None and t not in path:
                path[t] = path[v] * Word.generator(l)
                tree.add((v, l, t))
                queue.append(t)
            s = A.step(v, -l)
            if s is not None and s not in path:
                path[s] = path[v] * Word.generator(l).inverse()
                tree.add((s, l, v))
                queue.append(s)
    return path, tree


def basis(A: SubgroupAutomaton) -> list[Word]:
    """Free basis: one word per edge outside a BFS spanning tree."""
    path, tree = _tree_paths(A)
    out = []
    for s, l, t in A.edges:
        if (s, l, t) in tree:
            continue
        out.append(path[s] * Word.generator(l) * path[t].inverse())
    return out


def subgroup_rank(A: SubgroupAutomaton) -> int:
    return A.rank

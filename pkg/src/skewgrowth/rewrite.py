"""Word-level equivalence under the relation congruence.

Relations are homogeneous, so the class of a word of length ``d`` lives
inside the finite set of words of length ``d``. These routines work
directly on words and serve as the reference path; bulk enumeration in
:mod:`skewgrowth.enumeration` works on the quotient instead and is
cross-checked against them.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .config import DEFAULT_LIMITS, BudgetExceeded, Limits
from .presentation import Presentation, Word


@dataclass(frozen=True, order=True)
class Element:
    """An element of the monoid, held by its lexicographically minimal word.

    Ordering is shortlex: by degree, then lexicographically.
    """

    degree: int
    canonical: Word

    @classmethod
    def of(cls, canonical: Word) -> Element:
        return cls(len(canonical), tuple(canonical))

    def __post_init__(self):
        if self.degree != len(self.canonical):
            raise ValueError("degree must equal the length of the canonical word")


def _moves(p: Presentation) -> list[tuple[Word, Word]]:
    out = []
    for rel in p.relations:
        out.append((rel.lhs, rel.rhs))
        out.append((rel.rhs, rel.lhs))
    return out


def neighbours(p: Presentation, w: Word) -> Iterator[Word]:
    """Words obtained from ``w`` by one substitution (either direction)."""
    for lhs, rhs in _moves(p):
        k = len(lhs)
        for i in range(len(w) - k + 1):
            if w[i : i + k] == lhs:
                yield w[:i] + rhs + w[i + k :]


def equivalence_class(p: Presentation, w: Word, limits: Limits = DEFAULT_LIMITS) -> frozenset[Word]:
    w = p.check_word(w)
    limits.check_degree(len(w))
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in neighbours(p, cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def canonical(p: Presentation, w: Word, limits: Limits = DEFAULT_LIMITS) -> Element:
    return Element.of(min(equivalence_class(p, w, limits)))


def are_equivalent(p: Presentation, u: Word, v: Word, limits: Limits = DEFAULT_LIMITS) -> bool:
    u = p.check_word(u)
    v = p.check_word(v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    return v in equivalence_class(p, u, limits)


class WordUnionFind:
    """Disjoint sets over integer ids with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


def word_id(w: Word, rank: int) -> int:
    """Interning: base-``rank`` value of ``w``; respects lexicographic order."""
    x = 0
    for letter in w:
        x = x * rank + letter
    return x


def id_word(x: int, rank: int, degree: int) -> Word:
    out = [0] * degree
    for i in range(degree - 1, -1, -1):
        x, out[i] = divmod(x, rank)
    return tuple(out)


def classes_of_degree(
    p: Presentation, d: int, limits: Limits = DEFAULT_LIMITS
) -> list[tuple[Word, ...]]:
    """All classes of length-``d`` words, by union-find over every word.

    Each class is returned as a sorted tuple; classes are sorted by their
    minimal word. Cost is ``rank**d`` words, so this is a reference path
    for small degrees.
    """
    limits.check_degree(d)
    n = p.rank
    total = n**d
    if total > limits.node_budget:
        raise BudgetExceeded(f"{total} words of degree {d} exceed the node budget {limits.node_budget}")
    uf = WordUnionFind(total)
    for rel in p.relations:
        k = rel.degree
        if k > d:
            continue
        lhs_id = word_id(rel.lhs, n)
        rhs_id = word_id(rel.rhs, n)
        for i in range(d - k + 1):
            # word = prefix (i letters) . side . suffix (d-k-i letters)
            tail = d - k - i
            shift = n**tail
            for prefix in range(n**i):
                base = prefix * n**k
                for suffix in range(shift):
                    uf.union((base + lhs_id) * shift + suffix, (base + rhs_id) * shift + suffix)
    groups: dict[int, list[int]] = {}
    for x in range(total):
        groups.setdefault(uf.find(x), []).append(x)
    # ids are increasing within each group, so the first id is the lex-min word
    out = [tuple(id_word(x, n, d) for x in members) for members in groups.values()]
    out.sort(key=lambda cls: cls[0])
    return out


def all_words(rank: int, d: int) -> Iterator[Word]:
    return itertools.product(range(rank), repeat=d)

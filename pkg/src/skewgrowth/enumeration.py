"""Graded enumeration of monoid elements.

Stratum ``d`` is built from stratum ``d-1`` rather than from all
``rank**d`` words. Every word of length ``d`` is ``x.w`` for a letter
``x``; substitutions strictly inside ``w`` never leave the pair
``(x, class of w)``, so the pairs (``rank * #M_{d-1}`` nodes) are merged
by a union-find using only substitutions that touch the first letter.
A relation ``u = v`` of length ``k`` applied at the front of ``u.r``
depends on ``r`` only through its class, so it is enough to apply it
once per element of degree ``d-k``.

The canonical word of a class is the smallest ``x + canon(C)`` over its
nodes; with strata kept in lexicographic order, node ``x*#M_{d-1} + C``
numbering is already the lexicographic order of those words.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_LIMITS, BudgetExceeded, Limits
from .presentation import Presentation, Word
from .rewrite import Element, WordUnionFind
from .series import TruncatedSeries

Eid = tuple[int, int]  # (degree, index inside the stratum)


class GradedMonoid:
    """Lazily extended multiplication tables of ``<L | R>`` by degree.

    ``lmul[d][x][c]`` is the index in stratum ``d`` of ``x`` times element
    ``c`` of stratum ``d-1``. Tables only ever grow; finished strata are
    never modified, so readers may share an instance.
    """

    def __init__(self, p: Presentation):
        self.presentation = p
        self.rank = p.rank
        self.words: list[list[Word]] = [[()]]
        self.lmul: list[list[list[int]]] = [[]]
        self._first: list[list[int]] = [[-1]]
        self._suffix: list[list[int]] = [[-1]]
        self._index: list[dict[Word, int] | None] = [{(): 0}]
        self._rmul: list[list[list[int]]] = []
        self._lock = threading.RLock()

    @property
    def degree(self) -> int:
        return len(self.words) - 1

    def ensure(self, d: int, limits: Limits = DEFAULT_LIMITS) -> None:
        limits.check_degree(d)
        if d <= self.degree:
            return
        with self._lock:
            while self.degree < d:
                self._build_next(limits)

    def _front_node(self, side: Word, r: int, base: int, m: int) -> int:
        c, deg = r, base
        for letter in reversed(side[1:]):
            deg += 1
            c = self.lmul[deg][letter][c]
        return side[0] * m + c

    def _build_next(self, limits: Limits) -> None:
        d = self.degree + 1
        n = self.rank
        prev = self.words[d - 1]
        m = len(prev)
        total = n * m
        if total > limits.node_budget:
            raise BudgetExceeded(
                f"stratum {d} needs {total} nodes, over the node budget {limits.node_budget}"
            )
        uf = WordUnionFind(total)
        for rel in self.presentation.relations:
            k = rel.degree
            if k > d:
                continue
            for r in range(len(self.words[d - k])):
                uf.union(
                    self._front_node(rel.lhs, r, d - k, m),
                    self._front_node(rel.rhs, r, d - k, m),
                )
        class_of_root: dict[int, int] = {}
        words: list[Word] = []
        first: list[int] = []
        suffix: list[int] = []
        table = [[0] * m for _ in range(n)]
        find = uf.find
        for node in range(total):
            root = find(node)
            idx = class_of_root.get(root)
            x, c = divmod(node, m)
            if idx is None:
                idx = class_of_root[root] = len(words)
                words.append((x,) + prev[c])
                first.append(x)
                suffix.append(c)
            table[x][c] = idx
        self.words.append(words)
        self.lmul.append(table)
        self._first.append(first)
        self._suffix.append(suffix)
        self._index.append(None)

    # --- lookups -----------------------------------------------------------

    def size(self, d: int) -> int:
        self.ensure(d)
        return len(self.words[d])

    def word(self, e: Eid) -> Word:
        return self.words[e[0]][e[1]]

    def element(self, e: Eid) -> Element:
        return Element(e[0], self.words[e[0]][e[1]])

    def locate(self, w: Word, limits: Limits = DEFAULT_LIMITS) -> Eid:
        """Class of an arbitrary word, by folding left multiplications."""
        w = self.presentation.check_word(w)
        d = len(w)
        self.ensure(d, limits)
        c = 0
        for deg, letter in enumerate(reversed(w), start=1):
            c = self.lmul[deg][letter][c]
        return (d, c)

    def eid(self, x: Element | Word, limits: Limits = DEFAULT_LIMITS) -> Eid:
        if isinstance(x, Element):
            return self.locate(x.canonical, limits)
        return self.locate(tuple(x), limits)

    def index_of_canonical(self, w: Word) -> int | None:
        d = len(w)
        self.ensure(d)
        idx = self._index[d]
        if idx is None:
            idx = {word: i for i, word in enumerate(self.words[d])}
            self._index[d] = idx
        return idx.get(w)

    def product(self, u: Eid, v: Eid, limits: Limits = DEFAULT_LIMITS) -> Eid:
        """``u * v``."""
        d = u[0] + v[0]
        self.ensure(d, limits)
        c, deg = v[1], v[0]
        for letter in reversed(self.words[u[0]][u[1]]):
            deg += 1
            c = self.lmul[deg][letter][c]
        return (d, c)

    def rmul_table(self, d: int, limits: Limits = DEFAULT_LIMITS) -> list[list[int]]:
        """``rmul_table(d)[x][c]``: index in stratum ``d+1`` of element ``c`` times ``x``."""
        self.ensure(d + 1, limits)
        with self._lock:
            while len(self._rmul) <= d:
                e = len(self._rmul)
                size = len(self.words[e])
                if e == 0:
                    self._rmul.append([[self.lmul[1][x][0]] for x in range(self.rank)])
                    continue
                below = self._rmul[e - 1]
                first, suffix, up = self._first[e], self._suffix[e], self.lmul[e + 1]
                self._rmul.append(
                    [[up[first[c]][below[x][suffix[c]]] for c in range(size)] for x in range(self.rank)]
                )
        return self._rmul[d]

    def letters(self) -> list[Eid]:
        self.ensure(1)
        return [(1, i) for i in range(len(self.words[1]))]


@lru_cache(maxsize=32)
def monoid(p: Presentation) -> GradedMonoid:
    """Shared table for ``p``; presentations are immutable, so sharing is safe."""
    return GradedMonoid(p)


@dataclass(frozen=True)
class GradedTable:
    presentation: Presentation
    d_max: int
    strata: tuple[tuple[Element, ...], ...]

    def sizes(self) -> list[int]:
        return [len(s) for s in self.strata]


def graded_elements(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> GradedTable:
    mon = monoid(p)
    mon.ensure(d_max, limits)
    strata = tuple(tuple(Element(d, w) for w in mon.words[d]) for d in range(d_max + 1))
    return GradedTable(p, d_max, strata)


def growth_series(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> TruncatedSeries:
    mon = monoid(p)
    mon.ensure(d_max, limits)
    return TruncatedSeries(tuple(len(mon.words[d]) for d in range(d_max + 1)))

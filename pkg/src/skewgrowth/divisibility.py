"""Left divisibility, common multiples and minimal common multiples.

Everything is exact under degree truncation. A divisor of an element of
degree ``e`` has degree at most ``e``, so whether an element of degree
``<= d_max`` is a (minimal) common multiple is decided entirely by
elements of degree ``<= d_max``: truncation can drop elements from
``mcm(J)`` but never puts a wrong one in. What truncation cannot tell
apart is "no common multiple at all" and "none below the bound"; reports
keep those separate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .config import DEFAULT_LIMITS, Limits
from .enumeration import Eid, GradedMonoid, monoid
from .presentation import Presentation, Word
from .rewrite import Element

Layers = list[frozenset[int]]  # per-degree index sets, position = degree


class DivisibilityIndex:
    """Per-presentation cache of right-multiple sets ("upsets")."""

    def __init__(self, mon: GradedMonoid):
        self.mon = mon
        self._up: dict[Eid, list[frozenset[int]]] = {}

    def multiples(self, u: Eid, d_max: int, limits: Limits = DEFAULT_LIMITS) -> Layers:
        """``multiples(u)[e]`` = indices of degree-``e`` elements ``w`` with ``u |_l w``."""
        layers = self._up.get(u)
        if layers is None:
            layers = [frozenset()] * u[0] + [frozenset((u[1],))]
            self._up[u] = layers
        while len(layers) <= d_max:
            e = len(layers) - 1
            table = self.mon.rmul_table(e, limits)
            layers.append(frozenset(row[c] for c in layers[e] for row in table))
        return layers[: d_max + 1]

    def divides(self, u: Eid, v: Eid, limits: Limits = DEFAULT_LIMITS) -> bool:
        if u[0] > v[0]:
            return False
        return v[1] in self.multiples(u, v[0], limits)[v[0]]

    def common_multiples(self, J: Iterable[Eid], d_max: int, limits: Limits = DEFAULT_LIMITS) -> Layers:
        J = list(J)
        if not J:
            raise ValueError("common multiples of an empty set are not defined here")
        out = list(self.multiples(J[0], d_max, limits))
        for u in J[1:]:
            other = self.multiples(u, d_max, limits)
            out = [a & b for a, b in zip(out, other)]
        return out

    def minimal(self, cm: Layers, limits: Limits = DEFAULT_LIMITS) -> list[Eid]:
        """Minimal elements of a right-closed family given by layers.

        ``w`` in ``cm`` is non-minimal iff a proper divisor lies in ``cm``;
        since ``cm`` is closed under right multiplication, that divisor can
        be taken of degree ``deg w - 1``, i.e. ``w`` is ``v * x`` for some
        ``v`` in the layer below and some letter ``x``.
        """
        out: list[Eid] = []
        for e, layer in enumerate(cm):
            if not layer:
                continue
            if e > 0 and cm[e - 1]:
                table = self.mon.rmul_table(e - 1, limits)
                covered = {row[c] for c in cm[e - 1] for row in table}
                layer = layer - covered
            out.extend((e, i) for i in sorted(layer))
        return out

    def mcm(self, J: Iterable[Eid], d_max: int, limits: Limits = DEFAULT_LIMITS) -> list[Eid]:
        return self.minimal(self.common_multiples(J, d_max, limits), limits)


@lru_cache(maxsize=32)
def divisibility_index(p: Presentation) -> DivisibilityIndex:
    return DivisibilityIndex(monoid(p))


def _eid(p: Presentation, x: Element | Word | str, limits: Limits) -> Eid:
    mon = monoid(p)
    if isinstance(x, str):
        x = p.parse_word(x)
    return mon.eid(x, limits)


def _elements(p: Presentation, eids: Iterable[Eid]) -> list[Element]:
    mon = monoid(p)
    return sorted(mon.element(e) for e in eids)


def left_divides(p: Presentation, u: Element | Word, v: Element | Word, limits: Limits = DEFAULT_LIMITS) -> bool:
    return divisibility_index(p).divides(_eid(p, u, limits), _eid(p, v, limits), limits)


def right_complements(
    p: Presentation,
    u: Element | Word,
    v: Element | Word,
    d_max: int,
    limits: Limits = DEFAULT_LIMITS,
) -> list[tuple[Element, Element]]:
    """All ``(x, y)`` with ``u x = v y`` and ``deg(u x) <= d_max``."""
    limits.check_degree(d_max)
    mon = monoid(p)
    ue, ve = _eid(p, u, limits), _eid(p, v, limits)
    mon.ensure(d_max, limits)
    out = []
    for e in range(max(ue[0], ve[0]), d_max + 1):
        by_product: dict[int, list[int]] = {}
        dy = e - ve[0]
        for j in range(len(mon.words[dy])):
            by_product.setdefault(mon.product(ve, (dy, j))[1], []).append(j)
        dx = e - ue[0]
        for i in range(len(mon.words[dx])):
            w = mon.product(ue, (dx, i))[1]
            for j in by_product.get(w, ()):
                out.append((mon.element((dx, i)), mon.element((dy, j))))
    out.sort()
    return out


def common_multiples(
    p: Presentation, J: Iterable[Element | Word], d_max: int, limits: Limits = DEFAULT_LIMITS
) -> list[Element]:
    limits.check_degree(d_max)
    idx = divisibility_index(p)
    layers = idx.common_multiples([_eid(p, j, limits) for j in J], d_max, limits)
    return _elements(p, ((e, i) for e, layer in enumerate(layers) for i in layer))


def mcm(p: Presentation, J: Iterable[Element | Word], d_max: int, limits: Limits = DEFAULT_LIMITS) -> list[Element]:
    """Minimal common right multiples of ``J`` of degree ``<= d_max``, sorted."""
    limits.check_degree(d_max)
    idx = divisibility_index(p)
    return _elements(p, idx.mcm([_eid(p, j, limits) for j in J], d_max, limits))


@dataclass(frozen=True)
class ConditionLReport:
    d_max: int
    verdict: str  # "violated" | "no-violation-found"
    witnesses: tuple[tuple[tuple[Element, ...], tuple[Element, ...]], ...]
    undetermined: tuple[tuple[Element, ...], ...]
    # subsets with exactly one minimal common multiple below the bound
    least: tuple[tuple[tuple[Element, ...], Element], ...] = field(default=())

    def to_json(self, p: Presentation) -> dict:
        fmt = p.format_word
        return {
            "max_degree": self.d_max,
            "verdict": self.verdict,
            "witnesses": [
                {"subset": [fmt(j.canonical) for j in J], "mcm": [fmt(m.canonical) for m in ms]}
                for J, ms in self.witnesses
            ],
            "least_within_bound": [
                {"subset": [fmt(j.canonical) for j in J], "lcm": fmt(m.canonical)} for J, m in self.least
            ],
            "undetermined": [[fmt(j.canonical) for j in J] for J in self.undetermined],
        }


def condition_l_report(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> ConditionLReport:
    """Look for subsets of generators with two or more minimal common multiples."""
    limits.check_degree(d_max)
    mon = monoid(p)
    idx = divisibility_index(p)
    letters = mon.letters()
    witnesses, undetermined, least = [], [], []
    for size in range(2, len(letters) + 1):
        for J in itertools.combinations(letters, size):
            ms = idx.mcm(J, d_max, limits)
            Jel = tuple(mon.element(j) for j in J)
            if not ms:
                undetermined.append(Jel)
            elif len(ms) == 1:
                least.append((Jel, mon.element(ms[0])))
            else:
                witnesses.append((Jel, tuple(sorted(mon.element(m) for m in ms))))
    verdict = "violated" if witnesses else "no-violation-found"
    return ConditionLReport(d_max, verdict, tuple(witnesses), tuple(undetermined), tuple(least))


def matches_family(
    p: Presentation,
    x: Element,
    y: Element,
    families: Sequence[tuple[Word, Word]],
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """Whether ``(x, y) = (P z, Q z)`` for some ``(P, Q)`` in ``families`` and some ``z``."""
    mon = monoid(p)
    xe, ye = mon.eid(x, limits), mon.eid(y, limits)
    for P, Q in families:
        dz = x.degree - len(P)
        if dz < 0 or y.degree - len(Q) != dz:
            continue
        pe, qe = mon.locate(P, limits), mon.locate(Q, limits)
        for k in range(mon.size(dz)):
            z = (dz, k)
            if mon.product(pe, z) == xe and mon.product(qe, z) == ye:
                return True
    return False

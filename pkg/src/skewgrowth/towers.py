"""Towers of minimal common multiples and the skew growth function.

A tower is ``(I_0, J_1, ..., J_n)`` with ``I_0`` the degree-one elements,
``J_k`` a subset of ``I_{k-1}`` with at least two elements and
``I_k = mcm(J_k)`` nonempty. It contributes
``(-1)^(#J_1 + ... + #J_n - n + 1) * sum(t^deg(D) for D in I_n)``.

Truncation at ``d_max`` is exact for the coefficients. Every element of
``mcm(J)`` (``#J >= 2``) has degree strictly above every element of ``J``:
it is ``j x`` for each ``j`` in ``J`` and cannot equal two distinct ``j``.
So a tower contributing to ``t^e`` only uses stage elements of degree
below ``e``, and every such element is present in the truncated
``mcm`` sets (see :mod:`skewgrowth.divisibility`).

The deeper structure of a tower depends only on its current top set, so
the aggregate series is memoized on that set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .config import DEFAULT_LIMITS, BudgetExceeded, Limits
from .divisibility import divisibility_index
from .enumeration import Eid, monoid
from .presentation import Presentation
from .rewrite import Element
from .series import TruncatedSeries, checked_ints

Stage = tuple[Eid, ...]


@dataclass(frozen=True)
class Tower:
    ground: tuple[Element, ...]
    stages: tuple[tuple[Element, ...], ...]
    # each truncated to d_max; all listed elements are exact
    stage_mcms: tuple[tuple[Element, ...], ...]
    d_max: int

    @property
    def height(self) -> int:
        return len(self.stages)

    @property
    def top(self) -> tuple[Element, ...]:
        return self.stage_mcms[-1] if self.stages else self.ground

    @property
    def sign(self) -> int:
        exponent = sum(len(J) for J in self.stages) - self.height + 1
        return -1 if exponent % 2 else 1

    def contribution(self) -> TruncatedSeries:
        coeffs = [0] * (self.d_max + 1)
        for delta in self.top:
            coeffs[delta.degree] += self.sign
        return TruncatedSeries(tuple(coeffs))

    def sort_key(self):
        return (self.height, self.stages)

    def to_json(self, p: Presentation) -> dict:
        fmt = p.format_word
        return {
            "height": self.height,
            "stages": [[fmt(e.canonical) for e in J] for J in self.stages],
            "top_mcm": [fmt(e.canonical) for e in self.top],
        }


class TowerSearch:
    """Depth-first tower exploration for one presentation and bound."""

    def __init__(self, p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS):
        if d_max < 1:
            raise ValueError("towers need d_max >= 1")
        limits.check_degree(d_max)
        self.p = p
        self.d_max = d_max
        self.limits = limits
        self.mon = monoid(p)
        self.mon.ensure(d_max, limits)
        self.idx = divisibility_index(p)
        self.expanded = 0
        self._children: dict[Stage, list[tuple[Stage, Stage]]] = {}
        self._aggregate: dict[Stage, list[int]] = {}
        self._depth: dict[Stage, int] = {}

    @property
    def ground(self) -> Stage:
        return tuple(self.mon.letters())

    def children(self, I: Stage) -> list[tuple[Stage, Stage]]:
        """``(J, mcm(J))`` for every ``J`` in ``I`` with ``#J >= 2`` and ``mcm(J)`` nonempty below the bound.

        Subsets are grown in index order with a running intersection of
        multiple sets; once that is empty no superset can have a common
        multiple, so the branch is cut. Results come back in size-then-lex
        order.
        """
        cached = self._children.get(I)
        if cached is not None:
            return cached
        d_max = self.d_max
        # an element of degree d_max cannot have a proper multiple in range
        cand = [e for e in I if e[0] < d_max]
        found: list[tuple[Stage, Stage]] = []

        def grow(chosen: list[Eid], start: int, cm) -> None:
            for i in range(start, len(cand)):
                self.expanded += 1
                if self.expanded > self.limits.budget:
                    raise BudgetExceeded(
                        f"tower search exceeded the budget of {self.limits.budget} subsets "
                        f"while expanding a stage of {len(cand)} candidates "
                        f"(degrees {sorted({e[0] for e in cand})})"
                    )
                u = cand[i]
                up = self.idx.multiples(u, d_max, self.limits)
                nxt = [a & b for a, b in zip(cm, up)] if cm is not None else list(up)
                if not any(nxt):
                    continue
                J = chosen + [u]
                if len(J) >= 2:
                    top = tuple(self.idx.minimal(nxt, self.limits))
                    top_deg = max(e[0] for e in J)
                    assert all(m[0] > top_deg for m in top), "mcm must sit strictly above its stage"
                    found.append((tuple(J), top))
                grow(J, i + 1, nxt)

        grow([], 0, None)
        found.sort(key=lambda item: (len(item[0]), item[0]))
        self._children[I] = found
        return found

    def aggregate(self, I: Stage) -> list[int]:
        """``H(I) = sum_{D in I} t^deg D + sum_J (-1)^(#J-1) H(mcm J)`` truncated at ``d_max``.

        The sum over all towers of sign times top series is ``-H(I_0)``.
        """
        cached = self._aggregate.get(I)
        if cached is not None:
            return cached
        out = [0] * (self.d_max + 1)
        for e in I:
            if e[0] <= self.d_max:
                out[e[0]] += 1
        for J, top in self.children(I):
            sub = self.aggregate(top)
            if len(J) % 2:
                out = [a + b for a, b in zip(out, sub)]
            else:
                out = [a - b for a, b in zip(out, sub)]
        out = list(checked_ints(out))
        self._aggregate[I] = out
        return out

    def depth(self, I: Stage) -> int:
        cached = self._depth.get(I)
        if cached is None:
            cached = max((1 + self.depth(top) for _, top in self.children(I)), default=0)
            self._depth[I] = cached
        return cached

    def root_contributions(self) -> dict[Stage, list[int]]:
        """Signed series of all towers starting with each ``J_1``."""
        return {
            J: [(-1) ** len(J) * c for c in self.aggregate(top)]
            for J, top in self.children(self.ground)
        }

    def towers(self) -> Iterator[tuple[tuple[Stage, ...], tuple[Stage, ...]]]:
        stack: list[tuple[tuple[Stage, ...], tuple[Stage, ...]]] = [((), ())]
        while stack:
            stages, tops = stack.pop()
            yield stages, tops
            current = tops[-1] if tops else self.ground
            for J, top in reversed(self.children(current)):
                stack.append((stages + (J,), tops + (top,)))


def _elements(mon, stage: Stage) -> tuple[Element, ...]:
    return tuple(sorted(mon.element(e) for e in stage))


def enumerate_towers(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> list[Tower]:
    """Every tower whose top set has an element of degree ``<= d_max``.

    Sorted by height, then by stage contents.
    """
    search = TowerSearch(p, d_max, limits)
    mon = search.mon
    ground = _elements(mon, search.ground)
    out = [
        Tower(
            ground,
            tuple(_elements(mon, J) for J in stages),
            tuple(_elements(mon, top) for top in tops),
            d_max,
        )
        for stages, tops in search.towers()
    ]
    out.sort(key=Tower.sort_key)
    return out


def skew_growth(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> TruncatedSeries:
    search = TowerSearch(p, d_max, limits)
    agg = search.aggregate(search.ground)
    coeffs = [-c for c in agg]
    coeffs[0] += 1
    return TruncatedSeries(tuple(coeffs))


def skew_by_root(
    p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS
) -> dict[tuple[Element, ...], TruncatedSeries]:
    """Skew-growth contributions grouped by the first stage ``J_1``.

    ``N = 1 - #I_0 t + sum of the values``.
    """
    search = TowerSearch(p, d_max, limits)
    mon = search.mon
    return {
        _elements(mon, J): TruncatedSeries(tuple(series))
        for J, series in search.root_contributions().items()
    }


def observed_height(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Largest height of a tower certified below ``d_max``.

    A lower bound for the true height: every stage and at least one
    element of the top ``mcm`` set must have degree ``<= d_max``.
    """
    search = TowerSearch(p, d_max, limits)
    return search.depth(search.ground)


def stage_sizes(towers: list[Tower]) -> dict[int, int]:
    """Number of towers of each height."""
    return {h: len(list(g)) for h, g in itertools.groupby(sorted(t.height for t in towers))}

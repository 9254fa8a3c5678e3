"""Bounded falsification of cancellativity.

Left cancellativity up to degree ``d`` means ``x -> v x`` is injective on
every stratum below ``d`` for every generator ``v``; longer left factors
follow by induction. Right cancellativity is left cancellativity of the
opposite presentation. Reports say "no counterexample up to d", never
"cancellative": the check is finite and the statement is not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .enumeration import monoid
from .presentation import Presentation, Word, reverse_presentation
from .rewrite import are_equivalent

NO_COUNTEREXAMPLE = "no-counterexample"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Witness:
    side: str  # "left": v x = v y ; "right": x v = y v
    generator: int
    x: Word
    y: Word

    def products(self) -> tuple[Word, Word]:
        v = (self.generator,)
        if self.side == "left":
            return v + self.x, v + self.y
        return self.x + v, self.y + v

    def verify(self, p: Presentation, limits: Limits = DEFAULT_LIMITS) -> bool:
        """Re-check with the word-level closure, independent of the tables."""
        left, right = self.products()
        return are_equivalent(p, left, right, limits) and not are_equivalent(p, self.x, self.y, limits)

    def describe(self, p: Presentation) -> str:
        fmt = p.format_word
        v = p.alphabet[self.generator]
        if self.side == "left":
            return f"{v}.{fmt(self.x)} = {v}.{fmt(self.y)} but {fmt(self.x)} != {fmt(self.y)}"
        return f"{fmt(self.x)}.{v} = {fmt(self.y)}.{v} but {fmt(self.x)} != {fmt(self.y)}"


@dataclass(frozen=True)
class CancellationReport:
    side: str  # left | right | both
    d_max: int
    verdict: str
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == NO_COUNTEREXAMPLE

    def summary(self, p: Presentation) -> str:
        if self.ok:
            return f"{self.side}: no counterexample up to degree {self.d_max}"
        w = self.witness
        return f"{self.side}: {w.side}-side counterexample at degree {len(w.x) + 1}: {w.describe(p)}"

    def to_json(self, p: Presentation) -> dict:
        doc = {"side": self.side, "max_degree": self.d_max, "verdict": self.verdict, "witness": None}
        if self.witness is not None:
            w = self.witness
            left, right = w.products()
            doc["witness"] = {
                "side": w.side,
                "generator": p.alphabet[w.generator],
                "x": p.format_word(w.x),
                "y": p.format_word(w.y),
                "products": [p.format_word(left), p.format_word(right)],
            }
        return doc


def _first_collision(p: Presentation, d_max: int, limits: Limits) -> tuple[int, Word, Word] | None:
    mon = monoid(p)
    mon.ensure(d_max, limits)
    for d in range(d_max):
        for v in range(p.rank):
            row = mon.lmul[d + 1][v]
            seen: dict[int, int] = {}
            for c, target in enumerate(row):
                if target in seen:
                    return v, mon.words[d][seen[target]], mon.words[d][c]
                seen[target] = c
    return None


def left_cancellative_up_to(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> CancellationReport:
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    hit = _first_collision(p, d_max, limits)
    if hit is None:
        return CancellationReport("left", d_max, NO_COUNTEREXAMPLE)
    v, x, y = hit
    return CancellationReport("left", d_max, COUNTEREXAMPLE, Witness("left", v, x, y))


def right_cancellative_up_to(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> CancellationReport:
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    hit = _first_collision(reverse_presentation(p), d_max, limits)
    if hit is None:
        return CancellationReport("right", d_max, NO_COUNTEREXAMPLE)
    v, x, y = hit
    # v.x = v.y in the opposite monoid reads x^rev.v = y^rev.v here
    return CancellationReport("right", d_max, COUNTEREXAMPLE, Witness("right", v, x[::-1], y[::-1]))


def cancellative_up_to(p: Presentation, d_max: int, limits: Limits = DEFAULT_LIMITS) -> CancellationReport:
    """Both sides; the left witness is reported first when both fail."""
    for check in (left_cancellative_up_to, right_cancellative_up_to):
        report = check(p, d_max, limits)
        if not report.ok:
            return CancellationReport("both", d_max, COUNTEREXAMPLE, report.witness)
    return CancellationReport("both", d_max, NO_COUNTEREXAMPLE)

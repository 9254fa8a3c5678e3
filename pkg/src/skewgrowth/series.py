"""Exact truncated power series over the integers.

Coefficients are Python ints, but every result is checked against the
signed 64-bit range so that an overflow surfaces as an error rather than
as a silently huge number that a fixed-width port would have wrapped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class SeriesOverflow(OverflowError):
    pass


def checked_ints(values) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if not INT64_MIN <= v <= INT64_MAX:
            raise SeriesOverflow(f"coefficient {v} outside the signed 64-bit range")
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_d t^d + O(t^{d+1})``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coefficients", checked_ints(self.coefficients))

    @classmethod
    def of(cls, coefficients: Sequence[int], truncation: int | None = None) -> TruncatedSeries:
        """Pad with zeros (or cut) to ``truncation`` when given."""
        coeffs = list(coefficients)
        if truncation is not None:
            coeffs = (coeffs + [0] * (truncation + 1))[: truncation + 1]
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, truncation: int) -> TruncatedSeries:
        return cls.of([1], truncation)

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, d: int) -> TruncatedSeries:
        if d > self.truncation:
            raise ValueError(f"cannot extend a series known to order {self.truncation} to {d}")
        return TruncatedSeries(self.coefficients[: d + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        d = min(self.truncation, other.truncation)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients[: d + 1], other.coefficients)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coefficients))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul_truncated(self, other)

    def is_one(self) -> bool:
        return self.coefficients[0] == 1 and not any(self.coefficients[1:])

    def to_json(self) -> dict:
        return {"truncation": self.truncation, "coefficients": list(self.coefficients)}

    @classmethod
    def from_json(cls, doc: dict | str) -> TruncatedSeries:
        if isinstance(doc, str):
            doc = json.loads(doc)
        coeffs = doc["coefficients"]
        if any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs):
            raise ValueError("series coefficients must be integers")
        if doc["truncation"] != len(coeffs) - 1:
            raise ValueError("truncation does not match the number of coefficients")
        return cls(tuple(coeffs))

    def pretty(self, var: str = "t") -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            text = "0"
        else:
            first_sign, first = terms[0]
            text = ("-" if first_sign == "-" else "") + first
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
        return f"{text} + O({var}^{self.truncation + 1})"


def mul_truncated(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product; the result is known to the smaller of the two orders."""
    d = min(a.truncation, b.truncation)
    ac, bc = a.coefficients, b.coefficients
    return TruncatedSeries(tuple(sum(ac[i] * bc[k - i] for i in range(k + 1)) for k in range(d + 1)))


def invert_truncated(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.coefficients[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit over the integers")
    ac = a.coefficients
    out = [c0]  # 1/c0 == c0 for units
    for k in range(1, a.truncation + 1):
        s = sum(ac[i] * out[k - i] for i in range(1, k + 1))
        out.append(-s * c0)
    return TruncatedSeries(tuple(out))


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return tuple(out)


def poly_pow(p: Sequence[int], e: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


@dataclass(frozen=True)
class RationalForm:
    """``numerator / denominator`` with integer coefficient lists, lowest degree first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")


def expand_rational(r: RationalForm, d: int) -> TruncatedSeries:
    """Taylor coefficients of ``r`` up to ``t^d``, by long division."""
    den = r.denominator
    q0 = den[0]
    if q0 not in (1, -1):
        raise ValueError(f"denominator constant term {q0} is not a unit over the integers")
    num = list(r.numerator) + [0] * (d + 1)
    out: list[int] = []
    for k in range(d + 1):
        s = num[k] - sum(den[i] * out[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        out.append(s * q0)
    return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class InversionReport:
    presentation: str
    d_max: int
    P: TruncatedSeries
    N: TruncatedSeries
    product: TruncatedSeries = field(init=False)
    verdict: str = field(init=False)
    first_failing_degree: int | None = field(init=False)

    def __post_init__(self):
        product = mul_truncated(self.P, self.N)
        object.__setattr__(self, "product", product)
        bad = [k for k, c in enumerate(product.coefficients) if c != (1 if k == 0 else 0)]
        object.__setattr__(self, "first_failing_degree", bad[0] if bad else None)
        object.__setattr__(self, "verdict", "fail" if bad else "pass")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation,
            "max_degree": self.d_max,
            "verdict": self.verdict,
            "first_failing_degree": self.first_failing_degree,
            "growth": self.P.to_json(),
            "skew": self.N.to_json(),
            "product": self.product.to_json(),
        }


def verify_inversion(p, d_max: int, limits=None) -> InversionReport:
    """Compare the growth series with the tower-side skew series through ``t^d_max``."""
    from .config import DEFAULT_LIMITS
    from .enumeration import growth_series
    from .towers import skew_growth

    limits = limits or DEFAULT_LIMITS
    P = growth_series(p, d_max, limits)
    N = skew_growth(p, d_max, limits)
    return InversionReport(p.label, d_max, P, N)

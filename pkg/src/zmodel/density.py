"""Rational points of E0: y^2 = x^3 + x + 1 over Q, and the coordinate-ratio
sample set whose p-adic coverage the suite tracks.

The generator (0, 1) has infinite order, so its multiples give an endless
supply of rational points; products (x/y) * (y'/x') of coordinate ratios over
pairs of multiples populate the sample set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


def e0_on_curve(x: Fraction, y: Fraction, a=Fraction(1), b=Fraction(1)) -> bool:
    return y * y == x**3 + a * x + b


@dataclass(frozen=True)
class RationalPoint:
    """A point of E0(Q), either affine (x, y) with y^2 = x^3 + x + 1, or O."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates or neither")
        if self.x is not None:
            x, y = Fraction(self.x), Fraction(self.y)
            object.__setattr__(self, "x", x)
            object.__setattr__(self, "y", y)
            if not e0_on_curve(x, y):
                raise ValueError(f"({x}, {y}) is not on y^2 = x^3 + x + 1")

    @staticmethod
    def infinity() -> "RationalPoint":
        return RationalPoint(None, None)

    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "RationalPoint":
        if self.is_infinity():
            return self
        return RationalPoint(self.x, -self.y)

    def __str__(self):
        return "O" if self.is_infinity() else f"({self.x}, {self.y})"


GENERATOR = RationalPoint(Fraction(0), Fraction(1))


def e0_add(p: RationalPoint, q: RationalPoint) -> RationalPoint:
    """Chord-and-tangent addition on E0 over Q."""
    if p.is_infinity():
        return q
    if q.is_infinity():
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return RationalPoint.infinity()
        lam = (3 * p.x**2 + 1) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return RationalPoint(x3, y3)


def e0_mul(m: int, p: RationalPoint = GENERATOR) -> RationalPoint:
    """m*p by double-and-add."""
    if m < 0:
        return e0_mul(-m, -p)
    acc = RationalPoint.infinity()
    add = p
    while m:
        if m & 1:
            acc = e0_add(acc, add)
        add = e0_add(add, add)
        m >>= 1
    return acc


def point_height(p: RationalPoint) -> int:
    """Naive height: max of |numerator| and denominator of the x-coordinate."""
    if p.is_infinity():
        return 0
    return max(abs(p.x.numerator), p.x.denominator)


def e0_multiples(count: int) -> list:
    """The points 1*(0,1) ... count*(0,1), exactly."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [GENERATOR]
    for _ in range(count - 1):
        out.append(e0_add(out[-1], GENERATOR))
    return out


@dataclass(frozen=True)
class SampleSet:
    """A finite batch of exact rationals together with how it was produced."""

    values: tuple
    source: str


def u0_pairs(count: int) -> list:
    """(value, i, j) for every ordered pair of the first count multiples with
    y * x' != 0; value = (x/y) * (y'/x')."""
    if count < 2:
        raise ValueError("count must be >= 2")
    pts = e0_multiples(count)
    out = []
    for i, p in enumerate(pts, start=1):
        for j, q in enumerate(pts, start=1):
            if p.y == 0 or q.x == 0:
                continue
            out.append(((p.x / p.y) * (q.y / q.x), i, j))
    return out


def u0_sample(count: int) -> SampleSet:
    """All coordinate-ratio products over pairs of the first count multiples."""
    vals = tuple(v for v, _, _ in u0_pairs(count))
    return SampleSet(vals, f"ratio products over pairs of the first {count} multiples of (0,1)")


@dataclass(frozen=True)
class CoverageReport:
    """How many residue classes mod p^prec the p-integral samples hit."""

    classes_hit: int
    classes_total: int
    fraction: Fraction


def dense_coverage(samples: SampleSet, p: int, prec: int) -> CoverageReport:
    """Count residue classes mod p^prec hit by the p-integral sample values.

    This reports coverage; it never asserts density.
    """
    if prec < 1:
        raise ValueError("prec must be >= 1")
    modulus = p**prec
    hit = set()
    for v in samples.values:
        num, den = v.numerator, v.denominator
        if den % p == 0:
            continue  # not p-integral
        hit.add(num * pow(den, -1, modulus) % modulus)
    return CoverageReport(len(hit), modulus, Fraction(len(hit), modulus))

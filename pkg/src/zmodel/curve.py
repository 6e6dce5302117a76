"""The twisted elliptic curve d(T)*Y^2 = X^3 + a*X + b over Q(T) and its role
as an exact integer encoding.

The default instance is (T^3+T+1)*Y^2 = X^3+X+1 with base point (T, 1).  Scalar
multiples of the base point are computed through the division-polynomial
sequence evaluated at the base point, which keeps all intermediate data in
Z[T]; the group law itself is chord-and-tangent on the twisted model.  The
order diagnostics (the u/v pair built from the integer-valued functions
psi_m = X_m/(T*Y_m)) run on truncated Laurent windows so that large indices
stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .density import RationalPoint, e0_on_curve
from .ratfunc import (
    AT_INFINITY,
    AT_ZERO,
    ONE,
    Polynomial,
    RationalFunction,
    RF_ONE,
    RF_T,
    T,
    _int_exact_div,
    _int_mul,
    constant_term_infinity,
    ord_at,
)

DEFAULT_SCALAR_BOUND = 16


class CurveBoundError(ValueError):
    """Raised when a scalar multiple exceeds the configured bound."""


@dataclass(frozen=True)
class TwistedCurve:
    """The curve d(T)*Y^2 = X^3 + a*X + b with a monic cubic twist d."""

    a: Fraction
    b: Fraction
    twist: Polynomial

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if 4 * a**3 + 27 * b**2 == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
        if self.twist.degree() != 3 or not self.twist.is_monic():
            raise ValueError("twist must be a monic cubic")
        if self.twist.evaluate(0) == 0:
            raise ValueError("twist must not vanish at T = 0")

    @staticmethod
    def default() -> "TwistedCurve":
        return DEFAULT_CURVE

    def twist_rf(self) -> RationalFunction:
        return RationalFunction(self.twist)

    def rhs(self, x: RationalFunction) -> RationalFunction:
        return x**3 + RationalFunction.constant(self.a) * x + RationalFunction.constant(self.b)

    def contains(self, x: RationalFunction, y: RationalFunction) -> bool:
        return self.twist_rf() * y**2 == self.rhs(x)


DEFAULT_CURVE = TwistedCurve(Fraction(1), Fraction(1), Polynomial((1, 1, 0, 1)))


@dataclass(frozen=True)
class CurvePoint:
    """A point of the twisted curve: either the point at infinity or an affine
    pair of rational functions."""

    coords: Optional[tuple]

    @staticmethod
    def infinity() -> "CurvePoint":
        return CurvePoint(None)

    @staticmethod
    def affine(x: RationalFunction, y: RationalFunction) -> "CurvePoint":
        return CurvePoint((x, y))

    def is_infinity(self) -> bool:
        return self.coords is None

    @property
    def x(self) -> RationalFunction:
        if self.coords is None:
            raise ValueError("the point at infinity has no affine coordinates")
        return self.coords[0]

    @property
    def y(self) -> RationalFunction:
        if self.coords is None:
            raise ValueError("the point at infinity has no affine coordinates")
        return self.coords[1]

    def __neg__(self) -> "CurvePoint":
        if self.coords is None:
            return self
        return CurvePoint((self.coords[0], -self.coords[1]))

    def __str__(self):
        return "O" if self.coords is None else f"({self.x}, {self.y})"


BASE_POINT = CurvePoint.affine(RF_T, RF_ONE)


def _require_on_curve(curve: TwistedCurve, p: CurvePoint) -> None:
    if p.coords is not None and not curve.contains(p.x, p.y):
        raise ValueError("point not on curve")


def add_points(curve: TwistedCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Exact group law on the twisted model.

    O is the identity and (X, -Y) inverts (X, Y).  The slope formulas are the
    chord-and-tangent ones transported through (u, v) = (d*X, d^2*Y) from the
    short Weierstrass model v^2 = u^3 + a*d^2*u + b*d^3.
    """
    _require_on_curve(curve, p)
    _require_on_curve(curve, q)
    if p.is_infinity():
        return q
    if q.is_infinity():
        return p
    d = curve.twist_rf()
    if p.x == q.x:
        if p.y == -q.y:
            return CurvePoint.infinity()
        lam = (RationalFunction.constant(3) * p.x**2 + RationalFunction.constant(curve.a)) / (
            RationalFunction.constant(2) * d * p.y
        )
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = d * lam**2 - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return CurvePoint.affine(x3, y3)


# ---------------------------------------------------------------------------
# division-polynomial sequence at the base point (all data in Z[T])
# ---------------------------------------------------------------------------
#
# The sequence W_m (the division polynomials of the short model evaluated at
# the base point) accumulates enormous powers of the twist cubic d(T), so it
# is stored in factored form d^e * V with V coprime to d.  Keeping the power
# of d symbolic is what makes the later fraction reductions cheap.

_w_cache: dict = {}


def _curve_int_data(curve: TwistedCurve) -> tuple:
    """(d, u0, v0, A, B) as integer coefficient lists for integral curves."""
    if curve.a.denominator != 1 or curve.b.denominator != 1:
        raise ValueError("division-polynomial backend needs integral a, b")
    d = curve.twist.as_int_list()
    a, b = curve.a.numerator, curve.b.numerator
    u0 = [0] + d  # d * T
    d2 = _int_mul(d, d)
    d3 = _int_mul(d2, d)
    v0 = d2
    A = [a * c for c in d2]
    B = [b * c for c in d3]
    return d, u0, v0, A, B


def _grow(lst, i):
    while len(lst) <= i:
        lst.append(0)


def _trim(lst):
    while lst and lst[-1] == 0:
        lst.pop()


def _int_sq(a):
    return _int_mul(a, a)


def _int_pow3(a):
    return _int_mul(_int_mul(a, a), a)


def _int_sub_lists(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    _trim(out)
    return out


def _try_exact_div(a, b):
    try:
        return _int_exact_div(a, b)
    except ArithmeticError:
        return None


class _Fact:
    """An integer polynomial in the factored form d^exp * poly."""

    __slots__ = ("exp", "poly")

    def __init__(self, exp: int, poly: list):
        self.exp = exp
        self.poly = poly

    def is_zero(self):
        return not self.poly

    def strip(self, d: list) -> "_Fact":
        poly = self.poly
        exp = self.exp
        while poly:
            q = _try_exact_div(poly, d)
            if q is None:
                break
            poly = q
            exp += 1
        return _Fact(exp, poly)

    def mul(self, other: "_Fact") -> "_Fact":
        return _Fact(self.exp + other.exp, _int_mul(self.poly, other.poly))

    def sub(self, other: "_Fact", d: list) -> "_Fact":
        """Difference with exponent alignment, restripped for cancellation."""
        if self.is_zero():
            return _Fact(other.exp, [-c for c in other.poly])
        if other.is_zero():
            return self
        e = min(self.exp, other.exp)
        a = self.poly
        for _ in range(self.exp - e):
            a = _int_mul(a, d)
        b = other.poly
        for _ in range(other.exp - e):
            b = _int_mul(b, d)
        return _Fact(e, _int_sub_lists(a, b)).strip(d)

    def scale(self, c: int) -> "_Fact":
        return _Fact(self.exp, [c * x for x in self.poly])


def _w_fact(curve: TwistedCurve, m: int) -> _Fact:
    """W_m as d^exp * V with V coprime to the twist; W_{-m} = -W_m."""
    if m < 0:
        w = _w_fact(curve, -m)
        return _Fact(w.exp, [-c for c in w.poly])
    key = (curve, m)
    got = _w_cache.get(key)
    if got is not None:
        return got
    d, u0, v0, A, B = _curve_int_data(curve)
    if m == 0:
        w = _Fact(0, [])
    elif m == 1:
        w = _Fact(0, [1])
    elif m == 2:
        w = _Fact(0, [2 * c for c in v0]).strip(d)
    elif m == 3:
        u2 = _int_mul(u0, u0)
        u4 = _int_mul(u2, u2)
        acc = [3 * c for c in u4]
        for i, c in enumerate(_int_mul(A, u2)):
            _grow(acc, i)
            acc[i] += 6 * c
        for i, c in enumerate(_int_mul(B, u0)):
            _grow(acc, i)
            acc[i] += 12 * c
        for i, c in enumerate(_int_mul(A, A)):
            _grow(acc, i)
            acc[i] -= c
        _trim(acc)
        w = _Fact(0, acc).strip(d)
    elif m == 4:
        u2 = _int_mul(u0, u0)
        u3 = _int_mul(u2, u0)
        u6 = _int_mul(u3, u3)
        a2 = _int_mul(A, A)
        inner = list(u6)
        for i, c in enumerate(_int_mul(A, _int_mul(u2, u2))):
            _grow(inner, i)
            inner[i] += 5 * c
        for i, c in enumerate(_int_mul(B, u3)):
            _grow(inner, i)
            inner[i] += 20 * c
        for i, c in enumerate(_int_mul(a2, u2)):
            _grow(inner, i)
            inner[i] -= 5 * c
        for i, c in enumerate(_int_mul(_int_mul(A, B), u0)):
            _grow(inner, i)
            inner[i] -= 4 * c
        for i, c in enumerate(_int_mul(B, B)):
            _grow(inner, i)
            inner[i] -= 8 * c
        for i, c in enumerate(_int_mul(a2, A)):
            _grow(inner, i)
            inner[i] -= c
        _trim(inner)
        w = _Fact(0, _int_mul([4 * c for c in v0], inner)).strip(d)
    elif m % 2 == 1:
        k = m // 2
        w = (
            _w_fact(curve, k + 2)
            .mul(_w_cube(curve, k))
            .sub(_w_fact(curve, k - 1).mul(_w_cube(curve, k + 1)), d)
        )
    else:
        k = m // 2
        inner = (
            _w_fact(curve, k + 2)
            .mul(_w_sq(curve, k - 1))
            .sub(_w_fact(curve, k - 2).mul(_w_sq(curve, k + 1)), d)
        )
        w2 = _w_fact(curve, 2)
        num = _w_fact(curve, k).mul(inner)
        w = _Fact(num.exp - w2.exp, _int_exact_div(num.poly, w2.poly))
    _w_cache[key] = w
    return w


def _w_sq(curve, m):
    w = _w_fact(curve, m)
    return _Fact(2 * w.exp, _int_sq(w.poly))


def _w_cube(curve, m):
    w = _w_fact(curve, m)
    return _Fact(3 * w.exp, _int_pow3(w.poly))


def _w_int(curve: TwistedCurve, m: int) -> list:
    """W_m expanded to a plain coefficient list (window lifting only)."""
    w = _w_fact(curve, m)
    d = curve.twist.as_int_list()
    out = w.poly
    for _ in range(w.exp):
        out = _int_mul(out, d)
    return out


def _fact_ratio_rf(curve: TwistedCurve, num: _Fact, den: _Fact) -> RationalFunction:
    """d^(num.exp - den.exp) * num.poly / den.poly as a canonical element."""
    d = curve.twist.as_int_list()
    e = num.exp - den.exp
    np, dp = num.poly, den.poly
    for _ in range(e, 0, -1):
        np = _int_mul(np, d)
    for _ in range(-e, 0, -1):
        dp = _int_mul(dp, d)
    return RationalFunction(Polynomial.from_int_list(np), Polynomial.from_int_list(dp))


def _multiple_fractions(curve: TwistedCurve, m: int) -> tuple:
    """(Nu, Du, Nv, Dv) as _Facts, with u(P_m) = Nu/Du, v(P_m) = Nv/Dv on the
    short model.  Requires m >= 1."""
    d, u0, v0, _, _ = _curve_int_data(curve)
    wm2 = _w_sq(curve, m)
    nu = _Fact(1, [0, 1]).mul(wm2).sub(
        _w_fact(curve, m - 1).mul(_w_fact(curve, m + 1)), d
    )  # u0 = d * T
    nv = (
        _w_fact(curve, m + 2)
        .mul(_w_sq(curve, m - 1))
        .sub(_w_fact(curve, m - 2).mul(_w_sq(curve, m + 1)), d)
    )
    wm3 = _w_fact(curve, m).mul(wm2)
    dv = _Fact(wm3.exp + 2, [4 * c for c in wm3.poly])  # 4 v0 W^3, v0 = d^2
    return nu, wm2, nv, dv


_mult_cache: dict = {}


def scalar_mul(
    curve: TwistedCurve, m: int, bound: int = DEFAULT_SCALAR_BOUND
) -> CurvePoint:
    """The exact multiple m*(T, 1); m = 0 gives O.

    Coordinate degrees grow quadratically in m, so multiples are gated by a
    configurable bound.
    """
    if abs(m) > bound:
        raise CurveBoundError(
            f"|m| = {abs(m)} exceeds the scalar bound {bound}; "
            f"coordinate degrees would reach about {4 * m * m}"
        )
    if m == 0:
        return CurvePoint.infinity()
    key = (curve, abs(m))
    got = _mult_cache.get(key)
    if got is None:
        n = abs(m)
        if n == 1:
            got = BASE_POINT
        else:
            nu, du, nv, dv = _multiple_fractions(curve, n)
            # X = u/d, Y = v/d^2 back on the twisted model
            x = _fact_ratio_rf(curve, nu, _Fact(du.exp + 1, du.poly))
            y = _fact_ratio_rf(curve, nv, _Fact(dv.exp + 2, dv.poly))
            got = CurvePoint.affine(x, y)
        _mult_cache[key] = got
    return got if m > 0 else -got


_psi_cache: dict = {}


def psi(curve: TwistedCurve, m: int, bound: int = DEFAULT_SCALAR_BOUND) -> RationalFunction:
    """The integer-valued function psi_m = X_m / (T * Y_m); its value at
    infinity is m."""
    if m == 0:
        raise ValueError("psi is undefined at m = 0 (the point at infinity)")
    if abs(m) > bound:
        raise CurveBoundError(
            f"|m| = {abs(m)} exceeds the scalar bound {bound}"
        )
    key = (curve, abs(m))
    got = _psi_cache.get(key)
    if got is None:
        n = abs(m)
        if n == 1:
            got = RF_ONE
        else:
            # psi = 4 d^3 Nu W_m / (T Nv) with the d-powers tracked exactly
            nu, _, nv, _ = _multiple_fractions(curve, n)
            wm = _w_fact(curve, n)
            num = _Fact(3 + nu.exp + wm.exp, _int_mul([4 * c for c in nu.poly], wm.poly))
            den = _Fact(nv.exp, _int_mul([0, 1], nv.poly))
            got = _fact_ratio_rf(curve, num, den)
        _psi_cache[key] = got
    return got if m > 0 else -got


def reduce_mod_T(curve: TwistedCurve, p: CurvePoint) -> RationalPoint:
    """Reduction modulo the prime T: evaluate the coordinates at T = 0.

    For the default family the reduced curve is y^2 = x^3 + a*x + b over Q;
    the map is a group homomorphism on the points where it is defined.
    """
    if curve.twist.evaluate(0) != 1:
        raise ValueError("reduction lands on y^2 = x^3+ax+b only when d(0) = 1")
    if p.is_infinity():
        return RationalPoint.infinity()
    _require_on_curve(curve, p)
    if ord_at(p.x, AT_ZERO) < 0 or ord_at(p.y, AT_ZERO) < 0:
        raise ValueError("not reducible at T")
    x0 = p.x.evaluate(0)
    y0 = p.y.evaluate(0)
    if not e0_on_curve(x0, y0, curve.a, curve.b):
        raise AssertionError("reduction left the reduced curve")
    return RationalPoint(x0, y0)


# ---------------------------------------------------------------------------
# the u/v order diagnostics
# ---------------------------------------------------------------------------

_EXCLUDED = {0, 1, -1}


@dataclass(frozen=True)
class UVPair:
    """The pair u = psi_m psi_n - psi_r + (1/2) T^-1 and its 1/3 companion."""

    u: RationalFunction
    v: RationalFunction
    indices: tuple

    def __post_init__(self):
        if self.u - self.v != RationalFunction(ONE, T) * RationalFunction.constant(
            Fraction(1, 6)
        ):
            raise ValueError("u - v must equal (1/6) T^-1")


def uv(
    curve: TwistedCurve,
    n: int,
    m: int,
    r: int,
    bound: int = DEFAULT_SCALAR_BOUND,
) -> UVPair:
    """Exact u and v for indices outside {0, 1, -1}."""
    for idx in (n, m, r):
        if idx in _EXCLUDED:
            raise ValueError("index in {0, 1, -1}")
    core = psi(curve, m, bound) * psi(curve, n, bound) - psi(curve, r, bound)
    tinv = RationalFunction(ONE, T)
    u = core + tinv * RationalFunction.constant(Fraction(1, 2))
    v = core + tinv * RationalFunction.constant(Fraction(1, 3))
    return UVPair(u, v, (m, n, r))


@dataclass(frozen=True)
class OrderReport:
    """Exact valuations of u and v at T and at T^-1, plus whether n*m = r."""

    ordT_u: int
    ordT_v: int
    ordInf_u: int
    ordInf_v: int
    product_holds: bool


# --- truncated Laurent windows (internal) ----------------------------------


class _Exhausted(Exception):
    pass


class _Window:
    """A truncated Laurent expansion: coeffs[i] is the coefficient of
    X^(start+i); everything beyond the stored range is unknown."""

    __slots__ = ("start", "co")

    def __init__(self, start: int, co: list):
        self.start = start
        self.co = co

    @staticmethod
    def zero(k: int) -> "_Window":
        return _Window(0, [Fraction(0)] * k)

    def __mul__(self, other: "_Window") -> "_Window":
        k = min(len(self.co), len(other.co))
        if k <= 0:
            raise _Exhausted
        out = [Fraction(0)] * k
        for i, a in enumerate(self.co[:k]):
            if a == 0:
                continue
            for j in range(k - i):
                b = other.co[j]
                if b:
                    out[i + j] += a * b
        return _Window(self.start + other.start, out)

    def __add__(self, other: "_Window") -> "_Window":
        s = min(self.start, other.start)
        end = min(self.start + len(self.co), other.start + len(other.co))
        if end <= s:
            raise _Exhausted
        out = [Fraction(0)] * (end - s)
        for i, c in enumerate(self.co):
            if s <= self.start + i < end:
                out[self.start + i - s] += c
        for i, c in enumerate(other.co):
            if s <= other.start + i < end:
                out[other.start + i - s] += c
        return _Window(s, out)

    def __sub__(self, other: "_Window") -> "_Window":
        return self + other.scale(-1)

    def scale(self, c) -> "_Window":
        c = Fraction(c)
        return _Window(self.start, [c * a for a in self.co])

    def __truediv__(self, other: "_Window") -> "_Window":
        # locate the pivot of the divisor inside its window
        piv = next((i for i, c in enumerate(other.co) if c != 0), None)
        if piv is None:
            raise ZeroDivisionError("division by an (apparently) zero window")
        den = other.co[piv:]
        k = min(len(self.co), len(den))
        if k <= 0:
            raise _Exhausted
        inv0 = 1 / den[0]
        out = []
        for i in range(k):
            acc = self.co[i]
            for j in range(1, min(i, len(den) - 1) + 1):
                acc -= den[j] * out[i - j]
            out.append(acc * inv0)
        return _Window(self.start - (other.start + piv), out)

    def order(self) -> int:
        for i, c in enumerate(self.co):
            if c != 0:
                return self.start + i
        raise _Exhausted


def _lift_poly(coeffs, place: str, k: int) -> _Window:
    """Lift an integer/fraction coefficient list to a window at T (ascending)
    or at T^-1 (descending from the leading term)."""
    if not coeffs:
        return _Window.zero(k)
    if place == "zero":
        co = [Fraction(c) for c in coeffs[:k]]
        co += [Fraction(0)] * (k - len(co))
        return _Window(0, co)
    deg = len(coeffs) - 1
    rev = [Fraction(c) for c in reversed(coeffs)][:k]
    rev += [Fraction(0)] * (k - len(rev))
    return _Window(-deg, rev)


def _w_window(curve: TwistedCurve, m: int, place: str, k: int, memo: dict) -> _Window:
    if m < 0:
        return _w_window(curve, -m, place, k, memo).scale(-1)
    got = memo.get(m)
    if got is not None:
        return got
    if m <= 4:
        w = _lift_poly(_w_int(curve, m), place, k)
    elif m % 2 == 1:
        h = m // 2
        w = _w_window(curve, h + 2, place, k, memo) * _cube(
            _w_window(curve, h, place, k, memo)
        ) - _w_window(curve, h - 1, place, k, memo) * _cube(
            _w_window(curve, h + 1, place, k, memo)
        )
    else:
        h = m // 2
        inner = _w_window(curve, h + 2, place, k, memo) * _sq(
            _w_window(curve, h - 1, place, k, memo)
        ) - _w_window(curve, h - 2, place, k, memo) * _sq(
            _w_window(curve, h + 1, place, k, memo)
        )
        w2 = _lift_poly(_w_int(curve, 2), place, k)
        w = (_w_window(curve, h, place, k, memo) * inner) / w2
    memo[m] = w
    return w


def _sq(w: _Window) -> _Window:
    return w * w


def _cube(w: _Window) -> _Window:
    return w * w * w


def _psi_window(curve: TwistedCurve, m: int, place: str, k: int, memo: dict) -> _Window:
    """Window of psi_m = 4 d^3 Nu W_m / (T Nv) without any normalisation."""
    sign = -1 if m < 0 else 1
    m = abs(m)
    d, u0, v0, _, _ = _curve_int_data(curve)
    wm = _w_window(curve, m, place, k, memo)
    nu = _lift_poly(u0, place, k) * _sq(wm) - _w_window(
        curve, m - 1, place, k, memo
    ) * _w_window(curve, m + 1, place, k, memo)
    nv = _w_window(curve, m + 2, place, k, memo) * _sq(
        _w_window(curve, m - 1, place, k, memo)
    ) - _w_window(curve, m - 2, place, k, memo) * _sq(
        _w_window(curve, m + 1, place, k, memo)
    )
    dwin = _lift_poly(d, place, k)
    num = dwin * dwin * dwin * nu * wm
    tvar = _lift_poly([0, 1], place, k)
    out = num.scale(4 * sign) / (tvar * nv)
    return out


def check_orders(
    curve: TwistedCurve, n: int, m: int, r: int, max_window: int = 256
) -> OrderReport:
    """Exact valuation report for u and v at the primes T and T^-1.

    Runs on truncated expansions, so indices far beyond the scalar bound are
    fine; windows widen automatically until every valuation is pinned.
    """
    for idx in (n, m, r):
        if idx in _EXCLUDED:
            raise ValueError("index in {0, 1, -1}")
    k = 12
    while True:
        try:
            ords = {}
            for place in ("zero", "inf"):
                memo: dict = {}
                pn = _psi_window(curve, n, place, k, memo)
                pm = _psi_window(curve, m, place, k, memo)
                pr = _psi_window(curve, r, place, k, memo)
                if place == "zero":
                    tinv = _Window(-1, [Fraction(1)] + [Fraction(0)] * (k - 1))
                else:
                    tinv = _Window(1, [Fraction(1)] + [Fraction(0)] * (k - 1))
                core = pm * pn - pr
                u = core + tinv.scale(Fraction(1, 2))
                v = core + tinv.scale(Fraction(1, 3))
                ords[place] = (u.order(), v.order())
            return OrderReport(
                ordT_u=ords["zero"][0],
                ordT_v=ords["zero"][1],
                ordInf_u=ords["inf"][0],
                ordInf_v=ords["inf"][1],
                product_holds=(n * m == r),
            )
        except _Exhausted:
            k *= 2
            if k > max_window:
                raise RuntimeError(
                    f"order computation for {(n, m, r)} did not stabilise "
                    f"within window {max_window}"
                )


def psi_constant_at_infinity(curve: TwistedCurve, m: int) -> Fraction:
    """Value of psi_m at infinity, read off a truncated expansion (no
    normalisation, so m may exceed the scalar bound)."""
    if m == 0:
        raise ValueError("psi is undefined at m = 0")
    k = 8
    while True:
        try:
            w = _psi_window(curve, m, "inf", k, {})
            o = w.order()
            if o > 0:
                return Fraction(0)
            if o < 0:
                raise ValueError("pole at infinity")
            return w.co[-w.start]
        except _Exhausted:
            k *= 2

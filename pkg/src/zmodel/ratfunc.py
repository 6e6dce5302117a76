"""Exact arithmetic in Q(T): polynomials, rational functions, places, valuations
and truncated Laurent expansions.

Everything here is immutable and exact.  Rational functions are kept in a
canonical form (reduced fraction, monic denominator) so that equality is a
structural comparison.  The canonicalisation gcd runs over the integers with a
modular algorithm, which keeps large inputs (degree in the thousands) workable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient lists)
# ---------------------------------------------------------------------------

_KARATSUBA_CUTOFF = 48


def _int_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_add(a: Sequence[int], b: Sequence[int]) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] += c
    return _int_trim(out)


def _int_sub(a: Sequence[int], b: Sequence[int]) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return _int_trim(out)


def _int_mul_school(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _int_trim(out)


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list:
    """Karatsuba multiplication above a cutoff, schoolbook below."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KARATSUBA_CUTOFF:
        return _int_mul_school(a, b)
    n = max(len(a), len(b))
    h = n // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _int_mul(a0, b0)
    z2 = _int_mul(a1, b1)
    z1 = _int_sub(_int_mul(_int_add(a0, a1), _int_add(b0, b1)), _int_add(z0, z2))
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        out[i + h] += c
    for i, c in enumerate(z2):
        out[i + 2 * h] += c
    return _int_trim(out)


def _int_content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g if g else 1


def _int_primitive(a: Sequence[int]) -> list:
    c = _int_content(a)
    return [x // c for x in a]


def _int_exact_div(a: Sequence[int], b: Sequence[int]) -> list:
    """Exact division of integer polynomials; raises if it does not divide."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    out = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    for k in range(len(a) - len(b), -1, -1):
        top = a[k + len(b) - 1]
        if top % lead != 0:
            raise ArithmeticError("inexact polynomial division")
        q = top // lead
        out[k] = q
        if q:
            for j, bj in enumerate(b):
                a[k + j] -= q * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return _int_trim(out)


# --- modular gcd -----------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_stream(start: int = (1 << 62) + 1):
    n = start | 1
    while True:
        if _is_probable_prime(n):
            yield n
        n += 2


def _mod_poly(a: Sequence[int], p: int) -> list:
    return _int_trim([c % p for c in a])


def _mod_divmod(a: list, b: list, p: int) -> tuple:
    inv = pow(b[-1], p - 2, p)
    a = list(a)
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] % p
        if c:
            c = c * inv % p
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return q, _int_trim([c % p for c in a[: len(b) - 1]])


def _mod_gcd(a: list, b: list, p: int) -> list:
    a, b = _mod_poly(a, p), _mod_poly(b, p)
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    # m1, m2 coprime
    inv = pow(m1 % m2, m2 - 2, m2) if _is_probable_prime(m2) else pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t


def _sym(r: int, m: int) -> int:
    return r - m if 2 * r > m else r


def _int_gcd(a: Sequence[int], b: Sequence[int]) -> list:
    """Primitive gcd of integer polynomials via modular images + CRT."""
    if not a:
        return _int_primitive(list(b)) if b else []
    if not b:
        return _int_primitive(list(a))
    a = _int_primitive(a)
    b = _int_primitive(b)
    if len(b) > len(a):
        a, b = b, a
    if len(b) == 1:
        return [1]
    gamma = math.gcd(a[-1], b[-1])
    best_deg = None
    acc: Optional[list] = None
    mod = 1
    for p in _prime_stream():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _mod_gcd(a, b, p)
        d = len(g) - 1
        if d == 0:
            return [1]
        if best_deg is None or d < best_deg:
            best_deg = d
            scaled = [(c * gamma) % p for c in g]
            acc = scaled
            mod = p
        elif d == best_deg:
            scaled = [(c * gamma) % p for c in g]
            acc = [_crt_pair(r1, mod, r2, p) for r1, r2 in zip(acc, scaled)]
            mod *= p
        else:
            continue  # unlucky prime
        cand = _int_trim([_sym(c % mod, mod) for c in acc])
        if not cand or len(cand) - 1 != best_deg:
            continue
        cand = _int_primitive(cand)
        try:
            _int_exact_div(a, cand)
            _int_exact_div(b, cand)
        except ArithmeticError:
            continue
        return cand
    raise RuntimeError("unreachable")


# ---------------------------------------------------------------------------
# polynomials over Q
# ---------------------------------------------------------------------------


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot coerce {v!r} into an exact rational")


class Polynomial:
    """Univariate polynomial over Q with a dense coefficient tuple.

    Coefficients are indexed by degree in T; the leading coefficient is
    nonzero unless the polynomial is zero.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [_to_fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)

    # -- constructors --

    @staticmethod
    def constant(v) -> "Polynomial":
        return Polynomial((v,))

    @staticmethod
    def variable() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def from_int_list(coeffs: Sequence[int]) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        p._c = tuple(Fraction(c) for c in cs)
        return p

    # -- basic queries --

    @property
    def coefficients(self) -> tuple:
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        """Degree, with deg 0 = -1 by convention."""
        return len(self._c) - 1

    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def ord_zero(self) -> int:
        """Multiplicity of the root T = 0."""
        if not self._c:
            raise ValueError("zero polynomial")
        for i, c in enumerate(self._c):
            if c != 0:
                return i
        raise AssertionError

    # -- arithmetic --

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        return Polynomial(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        return Polynomial(
            [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._c])

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        # integer fast path: most heavy products arise from integral data
        ad = [c.denominator for c in self._c]
        bd = [c.denominator for c in other._c]
        if all(d == 1 for d in ad) and all(d == 1 for d in bd):
            return Polynomial.from_int_list(
                _int_mul([c.numerator for c in self._c], [c.numerator for c in other._c])
            )
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, ai in enumerate(self._c):
            if ai == 0:
                continue
            for j, bj in enumerate(other._c):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        q = [Fraction(0)] * max(len(rem) - len(other._c) + 1, 0)
        lead = other._c[-1]
        for k in range(len(rem) - len(other._c), -1, -1):
            c = rem[k + len(other._c) - 1] / lead
            q[k] = c
            if c:
                for j, bj in enumerate(other._c):
                    rem[k + j] -= c * bj
        return Polynomial(q), Polynomial(rem[: len(other._c) - 1])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def evaluate(self, x) -> Fraction:
        x = _to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def compose_shift(self, c) -> "Polynomial":
        """This polynomial as a function of (S + c), i.e. substitute T = S + c."""
        c = _to_fraction(c)
        acc = Polynomial()
        s_plus_c = Polynomial((c, 1))
        for coeff in reversed(self._c):
            acc = acc * s_plus_c + Polynomial.constant(coeff)
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("cannot normalise the zero polynomial")
        lead = self._c[-1]
        return Polynomial([c / lead for c in self._c])

    def reversed_to(self, degree: int) -> "Polynomial":
        """Coefficient reversal padded to the given degree: T^degree * p(1/T)."""
        if degree < self.degree():
            raise ValueError("reversal degree below polynomial degree")
        cs = [Fraction(0)] * (degree + 1)
        for i, c in enumerate(self._c):
            cs[degree - i] = c
        return Polynomial(cs)

    def as_int_list(self) -> list:
        """Coefficients as integers; raises if any denominator is not 1."""
        out = []
        for c in self._c:
            if c.denominator != 1:
                raise ValueError("polynomial is not integral")
            out.append(c.numerator)
        return out

    def denominator_lcm(self) -> int:
        l = 1
        for c in self._c:
            l = l * c.denominator // math.gcd(l, c.denominator)
        return l

    # -- structure --

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("T" if c == 1 else ("-T" if c == -1 else f"{c}*T"))
            else:
                parts.append(
                    f"T^{i}" if c == 1 else (f"-T^{i}" if c == -1 else f"{c}*T^{i}")
                )
        return " + ".join(parts).replace("+ -", "- ")


T = Polynomial.variable()
ONE = Polynomial.constant(1)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, computed modularly on integer-scaled inputs."""
    if a.is_zero():
        return b.monic() if not b.is_zero() else Polynomial()
    if b.is_zero():
        return a.monic()
    ia = [c.numerator * (a.denominator_lcm() // c.denominator) for c in a.coefficients]
    ib = [c.numerator * (b.denominator_lcm() // c.denominator) for c in b.coefficients]
    g = _int_gcd(ia, ib)
    return Polynomial.from_int_list(g).monic()


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def rational_roots(p: Polynomial) -> list:
    """All rational roots, via the rational root theorem on the integer scaling."""
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    v = p.ord_zero()
    roots = []
    if v > 0:
        roots.append(Fraction(0))
        p = Polynomial(p.coefficients[v:])
    if p.degree() == 0:
        return roots
    scale = p.denominator_lcm()
    ints = [c.numerator * (scale // c.denominator) for c in p.coefficients]
    a0, ad = ints[0], ints[-1]
    for num in _divisors(a0):
        for den in _divisors(ad):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p.evaluate(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def is_irreducible(p: Polynomial, trusted: bool = False) -> bool:
    """Irreducibility over Q for degree <= 4 (rational roots plus a quadratic
    factor search for quartics); degree >= 5 requires ``trusted=True``."""
    d = p.degree()
    if d <= 0:
        return False
    if d == 1:
        return True
    if rational_roots(p):
        return False
    if d <= 3:
        return True
    if d == 4:
        return not _quartic_has_quadratic_factor(p)
    if trusted:
        return True
    raise ValueError("irreducibility check supports degree <= 4; pass trusted=True")


def _quartic_has_quadratic_factor(p: Polynomial) -> bool:
    # monic integer model: a monic quartic over Q factors into two rational
    # quadratics iff the corresponding monic integer quartic factors over Z
    q = p.monic()
    scale = q.denominator_lcm()
    # substitute T -> T/scale and clear: keeps monicity with integer coefficients
    cs = [q.coeff(i) * Fraction(scale) ** (4 - i) for i in range(5)]
    ints = [c.numerator for c in cs] if all(c.denominator == 1 for c in cs) else None
    if ints is None:
        raise AssertionError("scaling failed to clear denominators")
    f0, f1 = ints[0], sum(ints)
    if f0 == 0 or f1 == 0:
        return True  # root at 0 or 1
    for beta in _divisors(f0):
        for sb in (beta, -beta):
            for g1 in _divisors(f1):
                for sg in (g1, -g1):
                    alpha = sg - 1 - sb
                    g = Polynomial((sb, alpha, 1))
                    if (Polynomial(ints) % g).is_zero():
                        return True
    return False


# ---------------------------------------------------------------------------
# places of Q(T)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place of Q(T): the prime T, the prime at infinity (T^-1), or a monic
    irreducible polynomial."""

    kind: str
    poly: Optional[Polynomial] = None

    AT_ZERO = "at_zero"
    AT_INFINITY = "at_infinity"
    AT_IRREDUCIBLE = "at_irreducible"

    @staticmethod
    def at_zero() -> "Place":
        return Place(Place.AT_ZERO)

    @staticmethod
    def at_infinity() -> "Place":
        return Place(Place.AT_INFINITY)

    @staticmethod
    def at_irreducible(poly: Polynomial) -> "Place":
        if poly.degree() < 1:
            raise ValueError("a finite place needs a polynomial of degree >= 1")
        if not poly.is_monic():
            raise ValueError("finite places are carried by monic polynomials")
        if poly == T:
            return Place(Place.AT_ZERO)
        return Place(Place.AT_IRREDUCIBLE, poly)

    def degree(self) -> int:
        if self.kind == Place.AT_IRREDUCIBLE:
            return self.poly.degree()
        return 1

    def __str__(self):
        if self.kind == Place.AT_ZERO:
            return "T"
        if self.kind == Place.AT_INFINITY:
            return "1/T"
        return f"({self.poly})"


AT_ZERO = Place.at_zero()
AT_INFINITY = Place.at_infinity()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """An element of Q(T) in canonical form: reduced fraction, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if num.is_zero():
            self.num, self.den = Polynomial(), ONE
            return
        # strip the common power of T first; it is cheap and frequent
        vn, vd = num.ord_zero(), den.ord_zero()
        v = min(vn, vd)
        if v:
            num = Polynomial(num.coefficients[v:])
            den = Polynomial(den.coefficients[v:])
        if den.degree() > 0 and num.degree() > 0:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lead = den.leading()
        if lead != 1:
            num = Polynomial([c / lead for c in num.coefficients])
            den = Polynomial([c / lead for c in den.coefficients])
        self.num, self.den = num, den

    # -- constructors --

    @staticmethod
    def constant(v) -> "RationalFunction":
        return RationalFunction(Polynomial.constant(v))

    @staticmethod
    def variable() -> "RationalFunction":
        return RationalFunction(T)

    # -- queries --

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den == ONE

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def evaluate(self, x) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.evaluate(x) / d

    # -- arithmetic --

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return RationalFunction(self.den**-n, self.num**-n)
        return RationalFunction(self.num**n, self.den**n)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction.constant(other)

    # -- structure --

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


RF_ZERO = RationalFunction(Polynomial())
RF_ONE = RationalFunction(ONE)
RF_T = RationalFunction.variable()


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical form of num/den: reduced, monic denominator, value-preserving."""
    return RationalFunction(num, den)


def invert_variable(f: RationalFunction) -> RationalFunction:
    """The same field element written in the reciprocal variable: f(1/T)."""
    d = max(f.num.degree(), f.den.degree())
    if d < 0:
        return RF_ZERO
    return RationalFunction(f.num.reversed_to(d), f.den.reversed_to(d))


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------


def ord_at(f: RationalFunction, place: Place) -> int:
    """Order of vanishing at a place (negative at poles), value group Z."""
    if f.is_zero():
        raise ValueError("valuation of zero undefined")
    if place.kind == Place.AT_ZERO:
        return f.num.ord_zero() - f.den.ord_zero()
    if place.kind == Place.AT_INFINITY:
        return f.den.degree() - f.num.degree()
    pi = place.poly
    return _multiplicity(f.num, pi) - _multiplicity(f.den, pi)


def _multiplicity(p: Polynomial, pi: Polynomial) -> int:
    m = 0
    while True:
        q, r = divmod(p, pi)
        if not r.is_zero():
            return m
        p = q
        m += 1
        if p.is_zero():
            raise AssertionError("zero polynomial in multiplicity loop")


def degree_formula_sum(f: RationalFunction, places: Sequence[Place]) -> int:
    """Sum of deg(P) * ord_P(f) over the given places (with at_infinity)."""
    return sum(p.degree() * ord_at(f, p) for p in places)


# ---------------------------------------------------------------------------
# truncated Laurent expansions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentSeries:
    """Truncation of the expansion of a rational function at a place.

    ``coefficients[i]`` is the coefficient of (uniformiser)^(lowest_exponent+i);
    all emitted coefficients are exact, and terms from ``precision`` on are
    dropped.  At infinity the uniformiser is T^-1.
    """

    place: Place
    lowest_exponent: int
    coefficients: tuple
    precision: int

    def __post_init__(self):
        if self.precision <= self.lowest_exponent and self.coefficients:
            raise ValueError("precision bound does not cover the leading term")
        if self.coefficients and self.coefficients[0] == 0:
            raise ValueError("leading Laurent coefficient must be nonzero")

    def coeff(self, k: int) -> Fraction:
        if k >= self.precision:
            raise ValueError(f"coefficient {k} beyond precision {self.precision}")
        i = k - self.lowest_exponent
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def as_ratfunc(self) -> RationalFunction:
        """The truncation re-summed as an exact rational function."""
        acc = RF_ZERO
        tvar = RF_T if self.place.kind != Place.AT_INFINITY else RF_ONE / RF_T
        if self.place.kind == Place.AT_IRREDUCIBLE:
            tvar = RationalFunction(self.place.poly)
        for i, c in enumerate(self.coefficients):
            if c:
                acc = acc + RationalFunction.constant(c) * tvar ** (
                    self.lowest_exponent + i
                )
        return acc

    def __str__(self):
        u = {"at_zero": "T", "at_infinity": "T^-1"}.get(self.place.kind, "S")
        parts = [
            f"{c}*{u}^{self.lowest_exponent + i}"
            for i, c in enumerate(self.coefficients)
            if c
        ]
        return (" + ".join(parts) or "0") + f" + O({u}^{self.precision})"


def _series_div(num: Sequence[Fraction], den: Sequence[Fraction], k: int) -> list:
    """First k coefficients of num/den as power series; den[0] != 0."""
    out = []
    inv0 = 1 / den[0]
    for i in range(k):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv0)
    return out


def laurent_expand(
    f: RationalFunction, place: Place, precision: int
) -> LaurentSeries:
    """Exact truncated expansion of f at a place; lowest exponent is ord_at."""
    if f.is_zero():
        raise ValueError("cannot expand the zero function")
    v = ord_at(f, place)
    if precision <= v:
        raise ValueError(f"precision {precision} does not reach the order {v}")
    if place.kind == Place.AT_INFINITY:
        return _expand_shifted(invert_variable(f), place, precision, v)
    if place.kind == Place.AT_ZERO:
        return _expand_shifted(f, place, precision, v)
    pi = place.poly
    if pi.degree() != 1:
        raise ValueError("expansion supported only at degree-1 places")
    c = -pi.coeff(0)
    shifted = RationalFunction(f.num.compose_shift(c), f.den.compose_shift(c))
    return _expand_shifted(shifted, place, precision, v)


def _expand_shifted(
    f: RationalFunction, place: Place, precision: int, v: int
) -> LaurentSeries:
    vn, vd = f.num.ord_zero(), f.den.ord_zero()
    assert vn - vd == v
    num = f.num.coefficients[vn:]
    den = f.den.coefficients[vd:]
    coeffs = _series_div(num, den, precision - v)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return LaurentSeries(place, v, tuple(coeffs), precision)


def constant_term_infinity(f: RationalFunction) -> Fraction:
    """Value at infinity: the coefficient of (T^-1)^0 in the expansion there."""
    dn, dd = f.num.degree(), f.den.degree()
    if dn > dd:
        raise ValueError("pole at infinity")
    if dn < dd:
        return Fraction(0)
    return f.num.leading() / f.den.leading()

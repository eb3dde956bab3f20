"""Exact univariate polynomial and rational-function arithmetic over Q.

A polynomial in the variable n is a dense, immutable tuple of Fraction
coefficients in ascending degree, with no trailing zero; the zero
polynomial is the empty tuple and its degree is -inf so that every degree
comparison against an integer behaves sensibly.

GCDs are always returned monic.  The production gcd kernel works modulo
word-sized primes with CRT lifting and an exact divisibility check, which
keeps the large shifted-product gcds used elsewhere in this package fast;
the result is identical to the classical monic remainder sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .intutil import primes_for_crt

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INFINITY = float("-inf")


def _fr(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def one() -> "Poly":
        return _ONE

    @staticmethod
    def variable() -> "Poly":
        return _VAR

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(power: int, c: Scalar = 1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return Poly((0,) * power + (c,))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> "int | float":
        """Degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, point: Scalar) -> Fraction:
        x = _fr(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return (-self) + other

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = _fr(other)
            if c == 0:
                return _ZERO
            return Poly(tuple(x * c for x in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Poly":
        c = _fr(scalar)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly(tuple(x / c for x in self.coeffs))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        if self.lc == 1:
            return self
        return self / self.lc

    # -- equality / display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "n" if i == 1 else f"n^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


_ZERO = Poly()
_ONE = Poly((1,))
_VAR = Poly((0, 1))


def _coerce(value: "Poly | Scalar") -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: a = q*b + r with deg r < deg b, exactly."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    if a.degree < b.degree:
        return _ZERO, a
    rem = list(a.coeffs)
    div = b.coeffs
    dq = len(rem) - len(div)
    quo = [Fraction(0)] * (dq + 1)
    inv_lc = 1 / div[-1]
    for shift_pos in range(dq, -1, -1):
        c = rem[shift_pos + len(div) - 1] * inv_lc
        if c:
            quo[shift_pos] = c
            for i, d in enumerate(div):
                rem[shift_pos + i] -= c * d
    return Poly(quo), Poly(rem[: len(div) - 1])


def exact_div(a: Poly, b: Poly) -> Poly:
    """Division that must be remainder-free; a nonzero remainder is a bug."""
    q, r = divrem(a, b)
    if not r.is_zero:
        raise RuntimeError(f"non-exact polynomial division: ({a}) / ({b})")
    return q


def shift(a: Poly, k: int) -> Poly:
    """The composed polynomial a(n + k)."""
    if k == 0 or a.is_zero:
        return a
    out = [Fraction(0)]
    power = [Fraction(1)]  # (n + k)^i, ascending
    for i, c in enumerate(a.coeffs):
        if c:
            while len(out) < len(power):
                out.append(Fraction(0))
            for j, p in enumerate(power):
                out[j] += c * p
        if i + 1 < len(a.coeffs):
            nxt = [Fraction(0)] * (len(power) + 1)
            for j, p in enumerate(power):
                nxt[j] += p * k
                nxt[j + 1] += p
            power = nxt
    return Poly(out)


def falling_product(f: Poly, k: int) -> Poly:
    """The product f(n) f(n-1) ... f(n-k+1); the empty product (k=0) is 1."""
    if k < 0:
        raise ValueError("falling_product needs k >= 0")
    out = _ONE
    for j in range(k):
        out = out * shift(f, -j)
    return out


# -- gcd ----------------------------------------------------------------


def _primitive_int(p: Poly) -> list[int]:
    """Primitive integer coefficients of a nonzero p, positive leading sign."""
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of two integer-coefficient polys over GF(p); [] if either is 0 mod p."""

    def red(xs: list[int]) -> list[int]:
        ys = [x % p for x in xs]
        while ys and ys[-1] == 0:
            ys.pop()
        return ys

    f, g = red(a), red(b)
    if not f or not g:
        return []
    while g:
        # f mod g over GF(p)
        inv = pow(g[-1], p - 2, p)
        r = f[:]
        dg = len(g) - 1
        while len(r) - 1 >= dg:
            c = r[-1] * inv % p
            if c:
                off = len(r) - 1 - dg
                for i, d in enumerate(g):
                    r[off + i] = (r[off + i] - c * d) % p
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        f, g = g, r
    inv = pow(f[-1], p - 2, p)
    return [x * inv % p for x in f]


def _int_divides(g: list[int], a: list[int]) -> bool:
    """Whether g divides a in Z[n] (both primitive integer, g nonzero)."""
    rem = a[:]
    lg = g[-1]
    dg = len(g) - 1
    while len(rem) - 1 >= dg:
        if rem[-1] % lg != 0:
            return False
        c = rem[-1] // lg
        if c:
            off = len(rem) - 1 - dg
            for i, d in enumerate(g):
                rem[off + i] -= c * d
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[n] of primitive a, b of degree >= 1 (modular CRT)."""
    lc_bound = math.gcd(a[-1], b[-1])
    acc: list[int] | None = None
    modulus = 1
    for p in primes_for_crt():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        gp = _gf_gcd(a, b, p)
        if len(gp) == 1:
            return [1]  # coprime: the modular degree only ever overshoots
        scaled = [x * lc_bound % p for x in gp]
        if acc is None or len(scaled) < len(acc):
            acc, modulus = scaled, p
        elif len(scaled) == len(acc):
            # coefficientwise CRT merge
            inv = pow(modulus % p, p - 2, p)
            merged = []
            for old, new in zip(acc, scaled):
                t = (new - old) % p * inv % p
                merged.append(old + modulus * t)
            acc, modulus = merged, modulus * p
        else:
            continue  # unlucky prime, degree too high
        half = modulus // 2
        candidate = [c - modulus if c > half else c for c in acc]
        if candidate[-1] == 0:
            continue  # leading bound not yet inside the lift range
        content = 0
        for c in candidate:
            content = math.gcd(content, c)
        if content == 0:
            continue
        candidate = [c // content for c in candidate]
        if candidate[-1] < 0:
            candidate = [-c for c in candidate]
        if _int_divides(candidate, a) and _int_divides(candidate, b):
            return candidate
    raise AssertionError("unreachable: prime stream is infinite")


def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(x, 0) = monic(x)."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return _ONE
    g = _int_gcd(_primitive_int(a), _primitive_int(b))
    return Poly(g).monic()


# -- rational functions ---------------------------------------------------


@dataclass(frozen=True)
class RatFunc:
    """A reduced rational function: coprime num/den with monic denominator."""

    num: Poly
    den: Poly

    @staticmethod
    def reduced(num: Poly, den: Poly) -> "RatFunc":
        """Build the reduced representation of num/den (den nonzero)."""
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return RatFunc(_ZERO, _ONE)
        g = gcd_monic(num, den)
        if g.degree > 0:
            num = exact_div(num, g)
            den = exact_div(den, g)
        lc = den.lc
        if lc != 1:
            num = num / lc
            den = den / lc
        return RatFunc(num, den)

    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc(p, _ONE)

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(_ZERO, _ONE)

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(_ONE, _ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.reduced(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.reduced(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc.reduced(self.num * other.den, self.den * other.num)

    def shifted(self, k: int) -> "RatFunc":
        # shifting preserves coprimality and the monic denominator
        return RatFunc(shift(self.num, k), shift(self.den, k))

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

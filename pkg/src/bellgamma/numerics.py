"""Exact arithmetic primitives and high-precision constants.

Rational arithmetic is carried by fractions.Fraction (aliased Rat).
High-precision reals use BigFix, a decimal fixed-point value stored as
an arbitrary-precision integer mantissa with value mantissa * 10**-scale.

gamma_const and zeta_const are independent oracles computed by
Euler-Maclaurin summation with the remainder bounded by the first
omitted term, so every requested digit is certified.  Bernoulli numbers
come from the tangent-number triangle, which keeps the hot loop in pure
integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

LN10 = math.log(10.0)


class PrecisionError(ArithmeticError):
    """Requested precision cannot be met or certified."""


# ---------------------------------------------------------------------------
# combinatorial helpers
# ---------------------------------------------------------------------------

def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial of negative integer")
    return math.factorial(n)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, requiring 0 <= k <= n."""
    if k < 0 or k > n:
        raise ValueError(f"binom requires 0 <= k <= n, got n={n} k={k}")
    return math.comb(n, k)


def lcm_upto(n: int) -> int:
    """D_n = lcm(1, 2, ..., n); the empty case n = 0 gives 1."""
    if n < 0:
        raise ValueError("lcm_upto requires n >= 0")
    return math.lcm(*range(1, n + 1))


def poch(x, m: int):
    """Rising factorial x(x+1)...(x+m-1), with poch(x, 0) = 1.

    Works for Rat, int, or float x; the result type follows x.
    """
    if m < 0:
        raise ValueError("poch requires m >= 0")
    r = x ** 0
    for i in range(m):
        r *= x + i
    return r


# ---------------------------------------------------------------------------
# Bernoulli numbers via tangent numbers
# ---------------------------------------------------------------------------

# T_1, T_2, ...; extended on demand.  T_k relates to B_{2k} by
# B_{2k} = (-1)^(k+1) * 2k * T_k / (4^k (4^k - 1)).
_tangent: list[int] = []


def _extend_tangent(kmax: int) -> None:
    global _tangent
    if kmax < 1 or len(_tangent) >= kmax:
        return
    t = [0] * (kmax + 1)
    t[1] = 1
    for k in range(2, kmax + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, kmax + 1):
        for j in range(k, kmax + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    _tangent = t[1:]


def bernoulli_number(n: int) -> Fraction:
    """The Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("bernoulli_number requires n >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    k = n // 2
    _extend_tangent(k)
    four_k = 1 << (2 * k)
    return Fraction((-1) ** (k + 1) * n * _tangent[k - 1], four_k * (four_k - 1))


# ---------------------------------------------------------------------------
# fixed-point kernel helpers (integer mantissas at a common scale)
# ---------------------------------------------------------------------------

def _div_nearest(a: int, b: int) -> int:
    """Round a/b to the nearest integer, ties to even.  Requires b > 0."""
    q, r = divmod(a, b)
    r2 = 2 * r
    if r2 > b or (r2 == b and q & 1):
        q += 1
    return q


def _fix_atanh_recip(q: int, w: int) -> int:
    """atanh(1/q) at scale w (integer q >= 2), as a fixed-point mantissa."""
    p = 10 ** w // q
    acc = p
    q2 = q * q
    i = 1
    while p:
        p //= q2
        acc += p // (2 * i + 1)
        i += 1
    return acc


_LN_CACHE: dict[tuple[str, int], int] = {}


def _ln2_fix(w: int) -> int:
    key = ("ln2", w)
    if key not in _LN_CACHE:
        _LN_CACHE[key] = 2 * _fix_atanh_recip(3, w)
    return _LN_CACHE[key]


def _ln10_fix(w: int) -> int:
    # ln 10 = ln(5/4) + 3 ln 2 and ln(5/4) = 2 atanh(1/9)
    key = ("ln10", w)
    if key not in _LN_CACHE:
        _LN_CACHE[key] = 2 * _fix_atanh_recip(9, w) + 3 * _ln2_fix(w)
    return _LN_CACHE[key]


def _pi_fix(w: int) -> int:
    """pi at scale w by Machin's formula."""
    key = ("pi", w)
    if key in _LN_CACHE:
        return _LN_CACHE[key]

    def atan_recip(q: int) -> int:
        p = 10 ** w // q
        acc = p
        q2 = q * q
        i = 1
        while p:
            p //= q2
            term = p // (2 * i + 1)
            acc += -term if i & 1 else term
            i += 1
        return acc

    v = 16 * atan_recip(5) - 4 * atan_recip(239)
    _LN_CACHE[key] = v
    return v


# ---------------------------------------------------------------------------
# BigFix
# ---------------------------------------------------------------------------

class BigFix:
    """Decimal fixed-point real: value = mantissa * 10**-scale.

    All arithmetic rounds to nearest at the operand scale; mixed-scale
    operands are rejected rather than silently rescaled.  Instances are
    immutable by convention.
    """

    __slots__ = ("mantissa", "scale")

    def __init__(self, mantissa: int, scale: int):
        if scale < 0:
            raise ValueError("scale must be >= 0")
        self.mantissa = mantissa
        self.scale = scale

    # construction ---------------------------------------------------------

    @classmethod
    def from_int(cls, k: int, scale: int) -> "BigFix":
        return cls(k * 10 ** scale, scale)

    @classmethod
    def from_fraction(cls, fr: Fraction, scale: int) -> "BigFix":
        fr = Fraction(fr)
        return cls(_div_nearest(fr.numerator * 10 ** scale, fr.denominator),
                   scale)

    @classmethod
    def pi(cls, scale: int) -> "BigFix":
        w = scale + 10
        return cls(_div_nearest(_pi_fix(w), 10 ** 10), scale)

    # bookkeeping ----------------------------------------------------------

    def _same(self, other: "BigFix") -> None:
        if self.scale != other.scale:
            raise ValueError("BigFix scale mismatch: %d vs %d"
                             % (self.scale, other.scale))

    def rescale(self, scale: int) -> "BigFix":
        if scale == self.scale:
            return self
        if scale > self.scale:
            return BigFix(self.mantissa * 10 ** (scale - self.scale), scale)
        return BigFix(_div_nearest(self.mantissa, 10 ** (self.scale - scale)),
                      scale)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "BigFix") -> "BigFix":
        self._same(other)
        return BigFix(self.mantissa + other.mantissa, self.scale)

    def __sub__(self, other: "BigFix") -> "BigFix":
        self._same(other)
        return BigFix(self.mantissa - other.mantissa, self.scale)

    def __neg__(self) -> "BigFix":
        return BigFix(-self.mantissa, self.scale)

    def __abs__(self) -> "BigFix":
        return BigFix(abs(self.mantissa), self.scale)

    def __mul__(self, other: "BigFix") -> "BigFix":
        self._same(other)
        return BigFix(_div_nearest(self.mantissa * other.mantissa,
                                   10 ** self.scale), self.scale)

    def __truediv__(self, other: "BigFix") -> "BigFix":
        self._same(other)
        if other.mantissa == 0:
            raise ZeroDivisionError("BigFix division by zero")
        num = self.mantissa * 10 ** self.scale
        den = other.mantissa
        if den < 0:
            num, den = -num, -den
        return BigFix(_div_nearest(num, den), self.scale)

    def mul_rat(self, fr: Fraction) -> "BigFix":
        """Exact-rational scaling, rounded once."""
        fr = Fraction(fr)
        return BigFix(_div_nearest(self.mantissa * fr.numerator,
                                   fr.denominator), self.scale)

    def pow_int(self, k: int) -> "BigFix":
        """Integer power k >= 0, computed exactly then rounded once."""
        if k < 0:
            raise ValueError("pow_int requires k >= 0")
        if k == 0:
            return BigFix.from_int(1, self.scale)
        if k == 1:
            return self
        return BigFix(_div_nearest(self.mantissa ** k,
                                   10 ** (self.scale * (k - 1))), self.scale)

    # comparisons ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, BigFix) and self.scale == other.scale
                and self.mantissa == other.mantissa)

    def __lt__(self, other: "BigFix") -> bool:
        self._same(other)
        return self.mantissa < other.mantissa

    def __le__(self, other: "BigFix") -> bool:
        self._same(other)
        return self.mantissa <= other.mantissa

    def __hash__(self):
        return hash((self.mantissa, self.scale))

    # conversion -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10 ** self.scale)

    def __float__(self) -> float:
        return self.mantissa / 10 ** self.scale

    def to_decimal(self) -> str:
        m, s = self.mantissa, self.scale
        sign = "-" if m < 0 else ""
        m = abs(m)
        if s == 0:
            return sign + str(m)
        digits = str(m).rjust(s + 1, "0")
        return f"{sign}{digits[:-s]}.{digits[-s:]}"

    def __repr__(self) -> str:
        return f"BigFix({self.to_decimal()})"

    # logarithm ------------------------------------------------------------

    def ln(self) -> "BigFix":
        """Natural log of a positive value, at the same scale.

        Argument is reduced by a power of 2 into [1, 2), then
        ln y = 2 atanh((y-1)/(y+1)) with t = (y-1)/(y+1) <= 1/3.
        """
        if self.mantissa <= 0:
            raise ValueError("ln requires a positive BigFix")
        w = self.scale + 10
        one = 10 ** w
        b = self.mantissa.bit_length() - 1
        # y = mantissa / 2^b in [1, 2), at scale w
        y = _div_nearest(self.mantissa * one, 1 << b) if b >= 0 else 0
        t = _div_nearest((y - one) * one, y + one)
        t2 = t * t
        term = t
        acc = t
        i = 1
        while term:
            term = _div_nearest(term * t2, one * one)
            acc += term // (2 * i + 1)
            i += 1
        # ln(value) = ln y + b ln 2 - scale ln 10
        v = 2 * acc + b * _ln2_fix(w) - self.scale * _ln10_fix(w)
        return BigFix(_div_nearest(v, 10 ** (w - self.scale)), self.scale)

    def log10_floor(self) -> int:
        """floor(log10 |value|) for a nonzero value, exact."""
        if self.mantissa == 0:
            raise ValueError("log10_floor of zero")
        return len(str(abs(self.mantissa))) - 1 - self.scale


# ---------------------------------------------------------------------------
# Euler-Maclaurin oracles
# ---------------------------------------------------------------------------

_MAX_DIGITS = 10000
_GUARD = 15


def _em_parameters_gamma(target: int) -> tuple[int, int]:
    """Pick N = 2^j and term count K so the first omitted Euler-Maclaurin
    term for H_N - ln N is below 10**-target.  Uses the bound
    |B_{2k}| <= 3.3 (2k)! / (2 pi)^{2k}."""
    for j in (13, 15, 17, 20, 22):
        n = 1 << j
        log2pin = math.log10(2 * math.pi * n)
        lb_prev = None
        for k in range(1, 1201):
            lb = (math.log10(3.3) + math.lgamma(2 * k + 1) / LN10
                  - math.log10(2 * k) - 2 * k * log2pin)
            if lb < -target:
                # term k is the first omitted one
                return j, k - 1
            if lb_prev is not None and lb > lb_prev:
                break  # terms started growing; N too small
            lb_prev = lb
    raise PrecisionError("no Euler-Maclaurin parameters for %d digits" % target)


_GAMMA_CACHE: dict[int, int] = {}


def gamma_const(digits: int) -> BigFix:
    """Euler's constant, correct to `digits` decimal digits.

    H_N = ln N + gamma + 1/(2N) - sum_{k>=1} B_{2k}/(2k N^{2k}) with the
    truncation error bounded by the first omitted term; N is a power of
    two so ln N needs only ln 2.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if digits > _MAX_DIGITS:
        raise PrecisionError("gamma_const supports at most %d digits" % _MAX_DIGITS)
    if digits in _GAMMA_CACHE:
        return BigFix(_GAMMA_CACHE[digits], digits)
    w = digits + _GUARD
    j, kk = _em_parameters_gamma(digits + 10)
    n = 1 << j
    one = 10 ** w
    h = 0
    for k in range(1, n + 1):
        h += _div_nearest(one, k)
    acc = h - j * _ln2_fix(w) - _div_nearest(one, 2 * n)
    _extend_tangent(kk)  # one triangle build instead of incremental growth
    npow = 1
    n2 = n * n
    for k in range(1, kk + 1):
        npow *= n2
        b = bernoulli_number(2 * k)
        acc += _div_nearest(b.numerator * one, b.denominator * 2 * k * npow)
    mant = _div_nearest(acc, 10 ** _GUARD)
    _GAMMA_CACHE[digits] = mant
    return BigFix(mant, digits)


def _em_parameters_zeta(m: int, target: int) -> tuple[int, int]:
    lgm = math.lgamma(m)
    for h in (8, 10, 12, 14, 16):
        n = 1 << h
        lgn = math.log10(n)
        lb_prev = None
        for j in range(1, 1201):
            lb = (math.log10(3.3) + (math.lgamma(m + 2 * j - 1) - lgm) / LN10
                  - 2 * j * math.log10(2 * math.pi) - (m + 2 * j - 1) * lgn)
            if lb < -target:
                return h, j - 1
            if lb_prev is not None and lb > lb_prev:
                break
            lb_prev = lb
    raise PrecisionError("no Euler-Maclaurin parameters for zeta(%d)" % m)


_ZETA_CACHE: dict[tuple[int, int], int] = {}


def zeta_const(m: int, digits: int) -> BigFix:
    """zeta(m) for integer m >= 2, correct to `digits` decimal digits.

    zeta(m) = sum_{k<=N} k^-m + N^{1-m}/(m-1) - N^-m/2
              + sum_{j>=1} B_{2j}/(2j)! (m)_{2j-1} N^{-m-2j+1},
    truncation error bounded by the first omitted term (m real > 1).
    """
    if m < 2:
        raise ValueError("zeta_const requires m >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if digits > _MAX_DIGITS:
        raise PrecisionError("zeta_const supports at most %d digits" % _MAX_DIGITS)
    key = (m, digits)
    if key in _ZETA_CACHE:
        return BigFix(_ZETA_CACHE[key], digits)
    w = digits + _GUARD
    h, jj = _em_parameters_zeta(m, digits + 10)
    n = 1 << h
    one = 10 ** w
    acc = 0
    for k in range(1, n + 1):
        acc += _div_nearest(one, k ** m)
    acc += _div_nearest(one, (m - 1) * n ** (m - 1))
    acc -= _div_nearest(one, 2 * n ** m)
    _extend_tangent(jj)
    for j in range(1, jj + 1):
        b = bernoulli_number(2 * j)
        pochm = poch(m, 2 * j - 1)  # integer rising factorial
        acc += _div_nearest(b.numerator * pochm * one,
                            b.denominator * factorial(2 * j) * n ** (m + 2 * j - 1))
    mant = _div_nearest(acc, 10 ** _GUARD)
    _ZETA_CACHE[key] = mant
    return BigFix(mant, digits)

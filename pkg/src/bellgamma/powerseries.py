"""Dense truncated power series over exact rationals.

A SeriesQ of order N carries coefficients for z^0 .. z^N; operations on
order-N inputs yield order-N outputs and never look past the truncation.
Everything is exact Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .numerics import Rat


class SeriesQ:
    """Truncated formal power series sum_{i<=order} coeffs[i] * z^i."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = cs[: order + 1]
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "SeriesQ":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "SeriesQ":
        return cls([1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return (isinstance(other, SeriesQ) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __repr__(self) -> str:
        return f"SeriesQ({self.coeffs!r})"

    def _same_order(self, other: "SeriesQ") -> None:
        if self.order != other.order:
            raise ValueError("series order mismatch")

    def __add__(self, other: "SeriesQ") -> "SeriesQ":
        self._same_order(other)
        return SeriesQ([a + b for a, b in zip(self.coeffs, other.coeffs)],
                       self.order)

    def __sub__(self, other: "SeriesQ") -> "SeriesQ":
        self._same_order(other)
        return SeriesQ([a - b for a, b in zip(self.coeffs, other.coeffs)],
                       self.order)

    def __neg__(self) -> "SeriesQ":
        return SeriesQ([-a for a in self.coeffs], self.order)

    def scale(self, c) -> "SeriesQ":
        c = Fraction(c)
        return SeriesQ([c * a for a in self.coeffs], self.order)


def ps_mul(s: SeriesQ, t: SeriesQ) -> SeriesQ:
    """Truncated Cauchy product."""
    s._same_order(t)
    n = s.order
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(s.coeffs):
        if not a:
            continue
        for j in range(n + 1 - i):
            b = t.coeffs[j]
            if b:
                out[i + j] += a * b
    return SeriesQ(out, n)


def ps_recip(s: SeriesQ) -> SeriesQ:
    """Multiplicative inverse; requires a nonzero constant term."""
    if s.coeffs[0] == 0:
        raise ValueError("ps_recip requires s(0) != 0")
    n = s.order
    c0 = s.coeffs[0]
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / c0
    for i in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            if s.coeffs[j]:
                acc += s.coeffs[j] * out[i - j]
        out[i] = -acc / c0
    return SeriesQ(out, n)


def ps_exp(s: SeriesQ) -> SeriesQ:
    """exp(s) for s(0) = 0, via (exp s)' = (exp s) * s'."""
    if s.coeffs[0] != 0:
        raise ValueError("ps_exp requires s(0) = 0")
    n = s.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for i in range(1, n + 1):
        # i * out[i] = sum_{j=1..i} j * s[j] * out[i-j]
        acc = Fraction(0)
        for j in range(1, i + 1):
            if s.coeffs[j]:
                acc += j * s.coeffs[j] * out[i - j]
        out[i] = acc / i
    return SeriesQ(out, n)


def ps_log1p(s: SeriesQ) -> SeriesQ:
    """log(1 + s) for s(0) = 0, by integrating s'/(1+s)."""
    if s.coeffs[0] != 0:
        raise ValueError("ps_log1p requires s(0) = 0")
    n = s.order
    one_plus = SeriesQ([Fraction(1)] + list(s.coeffs[1:]), n)
    inv = ps_recip(one_plus)
    # derivative of s, truncated to order n-1 then padded
    out = [Fraction(0)] * (n + 1)
    for i in range(1, n + 1):
        # coefficient of z^{i-1} in s' * inv
        acc = Fraction(0)
        for j in range(1, i + 1):
            if s.coeffs[j]:
                acc += j * s.coeffs[j] * inv.coeffs[i - j]
        out[i] = acc / i
    return SeriesQ(out, n)

"""Sparse polynomials over Q in the formal symbols g, z2, ..., zM.

g stands for Euler's constant and z_m for zeta(m); identities between
the approximation sequences live in this ring, where they can be checked
exactly.  Exponent keys are tuples (e_g, e_z2, ..., e_zM) of length M;
M is the largest zeta index in scope (M = 1 means g only).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .bell import bell_ladder
from .numerics import BigFix, Rat, binom


class SymPoly:
    """Immutable sparse polynomial keyed by exponent tuples."""

    __slots__ = ("m_index", "terms")

    def __init__(self, m_index: int, terms=None):
        if m_index < 1:
            raise ValueError("m_index must be >= 1")
        self.m_index = m_index
        clean = {}
        for expo, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            expo = tuple(expo)
            if len(expo) != m_index or any(e < 0 for e in expo):
                raise ValueError("bad exponent vector %r for M=%d"
                                 % (expo, m_index))
            clean[expo] = c
        self.terms = clean

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, m_index: int) -> "SymPoly":
        return cls(m_index, {})

    @classmethod
    def one(cls, m_index: int) -> "SymPoly":
        return cls.const(1, m_index)

    @classmethod
    def const(cls, c, m_index: int) -> "SymPoly":
        return cls(m_index, {(0,) * m_index: Fraction(c)})

    @classmethod
    def gamma(cls, m_index: int) -> "SymPoly":
        e = [0] * m_index
        e[0] = 1
        return cls(m_index, {tuple(e): Fraction(1)})

    @classmethod
    def zeta(cls, m: int, m_index: int) -> "SymPoly":
        if not 2 <= m <= m_index:
            raise ValueError(f"zeta index {m} out of scope (M={m_index})")
        e = [0] * m_index
        e[m - 1] = 1
        return cls(m_index, {tuple(e): Fraction(1)})

    # ring operations --------------------------------------------------------

    def _same(self, other: "SymPoly") -> None:
        if self.m_index != other.m_index:
            raise ValueError("SymPoly M mismatch: %d vs %d"
                             % (self.m_index, other.m_index))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other, self.m_index)
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return SymPoly(self.m_index, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.m_index, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other, self.m_index)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SymPoly(self.m_index,
                           {e: c * v for e, v in self.terms.items()})
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return SymPoly(self.m_index, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SymPoly.one(self.m_index)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other, self.m_index)
        return (isinstance(other, SymPoly) and self.m_index == other.m_index
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.m_index, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # inspection -------------------------------------------------------------

    def coeff(self, expo) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def gamma_degree(self) -> int:
        return max((e[0] for e in self.terms), default=0)

    def constant_part(self) -> Fraction:
        return self.terms.get((0,) * self.m_index, Fraction(0))

    # rendering --------------------------------------------------------------

    @staticmethod
    def _mono_str(expo) -> str:
        parts = []
        names = ["g"] + [f"z{m}" for m in range(2, len(expo) + 1)]
        for name, e in zip(names, expo):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # sort: total degree descending, then lexicographic
        keys = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        out = []
        for e in keys:
            c = self.terms[e]
            mono = self._mono_str(e)
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            if out and not piece.startswith("-"):
                out.append("+ " + piece)
            elif out:
                out.append("- " + piece[1:])
            else:
                out.append(piece)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"SymPoly({self})"


def sp_add(p: SymPoly, q: SymPoly) -> SymPoly:
    return p + q


def sp_mul(p: SymPoly, q: SymPoly) -> SymPoly:
    return p * q


def _alpha_args(a: int, mu: int, m_index: int) -> list:
    """Bell arguments x_1 = g, x_m = (m-1)! (a + (-1)^m (a-1)) z_m."""
    xs = [SymPoly.gamma(m_index)]
    for m in range(2, mu + 1):
        scal = factorial(m - 1) * (a + (-1) ** m * (a - 1))
        xs.append(scal * SymPoly.zeta(m, m_index))
    return xs


def alpha_poly(a: int, mu: int, m_index: int | None = None) -> SymPoly:
    """Y_mu at the gamma/zeta point, as a SymPoly; alpha_poly(a,0) = 1."""
    if a < 2:
        raise ValueError("a must be >= 2")
    if mu < 0 or mu > a - 1:
        raise ValueError(f"mu={mu} out of range for a={a}")
    if m_index is None:
        m_index = max(a - 1, 1)
    if mu == 0:
        return SymPoly.one(m_index)
    return bell_ladder(_alpha_args(a, mu, m_index))[mu]


def alpha_mu(a: int, mu: int) -> SymPoly:
    """The limit combination the approximations converge to, 1 <= mu <= a-1."""
    if not 1 <= mu <= a - 1:
        raise ValueError(f"alpha_mu requires 1 <= mu <= a-1, got mu={mu}")
    return alpha_poly(a, mu)


def lambda_coeff(a: int, mu: int, nu: int) -> SymPoly:
    """binom(mu, nu) * Y_{mu-nu} at the gamma/zeta point."""
    if not 1 <= nu <= mu:
        raise ValueError("lambda_coeff requires 1 <= nu <= mu")
    if not 1 <= mu <= a - 1:
        raise ValueError("lambda_coeff requires 1 <= mu <= a-1")
    return binom(mu, nu) * alpha_poly(a, mu - nu)


def sp_eval(p: SymPoly, gamma_val: BigFix, zeta_vals) -> BigFix:
    """Substitute numeric values; zeta_vals supplies z2..zM in order.

    Coefficients stay exact; each monomial is rounded once per factor at
    the working scale.
    """
    vals = [gamma_val] + list(zeta_vals)
    if len(vals) != p.m_index:
        raise ValueError("expected %d symbol values, got %d"
                         % (p.m_index, len(vals)))
    scale = gamma_val.scale
    for v in vals:
        if v.scale != scale:
            raise ValueError("mixed scales in sp_eval")
    # power tables, computed once per symbol
    max_e = [0] * p.m_index
    for e in p.terms:
        for i, ei in enumerate(e):
            max_e[i] = max(max_e[i], ei)
    pows = []
    for v, me in zip(vals, max_e):
        row = [BigFix.from_int(1, scale)]
        for _ in range(me):
            row.append(row[-1] * v)
        pows.append(row)
    acc = BigFix.from_int(0, scale)
    # deterministic order for reproducible rounding
    for e in sorted(p.terms):
        term = BigFix.from_int(1, scale)
        for i, ei in enumerate(e):
            if ei:
                term = term * pows[i][ei]
        acc = acc + term.mul_rat(p.terms[e])
    return acc

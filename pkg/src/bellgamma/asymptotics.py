"""Growth exponents, the q_n asymptotic formula, and saddle-root checks.

The coefficients b_m(a) come from an exact power-series log expansion;
they feed three exponent evaluations: the linear-form decay rate, its
corollary form with cos(2 pi m / a) - 1 factors, and the log-scale
asymptotic main term of q_n.  All coefficients stay rational until the
final float evaluation.  Saddle roots of e^{i pi u} n (t-1)^a - t^{a-1}
are refined by complex Newton iteration from the order-3 expansion seed.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import Rat, factorial, poch
from .powerseries import SeriesQ, ps_log1p

PROFILE_KINDS = ("theorem-linear-form", "theorem-qn", "corollary")


def lagrange_coeff(a: int, m: int) -> Rat:
    """c_m = (2 - m/a)_{m-1} / m!, the series-reversion coefficient."""
    if a < 2 or m < 1:
        raise ValueError("require a >= 2 and m >= 1")
    return poch(Fraction(2) - Fraction(m, a), m - 1) / factorial(m)


def bm_coeffs(a: int) -> list:
    """b_1(a)..b_a(a): coefficients of -a log(1 + sum_{m<=a} (2-(m+1)/a)_m
    z^m/(m+1)!) minus sum_{m<=a} (2-m/a)_{m-1} z^m/m!, all exact."""
    if a < 2:
        raise ValueError("a must be at least 2")
    s = [Fraction(0)] * (a + 1)
    for m in range(1, a + 1):
        s[m] = poch(Fraction(2) - Fraction(m + 1, a), m) / factorial(m + 1)
    logpart = ps_log1p(SeriesQ(s, a))
    return [-a * logpart[m] - lagrange_coeff(a, m) for m in range(1, a + 1)]


def linform_exponent(a: int, n: int) -> float:
    """sum_{m=1}^{a-1} (-1)^m b_m(a) cos(2 pi m / a) n^{1-m/a}."""
    b = bm_coeffs(a)
    return sum((-1) ** m * float(b[m - 1]) * math.cos(2 * math.pi * m / a)
               * float(n) ** (1 - m / a) for m in range(1, a))


def corollary_exponent(a: int, n: int) -> float:
    """sum_{m=1}^{a-1} (-1)^m b_m(a) (cos(2 pi m / a) - 1) n^{1-m/a}."""
    b = bm_coeffs(a)
    return sum((-1) ** m * float(b[m - 1])
               * (math.cos(2 * math.pi * m / a) - 1)
               * float(n) ** (1 - m / a) for m in range(1, a))


def qn_log_asymptotic(a: int, n: int) -> float:
    """Natural log of the q_n main term.

    log n! - log(sqrt(a) (2 pi)^{(a-1)/2}) - (a-1)^2/(2a) log n
    + sum_{m=1}^{a} (-1)^m b_m(a) n^{1-m/a}; the m = a term is the
    constant b_a(a).  The factorial log is taken on the exact integer.
    """
    if a < 2:
        raise ValueError("a must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    b = bm_coeffs(a)
    val = math.log(factorial(n))
    val -= 0.5 * math.log(a) + (a - 1) / 2 * math.log(2 * math.pi)
    val -= (a - 1) ** 2 / (2 * a) * math.log(n)
    val += sum((-1) ** m * float(b[m - 1]) * float(n) ** (1 - m / a)
               for m in range(1, a + 1))
    return val


@dataclass(frozen=True)
class ExponentProfile:
    """Exact b coefficients for one exponent family."""

    a: int
    b: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError("unknown kind %r" % (self.kind,))
        if len(self.b) != self.a:
            raise ValueError("need b_1..b_a")
        if self.b[0] != -self.a or self.b[1] != Fraction(1 - self.a, 2):
            raise ValueError("b coefficients fail closed-form check")
        if self.a >= 3 and self.b[2] != Fraction((1 - self.a) * (2 * self.a - 3), 6 * self.a):
            raise ValueError("b coefficients fail closed-form check")


def exponent_profile(a: int, kind: str) -> ExponentProfile:
    return ExponentProfile(a, tuple(bm_coeffs(a)), kind)


def profile_to_json(profile: ExponentProfile) -> str:
    """Deterministic JSON with b entries as fraction strings."""
    return json.dumps({"a": profile.a, "kind": profile.kind,
                       "b": [str(v) for v in profile.b]},
                      separators=(", ", ": "))


@dataclass(frozen=True)
class CPoint:
    """A double-precision complex point; components must be finite."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("CPoint components must be finite")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


class RootRefinementError(ArithmeticError):
    """Newton refinement failed; carries the seed and last residual."""

    def __init__(self, seed: complex, residual: float):
        super().__init__("no convergence from seed %r (residual %.3g)"
                         % (seed, residual))
        self.seed = seed
        self.residual = residual


def saddle_seed(a: int, u: int, n: int, k: int) -> complex:
    """Order-3 expansion seed for the k-th root, k = 0..a-1."""
    t = 1 + 0j
    for m in (1, 2, 3):
        phase = cmath.exp(1j * m * (2 * math.pi * k - math.pi * u) / a)
        t += float(lagrange_coeff(a, m)) * phase / n ** (m / a)
    return t


def saddle_roots(a: int, u: int, n: int) -> list:
    """All a roots of e^{i pi u} n (t-1)^a - t^{a-1}, Newton-refined.

    Each root starts from saddle_seed and must reach |p(t)| < 1e-10 n
    within 100 iterations; failure raises RootRefinementError with the
    seed and final residual.
    """
    if a < 2:
        raise ValueError("a must be at least 2")
    if abs(u) > a:
        raise ValueError("require |u| <= a")
    if n < 1000:
        raise ValueError("n must be at least 10^3")
    e_u = cmath.exp(1j * math.pi * u)

    def p(t):
        return e_u * n * (t - 1) ** a - t ** (a - 1)

    def dp(t):
        return e_u * n * a * (t - 1) ** (a - 1) - (a - 1) * t ** (a - 2)

    tol = 1e-10 * n
    roots = []
    for k in range(a):
        seed = saddle_seed(a, u, n, k)
        t = seed
        for _ in range(100):
            val = p(t)
            if abs(val) < tol:
                break
            t = t - val / dp(t)
        else:
            raise RootRefinementError(seed, abs(p(t)))
        roots.append(CPoint(t.real, t.imag))
    if len({(r.re, r.im) for r in roots}) != a:
        raise ArithmeticError("refined roots collide; expected %d distinct" % a)
    return roots

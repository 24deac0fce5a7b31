"""Backend selection for the sequence-summation kernel.

Prefers the compiled extension (bellgamma._native) and falls back to
the pure-Python twin.  Setting BELLGAMMA_PURE=1 forces the fallback,
which is also how the two implementations are compared in tests and
benchmarks.  Both expose the same integer-level contract; this module
adds the Fraction wrapping.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .numerics import lcm_upto

if os.environ.get("BELLGAMMA_PURE", "") not in ("", "0"):
    from . import _pure as _impl
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl


def backend_name() -> str:
    """Name of the active kernel backend: "native" or "pure"."""
    return _impl.backend_name()


def raw_tables(a: int, n_max: int, mu_max: int):
    """Integer-level kernel output: (q, pnum, d).

    q[n] is exact; pnum[mu-1][n] = p_{n,mu} * d^mu with d = lcm(1..n_max).
    """
    if a < 2:
        raise ValueError("a must be at least 2")
    if n_max < 0 or mu_max < 0:
        raise ValueError("n_max and mu_max must be nonnegative")
    d = lcm_upto(n_max) if (mu_max and n_max >= 1) else 1
    q, pnum = _impl.seq_tables(a, n_max, mu_max, d)
    return q, pnum, d


def seq_tables(a: int, n_max: int, mu_max: int):
    """(q, p) with q[n] = q_n (int) and p[mu-1][n] = p_{n,mu} (Fraction)."""
    q, pnum, d = raw_tables(a, n_max, mu_max)
    p = [[Fraction(v, d ** (mu + 1)) for v in row]
         for mu, row in enumerate(pnum)]
    return q, p

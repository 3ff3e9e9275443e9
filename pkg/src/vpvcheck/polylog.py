"""Integer-order polylogarithms, zeta values and related constants.

All evaluators work in IEEE double precision.  Series are summed with
``math.fsum`` so the result does not depend on the order of the terms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy.optimize import bisect

__all__ = [
    "DomainError", "DivergenceError", "SeriesInfo", "MIN_ORDER", "MAX_ORDER",
    "stirling2", "li_neg", "li_pos", "li", "eta", "zeta", "rogers_l",
    "watson_cubic", "watson_roots", "lehmer_polynomial", "LEHMER_ALPHA",
    "PHI", "LOG2", "PI",
]

PI = math.pi
LOG2 = math.log(2.0)
PHI = (1.0 + math.sqrt(5.0)) / 2.0
# Largest real root of Lehmer's degree-10 polynomial (Salem number).
LEHMER_ALPHA = 1.176280818259917506544

MIN_ORDER = -11
MAX_ORDER = 12
_MAX_TERMS = 200_000


class DomainError(ValueError):
    """An argument lies outside the region where an evaluator is defined."""


class DivergenceError(DomainError):
    """The requested value is a pole or a divergent series."""


@dataclass(frozen=True)
class SeriesInfo:
    method: str
    terms: int
    tail_bound: float


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k), exact."""
    if n < 0 or k < 0:
        raise DomainError(f"stirling2 needs n, k >= 0, got n={n}, k={k}")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _check_order(s: int) -> int:
    if isinstance(s, bool) or int(s) != s:
        raise DomainError(f"polylog order must be an integer, got {s!r}")
    s = int(s)
    if not MIN_ORDER <= s <= MAX_ORDER:
        raise DomainError(f"polylog order {s} outside supported range [{MIN_ORDER}, {MAX_ORDER}]")
    return s


def li_neg(n: int, z: float) -> float:
    """Li_{-n}(z) for n >= 0 and |z| < 1 as a finite Stirling sum in w = z/(1-z)."""
    n = int(n)
    if n < 0 or n > -MIN_ORDER:
        raise DomainError(f"li_neg needs 0 <= n <= {-MIN_ORDER}, got {n}")
    z = float(z)
    if not abs(z) < 1.0:
        raise DomainError(f"Li_{{-{n}}}(z) needs |z| < 1, got z={z}")
    # exact rational arithmetic at the given float avoids the cancellation for z < 0
    zq = Fraction(z)
    w = zq / (1 - zq)
    return float(sum(math.factorial(k) * stirling2(n + 1, k + 1) * w ** (k + 1)
                     for k in range(n + 1)))


def _direct_series(s: int, z: float, rtol: float = 1e-17) -> tuple[float, SeriesInfo]:
    # sum z^k / k^s for |z| < 1; stops once the geometric tail bound is negligible
    terms = []
    zk = 1.0
    k = 0
    az = abs(z)
    bound = 0.0
    while k < _MAX_TERMS:
        k += 1
        zk *= z
        terms.append(zk / k ** s)
        bound = abs(zk) * az / (1.0 - az) / (k + 1) ** s
        if bound <= rtol * az:
            break
    return math.fsum(terms), SeriesInfo("series", k, bound)


def eta(s: float, n: int = 48) -> float:
    """Dirichlet eta function for real s > 0 by accelerated alternating summation."""
    s = float(s)
    if not s > 0:
        raise DomainError(f"eta(s) needs s > 0, got {s}")
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b, c = -1.0, -d
    terms = []
    for k in range(n):
        c = b - c
        terms.append(c / (k + 1.0) ** s)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return math.fsum(terms) / d


def zeta(s: float) -> float:
    """Riemann zeta for real s > 1."""
    s = float(s)
    if s == 1.0:
        raise DivergenceError("zeta(s) has a pole at s = 1")
    if not s > 1.0:
        raise DomainError(f"zeta(s) is only implemented for s > 1, got {s}")
    if s > 60:
        return 1.0 + 2.0 ** -s + 3.0 ** -s
    return eta(s) / (1.0 - 2.0 ** (1.0 - s))


def _li2_unit(z: float) -> tuple[float, SeriesInfo]:
    if 0.5 < z < 1.0:
        v, info = _direct_series(2, 1.0 - z)
        val = PI ** 2 / 6.0 - math.log(z) * math.log1p(-z) - v
        return val, SeriesInfo("reflection", info.terms, info.tail_bound)
    if -1.0 < z < -0.5:
        # Landen map sends [-1, -1/2) into (1/3, 1/2]
        v, info = _direct_series(2, z / (z - 1.0))
        val = -v - 0.5 * math.log1p(-z) ** 2
        return val, SeriesInfo("landen", info.terms, info.tail_bound)
    return _direct_series(2, z)


def _li_inverted(s: int, z: float) -> tuple[float, SeriesInfo]:
    # z < -1: map to -1/z in (-1, 0) through the inversion relation
    x = -z
    lx = math.log(x)
    inner, info = li_pos(s, -1.0 / x, full_output=True)
    parts = [-lx ** s / math.factorial(s)]
    for k in range(1, s // 2 + 1):
        parts.append(-2.0 * lx ** (s - 2 * k) / math.factorial(s - 2 * k) * eta(2 * k))
    sign = -1.0 if s % 2 else 1.0
    val = math.fsum(parts) - sign * inner
    return val, SeriesInfo("inversion", info.terms, info.tail_bound)


def li_pos(s: int, z: float, full_output: bool = False):
    """Li_s(z) for integer s >= 1 and real z <= 1 (z < 1 when s = 1)."""
    s = _check_order(s)
    if s < 1:
        raise DomainError(f"li_pos needs s >= 1, got {s}")
    z = float(z)
    if math.isnan(z) or z > 1.0:
        raise DomainError(f"Li_{s}(z) is real only for z <= 1, got z={z}")
    if s == 1:
        if z == 1.0:
            raise DivergenceError("Li_1(1) diverges")
        val, info = -math.log1p(-z), SeriesInfo("closed", 0, 0.0)
    elif z == 1.0:
        val, info = zeta(s), SeriesInfo("zeta", 0, 0.0)
    elif z == 0.0:
        val, info = 0.0, SeriesInfo("closed", 0, 0.0)
    elif z == -1.0:
        val, info = -eta(s), SeriesInfo("eta", 0, 0.0)
    elif z < -1.0:
        val, info = _li_inverted(s, z)
    elif s == 2:
        val, info = _li2_unit(z)
    else:
        val, info = _direct_series(s, z)
    return (val, info) if full_output else val


def li(s: int, z: float) -> float:
    """Integer-order polylogarithm Li_s(z) on the real axis."""
    s = _check_order(s)
    if s >= 1:
        return li_pos(s, z)
    return li_neg(-s, z)


def rogers_l(x: float) -> float:
    """Rogers dilogarithm normalised so that L(1) = 1."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"rogers_l needs 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    return 6.0 / PI ** 2 * (li(2, x) + 0.5 * math.log(x) * math.log1p(-x))


def watson_cubic(x: float) -> float:
    return x ** 3 + 2.0 * x ** 2 - x - 1.0


_WATSON_BRACKETS = ((0.5, 1.0), (-0.9, -0.2), (-2.5, -2.0))


@lru_cache(maxsize=1)
def watson_roots() -> tuple[float, float, float]:
    """Return (alpha, beta, gamma) = (r1, -r2, -1/r3) for the roots of x^3+2x^2-x-1."""
    roots = []
    for lo, hi in _WATSON_BRACKETS:
        if watson_cubic(lo) * watson_cubic(hi) >= 0:
            raise RuntimeError(f"no sign change of the cubic on [{lo}, {hi}]")
        roots.append(bisect(watson_cubic, lo, hi, xtol=1e-15, maxiter=200))
    r1, r2, r3 = roots
    return r1, -r2, -1.0 / r3


def lehmer_polynomial(x: float) -> float:
    return (x ** 10 + x ** 9 - x ** 7 - x ** 6 - x ** 5 - x ** 4 - x ** 3 + x + 1)

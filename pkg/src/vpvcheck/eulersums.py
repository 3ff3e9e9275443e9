"""Finite power sums, double zeta values, parametric Euler sums and MTW sums.

Long one-dimensional sums run in numba kernels that keep every running
total in Neumaier-compensated form and add terms in ascending index order.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numba import njit
from scipy.integrate import quad

from .polylog import DomainError, eta, zeta

__all__ = [
    "EULER_GAMMA", "SeriesResult", "HarmonicState", "EulerSumKind", "MtwSignature",
    "power_sum", "power_sum_coefficients", "geom_power_sum", "finite_sum_terms",
    "double_zeta", "double_zeta_naive", "zeta_reduction", "euler_sum", "euler_sum_naive",
    "alternating_harmonic_series",
    "mtw_omega", "mtw_ensemble",
]

EULER_GAMMA = 0.57721566490153286061

# sum_{k=1}^n k^p as a polynomial in n, coefficients by ascending power
_POWER_SUM = {
    0: (Fraction(0), Fraction(1)),
    1: (Fraction(0), Fraction(1, 2), Fraction(1, 2)),
    2: (Fraction(0), Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)),
    3: (Fraction(0), Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)),
    4: (Fraction(0), Fraction(-1, 30), Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1, 5)),
}

_EXACT_GEOM_N = 400

# sum_{k=1}^n k^p z^k = [c(z) + sum_e z^(n+e) q_e(n)] / (1-z)^(p+1)
# c is given by ascending powers of z, each q_e by ascending powers of n
_GEOM_SUM = {
    0: ((0, 1), {1: (-1,)}),
    1: ((0, 1), {1: (-1, -1), 2: (0, 1)}),
    2: ((0, 1, 1), {1: (-1, -2, -1), 2: (-1, 2, 2), 3: (0, 0, -1)}),
    3: ((0, 1, 4, 1), {1: (-1, -3, -3, -1), 2: (-4, 0, 6, 3), 3: (-1, 3, -3, -3),
                       4: (0, 0, 0, 1)}),
    4: ((0, 1, 11, 11, 1), {1: (-1, -4, -6, -4, -1), 2: (-11, -12, 6, 12, 4),
                            3: (-11, 12, 6, -12, -6), 4: (-1, 4, -6, 4, 4),
                            5: (0, 0, 0, 0, -1)}),
}


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum with its error budget.

    ``tail`` estimates the omitted remainder, ``tail_bound`` is a cruder
    conservative bound and ``half_value``/``half_tail`` are the same
    quantities at depth // 2, used for convergence probing.
    """
    value: float
    depth: int
    tail: float
    tail_bound: float
    half_value: float
    half_tail: float

    @property
    def corrected(self) -> float:
        return self.value + self.tail

    @property
    def convergence_delta(self) -> float:
        return abs(self.corrected - (self.half_value + self.half_tail))


def _poly(coeffs, x):
    return sum(c * x ** i for i, c in enumerate(coeffs))


def power_sum_coefficients(p: int) -> tuple[Fraction, ...]:
    if p not in _POWER_SUM:
        raise DomainError(f"power sums are tabulated for p in 0..4, got {p}")
    return _POWER_SUM[p]


def power_sum(p: int, n: int) -> int:
    """Closed form of 1^p + ... + n^p for p in 1..4 (exact integer)."""
    if p not in (1, 2, 3, 4):
        raise DomainError(f"power_sum needs 1 <= p <= 4, got {p}")
    if n < 0:
        raise DomainError(f"power_sum needs n >= 0, got {n}")
    val = _poly(_POWER_SUM[p], Fraction(n))
    assert val.denominator == 1
    return int(val)


def geom_power_sum(p: int, n: int, z: float) -> float:
    """Closed form of sum_{k=1}^n k^p z^k for p in 1..4 and z != 1."""
    if p not in (1, 2, 3, 4):
        raise DomainError(f"geom_power_sum needs 1 <= p <= 4, got {p}")
    if n < 0:
        raise DomainError(f"geom_power_sum needs n >= 0, got {n}")
    z = float(z)
    if z == 1.0:
        raise DomainError("geom_power_sum is singular at z = 1; use power_sum instead")
    const, shifted = _GEOM_SUM[p]
    if n <= _EXACT_GEOM_N:
        # the numerator cancels badly near z = 1; evaluate it exactly at the given float
        zq = Fraction(z)
        num = _poly(const, zq) + sum(zq ** (n + e) * _poly(q, n) for e, q in shifted.items())
        return float(num / (1 - zq) ** (p + 1))
    parts = [_poly(const, z)]
    for e, q in shifted.items():
        parts.append(z ** (n + e) * _poly(q, n))
    return math.fsum(parts) / (1.0 - z) ** (p + 1)


def finite_sum_terms(p: int, x: float) -> list[tuple[float, float, int]]:
    """Write sum_{k=1}^n k^p x^k as a sum of coef * base**n * n**j.

    Returns ``(coef, base, j)`` triples valid for every n >= 0; p runs over 0..4.
    """
    x = float(x)
    if x == 1.0:
        return [(float(c), 1.0, j) for j, c in enumerate(power_sum_coefficients(p)) if c]
    if p not in _GEOM_SUM:
        raise DomainError(f"finite sums are tabulated for p in 0..4, got {p}")
    const, shifted = _GEOM_SUM[p]
    scale = (1.0 - x) ** -(p + 1)
    out = [(_poly(const, x) * scale, 1.0, 0)]
    for e, q in shifted.items():
        for j, c in enumerate(q):
            if c:
                out.append((c * x ** e * scale, x, j))
    return out


@njit(cache=True, nogil=True)
def _double_zeta_kernel(s, t, depth):
    half = depth // 2
    hs = 0.0
    hc = 0.0
    ss = 0.0
    sc = 0.0
    half_val = 0.0
    for n in range(2, depth + 1):
        x = (n - 1.0) ** -t
        u = hs + x
        if abs(hs) >= abs(x):
            hc += (hs - u) + x
        else:
            hc += (x - u) + hs
        hs = u
        term = (hs + hc) * float(n) ** -s
        u = ss + term
        if abs(ss) >= abs(term):
            sc += (ss - u) + term
        else:
            sc += (term - u) + ss
        ss = u
        if n == half:
            half_val = ss + sc
    return ss + sc, half_val


def _inner_asymptotic(t: float):
    """Smooth approximation of H_{x-1}^{(t)} for large real x."""
    if t == 1.0:
        return lambda x: math.log(x) + EULER_GAMMA - 0.5 / x - 1.0 / (12.0 * x * x)
    zt = zeta(t)
    return lambda x: zt - x ** (1.0 - t) / (t - 1.0) - 0.5 * x ** -t - t / 12.0 * x ** (-t - 1.0)


def _integral_tail(f, start: float) -> float:
    # midpoint rule: sum_{n > N} f(n) ~ integral of f over [N + 1/2, inf),
    # integrated after mapping x = a/u onto u in (0, 1]
    a = start + 0.5
    val, _ = quad(lambda u: f(a / u) * a / (u * u) if u > 0 else 0.0, 0.0, 1.0,
                  limit=200, epsabs=0.0, epsrel=1e-11)
    return val


def _check_depth(depth: int, minimum: int = 2) -> int:
    depth = int(depth)
    if depth < minimum:
        raise DomainError(f"depth must be at least {minimum}, got {depth}")
    return depth


def double_zeta(s: float, t: float, depth: int = 1_000_000, full_output: bool = False):
    """Truncated zeta(s, t) = sum_{n>m>0} n^-s m^-t up to n = depth."""
    s, t = float(s), float(t)
    if not s > 1.0 or not t >= 1.0:
        raise DomainError(f"double_zeta needs s > 1 and t >= 1, got s={s}, t={t}")
    depth = _check_depth(depth)
    value, half_value = _double_zeta_kernel(s, t, depth)
    if not full_output:
        return value
    inner = _inner_asymptotic(t)

    def tail(n):
        return _integral_tail(lambda x: x ** -s * inner(x), n)

    if t == 1.0:
        bound = depth ** (1.0 - s) * (math.log(depth) + 1.0 + 1.0 / (s - 1.0)) / (s - 1.0)
    else:
        bound = zeta(t) * depth ** (1.0 - s) / (s - 1.0)
    return SeriesResult(value, depth, tail(depth), bound, half_value, tail(depth // 2))


def double_zeta_naive(s: float, t: float, depth: int) -> float:
    """Direct double loop, O(depth^2); reference for small depths."""
    return math.fsum(n ** -s * m ** -t for n in range(2, depth + 1) for m in range(1, n))


def zeta_reduction(s: int) -> float:
    """Closed form of zeta(s, 1) for integer s >= 2 in terms of single zeta values."""
    if int(s) != s or s < 2:
        raise DomainError(f"zeta_reduction needs an integer s >= 2, got {s}")
    s = int(s)
    parts = [0.5 * s * zeta(s + 1)]
    parts += [-0.5 * zeta(k + 1) * zeta(s - k) for k in range(1, s - 1)]
    return math.fsum(parts)


class EulerSumKind(enum.Enum):
    """The eight parametric Euler-sum families.

    The first letter fixes the inner prefix sum (harmonic power, alternating
    harmonic power, generalized harmonic, alternating generalized harmonic);
    the ``a``/``alpha`` variants of the outer sum carry (-1)^(k+1).
    """
    s_h = "s_h"
    s_a = "s_a"
    a_h = "a_h"
    a_a = "a_a"
    sigma_h = "sigma_h"
    sigma_a = "sigma_a"
    alpha_h = "alpha_h"
    alpha_a = "alpha_a"

    @property
    def inner_code(self) -> int:
        # 0: H_k^m, 1: A_k^m, 2: H_{k,m}, 3: alternating H_{k,m}
        return {"s_h": 0, "a_h": 0, "s_a": 1, "a_a": 1,
                "sigma_h": 2, "alpha_h": 2, "sigma_a": 3, "alpha_a": 3}[self.value]

    @property
    def alternating_outer(self) -> bool:
        return self.value in ("a_h", "a_a", "alpha_h", "alpha_a")


@dataclass
class HarmonicState:
    """Running prefix sums H_k, the alternating H_k and H_{k,m}."""
    m: int = 1
    k: int = 0
    H_plain: float = 0.0
    H_alt: float = 0.0
    H_m: float = 0.0
    _comp: list = field(default_factory=lambda: [0.0, 0.0, 0.0], repr=False)

    def advance(self) -> "HarmonicState":
        self.k += 1
        k = self.k
        sign = 1.0 if k % 2 else -1.0
        self.H_plain = self._add(0, self.H_plain, 1.0 / k)
        self.H_alt = self._add(1, self.H_alt, sign / k)
        self.H_m = self._add(2, self.H_m, float(k) ** -self.m)
        return self

    def _add(self, i, s, x):
        t = s + x
        if abs(s) >= abs(x):
            self._comp[i] += (s - t) + x
        else:
            self._comp[i] += (x - t) + s
        return t

    def values(self) -> tuple[float, float, float]:
        c = self._comp
        return self.H_plain + c[0], self.H_alt + c[1], self.H_m + c[2]


@njit(cache=True, nogil=True)
def _inner_step(code, m, k):
    sign = 1.0 if k % 2 == 1 else -1.0
    if code == 0:
        return 1.0 / k
    if code == 1:
        return sign / k
    if code == 2:
        return float(k) ** -m
    return sign * float(k) ** -m


@njit(cache=True, nogil=True)
def _euler_kernel(code, alt_outer, m, n, depth):
    half = depth // 2
    hs = 0.0
    hc = 0.0
    ss = 0.0
    sc = 0.0
    half_val = 0.0
    half_next = 0.0
    for k in range(1, depth + 2):
        x = _inner_step(code, m, k)
        u = hs + x
        if abs(hs) >= abs(x):
            hc += (hs - u) + x
        else:
            hc += (x - u) + hs
        hs = u
        h = hs + hc
        inner = h ** m if code < 2 else h
        term = inner / (k + 1.0) ** n
        if k == half + 1:
            half_next = term
        if k == depth + 1:
            return ss + sc, half_val, term, half_next
        if alt_outer and k % 2 == 0:
            term = -term
        u = ss + term
        if abs(ss) >= abs(term):
            sc += (ss - u) + term
        else:
            sc += (term - u) + ss
        ss = u
        if k == half:
            half_val = ss + sc
    return ss + sc, half_val, 0.0, half_next


def _check_euler_args(kind, m, n):
    kind = EulerSumKind(kind)
    if int(m) != m or m < 1 or int(n) != n or n < 1:
        raise DomainError(f"euler_sum needs integers m, n >= 1, got m={m}, n={n}")
    if n == 1 and not kind.alternating_outer:
        raise DomainError(f"{kind.value}(m, 1) diverges; n >= 2 is needed for a non-alternating outer sum")
    return kind, int(m), int(n)


def euler_sum(kind, m: int, n: int, depth: int = 1_000_000, full_output: bool = False):
    """Partial sum of a parametric Euler sum, k = 1..depth."""
    kind, m, n = _check_euler_args(kind, m, n)
    depth = _check_depth(depth)
    code = kind.inner_code
    value, half_value, nxt, half_nxt = _euler_kernel(code, kind.alternating_outer, m, n, depth)
    if not full_output:
        return value
    if kind.alternating_outer:
        def tail(N, a_next):
            return (1.0 if N % 2 == 0 else -1.0) * a_next / 2.0
        t_full, t_half = tail(depth, nxt), tail(depth // 2, half_nxt)
        bound = abs(nxt)
    else:
        power = m if code < 2 else 1
        if code == 0 or (code == 2 and m == 1):
            def inner(x):
                return math.log(x) + EULER_GAMMA + 0.5 / x - 1.0 / (12.0 * x * x)
        elif code == 1:
            def inner(x):
                return math.log(2.0)
        elif code == 2:
            zm = zeta(m)

            def inner(x):
                return zm - x ** (1.0 - m) / (m - 1.0) + 0.5 * x ** -m
        else:
            em = eta(m)

            def inner(x):
                return em

        def tail(N):
            return _integral_tail(lambda x: inner(x) ** power / (x + 1.0) ** n, N)
        t_full, t_half = tail(depth), tail(depth // 2)
        last = abs(inner(depth) ** power / (depth + 1.0) ** n)
        bound = last * depth
    return SeriesResult(value, depth, t_full, bound, half_value, t_half)


def euler_sum_naive(kind, m: int, n: int, depth: int) -> float:
    """Evaluate the defining double sum directly, recomputing each prefix sum."""
    kind, m, n = _check_euler_args(kind, m, n)
    code = kind.inner_code
    terms = []
    for k in range(1, depth + 1):
        pre = [1.0 / j if code == 0 else (-1.0) ** (j + 1) / j if code == 1
               else j ** -m if code == 2 else (-1.0) ** (j + 1) * j ** -m for j in range(1, k + 1)]
        inner = math.fsum(pre)
        if code < 2:
            inner = inner ** m
        sign = (-1.0) ** (k + 1) if kind.alternating_outer else 1.0
        terms.append(sign * inner / (k + 1) ** n)
    return math.fsum(terms)


@njit(cache=True, nogil=True)
def _alt_harmonic_kernel(m, n, depth):
    half = depth // 2
    hs = 0.0
    hc = 0.0
    ss = 0.0
    sc = 0.0
    half_val = 0.0
    half_next = 0.0
    for k in range(1, depth + 2):
        x = float(k) ** -m
        u = hs + x
        if abs(hs) >= abs(x):
            hc += (hs - u) + x
        else:
            hc += (x - u) + hs
        hs = u
        term = (hs + hc) / float(k) ** n
        if k == half + 1:
            half_next = term
        if k == depth + 1:
            return ss + sc, half_val, term, half_next
        if k % 2 == 0:
            term = -term
        u = ss + term
        if abs(ss) >= abs(term):
            sc += (ss - u) + term
        else:
            sc += (term - u) + ss
        ss = u
        if k == half:
            half_val = ss + sc
    return ss + sc, half_val, 0.0, half_next


def alternating_harmonic_series(m: int, n: int, depth: int = 100_000, full_output: bool = False):
    """Partial sum of sum_k (-1)^(k+1) H_{k,m} / k^n for k = 1..depth.

    The tail estimate is half the first omitted term, with its sign.
    """
    if int(m) != m or m < 1 or int(n) != n or n < 1:
        raise DomainError(f"needs integers m, n >= 1, got m={m}, n={n}")
    depth = _check_depth(depth)
    value, half_value, nxt, half_nxt = _alt_harmonic_kernel(int(m), int(n), depth)
    if not full_output:
        return value

    def tail(N, a_next):
        return (1.0 if N % 2 == 0 else -1.0) * a_next / 2.0

    return SeriesResult(value, depth, tail(depth, nxt), abs(nxt), half_value,
                        tail(depth // 2, half_nxt))


@dataclass(frozen=True)
class MtwSignature:
    """Exponents (s_1, ..., s_K, s_{K+1}) of an MTW sum; s_{K+1} sits on m_1 + ... + m_K."""
    exponents: tuple

    def __post_init__(self):
        ex = tuple(float(e) for e in self.exponents)
        object.__setattr__(self, "exponents", ex)
        if len(ex) < 2:
            raise DomainError("an MTW signature needs at least two exponents")
        if any(e < 0 for e in ex):
            raise DomainError(f"MTW exponents must be nonnegative, got {ex}")
        inner, outer = ex[:-1], ex[-1]
        # absolute convergence: every subset J of the inner variables needs
        # sum_J s_j + s_{K+1} > |J|
        for r in range(1, len(inner) + 1):
            for sub in itertools.combinations(inner, r):
                if not sum(sub) + outer > r:
                    raise DomainError(f"MTW signature {ex} diverges (subset {sub})")

    @property
    def K(self) -> int:
        return len(self.exponents) - 1


@njit(cache=True, nogil=True)
def _mtw_kernel(powers, outer, depth):
    K = powers.shape[0]
    ss = 0.0
    sc = 0.0
    if K == 1:
        for a in range(1, depth + 1):
            term = powers[0, a] * outer[a]
            u = ss + term
            if abs(ss) >= abs(term):
                sc += (ss - u) + term
            else:
                sc += (term - u) + ss
            ss = u
    elif K == 2:
        for a in range(1, depth + 1):
            for b in range(1, depth + 1):
                term = powers[0, a] * powers[1, b] * outer[a + b]
                u = ss + term
                if abs(ss) >= abs(term):
                    sc += (ss - u) + term
                else:
                    sc += (term - u) + ss
                ss = u
    else:
        for a in range(1, depth + 1):
            for b in range(1, depth + 1):
                pab = powers[0, a] * powers[1, b]
                for c in range(1, depth + 1):
                    term = pab * powers[2, c] * outer[a + b + c]
                    u = ss + term
                    if abs(ss) >= abs(term):
                        sc += (ss - u) + term
                    else:
                        sc += (term - u) + ss
                    ss = u
    return ss + sc


def _power_table(exps, size):
    k = np.arange(size + 1, dtype=np.float64)
    k[0] = 1.0
    tab = k[None, :] ** -np.asarray(exps, dtype=np.float64)[:, None]
    tab[:, 0] = 0.0
    return tab


def mtw_omega(sig, depth: int = 1000) -> float:
    """Truncated MTW sum over m_1..m_K in [1, depth], K <= 3."""
    if not isinstance(sig, MtwSignature):
        sig = MtwSignature(tuple(sig))
    if sig.K > 3:
        raise DomainError(f"mtw_omega supports K <= 3 inner variables, got K={sig.K}")
    depth = _check_depth(depth, 2)
    powers = _power_table(sig.exponents[:-1], depth)
    outer = _power_table(sig.exponents[-1:], sig.K * depth)[0]
    return _mtw_kernel(powers, outer, depth)


def mtw_ensemble(s, t, depth: int) -> float:
    """Ensemble sum over m in [1, depth]^M and n in [1, M*depth]^N with sum(m) = sum(n).

    Each side is reduced to a table indexed by its coordinate total through
    repeated convolution, so the cost does not grow with the dimension.
    """
    s, t = tuple(map(float, s)), tuple(map(float, t))
    if not s or not t:
        raise DomainError("both exponent blocks must be nonempty")
    depth = _check_depth(depth, 1)
    top = len(s) * depth

    def block(exps, width):
        tab = _power_table(exps, width)
        acc = np.zeros(top + 1)
        acc[0] = 1.0
        for row in tab:
            acc = np.convolve(acc, row)[: top + 1]
        return acc

    left = block(s, depth)
    right = block(t, top)
    return math.fsum((left * right).tolist())

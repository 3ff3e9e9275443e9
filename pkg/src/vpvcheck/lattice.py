"""Visible lattice points and truncated VPV product sums.

The product over visible points of (1 - x^a)^(-w(a)) is handled through
its logarithm, sum w(a) * -log(1 - x^a).  Enumeration runs in a numba
kernel over the box [lo, depth]^n in lexicographic order and accumulates
each term, Neumaier-compensated, into a cell keyed by (first coordinate,
shell), where the shell of a point is its largest coordinate.  Cells are
independent, so the serial and the prange kernels produce identical cell
values; the final reduction is ``math.fsum`` over cells.  One run at depth
2N therefore yields the truncations at both N and 2N.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
from numba import config as numba_config, njit, prange

from .polylog import DomainError

# skip the TBB probe, which warns on hosts with an old TBB runtime
numba_config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

__all__ = [
    "Shape", "LatticeRegion", "WeightSpec", "PointVars", "LatticeSum", "ProbeResult",
    "visible_points", "mobius", "mobius_count", "count_visible", "log_product_sum",
    "convergence_probe", "euler_pyramid_counts",
]


class Shape(enum.Enum):
    HYPERQUADRANT = "hyperquadrant"
    SQUARE_PYRAMID = "square_pyramid"
    EULER_PYRAMID = "euler_pyramid"
    CAMPBELL_PYRAMID = "campbell_pyramid"


@dataclass(frozen=True)
class LatticeRegion:
    """A cone of lattice points.

    ``hyperquadrant``: all coordinates >= 1.
    ``square_pyramid``: all coordinates >= 1, leading coordinates <= the last one.
    ``euler_pyramid``: leading coordinates >= ``lower`` and < the last, last >= 1.
    ``campbell_pyramid``: leading coordinates >= 0 and < the last, last >= 1.
    """
    shape: Shape
    dim: int
    lower: int = 1

    def __post_init__(self):
        object.__setattr__(self, "shape", Shape(self.shape))
        if not 2 <= self.dim <= 6:
            raise DomainError(f"region dimension must be in 2..6, got {self.dim}")
        if self.lower not in (0, 1):
            raise DomainError(f"leading lower bound must be 0 or 1, got {self.lower}")

    @classmethod
    def hyperquadrant(cls, n: int) -> "LatticeRegion":
        return cls(Shape.HYPERQUADRANT, n)

    @classmethod
    def square_pyramid(cls, n: int) -> "LatticeRegion":
        return cls(Shape.SQUARE_PYRAMID, n)

    @classmethod
    def euler_pyramid(cls, m_plus_1: int, lower: int = 1) -> "LatticeRegion":
        return cls(Shape.EULER_PYRAMID, m_plus_1 + 1, lower)

    @classmethod
    def campbell_pyramid(cls, n: int) -> "LatticeRegion":
        return cls(Shape.CAMPBELL_PYRAMID, n, 0)

    @property
    def lows(self) -> tuple[int, ...]:
        if self.shape in (Shape.HYPERQUADRANT, Shape.SQUARE_PYRAMID):
            return (1,) * self.dim
        lead = self.lower if self.shape is Shape.EULER_PYRAMID else 0
        return (lead,) * (self.dim - 1) + (1,)

    @property
    def apex_mode(self) -> int:
        # 0: no constraint, 1: leading <= last, 2: leading < last
        return {Shape.HYPERQUADRANT: 0, Shape.SQUARE_PYRAMID: 1}.get(self.shape, 2)

    def contains(self, point: Sequence[int]) -> bool:
        if len(point) != self.dim or any(a < lo for a, lo in zip(point, self.lows)):
            return False
        lead, last = point[:-1], point[-1]
        if self.apex_mode == 1:
            return all(a <= last for a in lead)
        if self.apex_mode == 2:
            return all(a < last for a in lead)
        return True


@dataclass(frozen=True)
class WeightSpec:
    """Exponents s_i of the weight a_1^-s_1 ... a_n^-s_n, homogeneous of degree -1."""
    exponents: tuple

    def __post_init__(self):
        ex = tuple(float(e) for e in self.exponents)
        object.__setattr__(self, "exponents", ex)
        if abs(sum(ex) - 1.0) > 1e-12:
            raise DomainError(f"weight exponents must sum to 1, got sum {sum(ex)!r} for {ex}")


@dataclass(frozen=True)
class PointVars:
    """Real variables x_1..x_n with |x_i| <= 1."""
    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for v in vals:
            if not abs(v) <= 1.0:
                raise DomainError(f"lattice variables need |x| <= 1, got {v}")


@dataclass(frozen=True)
class LatticeSum:
    """Truncated sum; ``shells[k]`` holds the contribution of points with max coordinate k."""
    value: float
    depth: int
    shells: np.ndarray
    points: int
    cells: np.ndarray

    def at(self, depth: int) -> float:
        """Truncation to shells <= depth, reduced from the same cells."""
        return math.fsum(self.cells[:, : depth + 1].ravel().tolist())


@dataclass(frozen=True)
class ProbeResult:
    value_n: float
    value_2n: float
    delta: float
    depth: int


def visible_points(region: LatticeRegion, depth: int) -> Iterator[tuple[int, ...]]:
    """Yield the visible points of ``region`` with every coordinate <= depth, lexicographically."""
    ranges = [range(lo, depth + 1) for lo in region.lows]
    for p in itertools.product(*ranges):
        if region.contains(p) and math.gcd(*p) == 1:
            yield p


def mobius(n: int) -> np.ndarray:
    """Moebius function mu(0..n) from a linear sieve (mu[0] = 0)."""
    mu = np.zeros(n + 1, dtype=np.int64)
    if n >= 1:
        mu[1] = 1
    is_comp = np.zeros(n + 1, dtype=bool)
    primes = []
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def _region_count_all(region: LatticeRegion, depth: int) -> int:
    """Number of all (not only visible) region points with max coordinate <= depth."""
    if depth <= 0:
        return 0
    n = region.dim
    if region.apex_mode == 0:
        return depth ** n
    lead = n - 1
    lo = region.lows[0]
    if region.apex_mode == 1:
        return sum((k - lo + 1) ** lead for k in range(1, depth + 1))
    return sum(max(k - lo, 0) ** lead for k in range(1, depth + 1))


def mobius_count(region: LatticeRegion, depth: int) -> int:
    """Count visible region points up to ``depth`` by Moebius inversion over dilations.

    Every region point is d times a visible region point, d being its gcd,
    so the all-points count is a divisor sum of visible counts.
    """
    mu = mobius(depth)
    return int(sum(int(mu[d]) * _region_count_all(region, depth // d)
                   for d in range(1, depth + 1) if mu[d]))


# --- numba kernels ---------------------------------------------------------


@njit(cache=True, nogil=True)
def _slab(a0, n, lows, depth, apex, gcdt, wtab, xtab, sums, comps, counts, count_only):
    coords = np.empty(n, np.int64)
    g = np.empty(n, np.int64)
    mx = np.empty(n, np.int64)
    w = np.empty(n)
    u = np.empty(n)
    coords[0] = a0
    g[0] = a0
    mx[0] = a0
    w[0] = wtab[0, a0]
    u[0] = xtab[0, a0]
    bad = 0
    i = 1
    coords[1] = lows[1] - 1
    while i >= 1:
        coords[i] += 1
        c = coords[i]
        if c > depth:
            i -= 1
            continue
        g[i] = gcdt[g[i - 1], c]
        mx[i] = mx[i - 1] if mx[i - 1] > c else c
        if i < n - 1:
            w[i] = w[i - 1] * wtab[i, c]
            u[i] = u[i - 1] * xtab[i, c]
            i += 1
            coords[i] = lows[i] - 1
            continue
        if g[i] != 1:
            continue
        if apex == 1 and mx[i - 1] > c:
            continue
        if apex == 2 and mx[i - 1] >= c:
            continue
        shell = mx[i]
        counts[a0, shell] += 1
        if count_only:
            continue
        ww = w[i - 1] * wtab[i, c]
        uu = u[i - 1] * xtab[i, c]
        if uu >= 1.0:
            bad = 1
            continue
        if uu == 0.0 or ww == 0.0:
            continue
        term = -ww * math.log1p(-uu)
        s = sums[a0, shell]
        t = s + term
        if abs(s) >= abs(term):
            comps[a0, shell] += (s - t) + term
        else:
            comps[a0, shell] += (term - t) + s
        sums[a0, shell] = t
    return bad


@njit(cache=True, nogil=True)
def _run_serial(n, lows, depth, apex, gcdt, wtab, xtab, sums, comps, counts, count_only):
    bad = 0
    for a0 in range(lows[0], depth + 1):
        bad |= _slab(a0, n, lows, depth, apex, gcdt, wtab, xtab, sums, comps, counts, count_only)
    return bad


@njit(cache=True, parallel=True)
def _run_parallel(n, lows, depth, apex, gcdt, wtab, xtab, sums, comps, counts, count_only):
    flags = np.zeros(depth + 1, np.int64)
    for a0 in prange(lows[0], depth + 1):
        flags[a0] = _slab(a0, n, lows, depth, apex, gcdt, wtab, xtab, sums, comps, counts,
                          count_only)
    return flags.max()


@lru_cache(maxsize=8)
def _gcd_table(depth: int) -> np.ndarray:
    r = np.arange(depth + 1, dtype=np.int64)
    return np.gcd.outer(r, r)


def _tables(region, weights, xs, depth):
    n = region.dim
    ex = weights.exponents
    vals = xs.values
    if len(ex) != n or len(vals) != n:
        raise DomainError(f"need {n} weight exponents and {n} variables, "
                          f"got {len(ex)} and {len(vals)}")
    c = np.arange(depth + 1, dtype=np.float64)
    wtab = np.empty((n, depth + 1))
    xtab = np.empty((n, depth + 1))
    for i in range(n):
        with np.errstate(divide="ignore"):
            wtab[i, 1:] = c[1:] ** -ex[i]
        if ex[i] == 0:
            wtab[i, 0] = 1.0
        elif ex[i] < 0:
            wtab[i, 0] = 0.0
        else:
            wtab[i, 0] = np.inf
            if region.lows[i] == 0:
                raise DomainError(f"weight exponent {ex[i]} > 0 is singular at coordinate 0 "
                                  f"on axis {i + 1}")
        xtab[i] = vals[i] ** c
        xtab[i, 0] = 1.0
    return wtab, xtab


def _enumerate(region, weights, xs, depth, parallel, count_only=False):
    n = region.dim
    lows = np.array(region.lows, dtype=np.int64)
    if count_only:
        wtab = np.ones((n, depth + 1))
        xtab = np.zeros((n, depth + 1))
    else:
        wtab, xtab = _tables(region, weights, xs, depth)
    shape = (depth + 1, depth + 1)
    sums = np.zeros(shape)
    comps = np.zeros(shape)
    counts = np.zeros(shape, dtype=np.int64)
    run = _run_parallel if parallel else _run_serial
    bad = run(n, lows, depth, region.apex_mode, _gcd_table(depth), wtab, xtab,
              sums, comps, counts, count_only)
    if bad:
        raise DomainError("a point has x^a >= 1, so log(1 - x^a) is undefined; "
                          "all variables need |x| < 1 on every axis where the exponent can vanish")
    return sums + comps, counts


def count_visible(region: LatticeRegion, depth: int, parallel: bool = False) -> int:
    """Count visible region points by direct enumeration in the numba kernel."""
    _, counts = _enumerate(region, None, None, depth, parallel, count_only=True)
    return int(counts.sum())


def euler_pyramid_counts(m_plus_1: int, k: int, lower: int = 1) -> np.ndarray:
    """Number of visible (j_1..j_{m+1}, k) with lower <= j_i < k, indexed by sum(j)."""
    top = m_plus_1 * (k - 1)
    out = np.zeros(top + 1, dtype=np.int64)
    mu = mobius(k)
    for d in range(1, k + 1):
        if k % d or not mu[d]:
            continue
        lo = -(-lower // d)
        hi = (k - 1) // d
        if hi < lo:
            continue
        base = np.zeros(hi + 1, dtype=np.int64)
        base[lo:] = 1
        poly = np.ones(1, dtype=np.int64)
        for _ in range(m_plus_1):
            poly = np.convolve(poly, base)
        out[: d * (len(poly) - 1) + 1: d] += int(mu[d]) * poly
    return out


def _euler_pyramid_cells(m_plus_1, y, z, depth, lower):
    cells = np.zeros((1, depth + 1))
    counts = np.zeros((1, depth + 1), dtype=np.int64)
    for k in range(1, depth + 1):
        cnt = euler_pyramid_counts(m_plus_1, k, lower)
        S = np.nonzero(cnt)[0]
        if len(S) == 0:
            continue
        u = y ** S.astype(np.float64) * z ** k
        if np.any(u >= 1.0):
            raise DomainError("y^S z^k >= 1 for some point; need |y|, |z| < 1")
        terms = cnt[S] * -np.log1p(-u) / k
        cells[0, k] = math.fsum(terms.tolist())
        counts[0, k] = int(cnt.sum())
    return cells, counts


def _is_euler_grouped(region, weights, xs):
    if region.shape is not Shape.EULER_PYRAMID:
        return False
    ex, vals = weights.exponents, xs.values
    return all(e == 0 for e in ex[:-1]) and ex[-1] == 1 and len(set(vals[:-1])) == 1


def _cells(region, weights, xs, depth, parallel, method):
    if method not in ("auto", "enumerate", "grouped"):
        raise ValueError(f"unknown method {method!r}")
    grouped = _is_euler_grouped(region, weights, xs)
    if method == "grouped" and not grouped:
        raise DomainError("grouped evaluation needs an Euler pyramid with weight 1/k "
                          "and equal leading variables")
    if grouped and method != "enumerate":
        return _euler_pyramid_cells(region.dim - 1, xs.values[0], xs.values[-1], depth,
                                    region.lower)
    return _enumerate(region, weights, xs, depth, parallel)


def _as_specs(weights, xs):
    if not isinstance(weights, WeightSpec):
        weights = WeightSpec(tuple(weights))
    if not isinstance(xs, PointVars):
        xs = PointVars(tuple(xs))
    return weights, xs


def log_product_sum(region: LatticeRegion, weights, xs, depth: int,
                    parallel: bool = False, method: str = "auto") -> LatticeSum:
    """Truncated sum of w(a) * -log(1 - x^a) over visible points with max coordinate <= depth.

    This is the logarithm of the product of (1 - x^a)^(-w(a)).  ``method``
    picks full enumeration or, for Euler pyramids with weight 1/k, the exact
    grouping of points by coordinate total; ``auto`` uses grouping when it applies.
    """
    weights, xs = _as_specs(weights, xs)
    depth = int(depth)
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    cells, counts = _cells(region, weights, xs, depth, parallel, method)
    value = math.fsum(cells.ravel().tolist())
    shells = np.array([math.fsum(col.tolist()) for col in cells.T])
    return LatticeSum(value, depth, shells, int(counts.sum()), cells)


def convergence_probe(region: LatticeRegion, weights, xs, depth: int,
                      parallel: bool = False, method: str = "auto") -> ProbeResult:
    """Truncations at depth and 2*depth from a single run at 2*depth."""
    res = log_product_sum(region, weights, xs, 2 * depth, parallel, method)
    v_n = res.at(depth)
    return ProbeResult(v_n, res.value, abs(res.value - v_n), depth)

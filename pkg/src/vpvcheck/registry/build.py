"""Helpers that turn identity descriptions into registered cases."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Mapping, Optional, Sequence

from ..eulersums import finite_sum_terms
from ..lattice import LatticeRegion, convergence_probe
from ..polylog import li
from .core import Evaluation, IdentityCase, register

DEFAULT_DEPTH = {2: 60, 3: 40, 4: 24, 5: 16, 6: 16}


def closed_case(id, family, citation, statement, lhs, rhs, lhs_desc, rhs_desc,
                domain=None, defaults=None, expectation="assert_pass", note="",
                constraint=None, constraint_desc=""):
    """Both sides are closed forms in the parameters."""
    def lhs_eval(p, depth):
        return Evaluation(float(lhs(p)))
    return register(IdentityCase(
        id, family, citation, statement, lhs_eval, rhs, lhs_desc, rhs_desc,
        dict(domain or {}), dict(defaults or {}), expectation, "closed",
        constraint=constraint, constraint_desc=constraint_desc, note=note))


@lru_cache(maxsize=512)
def _probe(region, exponents, xs, depth, method):
    return convergence_probe(region, exponents, xs, depth, method=method)


def lattice_value(region: LatticeRegion, exponents: Sequence[float], xs: Sequence[float],
                  depth: int, method: str = "auto"):
    """Cached convergence probe, shared by cases that use the same product."""
    return _probe(region, tuple(map(float, exponents)), tuple(map(float, xs)), int(depth), method)


def lattice_case(id, family, citation, statement, region: LatticeRegion,
                 exponents: Sequence[float], variables: Callable[[Mapping[str, float]], tuple],
                 rhs, rhs_desc, domain, defaults, orientation=1, expectation="assert_pass",
                 note="", depth=None, lhs_desc=None):
    """LHS is orientation * log of the truncated product over visible region points.

    ``orientation`` is +1 for products of (1 - x^a)^(-w) and -1 for products of
    (1 - x^a)^(+w).
    """
    default_depth = depth or DEFAULT_DEPTH[region.dim]

    def lhs_eval(p, d):
        d = default_depth if d is None else int(d)
        pr = lattice_value(region, exponents, variables(p), d)
        return Evaluation(orientation * pr.value_n, pr.delta, d)

    if lhs_desc is None:
        sign = "" if orientation == 1 else "-"
        lhs_desc = (f"{sign}log_product_sum({region.shape.value}, dim={region.dim}"
                    f"{', lower=%d' % region.lower if region.shape.value == 'euler_pyramid' else ''}"
                    f", exponents={tuple(exponents)})")
    return register(IdentityCase(
        id, family, citation, statement, lhs_eval, rhs, lhs_desc, rhs_desc,
        dict(domain), dict(defaults), expectation, "lattice", default_depth, region.dim,
        note=note))


def series_case(id, family, citation, statement, lhs, rhs, lhs_desc, rhs_desc, depth,
                kind="series", expectation="assert_pass", note=""):
    """LHS is a long one-dimensional sum: ``lhs(depth)`` returns an Evaluation."""
    def lhs_eval(p, d):
        return lhs(depth if d is None else int(d))
    return register(IdentityCase(
        id, family, citation, statement, lhs_eval, rhs, lhs_desc, rhs_desc, {}, {},
        expectation, kind, depth, note=note))


def sum_series(term: Callable[[int], float], start: int = 1, rtol: float = 1e-18,
               max_terms: int = 200_000) -> float:
    """Sum term(k) for k >= start until several consecutive terms are negligible."""
    parts = []
    small = 0
    k = start
    rough = 0.0
    while k < start + max_terms:
        t = term(k)
        parts.append(t)
        rough += t
        small = small + 1 if abs(t) <= rtol * max(abs(rough), 1e-300) else 0
        if small >= 5:
            break
        k += 1
    return math.fsum(parts)


def pyramid_exponent(powers: Sequence[int], bases: Sequence[float], apex: int, z: float) -> float:
    """Closed form of sum_n prod_i (sum_{a=1}^n a^p_i x_i^a) z^n / n^apex.

    Each finite sum is written as a combination of base^n * n^j; multiplying
    out and summing over n turns every product term into a polylogarithm of
    order apex - J at (product of bases) * z.
    """
    terms = [(1.0, 1.0, 0)]
    for p, x in zip(powers, bases):
        terms = [(c1 * c2, b1 * b2, j1 + j2)
                 for c1, b1, j1 in terms for c2, b2, j2 in finite_sum_terms(p, x)]
    grouped: dict = {}
    for c, b, j in terms:
        grouped[(b, j)] = grouped.get((b, j), 0.0) + c
    return math.fsum(c * li(apex - j, b * z) for (b, j), c in grouped.items() if c)

"""Identity cases, residuals and verdicts."""
from __future__ import annotations

import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple, Optional

from ..polylog import DomainError

FAMILIES = (
    "dilog_fe", "dilog_value", "dilog_ladder", "trilog_fe", "trilog_value", "trilog_ladder",
    "vpv_hyperquadrant", "vpv_pyramid", "euler_sum", "double_zeta", "mtw",
)
EXPECTATIONS = ("assert_pass", "check_and_report")
VERDICTS = ("pass", "fail", "inconclusive")

# default tolerances by evaluation kind
TOLERANCES = {
    "closed": (1e-10, 0.0),
    "lattice": (1e-14, 1e-5),
    "series": (1e-14, 1e-6),
    "slow_series": (1e-14, 1e-3),
}


class UnknownIdentityError(KeyError):
    pass


class Evaluation(NamedTuple):
    value: float
    delta: float = 0.0
    depth: Optional[int] = None
    note: str = ""


@dataclass(frozen=True)
class IdentityCase:
    """One identity: an LHS evaluator, an RHS closed form and a parameter box.

    ``lhs(params, depth)`` returns an :class:`Evaluation`; ``depth`` is None for
    the case default.  ``rhs(params)`` returns a float.  Lattice identities are
    compared in log space: the LHS is the log of the truncated product and the
    RHS is the exponent of the closed form.
    """
    id: str
    family: str
    citation: str
    statement: str
    lhs: Callable[[Mapping[str, float], Optional[int]], Evaluation]
    rhs: Callable[[Mapping[str, float]], float]
    lhs_desc: str
    rhs_desc: str
    domain: Mapping[str, tuple] = field(default_factory=dict)
    default_params: Mapping[str, float] = field(default_factory=dict)
    expectation: str = "assert_pass"
    kind: str = "closed"
    default_depth: Optional[int] = None
    dim: Optional[int] = None
    constraint: Optional[Callable[[Mapping[str, float]], bool]] = None
    constraint_desc: str = ""
    note: str = ""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"{self.id}: unknown family {self.family}")
        if self.expectation not in EXPECTATIONS:
            raise ValueError(f"{self.id}: unknown expectation {self.expectation}")
        if self.kind not in TOLERANCES:
            raise ValueError(f"{self.id}: unknown kind {self.kind}")
        if set(self.default_params) != set(self.domain):
            raise ValueError(f"{self.id}: default params and domain name different variables")
        if not self.in_domain(self.default_params):
            raise ValueError(f"{self.id}: default params {dict(self.default_params)} outside domain")

    @property
    def tol_abs(self) -> float:
        return TOLERANCES[self.kind][0]

    @property
    def tol_rel(self) -> float:
        return TOLERANCES[self.kind][1]

    @property
    def is_lattice(self) -> bool:
        return self.kind == "lattice"

    def in_domain(self, params: Mapping[str, float]) -> bool:
        for name, (lo, hi) in self.domain.items():
            if name not in params or not lo < params[name] < hi:
                return False
        return self.constraint is None or bool(self.constraint(params))

    def catalog_entry(self) -> dict:
        return {
            "id": self.id, "family": self.family, "citation": self.citation,
            "statement": self.statement, "lhs": self.lhs_desc, "rhs": self.rhs_desc,
            "domain": {k: list(v) for k, v in self.domain.items()},
            "constraint": self.constraint_desc or None,
            "default_params": dict(self.default_params),
            "default_depth": self.default_depth, "expectation": self.expectation,
            "tol_abs": self.tol_abs, "tol_rel": self.tol_rel, "note": self.note or None,
        }


@dataclass(frozen=True)
class Residual:
    id: str
    citation: str
    params: Mapping[str, float]
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    depth_used: Optional[int]
    convergence_delta: float
    verdict: str
    expectation: str
    tol_abs: float
    tol_rel: float
    note: str = ""

    @property
    def assert_failed(self) -> bool:
        # inconclusive means the truncation could not decide, not a failure
        return self.expectation == "assert_pass" and self.verdict == "fail"

    def as_dict(self) -> dict:
        return {
            "id": self.id, "citation": self.citation, "params": dict(self.params),
            "lhs": self.lhs, "rhs": self.rhs, "abs_err": self.abs_err, "rel_err": self.rel_err,
            "depth": self.depth_used, "convergence_delta": self.convergence_delta,
            "verdict": self.verdict, "expectation": self.expectation,
            "tol_abs": self.tol_abs, "tol_rel": self.tol_rel, "note": self.note or None,
        }


def decide(abs_err: float, rhs: float, delta: float, tol_abs: float, tol_rel: float) -> str:
    """pass / fail / inconclusive from the error, the truncation estimate and tolerances."""
    allowed = max(tol_abs, tol_rel * abs(rhs))
    if not math.isfinite(abs_err):
        return "fail"
    if delta > allowed:
        return "inconclusive"
    return "pass" if abs_err <= allowed else "fail"


_REGISTRY: dict[str, IdentityCase] = {}


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


def register(case: IdentityCase) -> IdentityCase:
    if case.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {case.id}")
    _REGISTRY[case.id] = case
    return case


def _load():
    if not _REGISTRY:
        from . import cases  # noqa: F401  (registers on import)


def registry() -> list[IdentityCase]:
    """All cases, in natural id order."""
    _load()
    return sorted(_REGISTRY.values(), key=lambda c: _natural_key(c.id))


def lookup(case_id: str) -> IdentityCase:
    _load()
    try:
        return _REGISTRY[case_id]
    except KeyError:
        raise UnknownIdentityError(case_id) from None


def select(family: Optional[str] = None, id_prefix: Optional[str] = None,
           ids: Optional[list] = None) -> list[IdentityCase]:
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    out = registry()
    if ids:
        wanted = set(ids)
        missing = wanted - {c.id for c in out}
        if missing:
            raise UnknownIdentityError(", ".join(sorted(missing)))
        out = [c for c in out if c.id in wanted]
    if family:
        out = [c for c in out if c.family == family]
    if id_prefix:
        out = [c for c in out if c.id.startswith(id_prefix)]
    return out


def verify(case_id, params: Optional[Mapping[str, float]] = None, depth: Optional[int] = None,
           tol_abs: Optional[float] = None, tol_rel: Optional[float] = None) -> Residual:
    """Evaluate both sides of one identity and classify the residual.

    Raises :class:`DomainError` if ``params`` fall outside the case domain.
    """
    case = case_id if isinstance(case_id, IdentityCase) else lookup(case_id)
    p = dict(case.default_params)
    if params:
        unknown = set(params) - set(p)
        if unknown:
            raise DomainError(f"{case.id} has no parameter(s) {sorted(unknown)}; "
                              f"expected {sorted(p)}")
        p.update({k: float(v) for k, v in params.items()})
    if not case.in_domain(p):
        box = ", ".join(f"{k} in ({lo}, {hi})" for k, (lo, hi) in case.domain.items())
        extra = f" and {case.constraint_desc}" if case.constraint_desc else ""
        raise DomainError(f"{case.id}: parameters {p} outside domain {box}{extra}")
    ta = case.tol_abs if tol_abs is None else float(tol_abs)
    tr = case.tol_rel if tol_rel is None else float(tol_rel)
    ev = case.lhs(p, depth)
    rhs = float(case.rhs(p))
    abs_err = abs(ev.value - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0 else (0.0 if abs_err == 0 else math.inf)
    verdict = decide(abs_err, rhs, ev.delta, ta, tr)
    note = "; ".join(n for n in (case.note, ev.note) if n)
    return Residual(case.id, case.citation, p, ev.value, rhs, abs_err, rel_err, ev.depth,
                    ev.delta, verdict, case.expectation, ta, tr, note)


def _error_residual(case: IdentityCase, exc: Exception, tol_abs, tol_rel) -> Residual:
    ta = case.tol_abs if tol_abs is None else tol_abs
    tr = case.tol_rel if tol_rel is None else tol_rel
    return Residual(case.id, case.citation, dict(case.default_params), math.nan, math.nan,
                    math.nan, math.nan, None, math.nan, "inconclusive", case.expectation,
                    ta, tr, f"evaluation error: {exc}")


def verify_suite(family: Optional[str] = None, id_prefix: Optional[str] = None,
                 ids: Optional[list] = None, depth=None, series_depth: Optional[int] = None,
                 tol_abs: Optional[float] = None, tol_rel: Optional[float] = None,
                 parallel: bool = False, workers: Optional[int] = None,
                 depth_scale: float = 1.0) -> list[Residual]:
    """Verify every selected case at its default parameters.

    ``depth`` applies to lattice cases only: an int for all of them or a
    mapping from dimension to depth.  ``series_depth`` overrides the depth of
    the series-based cases.  Cases without an override run at their default
    depth times ``depth_scale``.  Results come back in natural id order
    whether or not cases run concurrently.
    """
    if not depth_scale > 0:
        raise ValueError(f"depth_scale must be positive, got {depth_scale}")
    cases = select(family, id_prefix, ids)

    def scaled(c):
        if c.default_depth is None or depth_scale == 1.0:
            return None
        return max(2, math.ceil(c.default_depth * depth_scale))

    def case_depth(c):
        if c.is_lattice:
            d = depth.get(c.dim) if isinstance(depth, Mapping) else depth
            return scaled(c) if d is None else d
        if c.kind in ("series", "slow_series"):
            return scaled(c) if series_depth is None else series_depth
        return None

    def run(c):
        try:
            return verify(c, None, case_depth(c), tol_abs, tol_rel)
        except (DomainError, ValueError, ArithmeticError) as exc:
            return _error_residual(c, exc, tol_abs, tol_rel)

    if parallel and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, cases))
    return [run(c) for c in cases]


def functional_eq_residual(eq_id: str, point: Mapping[str, float]) -> Residual:
    """Residual of a closed-form functional equation at one point of its domain."""
    case = lookup(eq_id)
    if case.family not in ("dilog_fe", "trilog_fe"):
        raise ValueError(f"{eq_id} is not a functional equation (family {case.family})")
    return verify(case, point)


def summarize(results: list[Residual]) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for r in results:
        counts[r.verdict] += 1
    return {
        "total": len(results), **counts,
        "assert_pass_failures": sorted(r.id for r in results if r.assert_failed),
        "assert_pass_inconclusive": sorted(r.id for r in results if r.expectation == "assert_pass"
                                           and r.verdict == "inconclusive"),
        "reported_failures": sorted(r.id for r in results
                                    if r.expectation == "check_and_report" and r.verdict != "pass"),
    }


def export_catalog() -> list[dict]:
    return [c.catalog_entry() for c in registry()]

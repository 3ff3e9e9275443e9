"""Products over visible points of square, Campbell and Euler pyramids."""
import math

from ...eulersums import geom_power_sum
from ...lattice import LatticeRegion
from ...polylog import li
from ..build import lattice_case, pyramid_exponent, sum_series

UNIT = (-1.0, 1.0)
OPEN = (0.0, 1.0)


def pyramid_series(bases, inner_exps, z, outer_exp, strict=False, offset=0):
    """sum_n prod_i (sum_{m=1}^{n or n-1} x_i^m / m^b_i) z^(n+offset) / (n+offset)^b.

    The inner prefix sums are carried along as n grows.
    """
    inner = [0.0] * len(bases)

    def term(n):
        if not strict:
            for i, (x, b) in enumerate(zip(bases, inner_exps)):
                inner[i] += x ** n / n ** b
        prod = 1.0
        for v in inner:
            prod *= v
        k = n + offset
        out = prod * z ** k / k ** outer_exp
        if strict:
            for i, (x, b) in enumerate(zip(bases, inner_exps)):
                inner[i] += x ** n / n ** b
        return out

    return sum_series(term)


# -- Campbell pyramids --------------------------------------------------------

for _n, _b, _defaults in ((2, (-1, 2), (0.2, 0.3)), (3, (-1, -1, 3), (0.2, 0.2, 0.3))):
    _names = ("x1", "x2", "x3")[:_n - 1] + ("z",)
    lattice_case(
        f"eq23.44a.n{_n}", "vpv_pyramid", "(23.44a)",
        f"Campbell pyramid product in {_n}D with exponents {_b} = exp(series)",
        LatticeRegion.campbell_pyramid(_n), _b,
        lambda p, names=_names: tuple(p[k] for k in names),
        lambda p, names=_names, b=_b: pyramid_series(
            [p[k] for k in names[:-1]], b[:-1], p["z"], b[-1], strict=True),
        "sum_k prod_i (sum_{j<k} x_i^j / j^b_i) z^k / k^b_n",
        {k: UNIT for k in _names}, dict(zip(_names, _defaults)))

# -- 2D square pyramid ------------------------------------------------------

SP2 = LatticeRegion.square_pyramid(2)
lattice_case(
    "eq23.57a", "vpv_pyramid", "(23.57a)",
    "prod_{m<=n} (1/(1 - y^m z^n))^(m/n^2) = exp(sum_n (sum_{m<=n} m y^m) z^n / n^2)",
    SP2, (-1, 2), lambda p: (p["y"], p["z"]),
    lambda p: pyramid_series([p["y"]], [-1], p["z"], 2),
    "sum_n (sum_{m<=n} m y^m) z^n / n^2", {"y": UNIT, "z": UNIT}, {"y": 0.3, "z": 0.3})

LOG1 = math.log1p


def _t(z):
    return z / (1 - z)


# printed log of the right side, single-variable theorems
_SINGLE = {
    "b": (1, lambda z: -0.5 * LOG1(-z) + 0.5 * _t(z),
          "-log(1-z)/2 + z/(2(1-z))", "assert_pass"),
    "c": (2, lambda z: -0.5 * LOG1(-z) + li(2, z) / 6 + _t(z) / 3,
          "-log(1-z)/2 + li(2,z)/6 + z/(3(1-z))", "assert_pass"),
    "d": (3, lambda z: -LOG1(-z) / 3 + li(2, z) / 4 + _t(z) / 4,
          "-log(1-z)/3 + li(2,z)/4 + z/(4(1-z))", "check_and_report"),
    "e": (4, lambda z: -LOG1(-z) / 3 + z * (7 - 2 * z) / (10 * (1 - z) ** 2) - li(3, z) / 30,
          "-log(1-z)/3 + z(7-2z)/(10(1-z)^2) - li(3,z)/30", "check_and_report"),
}
_SINGLE_NOTE = "built on the printed cubic power sum, whose n^3 coefficient is 1/3 instead of 1/2"


def _single(letter, p, printed, desc, expect):
    ex = (-p, p + 1)
    cit = f"Theorem 23.57{letter}"
    stmt = f"prod_{{m<=n}} (1/(1 - z^n))^(m^{p}/n^{p + 1})"
    corrected = lambda q: pyramid_exponent([p], [1.0], p + 1, q["z"])
    note = "" if expect == "assert_pass" else (
        _SINGLE_NOTE if letter == "d" else "printed right side drops and shifts terms of the power-sum expansion")
    variants = [("", 1, lambda q: printed(q["z"]), desc, expect, note),
                ("-reciprocal", -1, lambda q: -printed(q["z"]), f"-({desc})", expect, note)]
    if expect != "assert_pass":
        variants += [("-corrected", 1, corrected, "polylog expansion of sum_n S_p(n) z^n / n^(p+1)",
                      "assert_pass", ""),
                     ("-reciprocal-corrected", -1, lambda q: -corrected(q),
                      "minus the polylog expansion", "assert_pass", "")]
    for suffix, orient, rhs, rdesc, exp_, nt in variants:
        lattice_case(
            f"thm23.57{letter}{suffix}", "vpv_pyramid", cit,
            stmt if orient == 1 else stmt.replace("(1/(1 - z^n))", "(1 - z^n)"),
            SP2, ex, lambda q: (1.0, q["z"]), rhs, rdesc, {"z": UNIT}, {"z": 0.3},
            orientation=orient, expectation=exp_, note=nt, depth=200)


for _letter, (_p, _printed, _desc, _expect) in _SINGLE.items():
    _single(_letter, _p, _printed, _desc, _expect)


def _thm_f(y, z):
    return y / (1 - y) * LOG1(-y * z) + y / (1 - y) ** 2 * (li(2, z) - li(2, y * z))


def _thm_g(y, z):
    return (-y / (1 - y) * LOG1(-y * z) + y * (y + 1) / (1 - y) ** 3 * (li(3, z) - li(3, y * z))
            - 2 * y / (1 - y) ** 2 * li(2, y * z))


def _thm_h(y, z):
    return (y / (1 - y) * LOG1(-y * z)
            + y * (y * y + 4 * y + 1) / (1 - y) ** 4 * (li(4, z) - li(4, y * z))
            + 3 * y * (1 + y) / (1 - y) ** 3 * li(3, y * z) + 3 * y / (1 - y) ** 2 * li(2, y * z))


def _thm_i(y, z):
    d = (1 - y) ** 5
    yz = y * z
    poly = y ** 5 - 4 * y ** 4 + 6 * y ** 3 + y
    return math.fsum([
        (4 * LOG1(-z) - poly * LOG1(-yz)) / d,
        y * (y + 1) * (y * y + 10 * y + 1) / d * (li(5, yz) - li(5, z)),
        4 / d * ((-y ** 4 + 3 * y ** 3 + y) * li(4, yz) + 3 * li(4, z)),
        6 / d * ((y ** 4 - y ** 3 + y) * li(3, yz) - li(3, z)),
        4 / d * ((y - 3 * y ** 3 - y ** 4) * li(2, yz) - 3 * li(2, z)),
    ])


_TWO = {
    "f": (1, _thm_f, "y/(1-y) log(1-yz) + y/(1-y)^2 (Li2(z) - Li2(yz))"),
    "g": (2, _thm_g, "-y/(1-y) log(1-yz) + y(y+1)/(1-y)^3 (Li3(z) - Li3(yz)) - 2y/(1-y)^2 Li2(yz)"),
    "h": (3, _thm_h, "y/(1-y) log(1-yz) + y(y^2+4y+1)/(1-y)^4 (Li4(z) - Li4(yz)) + ..."),
    "i": (4, _thm_i, "[4 log(1-z) - (y^5-4y^4+6y^3+y) log(1-yz)]/(1-y)^5 + Li5..Li2 terms"),
}


_TWO_NOTES = {
    "g": "sign of the log(1-yz) factor and the lower-order terms disagree with the expansion",
    "h": "sign of the log(1-yz) factor and the lower-order terms disagree with the expansion",
    "i": "printed right side does not vanish at y = 0",
}


def _two(letter, p, printed, desc):
    ex = (-p, p + 1)
    cit = f"Theorem 23.57{letter}"
    stmt = f"prod_{{m<=n}} (1/(1 - y^m z^n))^(m^{p}/n^{p + 1})"
    dom, dflt = {"y": OPEN, "z": UNIT}, {"y": 0.2, "z": 0.3}
    corrected = lambda q: pyramid_exponent([p], [q["y"]], p + 1, q["z"])
    for suffix, orient, rhs, rdesc in (
            ("", 1, lambda q: printed(q["y"], q["z"]), desc),
            ("-reciprocal", -1, lambda q: -printed(q["y"], q["z"]), f"-({desc})")):
        lattice_case(
            f"thm23.57{letter}{suffix}", "vpv_pyramid", cit,
            stmt if orient == 1 else stmt.replace("(1/(1 - y^m z^n))", "(1 - y^m z^n)"),
            SP2, ex, lambda q: (q["y"], q["z"]), rhs, rdesc, dom, dflt, orientation=orient,
            expectation="check_and_report" if letter in "ghi" else "assert_pass",
            note=_TWO_NOTES.get(letter, ""), depth=80)
    if letter in "ghi":
        for suffix, orient in (("-corrected", 1), ("-reciprocal-corrected", -1)):
            lattice_case(
                f"thm23.57{letter}{suffix}", "vpv_pyramid", cit, stmt, SP2, ex,
                lambda q: (q["y"], q["z"]), lambda q, o=orient: o * corrected(q),
                "polylog expansion of sum_n (sum_{m<=n} m^p y^m) z^n / n^(p+1)",
                dom, dflt, orientation=orient, depth=80)


for _letter, (_p, _printed, _desc) in _TWO.items():
    _two(_letter, _p, _printed, _desc)

# -- 3D square pyramid --------------------------------------------------------

SP3 = LatticeRegion.square_pyramid(3)
XYZ = {"x": UNIT, "y": UNIT, "z": UNIT}
lattice_case(
    "eq23.58", "vpv_pyramid", "(23.58)",
    "prod_{l,m<=n} (1/(1 - x^l y^m z^n))^(l m^2/n^4) = exp(series)",
    SP3, (-1, -2, 4), lambda p: (p["x"], p["y"], p["z"]),
    lambda p: pyramid_series([p["x"], p["y"]], [-1, -2], p["z"], 4),
    "sum_n (sum_{l<=n} l x^l)(sum_{m<=n} m^2 y^m) z^n / n^4", XYZ,
    {"x": 0.2, "y": 0.2, "z": 0.3})


def _eq59(z):
    return -LOG1(-z) / 3 + (li(2, z) + z * (7 - 5 * z) / (1 - z) ** 2) / 12


lattice_case(
    "eq23.59", "vpv_pyramid", "(23.59)",
    "prod_{l,m<=n} (1/(1 - z^n))^(l m^2/n^4) = (1-z)^(-1/3) exp((Li2(z) + z(7-5z)/(1-z)^2)/12)",
    SP3, (-1, -2, 4), lambda p: (1.0, 1.0, p["z"]), lambda p: _eq59(p["z"]),
    "-log(1-z)/3 + (li(2,z) + z(7-5z)/(1-z)^2)/12", {"z": UNIT}, {"z": 0.3})
lattice_case(
    "eq23.60", "vpv_pyramid", "(23.60)",
    "prod_{l,m<=n} (1 - z^n)^(l m^2/n^4) = (1-z)^(1/3) exp(-(Li2(z) + z(7-5z)/(1-z)^2)/12)",
    SP3, (-1, -2, 4), lambda p: (1.0, 1.0, p["z"]), lambda p: -_eq59(p["z"]),
    "log(1-z)/3 - (li(2,z) + z(7-5z)/(1-z)^2)/12", {"z": UNIT}, {"z": 0.3}, orientation=-1)

_ABC = {"x": OPEN, "y": OPEN, "z": UNIT}
_ABC_DEFAULTS = {"x": 0.2, "y": 0.2, "z": 0.3}


def _eq61(p):
    x, y, z = p["x"], p["y"], p["z"]
    return sum_series(lambda n: geom_power_sum(1, n, x) * geom_power_sum(2, n, y) * z ** n / n ** 4)


lattice_case(
    "eq23.61", "vpv_pyramid", "(23.61)",
    "prod_{l,m<=n} (1/(1 - x^l y^m z^n))^(l m^2/n^4) = exp(sum_n A(n,x) B(n,y) z^n / n^4)",
    SP3, (-1, -2, 4), lambda p: (p["x"], p["y"], p["z"]), _eq61,
    "sum_n geom_power_sum(1,n,x) geom_power_sum(2,n,y) z^n / n^4", _ABC, _ABC_DEFAULTS)


def _eq62_printed(p):
    x, y, z = p["x"], p["y"], p["z"]
    xy = x * y
    a2, a3 = (1 - x) ** 2, (1 - x) ** 3
    b3, b4, b5 = (1 - y) ** 3, (1 - y) ** 4, (1 - y) ** 5
    return math.fsum([
        -xy / (a2 * b3) * LOG1(-xy * z),
        -xy * (2 * x + y - 3) / (a3 * b4) * li(2, xy * z),
        xy / (a3 * b3) * li(2, y * z),
        xy * (y + 1) / (a3 * b5) * li(4, xy * z),
        -xy * (xy + x + y - 3) / (a3 * b5) * li(3, xy * z),
        -xy * (y + 1) / (a2 * b5) * li(3, x * z),
        -xy * (y + 1) / (a3 * b5) * li(4, x * z),
        -2 * xy / (a3 * b4) * li(3, y * z),
        -xy * (1 + y) / (a3 * b5) * li(4, y * z),
        xy * (1 + y) / (a3 * b5) * li(4, z),
    ])


lattice_case(
    "thm23.61a", "vpv_pyramid", "Theorem 23.61a, (23.62)",
    "prod_{l,m<=n} (1/(1 - x^l y^m z^n))^(l m^2/n^4) = six printed exponential factors",
    SP3, (-1, -2, 4), lambda p: (p["x"], p["y"], p["z"]), _eq62_printed,
    "ten-term log of the printed factors", _ABC, _ABC_DEFAULTS,
    expectation="check_and_report", note="printed factors do not reproduce the series")
lattice_case(
    "thm23.61a-corrected", "vpv_pyramid", "Theorem 23.61a, (23.62)",
    "prod_{l,m<=n} (1/(1 - x^l y^m z^n))^(l m^2/n^4) = exp(polylog expansion)",
    SP3, (-1, -2, 4), lambda p: (p["x"], p["y"], p["z"]),
    lambda p: pyramid_exponent([1, 2], [p["x"], p["y"]], 4, p["z"]),
    "polylog expansion of sum_n A(n,x) B(n,y) z^n / n^4", _ABC, _ABC_DEFAULTS)

# -- Euler pyramids -----------------------------------------------------------


def euler_pyramid_printed(m, y, z):
    """sum_k (y/1 + ... + y^k/k)^(m+1) z^(k+1) / (k+1)^m"""
    return pyramid_series([y] * (m + 1), [1] * (m + 1), z, m, offset=1)


def euler_pyramid_derived(m, y, z, lower):
    """sum_K z^K/K (sum_{j=lower}^{K-1} y^j)^(m+1), the expansion of the product itself."""
    acc = [0.0]

    def term(K):
        j = K - 1
        if j >= lower:
            acc[0] += y ** j
        return z ** K / K * acc[0] ** (m + 1)

    return sum_series(term)


_YZ = {"y": OPEN, "z": OPEN}
_YZ_DEFAULTS = {"y": 0.3, "z": 0.3}


def _euler(case_id, citation, m, lower, expectation, note=""):
    region = LatticeRegion.euler_pyramid(m + 1, lower)
    ex = (0,) * (m + 1) + (1,)
    js = ",".join(f"j{i}" for i in range(1, m + 2))
    stmt = (f"prod_{{{js} < k, j >= {lower}}} (1/(1 - y^(sum j) z^k))^(1/k)"
            f" = exp(sum_k (sum_{{j<=k}} y^j/j)^{m + 1} z^(k+1)/(k+1)^{m})")
    variables = lambda p: (p["y"],) * (m + 1) + (p["z"],)
    lattice_case(
        case_id, "vpv_pyramid", citation, stmt, region, ex, variables,
        lambda p: euler_pyramid_printed(m, p["y"], p["z"]),
        f"sum_k (sum_{{j<=k}} y^j/j)^{m + 1} z^(k+1) / (k+1)^{m}", _YZ, _YZ_DEFAULTS,
        expectation=expectation, note=note, depth=60)
    lattice_case(
        case_id + "-derived", "vpv_pyramid", citation,
        stmt.split(" = ")[0] + f" = exp(sum_K z^K/K (sum_{{j={lower}}}^{{K-1}} y^j)^{m + 1})",
        region, ex, variables, lambda p: euler_pyramid_derived(m, p["y"], p["z"], lower),
        f"sum_K z^K/K (sum_{{j={lower}}}^{{K-1}} y^j)^{m + 1}", _YZ, _YZ_DEFAULTS, depth=60)


_euler("eq23.82", "(23.82)", 2, 0, "check_and_report",
       note="the printed series is not the expansion of the product")
for _id, _m in (("eq23.83", 2), ("eq23.84", 3), ("eq23.85", 4)):
    _euler(_id, f"({_id[2:]})", _m, 1, "assert_pass")
    _euler(_id + "-j0", f"({_id[2:]})", _m, 0, "check_and_report",
           note="lower bound j >= 0 as in the general pyramid statement")

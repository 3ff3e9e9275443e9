"""Products over visible points of the positive hyperquadrant."""
import math

from ...lattice import LatticeRegion
from ...polylog import PHI, li, zeta
from ..build import lattice_case

UNIT = (-1.0, 1.0)
VAR_NAMES = {2: ("y", "z"), 3: ("x", "y", "z"), 4: ("w", "x", "y", "z"), 5: ("v", "w", "x", "y", "z")}


def li_product(orders, values) -> float:
    out = 1.0
    for s, x in zip(orders, values):
        out *= li(s, x)
    return out


def _vars(names):
    return lambda p: tuple(p[n] for n in names)


def _generic(case_id, citation, exponents, defaults, note=""):
    names = VAR_NAMES[len(exponents)]
    orders = tuple(exponents)
    lattice_case(
        case_id, "vpv_hyperquadrant", citation,
        f"hyperquadrant product with exponents {orders} = exp(prod Li_s_i(x_i))",
        LatticeRegion.hyperquadrant(len(orders)), orders, _vars(names),
        lambda p: li_product(orders, [p[n] for n in names]),
        " * ".join(f"li({s},{n})" for s, n in zip(orders, names)),
        {n: UNIT for n in names}, dict(zip(names, defaults)), note=note)


_generic("eq23.38a", "(23.38a)", (0, 1), (0.2, 0.3))
_generic("eq23.38b", "(23.38b), (23.38b1)", (0, -1, 2), (0.2, 0.2, 0.3))
_generic("eq23.38c", "(23.38c), (23.38c1)", (2, -1, 1, -1), (0.2, 0.2, 0.2, 0.3))
_generic("eq23.38d", "(23.38d), (23.38d1)", (1, 0, -1, 2, -1), (0.2, 0.2, 0.2, 0.2, 0.15))

# -- 2D cases ------------------------------------------------------------------

Z3 = zeta(3)
HQ2 = LatticeRegion.hyperquadrant(2)


def _li_m2(z):
    return z * (1 + z) / (1 - z) ** 3


lattice_case(
    "eq23.38a1", "vpv_hyperquadrant", "(23.38a1)",
    "prod (1 - (-1)^a z^b)^(b^2/a^3) = exp(3 z (1+z) zeta(3) / (4 (1-z)^3))",
    HQ2, (3, -2), lambda p: (-1.0, p["z"]),
    lambda p: 3 * p["z"] * (1 + p["z"]) * Z3 / (4 * (1 - p["z"]) ** 3),
    "3 z (1+z) zeta(3) / (4 (1-z)^3)", {"z": UNIT}, {"z": 0.2}, orientation=-1,
    lhs_desc="log prod (1 - (-1)^a z^b)^(b^2/a^3)", depth=400,
    note="|base| = 1 on the a axis: truncation error falls like depth^-2")

for _id, _base, _name, _val in (
        ("eq23.38a2", 0.5, "1/2", 7 / 8 * Z3 - math.pi ** 2 / 12 * math.log(2) + math.log(2) ** 3 / 6),
        ("eq23.38a3", PHI ** -2, "phi^-2",
         0.8 * Z3 - 2 / 15 * math.pi ** 2 * math.log(PHI) + 2 / 3 * math.log(PHI) ** 3)):
    _cit = f"({_id[2:]})"
    lattice_case(
        _id, "vpv_hyperquadrant", _cit,
        f"prod (1 - z^b ({_name})^a)^(b^2/a^3) = exp(+Li3({_name}) Li_-2(z))",
        HQ2, (3, -2), lambda p, b=_base: (b, p["z"]),
        lambda p, v=_val: v * _li_m2(p["z"]),
        f"+Li3({_name}) z(1+z)/(1-z)^3", {"z": UNIT}, {"z": 0.2}, orientation=-1,
        expectation="check_and_report",
        note="the product carries positive exponents, so its log is -Li3 Li_-2",
        lhs_desc=f"log prod (1 - ({_name})^a z^b)^(b^2/a^3)")
    lattice_case(
        _id + "-corrected", "vpv_hyperquadrant", _cit,
        f"prod (1 - z^b ({_name})^a)^(b^2/a^3) = exp(-Li3({_name}) Li_-2(z))",
        HQ2, (3, -2), lambda p, b=_base: (b, p["z"]),
        lambda p, v=_val: -v * _li_m2(p["z"]),
        f"-Li3({_name}) z(1+z)/(1-z)^3", {"z": UNIT}, {"z": 0.2}, orientation=-1,
        lhs_desc=f"log prod (1 - ({_name})^a z^b)^(b^2/a^3)")

lattice_case(
    "eq23.38a4", "vpv_hyperquadrant", "(23.38a4)",
    "prod (1/(1 - y^a z^b))^(b/a^2) = exp(z Li2(y) / (1-z)^2)",
    HQ2, (2, -1), _vars(("y", "z")), lambda p: p["z"] * li(2, p["y"]) / (1 - p["z"]) ** 2,
    "z li(2,y) / (1-z)^2", {"y": UNIT, "z": UNIT}, {"y": 0.2, "z": 0.3})
lattice_case(
    "eq23.38a5", "vpv_hyperquadrant", "(23.38a5)",
    "prod (1/(1 - y^a z^b))^(b^2/a^3) = exp(z (1+z) Li3(y) / (1-z)^3)",
    HQ2, (3, -2), _vars(("y", "z")), lambda p: _li_m2(p["z"]) * li(3, p["y"]),
    "z (1+z) li(3,y) / (1-z)^3", {"y": UNIT, "z": UNIT}, {"y": 0.2, "z": 0.3})

# -- 3D cases ------------------------------------------------------------------

HQ3 = LatticeRegion.hyperquadrant(3)
XYZ = ("x", "y", "z")
XYZ_DOMAIN = {n: UNIT for n in XYZ}
XYZ_DEFAULTS = {"x": 0.2, "y": 0.2, "z": 0.3}


def _poly_z(coeffs, z, power):
    return z * sum(c * z ** i for i, c in enumerate(coeffs)) / (1 - z) ** power


# (id, exponents, final-form log as printed, final-form description, expectation)
_THREE_D = [
    ("eq23.38b2", (1, 1, -1),
     lambda x, y, z: z * math.log1p(-y) / (1 - z) ** 2 * math.log1p(-x),
     "z log(1-y) log(1-x) / (1-z)^2", "assert_pass"),
    ("eq23.38b3", (1, 2, -2),
     lambda x, y, z: _poly_z((1, 1), z, 3) * li(2, y) * math.log1p(-x),
     "z(1+z) li(2,y) log(1-x) / (1-z)^3", "check_and_report"),
    ("eq23.38b4", (1, 3, -3),
     lambda x, y, z: -_poly_z((1, 4, 1), z, 4) * li(3, y) * math.log1p(-x),
     "-z(1+4z+z^2) li(3,y) log(1-x) / (1-z)^4", "assert_pass"),
    ("eq23.38b5", (2, 2, -3),
     lambda x, y, z: _poly_z((1, 4, 1), z, 4) * li(2, x) * li(2, y),
     "z(1+4z+z^2) li(2,x) li(2,y) / (1-z)^4", "assert_pass"),
    ("eq23.38b6", (2, 3, -4),
     lambda x, y, z: _poly_z((1, 11, 11, 1), z, 5) * li(2, x) * li(3, y),
     "z(1+11z+11z^2+z^3) li(2,x) li(3,y) / (1-z)^5", "assert_pass"),
    ("eq23.38b7", (3, 3, -5),
     lambda x, y, z: _poly_z((1, 26, 66, 26, 1), z, 6) * li(3, x) * li(3, y),
     "z(1+26z+66z^2+26z^3+z^4) li(3,x) li(3,y) / (1-z)^6", "assert_pass"),
]

for _id, _ex, _final, _final_desc, _expect in _THREE_D:
    _cit = f"({_id[2:]})"
    _orders_desc = " * ".join(f"li({s},{n})" for s, n in zip(_ex, XYZ))
    lattice_case(
        _id, "vpv_hyperquadrant", _cit,
        f"hyperquadrant product with exponents {_ex} = exp({_orders_desc})",
        HQ3, _ex, _vars(XYZ), lambda p, ex=_ex: li_product(ex, [p[n] for n in XYZ]),
        _orders_desc, XYZ_DOMAIN, XYZ_DEFAULTS)
    lattice_case(
        _id + "-final", "vpv_hyperquadrant", _cit,
        f"hyperquadrant product with exponents {_ex} = the final printed power/exp form",
        HQ3, _ex, _vars(XYZ), lambda p, f=_final: f(p["x"], p["y"], p["z"]),
        _final_desc, XYZ_DOMAIN, XYZ_DEFAULTS, expectation=_expect,
        note="" if _expect == "assert_pass" else "printed base (1-x) instead of 1/(1-x)")

# -- generated 4D and 5D cases -----------------------------------------------

TABLE1 = [
    (3, -2, -3, 3), (2, -2, -2, 3), (1, -2, -1, 3), (3, -1, -3, 2), (2, -1, -2, 2),
    (1, -1, -1, 2), (0, -1, -1, 3), (0, 0, -1, 2), (0, 0, 0, 1), (0, 1, 1, -1),
    (1, 1, 1, -2), (1, 1, 2, -3), (1, 2, 2, -4), (2, 2, 2, -5), (1, 1, 3, -4),
    (1, 2, 3, -5), (2, 2, 3, -6), (2, 3, 3, -7), (3, 3, 3, -8),
]
TABLE2 = [
    (0, 3, -2, -3, 3), (0, 2, -2, -2, 3), (0, 1, -2, -1, 3), (0, 0, -1, -1, 3),
    (0, 3, -1, -3, 2), (0, 2, -1, -2, 2), (0, 1, -1, -1, 2), (0, 0, 0, -1, 2),
    (0, 0, 0, 0, 1), (0, 0, 1, 1, -1), (0, 1, 1, 1, -2), (0, 1, 1, 2, -3),
    (0, 1, 2, 2, -4), (0, 2, 2, 2, -5), (0, 1, 1, 3, -4), (0, 1, 2, 3, -5),
    (0, 2, 2, 3, -6), (0, 2, 3, 3, -7), (0, 3, 3, 3, -8),
    (1, 0, 1, 1, -2), (1, 1, 1, 1, -3), (1, 1, 1, 2, -4), (1, 1, 2, 2, -5),
    (1, 2, 2, 2, -6), (1, 1, 1, 3, -5), (1, 1, 2, 3, -6), (1, 2, 2, 3, -7),
    (1, 2, 3, 3, -8), (1, 3, 3, 3, -9),
]
# orders printed in the log-RHS column of rows 20-29
TABLE2_PRINTED_ORDERS = {
    20: (0, 0, 1, 1, -1), 21: (0, 1, 1, 1, -2), 22: (0, 1, 1, 2, -3), 23: (0, 1, 2, 2, -4),
    24: (0, 2, 2, 2, -5), 25: (0, 1, 1, 3, -4), 26: (0, 1, 2, 3, -5), 27: (0, 2, 2, 3, -6),
    28: (0, 2, 3, 3, -7), 29: (0, 3, 3, 3, -8),
}
TABLE_DEFAULTS = {4: (0.2, 0.2, 0.2, 0.3), 5: (0.2, 0.2, 0.2, 0.2, 0.15)}


def _table_case(case_id, citation, exponents, orders, expectation="assert_pass", note=""):
    dim = len(exponents)
    names = VAR_NAMES[dim]
    assert sum(exponents) == 1
    desc = " * ".join(f"li({s},{n})" for s, n in zip(orders, names))
    lattice_case(
        case_id, "vpv_hyperquadrant", citation,
        f"{dim}D hyperquadrant product with exponents {tuple(exponents)} = exp({desc})",
        LatticeRegion.hyperquadrant(dim), exponents, _vars(names),
        lambda p, o=tuple(orders): li_product(o, [p[n] for n in names]),
        desc, {n: UNIT for n in names}, dict(zip(names, TABLE_DEFAULTS[dim])),
        expectation=expectation, note=note)


for _i, _ex in enumerate(TABLE1, 1):
    _table_case(f"table1.row{_i}", f"Table 1 row {_i}, (23.38c1)", _ex, _ex)
for _i, _ex in enumerate(TABLE2, 1):
    _table_case(f"table2.row{_i}", f"Table 2 row {_i}, (23.38d1)", _ex, _ex)
for _i, _orders in TABLE2_PRINTED_ORDERS.items():
    _table_case(f"printed-table2.row{_i}", f"Table 2 row {_i}, (23.38d1)", TABLE2[_i - 1],
                _orders, expectation="check_and_report",
                note="printed orders sit one below the exponent columns")

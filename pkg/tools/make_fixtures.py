"""Write the JSON fixtures under fixtures/ from the named builders.

Run from the repository root:  python3 tools/make_fixtures.py
The mutation fixtures are hand-corrupted copies of valid schemes; each one is
described in fixtures/mutations/manifest.json.
"""
import copy
import json
import os
import sys

from ringschemes import catalog
from ringschemes.arith.field import get_field
from ringschemes.prolong import IdealPresentation

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "fixtures")


def write(path, data):
    path = os.path.join(FIX, path)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")


def ideal(ctx, variables, gens):
    return IdealPresentation.build(ctx, variables, gens).to_json()


def schemes():
    for name, builder in catalog.SCHEMES.items():
        write(f"{name}.json", builder().to_json())
    write("dual_f5.json", catalog.dual(5).to_json())
    write("dual_f2.json", catalog.dual(2).to_json())
    write("dual_twisted_f2.json", catalog.dual_twisted(2).to_json())
    write("prod_f4.json", catalog.prod(2, 2).to_json())


def operators():
    write("op_dual_zero.json", {"scheme": "dual_f5.json", "base": {"q": 5, "gens": []}, "values": {}})
    write(
        "op_twdual_t.json",
        {"scheme": "dual_twisted_f2.json", "base": {"q": 2, "gens": ["t1"]}, "values": {"t1": ["t1", "1"]}},
    )
    write(
        "op_twistex.json",
        {
            "scheme": "twistex1.json",
            "base": {"q": 2, "gens": ["t1", "t2"]},
            "values": {"t1": ["t1", "0", "t2"], "t2": ["t2", "0", "0"]},
        },
    )
    write(
        "op_prod_f4.json",
        {"scheme": "prod_f4.json", "base": {"q": 4, "gens": []}, "values": {}, "fq_part": [[0, 1], [1, 1]]},
    )


def ideals():
    f5 = get_field(5)
    f2 = get_field(2)
    write("ideal_a1.json", ideal(f5, ["x1"], []))
    write("ideal_parabola.json", ideal(f5, ["x1", "x2"], ["x2 - x1^2"]))
    write(
        "ideal_parabola_tau.json",
        ideal(f5, ["x1_1", "x1_2", "x2_1", "x2_2"], ["x2_1 - x1_1^2", "x2_2 - 2*x1_1*x1_2"]),
    )
    write("ideal_tau_a1.json", ideal(f5, ["x1_1", "x1_2"], []))
    write("ideal_cut.json", ideal(f5, ["x1_1", "x1_2"], ["x1_2 - 1"]))
    write("ideal_sqrt.json", ideal(f2, ["x1"], ["x1^2 - t1"]))


def skew():
    write("skew_div_f4.json", {"p": 2, "field": {"deg": 2}, "f": [[1], [0, 1], [1, 1], [1]], "g": [[0, 1], [1]]})
    write(
        "skew_theta_twistex.json",
        {"p": 2, "field": {"deg": 1}, "matrix": [[[[1]], [], []], [[], [[0], [1]], []], [[], [], [[0], [0], [1]]]]},
    )
    write(
        "skew_mixed_f2.json",
        {"p": 2, "field": {"deg": 1}, "matrix": [[[[0], [1]], [[1]]], [[[1], [1]], [[0], [0], [1]]]]},
    )


def _mult(*coords):
    return [[dict(c=[m[0]], j=m[1], k=m[2], r=m[3], s=m[4]) for m in coord] for coord in coords]


def mutations():
    dual2 = catalog.dual(2).to_json()
    dual3 = catalog.dual(3).to_json()
    kx3 = catalog.kx3().to_json()
    entries = []

    def add(name, data, command, expected, note):
        write(f"mutations/{name}.json", data)
        entries.append({"name": name, "file": f"{name}.json", "command": command, "expected": expected, "note": note})

    m = copy.deepcopy(dual3)
    m["mult"] = _mult([(1, 1, 1, 0, 0)], [(1, 1, 2, 1, 0), (1, 2, 1, 0, 0)])
    add("m01", m, "verify", {"kind": "InvalidScheme", "axiom": "commutativity"},
        "second coordinate x^p y' + x' y is not symmetric")

    m = copy.deepcopy(dual2)
    m["mult"] = _mult([(1, 1, 1, 0, 0), (1, 2, 2, 0, 0)], [(1, 1, 2, 0, 0), (1, 2, 1, 0, 0)])
    add("m02", m, "verify", {"kind": "InvalidScheme", "axiom": "projection"},
        "first coordinate picks up x' y'")

    m = copy.deepcopy(dual2)
    m["iota"] = [{"c": [1], "i": 1, "r": 1}]
    add("m03", m, "verify", {"kind": "InvalidScheme", "axiom": "iota_projection"},
        "iota(x) = (x^2, 0) breaks pi(iota(x)) = x")

    m = copy.deepcopy(dual2)
    m["mult"] = _mult([(1, 1, 1, 0, 0)], [(1, 1, 2, 0, 0), (1, 2, 1, 0, 0), (1, 2, 2, 1, 1)])
    add("m04", m, "verify", {"kind": "InvalidScheme", "axiom": "associativity"},
        "extra term (x' y')^2 in the second coordinate")

    m = copy.deepcopy(dual2)
    m["mult"] = _mult([(1, 1, 1, 0, 0)], [(1, 1, 2, 0, 0), (1, 2, 1, 0, 0), (1, 1, 1, 0, 0)])
    add("m05", m, "verify", {"kind": "InvalidScheme", "axiom": "unit"},
        "extra term x y in the second coordinate")

    m = copy.deepcopy(dual2)
    m["iota"] = [{"c": [1], "i": 1, "r": 0}, {"c": [1], "i": 2, "r": 0}, {"c": [1], "i": 2, "r": 1}]
    add("m06", m, "verify", {"kind": "InvalidScheme", "axiom": "iota_multiplicativity"},
        "iota(x) = (x, x + x^2) is additive but not multiplicative")

    m = copy.deepcopy(dual2)
    m["mult"] = _mult([(1, 1, 1, 0, 0)], [(1, 2, 2, 0, 0)])
    add("m07", m, "classify", {"kind": "InvalidScheme", "axiom": "theta_identity"},
        "second coordinate x' y' gives a Theta whose first column is not the unit vector")

    m = copy.deepcopy(dual3)
    m["mult"] = _mult(
        [(1, 1, 1, 0, 0)],
        [(2, 1, 2, 0, 0), (2, 1, 2, 1, 0), (2, 2, 1, 0, 0), (2, 2, 1, 0, 1)],
    )
    add("m08", m, "classify", {"kind": "NotClassifiable", "reason": "not_frobenius_power"},
        "Theta entry 2X + 2X^3 is not a monomial")

    m = copy.deepcopy(kx3)
    m["mult"][1][0]["c"] = [0]
    add("m09", m, "verify", {"kind": "InvalidScheme", "axiom": "structure"},
        "zero coefficient in a multiplication monomial")

    m = copy.deepcopy(kx3)
    m["e"] = 4
    add("m10", m, "verify", {"kind": "InvalidScheme", "axiom": "structure"},
        "declared dimension does not match the multiplication table")

    write("mutations/manifest.json", entries)


def main():
    schemes()
    operators()
    ideals()
    skew()
    mutations()
    return 0


if __name__ == "__main__":
    sys.exit(main())

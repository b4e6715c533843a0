"""Regenerate goldens/ from the CLI.

Run from the repository root:  python3 tools/regen_goldens.py
Each golden file holds the exact stdout of one CLI invocation; the manifest
records the argument vector and the expected exit status.  Review the diff
before committing: goldens are the byte-level contract of the CLI.
"""
import contextlib
import io
import json
import os
import sys

from ringschemes.cli import main as cli_main

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDENS = os.path.join(ROOT, "goldens")

CLOSING_FIBER = [
    "prolong", "fiber", "fixtures/op_twistex.json", "fixtures/ideal_sqrt.json",
    "--point", '{"x1": "t3"}', "--minpoly", "t3^2 + t1", "--ext", "t3",
    "--substitute", '{"t1": "t3^2"}',
]

COMMANDS = {
    "scheme_verify_dual": ["scheme", "verify", "fixtures/dual.json"],
    "scheme_twist_dual_n1": ["scheme", "twist", "fixtures/dual.json", "--n", "1"],
    "scheme_twist_dual_n2": ["scheme", "twist", "fixtures/dual.json", "--n", "2"],
    "scheme_transport_kx3_021": ["scheme", "transport", "fixtures/kx3.json", "--exps", "0,2,1"],
    "scheme_transport_kx3_012": ["scheme", "transport", "fixtures/kx3.json", "--exps", "0,1,2"],
    "scheme_classify_dual_twisted": ["scheme", "classify", "fixtures/dual_twisted.json"],
    "scheme_classify_twistex1": ["scheme", "classify", "fixtures/twistex1.json"],
    "scheme_classify_kx3_twisted": ["scheme", "classify", "fixtures/kx3_twisted.json"],
    "scheme_assumption2_dual_twisted": ["scheme", "assumption2", "fixtures/dual_twisted.json"],
    "scheme_assumption2_twistex1": ["scheme", "assumption2", "fixtures/twistex1.json"],
    "scheme_power_twistex1": ["scheme", "power", "fixtures/twistex1.json", "--n", "2"],
    "scheme_compose_twistex1": ["scheme", "compose", "fixtures/twistex1.json"],
    "scheme_companion_dual_twisted": ["scheme", "companion", "fixtures/dual_twisted.json"],
    "scheme_companion_prod": ["scheme", "companion", "fixtures/prod.json"],
    "scheme_companion_split_pair": ["scheme", "companion", "fixtures/split_pair.json"],
    "scheme_companion_split_dual": ["scheme", "companion", "fixtures/split_dual.json"],
    "scheme_companion_kx3_twisted": ["scheme", "companion", "fixtures/kx3_twisted.json"],
    "scheme_companion_twistex1": ["scheme", "companion", "fixtures/twistex1.json"],
    "skew_div_f4": ["skew", "div", "fixtures/skew_div_f4.json"],
    "skew_diag_theta_twistex": ["skew", "diag", "fixtures/skew_theta_twistex.json"],
    "skew_diag_mixed_f2": ["skew", "diag", "fixtures/skew_mixed_f2.json"],
    "op_apply_t_squared": ["op", "apply", "fixtures/op_twdual_t.json", "t1^2"],
    "op_apply_t_plus_one": ["op", "apply", "fixtures/op_twdual_t.json", "t1 + 1"],
    "op_apply_fraction": ["op", "apply", "fixtures/op_twdual_t.json", "1/t1"],
    "op_constant_t_squared": ["op", "constant", "fixtures/op_twdual_t.json", "t1^2"],
    "op_constant_t": ["op", "constant", "fixtures/op_twdual_t.json", "t1"],
    "op_iterate_twistex_2": ["op", "iterate", "fixtures/op_twistex.json", "t1", "--n", "2"],
    "op_iterate_depth_exceeded": ["op", "iterate", "fixtures/op_twistex.json", "t1", "--n", "5"],
    "op_member_twistex_2": ["op", "member", "fixtures/op_twistex.json", "t1", "--n", "2"],
    "op_apply_prod_f4": ["op", "apply", "fixtures/op_prod_f4.json", "w"],
    "prolong_ideal_parabola": ["prolong", "ideal", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json"],
    "prolong_point_parabola": [
        "prolong", "point", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json",
        "--point", '{"x1": "2", "x2": "4"}',
    ],
    "prolong_point_off_variety": [
        "prolong", "point", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json",
        "--point", '{"x1": "2", "x2": "3"}',
    ],
    "prolong_fiber_closing": CLOSING_FIBER,
    "prolong_equalizer_a1": [
        "prolong", "equalizer", "fixtures/op_dual_zero.json", "fixtures/ideal_a1.json", "fixtures/ideal_tau_a1.json",
    ],
    "prolong_equalizer_not_subscheme": [
        "prolong", "equalizer", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json",
        "fixtures/ideal_tau_a1.json",
    ],
    "axioms_check_a1": [
        "axioms", "check", "fixtures/op_dual_zero.json", "fixtures/ideal_a1.json", "fixtures/ideal_tau_a1.json",
    ],
    "axioms_check_parabola": [
        "axioms", "check", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json",
        "fixtures/ideal_parabola_tau.json",
    ],
    "witness_search_full": [
        "witness", "search", "fixtures/op_dual_zero.json", "fixtures/ideal_parabola.json",
        "fixtures/ideal_parabola_tau.json",
    ],
    "witness_search_cut": [
        "witness", "search", "fixtures/op_dual_zero.json", "fixtures/ideal_a1.json", "fixtures/ideal_cut.json",
    ],
}


def mutation_commands():
    with open(os.path.join(ROOT, "fixtures", "mutations", "manifest.json")) as fh:
        entries = json.load(fh)
    out = {}
    for entry in entries:
        argv = ["scheme", entry["command"], f"fixtures/mutations/{entry['file']}"]
        if entry["command"] == "classify":
            argv.append("--skip-verify")
        out[f"mutation_{entry['name']}"] = argv
    return out


def all_commands():
    commands = dict(COMMANDS)
    commands.update(mutation_commands())
    return commands


def run(argv):
    """Run the CLI in-process from the repository root; return (exit code, stdout)."""
    buf = io.StringIO()
    cwd = os.getcwd()
    os.chdir(ROOT)
    try:
        with contextlib.redirect_stdout(buf):
            code = cli_main(argv)
    finally:
        os.chdir(cwd)
    return code, buf.getvalue()


def main():
    os.makedirs(GOLDENS, exist_ok=True)
    manifest = []
    for name, argv in sorted(all_commands().items()):
        code, out = run(argv)
        with open(os.path.join(GOLDENS, f"{name}.json"), "w") as fh:
            fh.write(out)
        manifest.append({"name": name, "argv": argv, "exit": code})
        print(f"{name}: exit {code}", file=sys.stderr)
    with open(os.path.join(GOLDENS, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled and pure-Python zero-enumeration kernels.

Usage:  python3 benchmarks/bench_kernel.py [--repeat 3]

Each case is a polynomial system from the prolongation code paths, flattened
once with CompiledSystem and then enumerated by both kernels.  The results are
checked to agree before timings are reported.
"""
import argparse
import sys
import time

from ringschemes import catalog
from ringschemes._kernel_py import common_zeros as python_kernel
from ringschemes.arith import get_field, parse_poly, parse_var
from ringschemes.operator import BOperator
from ringschemes.prolong import prolongation_ideal
from ringschemes.search import CompiledSystem

try:
    from ringschemes._kernel import common_zeros as compiled_kernel
except ImportError:
    compiled_kernel = None


def prolongation_case(S, V):
    tau = prolongation_ideal(BOperator.zero_operator(S), V)
    return S.ctx, list(tau.gens), tau.vars


def cases():
    f9 = get_field(3, 2)
    f16 = get_field(2, 4)
    f7 = get_field(7)
    yield "tau parabola, dual numbers over F_9 (4 vars)", prolongation_case(catalog.dual(3, 2), catalog.parabola(f9))
    yield "tau A^2, twisted dual over F_7 (4 vars)", prolongation_case(catalog.dual_twisted(7), catalog.affine_space(f7, 2))
    xs = [f"x{i}" for i in range(1, 6)]
    system = [parse_poly(f16, "x1^3 + w*x2*x3 + x4^2 + x5"), parse_poly(f16, "x1*x5 - x2^2 + 1")]
    yield "two equations over F_16 (5 vars)", (f16, system, [parse_var(x) for x in xs])


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if compiled_kernel is None:
        print("compiled kernel not built; run pip install -e . --no-build-isolation", file=sys.stderr)
        return 1
    print(f"{'case':48} {'points':>9} {'zeros':>7} {'python s':>9} {'compiled s':>11} {'speedup':>8}")
    for label, (ctx, polys, variables) in cases():
        system = CompiledSystem(ctx, polys, variables)
        t_py, r_py = best_time(lambda: system.run(kernel=python_kernel), args.repeat)
        t_c, r_c = best_time(lambda: system.run(kernel=compiled_kernel), args.repeat)
        if r_py != r_c:
            print(f"{label}: kernels disagree", file=sys.stderr)
            return 1
        points = ctx.q ** len(variables)
        print(f"{label:48} {points:>9} {r_c[0]:>7} {t_py:>9.3f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled common-zero enumeration over F_q^n.

Same contract as ``ringschemes._kernel_py.common_zeros``; see there.
"""
from cpython cimport array
import array


def common_zeros(int q, int nvars,
                 const int[:] add, const int[:] mul, const int[:] powt,
                 const int[:] poly_start, const int[:] term_coeff, const int[:] term_start,
                 const int[:] fac_var, const int[:] fac_exp,
                 long long max_hits=0, bint count_only=False):
    cdef array.array pt_arr = array.array("i", [0] * nvars)
    cdef int[:] pt = pt_arr
    cdef int npolys = poly_start.shape[0] - 1
    cdef int pi, ti, fi, i, v, acc
    cdef bint ok
    cdef long long count = 0
    hits = []
    while True:
        ok = True
        for pi in range(npolys):
            acc = 0
            for ti in range(poly_start[pi], poly_start[pi + 1]):
                v = term_coeff[ti]
                for fi in range(term_start[ti], term_start[ti + 1]):
                    v = mul[v * q + powt[pt[fac_var[fi]] * q + fac_exp[fi]]]
                    if v == 0:
                        break
                acc = add[acc * q + v]
            if acc != 0:
                ok = False
                break
        if ok:
            count += 1
            if not count_only:
                hits.append(tuple(pt_arr))
            if max_hits > 0 and count >= max_hits:
                break
        i = nvars - 1
        while i >= 0:
            pt[i] += 1
            if pt[i] < q:
                break
            pt[i] = 0
            i -= 1
        if i < 0:
            break
    return count, hits

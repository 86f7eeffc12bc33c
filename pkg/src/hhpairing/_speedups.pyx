# cython: language_level=3
"""Compiled versions of the loops in ``_reference``; same signatures."""

from array import array


def monomial_product(list a, list b, const int[::1] idx, list coef, Py_ssize_t dim):
    cdef Py_ssize_t i, j, t, row, nnz = 0
    cdef int k
    cdef object ai
    cdef list out = [0] * dim
    cdef int[::1] nzb = array("i", [0]) * dim
    for j in range(dim):
        if b[j]:
            nzb[nnz] = <int>j
            nnz += 1
    for i in range(dim):
        ai = a[i]
        if not ai:
            continue
        row = i * dim
        for t in range(nnz):
            j = nzb[t]
            k = idx[row + j]
            if k >= 0:
                out[k] = out[k] + ai * b[j] * coef[row + j]
    return out


def weighted_gram(const int[::1] idx, list coef, list u, Py_ssize_t dim):
    cdef Py_ssize_t r, n = dim * dim
    cdef int k
    cdef object uk
    cdef list out = [0] * n
    for r in range(n):
        k = idx[r]
        if k >= 0:
            uk = u[k]
            if uk:
                out[r] = coef[r] * uk
    return out


def tensor_tables(const int[::1] idx_a, list coef_a, Py_ssize_t dim_a, par_a,
                  const int[::1] idx_b, list coef_b, Py_ssize_t dim_b, par_b):
    cdef Py_ssize_t dim = dim_a * dim_b
    cdef Py_ssize_t i, i2, j, j2, row, r
    cdef int ka, kb, sign
    cdef bint odd_a2
    cdef object ca
    cdef unsigned char[::1] pa = bytearray(par_a)
    cdef unsigned char[::1] pb = bytearray(par_b)
    idx_arr = array("i", [-1]) * (dim * dim)
    cdef int[::1] idx = idx_arr
    cdef list coef = [0] * (dim * dim)
    for i in range(dim_a):
        for i2 in range(dim_a):
            ka = idx_a[i * dim_a + i2]
            if ka < 0:
                continue
            ca = coef_a[i * dim_a + i2]
            odd_a2 = pa[i2]
            for j in range(dim_b):
                sign = -1 if (odd_a2 and pb[j]) else 1
                row = (i * dim_b + j) * dim + i2 * dim_b
                for j2 in range(dim_b):
                    kb = idx_b[j * dim_b + j2]
                    if kb < 0:
                        continue
                    r = row + j2
                    idx[r] = ka * <int>dim_b + kb
                    coef[r] = sign * ca * coef_b[j * dim_b + j2]
    return idx_arr, coef

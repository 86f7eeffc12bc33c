"""Pure-Python inner loops over integer numerators.

Structure tables are flat: ``idx[i*dim + j]`` is the basis index of
``e_i * e_j`` (or -1 when the product vanishes) and ``coef[i*dim + j]`` its
integer coefficient. All values are Python ints so nothing overflows.
"""

from __future__ import annotations

from array import array


def monomial_product(a, b, idx, coef, dim):
    out = [0] * dim
    nzb = [j for j in range(dim) if b[j]]
    for i in range(dim):
        ai = a[i]
        if not ai:
            continue
        row = i * dim
        for j in nzb:
            k = idx[row + j]
            if k >= 0:
                out[k] += ai * b[j] * coef[row + j]
    return out


def weighted_gram(idx, coef, u, dim):
    """Flat matrix ``G[i*dim + j] = coef[i,j] * u[idx[i,j]]``."""
    out = [0] * (dim * dim)
    for r in range(dim * dim):
        k = idx[r]
        if k >= 0:
            uk = u[k]
            if uk:
                out[r] = coef[r] * uk
    return out


def tensor_tables(idx_a, coef_a, dim_a, par_a, idx_b, coef_b, dim_b, par_b):
    """Structure table of A (x) B with the Koszul sign (-1)^{|b||a'|}.

    Basis element (i, j) of the tensor algebra sits at ``i*dim_b + j``.
    """
    dim = dim_a * dim_b
    idx = array("i", [-1]) * (dim * dim)
    coef = [0] * (dim * dim)
    for i in range(dim_a):
        for i2 in range(dim_a):
            ka = idx_a[i * dim_a + i2]
            if ka < 0:
                continue
            ca = coef_a[i * dim_a + i2]
            odd_a2 = par_a[i2]
            for j in range(dim_b):
                sign = -1 if (odd_a2 and par_b[j]) else 1
                row = (i * dim_b + j) * dim + i2 * dim_b
                for j2 in range(dim_b):
                    kb = idx_b[j * dim_b + j2]
                    if kb < 0:
                        continue
                    r = row + j2
                    idx[r] = ka * dim_b + kb
                    coef[r] = sign * ca * coef_b[j * dim_b + j2]
    return idx, coef

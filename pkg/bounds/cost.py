"""
Matrix multiplication work estimate s^2 / (nu k m) for one enhancement step.

s counts nonzero entries over the coefficients, nu the nonzero non-leading coefficients,
k and m describe the l-ification (k blocks of the source size m).
"""

import numpy as np

from matpoly import Monomial, make_monic, nnz_stats


def cost_estimate(L, k, m, count_leading=True):
    """s^2 / (nu k m) for the working polynomial L.

    count_leading=False drops the leading identity from s: it is never multiplied, and this
    is the count the benchmark tables are built on.
    """
    s, nu = nnz_stats(L)
    if nu == 0:
        raise Monomial("cost estimate needs at least one nonzero non-leading coefficient")
    if not count_leading:
        s -= int(np.count_nonzero(L.leading))
    return s * s / (nu * k * m)


def cost_baseline(P):
    """Work of one left enhancement applied to the original (k = 1) polynomial"""
    monic = make_monic(P)
    return cost_estimate(monic, 1, monic.m, count_leading=False)

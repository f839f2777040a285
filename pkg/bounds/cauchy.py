#!/usr/bin/env python3
"""
Cauchy Radius of a Matrix Polynomial
The unique positive root r of ||A_n^-1||^-1 z^n - ||A_{n-1}|| z^{n-1} - ... - ||A_0|| bounds
the modulus of every finite eigenvalue of P.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy import linalg

from matpoly import InvalidCoefficients, NormKind, check_leading, nnz_stats, norm

logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-12
ROOT_MAX_ITERATIONS = 200


class Side(str, Enum):
    LEFT = 'L'
    RIGHT = 'R'


@dataclass(frozen=True)
class ScalarBoundPoly:
    """b[j] = ||A_j|| for j < n and b[n] = ||A_n^-1||^-1"""
    b: tuple
    norm_kind: NormKind = NormKind.ONE

    @property
    def degree(self):
        return len(self.b) - 1


@dataclass(frozen=True)
class BoundStep:
    radius: float
    equation_degree: int
    side: Optional[Side] = None
    gap_i: int = 0
    cost_units: float = 0.0
    s: int = 0
    nu: int = 0

    def to_dict(self):
        return {
            'radius': self.radius,
            'degree': self.equation_degree,
            'side': self.side.value if self.side is not None else 'none',
            'gap': self.gap_i,
            'cost': self.cost_units,
            's': self.s,
            'nu': self.nu,
        }


def scalar_bound_poly(P, kind=NormKind.ONE):
    kind = NormKind(kind)
    if P.is_monic():
        lead = 1.0
    else:
        check_leading(P.leading)
        lead = 1.0 / norm(linalg.inv(P.leading, check_finite=False), kind)
    b = tuple(norm(A, kind) for A in P.coeffs[:-1]) + (lead,)
    return ScalarBoundPoly(b=b, norm_kind=kind)


def solve_cauchy_scalar(sp):
    """Unique positive root of b_n x^n - sum_{j<n} b_j x^j, or 0 when all b_j vanish.

    Works on h(x) = 1 - sum_j c_j x^(j-n) with c = b / b_n, which is increasing and concave
    for x > 0, inside the bracket [max_j c_j^(1/(n-j)), 1 + max_j c_j]. Newton steps that leave
    the bracket are replaced by bisection.
    """
    b = np.asarray(sp.b, dtype=float)
    if b.size == 0 or not np.all(np.isfinite(b)) or b[-1] <= 0.0 or np.any(b[:-1] < 0.0):
        raise InvalidCoefficients(f"need b_n > 0 and b_j >= 0, got {sp.b}")
    n = b.size - 1
    c = b[:-1] / b[-1]
    if not np.any(c > 0.0):
        return 0.0

    powers = n - np.arange(n)
    positive = c > 0.0
    lo = float(np.max(c[positive] ** (1.0 / powers[positive])))
    hi = 1.0 + float(np.max(c))

    # sum_j c_j y^(n-j) as a polynomial in y = 1/x, highest power first
    s_coeffs = np.append(c, 0.0)
    ds_coeffs = np.polyder(s_coeffs)

    def h(x):
        y = 1.0 / x
        return 1.0 - np.polyval(s_coeffs, y), np.polyval(ds_coeffs, y) * y * y

    f, df = h(lo)
    if f >= 0.0:
        return lo

    x, x_lo, x_hi = lo, lo, hi
    for _ in range(ROOT_MAX_ITERATIONS):
        x_new = x - f / df if df > 0.0 else np.nan
        if not (x_lo < x_new < x_hi):
            x_new = 0.5 * (x_lo + x_hi)
        converged = abs(x_new - x) <= ROOT_TOLERANCE * x_new
        x = x_new
        if converged:
            break
        f, df = h(x)
        if f == 0.0:
            break
        if f < 0.0:
            x_lo = x
        else:
            x_hi = x
        if x_hi - x_lo <= ROOT_TOLERANCE * x_hi:
            break
    else:
        logger.warning(f"Cauchy root solver hit {ROOT_MAX_ITERATIONS} iterations (degree {n})")
    return float(x)


def cauchy_radius(P, kind=NormKind.ONE):
    """Step-0 bound: the Cauchy radius of P under the chosen norm"""
    sp = scalar_bound_poly(P, kind)
    radius = solve_cauchy_scalar(sp)
    s, nu = nnz_stats(P)
    logger.debug(f"Cauchy radius {radius:.6g} (degree {P.degree}, {sp.norm_kind.value}-norm)")
    return BoundStep(radius=radius, equation_degree=P.degree, s=s, nu=nu)

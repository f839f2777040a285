#!/usr/bin/env python3
"""
Square Complex Matrix Polynomials
Representation, arithmetic and structural queries for P(z) = A_0 + A_1 z + ... + A_n z^n
"""

import logging
from enum import Enum

import numpy as np
from scipy import linalg

from .errors import (DimensionMismatch, InvalidPolynomial, Monomial,
                     SingularLeading)

logger = logging.getLogger(__name__)

# Beyond this the term ||A_n^-1||^-1 carries no information in double precision
MAX_LEADING_CONDITION = 1e12


class MonicSide(str, Enum):
    PRE = 'pre'
    POST = 'post'


def as_complex_matrix(values):
    """Return a square, finite complex128 matrix or raise InvalidPolynomial"""
    matrix = np.array(values, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise InvalidPolynomial(f"expected a square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidPolynomial("matrix has NaN or infinite entries")
    return matrix


class MatrixPoly:
    """Matrix polynomial with m x m complex coefficients stored in ascending order.

    The degree is nominal: a zero or singular leading coefficient is kept as given.
    Instances are immutable; the coefficient array is read-only.
    """

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.ndim == 1:
            # scalar polynomial given as a plain list
            arr = arr.reshape(-1, 1, 1)
        if arr.ndim != 3 or arr.shape[0] == 0 or arr.shape[1] != arr.shape[2] or arr.shape[1] == 0:
            raise InvalidPolynomial(f"expected (n+1, m, m) coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvalidPolynomial("coefficients have NaN or infinite entries")
        arr.flags.writeable = False
        self._coeffs = arr

    @classmethod
    def identity(cls, m):
        """Degree-0 identity polynomial"""
        return cls(np.eye(m, dtype=np.complex128)[None, :, :])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def m(self):
        return self._coeffs.shape[1]

    @property
    def degree(self):
        return self._coeffs.shape[0] - 1

    @property
    def leading(self):
        return self._coeffs[-1]

    def coeff(self, j):
        """A_j, with inadmissible indices read as the zero matrix"""
        if 0 <= j <= self.degree:
            return self._coeffs[j]
        return np.zeros((self.m, self.m), dtype=np.complex128)

    def is_monic(self):
        return bool(np.array_equal(self.leading, np.eye(self.m)))

    def __eq__(self, other):
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        return self._coeffs.shape == other._coeffs.shape and bool(np.array_equal(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash((self._coeffs.shape, self._coeffs.tobytes()))

    def __repr__(self):
        return f"MatrixPoly(m={self.m}, degree={self.degree})"


def evaluate(P, z):
    """Evaluate P(z) by Horner's scheme"""
    result = P.coeffs[-1].copy()
    for A in P.coeffs[-2::-1]:
        result = result * z + A
    return result


def reverse(P):
    """Reverse polynomial z^n P(1/z); the nominal degree is kept"""
    return MatrixPoly(P.coeffs[::-1])


def check_leading(A):
    """Raise SingularLeading when A is zero or its 1-norm condition number exceeds the guard"""
    if not A.any():
        raise SingularLeading("leading coefficient is the zero matrix")
    try:
        condition = np.linalg.cond(A, 1)
    except np.linalg.LinAlgError:
        condition = np.inf
    if not np.isfinite(condition) or condition > MAX_LEADING_CONDITION:
        raise SingularLeading(f"leading coefficient condition number {condition:.3g} exceeds {MAX_LEADING_CONDITION:.0e}")
    return condition


def make_monic(P, side=MonicSide.PRE):
    """Multiply every coefficient by A_n^-1 on the left (pre) or right (post).

    The leading coefficient of the result is written as the exact identity.
    """
    side = MonicSide(side)
    if P.is_monic():
        return P
    check_leading(P.leading)
    identity = np.eye(P.m, dtype=np.complex128)
    if P.degree == 0:
        return MatrixPoly(identity[None, :, :])
    lu_piv = linalg.lu_factor(P.leading, check_finite=False)
    lower = list(P.coeffs[:-1])
    if side is MonicSide.PRE:
        solved = linalg.lu_solve(lu_piv, np.concatenate(lower, axis=1), check_finite=False)
        blocks = np.split(solved, len(lower), axis=1)
    else:
        # X A_n = A  <=>  A_n^H X^H = A^H
        stacked = np.concatenate([A.conj().T for A in lower], axis=1)
        solved = linalg.lu_solve(lu_piv, stacked, trans=2, check_finite=False)
        blocks = [B.conj().T for B in np.split(solved, len(lower), axis=1)]
    blocks.append(identity)
    logger.debug(f"monicized degree-{P.degree} polynomial ({side.value}-multiplication)")
    return MatrixPoly(np.stack(blocks))


def mul(P, Q):
    """Coefficient convolution P(z) Q(z); the result degree is deg P + deg Q"""
    if P.m != Q.m:
        raise DimensionMismatch(f"block sizes differ: {P.m} and {Q.m}")
    out = np.zeros((P.degree + Q.degree + 1, P.m, P.m), dtype=np.complex128)
    q_nonzero = [(j, B) for j, B in enumerate(Q.coeffs) if B.any()]
    for i, A in enumerate(P.coeffs):
        if not A.any():
            continue
        for j, B in q_nonzero:
            out[i + j] += A @ B
    return MatrixPoly(out)


def gap_index(P):
    """Smallest i >= 1 with A_{n-i} != 0 (exact zero test)"""
    n = P.degree
    for i in range(1, n + 1):
        if P.coeffs[n - i].any():
            return i
    raise Monomial(f"all non-leading coefficients of the degree-{n} polynomial are zero")


def nnz_stats(P):
    """(s, nu): nonzero entries over all coefficients, nonzero non-leading coefficients"""
    s = int(np.count_nonzero(P.coeffs))
    nu = sum(1 for A in P.coeffs[:-1] if A.any())
    return s, nu

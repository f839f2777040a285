"""
Matrix norms with ||I|| = 1: column-sum (1-norm), row-sum (infinity-norm) and spectral (2-norm).
"""

from enum import Enum

import numpy as np
from scipy import linalg

from .matrix_poly import as_complex_matrix

POWER_TOLERANCE = 1e-10
POWER_MAX_ITERATIONS = 1000


class NormKind(str, Enum):
    ONE = 'one'
    INF = 'inf'
    TWO = 'two'


def _spectral_norm(A):
    """Largest singular value by power iteration on A^H A from the all-ones vector.

    The converged Rayleigh quotient mu is accepted only when 2 mu > ||A||_F^2: the other
    eigenvalues of A^H A then sum to less than mu. Otherwise, and on stagnation, the full
    singular values decide.
    """
    gram = A.conj().T @ A
    frobenius_sq = float(np.vdot(A, A).real)
    v = np.ones(A.shape[1], dtype=np.complex128) / np.sqrt(A.shape[1])
    for _ in range(POWER_MAX_ITERATIONS):
        w = gram @ v
        mu = np.vdot(v, w).real
        w_norm = np.linalg.norm(w)
        if w_norm == 0.0 or mu <= 0.0:
            # start vector in the null space of A
            break
        if np.linalg.norm(w - mu * v) <= POWER_TOLERANCE * mu:
            if 2.0 * mu > frobenius_sq:
                return float(np.sqrt(mu))
            # not provably the largest eigenvalue
            break
        v = w / w_norm
    return float(linalg.svdvals(A, check_finite=False)[0])


def norm(A, kind=NormKind.ONE):
    """Matrix norm of a square complex matrix"""
    kind = NormKind(kind)
    A = as_complex_matrix(A)
    if not A.any():
        return 0.0
    if kind is NormKind.ONE:
        return float(np.abs(A).sum(axis=0).max())
    if kind is NormKind.INF:
        return float(np.abs(A).sum(axis=1).max())
    return _spectral_norm(A)

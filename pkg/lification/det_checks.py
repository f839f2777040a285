"""
Numeric determinant oracles used by the tests and by `app.py verify`.
Determinants come from LU factorisation with partial pivoting (scipy.linalg.det).
"""

import logging

import numpy as np
from scipy import linalg

from matpoly import ShapeMismatch, evaluate, reverse

logger = logging.getLogger(__name__)


def relative_gap(a, b):
    """|a - b| / max(|a|, |b|), zero when both vanish"""
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def _det(A):
    if A.shape[0] == 0:
        return 1.0
    return complex(linalg.det(A, check_finite=False))


def block_det_identity_check(M, N):
    """Relative gap between the block determinant and det(M_1 N_1...N_{n-1} + ... + M_n).

    The block matrix has M_1..M_n as its first block row, -I on the block subdiagonal and
    N_1..N_{n-1} on the block diagonal below the first row. Products run to the right.
    """
    M = [np.asarray(Mj, dtype=np.complex128) for Mj in M]
    N = [np.asarray(Nj, dtype=np.complex128) for Nj in N]
    n = len(M)
    if n < 3 or len(N) != n - 1:
        raise ShapeMismatch(f"need n >= 3 blocks M and n - 1 blocks N, got {len(M)} and {len(N)}")
    m = M[0].shape[0]
    if any(B.shape != (m, m) for B in M + N):
        raise ShapeMismatch(f"all blocks must be {m} x {m}")

    big = np.zeros((n * m, n * m), dtype=np.complex128)
    for c, Mj in enumerate(M):
        big[:m, c * m:(c + 1) * m] = Mj
    for r in range(1, n):
        big[r * m:(r + 1) * m, (r - 1) * m:r * m] = -np.eye(m)
        big[r * m:(r + 1) * m, r * m:(r + 1) * m] = N[r - 1]

    # ((M_1 N_1 + M_2) N_2 + M_3) ... N_{n-1} + M_n
    acc = M[0]
    for j in range(1, n):
        acc = acc @ N[j - 1] + M[j]

    return relative_gap(_det(big), _det(acc))


def det_equivalence_check(P, L, zs):
    """Max relative gap of det P(z) vs det Q(z) and of the reversed pair over the sample points"""
    worst = 0.0
    Q = L.poly
    P_rev, Q_rev = reverse(P), reverse(Q)
    for z in zs:
        worst = max(worst, relative_gap(_det(evaluate(P, z)), _det(evaluate(Q, z))))
        worst = max(worst, relative_gap(_det(evaluate(P_rev, z)), _det(evaluate(Q_rev, z))))
    logger.debug(f"determinant identity over {len(zs)} points, k={L.k}: worst relative gap {worst:.3e}")
    return worst

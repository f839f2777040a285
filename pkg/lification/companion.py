#!/usr/bin/env python3
"""
Companion Forms of Matrix Polynomials
Builds the degree q = n/k block companion form Q(z) = C_0 + C_1 z + ... + C_q z^q,
whose eigenvalues coincide with those of P, and the Frobenius companion matrix (k = n).
"""

import logging
from dataclasses import dataclass

import numpy as np

from matpoly import MatrixPoly, NotDivisor, NotMonic, dumps_poly, poly_from_dict, FormatError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lification:
    """Degree-q companion form with km x km blocks, plus where it came from"""
    poly: MatrixPoly
    k: int
    q: int
    source_m: int
    source_degree: int

    def metadata(self):
        return {'k': self.k, 'q': self.q, 'source_m': self.source_m}

    def to_json(self, indent=None):
        return dumps_poly(self.poly, metadata=self.metadata(), indent=indent)

    @classmethod
    def from_dict(cls, data):
        poly = poly_from_dict(data)
        meta = data.get('metadata')
        if not isinstance(meta, dict):
            raise FormatError("l-ification document needs a metadata object")
        try:
            k, q, source_m = int(meta['k']), int(meta['q']), int(meta['source_m'])
        except (KeyError, TypeError, ValueError):
            raise FormatError("metadata must hold integer k, q and source_m")
        if poly.degree != q or poly.m != k * source_m:
            raise FormatError(f"metadata k={k}, q={q}, source_m={source_m} does not match the coefficients")
        return cls(poly=poly, k=k, q=q, source_m=source_m, source_degree=k * q)


def lify(P, k):
    """Block companion form of P for a divisor k of its degree.

    Top block row of C_j (0 <= j < q) is [A_{j+(k-1)q}, ..., A_{j+q}, A_j]; C_0 also has -I on
    the block subdiagonal; C_q = diag(A_n, I, ..., I). k = 1 gives P itself.
    """
    n, m = P.degree, P.m
    if not isinstance(k, (int, np.integer)) or k < 1 or k > n or n % k:
        raise NotDivisor(f"k={k} does not divide the degree {n}")
    k = int(k)
    q = n // k
    size = k * m
    blocks = np.zeros((q + 1, size, size), dtype=np.complex128)

    for j in range(q):
        for c in range(k):
            blocks[j, :m, c * m:(c + 1) * m] = P.coeffs[j + (k - 1 - c) * q]
    for r in range(1, k):
        blocks[0, r * m:(r + 1) * m, (r - 1) * m:r * m] = -np.eye(m)

    blocks[q, :m, :m] = P.leading
    blocks[q, m:, m:] = np.eye(size - m)

    logger.debug(f"l-ification of degree {n}, m={m} with k={k}: degree {q}, block size {size}")
    return Lification(poly=MatrixPoly(blocks), k=k, q=q, source_m=m, source_degree=n)


def frobenius_companion(P):
    """nm x nm companion matrix -C_0 of the k = n l-ification of a monic P"""
    if not P.is_monic():
        raise NotMonic("frobenius_companion needs a monic polynomial; call make_monic first")
    if P.degree == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    return -lify(P, P.degree).poly.coeffs[0]

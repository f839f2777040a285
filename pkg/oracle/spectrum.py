#!/usr/bin/env python3
"""
Eigenvalue Oracle
Reference spectra from the Frobenius companion matrix, used to check bounds and to form
benchmark ratios.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from lification import frobenius_companion
from matpoly import evaluate, make_monic, norm, NormKind

logger = logging.getLogger(__name__)

# absolute slack on moduli when checking bounds against computed eigenvalues
VALIDATION_SLACK = 1e-6


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    max_modulus: float
    min_modulus: float

    @classmethod
    def from_values(cls, values):
        values = np.asarray(values, dtype=np.complex128)
        if values.size == 0:
            return cls(values=values, max_modulus=0.0, min_modulus=math.inf)
        moduli = np.abs(values)
        return cls(values=values, max_modulus=float(moduli.max()), min_modulus=float(moduli.min()))

    def __len__(self):
        return int(self.values.size)

    def to_list(self):
        return [[float(v.real), float(v.imag)] for v in self.values]


@dataclass(frozen=True)
class ValidationResult:
    passed: bool
    margins: tuple
    lower_margin: float
    max_modulus: float
    min_modulus: float

    def to_dict(self):
        return {
            'passed': self.passed,
            'margins': list(self.margins),
            'lower_margin': None if math.isinf(self.lower_margin) else self.lower_margin,
            'max_modulus': self.max_modulus,
            'min_modulus': self.min_modulus,
        }


def eigenvalues(P):
    """All nm eigenvalues of P (A_n nonsingular) from its companion matrix"""
    C = frobenius_companion(make_monic(P))
    if C.size == 0:
        return Spectrum.from_values([])
    values = linalg.eigvals(C, check_finite=False)
    logger.debug(f"companion eigensolve of order {C.shape[0]}")
    return Spectrum.from_values(values)


def validate_bounds(P, report, spectrum=None):
    """Per-step margins radius - max|lambda| and min|lambda| - lower; fails below -VALIDATION_SLACK"""
    if spectrum is None:
        spectrum = eigenvalues(P)
    margins = tuple(step.radius - spectrum.max_modulus for step in report.steps)
    passed = all(margin >= -VALIDATION_SLACK for margin in margins)

    lower_margin = math.inf
    if report.lower is not None and len(spectrum):
        lower_margin = spectrum.min_modulus - report.lower
        passed = passed and lower_margin >= -VALIDATION_SLACK

    if not passed:
        logger.warning(f"bound validation failed: margins {margins}, lower margin {lower_margin}")
    return ValidationResult(passed=passed, margins=margins, lower_margin=lower_margin,
                            max_modulus=spectrum.max_modulus, min_modulus=spectrum.min_modulus)


def match_spectra(a, b):
    """Largest distance after greedily pairing each value of a with its nearest unused value in b"""
    a = np.asarray(getattr(a, 'values', a), dtype=np.complex128)
    b = np.asarray(getattr(b, 'values', b), dtype=np.complex128)
    if a.size != b.size:
        return math.inf
    if a.size == 0:
        return 0.0
    order = np.lexsort((np.angle(a), np.abs(a)))
    free = np.ones(b.size, dtype=bool)
    worst = 0.0
    for idx in order:
        dist = np.where(free, np.abs(b - a[idx]), np.inf)
        j = int(np.argmin(dist))
        free[j] = False
        worst = max(worst, float(dist[j]))
    return worst


def eigenpair_residuals(P, count=5, seed=0):
    """Scaled residuals ||P(lam) v|| / (||v|| sum_j |lam|^j ||A_j||_1) for random eigenpairs.

    v is the last block of a companion eigenvector.
    """
    C = frobenius_companion(make_monic(P))
    if C.size == 0:
        return []
    values, vectors = linalg.eig(C, check_finite=False)
    rng = np.random.default_rng(seed)
    picks = rng.choice(values.size, size=min(count, values.size), replace=False)
    norms = np.array([norm(A, NormKind.ONE) for A in P.coeffs])

    residuals = []
    for idx in picks:
        lam = values[idx]
        v = vectors[-P.m:, idx]
        scale = np.linalg.norm(v) * float(np.sum(norms * np.abs(lam) ** np.arange(P.degree + 1)))
        residuals.append(float(np.linalg.norm(evaluate(P, lam) @ v) / scale) if scale > 0 else 0.0)
    return residuals

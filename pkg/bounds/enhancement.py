#!/usr/bin/env python3
"""
Enhanced Cauchy Radii
Multiplying a monic P by (I z^i - A_{n-i}) on the left or the right never increases the
Cauchy radius. Repeating this gives a nonincreasing ladder of upper bounds; running the same
ladder on the reversed polynomial gives lower bounds.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from lification import frobenius_companion, lify
from matpoly import (MatrixPoly, MonicSide, NormKind, NotMonic, SingularLeading, gap_index,
                     make_monic, mul, norm, reverse)

from .cauchy import Side, cauchy_radius
from .cost import cost_baseline, cost_estimate

logger = logging.getLogger(__name__)

# relative slack allowed when checking that radii do not increase
MONOTONE_SLACK = 1e-10


@dataclass(frozen=True)
class BoundReport:
    steps: tuple
    lower: Optional[float] = None
    norm_kind: NormKind = NormKind.ONE
    k_used: int = 1

    @property
    def radii(self):
        return [step.radius for step in self.steps]

    @property
    def final_radius(self):
        return self.steps[-1].radius

    def is_monotone(self):
        radii = self.radii
        return all(b <= a * (1.0 + MONOTONE_SLACK) for a, b in zip(radii, radii[1:]))

    def to_dict(self):
        lower = self.lower
        if lower is not None and math.isinf(lower):
            lower = None
        return {
            'norm': self.norm_kind.value,
            'k': self.k_used,
            'lower': lower,
            'steps': [step.to_dict() for step in self.steps],
        }


def enhance(P, side=Side.LEFT):
    """T = (I z^i - A_{n-i}) P for Left, P (I z^i - A_{n-i}) for Right.

    Coefficients of degrees n .. n+i-1 cancel for monic P and are written as exact zeros.
    """
    side = Side(side)
    if not P.is_monic():
        raise NotMonic("enhancement needs a monic polynomial")
    i = gap_index(P)
    n, m = P.degree, P.m

    factor = np.zeros((i + 1, m, m), dtype=np.complex128)
    factor[0] = -P.coeffs[n - i]
    factor[i] = np.eye(m)
    F = MatrixPoly(factor)

    T = mul(F, P) if side is Side.LEFT else mul(P, F)
    coeffs = T.coeffs.copy()
    coeffs[n:n + i] = 0.0
    coeffs[n + i] = np.eye(m)
    return MatrixPoly(coeffs)


def enhancement_chain(P, kind=NormKind.ONE, sides=(), k=1, source_m=None, monic_side=MonicSide.PRE,
                      baseline=1.0):
    """Cauchy radius of P followed by one radius per enhancement in `sides`.

    k, source_m and baseline only feed the cost estimate; P is the working polynomial itself
    (the original or one of its l-ifications). Step costs are in units of `baseline`, normally
    cost_baseline of the source polynomial.
    """
    kind = NormKind(kind)
    work = make_monic(P, monic_side)
    source_m = source_m or work.m
    steps = [cauchy_radius(work, kind)]

    for t, side in enumerate(sides, start=1):
        side = Side(side)
        gap = gap_index(work)
        cost = cost_estimate(work, k, source_m, count_leading=False) / baseline
        work = enhance(work, side)
        step = replace(cauchy_radius(work, kind), side=side, gap_i=gap, cost_units=cost)
        previous = steps[-1].radius
        if step.radius > previous * (1.0 + MONOTONE_SLACK):
            logger.warning(f"radius increased at step {t}: {previous!r} -> {step.radius!r}")
        logger.debug(f"step {t} ({side.value}): degree {step.equation_degree}, radius {step.radius:.6g}")
        steps.append(step)

    return BoundReport(steps=tuple(steps), norm_kind=kind, k_used=k)


def lower_bound(P, kind=NormKind.ONE, sides=(), k=1):
    """Reciprocal of the final radius of the chain run on the reversed polynomial.

    Returns 0 when A_0 is singular (zero is an eigenvalue).
    """
    try:
        rev = make_monic(reverse(P))
    except SingularLeading:
        logger.info("constant coefficient is singular: zero is an eigenvalue, lower bound 0")
        return 0.0
    report = enhancement_chain(lify(rev, k).poly, kind, sides, k=k, source_m=P.m)
    radius = report.final_radius
    return math.inf if radius == 0.0 else 1.0 / radius


def bound_report(P, kind=NormKind.ONE, k=1, sides=(), lower=False, lower_sides=None,
                 monic_side=MonicSide.PRE):
    """Monicize, l-ify with k and run the enhancement chain; optionally attach the lower bound.

    Step costs are normalized by cost_baseline(P).
    """
    kind = NormKind(kind)
    monic = make_monic(P, monic_side)
    L = lify(monic, k)
    baseline = cost_baseline(monic) if sides else 1.0
    report = enhancement_chain(L.poly, kind, sides, k=k, source_m=P.m, baseline=baseline)
    if lower:
        report = replace(report, lower=lower_bound(P, kind, sides if lower_sides is None else lower_sides, k=k))
    return report


def parse_sides(text, steps):
    """Side schedule from 'L', 'R', 'L...', 'alternating' or a literal string such as 'LRL'"""
    text = (text or 'L').strip()
    if text.lower() in ('alternating', 'alt'):
        return tuple(Side.LEFT if t % 2 == 0 else Side.RIGHT for t in range(steps))
    repeat = text.endswith('...')
    letters = text.rstrip('.').upper()
    if not letters or set(letters) - {'L', 'R'}:
        raise ValueError(f"side schedule must use L and R, got {text!r}")
    if repeat or len(letters) == 1:
        letters = (letters + letters[-1] * steps)[:steps]
    elif len(letters) != steps:
        raise ValueError(f"side schedule {text!r} has {len(letters)} entries for {steps} steps")
    return tuple(Side(ch) for ch in letters)


def compare_norms(P, k=1, sides=(), lower=False, monic_side=MonicSide.PRE):
    """Reports under every norm kind and the kind with the smallest final radius"""
    reports = {kind: bound_report(P, kind, k=k, sides=sides, lower=lower, monic_side=monic_side)
               for kind in NormKind}
    best = min(reports, key=lambda kind: reports[kind].final_radius)
    return reports, best


def companion_square_radius(P, kind=NormKind.ONE):
    """(||C_P^2||^(1/2), ||C_P||) for the companion matrix of monic(P)"""
    C = frobenius_companion(make_monic(P))
    return math.sqrt(norm(C @ C, kind)), norm(C, kind)

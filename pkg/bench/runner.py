#!/usr/bin/env python3
"""
Benchmark Runner
Runs the enhancement ladder for every sample and every k of a BenchConfig and averages the
ratios radius / max|lambda| and the normalized multiplication cost per cell.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from bounds import MONOTONE_SLACK, cost_baseline, enhancement_chain
from config import get_worker_count
from lification import lify
from matpoly import SingularLeading
from oracle import eigenvalues

from .classes import generate_sample

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleResult:
    index: int
    ratios: dict
    costs: dict
    degrees: dict


@dataclass(frozen=True)
class BenchTable:
    """Rows are enhancement counts 0..steps, columns ascending q = n/k"""
    class_label: str
    n: int
    m: int
    samples: int
    seed: int
    norm: str
    sides: tuple
    qs: tuple
    mean_ratio: tuple
    median_ratio: tuple
    mean_cost: tuple
    degrees: tuple
    included: int
    excluded: int

    @property
    def rows(self):
        return len(self.mean_ratio)

    def to_dict(self):
        return {
            'class': self.class_label,
            'n': self.n,
            'm': self.m,
            'samples': self.samples,
            'seed': self.seed,
            'norm': self.norm,
            'sides': list(self.sides),
            'qs': list(self.qs),
            'mean_ratio': [list(row) for row in self.mean_ratio],
            'median_ratio': [list(row) for row in self.median_ratio],
            'mean_cost': [list(row) for row in self.mean_cost],
            'degrees': [list(row) for row in self.degrees],
            'included': self.included,
            'excluded': self.excluded,
        }

    @classmethod
    def from_dict(cls, data):
        def grid(rows, cast):
            return tuple(tuple(cast(v) for v in row) for row in rows)

        return cls(class_label=data['class'], n=int(data['n']), m=int(data['m']),
                   samples=int(data['samples']), seed=int(data['seed']), norm=data['norm'],
                   sides=tuple(data['sides']), qs=tuple(int(q) for q in data['qs']),
                   mean_ratio=grid(data['mean_ratio'], float),
                   median_ratio=grid(data['median_ratio'], float),
                   mean_cost=grid(data['mean_cost'], float),
                   degrees=grid(data['degrees'], int),
                   included=int(data['included']), excluded=int(data['excluded']))


def run_sample(cfg, index):
    """Ratios and cumulative normalized costs for one sample, or None if its eigensolve fails"""
    P = generate_sample(cfg, index)
    try:
        spectrum = eigenvalues(P)
    except (np.linalg.LinAlgError, SingularLeading) as e:
        logger.warning(f"sample {index}: eigensolve failed ({e}), excluded")
        return None
    if spectrum.max_modulus == 0.0:
        logger.warning(f"sample {index}: all eigenvalues are zero, excluded")
        return None

    baseline = cost_baseline(P)
    ratios, costs, degrees = {}, {}, {}
    for k in cfg.ks:
        q = cfg.n // k
        report = enhancement_chain(lify(P, k).poly, cfg.norm, cfg.sides, k=k, source_m=cfg.m,
                                   baseline=baseline)
        ratios[q] = np.array(report.radii) / spectrum.max_modulus
        costs[q] = np.cumsum([step.cost_units for step in report.steps])
        degrees[q] = [step.equation_degree for step in report.steps]
    return SampleResult(index=index, ratios=ratios, costs=costs, degrees=degrees)


def run_experiment(cfg, workers=None):
    """Run every sample of cfg and aggregate the ratio and cost tables"""
    workers = workers or get_worker_count()
    logger.info(f"running class {cfg.label}: n={cfg.n}, m={cfg.m}, {cfg.samples} samples, {workers} workers")

    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(lambda index: run_sample(cfg, index), range(cfg.samples)))
    kept = [r for r in results if r is not None]
    excluded = len(results) - len(kept)
    if excluded:
        logger.warning(f"{excluded} of {cfg.samples} samples excluded from class {cfg.label}")

    qs = cfg.qs
    rows = cfg.steps + 1
    if kept:
        # (samples, rows, columns), samples in index order
        ratios = np.stack([np.column_stack([r.ratios[q] for q in qs]) for r in kept])
        costs = np.stack([np.column_stack([r.costs[q] for q in qs]) for r in kept])
        mean_ratio = ratios.mean(axis=0)
        median_ratio = np.median(ratios, axis=0)
        mean_cost = costs.mean(axis=0)
        degrees = [[kept[0].degrees[q][t] for q in qs] for t in range(rows)]
    else:
        mean_ratio = median_ratio = mean_cost = np.full((rows, len(qs)), np.nan)
        degrees = [[0] * len(qs) for _ in range(rows)]

    def grid(values):
        return tuple(tuple(float(v) for v in row) for row in values)

    table = BenchTable(class_label=cfg.label, n=cfg.n, m=cfg.m, samples=cfg.samples, seed=cfg.seed,
                       norm=cfg.norm.value, sides=tuple(side.value for side in cfg.sides), qs=qs,
                       mean_ratio=grid(mean_ratio), median_ratio=grid(median_ratio),
                       mean_cost=grid(mean_cost), degrees=tuple(tuple(row) for row in degrees),
                       included=len(kept), excluded=excluded)
    row_trend_flags(table)
    return table


def column_violations(table):
    """(q, step) cells whose mean ratio exceeds the one above it"""
    violations = []
    for t in range(1, table.rows):
        for c, q in enumerate(table.qs):
            if table.mean_ratio[t][c] > table.mean_ratio[t - 1][c] * (1.0 + MONOTONE_SLACK):
                violations.append((q, t))
    return violations


def row_trend_flags(table):
    """Adjacent (q, q') pairs where the step-0 mean ratio grows with q; logged, not fatal"""
    if not table.rows:
        return []
    row = table.mean_ratio[0]
    flags = [(table.qs[c - 1], table.qs[c]) for c in range(1, len(table.qs)) if row[c] > row[c - 1]]
    for q_prev, q in flags:
        logger.warning(f"class {table.class_label}: step-0 mean ratio rises from q={q_prev} to q={q}")
    return flags

#!/usr/bin/env python3
"""
Random Polynomial Classes
Benchmark configurations and the seeded sample generator.
"""

import logging
from dataclasses import dataclass

import numpy as np

from bounds import Side, parse_sides
from matpoly import BenchConfigError, MatrixPoly, NormKind

logger = logging.getLogger(__name__)

# real and imaginary parts of every non-leading entry are drawn from [-ENTRY_BOUND, ENTRY_BOUND]
ENTRY_BOUND = 2.0

# class id -> (n, m, ks); the scaled entries keep CI runs small
CLASS_PRESETS = {
    'I': (18, 4, (18, 9, 6, 3, 2, 1)),
    'II': (10, 100, (10, 5, 2, 1)),
    'III': (100, 10, (100, 50, 25, 20, 10, 5, 4, 2, 1)),
}
SCALED_PRESETS = {
    'II': (10, 20, (10, 5, 2, 1)),
    'III': (40, 10, (40, 20, 10, 8, 5, 4, 2, 1)),
}


def divisors(n):
    return tuple(k for k in range(n, 0, -1) if n % k == 0)


@dataclass(frozen=True)
class BenchConfig:
    class_id: str
    n: int
    m: int
    samples: int
    seed: int
    ks: tuple
    steps: int
    sides: tuple
    norm: NormKind = NormKind.ONE
    scaled: bool = False

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise BenchConfigError(f"degree and size must be positive, got n={self.n}, m={self.m}")
        if self.samples < 1:
            raise BenchConfigError(f"samples must be at least 1, got {self.samples}")
        if self.seed < 0:
            raise BenchConfigError(f"seed must be nonnegative, got {self.seed}")
        if self.steps < 0 or len(self.sides) != self.steps:
            raise BenchConfigError(f"{len(self.sides)} sides given for {self.steps} steps")
        bad = [k for k in self.ks if k < 1 or self.n % k]
        if bad or not self.ks:
            raise BenchConfigError(f"ks {list(self.ks)} must be nonempty divisors of n={self.n}")

    @property
    def label(self):
        return f"{self.class_id}'" if self.scaled else self.class_id

    @property
    def qs(self):
        return tuple(sorted(self.n // k for k in self.ks))


def config_for_class(class_id='I', samples=100, seed=42, steps=3, sides='L', norm=NormKind.ONE,
                     full=False, n=None, m=None, ks=None):
    """Build a BenchConfig for class I, II, III or custom (which needs n and m)"""
    class_id = str(class_id).strip()
    if class_id.lower() == 'custom':
        if n is None or m is None:
            raise BenchConfigError("the custom class needs both n and m")
        class_id, scaled = 'custom', False
        preset_ks = divisors(n)
    else:
        class_id = class_id.upper()
        if class_id not in CLASS_PRESETS:
            raise BenchConfigError(f"unknown class {class_id!r}; use I, II, III or custom")
        if n is not None or m is not None:
            raise BenchConfigError(f"class {class_id} has fixed dimensions; use custom to set n and m")
        scaled = not full and class_id in SCALED_PRESETS
        n, m, preset_ks = (SCALED_PRESETS if scaled else CLASS_PRESETS)[class_id]

    try:
        schedule = tuple(Side(s) for s in sides) if not isinstance(sides, str) else parse_sides(sides, steps)
    except ValueError as e:
        raise BenchConfigError(str(e))
    try:
        norm = NormKind(norm)
    except ValueError:
        raise BenchConfigError(f"unknown norm {norm!r}")

    return BenchConfig(class_id=class_id, n=int(n), m=int(m), samples=int(samples), seed=int(seed),
                       ks=tuple(int(k) for k in (ks or preset_ks)), steps=int(steps), sides=schedule,
                       norm=norm, scaled=scaled)


def generate_sample(cfg, index):
    """Monic sample `index` of the class; depends only on (cfg.seed, index)"""
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, index]))
    shape = (cfg.n, cfg.m, cfg.m)
    lower = rng.uniform(-ENTRY_BOUND, ENTRY_BOUND, shape) + 1j * rng.uniform(-ENTRY_BOUND, ENTRY_BOUND, shape)
    coeffs = np.concatenate([lower, np.eye(cfg.m, dtype=np.complex128)[None, :, :]])
    return MatrixPoly(coeffs)

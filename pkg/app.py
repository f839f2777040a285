#!/usr/bin/env python3
"""
Command-line front end for matrix polynomial eigenvalue bounds.

Exit codes: 0 success, 2 usage or input problems, 3 singular leading coefficient,
4 failed validation or verification.
"""

import json
import logging
import sys
from functools import wraps

import click
import numpy as np
from click.core import ParameterSource

from bench import config_for_class, divisors, emit_table, run_experiment, column_violations
from bounds import (bound_report, compare_norms, cost_baseline, cost_estimate, enhance,
                    parse_sides)
from config import configure_logging, full_scale_default
from lification import Lification, det_equivalence_check, lify
from matpoly import (MonicSide, NormKind, PolyboundError, SingularLeading, gap_index,
                     loads_poly, make_monic, nnz_stats)
from oracle import eigenvalues, match_spectra, validate_bounds

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_FAILED = 4

# eigenvalue agreement between P and its l-ifications, relative to 1 + max|lambda|
SPECTRAL_TOLERANCE = 1e-6

NORM_CHOICES = click.Choice([kind.value for kind in NormKind])


def status(message):
    click.echo(message, err=True)


def polybound_errors(f):
    """Turn library exceptions into the documented exit codes"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except SingularLeading as e:
            status(f"❌ Singular leading coefficient: {e}")
            sys.exit(EXIT_SINGULAR)
        except (PolyboundError, ValueError) as e:
            status(f"❌ {type(e).__name__}: {e}")
            sys.exit(EXIT_USAGE)
    return decorated_function


def read_document(path):
    """Polynomial and raw JSON of an input file"""
    with open(path, 'r') as f:
        text = f.read()
    P = loads_poly(text)
    return P, json.loads(text)


def write_output(text, out):
    if out:
        with open(out, 'w') as f:
            f.write(text)
        status(f"✅ Written to {out}")
    else:
        click.echo(text, nl=False)


def sample_points(count, seed):
    """Random points with moduli in [0.5, 2] and uniform arguments"""
    rng = np.random.default_rng(seed)
    radius = rng.uniform(0.5, 2.0, count)
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    return radius * np.exp(1j * angle)


@click.group()
@click.option('--log-level', default=None, help='Logging level (overrides POLYBOUND_LOG_LEVEL).')
def cli(log_level):
    """Upper and lower bounds on the eigenvalue moduli of matrix polynomials."""
    configure_logging(log_level)


@cli.command()
@click.option('--input', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--k', default=1, show_default=True, type=int, help='Block count of the l-ification.')
@click.option('--norm', 'norm_kind', default='one', show_default=True, type=NORM_CHOICES)
@click.option('--steps', default=0, show_default=True, type=click.IntRange(min=0))
@click.option('--sides', default='L...', show_default=True, help="'L', 'R', 'L...', 'alternating' or e.g. 'LRL'.")
@click.option('--lower', is_flag=True, help='Also compute the lower bound from the reversed polynomial.')
@click.option('--validate', is_flag=True, help='Check the bounds against computed eigenvalues.')
@click.option('--compare-norms', 'all_norms', is_flag=True, help='Run the ladder under every norm.')
@click.option('--monic-side', default='pre', show_default=True, type=click.Choice([s.value for s in MonicSide]))
@click.option('--out', default=None, type=click.Path(dir_okay=False))
@polybound_errors
def bound(input_path, k, norm_kind, steps, sides, lower, validate, all_norms, monic_side, out):
    """Cauchy radius ladder of a polynomial file."""
    P, _ = read_document(input_path)
    schedule = parse_sides(sides, steps)

    if all_norms:
        if click.get_current_context().get_parameter_source('norm_kind') is not ParameterSource.DEFAULT:
            raise click.UsageError('--norm cannot be combined with --compare-norms')
        reports, best = compare_norms(P, k=k, sides=schedule, lower=lower, monic_side=monic_side)
        document = {'best': best.value, 'reports': {kind.value: r.to_dict() for kind, r in reports.items()}}
        write_output(json.dumps(document, indent=2) + '\n', out)
        status(f"✅ Smallest final radius with the {best.value}-norm: {reports[best].final_radius:.6g}")
    else:
        report = bound_report(P, norm_kind, k=k, sides=schedule, lower=lower, monic_side=monic_side)
        write_output(json.dumps(report.to_dict(), indent=2) + '\n', out)
        status(f"✅ Final radius {report.final_radius:.6g} after {steps} enhancement(s)")
        reports = {NormKind(norm_kind): report}

    if validate:
        for kind, report in reports.items():
            result = validate_bounds(P, report)
            if not result.passed:
                status(f"❌ Validation failed ({kind.value}-norm): {result.to_dict()}")
                sys.exit(EXIT_FAILED)
        status(f"✅ Validation passed (max|lambda| = {result.max_modulus:.6g})")


@cli.command('lify')
@click.option('--input', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--k', required=True, type=int)
@click.option('--out', default=None, type=click.Path(dir_okay=False))
@polybound_errors
def lify_command(input_path, k, out):
    """Write the block companion form with k blocks."""
    P, _ = read_document(input_path)
    L = lify(P, k)
    write_output(L.to_json(indent=2) + '\n', out)
    status(f"✅ l-ification: degree {L.q}, block size {L.poly.m}")


@cli.command('bench')
@click.option('--class', 'class_id', default='I', show_default=True,
              type=click.Choice(['I', 'II', 'III', 'custom'], case_sensitive=False))
@click.option('--samples', default=100, show_default=True, type=click.IntRange(min=1))
@click.option('--seed', default=42, show_default=True, type=click.IntRange(min=0))
@click.option('--steps', default=3, show_default=True, type=click.IntRange(min=0))
@click.option('--sides', default='L', show_default=True)
@click.option('--norm', 'norm_kind', default='one', show_default=True, type=NORM_CHOICES)
@click.option('--full', is_flag=True, help='Full class II/III dimensions instead of the scaled ones.')
@click.option('--n', 'degree', default=None, type=int, help='Degree (custom class).')
@click.option('--m', 'size', default=None, type=int, help='Block size (custom class).')
@click.option('--ks', default=None, help='Comma-separated divisors of n.')
@click.option('--format', 'fmt', default='md', show_default=True,
              type=click.Choice(['csv', 'md', 'markdown', 'json']))
@click.option('--out', default=None, type=click.Path(dir_okay=False))
@polybound_errors
def bench_command(class_id, samples, seed, steps, sides, norm_kind, full, degree, size, ks, fmt, out):
    """Mean ratio and cost tables for a random polynomial class."""
    ks = tuple(int(k) for k in ks.split(',')) if ks else None
    cfg = config_for_class(class_id, samples=samples, seed=seed, steps=steps, sides=sides,
                           norm=norm_kind, full=full or full_scale_default(), n=degree, m=size, ks=ks)
    status(f"⏳ Class {cfg.label}: n={cfg.n}, m={cfg.m}, {cfg.samples} samples, q in {list(cfg.qs)}")
    table = run_experiment(cfg)
    write_output(emit_table(table, fmt), out)

    violations = column_violations(table)
    if violations:
        status(f"⚠️ Mean ratios increase down the columns at {violations}")
    status(f"✅ {table.included} samples used, {table.excluded} excluded")


@cli.command()
@click.option('--input', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--tol', default=1e-8, show_default=True, type=float, help='Determinant identity tolerance.')
@click.option('--zs', default=20, show_default=True, type=click.IntRange(min=1), help='Sample points.')
@click.option('--seed', default=0, show_default=True, type=click.IntRange(min=0))
@polybound_errors
def verify(input_path, tol, zs, seed):
    """Check det P(z) = det Q(z) and equal spectra for every divisor k."""
    P, data = read_document(input_path)
    if isinstance(data, dict) and 'metadata' in data:
        L = Lification.from_dict(data)
        status(f"✅ l-ification metadata consistent (k={L.k}, q={L.q}, source m={L.source_m})")

    points = sample_points(zs, seed)
    try:
        reference = eigenvalues(P)
    except SingularLeading as e:
        status(f"⚠️ Spectra not compared: {e}")
        reference = None

    checks = []
    passed = True
    for k in divisors(P.degree):
        L = lify(P, k)
        check = {'k': k, 'det_residual': det_equivalence_check(P, L, points)}
        ok = check['det_residual'] <= tol
        if reference is not None:
            gap = match_spectra(reference, eigenvalues(L.poly)) / (1.0 + reference.max_modulus)
            check['spectral_residual'] = gap
            ok = ok and gap <= SPECTRAL_TOLERANCE
        check['passed'] = ok
        passed = passed and ok
        checks.append(check)

    click.echo(json.dumps({'passed': passed, 'tol': tol, 'checks': checks}, indent=2))
    if not passed:
        status("❌ Verification failed")
        sys.exit(EXIT_FAILED)
    status(f"✅ Verified {len(checks)} l-ification(s)")


@cli.command()
@click.option('--input', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--k', default=1, show_default=True, type=int)
@click.option('--steps', default=1, show_default=True, type=click.IntRange(min=0))
@click.option('--sides', default='L', show_default=True)
@polybound_errors
def cost(input_path, k, steps, sides):
    """Raw and normalized s^2/(nu k m) per enhancement step, without solving for radii."""
    P, _ = read_document(input_path)
    schedule = parse_sides(sides, steps)
    baseline = cost_baseline(P)
    work = lify(make_monic(P), k).poly

    rows = []
    cumulative = 0.0
    for t, side in enumerate(schedule, start=1):
        s, nu = nnz_stats(work)
        raw = cost_estimate(work, k, P.m)
        normalized = cost_estimate(work, k, P.m, count_leading=False) / baseline
        cumulative += normalized
        rows.append({'step': t, 'side': side.value, 'degree': work.degree, 'gap': gap_index(work),
                     's': s, 'nu': nu, 'raw': raw, 'normalized': normalized, 'cumulative': cumulative})
        work = enhance(work, side)

    click.echo(json.dumps({'k': k, 'm': P.m, 'baseline': baseline, 'steps': rows}, indent=2))


if __name__ == '__main__':
    cli()

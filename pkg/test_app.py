import json

import numpy as np
import pytest
from click.testing import CliRunner
from numpy.testing import assert_allclose, assert_array_equal

import app
from app import cli
from bench import config_for_class, generate_sample
from lification import frobenius_companion
from matpoly import MatrixPoly, loads_poly
from oracle import ValidationResult

from conftest import random_poly


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def quadratic_file(quadratic, poly_file):
    return poly_file(quadratic, 'quadratic.json')


class TestBound:

    def test_quadratic_defaults(self, runner, quadratic_file):
        result = runner.invoke(cli, ['bound', '--input', quadratic_file])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report['norm'] == 'one' and report['k'] == 1 and report['lower'] is None
        assert len(report['steps']) == 1
        assert_allclose(report['steps'][0]['radius'], 4.0, rtol=1e-12)

    def test_class_one_sample_ladder(self, runner, poly_file):
        P = generate_sample(config_for_class('I'), 0)
        result = runner.invoke(cli, ['bound', '--input', poly_file(P), '--k', '6', '--steps', '3'])
        assert result.exit_code == 0
        steps = json.loads(result.stdout)['steps']
        assert [s['degree'] for s in steps] == [3, 4, 6, 9]
        assert [s['side'] for s in steps] == ['none', 'L', 'L', 'L']

    def test_lower_and_validate(self, runner, quadratic_file):
        result = runner.invoke(cli, ['bound', '--input', quadratic_file, '--lower', '--validate',
                                     '--steps', '2', '--sides', 'alternating'])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert_allclose(report['lower'], 1.0, rtol=1e-12)
        assert [s['side'] for s in report['steps']] == ['none', 'L', 'R']
        assert 'Validation passed' in result.stderr

    def test_validation_failure_exit_code(self, runner, quadratic_file, monkeypatch):
        failed = ValidationResult(passed=False, margins=(-1.0,), lower_margin=float('inf'),
                                  max_modulus=4.0, min_modulus=1.0)
        monkeypatch.setattr(app, 'validate_bounds', lambda P, report: failed)
        result = runner.invoke(cli, ['bound', '--input', quadratic_file, '--validate'])
        assert result.exit_code == 4

    def test_compare_norms(self, runner, poly_file, rng):
        result = runner.invoke(cli, ['bound', '--input', poly_file(random_poly(rng, 4, 2)),
                                     '--compare-norms', '--k', '2', '--steps', '1'])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert set(document['reports']) == {'one', 'inf', 'two'}
        finals = {kind: r['steps'][-1]['radius'] for kind, r in document['reports'].items()}
        assert finals[document['best']] == min(finals.values())

    def test_compare_norms_with_lower_and_validate(self, runner, poly_file):
        P = MatrixPoly([np.array([[1.5, -0.5], [-0.5, 1.5]]), np.eye(2)])
        result = runner.invoke(cli, ['bound', '--input', poly_file(P), '--compare-norms', '--lower',
                                     '--validate', '--monic-side', 'post'])
        assert result.exit_code == 0
        reports = json.loads(result.stdout)['reports']
        assert all(r['lower'] is not None for r in reports.values())
        assert_allclose(reports['two']['steps'][0]['radius'], 2.0, rtol=1e-12)
        assert 'Validation passed' in result.stderr

    def test_compare_norms_rejects_explicit_norm(self, runner, quadratic_file):
        result = runner.invoke(cli, ['bound', '--input', quadratic_file, '--compare-norms', '--norm', 'two'])
        assert result.exit_code == 2

    def test_step_cost_matches_cost_command(self, runner, poly_file):
        path = poly_file(MatrixPoly([1, 2, 3, 4, 1]))
        bound = runner.invoke(cli, ['bound', '--input', path, '--k', '2', '--steps', '1'])
        cost = runner.invoke(cli, ['cost', '--input', path, '--k', '2', '--steps', '1'])
        assert bound.exit_code == 0 and cost.exit_code == 0
        step_cost = json.loads(bound.stdout)['steps'][1]['cost']
        assert step_cost == json.loads(cost.stdout)['steps'][0]['normalized'] == 1.5625

    def test_out_file(self, runner, quadratic_file, tmp_path):
        out = tmp_path / 'report.json'
        result = runner.invoke(cli, ['bound', '--input', quadratic_file, '--out', str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())['steps'][0]['degree'] == 2

    def test_k_must_divide_degree(self, runner, poly_file):
        P = generate_sample(config_for_class('I'), 0)
        result = runner.invoke(cli, ['bound', '--input', poly_file(P), '--k', '5'])
        assert result.exit_code == 2
        assert 'NotDivisor' in result.stderr

    def test_singular_leading(self, runner, poly_file):
        P = MatrixPoly([np.eye(2), np.zeros((2, 2))])
        result = runner.invoke(cli, ['bound', '--input', poly_file(P)])
        assert result.exit_code == 3

    def test_malformed_input(self, runner, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"m": 1, "degree": 3, "coefficients": []}')
        result = runner.invoke(cli, ['bound', '--input', str(path)])
        assert result.exit_code == 2

    def test_bad_side_schedule(self, runner, quadratic_file):
        result = runner.invoke(cli, ['bound', '--input', quadratic_file, '--steps', '2', '--sides', 'LQ'])
        assert result.exit_code == 2


class TestLify:

    def test_k_one_reproduces_input(self, runner, poly_file, rng):
        P = random_poly(rng, 4, 2, monic=False)
        result = runner.invoke(cli, ['lify', '--input', poly_file(P), '--k', '1'])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document['metadata'] == {'k': 1, 'q': 4, 'source_m': 2}
        assert loads_poly(result.stdout) == P

    def test_linearization_constant_block(self, runner, poly_file, rng):
        P = random_poly(rng, 9, 2)
        result = runner.invoke(cli, ['lify', '--input', poly_file(P), '--k', '9'])
        assert result.exit_code == 0
        Q = loads_poly(result.stdout)
        assert Q.degree == 1
        assert_array_equal(Q.coeffs[0], -frobenius_companion(P))

    def test_round_trip_through_verify(self, runner, poly_file, rng, tmp_path):
        out = tmp_path / 'lified.json'
        P = random_poly(rng, 6, 2)
        result = runner.invoke(cli, ['lify', '--input', poly_file(P), '--k', '3', '--out', str(out)])
        assert result.exit_code == 0
        result = runner.invoke(cli, ['verify', '--input', str(out)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)['passed'] is True

    def test_not_divisor(self, runner, quadratic_file):
        assert runner.invoke(cli, ['lify', '--input', quadratic_file, '--k', '3']).exit_code == 2


class TestVerify:

    def test_passes_for_every_divisor(self, runner, poly_file, rng):
        P = random_poly(rng, 6, 2, monic=False)
        result = runner.invoke(cli, ['verify', '--input', poly_file(P), '--zs', '10', '--seed', '3'])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert [c['k'] for c in document['checks']] == [6, 3, 2, 1]
        assert all(c['det_residual'] <= 1e-8 for c in document['checks'])

    def test_impossible_tolerance_fails(self, runner, poly_file, rng):
        P = random_poly(rng, 4, 2)
        result = runner.invoke(cli, ['verify', '--input', poly_file(P), '--tol', '-1'])
        assert result.exit_code == 4


class TestBench:

    def test_single_sample_without_steps(self, runner):
        result = runner.invoke(cli, ['bench', '--class', 'I', '--samples', '1', '--steps', '0',
                                     '--format', 'csv'])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith('class,n,m,samples,seed')
        assert len(lines) == 1 + 6
        assert all(line.split(',')[7] == '0' for line in lines[1:])

    def test_scaled_class_two_recorded(self, runner):
        result = runner.invoke(cli, ['bench', '--class', 'II', '--samples', '1', '--steps', '1',
                                     '--format', 'csv', '--ks', '10,5'])
        assert result.exit_code == 0
        row = result.stdout.splitlines()[1].split(',')
        assert row[:3] == ["II'", '10', '20']

    def test_json_output(self, runner):
        result = runner.invoke(cli, ['bench', '--class', 'custom', '--n', '4', '--m', '2',
                                     '--samples', '2', '--steps', '2', '--format', 'json'])
        assert result.exit_code == 0
        table = json.loads(result.stdout)
        assert table['qs'] == [1, 2, 4]
        assert len(table['mean_ratio']) == 3
        assert 'median_ratio' in table

    @pytest.mark.parametrize('args', [
        ['--class', 'custom', '--n', '4'],
        ['--class', 'I', '--ks', '18,5'],
        ['--class', 'I', '--ks', 'six'],
    ])
    def test_bad_flags(self, runner, args):
        assert runner.invoke(cli, ['bench', '--samples', '1'] + args).exit_code == 2


class TestCost:

    def test_hand_example(self, runner, poly_file):
        result = runner.invoke(cli, ['cost', '--input', poly_file(MatrixPoly([1, 2, 3, 4, 1])),
                                     '--k', '2', '--steps', '2'])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        first = document['steps'][0]
        assert first['raw'] == 12.25
        assert (first['s'], first['nu'], first['degree']) == (7, 2, 2)
        assert document['baseline'] == 4.0
        assert first['normalized'] == 6.25 / 4.0
        assert len(document['steps']) == 2
        assert document['steps'][1]['degree'] == 3

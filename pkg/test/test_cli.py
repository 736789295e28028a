import json

import pandas as pd
from click.testing import CliRunner

from kicked_top import __version__
from kicked_top.cli import EXIT_CONFIG, EXIT_FAILURE, cli


def invoke(*args):
    return CliRunner().invoke(cli, [str(arg) for arg in args])


def test_version():
    result = invoke('--version')
    assert result.exit_code == 0
    assert __version__ in result.output


def test_run_writes_table(tmp_path):
    out = tmp_path / 'results'
    result = invoke('run', '--mode', 'compare', '--two-j', 4, '--k', 3, '--steps', 5, '--out', out)
    assert result.exit_code == 0, result.output
    table = pd.read_csv(out / 'compare_2j4_k3.csv')
    assert len(table) == 6
    assert (out / 'compare_2j4_k3.json').exists()
    assert (out / 'ktop.log').exists()


def test_run_sweep(tmp_path):
    out = tmp_path / 'sweep'
    result = invoke('run', '--mode', 'classical_point', '--two-j', 0, '--k', 0.5, '--k', 1.5,
                    '--steps', 3, '--out', out, '--workers', 2)
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in out.glob('*.csv')) == ['classical_point_2j0_k0p5.csv',
                                                       'classical_point_2j0_k1p5.csv']


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'two_j': 3, 'k': 1.0, 'steps': 2, 'mode': 'quantum_moments',
                                  'output_dir': str(tmp_path / 'from_file')}))
    result = invoke('run', '--config', config, '--steps', 4)
    assert result.exit_code == 0, result.output
    assert len(pd.read_csv(tmp_path / 'from_file' / 'quantum_moments_2j3_k1.csv')) == 5


def test_bad_config_exits_two(tmp_path):
    config = tmp_path / 'config.json'
    config.write_text('{"two_j": 4, "colour": "red"}')
    result = invoke('run', '--config', config, '--out', tmp_path)
    assert result.exit_code == EXIT_CONFIG
    assert 'colour' in result.output


def test_moment_mode_rejects_general_angle(tmp_path):
    result = invoke('run', '--mode', 'quantum_moments', '--p', 1.0, '--out', tmp_path)
    assert result.exit_code == EXIT_CONFIG
    assert 'p=π/2' in result.output


def test_validate_quick(tmp_path):
    result = invoke('validate', '--quick', '--out', tmp_path)
    assert result.exit_code == 0, result.output
    assert 'FAIL' not in result.output
    report = json.loads((tmp_path / 'validate_report.json').read_text())
    assert report['passed'] is True
    assert report['quick'] is True


def test_validate_reports_failing_variant(tmp_path):
    result = invoke('validate', '--quick', '--kc-variant', 'paper', '--out', tmp_path)
    assert result.exit_code == EXIT_FAILURE
    assert 'factorization' in result.output
    report = json.loads((tmp_path / 'validate_report.json').read_text())
    suites = {suite['suite']: suite for suite in report['suites']}
    assert not suites['factorization']['passed']
    assert suites['factorization']['max_residual'] > suites['factorization']['tolerance']


def test_export_r(tmp_path):
    path = tmp_path / 'r.json'
    result = invoke('export-r', '--two-j', 1, '--out', path)
    assert result.exit_code == 0, result.output
    document = json.loads(path.read_text())
    assert document['two_j'] == 1
    assert len(document['entries']) == 2


def test_export_r_cap(tmp_path):
    result = invoke('export-r', '--two-j', 12, '--cap', 8, '--out', tmp_path / 'r.json')
    assert result.exit_code == EXIT_FAILURE
    assert not (tmp_path / 'r.json').exists()

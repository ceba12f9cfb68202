import json
import numpy as np
import pandas as pd
import pytest
from Expansions import series
from main import build_parser, main


@pytest.mark.parametrize('argv', [
    ['vrf-curve', '--sigma', '0.1', '0', '--out', 'x.csv'],
    ['vrf-curve', '--fidelity', '1.5', '--out', 'x.csv'],
    ['vrf-curve', '--L', '0', '--out', 'x.csv'],
    ['bias-curve', '--L', '65', '--out', 'x.csv'],
    ['bias-curve', '--L', '2', '--angles', '0.1', '0.2', '--out', 'x.csv'],
    ['bias-curve', '--scheme', 'both', '--out', 'x.csv'],
    ['validate', '--suites', 'nonexistent'],
    [],
])
def test_bad_arguments_exit_with_usage_error(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_defaults():
    args = build_parser().parse_args(['vrf-curve', '--out', 'x.csv'])
    assert args.sigma == [0.5, 0.2, 0.1, 0.05]
    assert (args.scheme, args.L, args.fidelity, args.seed) == ('both', 1, 1.0, 1)
    args = build_parser().parse_args(['validate'])
    assert args.level == 'fast'
    assert 'optimality' in args.suites


def test_bias_curve_command(tmp_path):
    out = tmp_path / 'bias' / 'curve.csv'
    assert main(['bias-curve', '--scheme', 'ab', '--L', '2', '--random', '--theta-points', '17',
                 '--out', str(out)]) == 0
    frame = pd.read_csv(out)
    assert len(frame) == 18
    assert float(frame['abs_diff'].iloc[-1]) < 1e-10
    saved = json.loads((tmp_path / 'bias' / 'args.json').read_text())
    assert saved['command'] == 'bias-curve' and saved['L'] == 2


def test_vrf_curve_command(tmp_path):
    out = tmp_path / 'curve.csv'
    argv = ['vrf-curve', '--scheme', 'ab', '--sigma', '0.2', '--mu-points', '3', '--restarts', '1',
            '--sweeps', '10', '--out', str(out)]
    assert main(argv) == 0
    first = out.read_bytes()
    assert main(argv) == 0
    assert out.read_bytes() == first
    assert len(pd.read_csv(out)) == 6


def test_validate_command(tmp_path):
    report = tmp_path / 'report.json'
    assert main(['validate', '--suites', 'combinatorics', 'chebyshev', '--json', str(report)]) == 0
    rows = json.loads(report.read_text())
    assert rows and all(row['passed'] for row in rows)
    assert {row['suite'] for row in rows} == {'combinatorics', 'chebyshev'}


@pytest.fixture
def flipped_nu(monkeypatch):
    series._class_weights.cache_clear()
    monkeypatch.setattr(series, '_NU', np.array([1.0, 0.0, 1.0, 0.0]))
    yield
    series._class_weights.cache_clear()


def test_validate_reports_a_sign_error_in_nu(flipped_nu, capsys):
    assert main(['validate', '--suites', 'expansions']) == 1
    out = capsys.readouterr().out
    assert 'FAILED: expansions / series equals circuit' in out

import numpy as np
import pandas as pd
import pytest
from Inference import chebyshev
from Models.params import ClfSpec, Scheme, TunableParams
from Utils import generator
from Utils import metrics
from curves import BIAS_COLUMNS, CURVE_COLUMNS, bias_curve, format_angles, vrf_curve


@pytest.fixture(scope='module')
def curve():
    return vrf_curve([Scheme.AF, Scheme.AB], 1, [0.2, 0.1], generator.mu_grid(3), restarts=1, sweeps=20)


def test_vrf_curve_layout(curve):
    assert list(curve.columns) == CURVE_COLUMNS
    assert len(curve) == 2 * 2 * 3 * 2
    assert set(curve['variant']) == {'elf', 'clf'}
    assert (curve[curve['variant'] == 'clf']['x_star'] == '').all()
    keys = curve[['scheme', 'variant', 'sigma', 'mu']].apply(tuple, axis=1).tolist()
    assert keys == sorted(keys)


def test_vrf_curve_values(curve):
    for _, row in curve.iterrows():
        assert row['epv'] == pytest.approx(row['sigma']**2 * (1 - row['sigma']**2 * row['V']))
        if row['variant'] == 'clf':
            spec = ClfSpec(Scheme(row['scheme']), row['L'])
            assert row['V'] == pytest.approx(chebyshev.clf_vrf(spec, row['mu'], row['sigma']))
    elf = curve[curve['variant'] == 'elf'].reset_index(drop=True)
    clf = curve[curve['variant'] == 'clf'].reset_index(drop=True)
    assert (elf['V'] >= clf['V'] - 1e-9).all()


def test_vrf_curve_csv_is_reproducible(curve, tmp_path):
    again = vrf_curve([Scheme.AF, Scheme.AB], 1, [0.2, 0.1], generator.mu_grid(3), restarts=1, sweeps=20)
    first, second = tmp_path / 'first.csv', tmp_path / 'second.csv'
    curve.to_csv(first, index=False, lineterminator='\n')
    again.to_csv(second, index=False, lineterminator='\n')
    assert first.read_bytes() == second.read_bytes()


def test_x_star_round_trips(curve):
    row = curve[curve['variant'] == 'elf'].iloc[0]
    angles = [float(a) for a in row['x_star'].split(';')]
    assert format_angles(TunableParams(angles, Scheme(row['scheme']))) == row['x_star']


def test_curve_summary(curve):
    summary = metrics.curve_summary(curve)
    assert len(summary) == 4
    assert (summary['gap min'] >= -1e-9).all()
    assert (summary['points below'] == 0).all()
    assert (summary['elf max'] >= summary['clf max'] - 1e-9).all()


@pytest.mark.parametrize('scheme', list(Scheme))
@pytest.mark.parametrize('fidelity', [1.0, 0.7])
def test_bias_curve(scheme, fidelity):
    x = TunableParams([0.4, -1.3, 2.2, 0.9], scheme)
    frame = bias_curve(x, generator.theta_grid(33), fidelity)
    assert list(frame.columns) == BIAS_COLUMNS
    assert len(frame) == 34
    assert frame['theta'].iloc[-1] == 'max'
    assert frame['abs_diff'].iloc[-1] == pytest.approx(frame['abs_diff'].iloc[:-1].max())
    assert frame['abs_diff'].iloc[-1] < 1e-10


def test_report_rows():
    rows = [metrics.check('suite', 'ok', 1e-13, 1e-12), metrics.check('suite', 'bad', 1.0, 1e-12, 'note')]
    frame = metrics.report(rows)
    assert list(frame.columns) == metrics.REPORT_COLUMNS
    failed = metrics.failures(frame)
    assert failed['check'].tolist() == ['bad']
    assert failed['detail'].tolist() == ['note']
    assert isinstance(frame, pd.DataFrame) and frame['passed'].dtype == bool
    assert np.isclose(frame['error'].iloc[0], 1e-13)

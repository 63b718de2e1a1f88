"""Window enumeration, property registry, and report determinism."""

import json

import pytest

from segops import OutOfRange
from segops.sweep import (
    PROPERTIES,
    PropertyOutcome,
    SweepConfig,
    SweepReport,
    enumerate_params,
    enumerate_segments,
    run_property,
    run_sweep,
)


TINY = SweepConfig(lo=0, hi=2, max_labs=3)


# ------------------------------------------------------------- configuration

def test_config_defaults():
    cfg = SweepConfig(lo=0, hi=4)
    assert cfg.max_labs == 6
    assert cfg.backends == ('generic', 'zsegment')
    assert cfg.properties == ()
    assert cfg.jobs == 1


@pytest.mark.parametrize(
    'kwargs',
    [
        {'max_labs': 0},
        {'max_labs': -2},
        {'jobs': 0},
        {'backends': ('generic', 'mystery')},
        {'properties': ('OperatorInverse', 'NoSuchLaw')},
    ],
)
def test_config_rejects_bad_fields(kwargs):
    with pytest.raises(OutOfRange):
        SweepConfig(lo=0, hi=2, **kwargs)


# --------------------------------------------------------------- enumeration

def test_enumerate_segments_spans_both_parities():
    segs = enumerate_segments(TINY)
    assert [str(s) for s in segs] == ['[0,0]@r', '[0,1]@r', '[1/2,1/2]@r', '[1,1]@r']


def test_enumerate_segments_respects_labs_cap():
    segs = enumerate_segments(SweepConfig(lo=0, hi=8, max_labs=2))
    assert all(s.num_points() <= 2 for s in segs)
    assert any(s.num_points() == 2 for s in segs)


def test_inverted_window_is_empty():
    cfg = SweepConfig(lo=2, hi=0)
    assert enumerate_segments(cfg) == ()
    # only the empty generic parameter remains
    params = enumerate_params(cfg)
    assert len(params) == 1
    report = run_sweep(cfg)
    assert report.exit_code == 0
    assert report.n_segments == 0


def test_enumerate_params_tiny_window():
    params = enumerate_params(TINY)
    assert len(params) == 24


def test_enumerate_params_backend_selection():
    only_z = enumerate_params(SweepConfig(lo=0, hi=2, max_labs=3, backends=('zsegment',)))
    assert len(only_z) == 4  # one per segment, no empty parameter
    only_g = enumerate_params(SweepConfig(lo=0, hi=2, max_labs=3, backends=('generic',)))
    assert len(only_g) == 20
    assert len(only_z) + len(only_g) == len(enumerate_params(TINY))


# ---------------------------------------------------------------- properties

def test_registry_names():
    assert list(PROPERTIES) == [
        'OperatorInverse',
        'DualSwitch',
        'OrderingIndependence',
        'CommEquivalence',
        'EtaMonotone',
        'MaxExtraction',
        'SaturationPropagation',
        'LevelPreserving',
        'DualTriple',
        'HdFixedPoint',
        'IntegralSequence',
        'CertificateDuality',
    ]


def test_run_property_unknown_name():
    with pytest.raises(OutOfRange):
        run_property('NoSuchLaw', (), ())


def test_run_property_on_explicit_universe():
    segs = enumerate_segments(TINY)
    params = enumerate_params(TINY)
    out = run_property('OperatorInverse', params, segs)
    assert isinstance(out, PropertyOutcome)
    assert out.checked == len(params) * len(segs) * 2  # both sides per pair
    assert out.counterexamples == ()


def test_saturation_property_checks_shrinking_direction():
    # the only tiny-window instances: pi = St{[0,1],[1,1]}, d1 = [0,1]
    # propagating down to [1,1]; widening instances must not be generated
    segs = enumerate_segments(TINY)
    params = enumerate_params(TINY)
    out = run_property('SaturationPropagation', params, segs)
    assert out.checked == 2
    assert out.counterexamples == ()
    assert out.unknowns == ()


# -------------------------------------------------------------------- sweeps

def test_tiny_sweep_is_clean():
    report = run_sweep(TINY)
    assert report.exit_code == 0
    assert report.counterexample_count == 0
    assert report.n_params == 24
    assert report.n_segments == 4
    assert set(report.properties) == set(PROPERTIES)
    for out in report.properties.values():
        assert out.checked > 0
    # undecided certificate candidates are reported, not dropped
    assert len(report.properties['CertificateDuality'].unknowns) == 32


def test_property_subset_selection():
    cfg = SweepConfig(lo=0, hi=2, max_labs=3, properties=('HdFixedPoint',))
    report = run_sweep(cfg)
    assert list(report.properties) == ['HdFixedPoint']


def test_parallel_merge_is_deterministic():
    one = run_sweep(SweepConfig(lo=0, hi=2, max_labs=3, jobs=1))
    three = run_sweep(SweepConfig(lo=0, hi=2, max_labs=3, jobs=3))
    assert one.to_json() == three.to_json()


def test_report_json_schema():
    report = run_sweep(SweepConfig(lo=0, hi=2, max_labs=2, properties=('DualSwitch',)))
    body = json.loads(report.to_json())
    assert set(body) == {'window', 'max_labs', 'backends', 'instances', 'properties'}
    assert body['window'] == [0, 2]
    assert set(body['instances']) == {'params', 'segments'}
    row = body['properties']['DualSwitch']
    assert set(row) == {'checked', 'counterexamples', 'unknowns'}


def test_exit_code_reflects_counterexamples():
    clean = PropertyOutcome(5, (), ())
    dirty = PropertyOutcome(5, ('broke',), ())
    base = dict(window=(0, 2), max_labs=2, backends=('generic',), n_params=1, n_segments=1)
    assert SweepReport(properties={'A': clean}, **base).exit_code == 0
    assert SweepReport(properties={'A': clean, 'B': dirty}, **base).exit_code == 1

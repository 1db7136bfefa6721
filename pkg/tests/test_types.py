import math

import pytest
from hypothesis import given, strategies as st

from mimocap import (
    AntennaConfig,
    Bandwidth,
    CapacityModel,
    CapacityCurve,
    LinkKind,
    Snr,
    ValidationError,
    classify,
    db_to_linear,
    linear_to_db,
)


@pytest.mark.parametrize("db,linear", [(0.0, 1.0), (10.0, 10.0), (20.0, 100.0)])
def test_db_to_linear_decades(db, linear):
    assert db_to_linear(db).linear == pytest.approx(linear, rel=1e-15)


@given(st.floats(min_value=-40.0, max_value=40.0))
def test_db_linear_round_trip(db):
    linear = db_to_linear(db).linear
    assert linear_to_db(linear) == pytest.approx(db, rel=1e-12, abs=1e-12)
    assert db_to_linear(linear_to_db(linear)).linear == pytest.approx(linear, rel=1e-12)


def test_snr_rejects_negative_and_nonfinite():
    with pytest.raises(ValidationError):
        Snr(-0.5)
    with pytest.raises(ValidationError):
        Snr(float("nan"))
    with pytest.raises(ValidationError):
        db_to_linear(float("inf"))
    with pytest.raises(ValidationError):
        linear_to_db(0.0)


@pytest.mark.parametrize(
    "ntx,nrx,kind",
    [
        (1, 1, LinkKind.SISO),
        (1, 3, LinkKind.SIMO),
        (2, 1, LinkKind.MISO),
        (2, 2, LinkKind.MIMO),
    ],
)
def test_classify_examples(ntx, nrx, kind):
    assert classify(AntennaConfig(ntx, nrx)) is kind


def test_classify_truth_table():
    for ntx in range(1, 9):
        for nrx in range(1, 9):
            kind = classify(AntennaConfig(ntx, nrx))
            expected = {
                (False, False): LinkKind.SISO,
                (False, True): LinkKind.SIMO,
                (True, False): LinkKind.MISO,
                (True, True): LinkKind.MIMO,
            }[(ntx > 1, nrx > 1)]
            assert kind is expected


def test_antenna_config_validation():
    with pytest.raises(ValidationError):
        AntennaConfig(0, 1)
    with pytest.raises(ValidationError):
        AntennaConfig(1, 65)
    with pytest.raises(ValidationError):
        AntennaConfig(1.5, 1)


def test_bandwidth_validation():
    assert Bandwidth().hertz == 1.0
    with pytest.raises(ValidationError):
        Bandwidth(0.0)
    with pytest.raises(ValidationError):
        Bandwidth(math.inf)


def test_ergodic_model_requires_trials_and_seed():
    CapacityModel.ergodic(trials=10, seed=1)
    with pytest.raises(ValidationError):
        CapacityModel.ergodic(trials=0, seed=1)
    with pytest.raises(ValidationError):
        CapacityModel(CapacityModel.shannon().kind, trials=5)


def test_curve_invariants():
    config = AntennaConfig(1, 1)
    model = CapacityModel.shannon()
    curve = CapacityCurve(config, model, ((0.0, 1.0), (10.0, 3.5)))
    assert curve.name == "siso_1x1_shannon"
    with pytest.raises(ValidationError):
        CapacityCurve(config, model, ((10.0, 1.0), (0.0, 3.5)))
    with pytest.raises(ValidationError):
        CapacityCurve(config, model, ((0.0, -1.0),))
    with pytest.raises(ValidationError):
        CapacityCurve(config, model, ((0.0, 1.0), (1.0, 2.0)), stderr=(0.1,))

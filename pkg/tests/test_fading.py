import math

import numpy as np
import pytest
from scipy.integrate import quad

from mimocap import (
    AntennaConfig,
    Bandwidth,
    ChannelRealization,
    Snr,
    ValidationError,
    chunk_rng,
    draw_channel,
    ergodic_capacity,
    logdet_capacity,
)
from mimocap.fading import CHUNK_TRIALS, _gains_from_uniforms

B1 = Bandwidth(1.0)


def rayleigh_siso_capacity(rho: float) -> float:
    """Independent quadrature oracle: E[log2(1 + rho*X)], X ~ Exp(1)."""
    value, err = quad(lambda x: math.log2(1.0 + rho * x) * math.exp(-x), 0.0, np.inf)
    assert err < 1e-8
    return value


def test_draw_channel_shape_and_determinism():
    cfg = AntennaConfig(3, 2)
    a = draw_channel(cfg, chunk_rng(123, 0))
    b = draw_channel(cfg, chunk_rng(123, 0))
    assert a.gains.shape == (2, 3)
    np.testing.assert_array_equal(a.gains, b.gains)
    c = draw_channel(AntennaConfig(1, 1), chunk_rng(0, 0))
    assert c.gains.shape == (1, 1)


def test_entry_statistics():
    rng = chunk_rng(7, 0)
    u = rng.random((100000, 2))
    h = _gains_from_uniforms(u)
    power = np.mean(np.abs(h) ** 2)
    assert power == pytest.approx(1.0, abs=0.02)
    # real and imaginary parts each carry half the power
    assert np.var(h.real) == pytest.approx(0.5, abs=0.01)
    assert np.var(h.imag) == pytest.approx(0.5, abs=0.01)
    assert abs(np.mean(h)) < 0.01


def test_logdet_trivial_cases():
    one = ChannelRealization(np.array([[1.0 + 0j]]))
    assert logdet_capacity(one, B1, Snr(3.0)) == pytest.approx(2.0, abs=1e-12)
    zeros = ChannelRealization(np.zeros((2, 3), dtype=complex))
    assert logdet_capacity(zeros, B1, Snr(5.0)) == 0.0
    eye = ChannelRealization(np.eye(2, dtype=complex))
    # I + (2/2)*I = 2I, det = 4
    assert logdet_capacity(eye, B1, Snr(2.0)) == pytest.approx(2.0, abs=1e-12)


def test_logdet_matches_slogdet():
    rng = chunk_rng(11, 0)
    for _ in range(20):
        h = draw_channel(AntennaConfig(4, 3), rng)
        snr = Snr(float(rng.random()) * 20)
        gram = np.eye(3) + (snr.linear / 4) * (h.gains @ h.gains.conj().T)
        expected = np.linalg.slogdet(gram)[1] / math.log(2)
        assert logdet_capacity(h, B1, snr) == pytest.approx(expected, rel=1e-10)


def test_logdet_rejects_nonfinite():
    with pytest.raises(ValidationError):
        ChannelRealization(np.array([[np.nan + 0j]]))


def test_ergodic_zero_snr_is_exactly_zero():
    est = ergodic_capacity(AntennaConfig(1, 1), B1, Snr(0.0), 500, 3)
    assert est.mean_capacity == 0.0
    assert est.std_error == 0.0


def test_ergodic_deterministic_bit_for_bit():
    a = ergodic_capacity(AntennaConfig(2, 2), B1, Snr(10.0), 5000, 99)
    b = ergodic_capacity(AntennaConfig(2, 2), B1, Snr(10.0), 5000, 99)
    assert a == b


def test_chunking_invisible_at_boundary():
    # estimates straddling a chunk boundary stay deterministic
    for trials in (CHUNK_TRIALS - 1, CHUNK_TRIALS, CHUNK_TRIALS + 1):
        a = ergodic_capacity(AntennaConfig(1, 2), B1, Snr(2.0), trials, 5)
        b = ergodic_capacity(AntennaConfig(1, 2), B1, Snr(2.0), trials, 5)
        assert a == b


@pytest.mark.parametrize("rho", [1.0, 10.0])
def test_siso_ergodic_matches_quadrature(rho):
    est = ergodic_capacity(AntennaConfig(1, 1), B1, Snr(rho), 100000, 2024)
    expected = rayleigh_siso_capacity(rho)
    assert abs(est.mean_capacity - expected) <= 3 * est.std_error


def test_more_antennas_never_hurt_paired_draws():
    # 2x2 log-det capacity >= that of its leading 1x1 submatrix, per draw
    rng = chunk_rng(31, 0)
    snr = Snr(10.0)
    for _ in range(200):
        h = draw_channel(AntennaConfig(2, 2), rng)
        sub = ChannelRealization(h.gains[:1, :1])
        c_big = logdet_capacity(h, B1, snr)
        # same per-antenna power for the submatrix comparison
        gram = np.eye(1) + (snr.linear / 2) * (sub.gains @ sub.gains.conj().T)
        c_small = math.log2(np.real(gram[0, 0]))
        assert c_big >= c_small


def test_ergodic_mean_monotone_in_antennas():
    snr = Snr(10.0)
    c11 = ergodic_capacity(AntennaConfig(1, 1), B1, snr, 20000, 8).mean_capacity
    c22 = ergodic_capacity(AntennaConfig(2, 2), B1, snr, 20000, 8).mean_capacity
    c33 = ergodic_capacity(AntennaConfig(3, 3), B1, snr, 20000, 8).mean_capacity
    assert c33 > c22 > c11


def test_stderr_scaling():
    cfg = AntennaConfig(2, 2)
    e1 = ergodic_capacity(cfg, B1, Snr(10.0), 10000, 17)
    e4 = ergodic_capacity(cfg, B1, Snr(10.0), 40000, 17)
    assert e4.std_error == pytest.approx(e1.std_error / 2, rel=0.2)


def test_ergodic_validation():
    with pytest.raises(ValidationError):
        ergodic_capacity(AntennaConfig(1, 1), B1, Snr(1.0), 0, 0)
    with pytest.raises(ValidationError):
        ergodic_capacity(AntennaConfig(1, 1), B1, Snr(1.0), 10, -1)

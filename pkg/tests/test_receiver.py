import math

import numpy as np
import pytest

from squeezelink.channel import ChannelParams
from squeezelink.gaussian import (
    CovMat1, SqueezeSpec, apply_squeeze, beam_splitter, make_thermal)
from squeezelink.receiver import (
    DegenerateAlphabetError, OperatingPoint, copies_for_snr,
    correlation_mean, correlation_stats, correlation_variance, midpoint,
    snr_and_copies)

NOMINAL = SqueezeSpec(0.576)
ETA = math.exp(-10)


def test_correlation_mean_closed_form(nominal_point, closed_form_c):
    c = correlation_mean(nominal_point.output_state())
    assert c == pytest.approx(closed_form_c(10000, 0.576, ETA), rel=1e-9)
    assert c == pytest.approx(-2.250733, abs=2e-4)


def test_correlation_mean_vacuum_input(closed_form_c):
    c = correlation_mean(OperatingPoint(0, NOMINAL, ETA).output_state())
    assert c == pytest.approx(closed_form_c(0, 0.576, ETA), rel=1e-9)
    assert c == pytest.approx(-1.12533e-4, rel=1e-3)


def test_correlation_mean_without_squeezing(unsqueezed_point):
    assert correlation_mean(unsqueezed_point.output_state()) == 0


def test_correlation_variance_values(nominal_point):
    v2 = nominal_point.output_state()
    var = correlation_variance(v2)
    assert var == pytest.approx(13.1337, rel=2e-4)
    assert math.sqrt(var) == pytest.approx(3.623975, rel=2e-4)


def test_correlation_variance_vacuum():
    v2 = beam_splitter(CovMat1.vacuum(), CovMat1.vacuum())
    assert correlation_variance(v2) == pytest.approx(0.5, rel=1e-12)


def test_correlation_variance_isserlis(nominal_point):
    m = nominal_point.output_state().matrix
    x11, x12, x22 = m[0, 0], m[0, 2], m[2, 2]
    p11, p12, p22 = m[1, 1], m[1, 3], m[3, 3]
    expected = (x11 * x22 + x12 ** 2) + (p11 * p22 + p12 ** 2)
    assert correlation_variance(nominal_point.output_state()) == pytest.approx(
        expected, rel=1e-12)


def test_correlation_variance_by_model(nominal_point):
    v2 = nominal_point.output_state()
    joint = correlation_variance(v2, 'joint')
    assert correlation_variance(v2, 'alt-homodyne') == pytest.approx(2 * joint)
    assert correlation_variance(v2, 'heterodyne') > joint


def test_snr_and_copies_nominal_point():
    stats = snr_and_copies(10000, NOMINAL, ETA)
    assert stats.snr == pytest.approx(0.621067, rel=1e-4)
    assert stats.m_required == 2
    assert stats.model == 'joint'


def test_snr_and_copies_vacuum_input():
    stats = snr_and_copies(0, NOMINAL, ETA)
    assert stats.snr == pytest.approx(1.5915e-4, rel=1e-3)
    assert 6280 <= stats.m_required <= 6290


def test_thermal_light_beats_vacuum():
    noisy = snr_and_copies(10000, NOMINAL, ETA)
    vacuum = snr_and_copies(0, NOMINAL, ETA)
    assert noisy.snr / vacuum.snr > 1e3
    assert vacuum.m_required / noisy.m_required > 1e3


def test_snr_without_squeezing():
    stats = snr_and_copies(10000, SqueezeSpec(0), ETA)
    assert stats.snr == 0
    assert stats.m_required == math.inf


@pytest.mark.parametrize('snr, model, expected', [
    (0.2, 'joint', 5),
    (0.2, 'alt-homodyne', 6),
    (0.621067, 'joint', 2),
    (1.0, 'joint', 1),
    (1.5, 'joint', 1),
    (1.5, 'alt-homodyne', 2),
    (1.59e-4, 'joint', 6290),
    (0, 'joint', math.inf),
])
def test_copies_for_snr(snr, model, expected):
    assert copies_for_snr(snr, model) == expected


def test_copies_are_even_for_alternating_homodyne():
    for nbar in (0, 10, 100, 1000, 10000):
        m = snr_and_copies(nbar, NOMINAL, ETA, 'alt-homodyne').m_required
        assert m % 2 == 0


def test_snr_increases_with_thermal_occupation():
    snr = [snr_and_copies(nbar, NOMINAL, ETA).snr
           for nbar in (0, 10, 100, 1000, 10000, 100000)]
    assert all(b > a for a, b in zip(snr, snr[1:]))


def test_snr_saturates_at_large_occupation():
    lossless = snr_and_copies(1e8, NOMINAL, 1.0).snr
    high = [snr_and_copies(nbar, NOMINAL, ETA).snr for nbar in (1e6, 1e7, 1e8)]
    assert high[1] / high[0] < 1.01
    assert high[2] / high[1] < 1.001
    assert high[2] == pytest.approx(lossless, rel=1e-3)


def test_snr_monotone_in_transmittance_and_squeezing():
    rng = np.random.default_rng(3)
    for _ in range(200):
        nbar = 10 ** rng.uniform(0, 5)
        r = rng.uniform(0.05, 1)
        e1, e2 = sorted(rng.uniform(1e-6, 1, size=2))
        assert (snr_and_copies(nbar, SqueezeSpec(r), e1).snr
                <= snr_and_copies(nbar, SqueezeSpec(r), e2).snr)
        assert (snr_and_copies(nbar, SqueezeSpec(r / 2), e1).snr
                <= snr_and_copies(nbar, SqueezeSpec(r), e1).snr)


def test_lossless_snr_independent_of_noise():
    quiet = snr_and_copies(0, NOMINAL, 1.0).snr
    loud = snr_and_copies(10000, NOMINAL, 1.0).snr
    assert quiet == pytest.approx(0.6932, abs=1e-3)
    assert loud == pytest.approx(0.7000, abs=1e-3)
    assert abs(loud - quiet) / quiet < 0.02


def test_correlation_sign():
    rng = np.random.default_rng(11)
    for _ in range(200):
        v = apply_squeeze(make_thermal(rng.exponential(1000)),
                          rng.uniform(0.01, 1))
        c = correlation_mean(beam_splitter(v))
        assert c <= 0
        anti = correlation_mean(beam_splitter(CovMat1(v.vpp, v.vxx)))
        assert anti == pytest.approx(-c, rel=1e-12)


def test_correlation_stats(nominal_point):
    stats = correlation_stats(nominal_point.output_state(), 'joint-phase-space')
    assert stats.model == 'joint'
    assert stats.snr == pytest.approx(abs(stats.c_mean) / stats.sigma_per_copy)


def test_operating_point_accepts_bare_transmittance():
    point = OperatingPoint(10, NOMINAL, 0.5)
    assert point.channel == ChannelParams(eta=0.5)


def test_midpoint():
    assert midpoint(-1.0, -3.0) == -2.0
    with pytest.raises(DegenerateAlphabetError):
        midpoint(-1.0, -1.0)


def test_correlation_magnitude_monotone():
    def magnitude(nbar, r, eta):
        point = OperatingPoint(nbar, SqueezeSpec(r), eta)
        return abs(correlation_mean(point.output_state()))

    rng = np.random.default_rng(5)
    for _ in range(200):
        n1, n2 = sorted(10 ** rng.uniform(-2, 6, size=2))
        r1, r2 = sorted(rng.uniform(0.01, 1, size=2))
        e1, e2 = sorted(rng.uniform(1e-6, 1, size=2))
        assert magnitude(n1, r2, e2) <= magnitude(n2, r2, e2)
        assert magnitude(n2, r1, e2) <= magnitude(n2, r2, e2)
        assert magnitude(n2, r2, e1) <= magnitude(n2, r2, e2)

import math

import numpy as np
import pytest

from squeezelink.channel import (
    ChannelParams, as_channel, propagate, residual_squeezing, transmittance)
from squeezelink.gaussian import (
    CovMat1, DomainError, SqueezeSpec, apply_squeeze, make_thermal)


def test_transmittance():
    assert transmittance(ChannelParams(length=0, characteristic_length=2)) == 1
    assert transmittance(ChannelParams.from_ratio(1)) == pytest.approx(
        math.exp(-1))
    assert transmittance(ChannelParams.from_ratio(10)) == pytest.approx(
        4.539993e-5, abs=1e-11)
    assert transmittance(ChannelParams(length=5e-6,
                                       characteristic_length=1e-6)) == \
        pytest.approx(math.exp(-5))
    assert transmittance(ChannelParams(eta=0.3)) == 0.3
    assert transmittance(as_channel(0.25)) == 0.25


def test_channel_ratio():
    assert ChannelParams(length=3, characteristic_length=2).ratio == 1.5
    assert ChannelParams.lossless().ratio is None


@pytest.mark.parametrize('kwargs', [
    dict(length=1, characteristic_length=0),
    dict(length=1, characteristic_length=-1),
    dict(length=-1),
    dict(length=math.inf),
    dict(eta=1.5),
    dict(eta=-0.5),
    dict(length=1, eta=0.5),
    dict(),
])
def test_channel_invalid(kwargs):
    with pytest.raises(DomainError):
        ChannelParams(**kwargs)


def test_propagate_vacuum_stays_vacuum():
    for ratio in (0, 0.5, 10, 100):
        v = propagate(CovMat1.vacuum(), ChannelParams.from_ratio(ratio))
        assert v.vxx == pytest.approx(0.5, rel=1e-15)
        assert v.vpp == pytest.approx(0.5, rel=1e-15)


def test_propagate_zero_length():
    v = CovMat1(0.05, 5.0)
    assert propagate(v, ChannelParams.from_ratio(0)) == v


def test_propagate_composes():
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = apply_squeeze(make_thermal(rng.exponential(100)),
                          rng.uniform(0.01, 1))
        l1, l2 = rng.uniform(0, 10, size=2)
        twice = propagate(propagate(v, ChannelParams.from_ratio(l1)),
                          ChannelParams.from_ratio(l2))
        once = propagate(v, ChannelParams.from_ratio(l1 + l2))
        assert twice.vxx == pytest.approx(once.vxx, rel=1e-12)
        assert twice.vpp == pytest.approx(once.vpp, rel=1e-12)


def test_propagate_contracts_toward_vacuum():
    v = apply_squeeze(make_thermal(100), SqueezeSpec(0.576))
    distances = [
        np.abs(propagate(v, ChannelParams.from_ratio(r)).matrix
               - CovMat1.vacuum().matrix).max()
        for r in np.linspace(0, 20, 41)]
    assert all(b < a for a, b in zip(distances, distances[1:]))


def test_residual_squeezing_at_source():
    res = residual_squeezing(0, SqueezeSpec(0.576), ChannelParams.from_ratio(0))
    assert res.variance_ratio == pytest.approx(math.exp(-2.304), rel=1e-12)
    assert res.relative_db == pytest.approx(10.006, abs=1e-3)


def test_residual_squeezing_decays():
    spec = SqueezeSpec(0.576)
    db = [residual_squeezing(0, spec, ChannelParams.from_ratio(r)).relative_db
          for r in range(11)]
    assert all(b < a for a, b in zip(db, db[1:]))
    assert db[-1] == pytest.approx(0, abs=1e-3)
    end = residual_squeezing(0, spec, ChannelParams.from_ratio(10))
    assert 0.9999 < end.variance_ratio < 1


def test_residual_squeezing_thermal_light():
    res = residual_squeezing(10000, SqueezeSpec(0.576),
                             ChannelParams.from_ratio(10))
    assert res.variance_ratio > 1
    eta = math.exp(-10)
    thermal = eta * 10000.5 + (1 - eta) / 2
    squeezed = eta * 10000.5 * math.exp(-2.304) + (1 - eta) / 2
    assert res.relative_db == pytest.approx(
        10 * math.log10(thermal / squeezed), rel=1e-9)
    assert res.relative_db == pytest.approx(2.429, abs=1e-3)

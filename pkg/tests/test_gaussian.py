import math

import numpy as np
import pytest

from squeezelink.gaussian import (
    CovMat1, CovMat2, DomainError, P1, P2, SqueezeSpec, ThermalOccupation,
    UnphysicalStateError, UnsupportedConfigurationError, X1, X2, apply_loss,
    apply_squeeze, beam_splitter, make_thermal, squeeze_factor,
    symplectic_eigenvalues)


def test_make_thermal():
    assert make_thermal(0) == CovMat1(0.5, 0.5)
    assert make_thermal(10000) == CovMat1(10000.5, 10000.5)
    assert make_thermal(ThermalOccupation(3)) == CovMat1(3.5, 3.5)


@pytest.mark.parametrize('nbar', [-1, math.nan, math.inf])
def test_make_thermal_invalid(nbar):
    with pytest.raises(DomainError):
        make_thermal(nbar)


@pytest.mark.parametrize('spec, factor', [
    (SqueezeSpec(0, 'paper'), 1.0),
    (SqueezeSpec(0.576, 'paper'), math.exp(-2.304)),
    (SqueezeSpec(0.576, 'standard'), math.exp(-1.152)),
    (SqueezeSpec(10, 'decibel'), 0.1),
    (SqueezeSpec(3, 'db'), 10 ** -0.3),
    (SqueezeSpec(0.25, 'variance-factor'), 0.25),
    (SqueezeSpec(0.5, 'factor'), 0.5),
])
def test_squeeze_factor(spec, factor):
    assert squeeze_factor(spec) == pytest.approx(factor, rel=1e-12)


def test_squeeze_aliases():
    assert SqueezeSpec(1, 'db').convention == 'decibel'
    assert SqueezeSpec(1, 'factor').convention == 'variance-factor'
    assert SqueezeSpec(1).convention == 'paper'


def test_nominal_squeezing_is_ten_decibels():
    assert SqueezeSpec(0.576, 'paper').decibels == pytest.approx(10.0, abs=0.01)


@pytest.mark.parametrize('value, convention', [
    (-0.1, 'paper'),
    (0, 'variance-factor'),
    (1.5, 'variance-factor'),
    (math.nan, 'standard'),
    (0.5, 'nepers'),
])
def test_squeeze_spec_invalid(value, convention):
    with pytest.raises(DomainError):
        SqueezeSpec(value, convention)


def test_apply_squeeze_vacuum():
    v = apply_squeeze(CovMat1.vacuum(), 0.1)
    assert v.vxx == pytest.approx(0.05)
    assert v.vpp == pytest.approx(5.0)


def test_apply_squeeze_thermal():
    s = math.exp(-2.304)
    v = apply_squeeze(make_thermal(10000), SqueezeSpec(0.576))
    assert v.vxx == pytest.approx(10000.5 * s, rel=1e-12)
    assert v.vpp == pytest.approx(10000.5 / s, rel=1e-12)
    assert v.vxx == pytest.approx(998.6, rel=1e-3)
    assert v.vpp == pytest.approx(1.0015e5, rel=1e-3)


def test_apply_squeeze_identity():
    v = CovMat1(2.0, 3.0)
    assert apply_squeeze(v, 1.0) == v


def test_apply_squeeze_preserves_determinant():
    v = CovMat1(2.0, 3.0)
    for s in (0.9, 0.1, 1e-4):
        assert apply_squeeze(v, s).determinant == pytest.approx(6.0, rel=1e-12)


def test_apply_squeeze_rotated_input():
    with pytest.raises(UnsupportedConfigurationError):
        apply_squeeze(CovMat1(1.0, 1.0, 0.5), 0.5)


def test_apply_loss():
    v = CovMat1(998.608, 100150.3)
    eta = math.exp(-10)
    out = apply_loss(v, eta)
    assert out.vxx == pytest.approx(eta * 998.608 + (1 - eta) / 2, rel=1e-12)
    assert out.vpp == pytest.approx(eta * 100150.3 + (1 - eta) / 2, rel=1e-12)
    assert out.vxx == pytest.approx(0.545314, abs=1e-6)
    assert out.vpp == pytest.approx(5.0468, abs=1e-4)


def test_apply_loss_limits():
    v = CovMat1(0.05, 5.0)
    assert apply_loss(v, 1) == v
    assert apply_loss(v, 0) == CovMat1.vacuum()


@pytest.mark.parametrize('eta', [-0.1, 1.1])
def test_apply_loss_invalid(eta):
    with pytest.raises(DomainError):
        apply_loss(CovMat1.vacuum(), eta)


def test_beam_splitter_vacuum():
    v2 = beam_splitter(CovMat1.vacuum(), CovMat1.vacuum())
    assert np.allclose(v2.matrix, 0.5 * np.eye(4), atol=1e-12)
    assert beam_splitter(CovMat1.vacuum()) == v2


def test_beam_splitter_correlations():
    v2 = beam_splitter(CovMat1(0.545314, 5.046784))
    m = v2.matrix
    assert m[X1, X2] == pytest.approx(0.022657, abs=1e-6)
    assert m[P1, P2] == pytest.approx(2.273392, abs=1e-6)
    assert m[X1, X1] == pytest.approx((0.545314 + 0.5) / 2, rel=1e-12)


def test_beam_splitter_symmetric_outputs():
    m = beam_splitter(CovMat1(0.3, 7.0)).matrix
    assert np.allclose(m[:2, :2], m[2:, 2:], atol=1e-12)


def test_beam_splitter_invalid():
    with pytest.raises(DomainError):
        beam_splitter(np.eye(2))


def test_symplectic_eigenvalues():
    assert symplectic_eigenvalues(CovMat1.vacuum()) == pytest.approx([0.5])
    assert symplectic_eigenvalues(CovMat1(0.05, 5.0)) == pytest.approx([0.5])
    assert symplectic_eigenvalues(make_thermal(10000)) == pytest.approx(
        [10000.5], rel=1e-9)
    assert symplectic_eigenvalues(
        beam_splitter(make_thermal(3), make_thermal(1))) == pytest.approx(
        [1.5, 3.5])


def test_unphysical_single_mode():
    with pytest.raises(UnphysicalStateError):
        CovMat1(0.4, 0.4)
    with pytest.raises(UnphysicalStateError):
        CovMat1(-1.0, 1.0)


def test_unphysical_two_mode():
    with pytest.raises(UnphysicalStateError):
        CovMat2(0.1 * np.eye(4))
    with pytest.raises(DomainError):
        CovMat2(np.triu(np.ones((4, 4))) + np.eye(4))
    with pytest.raises(DomainError):
        CovMat2(np.eye(2))


def test_covmat2_is_read_only():
    v2 = CovMat2.vacuum()
    with pytest.raises(ValueError):
        v2.matrix[0, 0] = 1.0


def test_covmat2_mode():
    v2 = beam_splitter(CovMat1(0.3, 7.0))
    assert v2.mode(0).vxx == pytest.approx(0.4)
    assert v2.mode(1).vpp == pytest.approx(3.75)


def test_heterodyne_noise():
    m = CovMat2.vacuum().with_vacuum_noise().matrix
    assert np.allclose(m, np.eye(4))


def test_physicality_closed_under_operations():
    rng = np.random.default_rng(1234)
    lowest = math.inf
    for _ in range(10_000):
        nbar = 10 ** rng.uniform(-3, 3)
        va = apply_squeeze(make_thermal(nbar), rng.uniform(0.05, 1))
        va = apply_loss(va, rng.uniform(0, 1))
        va = apply_squeeze(va, rng.uniform(0.2, 1))
        vb = apply_loss(make_thermal(rng.exponential(10)), rng.uniform(0, 1))
        v2 = beam_splitter(va, vb)
        lowest = min(lowest, va.symplectic_eigenvalue,
                     *symplectic_eigenvalues(v2))
    assert lowest >= 0.5 - 1e-9

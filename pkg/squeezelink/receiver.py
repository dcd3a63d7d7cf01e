"""
Analytic statistics of the correlation observable C = x1·x2 − p1·p2 at the
beam-splitter outputs.
"""

import dataclasses
import math
from dataclasses import dataclass
from typing import Union

from squeezelink.channel import ChannelParams, as_channel, propagate
from squeezelink.gaussian import (
    CovMat1, CovMat2, DomainError, P1, P2, SqueezeSpec, X1, X2,
    apply_squeeze, beam_splitter, make_thermal)
from squeezelink.measurements import resolve
from squeezelink.models import MeasurementModel

ModelLike = Union[str, MeasurementModel]

# absorbs float rounding in 1/SNR so that SNR = 0.2 needs 5 copies, not 6
COPIES_RTOL = 1e-12


class DegenerateAlphabetError(DomainError):
    """Two symbols share the same expected correlation."""


@dataclass(frozen=True)
class CorrelationStats:
    c_mean: float
    sigma_per_copy: float
    snr: float
    # int, or math.inf when the signal vanishes
    m_required: Union[int, float]
    model: str


@dataclass(frozen=True)
class OperatingPoint:
    """Thermal occupation, squeezing and channel of one transmitted symbol."""
    nbar: float
    squeeze: SqueezeSpec
    channel: ChannelParams

    def __post_init__(self):
        object.__setattr__(self, 'channel', as_channel(self.channel))

    def output_state(self) -> CovMat2:
        """Thermal → squeeze → propagate → 50:50 split against vacuum."""
        v = apply_squeeze(make_thermal(self.nbar), self.squeeze)
        return beam_splitter(propagate(v, self.channel), CovMat1.vacuum())

    def with_squeeze(self, squeeze: SqueezeSpec) -> 'OperatingPoint':
        return dataclasses.replace(self, squeeze=squeeze)


def correlation_mean(v2: CovMat2) -> float:
    m = v2.matrix
    return float(m[X1, X2] - m[P1, P2])


def correlation_variance(v2: CovMat2, model: ModelLike = 'joint') -> float:
    return float(resolve(model).per_copy_variance(v2))


def copies_for_snr(snr: float, model: ModelLike = 'joint'
                   ) -> Union[int, float]:
    if snr <= 0:
        return math.inf
    m = max(1, math.ceil((1.0 / snr) * (1 - COPIES_RTOL)))
    return resolve(model).round_copies(m)


def correlation_stats(v2: CovMat2, model: ModelLike = 'joint'
                      ) -> CorrelationStats:
    model = resolve(model)
    c = correlation_mean(v2)
    sigma = math.sqrt(model.per_copy_variance(v2))
    snr = abs(c) / sigma
    return CorrelationStats(
        c_mean=c,
        sigma_per_copy=sigma,
        snr=snr,
        m_required=copies_for_snr(snr, model),
        model=model.name)


def snr_and_copies(nbar: float, spec: SqueezeSpec,
                   eta: Union[ChannelParams, float],
                   model: ModelLike = 'joint') -> CorrelationStats:
    point = OperatingPoint(nbar, spec, as_channel(eta))
    return correlation_stats(point.output_state(), model)


def midpoint(c_a: float, c_b: float) -> float:
    """Decision boundary between two expected correlations."""
    if c_a == c_b:
        raise DegenerateAlphabetError(
            f"symbols share the expected correlation {c_a!r}")
    return (c_a + c_b) / 2

"""
Nanowire propagation: intensity transmittance e^(−L/L0) applied as a
beam-splitter loss channel on the covariance matrix.
"""

import math
from dataclasses import dataclass
from typing import Optional, Union

from squeezelink.gaussian import (
    CovMat1, DomainError, SqueezeSpec, VACUUM_VARIANCE, apply_loss,
    apply_squeeze, make_thermal)


@dataclass(frozen=True)
class ChannelParams:
    """
    Either a propagation length with its characteristic length (any
    consistent unit), or a transmittance given directly.
    """
    length: Optional[float] = None
    characteristic_length: float = 1.0
    eta: Optional[float] = None

    def __post_init__(self):
        if (self.length is None) == (self.eta is None):
            raise DomainError("give either a length or a transmittance")
        if self.eta is not None:
            if not 0 <= self.eta <= 1:
                raise DomainError(
                    f"transmittance must lie in [0, 1], got {self.eta!r}")
            return
        if not math.isfinite(self.length) or self.length < 0:
            raise DomainError(f"length must be ≥ 0, got {self.length!r}")
        if not self.characteristic_length > 0:
            raise DomainError(
                f"characteristic length must be > 0, "
                f"got {self.characteristic_length!r}")

    @classmethod
    def from_ratio(cls, ratio: float) -> 'ChannelParams':
        return cls(length=float(ratio), characteristic_length=1.0)

    @classmethod
    def lossless(cls) -> 'ChannelParams':
        return cls(eta=1.0)

    @property
    def ratio(self) -> Optional[float]:
        """L/L0, or None when the channel was given as a transmittance."""
        if self.length is None:
            return None
        return self.length / self.characteristic_length


def as_channel(params: Union[ChannelParams, float]) -> ChannelParams:
    """Accept a bare float as a direct transmittance."""
    if isinstance(params, ChannelParams):
        return params
    return ChannelParams(eta=float(params))


def transmittance(params: ChannelParams) -> float:
    if params.eta is not None:
        return float(params.eta)
    return math.exp(-params.length / params.characteristic_length)


def propagate(v: CovMat1, params: Union[ChannelParams, float]) -> CovMat1:
    return apply_loss(v, transmittance(as_channel(params)))


@dataclass(frozen=True)
class ResidualSqueezing:
    state: CovMat1
    # vxx relative to the vacuum; below 1 means squeezing survives
    variance_ratio: float
    # squeezing against the same state propagated without squeezing
    relative_db: float


def residual_squeezing(nbar: float, spec: SqueezeSpec,
                       params: Union[ChannelParams, float]
                       ) -> ResidualSqueezing:
    thermal = propagate(make_thermal(nbar), params)
    state = propagate(apply_squeeze(make_thermal(nbar), spec), params)
    return ResidualSqueezing(
        state=state,
        variance_ratio=state.vxx / VACUUM_VARIANCE,
        relative_db=10 * math.log10(thermal.vxx / state.vxx))

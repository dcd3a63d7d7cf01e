"""
Classical payloads carried as squeezing levels.

Bits are grouped big-endian into dits, each dit selects a squeezing level of
the alphabet, and the receiver maps its correlation estimate back to the
nearest expected correlation through midpoint boundaries.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from squeezelink.channel import ChannelParams, as_channel
from squeezelink.gaussian import DomainError, SqueezeSpec
from squeezelink.measurements import resolve
from squeezelink.models import MeasurementModel
from squeezelink.montecarlo import (
    TrialResult, label_streams, simulate_trials, substream)
from squeezelink.receiver import (
    DegenerateAlphabetError, OperatingPoint, correlation_mean, midpoint)
from squeezelink.utils import parse_sweep

logger = logging.getLogger(__name__)

# stream label reserved for payload transmissions
PAYLOAD_LABEL = 2 ** 32 - 1


@dataclass(frozen=True)
class Alphabet:
    levels: Tuple[SqueezeSpec, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        object.__setattr__(self, 'levels', levels)
        if len(levels) < 2:
            raise DegenerateAlphabetError(
                f"an alphabet needs at least two levels, got {len(levels)}")
        if len({level.convention for level in levels}) > 1:
            raise DomainError("alphabet levels must share one convention")
        factors = [level.factor for level in levels]
        if any(b >= a for a, b in zip(factors, factors[1:])):
            raise DomainError(
                "alphabet levels must be in strictly increasing squeezing "
                "order")

    @classmethod
    def parse(cls, levels: Union[str, Sequence[float]],
              convention: str = 'paper') -> 'Alphabet':
        """From "r0,r1,..." or a list of magnitudes."""
        try:
            values = parse_sweep(levels)
        except ValueError as e:
            raise DomainError(f"alphabet: {e}") from None
        return cls(tuple(SqueezeSpec(v, convention) for v in values))

    @property
    def size(self) -> int:
        return len(self.levels)

    @property
    def bits_per_symbol(self) -> int:
        return self.size.bit_length() - 1


@dataclass(frozen=True)
class FrameSpec:
    copies: int
    model: MeasurementModel
    nbar: float
    channel: ChannelParams

    def __post_init__(self):
        object.__setattr__(self, 'model', resolve(self.model))
        object.__setattr__(self, 'channel', as_channel(self.channel))
        self.model.check_copies(self.copies)

    def point(self, level: SqueezeSpec) -> OperatingPoint:
        return OperatingPoint(self.nbar, level, self.channel)


@dataclass(frozen=True)
class Frame:
    dits: Tuple[int, ...]
    # payload length before tail padding
    bit_length: int


def _check_bits(payload: str):
    if set(payload) - {'0', '1'}:
        raise DomainError("payload must be a string of 0 and 1")


def encode(payload: str, alphabet: Alphabet) -> Frame:
    _check_bits(payload)
    b = alphabet.bits_per_symbol
    if alphabet.size != 1 << b:
        logger.warning("alphabet size %d is not a power of two: labels ≥ %d "
                       "are never sent", alphabet.size, 1 << b)
    padded = payload + '0' * (-len(payload) % b)
    dits = tuple(int(padded[i:i + b], 2) for i in range(0, len(padded), b))
    return Frame(dits, len(payload))


def dits_to_bits(frame: Frame, alphabet: Alphabet) -> str:
    b = alphabet.bits_per_symbol
    top = (1 << b) - 1
    if any(not 0 <= d < alphabet.size for d in frame.dits):
        raise DomainError("dit outside the alphabet")
    bits = ''.join(format(min(d, top), f'0{b}b') for d in frame.dits)
    return bits[:frame.bit_length]


def bytes_to_bits(data: bytes) -> str:
    return ''.join(format(byte, '08b') for byte in data)


def bits_to_bytes(bits: str) -> bytes:
    _check_bits(bits)
    bits += '0' * (-len(bits) % 8)
    return bytes(int(bits[i:i + 8], 2) for i in range(0, len(bits), 8))


def expected_correlations(alphabet: Alphabet, frame: FrameSpec
                          ) -> Tuple[float, ...]:
    return tuple(correlation_mean(frame.point(level).output_state())
                 for level in alphabet.levels)


def thresholds(alphabet: Alphabet, frame: FrameSpec) -> Tuple[float, ...]:
    """K−1 strictly decreasing boundaries between neighbouring labels."""
    c = expected_correlations(alphabet, frame)
    for k, (upper, lower) in enumerate(zip(c, c[1:])):
        if not lower < upper:
            raise DegenerateAlphabetError(
                f"labels {k} and {k + 1} are not separated at this operating "
                f"point (C = {upper!r}, {lower!r})")
    return tuple(midpoint(upper, lower) for upper, lower in zip(c, c[1:]))


def decode(c_hat, boundaries: Sequence[float]):
    """
    Label of the interval holding ``c_hat``; exact boundary hits go to the
    smaller-squeezing label. Arrays are decoded elementwise.
    """
    ascending = -np.asarray(boundaries, dtype=float)
    labels = np.searchsorted(ascending, -np.asarray(c_hat, dtype=float),
                             side='left')
    if np.ndim(labels) == 0:
        return int(labels)
    return labels


@dataclass(frozen=True)
class SymbolErrorReport:
    per_symbol: Tuple[float, ...]
    mean: float
    # row = sent label, column = decided label; rows sum to 1
    confusion: np.ndarray = field(compare=False)
    trials: int


def symbol_error_rate(alphabet: Alphabet, frame: FrameSpec, trials: int,
                      seed: int, workers: Optional[int] = None
                      ) -> SymbolErrorReport:
    boundaries = thresholds(alphabet, frame)
    counts = np.zeros((alphabet.size, alphabet.size), dtype=np.int64)
    for label, level in enumerate(alphabet.levels):
        c_hat = simulate_trials(frame.point(level).output_state(),
                                frame.model, frame.copies, seed,
                                label_streams(label, trials), workers)
        counts[label] = np.bincount(decode(c_hat, boundaries),
                                    minlength=alphabet.size)
    confusion = counts / trials
    per_symbol = tuple(float(1 - confusion[k, k])
                       for k in range(alphabet.size))
    return SymbolErrorReport(
        per_symbol=per_symbol,
        mean=float(np.mean(per_symbol)),
        confusion=confusion,
        trials=trials)


@dataclass(frozen=True)
class Transmission:
    payload: str
    frame: Frame
    # first pass, one result per dit
    received: Tuple[TrialResult, ...]
    recovered: str
    # passes × dits decided labels
    decided: np.ndarray = field(compare=False)
    counts: np.ndarray = field(compare=False)
    symbol_error_rate: Optional[float]
    bit_error_rate: Optional[float]

    @property
    def confusion(self) -> List[Optional[List[float]]]:
        """Normalized rows; None for labels never sent."""
        return [list(row / row.sum()) if row.sum() else None
                for row in self.counts]


def transmit(payload: str, alphabet: Alphabet, frame: FrameSpec,
             passes: int = 1, seed: int = 0,
             workers: Optional[int] = None) -> Transmission:
    """
    Send the payload ``passes`` times; the recovered payload is the first
    pass, error rates cover all of them.
    """
    if passes < 1:
        raise DomainError(f"pass count must be ≥ 1, got {passes}")
    encoded = encode(payload, alphabet)
    boundaries = thresholds(alphabet, frame)
    dits = np.array(encoded.dits, dtype=np.int64)
    n = len(dits)
    c_hat = np.zeros((passes, n))

    for label in np.unique(dits):
        positions = np.flatnonzero(dits == label)
        streams = [substream(PAYLOAD_LABEL, p * n + i)
                   for p in range(passes) for i in positions]
        estimates = simulate_trials(
            frame.point(alphabet.levels[label]).output_state(), frame.model,
            frame.copies, seed, streams, workers)
        c_hat[:, positions] = estimates.reshape(passes, len(positions))

    decided = decode(c_hat, boundaries).reshape(passes, n)
    counts = np.zeros((alphabet.size, alphabet.size), dtype=np.int64)
    np.add.at(counts, (np.broadcast_to(dits, decided.shape), decided), 1)

    received = tuple(TrialResult(float(c), int(d), frame.copies)
                     for c, d in zip(c_hat[0], decided[0]))
    recovered = dits_to_bits(
        Frame(tuple(int(d) for d in decided[0]), encoded.bit_length), alphabet)

    ser = ber = None
    if n:
        ser = float(np.mean(decided != dits))
        errors = sum(
            sum(a != b for a, b in zip(payload, dits_to_bits(
                Frame(tuple(int(d) for d in row), encoded.bit_length),
                alphabet)))
            for row in decided)
        ber = errors / (passes * len(payload))
    logger.info("sent %d bits as %d symbols × %d passes: SER=%s BER=%s",
                len(payload), n, passes, ser, ber)
    return Transmission(
        payload=payload,
        frame=encoded,
        received=received,
        recovered=recovered,
        decided=decided,
        counts=counts,
        symbol_error_rate=ser,
        bit_error_rate=ber)

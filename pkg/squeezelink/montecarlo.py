"""
Sampling-based verification and finite-copy simulation.

Every trial draws from its own counter-based Philox stream keyed by
(master_seed, stream_id), so a trial produces the same numbers whatever the
number of trials around it, the block it lands in, or the worker running it.
"""

import asyncio
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg
import scipy.stats

from squeezelink.conf import conf
from squeezelink.gaussian import CovMat2, DomainError
from squeezelink.measurements import resolve
from squeezelink.receiver import (
    ModelLike, OperatingPoint, correlation_mean, correlation_variance,
    midpoint)

logger = logging.getLogger(__name__)

U64_MAX = 2 ** 64 - 1
INDEX_BITS = 32


class NumericError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RngSpec:
    master_seed: int
    stream_id: int = 0

    def __post_init__(self):
        for name in ('master_seed', 'stream_id'):
            value = getattr(self, name)
            if not 0 <= value <= U64_MAX:
                raise DomainError(
                    f"{name} must be an unsigned 64-bit integer, got {value}")

    def generator(self) -> np.random.Generator:
        key = np.array([self.master_seed, self.stream_id], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class TrialResult:
    c_hat: float
    decided_symbol: int
    copies_used: int

    def __post_init__(self):
        if self.copies_used < 1:
            raise DomainError(f"copies_used must be ≥ 1, got {self.copies_used}")


def substream(label: int, index: int) -> int:
    """Stream id of trial ``index`` for symbol ``label``."""
    label, index = int(label), int(index)
    if not 0 <= index < 2 ** INDEX_BITS:
        raise DomainError(f"trial index out of range: {index}")
    if not 0 <= label < 2 ** (64 - INDEX_BITS):
        raise DomainError(f"label out of range: {label}")
    return (label << INDEX_BITS) | index


def _matrix(v2: Union[CovMat2, np.ndarray]) -> np.ndarray:
    if isinstance(v2, CovMat2):
        return v2.matrix
    return np.asarray(v2, dtype=float)


def quadrature_root(m: np.ndarray, jitter: Optional[float] = None
                    ) -> np.ndarray:
    """Symmetric square root R of a covariance matrix, R·R = m."""
    if jitter is None:
        jitter = conf['montecarlo']['jitter']
    if not np.all(np.isfinite(m)):
        raise NumericError("covariance matrix has non-finite entries")
    w, q = scipy.linalg.eigh(m)
    if w.min() < jitter:
        logger.debug("regularizing covariance with %g·I (min eigenvalue %g)",
                     jitter, w.min())
        w, q = scipy.linalg.eigh(m + jitter * np.eye(len(m)))
        if w.min() <= 0:
            raise NumericError(
                f"covariance matrix is not positive definite "
                f"(min eigenvalue {w.min():g})")
    return (q * np.sqrt(w)) @ q.T


def sample_quadratures(v2: Union[CovMat2, np.ndarray], rng: RngSpec,
                       count: int) -> np.ndarray:
    """``count`` × 4 zero-mean Gaussian outcomes with covariance ``v2``."""
    if count < 1:
        raise DomainError(f"sample count must be ≥ 1, got {count}")
    root = quadrature_root(_matrix(v2))
    return rng.generator().standard_normal((count, len(root))) @ root


def estimate_correlation(v2: CovMat2, model: ModelLike, m: int,
                         rng: RngSpec) -> float:
    model = resolve(model)
    model.check_copies(m)
    samples = sample_quadratures(model.measured_covariance(v2), rng, m)
    return float(model.estimate(samples))


def _simulate_block(root, model, m, master_seed, stream_ids):
    draws = np.empty((len(stream_ids), m, len(root)))
    for i, stream_id in enumerate(stream_ids):
        draws[i] = RngSpec(master_seed, stream_id).generator(
            ).standard_normal((m, len(root)))
    return model.estimate(draws @ root)


def _blocks(count: int, m: int) -> List[Tuple[int, int]]:
    size = max(1, conf['montecarlo']['block-copies'] // m)
    return [(start, min(start + size, count))
            for start in range(0, count, size)]


async def simulate_trials_async(v2: CovMat2, model: ModelLike, m: int,
                                master_seed: int, stream_ids: Sequence[int],
                                workers: Optional[int] = None) -> np.ndarray:
    """
    One estimate per stream id, returned in stream-id order.

    Blocks of trials run on a thread pool; results are concatenated in block
    order so the output does not depend on ``workers``.
    """
    model = resolve(model)
    model.check_copies(m)
    if not len(stream_ids):
        return np.empty(0)
    if workers is None:
        workers = conf['montecarlo']['workers']
    root = quadrature_root(model.measured_covariance(v2))
    blocks = _blocks(len(stream_ids), m)
    logger.debug("%d trials × %d copies (%s) in %d blocks on %d workers",
                 len(stream_ids), m, model.name, len(blocks), workers)

    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [loop.run_in_executor(
            pool, _simulate_block, root, model, m, master_seed,
            stream_ids[start:stop]) for start, stop in blocks]
        results = await asyncio.gather(*futures)
    return np.concatenate(results)


def simulate_trials(v2: CovMat2, model: ModelLike, m: int, master_seed: int,
                    stream_ids: Sequence[int],
                    workers: Optional[int] = None) -> np.ndarray:
    return asyncio.run(simulate_trials_async(
        v2, model, m, master_seed, stream_ids, workers))


def label_streams(label: int, trials: int) -> List[int]:
    if trials < 1:
        raise DomainError(f"trial count must be ≥ 1, got {trials}")
    return [substream(label, i) for i in range(trials)]


@dataclass(frozen=True)
class DetectionResult:
    threshold: float
    p_error_given_a: float
    p_error_given_b: float
    # Q(|ΔC|/2 ÷ σ/√M) under each hypothesis
    approx_error_given_a: float
    approx_error_given_b: float
    copies: int
    trials: int


def gaussian_error(delta_c: float, sigma: float, m: int) -> float:
    return float(scipy.stats.norm.sf(abs(delta_c) / 2 / (sigma / math.sqrt(m))))


def detection_error(symbol_a: OperatingPoint, symbol_b: OperatingPoint,
                    m: int, model: ModelLike, trials: int, master_seed: int,
                    workers: Optional[int] = None) -> DetectionResult:
    """
    Two-hypothesis test with a threshold halfway between the expected
    correlations; ties go to the hypothesis with the larger expectation.
    """
    model = resolve(model)
    va, vb = symbol_a.output_state(), symbol_b.output_state()
    ca, cb = correlation_mean(va), correlation_mean(vb)
    threshold = midpoint(ca, cb)

    def error_rate(v2, c, label):
        c_hat = simulate_trials(v2, model, m, master_seed,
                                label_streams(label, trials), workers)
        if c > threshold:
            return float(np.mean(c_hat < threshold))
        return float(np.mean(c_hat >= threshold))

    delta = ca - cb
    result = DetectionResult(
        threshold=threshold,
        p_error_given_a=error_rate(va, ca, 0),
        p_error_given_b=error_rate(vb, cb, 1),
        approx_error_given_a=gaussian_error(
            delta, math.sqrt(correlation_variance(va, model)), m),
        approx_error_given_b=gaussian_error(
            delta, math.sqrt(correlation_variance(vb, model)), m),
        copies=m,
        trials=trials)
    logger.info("detection at M=%d: p(e|a)=%.4f p(e|b)=%.4f", m,
                result.p_error_given_a, result.p_error_given_b)
    return result

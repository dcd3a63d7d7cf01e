import logging
import math

import pandas as pd

from squeezelink import runconf
from squeezelink.codec import (
    Alphabet, FrameSpec, symbol_error_rate, thresholds)
from squeezelink.output import emit
from squeezelink.receiver import correlation_stats

logger = logging.getLogger(__name__)

KEYS = ('alphabet', 'squeeze-convention', 'nbar', 'eta', 'length-ratio',
        'model', 'copies', 'trials', 'seed', 'workers', 'out', 'format')
COLUMNS = ('label', 'r', 'C', 'sigma', 'snr', 'boundary_low',
           'boundary_high')


def compute(config):
    """
    Expected correlation, noise and decision interval of every level; with
    --trials, the simulated symbol error rate at --copies copies.
    """
    alphabet = Alphabet.parse(runconf.required(config, 'alphabet'),
                              runconf.required(config, 'squeeze-convention'))
    frame = FrameSpec(
        copies=runconf.positive(config, 'copies'),
        model=runconf.model_name(config),
        nbar=runconf.single(config, 'nbar'),
        channel=runconf.channel(config))
    boundaries = thresholds(alphabet, frame)
    edges = (math.inf, *boundaries, -math.inf)

    rows = []
    for label, level in enumerate(alphabet.levels):
        stats = correlation_stats(frame.point(level).output_state(),
                                  frame.model)
        rows.append((label, level.value, stats.c_mean, stats.sigma_per_copy,
                     stats.snr, edges[label + 1], edges[label]))
    table = pd.DataFrame(rows, columns=COLUMNS)

    if config.get('trials') is not None:
        report = symbol_error_rate(
            alphabet, frame, runconf.positive(config, 'trials'),
            runconf.required(config, 'seed'), config.get('workers'))
        table['ser'] = report.per_symbol
        logger.info("fig3: mean SER %.4g at M=%d", report.mean, frame.copies)
    return table


def handle(args):
    config = runconf.resolve(args, 'fig3', KEYS)
    emit('fig3', config, compute(config))
    return 0


def build(parser):
    p = parser.add_parser(
        'fig3', help="multi-level alphabet: correlations and boundaries")
    runconf.add_arguments(p, KEYS)
    return 'fig3', handle

import logging

import pandas as pd

from squeezelink import runconf
from squeezelink.channel import transmittance
from squeezelink.output import emit
from squeezelink.receiver import snr_and_copies

logger = logging.getLogger(__name__)

KEYS = ('nbar', 'squeeze', 'squeeze-convention', 'eta', 'length-ratio',
        'model', 'out', 'format')
COLUMNS = ('nbar', 'eta', 'r_convention', 'r', 's', 'C', 'sigma', 'snr')


def compute(config):
    """Single-copy SNR against preparation noise."""
    spec = runconf.squeeze_spec(config)
    channel = runconf.channel(config)
    model = runconf.model_name(config)
    rows = []
    for nbar in runconf.sweep(config, 'nbar'):
        stats = snr_and_copies(nbar, spec, channel, model)
        rows.append((nbar, transmittance(channel), spec.convention,
                     spec.value, spec.factor, stats.c_mean,
                     stats.sigma_per_copy, stats.snr))
    logger.info("fig2a: %d points, model %s", len(rows), model)
    return pd.DataFrame(rows, columns=COLUMNS)


def handle(args):
    config = runconf.resolve(args, 'fig2a', KEYS)
    emit('fig2a', config, compute(config))
    return 0


def build(parser):
    p = parser.add_parser(
        'fig2a', help="single-copy SNR against thermal preparation noise")
    runconf.add_arguments(p, KEYS)
    return 'fig2a', handle

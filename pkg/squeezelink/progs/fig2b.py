import logging

import pandas as pd

from squeezelink import runconf
from squeezelink.channel import ChannelParams, transmittance
from squeezelink.output import emit
from squeezelink.receiver import snr_and_copies

logger = logging.getLogger(__name__)

KEYS = ('length-ratio', 'nbar', 'squeeze', 'squeeze-convention', 'model',
        'out', 'format')
COLUMNS = ('L_over_L0', 'eta', 'nbar', 'snr', 'M')


def compute(config):
    """Copies needed to detect the squeezed symbol against propagation."""
    spec = runconf.squeeze_spec(config)
    model = runconf.model_name(config)
    nbars = runconf.sweep(config, 'nbar')
    rows = []
    for ratio in runconf.sweep(config, 'length-ratio'):
        channel = ChannelParams.from_ratio(ratio)
        for nbar in nbars:
            stats = snr_and_copies(nbar, spec, channel, model)
            rows.append((ratio, transmittance(channel), nbar, stats.snr,
                         stats.m_required))
    frame = pd.DataFrame(rows, columns=COLUMNS)
    logger.info("fig2b: %d points, model %s", len(frame), model)
    return frame


def handle(args):
    config = runconf.resolve(args, 'fig2b', KEYS)
    emit('fig2b', config, compute(config))
    return 0


def build(parser):
    p = parser.add_parser(
        'fig2b', help="copies needed for detection against distance")
    runconf.add_arguments(p, KEYS)
    return 'fig2b', handle

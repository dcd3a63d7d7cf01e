import pandas as pd

from squeezelink import runconf
from squeezelink.channel import residual_squeezing, transmittance
from squeezelink.output import emit

KEYS = ('nbar', 'squeeze', 'squeeze-convention', 'eta', 'length-ratio',
        'out', 'format')
COLUMNS = ('L_over_L0', 'eta', 'nbar', 'vxx', 'vpp', 'variance_ratio',
           'relative_db')


def compute(config):
    """Squeezing left in the single-mode state after propagation."""
    spec = runconf.squeeze_spec(config)
    rows = []
    for channel in runconf.channels(config):
        for nbar in runconf.sweep(config, 'nbar'):
            residual = residual_squeezing(nbar, spec, channel)
            rows.append((channel.ratio, transmittance(channel), nbar,
                         residual.state.vxx, residual.state.vpp,
                         residual.variance_ratio, residual.relative_db))
    return pd.DataFrame(rows, columns=COLUMNS)


def handle(args):
    config = runconf.resolve(args, 'decay', KEYS)
    emit('decay', config, compute(config))
    return 0


def build(parser):
    p = parser.add_parser(
        'decay', help="residual squeezing along the nanowire")
    runconf.add_arguments(p, KEYS)
    return 'decay', handle

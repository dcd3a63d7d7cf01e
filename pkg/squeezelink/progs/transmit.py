import logging

from squeezelink import runconf
from squeezelink.codec import (
    Alphabet, FrameSpec, bits_to_bytes, bytes_to_bits, thresholds, transmit)
from squeezelink.output import emit

logger = logging.getLogger(__name__)

KEYS = ('payload', 'payload-file', 'alphabet', 'squeeze-convention', 'nbar',
        'eta', 'length-ratio', 'model', 'copies', 'trials', 'seed', 'workers',
        'out', 'format')


def read_payload(config):
    if ('payload' in config) == ('payload-file' in config):
        raise runconf.UsageError("give exactly one of --payload and "
                                 "--payload-file")
    if 'payload' in config:
        return config['payload']
    with open(config['payload-file'], 'rb') as f:
        return bytes_to_bits(f.read())


def compute(config):
    """Send a payload end to end and report what came out."""
    payload = read_payload(config)
    alphabet = Alphabet.parse(runconf.required(config, 'alphabet'),
                              runconf.required(config, 'squeeze-convention'))
    frame = FrameSpec(
        copies=runconf.positive(config, 'copies'),
        model=runconf.model_name(config),
        nbar=runconf.single(config, 'nbar'),
        channel=runconf.channel(config))
    sent = transmit(payload, alphabet, frame,
                    passes=runconf.positive(config, 'trials'),
                    seed=runconf.required(config, 'seed'),
                    workers=config.get('workers'))

    results = {
        'payload': payload,
        'recovered': sent.recovered,
        'bit_length': sent.frame.bit_length,
        'dits_sent': list(sent.frame.dits),
        'dits_received': [r.decided_symbol for r in sent.received],
        'c_hat': [r.c_hat for r in sent.received],
        'boundaries': list(thresholds(alphabet, frame)),
        'confusion': sent.confusion,
        'counts': sent.counts,
        'symbol_error_rate': sent.symbol_error_rate,
        'bit_error_rate': sent.bit_error_rate,
        'passes': runconf.positive(config, 'trials'),
        'copies': frame.copies,
        'model': frame.model.name,
    }
    if 'payload-file' in config:
        results['recovered_hex'] = bits_to_bytes(sent.recovered).hex()
    return results


def handle(args):
    config = runconf.resolve(args, 'transmit', KEYS)
    emit('transmit', config, compute(config))
    return 0


def build(parser):
    p = parser.add_parser(
        'transmit', help="send a payload through the simulated link")
    runconf.add_arguments(p, KEYS)
    return 'transmit', handle

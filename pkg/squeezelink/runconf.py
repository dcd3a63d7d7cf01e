"""
Run configuration shared by the commands.

A command's configuration is the embedded ``defaults``, then the command's
own defaults from ``commands.<name>``, then a flat JSON ``--config`` file,
then the flags actually given on the command line. Keys mirror flag names.
"""

import argparse
import logging
from typing import Iterable, List

import yaml

from squeezelink.channel import ChannelParams
from squeezelink.conf import conf
from squeezelink.gaussian import SqueezeSpec, squeeze_conventions
from squeezelink.measurements import by_name, load_builtins
from squeezelink.schema import validate_run_config
from squeezelink.utils import parse_sweep

logger = logging.getLogger(__name__)

CHANNEL_KEYS = ('eta', 'length-ratio')

FLAGS = {
    'nbar': dict(metavar='N', help="thermal occupation (sweeps: a,b,c or "
                                   "lo:hi:n)"),
    'squeeze': dict(type=float, help="squeezing magnitude"),
    'squeeze-convention': dict(choices=squeeze_conventions(),
                               help="how --squeeze maps to a variance "
                                    "factor"),
    'eta': dict(type=float, help="intensity transmittance"),
    'length-ratio': dict(metavar='L/L0', help="propagation length over the "
                                              "characteristic length"),
    'model': dict(help="measurement model (see `squeezelink models`)"),
    'alphabet': dict(metavar='R0,R1,...', help="squeezing levels"),
    'copies': dict(type=int, help="state copies per symbol"),
    'trials': dict(type=int, help="Monte Carlo trials"),
    'seed': dict(type=int, help="master seed"),
    'workers': dict(type=int, help="Monte Carlo worker threads"),
    'out': dict(help="output file (default: stdout, no manifest)"),
    'format': dict(choices=('csv', 'json'), help="output format"),
    'payload': dict(help="bit string to send"),
    'payload-file': dict(help="file whose bytes are sent"),
}


class UsageError(Exception):
    pass


def add_arguments(parser: argparse.ArgumentParser, keys: Iterable[str]):
    parser.add_argument(
        '--config',
        help="flat JSON file of run settings (flags win)")
    keys = list(keys)
    exclusive = parser.add_mutually_exclusive_group()
    for key in keys:
        target = exclusive if key in CHANNEL_KEYS else parser
        target.add_argument(f'--{key}', dest=key.replace('-', '_'),
                            default=None, **FLAGS[key])


def load_config_file(path) -> dict:
    with open(path) as f:
        data = yaml.safe_load(f)
    if data is None:
        data = {}
    validate_run_config(data)
    return data


def resolve(args: argparse.Namespace, command: str,
            keys: Iterable[str]) -> dict:
    keys = set(keys)
    layers = [conf['defaults'], conf['commands'].get(command) or {}]
    if getattr(args, 'config', None):
        layers.append(load_config_file(args.config))
    layers.append({key: getattr(args, key.replace('-', '_'), None)
                   for key in keys})

    config = {}
    for layer in layers:
        layer = {k: v for k, v in layer.items() if k in keys and v is not None}
        if all(k in layer for k in CHANNEL_KEYS):
            raise UsageError("give either eta or length-ratio, not both")
        for key in CHANNEL_KEYS:
            if key in layer:
                for other in CHANNEL_KEYS:
                    config.pop(other, None)
        config.update(layer)
    validate_run_config(config)
    logger.debug("%s configuration: %s", command, config)
    return config


def required(config: dict, key: str):
    try:
        return config[key]
    except KeyError:
        raise UsageError(f"missing --{key}") from None


def sweep(config: dict, key: str) -> List[float]:
    value = required(config, key)
    try:
        return parse_sweep(value)
    except ValueError as e:
        raise UsageError(f"--{key}: {e}") from None


def single(config: dict, key: str) -> float:
    values = sweep(config, key)
    if len(values) != 1:
        raise UsageError(f"--{key} takes a single value here")
    return values[0]


def squeeze_spec(config: dict) -> SqueezeSpec:
    return SqueezeSpec(required(config, 'squeeze'),
                       required(config, 'squeeze-convention'))


def channels(config: dict) -> List[ChannelParams]:
    if 'eta' in config:
        return [ChannelParams(eta=config['eta'])]
    return [ChannelParams.from_ratio(r) for r in sweep(config, 'length-ratio')]


def channel(config: dict) -> ChannelParams:
    if 'eta' in config:
        return ChannelParams(eta=config['eta'])
    return ChannelParams.from_ratio(single(config, 'length-ratio'))


def model_name(config: dict) -> str:
    load_builtins()
    name = required(config, 'model')
    try:
        return by_name(name).name
    except KeyError:
        raise UsageError(f"unknown measurement model {name!r}") from None


def positive(config: dict, key: str) -> int:
    value = config.get(key)
    if value is None or value < 1:
        raise UsageError(f"--{key} must be a positive integer")
    return value

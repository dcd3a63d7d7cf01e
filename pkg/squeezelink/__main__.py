#!/usr/bin/python3

import argparse
import logging
import logging.config
import sys
import yaml

from squeezelink.conf import conf
from squeezelink.gaussian import DomainError
from squeezelink.measurements import load_builtins, load_from_environ
from squeezelink.montecarlo import NumericError
from squeezelink.progs import decay, fig2a, fig2b, fig3, models, replay, transmit
from squeezelink.runconf import UsageError
from squeezelink.schema import ValidationError

logger = logging.getLogger('squeezelink')

EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def run(func, args):
    try:
        return func(args)
    except (UsageError, ValidationError, DomainError, yaml.YAMLError) as e:
        logger.error("%s: %s", args.command, e)
        return EXIT_USAGE
    except NumericError as e:
        logger.error("%s: numeric failure: %s", args.command, e)
        return EXIT_NUMERIC
    except OSError as e:
        logger.error("%s: %s: %s", args.command, e.filename, e.strerror)
        return EXIT_IO


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="squeezing-encoded nanowire link simulator")
    parser.add_argument(
        '-c',
        '--conf',
        type=argparse.FileType('r'),
        help="custom yaml configuration file to use")
    parser.add_argument(
        '-l',
        '--logging',
        choices=[l.lower() for l in logging._nameToLevel],
        help="logging level (overrides root logger level from file conf)")

    cmd = parser.add_subparsers(dest='command')
    commands = dict(getattr(module, 'build')(cmd)
                    for module in (models, fig2a, fig2b, fig3, decay,
                                   transmit, replay))
    args = parser.parse_args(argv)

    if args.conf:
        # merge user defined conf
        conf.merge(yaml.safe_load(args.conf))

    # default logging config from conf
    logging.config.dictConfig(conf['logging'])

    if args.logging:
        # override root logger level
        logging.root.setLevel(args.logging.upper())

    # import built-in measurement models
    load_builtins()
    # import user models from environ
    load_from_environ()

    try:
        func = commands[args.command]
    except KeyError:
        parser.error("missing command")
    else:
        sys.exit(run(func, args))


if __name__ == '__main__':
    main()

import logging

from squeezelink.output import RunManifest, emit, render_results
from squeezelink.progs import compute_for
from squeezelink.runconf import UsageError
from squeezelink.utils import digest

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 3


def handle(args):
    manifest = RunManifest.load(args.manifest)
    try:
        compute = compute_for(manifest.command)
    except KeyError:
        raise UsageError(f"{args.manifest}: cannot replay command "
                         f"{manifest.command!r}") from None
    config = dict(manifest.config)
    results = compute(config)
    content = render_results(results, config.get('format', 'csv'))

    mismatched = [path for path, expected in manifest.outputs.items()
                  if digest(content) != expected]
    if args.out:
        emit(manifest.command, {**config, 'out': args.out}, results)
    if mismatched:
        logger.error("replay of %s differs from %s", manifest.command,
                     ', '.join(mismatched))
        return EXIT_MISMATCH
    logger.info("replay of %s matches %d output(s)", manifest.command,
                len(manifest.outputs))
    return 0


def build(parser):
    p = parser.add_parser(
        'replay', help="re-run a command from its manifest and compare")
    p.add_argument('manifest', help="path to a .manifest.json file")
    p.add_argument('--out', help="also write the replayed output here")
    return 'replay', handle

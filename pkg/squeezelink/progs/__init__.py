import importlib

# commands whose results can be replayed from a run manifest
REPLAYABLE = ('decay', 'fig2a', 'fig2b', 'fig3', 'transmit')


def compute_for(command):
    if command not in REPLAYABLE:
        raise KeyError(command)
    return importlib.import_module(f'squeezelink.progs.{command}').compute

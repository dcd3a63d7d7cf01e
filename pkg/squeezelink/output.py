"""
Rendering of command results and their run manifests.

Tables go out as CSV (header row, 9 significant digits) or as a JSON
document {config, manifest, results}. Whenever results are written to a
file, ``<file>.manifest.json`` records what produced them.
"""

import json
import logging
import math
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from importlib import metadata
from pathlib import Path
from typing import Dict, Optional, Union

import numpy as np
import pandas as pd

from squeezelink.conf import conf
from squeezelink.runconf import UsageError
from squeezelink.schema import ValidationError, validate_manifest
from squeezelink.utils import digest

logger = logging.getLogger(__name__)

Results = Union[pd.DataFrame, dict]


class ReportJsonEncoder(json.JSONEncoder):
    """:class:`JSONEncoder` that understands numpy scalars and arrays."""

    def default(self, o):
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        return super().default(o)


def jsonable(obj):
    """Replace infinities by "inf"/"-inf" and NaN by None, recursively."""
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (float, np.floating)):
        if math.isnan(obj):
            return None
        if math.isinf(obj):
            return 'inf' if obj > 0 else '-inf'
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), cls=ReportJsonEncoder, sort_keys=True,
                      indent=2, allow_nan=False) + '\n'


def tool_version() -> str:
    try:
        return metadata.version('squeezelink')
    except metadata.PackageNotFoundError:
        return '0+unknown'


@dataclass
class RunManifest:
    version: str
    command: str
    config: dict
    seed: Optional[int]
    timestamp: str
    # output path -> sha256 of its numeric content
    outputs: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def new(cls, command: str, config: dict) -> 'RunManifest':
        return cls(
            version=tool_version(),
            command=command,
            config={k: config[k] for k in sorted(config)},
            seed=config.get('seed'),
            timestamp=datetime.now(timezone.utc).isoformat(
                timespec='seconds'))

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def load(cls, path) -> 'RunManifest':
        with open(path) as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise UsageError(f"{path}: not a manifest: {e}") from None
        try:
            validate_manifest(data)
        except ValidationError as e:
            raise UsageError(f"{path}: {e}") from None
        return cls(**{k: data[k] for k in (
            'version', 'command', 'config', 'seed', 'timestamp', 'outputs')})


def manifest_path(out) -> Path:
    out = Path(out)
    return out.with_name(out.name + '.manifest.json')


def render_csv(frame: pd.DataFrame) -> str:
    digits = conf['csv']['significant-digits']
    return frame.to_csv(index=False, float_format=f'%.{digits}g',
                        lineterminator='\n')


def render_results(results: Results, fmt: str) -> str:
    """
    The numeric content of a run: CSV text, or canonical JSON of the
    results section.
    """
    if fmt == 'csv':
        if not isinstance(results, pd.DataFrame):
            raise UsageError("this command only writes JSON reports")
        return render_csv(results)
    if fmt != 'json':
        raise UsageError(f"unknown output format {fmt!r}")
    if isinstance(results, pd.DataFrame):
        results = results.to_dict(orient='records')
    return dumps(results)


def emit(command: str, config: dict, results: Results,
         stream=None) -> Optional[RunManifest]:
    """Write results to ``config['out']`` (with a manifest) or stdout."""
    fmt = config.get('format', 'csv')
    content = render_results(results, fmt)
    out = config.get('out')
    if not out:
        (stream or sys.stdout).write(
            content if fmt == 'csv' else _document(config, None, content))
        return None

    manifest = RunManifest.new(command, config)
    manifest.outputs[str(out)] = digest(content)
    with open(out, 'w', newline='') as f:
        f.write(content if fmt == 'csv'
                else _document(config, manifest, content))
    with open(manifest_path(out), 'w') as f:
        f.write(dumps(manifest.to_dict()))
    logger.info("wrote %s and %s", out, manifest_path(out))
    return manifest


def _document(config, manifest, content) -> str:
    return dumps({
        'config': {k: config[k] for k in sorted(config)},
        'manifest': manifest.to_dict() if manifest else None,
        'results': json.loads(content),
    })

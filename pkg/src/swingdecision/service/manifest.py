"""Run manifests: enough provenance to reproduce any artifact."""

import json
import time
from pathlib import Path

from .. import __version__
from ..util import sha256_bytes


def file_fingerprint(path) -> str:
    return sha256_bytes(Path(path).read_bytes())


class ManifestTimer:
    def __init__(self):
        self.start = time.monotonic()

    def seconds(self) -> float:
        return time.monotonic() - self.start


def _jsonable(args: dict) -> dict:
    out = {}
    for key, value in args.items():
        try:
            json.dumps(value)
        except TypeError:
            continue
        out[key] = value
    return out


def write_manifest(out_path, command: str, args: dict, seeds: dict,
                   inputs: dict, outputs: dict, timer: ManifestTimer | None = None,
                   extra: dict | None = None) -> None:
    manifest = {
        "tool": "swingdecision",
        "version": __version__,
        "command": command,
        "args": _jsonable(args),
        "seeds": seeds,
        "inputs": inputs,
        "outputs": outputs,
        "elapsed_seconds": None if timer is None else round(timer.seconds(), 3),
    }
    if extra:
        manifest.update(extra)
    path = Path(str(out_path) + ".manifest.json")
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")

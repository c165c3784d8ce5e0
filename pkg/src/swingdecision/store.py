"""Directory-backed model store keyed by (kind, dataset fingerprint, config).

Keys are content-checked: re-putting the same key with different bytes is an
error (fingerprint collision or nondeterministic fit), re-putting identical
bytes is a no-op.
"""

import json
from pathlib import Path

from .serialize import config_payload_of, load_model, model_kind, model_to_bytes, model_to_payload
from .util import config_hash, sha256_bytes

INDEX_NAME = "index.json"


class StoreCollisionError(RuntimeError):
    pass


class ModelStore:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._index_path = self.root / INDEX_NAME

    def _read_index(self) -> dict:
        if not self._index_path.exists():
            return {"entries": {}}
        return json.loads(self._index_path.read_text(encoding="utf-8"))

    def _write_index(self, index: dict) -> None:
        self._index_path.write_text(
            json.dumps(index, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )

    def put(self, model, dataset_fingerprint: str, role: str | None = None) -> str:
        """Store a model; returns its key.

        ``role`` distinguishes models of the same kind (e.g. the strike and
        contact probability models are both tree ensembles).
        """
        kind = model_kind(model)
        payload = model_to_payload(model)
        cfg_hash = config_hash(config_payload_of(payload, kind))
        name = role or kind
        key = f"{name}-{dataset_fingerprint[:12]}-{cfg_hash[:12]}"
        data = model_to_bytes(model)
        digest = sha256_bytes(data)

        index = self._read_index()
        existing = index["entries"].get(key)
        if existing is not None:
            if existing["sha256"] != digest:
                raise StoreCollisionError(
                    f"key {key} already maps to different content; refusing to overwrite"
                )
            return key
        filename = f"{key}.json"
        (self.root / filename).write_bytes(data)
        index["entries"][key] = {
            "kind": kind,
            "role": name,
            "fingerprint": dataset_fingerprint,
            "config_hash": cfg_hash,
            "file": filename,
            "sha256": digest,
        }
        self._write_index(index)
        return key

    def get(self, key: str):
        index = self._read_index()
        entry = index["entries"].get(key)
        if entry is None:
            raise KeyError(f"no model under key {key}")
        path = self.root / entry["file"]
        data = path.read_bytes()
        if sha256_bytes(data) != entry["sha256"]:
            raise StoreCollisionError(f"stored bytes for {key} fail their checksum")
        return load_model(path)

    def find(self, role: str | None = None, kind: str | None = None) -> list:
        index = self._read_index()
        out = []
        for key, entry in sorted(index["entries"].items()):
            if role is not None and entry["role"] != role:
                continue
            if kind is not None and entry["kind"] != kind:
                continue
            out.append(key)
        return out

    def get_role(self, role: str):
        """The unique model stored under a role; error if absent/ambiguous."""
        keys = self.find(role=role)
        if not keys:
            raise KeyError(f"no model stored for role {role!r}")
        if len(keys) > 1:
            raise KeyError(f"multiple models for role {role!r}: {keys}")
        return self.get(keys[0])

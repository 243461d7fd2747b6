"""Atomic file emission and the run manifest."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from pathlib import Path

MANIFEST_NAME = "manifest.json"


def atomic_write_bytes(path, data: bytes):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_bytes(rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


class OutputWriter:
    """Writes run outputs atomically and remembers their hashes."""

    def __init__(self, out_dir):
        self.out_dir = Path(out_dir)
        self.files: dict[str, str] = {}
        self.sizes: dict[str, int] = {}

    def write_bytes(self, relpath: str, data: bytes):
        atomic_write_bytes(self.out_dir / relpath, data)
        self.files[relpath] = hashlib.sha256(data).hexdigest()
        self.sizes[relpath] = len(data)
        return self.out_dir / relpath

    def write_csv(self, relpath: str, rows):
        return self.write_bytes(relpath, csv_bytes(rows))

    def write_text(self, relpath: str, text: str):
        return self.write_bytes(relpath, text.encode("utf-8"))

    def manifest(self, extra=None) -> bytes:
        doc = {
            "files": [{"path": p, "sha256": self.files[p], "bytes": self.sizes[p]} for p in sorted(self.files)],
        }
        if extra:
            doc.update(extra)
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")

    def write_manifest(self, extra=None):
        path = self.out_dir / MANIFEST_NAME
        atomic_write_bytes(path, self.manifest(extra))
        return path

"""Content fingerprints tying plans to the exact input file."""

from __future__ import annotations

import hashlib


def fingerprint_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def fingerprint_file(path) -> str:
    with open(path, "rb") as fh:
        return fingerprint_bytes(fh.read())

"""Deterministic randomness: one master seed fans out to named substreams.

Every random draw in the package flows from a 64-bit master seed through
``substream(seed, *labels)``.  Labels are hashed (SHA-256) into a Philox
key, so any pipeline stage can be rerun in isolation and reproduce its
exact stream, independent of what other stages consumed.  Philox is a
counter-based generator with a platform-independent bit stream.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _digest(master_seed: int, labels: tuple) -> bytes:
    h = hashlib.sha256()
    h.update(str(int(master_seed)).encode("utf-8"))
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode("utf-8"))
    return h.digest()


def substream(master_seed: int, *labels) -> np.random.Generator:
    """Philox generator for the substream named by ``labels``."""
    key = np.frombuffer(_digest(master_seed, labels)[:16], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def subseed(master_seed: int, *labels) -> int:
    """64-bit integer seed derived from the named substream.

    Used where a plain integer is needed (e.g. the forest's in-kernel
    counter-based generator).
    """
    return int.from_bytes(_digest(master_seed, labels)[:8], "little")

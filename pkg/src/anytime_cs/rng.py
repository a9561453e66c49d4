"""Deterministic random substreams.

All randomness flows from numpy ``Generator`` objects on PCG64, seeded by a
``SeedSequence`` whose spawn key names the consumer, e.g.
``substream(seed, STREAM_DATA, replication, player)`` or
``substream(seed, STREAM_BOOTSTRAP, stream_id, t)``. Two calls with the same
key always yield the same draws, independent of call order or process.
"""

import numpy as np

STREAM_DATA = 0
STREAM_BOOTSTRAP = 1


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for (seed, *key)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))

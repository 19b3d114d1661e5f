"""Deterministic derivation of per-task random generators from one run seed.

Every stochastic routine takes an explicit seed or Generator; nothing in the
package touches numpy's global RNG state. Child seeds are derived from the
master seed plus a tuple of string/int tags, so results do not depend on the
order in which stages run or on worker scheduling.
"""

import hashlib

import numpy as np


def child_seed(seed: int, *tags) -> int:
    """Derive a stable 63-bit child seed from ``seed`` and a tag path."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for tag in tags:
        h.update(b"\x00")
        h.update(str(tag).encode())
    return int.from_bytes(h.digest()[:8], "big") >> 1


def rng_for(seed: int, *tags) -> np.random.Generator:
    """Seeded Generator for the task identified by ``tags``."""
    return np.random.default_rng(child_seed(seed, *tags))

"""Deterministic per-input exemplar draws."""

import hashlib

import numpy as np


def _hash_to_u64(text: str) -> int:
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big", signed=False)


class ExemplarSampler:
    """
    Uniform exemplar draws keyed by (base seed, input index).

    Each input gets its own child generator, so the draw for input i
    does not depend on how many inputs came before it or on which
    worker handles it.
    """

    def __init__(self, base_seed: int):
        self.base_seed = int(base_seed)

    def child_seed(self, index: int) -> int:
        """Stable 64-bit seed for one input index."""
        if index < 0:
            raise ValueError("input index must be non-negative")
        return _hash_to_u64(f"{self.base_seed}:exemplar:{index}")

    def draw(self, index: int, pool_size: int) -> int:
        """Exemplar index in [0, pool_size) for input ``index``."""
        if pool_size < 1:
            raise ValueError("pool_size must be >= 1")
        rng = np.random.default_rng(self.child_seed(index))
        return int(rng.integers(pool_size))

    __call__ = draw

"""Stable derivation of per-component RNG seeds from one global seed.

Component labels are hashed into the seed material, so adding a new
component later never perturbs the streams of existing ones.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _label_words(label: str) -> tuple[int, ...]:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return tuple(int.from_bytes(digest[i : i + 4], "big") for i in range(0, 16, 4))


def _check_seed(seed) -> None:
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed!r}")


def derive_seed(seed: int, label: str) -> int:
    """A derived integer seed unique to (seed, label)."""
    _check_seed(seed)
    ss = np.random.SeedSequence([seed, *_label_words(label)])
    return int(ss.generate_state(1, np.uint64)[0])


def substream(seed: int, label: str) -> np.random.Generator:
    """An independent generator for one component under the global seed."""
    _check_seed(seed)
    return np.random.default_rng(np.random.SeedSequence([seed, *_label_words(label)]))

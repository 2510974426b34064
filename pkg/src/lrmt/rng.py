"""Seedable, portable randomness helpers.

Every random decision in this package flows through a Mersenne Twister
(`random.Random`) consuming only `random()` calls, whose output sequence is
stable across platforms and Python versions. Derived streams are seeded via
SHA-256 over the parent seed plus stream labels, so per-sentence and
per-stage streams are independent and reproducible from a single root seed.
"""

from __future__ import annotations

import hashlib
import random

MASK64 = (1 << 64) - 1


def derive_seed(root: int, *parts: int | str) -> int:
    """Derive a 64-bit child seed from a root seed and stream labels."""
    h = hashlib.sha256()
    h.update(str(int(root) & MASK64).encode("ascii"))
    for part in parts:
        h.update(b"\x1f")
        h.update(str(part).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def make_rng(root: int, *parts: int | str) -> random.Random:
    """Seeded generator for the stream named by `parts` under `root`."""
    return random.Random(derive_seed(root, *parts) if parts else int(root) & MASK64)


def rand_below(rng: random.Random, n: int) -> int:
    """Uniform integer in [0, n), built on `random()` only."""
    if n <= 0:
        raise ValueError("rand_below needs n >= 1")
    return int(rng.random() * n)


def permutation(rng: random.Random, n: int) -> list[int]:
    """Fisher-Yates permutation of range(n), built on `random()` only."""
    idx = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rand_below(rng, i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx

"""Deterministic random generators for test corpora.

The cotree sampler draws a recursive composition of the leaf count with
alternating labels. It covers every canonical cotree shape but is not a
uniform distribution over cographs; it exists to feed test corpora, not to
do statistics.
"""

from __future__ import annotations

import random

from .cotree import CoTree, Nested, _normalize
from .parsing import ThresholdSequence


def random_cotree(n: int, rng: random.Random, root_label: int = 1) -> CoTree:
    """Random canonical cotree on n leaves. ``root_label`` 1 yields a
    connected cograph, 0 a disconnected one (needs n >= 2)."""
    if n < 1:
        raise ValueError("need at least one leaf")
    if root_label not in (0, 1):
        raise ValueError("root label must be 0 or 1")
    if n == 1 and root_label == 0:
        raise ValueError("a single vertex is connected; root label 0 needs n >= 2")
    counter = iter(range(1, n + 1))

    def build(size: int, label: int) -> Nested:
        if size == 1:
            return next(counter)
        k = rng.randint(2, size)
        cuts = sorted(rng.sample(range(1, size), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        return (label, [build(s, 1 - label) for s in sizes])

    return CoTree.from_nested(_normalize(build(n, root_label)))


def random_threshold_sequence(n: int, rng: random.Random) -> ThresholdSequence:
    """Random construction sequence: first bit 0, the rest uniform."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return ThresholdSequence((0,) + tuple(rng.randint(0, 1) for _ in range(n - 1)))

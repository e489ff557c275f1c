"""Shared corpus builders for the test suite."""

from __future__ import annotations

import random

from cographctl import CoTree, Graph, parse_cotree, random_cotree

# An 8-vertex cograph whose sibling cells are {1,2},{3},{4},{5},{6,7,8},
# with 6,7,8 mutually non-adjacent; any cotree with those cells reproduces
# the golden minimum control sets exactly.
EIGHT_NODE_TEXT = "1(0(1(0(1(1,2),5),4),6,7,8),3)"

THRESHOLD_EXAMPLE = "0101001"


def eight_node_tree() -> CoTree:
    return parse_cotree(EIGHT_NODE_TEXT)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def cotree_corpus(
    count: int, max_n: int, seed: int, mixed_roots: bool = False
) -> list[CoTree]:
    """Deterministic corpus of random canonical cotrees with 2 <= n <= max_n."""
    rng = random.Random(seed)
    trees = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        label = rng.randint(0, 1) if mixed_roots else 1
        trees.append(random_cotree(n, rng, root_label=label))
    return trees

"""Cotrees: construction, canonical form, recognition, and conversion.

A cotree is a rooted tree whose leaves are the graph's vertices (ids 1..n)
and whose internal nodes carry a label: 0 means its children are composed by
disjoint union, 1 means they are composed by join. Two vertices are adjacent
exactly when their lowest common ancestor is labeled 1.

The canonical form merges nested nodes of equal label and splices out unary
nodes, so labels alternate along every leaf-to-root path and every internal
node has at least two children. With children ordered by their smallest
descendant leaf, the canonical form is unique per graph, which makes tree
equality, serialization, and the modal-matrix column order deterministic.

Nested form: throughout this module a plain ``int`` is a leaf (its vertex id)
and a pair ``(label, [children...])`` is an internal node. ``CoTree`` freezes
a nested tree into an indexed arena so parent/ancestor queries are O(depth).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .graphs import Graph, _bits, join_of, permuted, union_of

Nested = Union[int, tuple[int, list]]


@dataclass(frozen=True)
class P4Witness:
    """Four vertex ids (1-based, in path order) inducing a 3-edge path."""

    vertices: tuple[int, int, int, int]


@dataclass(frozen=True)
class _Node:
    parent: int | None
    children: tuple[int, ...]
    label: int | None  # 0/1 for internal nodes, None for leaves
    vertex: int | None  # 1-based vertex id for leaves, None for internal


class CoTree:
    """Immutable rooted tree over an arena of nodes; node ids index the arena
    in preorder, so the root is node 0 and children have larger ids."""

    def __init__(self, nodes: tuple[_Node, ...]):
        self._nodes = nodes
        leaves: dict[int, frozenset[int]] = {}
        leaf_node: dict[int, int] = {}
        for i in range(len(nodes) - 1, -1, -1):
            node = nodes[i]
            if node.vertex is not None:
                leaves[i] = frozenset((node.vertex,))
                leaf_node[node.vertex] = i
            else:
                leaves[i] = frozenset().union(*(leaves[c] for c in node.children))
        self._leaves_below = leaves
        self._leaf_node = leaf_node

    @classmethod
    def from_nested(cls, nested: Nested) -> "CoTree":
        nodes: list[_Node | None] = []

        def build(node: Nested, parent: int | None) -> int:
            idx = len(nodes)
            nodes.append(None)
            if isinstance(node, int):
                nodes[idx] = _Node(parent, (), None, node)
            else:
                label, children = node
                if label not in (0, 1):
                    raise ValueError(f"internal label must be 0 or 1, got {label!r}")
                if not children:
                    raise ValueError("internal node with no children")
                ids = tuple(build(c, idx) for c in children)
                nodes[idx] = _Node(parent, ids, label, None)
            return idx

        build(nested, None)
        tree = cls(tuple(nodes))  # type: ignore[arg-type]
        ids = sorted(tree._leaf_node)
        if ids != list(range(1, len(ids) + 1)) or len(tree._leaf_node) != sum(
            1 for nd in tree._nodes if nd.vertex is not None
        ):
            raise ValueError("leaf ids must be distinct and cover 1..n")
        return tree

    def to_nested(self) -> Nested:
        def walk(i: int) -> Nested:
            node = self._nodes[i]
            if node.vertex is not None:
                return node.vertex
            return (node.label, [walk(c) for c in node.children])

        return walk(self.root)

    # -- structural queries -------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    @property
    def n(self) -> int:
        return len(self._leaf_node)

    def node_count(self) -> int:
        return len(self._nodes)

    def is_leaf(self, i: int) -> bool:
        return self._nodes[i].vertex is not None

    def label(self, i: int) -> int:
        lab = self._nodes[i].label
        if lab is None:
            raise ValueError(f"node {i} is a leaf")
        return lab

    def leaf_vertex(self, i: int) -> int:
        v = self._nodes[i].vertex
        if v is None:
            raise ValueError(f"node {i} is internal")
        return v

    def leaf_id(self, vertex: int) -> int:
        """Node id of the leaf carrying the given vertex id."""
        return self._leaf_node[vertex]

    def parent(self, i: int) -> int | None:
        return self._nodes[i].parent

    def children(self, i: int) -> tuple[int, ...]:
        return self._nodes[i].children

    def leaves_below(self, i: int) -> frozenset[int]:
        """Vertex ids of all leaves descending from node i (i included if leaf)."""
        return self._leaves_below[i]

    def leaf_count(self, i: int) -> int:
        return len(self._leaves_below[i])

    def path_to_root(self, i: int) -> list[int]:
        path = [i]
        while (up := self._nodes[path[-1]].parent) is not None:
            path.append(up)
        return path

    def lca(self, u: int, v: int) -> int:
        """Lowest common ancestor of the leaves carrying vertex ids u and v."""
        above = set(self.path_to_root(self.leaf_id(u)))
        node = self.leaf_id(v)
        while node not in above:
            node = self._nodes[node].parent  # type: ignore[assignment]
        return node

    def internal_ids(self) -> tuple[int, ...]:
        """Internal node ids in preorder; the package-wide canonical order."""
        return tuple(i for i, nd in enumerate(self._nodes) if nd.vertex is None)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoTree) and self._nodes == other._nodes

    def __hash__(self) -> int:
        return hash(self._nodes)

    def __repr__(self) -> str:
        return f"CoTree(n={self.n}, nodes={len(self._nodes)})"


def _min_leaf(node: Nested) -> int:
    if isinstance(node, int):
        return node
    return min(_min_leaf(c) for c in node[1])


def _normalize(node: Nested) -> Nested:
    if isinstance(node, int):
        return node
    label, children = node
    merged: list[Nested] = []
    for child in (_normalize(c) for c in children):
        if not isinstance(child, int) and child[0] == label:
            merged.extend(child[1])
        else:
            merged.append(child)
    if len(merged) == 1:
        return merged[0]
    merged.sort(key=_min_leaf)
    return (label, merged)


def canonicalize(t: CoTree) -> CoTree:
    """Equivalent canonical cotree: same graph, alternating labels, no unary
    nodes, children sorted by smallest leaf. Idempotent."""
    return CoTree.from_nested(_normalize(t.to_nested()))


def is_canonical(t: CoTree) -> bool:
    for i in t.internal_ids():
        kids = t.children(i)
        if len(kids) < 2:
            return False
        if any(not t.is_leaf(c) and t.label(c) == t.label(i) for c in kids):
            return False
        mins = [min(t.leaves_below(c)) for c in kids]
        if mins != sorted(mins):
            return False
    return True


def cotree_to_graph(t: CoTree) -> Graph:
    """Rebuild the represented graph bottom-up, one union/join per internal
    node, then relabel so matrix row i corresponds to vertex id i+1."""

    def walk(i: int) -> tuple[Graph, list[int]]:
        if t.is_leaf(i):
            return Graph.single(), [t.leaf_vertex(i)]
        parts: list[Graph] = []
        order: list[int] = []
        for c in t.children(i):
            g, ids = walk(c)
            parts.append(g)
            order.extend(ids)
        combined = (join_of if t.label(i) == 1 else union_of)(parts)
        return combined, order

    g, order = walk(t.root)
    return permuted(g, [v - 1 for v in order])


def _components(rows: Sequence[int], mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grown = 0
            for i in _bits(frontier):
                grown |= rows[i] & mask
            frontier = grown & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _p4_in_subgraph(g: Graph, mask: int) -> P4Witness:
    # Runs only at the level where both the component and co-component splits
    # failed, so a search over this subgraph's 4-subsets must succeed.
    verts = list(_bits(mask))
    for quad in combinations(verts, 4):
        adj = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
        if len(adj) != 3:
            continue
        deg = {v: 0 for v in quad}
        for a, b in adj:
            deg[a] += 1
            deg[b] += 1
        if sorted(deg.values()) != [1, 1, 2, 2]:
            continue
        start = min(v for v in quad if deg[v] == 1)
        order = [start]
        while len(order) < 4:
            order.append(next(v for v in quad
                              if v not in order and g.has_edge(order[-1], v)))
        return P4Witness(tuple(v + 1 for v in order))
    raise AssertionError("undecomposable subgraph without an induced P4")


def recognize(g: Graph) -> CoTree | P4Witness:
    """Decompose a graph into its canonical cotree, or produce an induced-P4
    witness if it is not a cograph.

    Single vertices are leaves; a disconnected (sub)graph splits into a
    0-labeled node over its components; a connected one with disconnected
    complement splits into a 1-labeled node over the complement's components.
    A graph stuck in both directions contains an induced P4. Disconnected
    inputs are accepted (the root comes out labeled 0); the controllability
    operations reject them downstream.
    """
    full = (1 << g.n) - 1
    co_rows = [full & ~row & ~(1 << i) for i, row in enumerate(g.rows)]

    def decompose(mask: int) -> Nested | P4Witness:
        if mask & (mask - 1) == 0:
            return mask.bit_length()  # single vertex: leaf id = index + 1
        comps = _components(g.rows, mask)
        if len(comps) > 1:
            label = 0
        else:
            comps = _components(co_rows, mask)
            if len(comps) == 1:
                return _p4_in_subgraph(g, mask)
            label = 1
        children = []
        for sub in comps:
            child = decompose(sub)
            if isinstance(child, P4Witness):
                return child
            children.append(child)
        return (label, children)

    nested = decompose(full)
    if isinstance(nested, P4Witness):
        return nested
    return CoTree.from_nested(_normalize(nested))

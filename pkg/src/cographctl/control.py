"""Leader selection and controllability checks for cograph consensus networks.

Vertices whose leaves share a cotree parent are interchangeable siblings: they
see the rest of the graph identically, so leaving two of them unactuated
leaves a symmetry no input can break. Grouping leaves by parent yields the
sibling partition; with p cells on n vertices the minimum number of control
nodes is n - p, achieved exactly by taking all but one vertex from every cell.

Two independent checks guard each other here: ``is_controllable`` runs the
O(n) cell test, while ``pbh_check`` stacks the eigenvector blocks per distinct
eigenvalue and verifies full column rank of the controlled rows over exact
rationals. They must agree on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Mapping

from .cotree import CoTree
from .errors import NotConnectedError
from .spectral import EigenBlock, eigen_blocks


@dataclass(frozen=True)
class SiblingPartition:
    """Disjoint cells of mutually sibling vertices covering 1..n, ordered by
    smallest member; singleton cells hold vertices with no sibling."""

    cells: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)


@dataclass(frozen=True)
class ControlSet:
    """Ordered distinct vertex ids; the input matrix takes the matching
    columns of the identity."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("control vertices must be distinct")
        if any(v < 1 for v in self.vertices):
            raise ValueError("control vertices are 1-based ids")

    def __len__(self) -> int:
        return len(self.vertices)


def _as_vertices(control: ControlSet | Iterable[int]) -> tuple[int, ...]:
    if isinstance(control, ControlSet):
        return control.vertices
    return ControlSet(tuple(control)).vertices


def _require_controllable_setting(t: CoTree, op: str) -> None:
    if t.n == 1:
        raise ValueError(f"{op} requires more than one vertex")
    if t.label(t.root) != 1:
        raise NotConnectedError(f"{op} requires a connected graph (root label 1)")


def sibling_partition(t: CoTree) -> SiblingPartition:
    """Group leaves by their cotree parent; requires a canonical cotree."""
    if t.n == 1:
        return SiblingPartition(((1,),))
    cells = []
    for v in t.internal_ids():
        members = sorted(
            t.leaf_vertex(c) for c in t.children(v) if t.is_leaf(c)
        )
        if members:
            cells.append(tuple(members))
    cells.sort(key=lambda cell: cell[0])
    return SiblingPartition(tuple(cells))


def min_control_size(t: CoTree) -> int:
    """Minimum number of control nodes rendering the network controllable:
    n minus the number of sibling cells."""
    _require_controllable_setting(t, "min_control_size")
    return t.n - sibling_partition(t).p


def select_min_control_set(t: CoTree, tie_rule: str = "lowest-ids") -> ControlSet:
    """One minimum control set: all but one vertex from every sibling cell.
    ``tie_rule`` picks which vertices stay (lowest-ids keeps the smallest)."""
    _require_controllable_setting(t, "select_min_control_set")
    if tie_rule not in ("lowest-ids", "highest-ids"):
        raise ValueError(f"tie_rule must be 'lowest-ids' or 'highest-ids', got {tie_rule!r}")
    chosen: list[int] = []
    for cell in sibling_partition(t).cells:
        kept = cell[:-1] if tie_rule == "lowest-ids" else cell[1:]
        chosen.extend(kept)
    return ControlSet(tuple(sorted(chosen)))


def count_min_control_sets(t: CoTree) -> int:
    """Number of distinct minimum control sets: the product of cell sizes."""
    _require_controllable_setting(t, "count_min_control_sets")
    return prod(sibling_partition(t).sizes)


def enumerate_min_control_sets(t: CoTree) -> Iterator[ControlSet]:
    """All minimum control sets, one dropped vertex per cell, emitted in
    lexicographic order of the sorted vertex tuple."""
    _require_controllable_setting(t, "enumerate_min_control_sets")
    cells = sibling_partition(t).cells

    def expand(idx: int, kept: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if idx == len(cells):
            yield kept
            return
        cell = cells[idx]
        for drop in cell:
            rest = tuple(v for v in cell if v != drop)
            yield from expand(idx + 1, kept + rest)

    sets = sorted(tuple(sorted(s)) for s in expand(0, ()))
    for s in sets:
        yield ControlSet(s)


def is_controllable(t: CoTree, control: ControlSet | Iterable[int]) -> bool:
    """Cell test: controllable iff every sibling cell has at most one vertex
    outside the control set."""
    _require_controllable_setting(t, "is_controllable")
    vertices = _as_vertices(control)
    for v in vertices:
        if v > t.n:
            raise ValueError(f"control vertex {v} out of range 1..{t.n}")
    chosen = set(vertices)
    return all(
        sum(1 for v in cell if v not in chosen) <= 1
        for cell in sibling_partition(t).cells
    )


def pbh_check(t: CoTree, control: ControlSet | Iterable[int]) -> bool:
    """Eigenvector test: for every distinct eigenvalue, the rows of its
    stacked eigenvector blocks at the control vertices must have full column
    rank, so no eigenvector vanishes on every control node.

    Blocks sharing an eigenvalue live on disjoint leaf sets, which makes the
    stacking valid. Must agree with ``is_controllable`` on every input.
    """
    _require_controllable_setting(t, "pbh_check")
    vertices = _as_vertices(control)
    for v in vertices:
        if v > t.n:
            raise ValueError(f"control vertex {v} out of range 1..{t.n}")
    if not vertices:
        return False  # the trivial all-ones eigenvector sees no input
    groups: dict[int, list[EigenBlock]] = {}
    for block in eigen_blocks(t):
        groups.setdefault(block.eigenvalue, []).append(block)
    picked = sorted(vertices)
    for blocks in groups.values():
        rows = []
        for v in picked:
            row: list[int] = []
            for block in blocks:
                if v in block.row_support:
                    r = block.row_vertices.index(v)
                    row.extend(block.block.entries[r])
                else:
                    row.extend([0] * block.multiplicity)
            rows.append(row)
        ncols = sum(b.multiplicity for b in blocks)
        if _rank_fraction_free(rows) < ncols:
            return False
    return True


def choose_block_rows(t: CoTree, v: int, choice: Mapping[int, int]) -> frozenset[int]:
    """Row selection making an internal node's eigenvector block invertible:
    pick all children of v but one, and one descendant leaf of each.

    ``choice`` maps the child node id to the chosen vertex; it must cover
    exactly (children of v) - 1 distinct children. Returns the vertex set.
    """
    if t.is_leaf(v):
        raise ValueError("row choices apply to internal nodes only")
    kids = set(t.children(v))
    needed = len(kids) - 1
    if len(choice) != needed:
        raise ValueError(f"choice must cover exactly {needed} children, got {len(choice)}")
    selected = []
    for child, vertex in choice.items():
        if child not in kids:
            raise ValueError(f"node {child} is not a child of node {v}")
        if vertex not in t.leaves_below(child):
            raise ValueError(f"vertex {vertex} is not a leaf below child {child}")
        selected.append(vertex)
    return frozenset(selected)


def _rank_fraction_free(rows: list[list[int]]) -> int:
    """Integer-preserving (fraction-free) elimination rank; every division is
    exact by the standard two-step determinant identity."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    denom = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        head = m[rank][col]
        for i in range(rank + 1, nrows):
            factor = m[i][col]
            for j in range(col + 1, ncols):
                m[i][j] = (head * m[i][j] - factor * m[rank][j]) // denom
            m[i][col] = 0
        denom = head
        rank += 1
        if rank == nrows:
            break
    return rank

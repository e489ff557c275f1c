"""Independent brute-force ground truth.

Everything here is deliberately written against the raw adjacency and with its
own linear algebra (rational Gaussian elimination, division-free
characteristic polynomial) so that it shares no code with the fast closed-form
paths it validates.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

from .cotree import P4Witness
from .errors import NonIntegerRootError, SizeCapError
from .graphs import Graph, IntMatrix

EXHAUSTIVE_CAP = 10


def _rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank via plain Gaussian elimination over exact rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def kalman_rank(g: Graph, control: Iterable[int]) -> int:
    """Exact rank of [B, AB, ..., A^(n-1)B] with A = -L(g).

    ``control`` holds 1-based vertex ids; B stacks the matching unit columns.
    Rank n certifies controllability.
    """
    vertices = list(control)
    n = g.n
    for v in vertices:
        if not (1 <= v <= n):
            raise ValueError(f"control vertex {v} out of range 1..{n}")
    if len(set(vertices)) != len(vertices):
        raise ValueError("control vertices must be distinct")
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if g.has_edge(i, j):
                a[i][j] = 1
        a[i][i] = -g.degree(i)
    # columns of the controllability matrix, accumulated power by power
    block = [[1 if i == v - 1 else 0 for v in vertices] for i in range(n)]
    cols: list[list[int]] = [list(c) for c in zip(*block)] if vertices else []
    for _ in range(n - 1):
        block = [[sum(a[i][k] * block[k][j] for k in range(n)) for j in range(len(vertices))]
                 for i in range(n)]
        cols.extend(list(c) for c in zip(*block))
    return _rank_rational(cols)


def char_poly(m: IntMatrix) -> list[int]:
    """Coefficients of det(xI - M), highest degree first, by a division-free
    recursion on trailing principal submatrices."""
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial needs a square matrix")
    return _berkowitz([list(r) for r in m.entries])


def _berkowitz(a: list[list[int]]) -> list[int]:
    n = len(a)
    if n == 0:
        return [1]
    if n == 1:
        return [1, -a[0][0]]
    head = a[0][0]
    row = a[0][1:]
    col = [r[0] for r in a[1:]]
    rest = [r[1:] for r in a[1:]]
    q = _berkowitz(rest)
    t = [1, -head]
    w = col
    for _ in range(n - 1):
        t.append(-sum(x * y for x, y in zip(row, w)))
        w = [sum(rest[i][k] * w[k] for k in range(n - 1)) for i in range(n - 1)]
    return [
        sum(t[i - j] * q[j] for j in range(len(q)) if 0 <= i - j < len(t))
        for i in range(n + 1)
    ]


def _divisors(value: int) -> list[int]:
    value = abs(value)
    small, large = [], []
    for d in range(1, isqrt(value) + 1):
        if value % d == 0:
            small.append(d)
            large.append(value // d)
    return small + large[::-1]


def integer_roots(coeffs: Sequence[int]) -> Counter:
    """Integer roots (with multiplicity) of a monic integer polynomial.

    Raises NonIntegerRootError if the polynomial does not split over the
    integers, which for a cograph Laplacian would signal a bug upstream.
    """
    if not coeffs or coeffs[0] != 1:
        raise ValueError("polynomial must be monic with leading coefficient 1")
    poly = [int(c) for c in coeffs]
    roots: Counter = Counter()
    while len(poly) > 1:
        if poly[-1] == 0:
            roots[0] += 1
            poly.pop()
            continue
        for mag in _divisors(poly[-1]):
            for r in (mag, -mag):
                if _eval_poly(poly, r) == 0:
                    poly = _deflate(poly, r)
                    roots[r] += 1
                    break
            else:
                continue
            break
        else:
            raise NonIntegerRootError(
                f"no integer root divides constant term {poly[-1]}"
            )
    return roots


def _eval_poly(poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in poly:
        acc = acc * x + c
    return acc


def _deflate(poly: Sequence[int], root: int) -> list[int]:
    out = [poly[0]]
    for c in poly[1:-1]:
        out.append(c + root * out[-1])
    if poly[-1] + root * out[-1] != 0:
        raise ArithmeticError("deflation by a non-root")
    return out


def find_p4(g: Graph) -> P4Witness | None:
    """Search all 4-subsets for an induced path; None when the graph is P4-free."""
    for quad in combinations(range(g.n), 4):
        witness = _path_order(g, quad)
        if witness is not None:
            return witness
    return None


def is_p4_free(g: Graph) -> bool:
    return find_p4(g) is None


def _path_order(g: Graph, quad: tuple[int, ...]) -> P4Witness | None:
    pairs = [(i, j) for i, j in combinations(quad, 2) if g.has_edge(i, j)]
    if len(pairs) != 3:
        return None
    deg = Counter()
    for i, j in pairs:
        deg[i] += 1
        deg[j] += 1
    if sorted(deg[v] for v in quad) != [1, 1, 2, 2]:
        return None
    ends = sorted(v for v in quad if deg[v] == 1)
    order = [ends[0]]
    while len(order) < 4:
        order.append(next(v for v in quad
                          if v not in order and g.has_edge(order[-1], v)))
    return P4Witness(tuple(v + 1 for v in order))


def exhaustive_min_sets(g: Graph) -> tuple[int, list[tuple[int, ...]]]:
    """Smallest controllable-set size and every set of that size, by
    Kalman-rank search over all vertex subsets. Capped at n <= 10."""
    if g.n > EXHAUSTIVE_CAP:
        raise SizeCapError(f"exhaustive search capped at n <= {EXHAUSTIVE_CAP}, got {g.n}")
    vertices = range(1, g.n + 1)
    for k in range(g.n + 1):
        hits = [c for c in combinations(vertices, k) if kalman_rank(g, c) == g.n]
        if hits:
            return k, hits
    raise AssertionError("full actuation is always controllable")

"""Canonical labelling of quivers up to vertex permutation.

The canonical matrix is the lexicographically smallest row-major flattening of
``b[perm[i]][perm[j]]`` over all permutations ``perm``. It is found by
branch-and-bound: position ``i`` of the permutation is filled from the cell of
an ordered partition that earlier choices have refined, so only rows that can
still tie the best prefix are expanded.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .quiver import Matrix, Quiver, QuiverError

#: Default cap on the vertex count accepted by :func:`canonicalize`.
DEFAULT_CANON_LIMIT = 12


class CanonicalizationLimitError(QuiverError):
    """Quiver is larger than the configured canonicalization limit."""


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-minimal representative of an isomorphism class.

    ``matrix[i][j] == source.b[perm[i]][perm[j]]``.
    """

    matrix: Matrix
    hash: str
    perm: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.matrix)

    def quiver(self) -> Quiver:
        return Quiver._trusted(self.matrix)

    def flat(self) -> Tuple[int, ...]:
        return tuple(v for row in self.matrix for v in row)


def serialize_matrix(matrix: Matrix) -> bytes:
    """Bytes hashed for the canonical digest.

    ``n`` as an 8-byte big-endian unsigned integer, then each entry in
    row-major order as an 8-byte big-endian two's-complement signed integer.
    """
    n = len(matrix)
    parts = [n.to_bytes(8, "big")]
    parts.extend(v.to_bytes(8, "big", signed=True) for row in matrix for v in row)
    return b"".join(parts)


def matrix_hash(matrix: Matrix) -> str:
    """Hex SHA-256 of :func:`serialize_matrix`."""
    return hashlib.sha256(serialize_matrix(matrix)).hexdigest()


def _twins(b: Matrix, x: int, y: int) -> bool:
    # Swapping x and y is an automorphism of the whole quiver.
    if b[x][y] != 0:
        return False
    bx, by = b[x], b[y]
    for z in range(len(b)):
        if z != x and z != y and bx[z] != by[z]:
            return False
    return True


def _refine(b: Matrix, v: int, cells: List[List[int]]):
    """Split each cell by ``b[v][x]`` ascending; return the new cells and row tail."""
    row = b[v]
    out: List[List[int]] = []
    tail: List[int] = []
    for cell in cells:
        if len(cell) == 1:
            out.append(cell)
            tail.append(row[cell[0]])
            continue
        groups = {}
        for x in cell:
            groups.setdefault(row[x], []).append(x)
        for val in sorted(groups):
            g = groups[val]
            out.append(g)
            tail.extend([val] * len(g))
    return out, tail


def _search(b: Matrix) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    n = len(b)
    best_rows: List[Tuple[int, ...]] = []
    best_perm: List[int] = []

    def recurse(depth, prefix, cells, rows):
        nonlocal best_rows, best_perm
        if depth == n:
            if not best_rows or rows < best_rows:
                best_rows = list(rows)
                best_perm = list(prefix)
            return
        first = cells[0]
        candidates: List[int] = []
        for x in first:
            if not any(_twins(b, x, y) for y in candidates):
                candidates.append(x)
        options = []
        for x in candidates:
            remaining = [y for y in first if y != x]
            rest = ([remaining] if remaining else []) + cells[1:]
            new_cells, tail = _refine(b, x, rest)
            row = tuple(b[x][p] for p in prefix) + (0,) + tuple(tail)
            options.append((row, x, new_cells))
        low = min(row for row, _, _ in options)
        extended = rows + [low]
        for row, x, new_cells in options:
            if row != low:
                continue
            # best_rows may have improved in an earlier sibling.
            if best_rows and extended > best_rows[: depth + 1]:
                return
            recurse(depth + 1, prefix + [x], new_cells, extended)

    recurse(0, [], [list(range(n))], [])
    return tuple(best_perm), tuple(best_rows)


@lru_cache(maxsize=1 << 16)
def _canonical_cached(b: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    perm, _ = _search(b)
    matrix = tuple(tuple(b[pi][pj] for pj in perm) for pi in perm)
    return matrix, perm


def canonicalize(q: Quiver, limit: int = DEFAULT_CANON_LIMIT) -> CanonicalForm:
    """Return the canonical form of ``q``.

    Raises
    ------
    CanonicalizationLimitError
        If ``q`` has more than ``limit`` vertices.
    """
    if q.n > limit:
        raise CanonicalizationLimitError(
            f"{q.n} vertices exceeds the canonicalization limit of {limit}"
        )
    matrix, perm = _canonical_cached(q.b)
    return CanonicalForm(matrix, matrix_hash(matrix), perm)


def is_isomorphic(q1: Quiver, q2: Quiver, limit: int = DEFAULT_CANON_LIMIT) -> bool:
    """True iff some vertex relabelling turns ``q1`` into ``q2``."""
    if q1.n != q2.n:
        return False
    if sorted(v for r in q1.b for v in r) != sorted(v for r in q2.b for v in r):
        return False
    return canonicalize(q1, limit).matrix == canonicalize(q2, limit).matrix

"""Exchange-matrix quivers and mutation.

A quiver without loops or two-cycles on vertices ``0..n-1`` is stored as its
skew-symmetric exchange matrix ``b``: ``b[i][j] > 0`` means ``b[i][j]`` arrows
``i -> j`` and none back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

Matrix = Tuple[Tuple[int, ...], ...]

#: Largest magnitude an arrow multiplicity may reach (signed 64-bit range).
INT_LIMIT = 2**63 - 1


class QuiverError(ValueError):
    """Invalid quiver data or an invalid vertex reference."""


class MutationOverflowError(OverflowError):
    """An arrow multiplicity left the supported integer range."""


def _check_width(value: int) -> int:
    if value > INT_LIMIT or value < -INT_LIMIT:
        raise MutationOverflowError(
            f"arrow multiplicity {value} exceeds the 64-bit limit"
        )
    return value


@dataclass(frozen=True)
class Violation:
    """First broken quiver invariant found by :func:`validate`."""

    kind: str  # "shape", "diagonal", "skew" or "width"
    row: int
    col: int
    message: str

    def __str__(self) -> str:
        return self.message


def validate(b) -> Optional[Violation]:
    """Return the first violated invariant of ``b``, or ``None`` if it is fine.

    Accepts anything indexable as a square matrix of integers.
    """
    rows = [list(r) for r in b]
    n = len(rows)
    if n == 0:
        return Violation("shape", 0, 0, "quiver must have at least one vertex")
    for i, r in enumerate(rows):
        if len(r) != n:
            return Violation(
                "shape", i, len(r), f"row {i} has {len(r)} entries, expected {n}"
            )
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if isinstance(v, bool) or int(v) != v:
                return Violation("shape", i, j, f"entry ({i},{j}) is not an integer")
            if abs(v) > INT_LIMIT:
                return Violation(
                    "width", i, j, f"entry ({i},{j}) exceeds the 64-bit limit"
                )
    for i in range(n):
        if rows[i][i] != 0:
            return Violation(
                "diagonal", i, i, f"loop at vertex {i}: diagonal entry is {rows[i][i]}"
            )
    for i in range(n):
        for j in range(i):
            if rows[i][j] != -rows[j][i]:
                return Violation(
                    "skew",
                    i,
                    j,
                    f"skew-symmetry violated at ({i},{j}): "
                    f"{rows[i][j]} != -({rows[j][i]})",
                )
    return None


@dataclass(frozen=True)
class Quiver:
    """Immutable loop-free, two-cycle-free quiver.

    Labels are display-only: they take no part in equality or hashing.

    Examples
    --------
    >>> q = Quiver.from_arrows(2, [(0, 1)])
    >>> q.b
    ((0, 1), (-1, 0))
    >>> q.mutate(0).b
    ((0, -1), (1, 0))
    """

    b: Matrix
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __init__(self, b, labels: Optional[Sequence[str]] = None):
        problem = validate(b)
        if problem is not None:
            raise QuiverError(str(problem))
        matrix = tuple(tuple(int(v) for v in row) for row in b)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(matrix):
                raise QuiverError(
                    f"{len(labels)} labels given for {len(matrix)} vertices"
                )
        object.__setattr__(self, "b", matrix)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def _trusted(cls, b: Matrix, labels=None) -> "Quiver":
        # Skips validation; callers guarantee the invariants.
        q = object.__new__(cls)
        object.__setattr__(q, "b", b)
        object.__setattr__(q, "labels", labels)
        return q

    @classmethod
    def from_arrows(
        cls, n: int, arrows: Iterable[Tuple[int, int]] | Iterable[Tuple[int, int, int]]
    ) -> "Quiver":
        """Build a quiver from ``(i, j)`` or ``(i, j, multiplicity)`` arrows.

        Opposite arrows cancel, matching the two-cycle removal of mutation.
        """
        if n < 1:
            raise QuiverError("quiver must have at least one vertex")
        b = [[0] * n for _ in range(n)]
        for arrow in arrows:
            i, j, *rest = arrow
            m = rest[0] if rest else 1
            if not (0 <= i < n and 0 <= j < n):
                raise QuiverError(f"arrow ({i},{j}) out of range for {n} vertices")
            if i == j:
                raise QuiverError(f"loop at vertex {i}")
            b[i][j] += m
            b[j][i] -= m
        return cls(b)

    @property
    def n(self) -> int:
        return len(self.b)

    def __len__(self) -> int:
        return len(self.b)

    def __repr__(self) -> str:
        return f"Quiver({[list(r) for r in self.b]})"

    def arrows(self):
        """Yield ``(i, j, multiplicity)`` for every pair with arrows ``i -> j``."""
        for i, row in enumerate(self.b):
            for j, v in enumerate(row):
                if v > 0:
                    yield i, j, v

    def max_entry(self) -> int:
        return max((abs(v) for row in self.b for v in row), default=0)

    def mutate(self, k: int) -> "Quiver":
        return mutate(self, k)

    def mutate_seq(self, steps: Iterable[int]) -> "Quiver":
        return mutate_seq(self, steps)

    def full_subquiver(self, vertices: Iterable[int]) -> "Quiver":
        return full_subquiver(self, vertices)

    def permute(self, perm: Sequence[int]) -> "Quiver":
        return permute(self, perm)

    def is_acyclic(self) -> bool:
        return is_acyclic(self)


def _check_vertex(q: Quiver, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k < q.n:
        raise QuiverError(f"vertex {k!r} out of range for {q.n} vertices")


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutate ``q`` at vertex ``k`` using the closed-form matrix update.

    ``b'[i][j] = -b[i][j]`` when ``k`` is ``i`` or ``j``; otherwise
    ``b'[i][j] = b[i][j] + sign(b[i][k]) * max(b[i][k] * b[k][j], 0)``.
    Vertex ``k`` keeps its index.

    Raises
    ------
    QuiverError
        If ``k`` is not a vertex of ``q``.
    MutationOverflowError
        If a product or sum leaves the 64-bit range.
    """
    _check_vertex(q, k)
    b = q.b
    bk = b[k]
    out = []
    for i, row in enumerate(b):
        bik = row[k]
        if i == k:
            out.append(tuple(-v for v in row))
            continue
        if bik == 0:
            new = list(row)
            new[k] = -bik
            out.append(tuple(new))
            continue
        new = list(row)
        for j in range(len(row)):
            if j == k:
                new[j] = -bik
            elif j != i:
                bkj = bk[j]
                if (bik > 0 and bkj > 0) or (bik < 0 and bkj < 0):
                    prod = _check_width(bik * bkj)
                    new[j] = _check_width(row[j] + (prod if bik > 0 else -prod))
        out.append(tuple(new))
    return Quiver._trusted(tuple(out), q.labels)


def mutate_three_step(q: Quiver, k: int) -> Quiver:
    """Mutate by literally composing, cancelling and reversing arrows.

    Works on explicit arrow counts rather than the signed matrix: add
    ``a*b`` arrows ``i -> j`` for each path ``i -> k -> j``, cancel the
    resulting two-cycles, then reverse every arrow at ``k``. Kept as an
    independent route to cross-check :func:`mutate`.
    """
    _check_vertex(q, k)
    n = q.n
    arrows = [[max(v, 0) for v in row] for row in q.b]
    added = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != k and j != k and i != j:
                added[i][j] = _check_width(arrows[i][k] * arrows[k][j])
    for i in range(n):
        for j in range(n):
            arrows[i][j] += added[i][j]
    for i in range(n):
        for j in range(i + 1, n):
            c = min(arrows[i][j], arrows[j][i])
            arrows[i][j] -= c
            arrows[j][i] -= c
    for i in range(n):
        if i != k:
            arrows[i][k], arrows[k][i] = arrows[k][i], arrows[i][k]
    b = tuple(
        tuple(_check_width(arrows[i][j] - arrows[j][i]) for j in range(n))
        for i in range(n)
    )
    return Quiver._trusted(b, q.labels)


def mutate_seq(q: Quiver, steps: Iterable[int]) -> Quiver:
    """Apply mutations left to right; an empty sequence returns ``q``."""
    for k in steps:
        q = mutate(q, k)
    return q


def full_subquiver(q: Quiver, vertices: Iterable[int]) -> Quiver:
    """Return the full subquiver on ``vertices``, in the order given.

    Vertex ``t`` of the result is ``vertices[t]`` of ``q``.
    """
    vs = list(vertices)
    if not vs:
        raise QuiverError("full subquiver needs at least one vertex")
    for v in vs:
        _check_vertex(q, v)
    if len(set(vs)) != len(vs):
        raise QuiverError(f"repeated vertex in subset {vs}")
    b = tuple(tuple(q.b[i][j] for j in vs) for i in vs)
    labels = tuple(q.labels[v] for v in vs) if q.labels is not None else None
    return Quiver._trusted(b, labels)


def permute(q: Quiver, perm: Sequence[int]) -> Quiver:
    """Relabel so that new vertex ``t`` is old vertex ``perm[t]``."""
    if sorted(perm) != list(range(q.n)):
        raise QuiverError(f"{list(perm)} is not a permutation of {q.n} vertices")
    return full_subquiver(q, perm)


def is_acyclic(q: Quiver) -> bool:
    """True iff the arrows ``i -> j`` (for ``b[i][j] > 0``) form no directed cycle."""
    n = q.n
    indeg = [0] * n
    for row in q.b:
        for j, v in enumerate(row):
            if v > 0:
                indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while ready:
        i = ready.pop()
        seen += 1
        for j, v in enumerate(q.b[i]):
            if v > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    return seen == n


def markov_quiver() -> Quiver:
    """Oriented 3-cycle ``0 -> 1 -> 2 -> 0`` with every arrow doubled."""
    return Quiver([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def path_quiver(n: int) -> Quiver:
    """Linearly oriented path ``0 -> 1 -> ... -> n-1``."""
    return Quiver.from_arrows(n, [(i, i + 1) for i in range(n - 1)])


def cyclic_triangle(a: int, b: int, c: int) -> Quiver:
    """Oriented 3-cycle with ``a`` arrows 0->1, ``b`` arrows 1->2, ``c`` arrows 2->0."""
    return Quiver([[0, a, -c], [-a, 0, b], [c, -b, 0]])

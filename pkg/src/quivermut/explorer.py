"""Budgeted breadth-first exploration of mutation classes.

Nodes are isomorphism classes (canonical forms); edges are single mutations.
Vertices are mutated in increasing index order and the frontier is FIFO, so
each witness is a shortest mutation word and the output is reproducible.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .canonical import DEFAULT_CANON_LIMIT, CanonicalForm, canonicalize
from .quiver import (
    Matrix,
    MutationOverflowError,
    Quiver,
    is_acyclic,
    mutate,
    mutate_seq,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_QUIVERS = 50_000
DEFAULT_MAX_DEPTH = 64
DEFAULT_MAX_ENTRY = 10**9


class BudgetError(ValueError):
    """Budget fields are not positive integers."""


@dataclass(frozen=True)
class Budget:
    """Caps on an exploration.

    Attributes
    ----------
    max_quivers : int
        Distinct canonical forms that may be visited.
    max_depth : int
        Longest mutation word explored.
    max_entry : int
        Largest ``|b[i][j]|`` kept; branches beyond it are dropped.
    """

    max_quivers: int = DEFAULT_MAX_QUIVERS
    max_depth: int = DEFAULT_MAX_DEPTH
    max_entry: int = DEFAULT_MAX_ENTRY

    def __post_init__(self):
        for name in ("max_quivers", "max_depth", "max_entry"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise BudgetError(f"{name} must be a positive integer, got {v!r}")

    def to_dict(self) -> Dict[str, int]:
        return {
            "max_quivers": self.max_quivers,
            "max_depth": self.max_depth,
            "max_entry": self.max_entry,
        }


@dataclass
class ClassReport:
    """Result of :func:`explore`.

    ``representatives`` are in discovery order; ``witness`` maps each
    canonical matrix to a mutation word taking the seed to that form.
    ``truncated_reasons`` is empty exactly when ``complete`` is true.
    """

    seed: Quiver
    representatives: List[CanonicalForm]
    witness: Dict[Matrix, Tuple[int, ...]]
    complete: bool
    truncated_reasons: List[str] = field(default_factory=list)
    budget: Budget = field(default_factory=Budget)
    dropped_branches: int = 0

    def __len__(self) -> int:
        return len(self.representatives)

    def __contains__(self, form: CanonicalForm) -> bool:
        return form.matrix in self.witness

    def witness_for(self, form: CanonicalForm) -> Tuple[int, ...]:
        return self.witness[form.matrix]

    def to_dict(self) -> dict:
        return {
            "seed": [list(r) for r in self.seed.b],
            "complete": self.complete,
            "size": len(self.representatives),
            "truncated_reasons": list(self.truncated_reasons),
            "dropped_branches": self.dropped_branches,
            "budget": self.budget.to_dict(),
            "representatives": [
                {
                    "matrix": [list(r) for r in f.matrix],
                    "hash": f.hash,
                    "witness": list(self.witness[f.matrix]),
                }
                for f in self.representatives
            ],
        }


class _Visited:
    """Visited set keyed by canonical hash, confirmed on the full matrix."""

    def __init__(self):
        self._by_hash: Dict[str, List[Matrix]] = {}

    def __contains__(self, form: CanonicalForm) -> bool:
        return form.matrix in self._by_hash.get(form.hash, ())

    def add(self, form: CanonicalForm) -> None:
        bucket = self._by_hash.setdefault(form.hash, [])
        if bucket:
            logger.warning("canonical hash collision on %s", form.hash)
        bucket.append(form.matrix)

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_hash.values())


def _bfs(
    seed: Quiver,
    budget: Budget,
    stop: Optional[Callable[[Quiver], bool]],
    limit: int,
):
    """Shared BFS core; returns (report, hit) where hit is (quiver, word) or None."""
    reasons: List[str] = []
    dropped = 0
    root = canonicalize(seed, limit)
    visited = _Visited()
    visited.add(root)
    reps = [root]
    witness: Dict[Matrix, Tuple[int, ...]] = {root.matrix: ()}

    def report(complete: bool) -> ClassReport:
        return ClassReport(
            seed=seed,
            representatives=reps,
            witness=witness,
            complete=complete,
            truncated_reasons=sorted(set(reasons)),
            budget=budget,
            dropped_branches=dropped,
        )

    if stop is not None and stop(seed):
        return report(False), (seed, ())

    # The frontier holds actual quivers reached from the seed (not the
    # canonical matrices), so each word replays literally.
    frontier = deque([(seed, ())])
    while frontier:
        q, word = frontier.popleft()
        if len(word) >= budget.max_depth:
            reasons.append("max_depth")
            continue
        for k in range(q.n):
            if word and word[-1] == k:
                continue  # mutating back returns the parent exactly
            try:
                child = mutate(q, k)
            except MutationOverflowError:
                reasons.append("max_entry")
                dropped += 1
                continue
            if child.max_entry() > budget.max_entry:
                reasons.append("max_entry")
                dropped += 1
                continue
            form = canonicalize(child, limit)
            if form in visited:
                continue
            if len(reps) >= budget.max_quivers:
                reasons.append("max_quivers")
                return report(False), None
            visited.add(form)
            child_word = word + (k,)
            reps.append(form)
            witness[form.matrix] = child_word
            if stop is not None and stop(child):
                return report(False), (child, child_word)
            frontier.append((child, child_word))
    complete = not reasons
    return report(complete), None


def explore(
    seed: Quiver, budget: Optional[Budget] = None, limit: int = DEFAULT_CANON_LIMIT
) -> ClassReport:
    """Enumerate the mutation class of ``seed`` up to isomorphism within ``budget``.

    ``complete`` is true only when the frontier emptied with no branch dropped
    for any budget reason. Overflow inside a mutation counts as a
    ``max_entry`` drop.
    """
    budget = budget or Budget()
    rep, _ = _bfs(seed, budget, None, limit)
    logger.debug(
        "explored %d forms, complete=%s, reasons=%s",
        len(rep.representatives),
        rep.complete,
        rep.truncated_reasons,
    )
    return rep


@dataclass(frozen=True)
class AcyclicFound:
    """An acyclic quiver reached from the seed by ``witness``."""

    quiver: Quiver
    witness: Tuple[int, ...]
    report: ClassReport


@dataclass(frozen=True)
class Exhausted:
    """No acyclic form met; ``complete`` proves mutation-cyclicity."""

    complete: bool
    report: ClassReport


def find_acyclic(
    seed: Quiver, budget: Optional[Budget] = None, limit: int = DEFAULT_CANON_LIMIT
):
    """Breadth-first search for an acyclic member of the mutation class.

    Each quiver is tested as it is discovered, so the returned witness is a
    shortest word to an acyclic quiver.

    Returns
    -------
    AcyclicFound or Exhausted
    """
    budget = budget or Budget()
    rep, hit = _bfs(seed, budget, is_acyclic, limit)
    if hit is not None:
        return AcyclicFound(hit[0], hit[1], rep)
    return Exhausted(rep.complete, rep)


@dataclass(frozen=True)
class Equivalence:
    """Outcome of :func:`mutation_equivalent`: ``"yes"``, ``"no"`` or ``"unknown"``."""

    answer: str
    witness: Optional[Tuple[int, ...]] = None
    report: Optional[ClassReport] = None

    def __bool__(self) -> bool:
        return self.answer == "yes"


def mutation_equivalent(
    q1: Quiver,
    q2: Quiver,
    budget: Optional[Budget] = None,
    limit: int = DEFAULT_CANON_LIMIT,
) -> Equivalence:
    """Decide within ``budget`` whether ``q2`` is in the mutation class of ``q1``.

    ``yes`` carries a word ``w`` with ``mutate_seq(q1, w)`` isomorphic to
    ``q2``; ``no`` requires the exploration of ``q1`` to complete.
    """
    budget = budget or Budget()
    if q1.n != q2.n:
        return Equivalence("no")
    target = canonicalize(q2, limit)

    def hits(q: Quiver) -> bool:
        return canonicalize(q, limit).matrix == target.matrix

    rep, hit = _bfs(q1, budget, hits, limit)
    if hit is not None:
        return Equivalence("yes", hit[1], rep)
    if rep.complete:
        return Equivalence("no", None, rep)
    return Equivalence("unknown", None, rep)


def replay(seed: Quiver, word) -> Quiver:
    """Apply a witness word to ``seed``."""
    return mutate_seq(seed, word)

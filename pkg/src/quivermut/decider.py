"""Semi-decision of mutation-acyclicity with checkable certificates.

The pipeline, in priority order:

1. an acyclic input is its own witness;
2. any 3-vertex full subquiver passing the Markov-constant test certifies
   the whole quiver mutation-cyclic (a quiver with a mutation-cyclic full
   subquiver is itself mutation-cyclic);
3. breadth-first search for an acyclic representative, where a completed
   search with none found certifies cyclicity;
4. optionally, recursion into proper subquivers;
5. otherwise ``Unknown``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from .canonical import DEFAULT_CANON_LIMIT, canonicalize
from .explorer import (
    AcyclicFound,
    Budget,
    ClassReport,
    find_acyclic,
)
from .quiver import (
    MutationOverflowError,
    Quiver,
    QuiverError,
    full_subquiver,
    is_acyclic,
    mutate,
    mutate_seq,
)

logger = logging.getLogger(__name__)


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class ThreeVertexInvariant:
    """The full subquiver on ``vertices`` is a cyclic triangle with weights >= 2
    and Markov constant at most 4."""

    vertices: Tuple[int, int, int]
    weights: Tuple[int, int, int]
    constant: int

    kind = "three-vertex-invariant"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "weights": list(self.weights),
            "constant": self.constant,
        }


@dataclass(frozen=True)
class CyclicSubquiver:
    """``inner`` certifies the full subquiver on ``vertices`` (relabelled ``0..m-1``
    in the listed order)."""

    vertices: Tuple[int, ...]
    inner: "Certificate"

    kind = "cyclic-subquiver"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "inner": self.inner.to_dict(),
        }


@dataclass(frozen=True)
class ExhaustedClass:
    """A complete mutation class with no acyclic member."""

    report: ClassReport

    kind = "exhausted-class"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "report": self.report.to_dict()}


Certificate = Union[ThreeVertexInvariant, CyclicSubquiver, ExhaustedClass]


def certificate_from_dict(data: dict) -> Certificate:
    """Rebuild a certificate from its JSON tree.

    Raises ``ValueError`` (or ``KeyError``/``TypeError``) on malformed input.
    """
    kind = data["kind"]
    if kind == ThreeVertexInvariant.kind:
        vs = tuple(int(v) for v in data["vertices"])
        ws = tuple(int(w) for w in data["weights"])
        if len(vs) != 3 or len(ws) != 3:
            raise ValueError("three-vertex certificate needs 3 vertices and 3 weights")
        return ThreeVertexInvariant(vs, ws, int(data["constant"]))
    if kind == CyclicSubquiver.kind:
        return CyclicSubquiver(
            tuple(int(v) for v in data["vertices"]),
            certificate_from_dict(data["inner"]),
        )
    if kind == ExhaustedClass.kind:
        return ExhaustedClass(report_from_dict(data["report"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def report_from_dict(data: dict) -> ClassReport:
    """Rebuild a :class:`ClassReport` from :meth:`ClassReport.to_dict` output."""
    from .canonical import CanonicalForm

    reps = []
    witness = {}
    for entry in data["representatives"]:
        matrix = tuple(tuple(int(v) for v in row) for row in entry["matrix"])
        reps.append(CanonicalForm(matrix, str(entry["hash"]), ()))
        witness[matrix] = tuple(int(k) for k in entry["witness"])
    return ClassReport(
        seed=Quiver(data["seed"]),
        representatives=reps,
        witness=witness,
        complete=bool(data["complete"]),
        truncated_reasons=list(data.get("truncated_reasons", [])),
        budget=Budget(**data["budget"]) if "budget" in data else Budget(),
        dropped_branches=int(data.get("dropped_branches", 0)),
    )


# -- verdicts ----------------------------------------------------------------


@dataclass
class Stats:
    """Which pipeline stages ran; ``explored`` counts forms visited by search."""

    stage: str = ""
    triples_scanned: int = 0
    class_explorations: int = 0
    explored: int = 0
    subquivers_recursed: int = 0

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "triples_scanned": self.triples_scanned,
            "class_explorations": self.class_explorations,
            "explored": self.explored,
            "subquivers_recursed": self.subquivers_recursed,
        }


@dataclass
class MutationAcyclic:
    witness: Tuple[int, ...]
    stats: Stats = field(default_factory=Stats, compare=False)

    name = "mutation-acyclic"

    def to_dict(self, stats: bool = True) -> dict:
        out = {"verdict": self.name, "witness": list(self.witness)}
        if stats:
            out["stats"] = self.stats.to_dict()
        return out


@dataclass
class MutationCyclic:
    certificate: Certificate
    stats: Stats = field(default_factory=Stats, compare=False)

    name = "mutation-cyclic"

    def to_dict(self, stats: bool = True) -> dict:
        out = {"verdict": self.name, "certificate": self.certificate.to_dict()}
        if stats:
            out["stats"] = self.stats.to_dict()
        return out


@dataclass
class Unknown:
    report: ClassReport
    stats: Stats = field(default_factory=Stats, compare=False)

    name = "unknown"

    def to_dict(self, stats: bool = True) -> dict:
        rep = self.report
        out = {
            "verdict": self.name,
            "report": {
                "explored": len(rep.representatives),
                "complete": rep.complete,
                "truncated_reasons": list(rep.truncated_reasons),
                "dropped_branches": rep.dropped_branches,
                "budget": rep.budget.to_dict(),
            },
        }
        if stats:
            out["stats"] = self.stats.to_dict()
        return out


Verdict = Union[MutationAcyclic, MutationCyclic, Unknown]


# -- three-vertex test -------------------------------------------------------


def _triangle(q: Quiver) -> Tuple[int, int, int, bool]:
    if q.n != 3:
        raise QuiverError(f"expected a 3-vertex quiver, got {q.n} vertices")
    x, y, z = q.b[0][1], q.b[1][2], q.b[2][0]
    cyclic = (x > 0 and y > 0 and z > 0) or (x < 0 and y < 0 and z < 0)
    return abs(x), abs(y), abs(z), cyclic


def markov_constant(q: Quiver) -> int:
    """``a^2 + b^2 + c^2 - abc`` for a cyclic triangle, ``+ abc`` otherwise.

    ``a, b, c`` are the multiplicities between vertices 0-1, 1-2 and 2-0.
    The value is unchanged by mutation.

    >>> from quivermut.quiver import markov_quiver
    >>> markov_constant(markov_quiver())
    4
    """
    a, b, c, cyclic = _triangle(q)
    s = a * a + b * b + c * c
    return s - a * b * c if cyclic else s + a * b * c


def _three_vertex_certificate(
    q: Quiver, vertices: Tuple[int, int, int] = (0, 1, 2)
) -> Optional[ThreeVertexInvariant]:
    a, b, c, cyclic = _triangle(q)
    if not cyclic or min(a, b, c) < 2:
        return None
    constant = markov_constant(q)
    if constant > 4:
        return None
    return ThreeVertexInvariant(tuple(vertices), (a, b, c), constant)


def decide_three_vertex(
    q: Quiver, budget: Optional[Budget] = None, limit: int = DEFAULT_CANON_LIMIT
) -> Verdict:
    """Decide a 3-vertex quiver exactly.

    Mutation-cyclic iff cyclically oriented with all multiplicities at least 2
    and Markov constant at most 4. Otherwise the acyclic witness comes from
    :func:`find_acyclic`; failing to find one raises ``RuntimeError``.
    """
    cert = _three_vertex_certificate(q)
    if cert is not None:
        return MutationCyclic(cert, Stats(stage="three-vertex-invariant"))
    result = find_acyclic(q, budget or Budget(), limit)
    stats = Stats(
        stage="three-vertex-search",
        class_explorations=1,
        explored=len(result.report.representatives),
    )
    if isinstance(result, AcyclicFound):
        return MutationAcyclic(result.witness, stats)
    raise RuntimeError(
        f"three-vertex quiver {q!r} passed the acyclicity test but no acyclic "
        "form was found within budget"
    )


# -- pipeline ----------------------------------------------------------------


def decide(
    q: Quiver,
    budget: Optional[Budget] = None,
    recurse_subquivers: int = 0,
    limit: int = DEFAULT_CANON_LIMIT,
) -> Verdict:
    """Semi-decide whether ``q`` is mutation-acyclic.

    Parameters
    ----------
    q : Quiver
    budget : Budget, optional
        Caps for the class search (defaults to :class:`Budget`).
    recurse_subquivers : int
        Levels of recursion into ``(n-1)``-vertex full subquivers after the
        class search fails to settle ``q``. Zero disables the step.
    limit : int
        Canonicalization vertex cap.

    Returns
    -------
    MutationAcyclic, MutationCyclic or Unknown
        Earlier pipeline stages win when several would succeed.
    """
    budget = budget or Budget()
    if not isinstance(recurse_subquivers, int) or recurse_subquivers < 0:
        raise ValueError("recurse_subquivers must be a non-negative integer")
    if q.n > limit:
        canonicalize(q, limit)  # raises the limit error
    stats = Stats()

    if is_acyclic(q):
        stats.stage = "acyclic-input"
        return MutationAcyclic((), stats)

    for triple in itertools.combinations(range(q.n), 3):
        stats.triples_scanned += 1
        cert = _three_vertex_certificate(full_subquiver(q, triple))
        if cert is None:
            continue
        stats.stage = "three-vertex-invariant"
        if q.n == 3:
            return MutationCyclic(cert, stats)
        return MutationCyclic(CyclicSubquiver(triple, cert), stats)

    result = find_acyclic(q, budget, limit)
    stats.class_explorations += 1
    stats.explored += len(result.report.representatives)
    if isinstance(result, AcyclicFound):
        stats.stage = "class-search"
        return MutationAcyclic(result.witness, stats)
    if result.complete:
        stats.stage = "exhausted-class"
        return MutationCyclic(ExhaustedClass(result.report), stats)

    if recurse_subquivers > 0 and q.n > 4:
        sub_budget = Budget(
            max(1, budget.max_quivers // q.n), budget.max_depth, budget.max_entry
        )
        for drop in range(q.n):
            vs = tuple(v for v in range(q.n) if v != drop)
            stats.subquivers_recursed += 1
            sub = decide(full_subquiver(q, vs), sub_budget, recurse_subquivers - 1, limit)
            stats.explored += sub.stats.explored
            if isinstance(sub, MutationCyclic):
                stats.stage = "subquiver-recursion"
                return MutationCyclic(CyclicSubquiver(vs, sub.certificate), stats)

    stats.stage = "budget"
    return Unknown(result.report, stats)


# -- checking ----------------------------------------------------------------


def check_certificate(q: Quiver, cert) -> bool:
    """Independently verify that ``cert`` proves ``q`` mutation-cyclic.

    Never raises: malformed certificates are rejected with ``False``.
    """
    try:
        return _check(q, cert)
    except (QuiverError, MutationOverflowError, TypeError, ValueError, KeyError,
            IndexError, AttributeError):
        return False


def _check(q: Quiver, cert) -> bool:
    if isinstance(cert, ThreeVertexInvariant):
        vs = tuple(cert.vertices)
        if len(vs) != 3:
            return False
        sub = full_subquiver(q, vs)
        a, b, c, cyclic = _triangle(sub)
        if not cyclic or (a, b, c) != tuple(cert.weights) or min(a, b, c) < 2:
            return False
        constant = a * a + b * b + c * c - a * b * c
        return constant == cert.constant and constant <= 4
    if isinstance(cert, CyclicSubquiver):
        return _check(full_subquiver(q, tuple(cert.vertices)), cert.inner)
    if isinstance(cert, ExhaustedClass):
        return _check_exhausted(q, cert.report)
    return False


def _check_exhausted(q: Quiver, report: ClassReport) -> bool:
    if not report.complete:
        return False
    forms = {}
    for form in report.representatives:
        rep_q = Quiver(form.matrix)
        if canonicalize(rep_q).matrix != form.matrix:
            return False
        if is_acyclic(rep_q):
            return False
        forms[form.matrix] = rep_q
    if canonicalize(q).matrix not in forms:
        return False
    # Closure: every single mutation stays inside the listed forms, so the
    # listed set is the entire (finite) mutation class of q.
    for rep_q in forms.values():
        for k in range(rep_q.n):
            if canonicalize(mutate(rep_q, k)).matrix not in forms:
                return False
    # Witnesses, when given, must replay from q.
    for matrix, word in report.witness.items():
        if matrix in forms and canonicalize(mutate_seq(q, word)).matrix != matrix:
            return False
    return True


def verdict_is_sound(q: Quiver, verdict: Verdict) -> bool:
    """Check a verdict's evidence: acyclic witnesses replay, certificates check."""
    if isinstance(verdict, MutationAcyclic):
        return is_acyclic(mutate_seq(q, verdict.witness))
    if isinstance(verdict, MutationCyclic):
        return check_certificate(q, verdict.certificate)
    return True


__all__ = [
    "Certificate",
    "CyclicSubquiver",
    "ExhaustedClass",
    "MutationAcyclic",
    "MutationCyclic",
    "Stats",
    "ThreeVertexInvariant",
    "Unknown",
    "Verdict",
    "certificate_from_dict",
    "check_certificate",
    "decide",
    "decide_three_vertex",
    "markov_constant",
    "report_from_dict",
    "verdict_is_sound",
]

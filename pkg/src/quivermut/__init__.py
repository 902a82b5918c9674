"""Quiver mutation, mutation classes and mutation-acyclicity certificates."""

from .canonical import CanonicalForm, CanonicalizationLimitError, canonicalize, is_isomorphic
from .decider import (
    CyclicSubquiver,
    ExhaustedClass,
    MutationAcyclic,
    MutationCyclic,
    ThreeVertexInvariant,
    Unknown,
    check_certificate,
    decide,
    decide_three_vertex,
    markov_constant,
)
from .explorer import (
    AcyclicFound,
    Budget,
    ClassReport,
    Exhausted,
    explore,
    find_acyclic,
    mutation_equivalent,
)
from .quiver import (
    MutationOverflowError,
    Quiver,
    QuiverError,
    full_subquiver,
    is_acyclic,
    markov_quiver,
    mutate,
    mutate_seq,
    path_quiver,
    validate,
)
from .textio import ParseError, emit_dot, emit_json, emit_quiver, parse_quiver

__version__ = "0.1.0"

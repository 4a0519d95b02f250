"""Homological dimensions of bound quiver algebras over finite fields and Q."""

from ._core import (
    Algebra,
    ContractViolation,
    Inconclusive,
    PresentationError,
    check,
    checks,
    default_checks,
    generate,
    gl_dim,
    load_algebra,
    max_projective_dim,
    module_invariants,
    nakayama,
    parse_algebra,
    profile,
    set_max_projective_dim,
    sweep,
)

__all__ = [
    "Algebra",
    "ContractViolation",
    "Inconclusive",
    "PresentationError",
    "check",
    "checks",
    "default_checks",
    "generate",
    "gl_dim",
    "load_algebra",
    "max_projective_dim",
    "module_invariants",
    "nakayama",
    "parse_algebra",
    "profile",
    "set_max_projective_dim",
    "sweep",
]

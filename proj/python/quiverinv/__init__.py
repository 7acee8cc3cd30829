"""Quiver representations, semi-invariants and canonical algebras.

Vectors are indexed by the quiver's vertices in natural sorted order
(see ``Quiver.vertices``).
"""

from ._core import (
    BudgetError,
    InputError,
    InvariantError,
    NotFoundError,
    PreconditionError,
    Quiver,
    canonical_decomposition,
    classify,
    classify_canonical,
    euler_form,
    is_log_concave,
    is_schur_root,
    is_semistable,
    rational_invariants,
    run_cli,
    si_dim,
    si_table,
    theta_stable_decomposition,
    tits_form,
    virtual_genus,
)

__all__ = [
    "BudgetError",
    "InputError",
    "InvariantError",
    "NotFoundError",
    "PreconditionError",
    "Quiver",
    "canonical_decomposition",
    "classify",
    "classify_canonical",
    "euler_form",
    "is_log_concave",
    "is_schur_root",
    "is_semistable",
    "rational_invariants",
    "run_cli",
    "si_dim",
    "si_table",
    "theta_stable_decomposition",
    "tits_form",
    "virtual_genus",
]

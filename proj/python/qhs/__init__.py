"""Exact verification toolkit for the 12-dimensional quaternionic bracket family.

All rationals cross the boundary as strings ("p/q"); every computation is
exact. The report-producing functions mirror the CLI subcommands and return
plain dicts with a ``checks`` list and an ``ok`` flag.
"""

try:
    from ._qhs import (
        complete_params,
        derive_constraints,
        family_verify,
        family_verify_full,
        fourform,
        goursat,
        jacobi_constraint_ideal,
        jacobi_defect,
        lemma31,
        paper_system,
        sweep,
        symmetry_status,
    )
except ImportError:  # in-tree builds put the extension next to the package
    from _qhs import (
        complete_params,
        derive_constraints,
        family_verify,
        family_verify_full,
        fourform,
        goursat,
        jacobi_constraint_ideal,
        jacobi_defect,
        lemma31,
        paper_system,
        sweep,
        symmetry_status,
    )

__all__ = [
    "complete_params",
    "derive_constraints",
    "family_verify",
    "family_verify_full",
    "fourform",
    "goursat",
    "jacobi_constraint_ideal",
    "jacobi_defect",
    "lemma31",
    "paper_system",
    "sweep",
    "symmetry_status",
]

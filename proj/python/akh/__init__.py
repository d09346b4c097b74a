"""Annular Khovanov skein homology over F2."""

from ._core import (
    CapacityError,
    Diagram,
    DomainError,
    InvariantError,
    ParseError,
    add_split_meridians,
    annular_pd,
    braid,
    check,
    determinant,
    euler_statesum,
    khovanov_homology,
    m_number,
    mirror,
    pages,
    plamenevskaya,
    run_cli,
    signature,
    skein_homology,
    spanning_leaves,
    suites,
    unknot_t_values,
)


def total_rank(ranks):
    """Sum of the ranks in a table returned by the homology functions."""
    return sum(ranks.values())


__all__ = [
    "CapacityError",
    "Diagram",
    "DomainError",
    "InvariantError",
    "ParseError",
    "add_split_meridians",
    "annular_pd",
    "braid",
    "check",
    "determinant",
    "euler_statesum",
    "khovanov_homology",
    "m_number",
    "mirror",
    "pages",
    "plamenevskaya",
    "run_cli",
    "signature",
    "skein_homology",
    "spanning_leaves",
    "suites",
    "total_rank",
    "unknot_t_values",
]

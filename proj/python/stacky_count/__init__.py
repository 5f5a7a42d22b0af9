"""Exact point counts and cohomology of Hom-stacks into weighted projective stacks."""

from ._core import (
    StackyError,
    __version__,
    bmanin,
    brute_count,
    brute_iso_count,
    closed_count,
    closed_polynomial,
    cohomology,
    iso_count,
    picard,
    run,
)

__all__ = [
    "StackyError",
    "__version__",
    "bmanin",
    "brute_count",
    "brute_iso_count",
    "closed_count",
    "closed_polynomial",
    "cohomology",
    "iso_count",
    "picard",
    "run",
]

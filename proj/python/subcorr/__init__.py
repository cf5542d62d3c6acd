"""Exact subnormalizer and character correspondence checks."""

from ._core import (
    Error,
    PermGroup,
    character_table,
    check_conjecture,
    conjugacy_classes,
    fixture,
    fixture_names,
    subnormalizer_data,
    theorem_witness,
)

__all__ = [
    "Error",
    "PermGroup",
    "character_table",
    "check_conjecture",
    "conjugacy_classes",
    "fixture",
    "fixture_names",
    "subnormalizer_data",
    "theorem_witness",
]

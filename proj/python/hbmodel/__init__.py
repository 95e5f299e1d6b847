"""Exact Hirsch-Brown minimal models and fixed-point calculus."""

from ._hbmodel import (
    Datum,
    HbmError,
    Workbench,
    coefficients,
    cp2_weighted,
    fixture,
    fixture_names,
    moment_powers,
    parse_datum,
    relation,
    run_cli,
    validate,
    variants,
    volume,
)

__all__ = [
    "Datum",
    "HbmError",
    "Workbench",
    "coefficients",
    "cp2_weighted",
    "fixture",
    "fixture_names",
    "moment_powers",
    "parse_datum",
    "relation",
    "run_cli",
    "validate",
    "variants",
    "volume",
]

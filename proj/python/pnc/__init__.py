"""Possibilistic Horn non-clausal reasoning engine."""

from ._core import (  # noqa: F401
    Base,
    BudgetError,
    Formula,
    NotHornNCError,
    ParseError,
    cl_transform,
    entails,
    inc,
    inc_oracle,
    is_consistent,
    is_horn_clausal,
    is_horn_nc,
    is_horn_nc_base,
    is_negative,
    necessity_oracle,
    parse_base,
    parse_formula,
    solve,
)

__all__ = [
    "Base",
    "BudgetError",
    "Formula",
    "NotHornNCError",
    "ParseError",
    "cl_transform",
    "entails",
    "inc",
    "inc_oracle",
    "is_consistent",
    "is_horn_clausal",
    "is_horn_nc",
    "is_horn_nc_base",
    "is_negative",
    "necessity_oracle",
    "parse_base",
    "parse_formula",
    "solve",
]

"""Hilbert depth of Hilbert functions, with exact beta certificates."""

from ._core import (
    HdepthError,
    alpha_vector,
    battery_names,
    beta_table,
    big_e,
    canonical,
    evaluate,
    gauss2f1,
    qdepth,
    sqf,
    verify,
)

__all__ = [
    "HdepthError",
    "alpha_vector",
    "battery_names",
    "beta_table",
    "big_e",
    "canonical",
    "evaluate",
    "gauss2f1",
    "qdepth",
    "sqf",
    "verify",
]

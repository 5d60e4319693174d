"""Genus-1 quantum K-theory of the point: exact reconstruction and checks."""

import json

from ._qk1 import (
    Error,
    IrreducibleDenominator,
    MissingCorrelatorData,
    NonIntegerExponent,
    ParseError,
    UnsupportedOrder,
    VariableMismatch,
    canonical,
    criterion_count,
    partial_fractions,
    prop31,
    tau,
    two_point,
    verify_json,
)


def verify(order=3, cyclotomic_order=12, convention="monomial", criteria=(), parallel=True):
    """Run the acceptance checks and return the report as a dict."""
    return json.loads(verify_json(order, cyclotomic_order, convention, list(criteria), parallel))


__all__ = [
    "Error",
    "IrreducibleDenominator",
    "MissingCorrelatorData",
    "NonIntegerExponent",
    "ParseError",
    "UnsupportedOrder",
    "VariableMismatch",
    "canonical",
    "criterion_count",
    "partial_fractions",
    "prop31",
    "tau",
    "two_point",
    "verify",
    "verify_json",
]

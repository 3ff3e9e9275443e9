"""Catalog of identities and the residual checks that classify them."""
from .core import (
    EXPECTATIONS, FAMILIES, TOLERANCES, VERDICTS, Evaluation, IdentityCase, Residual,
    UnknownIdentityError, decide, export_catalog, functional_eq_residual, lookup, registry,
    select, summarize, verify, verify_suite,
)

__all__ = [
    "EXPECTATIONS", "FAMILIES", "TOLERANCES", "VERDICTS", "Evaluation", "IdentityCase",
    "Residual", "UnknownIdentityError", "decide", "export_catalog", "functional_eq_residual",
    "lookup", "registry", "select", "summarize", "verify", "verify_suite",
]

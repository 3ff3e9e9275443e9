"""Importing this package registers every identity case."""
from . import hyperquadrant_cases, polylog_cases, pyramid_cases, series_cases  # noqa: F401

"""Tripartite entanglement of Dirac and scalar fields in Rindler frames."""

from ._tangle import *  # noqa: F401,F403
from ._tangle import CSV_HEADER, Field, Method, evaluate_closed_form, evaluate_numeric, sweep_csv, verify

__all__ = [
    "CSV_HEADER",
    "Field",
    "Method",
    "evaluate_closed_form",
    "evaluate_numeric",
    "sweep_csv",
    "verify",
]

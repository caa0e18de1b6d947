"""Exact checks for the restricted quantum group at q = exp(i pi / p)."""

import json

from ._core import (
    DEFAULT_BUDGET,
    catalan,
    commutant_dim,
    conjecture,
    conventions,
    decomposition,
    dimension,
    gamma,
    qint,
    relation_ids,
    report,
    verify,
)

__all__ = [
    "DEFAULT_BUDGET",
    "catalan",
    "commutant_dim",
    "conjecture",
    "conventions",
    "decomposition",
    "dimension",
    "gamma",
    "qint",
    "relation_ids",
    "report",
    "report_json",
    "verify",
]


def report_json(command, **kwargs):
    """Runs a report and returns (exit_code, parsed JSON)."""
    code, text = report(command, format="json", **kwargs)
    return code, json.loads(text)

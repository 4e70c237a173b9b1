"""Picard-Vessiot rings and Galois groups of small difference systems."""

import json

from ._core import (
    PvkitError,
    dispersion,
    invariant_factors,
    parse_expression,
    relation_lattice,
    solve_add,
    solve_mult,
    torsion_order,
    verify_examples,
)
from ._core import run_json as _run_json

__all__ = [
    "PvkitError",
    "basechange",
    "check_connection",
    "dispersion",
    "group",
    "invariant_factors",
    "invariants",
    "parse_expression",
    "pv",
    "relation_lattice",
    "run",
    "solve_add",
    "solve_mult",
    "torsion_order",
    "verify_examples",
]


def run(command, system="", sigma="shift", q="2", ext="", u="", v="", m_max=12, degree_bound=6):
    """Run a report command and return the decoded JSON report.

    Engine errors come back inside the report under "error" and also raise PvkitError.
    """
    code, text = _run_json(command, system, sigma, str(q), ext, u, v, m_max, degree_bound)
    report = json.loads(text)
    if "error" in report:
        raise PvkitError(report["error"]["message"])
    return report


def pv(system, **kw):
    return run("pv", system, **kw)


def group(system, **kw):
    return run("group", system, **kw)


def invariants(system, **kw):
    return run("invariants", system, **kw)


def basechange(system, ext, **kw):
    return run("basechange", system, ext=ext, **kw)


def check_connection(system, u, v, **kw):
    return run("check-connection", system, u=u, v=v, **kw)

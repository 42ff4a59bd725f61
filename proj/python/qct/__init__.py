"""Exact constant-term engine for q-series product identities.

Thin convenience layer over the compiled module: values cross the boundary
as canonical printed polynomials, grid reports as parsed dictionaries.
"""

import json

try:
    from . import _qct  # installed package layout
except ImportError:  # in-tree builds put the compiled module on sys.path
    import _qct

ParseError = _qct.ParseError

evaluate = _qct.evaluate
morris = _qct.morris
identities = _qct.identities


def verify(name, overrides=None, jobs=1, budget=0, keep_reports=True):
    """Run one identity over its grid; reports come back as dictionaries."""
    summary = _qct.verify(name, overrides or {}, jobs, budget, keep_reports)
    summary["reports"] = [json.loads(line) for line in summary["reports"]]
    return summary


__all__ = ["ParseError", "evaluate", "morris", "identities", "verify"]

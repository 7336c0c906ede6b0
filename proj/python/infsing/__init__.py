"""Python front end for the infsing C++ core.

Reports come back as plain dictionaries with the same layout as the CLI's
JSON output; rationals are strings such as "-1/4".
"""

import json

from . import _infsing
from ._infsing import (
    DEFAULT_SEED,
    Inconsistency,
    UnsupportedInput,
    canonical,
    chi_smooth,
    local_milnor,
    local_milnor_oracle,
    total_mu,
)

__all__ = [
    "DEFAULT_SEED",
    "Inconsistency",
    "UnsupportedInput",
    "analyze",
    "analyze_file",
    "audit",
    "audit_file",
    "canonical",
    "chi_smooth",
    "local_milnor",
    "local_milnor_oracle",
    "total_mu",
]


def _strs(values):
    return [str(v) for v in values or []]


def analyze(vars, f, s=None, param="s", seed=DEFAULT_SEED):
    """Ledgers of f_s for each requested s (default: the standard sample set)."""
    return json.loads(_infsing.analyze_json(list(vars), f, _strs(s), param, seed))


def audit(vars, f, samples=None, param="s", seed=DEFAULT_SEED):
    return json.loads(_infsing.audit_json(list(vars), f, _strs(samples), param, seed))


def analyze_file(path, s=None, seed=DEFAULT_SEED):
    return json.loads(_infsing.analyze_file_json(str(path), _strs(s), seed))


def audit_file(path, samples=None, seed=DEFAULT_SEED):
    return json.loads(_infsing.audit_file_json(str(path), _strs(samples), seed))

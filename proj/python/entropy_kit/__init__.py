"""Unified (q,s)-entropies, Fannes-type continuity bounds and randomized
inequality checks.

Classical functions take a sequence of probabilities; quantum functions take a
square complex (or real) numpy array holding a density matrix.
"""

import json

from ._entropy_kit import (
    EntropyKitError,
    OutOfValidity,
    check_names,
    fannes_tsallis_high_q,
    fannes_tsallis_low_q,
    lipschitz_bound,
    max_unified,
    renyi,
    shannon,
    stability_ratio,
    stability_ratio_bound,
    thermodynamic_limit_ratio,
    trace_distance,
    tsallis,
    type_q,
    unified,
    unified_fannes_bound,
    unified_quantum,
    von_neumann,
)
from ._entropy_kit import _run_check

__all__ = [
    "EntropyKitError",
    "OutOfValidity",
    "check_names",
    "fannes_tsallis_high_q",
    "fannes_tsallis_low_q",
    "lipschitz_bound",
    "max_unified",
    "renyi",
    "run_check",
    "shannon",
    "stability_ratio",
    "stability_ratio_bound",
    "thermodynamic_limit_ratio",
    "trace_distance",
    "tsallis",
    "type_q",
    "unified",
    "unified_fannes_bound",
    "unified_quantum",
    "von_neumann",
]


def run_check(name, trials=1000, seed=42, params=(), q_grid=(), dims=(), negative_control=False):
    """Run a check suite and return its reports as dicts.

    Each dict carries the report fields plus ``ok``: whether the suite met its
    expected outcome (no failures, or at least one violation for the
    subadditivity search). ``params`` is a sequence of (q, s) pairs.
    """
    out = []
    for text, ok in _run_check(name, trials, seed, list(params), list(q_grid), list(dims), negative_control):
        report = json.loads(text)
        report["ok"] = ok
        out.append(report)
    return out

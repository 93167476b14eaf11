"""Canonical JSON writing: fixed key order, floats at 17 significant digits.

17 significant decimal digits round-trip any IEEE double exactly, so files
written through here diff cleanly across runs.
"""

from __future__ import annotations

import json

import numpy as np


class _Float17(float):
    def __repr__(self):
        return format(float(self), ".17g")


def _canonicalize(obj):
    if isinstance(obj, dict):
        return {str(k): _canonicalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonicalize(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (float, np.floating)):
        return _Float17(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_canonicalize(v) for v in obj.tolist()]
    return obj


def canonical_json(obj, indent: int | None = 2) -> str:
    """Serialize to a deterministic JSON string (insertion key order kept)."""
    return json.dumps(_canonicalize(obj), indent=indent)

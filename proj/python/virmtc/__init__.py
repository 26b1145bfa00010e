"""Premodular subcategories of Virasoro minimal model categories."""

import json

from ._core import (
    SCHEMA_VERSION,
    InvariantError,
    MinimalCategory,
    ValidationError,
    central_charge,
    run,
    weight,
)
from . import _core

__all__ = [
    "SCHEMA_VERSION",
    "InvariantError",
    "MinimalCategory",
    "ValidationError",
    "central_charge",
    "extension_ring",
    "glue",
    "run",
    "subcategories",
    "weight",
]


def subcategories(p, q):
    """Fusion-closed subcategories of C_{p,q} with modularity and Mueger center."""
    return json.loads(MinimalCategory(p, q).subcategories_json())


def glue(p1, q1, name1, p2, q2, name2):
    return json.loads(_core.glue_json(p1, q1, name1, p2, q2, name2))


def extension_ring(p):
    """Resolved fusion ring of the simple-current extension at q = p + 1."""
    return json.loads(_core.extension_json(p))

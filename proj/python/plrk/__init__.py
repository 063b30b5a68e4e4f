"""Exact symbolic kernel for (pre-)Lie-Rinehart algebras.

The heavy lifting lives in the C++ extension ``plrk._core``; every operation
speaks the same JSON schemas as the ``plrk`` command line tool.
"""

import json

from ._core import (
    PlrkError,
    cohomology_dims,
    crossed_to_strict,
    delta,
    extend,
    poly_mul,
    rmatrix,
    strict_to_crossed,
    sub_adjacent,
    tree_basis_count,
    verify,
)

__all__ = [
    "PlrkError",
    "cohomology_dims",
    "crossed_to_strict",
    "delta",
    "extend",
    "poly_mul",
    "rmatrix",
    "strict_to_crossed",
    "sub_adjacent",
    "tree_basis_count",
    "verify",
    "verify_dict",
]


def verify_dict(structure):
    """Verify a structure given as a dict; returns the report as a dict."""
    return json.loads(verify(json.dumps(structure)))

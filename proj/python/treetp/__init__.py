"""Exact checks of total positivity relative to a labelled tree.

Matrices are square nested sequences of ints, ``fractions.Fraction`` or
``"p/q"`` strings; exact results come back as ``Fraction``. Trees are given
either as a spec string (``"star:5"``, ``"star:5:2"``, ``"path:4"``,
``"pitchfork"``, ``"file:<path>"``) or as an ``(n, [(u, v), ...])`` pair.
Structured reports are returned as plain dicts with the same layout as the
CLI's ``--json`` output.
"""

import json

from . import _core
from ._core import (
    ParseError,
    adjoint_mismatches,
    adjugate,
    char_poly,
    det,
    enumerate_trees,
    fixture_matrix,
    fixture_names,
    fixture_tree,
    format_matrix,
    maximal_paths,
    minor,
    parse_matrix,
    sylvester_rhs,
    tree_edges,
    tree_signing,
)

__all__ = [
    "ParseError",
    "adjoint_mismatches",
    "adjugate",
    "char_poly",
    "check",
    "det",
    "enumerate_trees",
    "fixture_matrix",
    "fixture_names",
    "fixture_tree",
    "format_matrix",
    "is_p_matrix",
    "is_t_tp",
    "is_tp",
    "maximal_paths",
    "minor",
    "parse_matrix",
    "reproduce",
    "search",
    "smallest_eig_vector",
    "sylvester_rhs",
    "test_conjecture",
    "tree_edges",
    "tree_signing",
]


def is_tp(matrix, mode="initial"):
    return json.loads(_core.is_tp(matrix, mode))


def is_t_tp(matrix, tree, mode="initial"):
    return json.loads(_core.is_t_tp(matrix, tree, mode))


def check(matrix, tree, augmented=False, mode="initial"):
    return json.loads(_core.check(matrix, tree, augmented, mode))


def is_p_matrix(matrix):
    return json.loads(_core.is_p_matrix(matrix))


def smallest_eig_vector(matrix, tree):
    return json.loads(_core.smallest_eig_vector(matrix, tree))


def test_conjecture(matrix, tree, augmented=False):
    return json.loads(_core.test_conjecture(matrix, tree, augmented))


# Keep pytest from collecting the function above as a test.
test_conjecture.__test__ = False


def search(tree, trials, **options):
    """Generate hypothesis-satisfying matrices and test them.

    Options: seed, lo, hi, augmented, symmetric, repair, keep, max_attempts,
    threads.
    """
    return json.loads(_core.search(tree, trials, **options))


def reproduce(name):
    ok, lines = _core.reproduce(name)
    return {"ok": ok, "lines": [{"what": w, "ok": o, "detail": d} for w, o, d in lines]}

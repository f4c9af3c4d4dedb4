"""Identities of free associative algebras over Q."""

import json
from fractions import Fraction

from ._core import (
    Algebra,
    Error,
    Ideal,
    Polynomial,
    SyntaxError,
    case_names,
    catalog,
    commutator,
    hook_dim,
    kostka,
    lattice_dot,
    multilinearize,
    parse,
)
from . import _core


def span(ideal, multidegree):
    """Reduced basis of the consequences of the given multidegree.

    Rows are lists of (monomial, Fraction) pairs.
    """
    data = json.loads(ideal.span_json(list(multidegree)))
    rows = [
        [(word, Fraction(int(num), int(den))) for word, num, den in row]
        for row in data["rows"]
    ]
    return {"ambient_dim": data["ambient_dim"], "rank": data["rank"], "rows": rows}


def run_case(case, n_max=6, jobs=0):
    return json.loads(_core.run_case_json(case, n_max, jobs))


def verify_all(n_max=6, jobs=0):
    return json.loads(_core.verify_all_json(n_max, jobs))


__all__ = [
    "Algebra",
    "Error",
    "Ideal",
    "Polynomial",
    "SyntaxError",
    "case_names",
    "catalog",
    "commutator",
    "hook_dim",
    "kostka",
    "lattice_dot",
    "multilinearize",
    "parse",
    "run_case",
    "span",
    "verify_all",
]

"""Exact q-intersection numbers, twist words and chain-level checks."""

import json
from fractions import Fraction

from . import _qfloer
from ._qfloer import (
    DegreeError,
    DivisibilityError,
    IdentityError,
    Lattice,
    LatticeInvariantError,
    MissingTensor,
    NotASphere,
    NotEquivariant,
    QfloerError,
    SchemaError,
    SplittingError,
    UnsupportedDimension,
)

__all__ = [
    "Lattice", "pair", "twist", "single_generator", "sphere_model", "check", "table",
    "at_one", "run", "QfloerError", "SchemaError", "SplittingError", "LatticeInvariantError",
    "IdentityError", "NotEquivariant", "NotASphere", "MissingTensor", "DivisibilityError",
    "UnsupportedDimension", "DegreeError",
]


def _laurent(text):
    # {exponent: coefficient}
    return {Fraction(e): Fraction(c) for c, e in json.loads(text)}


def at_one(value):
    return sum(value.values(), Fraction(0))


def pair(lattice, i, j):
    return _laurent(lattice.pair_json(i, j))


def twist(lattice, word, i, j):
    """word is a list of (sphere index, +1 or -1); the first letter acts first."""
    return _laurent(lattice.twist_json(list(word), i, j))


def _table(text):
    t = json.loads(text)
    entries = {(e["degree"], Fraction(e["weight"])): e["dim"] for e in t["entries"]}
    q = {Fraction(e): Fraction(c) for c, e in t["q_intersection"]}
    return entries, q


def single_generator(n, k):
    return _table(_qfloer.single_generator_json(n, k))


def sphere_model(n, k=1, acyclic_pair=False):
    """Model JSON text for K[x]/x^(k+1), the sphere when k = 1."""
    return _qfloer.model_json(n, k, acyclic_pair)


def check(model):
    return json.loads(_qfloer.check_json(model))


def table(model, l0, l1):
    return _table(_qfloer.table_json(model, l0, l1))


def run(*args):
    """Runs the command line tool in-process; returns (exit code, stdout, stderr)."""
    return _qfloer.run([str(a) for a in args])

"""Exact normal forms, blow-up charts and cocycle matrices.

Rationals come back as :class:`fractions.Fraction`; parameter points are
passed around as parameter-file text (``M``, ``N``, then ``a k i value`` /
``b k i value`` lines).
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _nqh
from ._nqh import (
    InternalConsistency,
    InvalidInput,
    InvalidParameters,
    UnsupportedRange,
    dimension,
    max_level,
    parameter_indices,
)

__all__ = [
    "InternalConsistency",
    "InvalidInput",
    "InvalidParameters",
    "UnsupportedRange",
    "basis",
    "bezout",
    "dimension",
    "matrix",
    "max_level",
    "normal_form",
    "parameter_indices",
    "parse_parameters",
    "sample_parameters",
    "strict_transform",
    "verify",
]


def _q(s: str) -> Fraction:
    return Fraction(s)


def _text(params) -> str:
    if isinstance(params, str):
        return params
    M, N, values = params["M"], params["N"], params["values"]
    lines = [f"M {M}", f"N {N}"]
    for name, v in values.items():
        fam, idx = name.split("_")
        k, i = idx.split(",")
        v = Fraction(v)
        lines.append(f"{fam} {k} {i} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def parse_parameters(text: str) -> dict:
    """Parameter file text -> {"M", "N", "values": {"a_k,i": Fraction}}."""
    out = {"values": {}}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] in ("M", "N"):
            out[parts[0]] = int(parts[1])
        else:
            out["values"][f"{parts[0]}_{parts[1]},{parts[2]}"] = _q(parts[3])
    return out


def sample_parameters(M: int, N: int, seed: int) -> dict:
    return parse_parameters(_nqh.sample_parameters(M, N, seed))


def basis(M: int, N: int) -> list[dict]:
    return json.loads(_nqh.basis_json(M, N))


def normal_form(params) -> tuple[list[str], str]:
    return _nqh.normal_form(_text(params))


def strict_transform(params, chart: str = "v4") -> tuple[int, int, str]:
    return _nqh.strict_transform(_text(params), chart)


def bezout(F) -> dict[str, list[Fraction]]:
    """G = W F' + Z F with G = gcd(F, F') monic; F given by increasing-degree coefficients."""
    raw = _nqh.bezout([str(Fraction(c)) for c in F])
    return {k: [_q(c) for c in v] for k, v in raw.items()}


def matrix(params, seed: int = 0, level: int | None = None) -> dict:
    """Exact cocycle matrix report; entries and determinants as Fractions."""
    doc = json.loads(_nqh.matrix_json(_text(params), seed, level))
    doc["entries"] = [[_q(x) for x in row] for row in doc["entries"]]
    doc["determinants"] = {k: _q(v) for k, v in doc["determinants"].items()}
    return doc


def verify(M: int, N: int, seed: int = 1, trials: int = 3) -> dict:
    return json.loads(_nqh.verify_json(M, N, seed, trials))

"""JSON wire formats.

Rationals travel as decimal strings "p/q" with "/q" omitted for integers.
Matrices are {"rows": r, "cols": c, "entries": [[...row...], ...]} row-major;
subspaces are {"n": n, "basis": [matrix, ...]}.  Serialization is canonical:
re-serializing a parsed object is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .matrices import Matrix
from .subspaces import MatrixSubspace


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def matrix_to_obj(m: Matrix) -> dict[str, Any]:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_rational(v) for v in m.row(i)] for i in range(m.rows)],
    }


def matrix_from_obj(obj: dict[str, Any]) -> Matrix:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = obj["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("matrix entries do not match the declared shape")
    return Matrix.from_rows([[parse_rational(v) for v in row] for row in entries])


def subspace_to_obj(v: MatrixSubspace) -> dict[str, Any]:
    return {"n": v.n, "basis": [matrix_to_obj(b) for b in v.basis]}


def subspace_from_obj(obj: dict[str, Any]) -> MatrixSubspace:
    n = int(obj["n"])
    return MatrixSubspace.span([matrix_from_obj(b) for b in obj["basis"]], n)


def dumps_canonical(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, no whitespace jitter."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)

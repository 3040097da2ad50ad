"""On-disk formats: states, correlation rows, unitaries, and the analyze report.

Everything is JSON with complex entries stored as [re, im] pairs, one matrix
row per line.  Floats serialize through repr (shortest round-trip form, up to
17 significant digits), so save/load is bit-exact and files diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import DimensionError, ParseError
from .linalg import DensityMatrix


def _complex_rows(mat: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in mat]


def _matrix_document(header: dict, mat: np.ndarray) -> str:
    lines = ["{"]
    for key, value in header.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(value)},")
    lines.append('  "matrix": [')
    rows = _complex_rows(mat)
    for i, row in enumerate(rows):
        comma = "," if i < len(rows) - 1 else ""
        lines.append(f"    {json.dumps(row)}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _parse_complex_matrix(obj: Any, what: str) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"{what}: 'matrix' must be a non-empty array of rows")
    n = len(obj)
    mat = np.empty((n, n), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{what}: row {i} must hold {n} entries")
        for j, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)
            ):
                raise ParseError(f"{what}: entry ({i}, {j}) must be an [re, im] pair")
            mat[i, j] = complex(pair[0], pair[1])
    return mat


def state_document(rho: DensityMatrix) -> str:
    """Serialize a state; inverse of :func:`parse_state_document`."""
    return _matrix_document({"dims": [rho.dim_a, rho.dim_b]}, rho.mat)


def parse_state_document(text: str) -> DensityMatrix:
    obj = _load_json(text)
    if not isinstance(obj, dict) or "dims" not in obj or "matrix" not in obj:
        raise ParseError("state file needs 'dims' and 'matrix' fields")
    dims = obj["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and d >= 1 for d in dims)
    ):
        raise ParseError("'dims' must be two positive integers")
    mat = _parse_complex_matrix(obj["matrix"], "state file")
    if mat.shape[0] != dims[0] * dims[1]:
        raise DimensionError(
            f"matrix size {mat.shape[0]} does not match dims {dims[0]}x{dims[1]}"
        )
    return DensityMatrix(mat, dims[0], dims[1])


def save_state(rho: DensityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(state_document(rho))


def load_state(path) -> DensityMatrix:
    with open(path, "r", encoding="utf-8") as f:
        return parse_state_document(f.read())


def unitary_document(u: np.ndarray) -> str:
    return _matrix_document({}, np.asarray(u, dtype=complex))


def parse_unitary_document(text: str) -> np.ndarray:
    obj = _load_json(text)
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ParseError("unitary file needs a 'matrix' field")
    return _parse_complex_matrix(obj["matrix"], "unitary file")


def save_unitary(u: np.ndarray, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(unitary_document(u))


def load_unitary(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as f:
        return parse_unitary_document(f.read())


def rows_document(dim_a: int, dim_b: int, rows) -> str:
    lines = ["{", f'  "dims": {json.dumps([dim_a, dim_b])},', '  "rows": [']
    entries = [
        {"a_index": int(a_index), "values": [float(v) for v in values]}
        for a_index, values in rows
    ]
    for i, entry in enumerate(entries):
        comma = "," if i < len(entries) - 1 else ""
        lines.append(f"    {json.dumps(entry)}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_rows_document(text: str):
    """Returns (dim_a, dim_b, [(a_index, vector), ...])."""
    obj = _load_json(text)
    if not isinstance(obj, dict) or "dims" not in obj or "rows" not in obj:
        raise ParseError("rows file needs 'dims' and 'rows' fields")
    dims = obj["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and d >= 2 for d in dims)
    ):
        raise ParseError("'dims' must be two integers >= 2")
    rows = []
    if not isinstance(obj["rows"], list) or not obj["rows"]:
        raise ParseError("'rows' must be a non-empty array")
    for i, entry in enumerate(obj["rows"]):
        if not isinstance(entry, dict) or "a_index" not in entry or "values" not in entry:
            raise ParseError(f"row {i} needs 'a_index' and 'values'")
        values = entry["values"]
        if not isinstance(values, list) or len(values) != dims[1] ** 2:
            raise ParseError(f"row {i} must hold {dims[1] ** 2} values")
        rows.append((int(entry["a_index"]), np.asarray(values, dtype=float)))
    return dims[0], dims[1], rows


def save_rows(dim_a: int, dim_b: int, rows, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(rows_document(dim_a, dim_b, rows))


def load_rows(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_rows_document(f.read())


@dataclass
class DiscordReport:
    """Composite analyze output; optional sections appear when dims permit."""

    dim_a: int
    dim_b: int
    is_zero_discord: bool
    rank_l: int
    witness_triggered: bool
    max_commutator: float
    mutual_information: float
    geometric_discord: float | None = None
    entropic_discord: dict | None = None
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {
            "dims": [self.dim_a, self.dim_b],
            "is_zero_discord": self.is_zero_discord,
            "rank_L": self.rank_l,
            "witness_triggered": self.witness_triggered,
            "max_commutator": self.max_commutator,
            "mutual_information": self.mutual_information,
            "timings": self.timings,
        }
        if self.geometric_discord is not None:
            doc["geometric_discord"] = self.geometric_discord
        if self.entropic_discord is not None:
            doc["entropic_discord"] = self.entropic_discord
        return doc


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

"""
Output formats.

Field elements are written as integers in the polynomial-basis encoding of
GF(q^2); every document records the modulus so files are self-describing.

- ``agq-matrix v1``: a header line
  ``agq-matrix v1 q2=<Q2> modulus=<hex> rows=<k> cols=<n>`` followed by one
  space-separated row per line.
- JSON: one document per command, keys sorted, validated by
  docs/schema/agq-output.schema.json.
- CSV: fixed column order per command, see :data:`CSV_COLUMNS`, with the
  field and any matrices as `#` comment lines.
- text: the same columns aligned for reading, with matrices appended.
"""

import csv
import io
import json
import logging
import math
import re
from collections.abc import Mapping, Sequence
from typing import Any

import galois
import numpy as np

from agq.field import FieldCtx, new_field

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

CSV_COLUMNS: dict[str, tuple[str, ...]] = {
    "construct": (
        "curve",
        "q",
        "m",
        "n",
        "k",
        "genus",
        "designed_distance",
        "dual_designed_distance",
        "points_digest",
    ),
    "verify": (
        "curve",
        "q",
        "m",
        "k",
        "duality",
        "euclidean",
        "euclidean_guaranteed",
        "hermitian",
        "hermitian_guaranteed",
        "passed",
    ),
    "distance": ("curve", "q", "m", "code", "n", "k", "lower", "upper", "exact", "method", "work"),
    "quantum": (
        "curve",
        "q",
        "m",
        "n",
        "k_q",
        "d_lower",
        "d_exact",
        "d_upper",
        "in_theorem_range",
        "distance_method",
        "singleton_defect",
        "hamming",
        "note",
    ),
    "scan": ("curve", "q", "m", "k", "hermitian", "guaranteed"),
    "table": (
        "example",
        "curve",
        "q",
        "m",
        "claimed",
        "formula",
        "computed",
        "status",
        "expected",
        "note",
        "reference",
        "reference_source",
        "vs_reference",
    ),
}

_HEADER = re.compile(
    r"^agq-matrix v(?P<version>\d+) q2=(?P<q2>\d+) modulus=(?P<modulus>0x[0-9a-fA-F]+)"
    r" rows=(?P<rows>\d+) cols=(?P<cols>\d+)$"
)


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------
def field_header(field: FieldCtx) -> dict[str, Any]:
    return {"q": field.q, "q2": field.q2, "modulus": f"{field.modulus:#x}"}


def matrix_rows(matrix: galois.FieldArray) -> list[list[int]]:
    return matrix.view(np.ndarray).astype(np.int64).tolist()


def format_matrix(field: FieldCtx, matrix: galois.FieldArray) -> str:
    rows, cols = matrix.shape
    lines = [f"agq-matrix v{FORMAT_VERSION} q2={field.q2} modulus={field.modulus:#x} rows={rows} cols={cols}"]
    lines.extend(" ".join(str(v) for v in row) for row in matrix_rows(matrix))
    return "\n".join(lines) + "\n"


def read_matrix(text: str) -> tuple[FieldCtx, galois.FieldArray]:
    """
    Parse an ``agq-matrix v1`` document.

    Raises:
        ValueError: malformed header, unknown field or modulus, wrong shape, or
            entries outside the field.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix document")
    header = _HEADER.match(lines[0].strip())
    if header is None:
        raise ValueError(f"not an agq-matrix header: {lines[0]!r}")
    if int(header["version"]) != FORMAT_VERSION:
        raise ValueError(f"unsupported agq-matrix version {header['version']}")

    q2 = int(header["q2"])
    degree = q2.bit_length() - 1
    if q2 < 4 or q2 & (q2 - 1) or degree % 2:
        raise ValueError(f"q2={q2} is not an even power of two")
    field = new_field(degree // 2)
    if int(header["modulus"], 16) != field.modulus:
        raise ValueError(f"modulus {header['modulus']} does not match the built-in {field.modulus:#x}")

    rows, cols = int(header["rows"]), int(header["cols"])
    body = [[int(tok) for tok in line.split()] for line in lines[1:]]
    if len(body) != rows or any(len(r) != cols for r in body):
        raise ValueError(f"matrix body does not have shape {rows}x{cols}")
    values = np.array(body, dtype=np.int64).reshape(rows, cols)
    if values.size and (values.min() < 0 or values.max() >= q2):
        raise ValueError(f"matrix entries must lie in 0..{q2 - 1}")
    return field, field.gf(values)


# ----------------------------------------------------------------------
# Documents
# ----------------------------------------------------------------------
def json_value(value: Any) -> Any:
    """Infinite distances become the string 'inf'; numpy scalars become Python ints."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, np.integer):
        return int(value)
    return value


def document(
    command: str,
    rows: Sequence[Mapping[str, Any]],
    *,
    field: FieldCtx | None = None,
    parameters: Mapping[str, Any] | None = None,
) -> dict[str, Any]:
    return {
        "agq": FORMAT_VERSION,
        "command": command,
        "field": field_header(field) if field is not None else None,
        "parameters": dict(parameters or {}),
        "rows": [{key: json_value(v) for key, v in row.items()} for row in rows],
    }


def to_json(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    value = json_value(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _field_comment(doc: Mapping[str, Any]) -> list[str]:
    f = doc.get("field")
    return [f"# field GF({f['q2']}) modulus {f['modulus']}"] if f else []


def to_csv(doc: Mapping[str, Any], matrices: Sequence[tuple[str, str]] = ()) -> str:
    """
    Fixed columns with ``#`` comment lines around them.

    The field line comes first; matrices follow the rows as ``# <label>`` and
    then the ``agq-matrix`` block with every line prefixed by ``# ``.
    """
    columns = CSV_COLUMNS[doc["command"]]
    buffer = io.StringIO()
    for line in _field_comment(doc):
        buffer.write(line + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in doc["rows"]:
        writer.writerow([_cell(row.get(c)) for c in columns])
    for label, text in matrices:
        buffer.write(f"# {label}\n")
        buffer.writelines(f"# {line}\n" for line in text.splitlines())
    return buffer.getvalue()


def matrix_from_csv(text: str, label: str) -> tuple[FieldCtx, galois.FieldArray]:
    """Read back the matrix written under ``# <label>`` by :func:`to_csv`."""
    lines = text.splitlines()
    try:
        start = lines.index(f"# {label}") + 1
    except ValueError:
        raise ValueError(f"no matrix labelled {label!r}") from None
    block = lines[start : start + 1]
    for line in lines[start + 1 :]:
        if not re.fullmatch(r"# [\d ]+", line):
            break
        block.append(line)
    return read_matrix("\n".join(line.removeprefix("# ") for line in block))


def to_text(doc: Mapping[str, Any], matrices: Sequence[tuple[str, str]] = ()) -> str:
    """Aligned columns; ``matrices`` are (label, agq-matrix text) pairs appended at the end."""
    columns = CSV_COLUMNS[doc["command"]]
    table = [list(columns)] + [[_cell(row.get(c)) for c in columns] for row in doc["rows"]]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]

    lines = [f"# agq {doc['command']}", *_field_comment(doc)]
    for key, value in sorted(doc.get("parameters", {}).items()):
        lines.append(f"# {key}: {_cell(value)}")
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table)
    for label, text in matrices:
        lines.append(f"# {label}")
        lines.append(text.rstrip("\n"))
    return "\n".join(lines) + "\n"


def render(doc: Mapping[str, Any], fmt: str, matrices: Sequence[tuple[str, str]] = ()) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc, matrices)
    if fmt == "text":
        return to_text(doc, matrices)
    raise ValueError(f"unknown output format {fmt!r}")

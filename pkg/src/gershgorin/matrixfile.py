"""The JSON matrix file format.

A matrix file is a single JSON object ``{"n": 2, "entries": [[re, im],
...]}`` with exactly n*n row-major ``[re, im]`` pairs, all finite.
:func:`serialize_matrix` emits the canonical single-line form (floats via
shortest round-trip repr), so serialize(parse(file)) is byte-identical for
canonical files.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import MatrixFileError
from .matrix import as_matrix


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MatrixFileError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise MatrixFileError(f"{where}: entries must be finite")
    return float(value)


def parse_matrix(path) -> np.ndarray:
    """Read and validate a matrix file; raises MatrixFileError with context."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as err:
        raise MatrixFileError(f"cannot read {p}: {err}") from err
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise MatrixFileError(
            f"{p}: invalid JSON at line {err.lineno} column {err.colno}: "
            f"{err.msg}") from err
    if not isinstance(doc, dict):
        raise MatrixFileError(f"{p}: top-level value must be an object")
    if "n" not in doc or "entries" not in doc:
        raise MatrixFileError(f"{p}: object must carry fields 'n' and 'entries'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MatrixFileError(f"{p}: field 'n' must be a positive integer")
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise MatrixFileError(f"{p}: field 'entries' must be a list")
    if len(entries) != n * n:
        raise MatrixFileError(
            f"{p}: expected {n * n} entries, got {len(entries)}")
    values = np.empty(n * n, dtype=complex)
    for k, pair in enumerate(entries):
        where = f"{p}: entry {k}"
        if not isinstance(pair, list) or len(pair) != 2:
            raise MatrixFileError(f"{where}: expected a [re, im] pair")
        values[k] = complex(_require_number(pair[0], where),
                            _require_number(pair[1], where))
    return values.reshape(n, n)


def serialize_matrix(a) -> str:
    """Canonical single-line JSON form of a matrix, trailing newline included."""
    a = as_matrix(a)
    n = a.shape[0]
    entries = [[float(v.real), float(v.imag)] for v in a.reshape(-1)]
    return json.dumps({"n": n, "entries": entries}) + "\n"


def write_matrix(a, path) -> None:
    Path(path).write_text(serialize_matrix(a), encoding="utf-8")

"""Plain-text mesh/vector files and Matrix Market matrices.

Floats are written with 17 significant digits, enough to reproduce any
double bit-exactly on read-back.
"""

from __future__ import annotations

import re

import numpy as np

from .assembly import SparseBandMatrix
from .errors import FileFormatError
from .mesh import Mesh, validate

_MM_BANNER = "%%MatrixMarket"
_MM_KIND = ("matrix", "coordinate", "real", "general")
_META_RE = re.compile(r"^%\s*order=(\d+)\s+stencil_width=(\d+)\s*$")


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def read_values(path) -> np.ndarray:
    """Floats from a one-value-per-line file; '#' starts a comment."""
    vals = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                vals.append(float(text))
            except ValueError:
                raise FileFormatError(
                    f"{path}:{lineno}: expected one number, got {text!r}"
                ) from None
    return np.asarray(vals, dtype=float)


def write_values(path, values) -> None:
    with open(path, "w") as fh:
        for v in np.asarray(values, dtype=float):
            fh.write(_fmt(v) + "\n")


def read_mesh(path) -> Mesh:
    return validate(read_values(path))


def write_mesh(path, mesh: Mesh) -> None:
    write_values(path, mesh.points)


def write_matrix(path, matrix: SparseBandMatrix) -> None:
    """Matrix Market coordinate form, 1-based indices, windows intact.

    Stored zeros are written out, so nnz is rows times window width and a
    read-back reproduces the matrix bit-exactly.  Order and stencil width
    ride along in a comment line.
    """
    with open(path, "w") as fh:
        fh.write(f"{_MM_BANNER} {' '.join(_MM_KIND)}\n")
        if matrix.order is not None and matrix.stencil_width is not None:
            fh.write(f"% order={matrix.order} stencil_width={matrix.stencil_width}\n")
        fh.write(f"{matrix.n_rows} {matrix.n_cols} {matrix.nnz}\n")
        for i in range(matrix.n_rows):
            start = int(matrix.col_start[i])
            for k in range(matrix.width):
                fh.write(f"{i + 1} {start + k + 1} {_fmt(matrix.data[i, k])}\n")


def read_matrix(path) -> SparseBandMatrix:
    """Read a Matrix Market file whose rows form contiguous uniform windows."""
    with open(path) as fh:
        lines = fh.readlines()
    pos = 0
    if pos >= len(lines):
        raise FileFormatError(f"{path}: empty file")
    header = lines[pos].split()
    pos += 1
    if (
        len(header) != 5
        or header[0] != _MM_BANNER
        or tuple(t.lower() for t in header[1:]) != _MM_KIND
    ):
        raise FileFormatError(
            f"{path}: expected header '{_MM_BANNER} {' '.join(_MM_KIND)}'"
        )
    order = width_meta = None
    while pos < len(lines) and lines[pos].lstrip().startswith("%"):
        meta = _META_RE.match(lines[pos].strip())
        if meta:
            order, width_meta = int(meta.group(1)), int(meta.group(2))
        pos += 1
    while pos < len(lines) and not lines[pos].strip():
        pos += 1
    if pos >= len(lines):
        raise FileFormatError(f"{path}: missing size line")
    try:
        n_rows, n_cols, nnz = (int(t) for t in lines[pos].split())
    except ValueError:
        raise FileFormatError(f"{path}: bad size line {lines[pos]!r}") from None
    pos += 1
    entries = {}
    seen = 0
    for lineno in range(pos, len(lines)):
        text = lines[lineno].strip()
        if not text:
            continue
        parts = text.split()
        try:
            if len(parts) != 3:
                raise ValueError
            r, c, v = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise FileFormatError(
                f"{path}:{lineno + 1}: expected 'row col value', got {text!r}"
            ) from None
        if not (1 <= r <= n_rows and 1 <= c <= n_cols):
            raise FileFormatError(f"{path}:{lineno + 1}: index out of range")
        row = entries.setdefault(r - 1, {})
        if c - 1 in row:
            raise FileFormatError(f"{path}:{lineno + 1}: duplicate entry")
        row[c - 1] = v
        seen += 1
    if seen != nnz:
        raise FileFormatError(f"{path}: size line promises {nnz} entries, found {seen}")
    widths = {len(row) for row in entries.values()}
    if len(entries) != n_rows or len(widths) != 1:
        raise FileFormatError(f"{path}: rows do not share one window width")
    width = widths.pop()
    col_start = np.empty(n_rows, dtype=int)
    data = np.empty((n_rows, width))
    for i in range(n_rows):
        cols = sorted(entries[i])
        if cols != list(range(cols[0], cols[0] + width)):
            raise FileFormatError(f"{path}: row {i + 1} window is not contiguous")
        col_start[i] = cols[0]
        data[i] = [entries[i][c] for c in cols]
    return SparseBandMatrix(
        n_rows, n_cols, col_start, data, order=order, stencil_width=width_meta
    )

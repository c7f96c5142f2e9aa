"""Plain-text density-matrix files.

Line 1 is a header "da db" (db = 0 marks a single-system matrix); every
following line is one matrix entry "re im", row-major. Lines starting with
'#' and blank lines are ignored. Explicit real/imag columns keep the format
trivially parseable from any language.
"""

from __future__ import annotations

import numpy as np

__all__ = ["MatrixFileError", "parse_matrix_file", "write_matrix_file"]


class MatrixFileError(ValueError):
    """Malformed matrix file; the message names the offending line."""


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_matrix_file(path) -> tuple[np.ndarray, int, int]:
    """Read a matrix file, returning (matrix, da, db) with db = 0 for single-system."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = _significant_lines(text)

    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MatrixFileError(f"{path}: empty file, expected a 'da db' header") from None
    fields = header.split()
    if len(fields) != 2:
        raise MatrixFileError(f"{path}: line {lineno}: header must be 'da db', got {header!r}")
    try:
        da, db = int(fields[0]), int(fields[1])
    except ValueError:
        raise MatrixFileError(
            f"{path}: line {lineno}: header must hold two integers, got {header!r}"
        ) from None
    if da < 1 or db < 0:
        raise MatrixFileError(f"{path}: line {lineno}: bad dimensions da={da} db={db}")

    n = da * max(db, 1)
    expected = n * n
    entries = np.empty(expected, dtype=complex)
    count = 0
    for lineno, line in lines:
        if count >= expected:
            raise MatrixFileError(
                f"{path}: line {lineno}: expected {expected} entries, found more"
            )
        fields = line.split()
        if len(fields) != 2:
            raise MatrixFileError(
                f"{path}: line {lineno}: entry must be 're im', got {line!r}"
            )
        try:
            entries[count] = complex(float(fields[0]), float(fields[1]))
        except ValueError:
            raise MatrixFileError(
                f"{path}: line {lineno}: non-numeric token in {line!r}"
            ) from None
        count += 1
    if count != expected:
        raise MatrixFileError(f"{path}: expected {expected} entries, got {count}")
    return entries.reshape(n, n), da, db


def write_matrix_file(path, rho, da: int, db: int = 0) -> None:
    """Write a matrix in the format parse_matrix_file reads back."""
    rho = np.asarray(rho, dtype=complex)
    n = da * max(db, 1)
    if rho.shape != (n, n):
        raise ValueError(f"matrix shape {rho.shape} does not match dims ({da}, {db})")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{da} {db}\n")
        for v in rho.ravel():
            fh.write(f"{v.real:.17g} {v.imag:.17g}\n")

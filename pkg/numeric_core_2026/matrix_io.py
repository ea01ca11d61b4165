# numeric_core_2026/matrix_io.py
"""Plain-text matrix files.

Line 1 is ``rows cols kind`` with kind ``real`` or ``complex``; each following line is
one matrix row of whitespace-separated entries. Complex entries are written ``a+bi``
or ``a-bi`` without spaces. Parsing never depends on the locale.
"""
import logging
import os
from typing import Union

import numpy as np

from .errors import MatrixFormatError
from .linalg import as_matrix, orthonormalize
from .subspace import Subspace
from .tolerance import DEFAULT_POLICY, TolerancePolicy

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]
REORTHONORMALIZE_WARN = 1e-8


def _parse_entry(token: str, kind: str, where: str) -> complex:
    try:
        if kind == 'real':
            return float(token)
        return complex(token.replace('i', 'j'))
    except ValueError:
        raise MatrixFormatError(f"Bad {kind} entry {token!r} at {where}") from None


def parse_matrix(text: str, source: str = '<string>') -> np.ndarray:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise MatrixFormatError(f"{source}: empty matrix file")

    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError(f"{source}: header must be 'rows cols kind', got {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatError(f"{source}: non-integer dimensions in header {lines[0]!r}") from None
    kind = header[2].lower()
    if kind not in ('real', 'complex'):
        raise MatrixFormatError(f"{source}: kind must be 'real' or 'complex', got {header[2]!r}")
    if rows <= 0 or cols <= 0:
        raise MatrixFormatError(f"{source}: dimensions must be positive, got {rows}x{cols}")
    if len(lines) - 1 != rows:
        raise MatrixFormatError(f"{source}: expected {rows} rows, found {len(lines) - 1}")

    matrix = np.empty((rows, cols), dtype=np.float64 if kind == 'real' else np.complex128)
    for i, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != cols:
            raise MatrixFormatError(f"{source}: row {i + 1} has {len(tokens)} entries, expected {cols}")
        for j, token in enumerate(tokens):
            matrix[i, j] = _parse_entry(token, kind, f"{source}:{i + 2}:{j + 1}")

    return as_matrix(matrix, source)


def format_matrix(matrix) -> str:
    arr = as_matrix(matrix)
    kind = 'complex' if np.iscomplexobj(arr) else 'real'
    out = [f"{arr.shape[0]} {arr.shape[1]} {kind}"]
    for row in arr:
        if kind == 'real':
            out.append(' '.join('%.17g' % x for x in row))
        else:
            out.append(' '.join('%.17g%+.17gi' % (z.real, z.imag) for z in row))
    return '\n'.join(out) + '\n'


def read_matrix(path: PathLike) -> np.ndarray:
    with open(path, 'r', encoding='ascii') as handle:
        return parse_matrix(handle.read(), str(path))


def write_matrix(path: PathLike, matrix):
    with open(path, 'w', encoding='ascii', newline='\n') as handle:
        handle.write(format_matrix(matrix))


def read_subspace(path: PathLike, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """Load columns and orthonormalize them, warning when that moved them noticeably."""
    raw = read_matrix(path)
    gram_error = float(np.max(np.abs(raw.conj().T @ raw - np.eye(raw.shape[1]))))
    if gram_error <= REORTHONORMALIZE_WARN:
        # Already orthonormal: keep the stored basis so replays are bit-exact
        try:
            return Subspace(raw)
        except ValueError:
            pass
    else:
        logger.warning(f"{path}: columns not orthonormal (Gram error {gram_error:.2e}); orthonormalizing")
    subspace = orthonormalize(raw, policy=policy)
    if subspace.p < raw.shape[1]:
        logger.warning(f"{path}: {raw.shape[1]} columns have numerical rank {subspace.p}")
    return subspace

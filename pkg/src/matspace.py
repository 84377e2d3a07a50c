"""
Matrix space Mat_{s×r}(F_q): exact elimination, inner products and the
Niederreiter-Rosenbloom-Tsfasman (NRT) metric.

Matrices are 2-D ``galois`` FieldArrays. Reduced forms, rank and null spaces
come from galois; the forward-only echelon form, which galois does not
provide, is written out here.
"""

from enum import Enum
from typing import List, Tuple

import galois
import numpy as np

from src.custom_exceptions import DimensionMismatchError, FieldMismatchError, ParseError
from src.field import FieldSpec, field_of

MatrixGF = galois.FieldArray


class VectorOrder(str, Enum):
    """Vectorisation order of an s×r matrix into F_q^{rs}."""

    ROW_MAJOR = "row"
    COL_MAJOR = "col"


def _ints(a: galois.FieldArray) -> np.ndarray:
    return a.view(np.ndarray)


def _same_field(a: galois.FieldArray, b: galois.FieldArray) -> None:
    if type(a) is not type(b):
        raise FieldMismatchError(str(field_of(a)), str(field_of(b)))


def rref(M: MatrixGF) -> Tuple[MatrixGF, List[int]]:
    """Reduced row echelon form and its pivot columns; zero rows sit at the bottom."""
    if M.shape[0] == 0:
        return M.copy(), []
    R = M.row_reduce()
    pivots = [int(np.flatnonzero(row)[0]) for row in _ints(R) if row.any()]
    return R, pivots


def forward_echelon(M: MatrixGF) -> MatrixGF:
    """
    Row echelon form by forward elimination only: multiples of earlier rows
    are added to later rows, pivots are not normalised, rows above a pivot
    are left alone. The pivot row is the first nonzero row at or below the
    current one.
    """
    A = M.copy()
    m, n = A.shape
    row = 0
    for col in range(n):
        if row >= m:
            break
        candidates = np.flatnonzero(_ints(A[row:, col]))
        if candidates.size == 0:
            continue
        pick = row + int(candidates[0])
        if pick != row:
            A[[row, pick]] = A[[pick, row]]
        below = [i for i in range(row + 1, m) if int(A[i, col]) != 0]
        if below:
            factors = A[below, col] / A[row, col]
            A[below] = A[below] - factors.reshape(-1, 1) * A[row].reshape(1, -1)
        row += 1
    return A


def rank(M: MatrixGF) -> int:
    if M.size == 0:
        return 0
    return int(np.linalg.matrix_rank(M))


def null_space_rref(M: MatrixGF) -> MatrixGF:
    """
    Basis of {x : M x^T = 0} in RREF, shape (n - rank) × n. A full-rank
    square input gives a 0 × n matrix.
    """
    GF = type(M)
    n = M.shape[1]
    if M.shape[0] == 0:
        return GF.Identity(n)
    if rank(M) == n:
        return GF.Zeros((0, n))
    return rref(M.null_space())[0]


def row_space_basis(M: MatrixGF) -> MatrixGF:
    """Nonzero rows of the RREF of M."""
    R, pivots = rref(M)
    return R[: len(pivots)]


def row_space_equal(A: MatrixGF, B: MatrixGF) -> bool:
    _same_field(A, B)
    if A.shape[1] != B.shape[1]:
        raise DimensionMismatchError(A.shape, B.shape)
    RA, RB = row_space_basis(A), row_space_basis(B)
    return RA.shape == RB.shape and np.array_equal(_ints(RA), _ints(RB))


def in_row_space(G: MatrixGF, v: galois.FieldArray) -> bool:
    """True when the vector v lies in the row space of G."""
    _same_field(G, v)
    if G.shape[1] != v.size:
        raise DimensionMismatchError((G.shape[1],), (v.size,))
    stacked = np.vstack([G, v.reshape(1, -1)])
    return rank(stacked) == rank(G)


def dot(A: MatrixGF, B: MatrixGF) -> galois.FieldArray:
    """Σ_{i,j} A_ij B_ij."""
    _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatchError(A.shape, B.shape)
    return np.add.reduce((A * B).reshape(-1))


def trace_dot(A: MatrixGF, B: MatrixGF) -> galois.FieldArray:
    """Tr(Aᵀ B), equal to ``dot(A, B)``."""
    _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatchError(A.shape, B.shape)
    return np.add.reduce(np.diagonal(A.T @ B).copy())


def nrt_column_weight(col: galois.FieldArray) -> int:
    """
    Weight of a length-s column: s - i + 1 where i is the 1-based index of
    the first nonzero entry, 0 for the zero column.
    """
    values = _ints(col).reshape(-1)
    nonzero = np.flatnonzero(values)
    if nonzero.size == 0:
        return 0
    return values.size - int(nonzero[0])


def nrt_weights_batch(blocks: np.ndarray) -> np.ndarray:
    """
    NRT weights of a batch of s×r integer-represented matrices with shape
    (N, s, r).
    """
    nonzero = blocks != 0
    s = blocks.shape[1]
    first = np.argmax(nonzero, axis=1)
    column_weights = np.where(nonzero.any(axis=1), s - first, 0)
    return column_weights.sum(axis=1)


def nrt_weight(A: MatrixGF) -> int:
    """Sum of the column weights of A."""
    return int(nrt_weights_batch(_ints(A)[np.newaxis, ...])[0])


def nrt_distance(A: MatrixGF, B: MatrixGF) -> int:
    _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatchError(A.shape, B.shape)
    return nrt_weight(A - B)


def vectorize(A: MatrixGF, order: VectorOrder = VectorOrder.ROW_MAJOR) -> galois.FieldArray:
    """Row-major (a_11, a_12, ...) or column-major (a_11, a_21, ...)."""
    if VectorOrder(order) is VectorOrder.ROW_MAJOR:
        return A.reshape(-1).copy()
    return A.T.reshape(-1).copy()


def devectorize(v: galois.FieldArray, s: int, r: int,
                order: VectorOrder = VectorOrder.ROW_MAJOR) -> MatrixGF:
    if v.size != s * r:
        raise DimensionMismatchError((s * r,), (v.size,))
    if VectorOrder(order) is VectorOrder.ROW_MAJOR:
        return v.reshape(s, r).copy()
    return v.reshape(r, s).T.copy()


def elementary_matrix(field: FieldSpec, s: int, r: int, i: int, j: int) -> MatrixGF:
    """E_{i,j} with 1-based (i, j)."""
    E = field.GF.Zeros((s, r))
    E[i - 1, j - 1] = 1
    return E


def format_matrix(M: MatrixGF) -> str:
    """Header ``"m n q"`` then one line per row of space-separated integers."""
    m, n = M.shape
    q = type(M).order
    lines = [f"{m} {n} {q}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in _ints(M))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, field: FieldSpec) -> MatrixGF:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("matrix", "empty input")
    return parse_matrix_lines(lines, field)


def parse_matrix_lines(lines: List[str], field: FieldSpec, offset: int = 0) -> MatrixGF:
    """Parse a header line and its rows from already split, non-empty lines."""
    try:
        m, n, q = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ParseError("matrix header", "expected 'm n q'", offset + 1)
    if q != field.q:
        raise ParseError("matrix header", f"q = {q} but field has order {field.q}",
                         offset + 1)
    if len(lines) < m + 1:
        raise ParseError("matrix", f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for k in range(m):
        try:
            row = [int(tok) for tok in lines[k + 1].split()]
        except ValueError as e:
            raise ParseError("matrix row", str(e), offset + k + 2)
        if len(row) != n:
            raise ParseError("matrix row", f"expected {n} entries", offset + k + 2)
        if any(not 0 <= x < q for x in row):
            raise ParseError("matrix row", f"entries must lie in [0, {q})", offset + k + 2)
        rows.append(row)
    if m == 0:
        return field.GF.Zeros((0, n))
    return field.array(rows)


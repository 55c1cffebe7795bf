"""
Exact sparse linear algebra over a FieldSpec.

Matrices are stored as a dict of row dicts ``{i: {j: value}}`` holding only
nonzero entries. Reduced row echelon forms keep pivots monic.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

SparseRow = Dict[int, FieldElement]


class ExactMatrix:
    """Sparse matrix with exact entries; treated as immutable."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(
        self,
        nrows: int,
        ncols: int,
        field: FieldSpec,
        rows: Optional[Dict[int, SparseRow]] = None
    ):
        if nrows < 0 or ncols < 0:
            raise ValueError("Matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        clean: Dict[int, SparseRow] = {}
        for i, row in (rows or {}).items():
            if not 0 <= i < nrows:
                raise IndexError(f"Row {i} outside a {nrows}-row matrix")
            kept = {}
            for j, v in row.items():
                if not 0 <= j < ncols:
                    raise IndexError(f"Column {j} outside a {ncols}-column matrix")
                value = field.element(v)
                if value:
                    kept[j] = value
            if kept:
                clean[i] = kept
        self.rows = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]], field: FieldSpec,
                   ncols: Optional[int] = None) -> 'ExactMatrix':
        width = ncols if ncols is not None else (len(data[0]) if data else 0)
        rows = {i: {j: v for j, v in enumerate(row)} for i, row in enumerate(data)}
        return cls(len(data), width, field, rows)  # type: ignore[arg-type]

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> 'ExactMatrix':
        return cls(n, n, field, {i: {i: 1} for i in range(n)})

    def get(self, i: int, j: int) -> FieldElement:
        return self.rows.get(i, {}).get(j, self.field.zero())

    def to_dense(self) -> List[List[FieldElement]]:
        return [[self.get(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def transpose(self) -> 'ExactMatrix':
        cols: Dict[int, SparseRow] = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        return ExactMatrix(self.ncols, self.nrows, self.field, cols)

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.ncols != other.nrows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        fld = self.field
        out: Dict[int, SparseRow] = {}
        for i, row in self.rows.items():
            acc: SparseRow = {}
            for k, a in row.items():
                for j, b in other.rows.get(k, {}).items():
                    acc[j] = fld.add(acc.get(j, fld.zero()), fld.mul(a, b))
            out[i] = acc
        return ExactMatrix(self.nrows, other.ncols, fld, out)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field}, {len(self.rows)} nonzero rows)"


def _axpy(target: SparseRow, source: SparseRow, factor: FieldElement, fld: FieldSpec) -> None:
    """target -= factor * source, in place."""
    for j, v in source.items():
        value = fld.sub(target[j], fld.mul(factor, v)) if j in target else fld.neg(fld.mul(factor, v))
        if value:
            target[j] = value
        else:
            target.pop(j, None)


def _rref_rows(rows: Sequence[SparseRow], fld: FieldSpec) -> Dict[int, SparseRow]:
    """Fully reduced pivot rows keyed by pivot column."""
    pivot_rows: Dict[int, SparseRow] = {}
    for source in rows:
        row = dict(source)
        for c in [c for c in row if c in pivot_rows]:
            if c in row:
                _axpy(row, pivot_rows[c], row[c], fld)
        if not row:
            continue
        c0 = min(row)
        inv = fld.inv(row[c0])
        row = {j: fld.mul(v, inv) for j, v in row.items()}
        for other in pivot_rows.values():
            if c0 in other:
                _axpy(other, row, other[c0], fld)
        pivot_rows[c0] = row
    return pivot_rows


def row_reduce(M: ExactMatrix) -> Tuple[ExactMatrix, int, List[int]]:
    """
    Reduced row echelon form of M.

    Returns:
        (echelon matrix, rank, pivot columns). Pivots are monic and move
        strictly right down the rows; zero rows sit at the bottom.
    """
    pivot_rows = _rref_rows([M.rows[i] for i in sorted(M.rows)], M.field)
    pivots = sorted(pivot_rows)
    echelon = ExactMatrix(
        M.nrows, M.ncols, M.field, {i: pivot_rows[c] for i, c in enumerate(pivots)}
    )
    return echelon, len(pivots), pivots


def rank(M: ExactMatrix) -> int:
    return len(_rref_rows(list(M.rows.values()), M.field))


def nullspace(M: ExactMatrix) -> List[List[FieldElement]]:
    """Basis of {v : M v = 0}, one dense vector per free column."""
    fld = M.field
    pivot_rows = _rref_rows(list(M.rows.values()), fld)
    basis: List[List[FieldElement]] = []
    for free in range(M.ncols):
        if free in pivot_rows:
            continue
        vec = [fld.zero()] * M.ncols
        vec[free] = fld.one()
        for c, row in pivot_rows.items():
            if free in row:
                vec[c] = fld.neg(row[free])
        basis.append(vec)
    return basis


def inverse(M: ExactMatrix) -> ExactMatrix:
    """
    Exact inverse of a square matrix.

    Raises:
        ValueError: if M is not square or is singular
    """
    if M.nrows != M.ncols:
        raise ValueError(f"Cannot invert a {M.nrows}x{M.ncols} matrix")
    n = M.nrows
    augmented = []
    for i in range(n):
        row = dict(M.rows.get(i, {}))
        row[n + i] = M.field.one()
        augmented.append(row)
    pivot_rows = _rref_rows(augmented, M.field)
    if sorted(pivot_rows)[:n] != list(range(n)):
        raise ValueError("Matrix is singular")
    out = {i: {j - n: v for j, v in pivot_rows[i].items() if j >= n} for i in range(n)}
    return ExactMatrix(n, n, M.field, out)

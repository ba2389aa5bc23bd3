"""Gaussian elimination over GF(2) on bit-packed rows.

Rows are packed 64 columns to a ``uint64`` word; the right-hand side rides in
the bit just past the last column so a single XOR updates coefficients and
rhs together. Columns that occur in no row are dropped before packing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Sequence

import numpy as np

Row = tuple[frozenset[int], int]

_ONE = np.uint64(1)


@dataclass(frozen=True)
class Gf2System:
    num_variables: int
    rows: tuple[Row, ...] = ()

    def __post_init__(self) -> None:
        for support, rhs in self.rows:
            if rhs not in (0, 1):
                raise ValueError(f"rhs must be 0 or 1, got {rhs!r}")
            for var in support:
                if not 0 <= var < self.num_variables:
                    raise ValueError(
                        f"variable {var} outside [0, {self.num_variables})"
                    )

    @classmethod
    def from_rows(cls, num_variables: int, rows: Iterable[tuple[Iterable[int], int]]) -> Gf2System:
        return cls(num_variables, tuple((frozenset(s), int(r)) for s, r in rows))

    def occurring_variables(self) -> list[int]:
        return sorted({v for support, _ in self.rows for v in support})


@dataclass(frozen=True)
class EliminationResult:
    consistent: bool
    rank: int
    free_variable_count: int
    solution: tuple[int, ...] | None = field(default=None)
    pivot_columns: tuple[int, ...] = ()


def pack_rows(sys: Gf2System) -> tuple[np.ndarray, np.ndarray]:
    """Dense packed matrix of the deduplicated rows, plus the compacted column map.

    Row order is first-occurrence order. The rhs sits at bit ``len(columns)``.
    """
    rows = list(dict.fromkeys(sys.rows))
    lengths = np.fromiter((len(s) for s, _ in rows), dtype=np.int64, count=len(rows))
    flat = np.fromiter(chain.from_iterable(s for s, _ in rows), dtype=np.int64, count=int(lengths.sum()))
    columns = np.unique(flat)
    width = len(columns)
    words = (width + 1 + 63) // 64
    matrix = np.zeros((len(rows), words), dtype=np.uint64)
    row_ids = np.repeat(np.arange(len(rows)), lengths)
    cols = np.searchsorted(columns, flat)
    # supports are sets, so every (row, column) bit is set at most once
    np.add.at(matrix, (row_ids, cols >> 6), _ONE << (cols & 63).astype(np.uint64))
    rhs = np.fromiter((r for _, r in rows), dtype=np.uint64, count=len(rows))
    matrix[:, width >> 6] |= rhs << np.uint64(width & 63)
    return matrix, columns


def _forward(matrix: np.ndarray, width: int) -> list[int]:
    """In-place row echelon form; pivot on the lowest column, first eligible row."""
    nrows = matrix.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(width):
        if r == nrows:
            break
        w, b = divmod(c, 64)
        hits = np.flatnonzero((matrix[r:, w] >> np.uint64(b)) & _ONE)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            matrix[[r, p]] = matrix[[p, r]]
        if hits.size > 1:
            below = r + hits[1:]
            matrix[below, w:] ^= matrix[r, w:]
        pivots.append(c)
        r += 1
    return pivots


def eliminate(sys: Gf2System) -> EliminationResult:
    """Decide consistency, compute rank and one solution with free variables at 0.

    The pivot columns are those of the reduced echelon form under the natural
    column order, so the extracted solution is independent of row order.
    """
    if not sys.rows:
        return EliminationResult(True, 0, sys.num_variables, (0,) * sys.num_variables)
    matrix, columns = pack_rows(sys)
    width = len(columns)
    pivots = _forward(matrix, width)
    rank = len(pivots)
    free = sys.num_variables - rank
    pivot_vars = tuple(int(columns[c]) for c in pivots)
    rw, rb = divmod(width, 64)
    rhs = (matrix[:, rw] >> np.uint64(rb)) & _ONE
    # rows past the rank have no coefficients left
    if rhs[rank:].any():
        return EliminationResult(False, rank, free, None, pivot_vars)

    coef_mask = np.full(matrix.shape[1], np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
    coef_mask[rw] = np.uint64((1 << rb) - 1)
    coef_mask[rw + 1 :] = 0
    x = np.zeros(matrix.shape[1], dtype=np.uint64)
    for i in range(rank - 1, -1, -1):
        w = pivots[i] >> 6
        acc = np.bitwise_count(matrix[i, w:] & x[w:] & coef_mask[w:]).sum()
        if (int(rhs[i]) + int(acc)) & 1:
            x[w] |= _ONE << np.uint64(pivots[i] & 63)
    bits = np.unpackbits(x.view(np.uint8), bitorder="little")[:width]
    solution = np.zeros(sys.num_variables, dtype=np.uint8)
    solution[columns] = bits
    return EliminationResult(True, rank, free, tuple(int(b) for b in solution), pivot_vars)


def evaluate(sys: Gf2System, assignment: Sequence[int]) -> bool:
    """True iff ``assignment`` satisfies every row."""
    if len(assignment) != sys.num_variables:
        raise ValueError(
            f"assignment has length {len(assignment)}, system has {sys.num_variables} variables"
        )
    for support, rhs in sys.rows:
        parity = rhs
        for v in support:
            parity ^= assignment[v] & 1
        if parity:
            return False
    return True

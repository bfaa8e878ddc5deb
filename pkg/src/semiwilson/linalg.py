"""Exact Gaussian elimination over cyclotomic fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cyclotomic import ONE, ZERO, Cyc

Vector = tuple[Cyc, ...]
Matrix = tuple[Vector, ...]


class DimensionMismatch(ValueError):
    pass


def _as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Cyc.coerce(x) for x in row) for row in rows)


@dataclass(frozen=True)
class LinearSystem:
    """``matrix @ v == rhs`` with ``ncols`` unknowns."""

    matrix: Matrix
    rhs: Vector
    ncols: int

    def __init__(self, matrix: Sequence[Sequence], rhs: Sequence | None = None, ncols: int | None = None):
        mat = _as_matrix(matrix)
        if ncols is None:
            if not mat:
                raise DimensionMismatch("ncols is required for an empty matrix")
            ncols = len(mat[0])
        for i, row in enumerate(mat):
            if len(row) != ncols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {ncols}")
        vec = tuple(ZERO for _ in mat) if rhs is None else tuple(Cyc.coerce(x) for x in rhs)
        if len(vec) != len(mat):
            raise DimensionMismatch(f"rhs has length {len(vec)}, expected {len(mat)}")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "rhs", vec)
        object.__setattr__(self, "ncols", ncols)

    def residual(self, v: Sequence[Cyc], homogeneous: bool = False) -> Vector:
        out = []
        for row, b in zip(self.matrix, self.rhs):
            acc = ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc if homogeneous else acc - b)
        return tuple(out)


@dataclass(frozen=True)
class SolutionSpace:
    """Particular solution (``None`` if inconsistent) plus a nullspace basis."""

    particular: Vector | None
    basis: tuple[Vector, ...] = field(default=())
    rank: int = 0

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int:
        return len(self.basis)


def rref(rows: Sequence[Sequence[Cyc]], ncols: int) -> tuple[list[list[Cyc]], list[int]]:
    """Reduced row echelon form; the pivot is the first nonzero entry down each column."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][c]
        if lead != 1:
            inv = lead.inverse()
            work[r] = [x * inv if x else x for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [x - factor * y if y else x for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def solve_linear(system: LinearSystem) -> SolutionSpace:
    k = system.ncols
    aug = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    reduced, pivots = rref(aug, k + 1)
    if k in pivots:
        particular = None
        pivots = pivots[:-1]
    else:
        particular = [ZERO] * k
        for i, c in enumerate(pivots):
            particular[c] = reduced[i][k]
        particular = tuple(particular)

    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * k
        v[fc] = ONE
        for i, c in enumerate(pivots):
            v[c] = -reduced[i][fc]
        basis.append(tuple(v))

    for v in basis:
        if any(system.residual(v, homogeneous=True)):
            raise ArithmeticError("nullspace vector fails re-substitution")
    if particular is not None and any(system.residual(particular)):
        raise ArithmeticError("particular solution fails re-substitution")
    return SolutionSpace(particular, tuple(basis), len(pivots))


def nullspace(matrix: Sequence[Sequence], ncols: int) -> tuple[Vector, ...]:
    return solve_linear(LinearSystem(matrix, ncols=ncols)).basis


def rank(vectors: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = _as_matrix(vectors)
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]) if ncols is None else ncols)[1])


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    """Exact membership of ``v`` in the span of ``basis``."""
    v = tuple(Cyc.coerce(x) for x in v)
    if not basis:
        return not any(v)
    cols = _as_matrix(basis)
    # unknowns are the coefficients of the basis vectors
    matrix = [[col[i] for col in cols] for i in range(len(v))]
    return solve_linear(LinearSystem(matrix, v, ncols=len(cols))).consistent


def spans_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return all(in_span(a, v) for v in b) and all(in_span(b, v) for v in a)

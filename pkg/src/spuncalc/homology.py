"""Exact integer matrix tools: linking matrices, determinants, Smith form.

Everything here runs over Python integers, so all results are exact. The
determinant routine picks a fraction-free algorithm by structure: an O(n)
continuant recurrence for tridiagonal matrices and Bareiss elimination in
general. First homology of a surgered 3-manifold is read off the Smith
normal form of its linking matrix: the nontrivial invariant factors give
the torsion and the corank gives the free rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .errors import InvalidDiagramError

Rows = tuple[tuple[int, ...], ...]


def _as_rows(entries: Iterable[Iterable[int]]) -> Rows:
    if isinstance(entries, tuple) and all(type(row) is tuple for row in entries):
        rows = entries  # internally built matrices: skip per-entry coercion
        if any(row and type(row[0]) is not int for row in rows):
            rows = tuple(tuple(int(x) for x in row) for row in rows)
    else:
        rows = tuple(tuple(int(x) for x in row) for row in entries)
    for row in rows:
        if len(row) != len(rows):
            raise InvalidDiagramError("matrix is not square")
    return rows


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix: framings on the diagonal, linking numbers off it."""

    rows: Rows

    def __post_init__(self) -> None:
        rows = _as_rows(self.rows)
        object.__setattr__(self, "rows", rows)
        if rows != tuple(zip(*rows)):
            raise InvalidDiagramError("matrix not symmetric")

    @property
    def size(self) -> int:
        return len(self.rows)

    def det(self) -> int:
        return det(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def to_json(self) -> dict:
        return {"size": self.size, "rows": self.to_lists()}


@dataclass(frozen=True)
class H1Invariants:
    """Invariant factors d1 | d2 | ... (each > 1) plus the free rank."""

    factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self) -> None:
        for d, e in zip(self.factors, self.factors[1:]):
            if e % d != 0:
                raise InvalidDiagramError("invariant factors must form a chain")
        if any(d <= 1 for d in self.factors):
            raise InvalidDiagramError("invariant factors must exceed 1")
        if self.free_rank < 0:
            raise InvalidDiagramError("free rank must be nonnegative")

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return prod(self.factors, start=1)

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.factors]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"factors": list(self.factors), "free_rank": self.free_rank}


def _is_tridiagonal(rows: Rows) -> bool:
    # slice scans run at C speed, which matters for long plumbing chains
    return all(
        not any(row[: max(i - 1, 0)]) and not any(row[i + 2 :])
        for i, row in enumerate(rows)
    )


def _tridiagonal_det(rows: Rows) -> int:
    # continuant recurrence on leading principal minors
    n = len(rows)
    prev2, prev1 = 1, rows[0][0]
    for i in range(1, n):
        prev2, prev1 = prev1, rows[i][i] * prev1 - rows[i - 1][i] * rows[i][i - 1] * prev2
    return prev1


def _bareiss_det(rows: Rows) -> int:
    m = [list(row) for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[i][i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * pivot - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(entries: Iterable[Iterable[int]] | LinkingMatrix) -> int:
    """Exact determinant of a square integer matrix (empty matrix -> 1)."""
    rows = entries.rows if isinstance(entries, LinkingMatrix) else _as_rows(entries)
    if not rows:
        return 1
    if _is_tridiagonal(rows):
        return _tridiagonal_det(rows)
    return _bareiss_det(rows)


def min_structured_det(values: Sequence[int], diagonal: Sequence[int]) -> int:
    """Exact determinant of M[i][j] = values[min(i,j)] for i != j, M[i][i] = diagonal[i].

    Linear-time recurrence on two minor sequences: D tracks leading principal
    minors, F tracks the same minor with the last column flattened to the
    min-structure value. Equals det() of the materialized matrix.
    """
    if len(values) != len(diagonal):
        raise InvalidDiagramError("values and diagonal lengths differ")
    if not values:
        return 1
    u, dv = list(values), [diagonal[i] - values[i] for i in range(len(values))]
    big_d, big_f = u[0] + dv[0], u[0]
    for m in range(1, len(u)):
        big_d, big_f = (
            dv[m - 1] * big_f + (u[m] + dv[m] - u[m - 1]) * big_d,
            dv[m - 1] * big_f + (u[m] - u[m - 1]) * big_d,
        )
    return big_d


def smith_diagonal(entries: Iterable[Iterable[int]], square: bool = False) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, divisibility chain).

    Works on any rectangular integer matrix; the result has min(rows, cols)
    entries, padded with zeros where the rank falls short.
    """
    m = [list(map(int, row)) for row in entries]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    if square and any(len(row) != nr for row in m):
        raise InvalidDiagramError("matrix is not square")
    if any(len(row) != nc for row in m):
        raise InvalidDiagramError("ragged matrix")
    diag: list[int] = []
    top = 0
    while top < min(nr, nc):
        # find a nonzero pivot of minimal magnitude in the working block
        pivot = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        p = m[top][top]
        # clear the pivot row and column; restart whenever a remainder appears
        dirty = False
        for i in range(top + 1, nr):
            q = m[i][top] // p
            if q:
                for j in range(top, nc):
                    m[i][j] -= q * m[top][j]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, nc):
            q = m[top][j] // p
            if q:
                for i in range(top, nr):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide the remaining block for the factor chain
        stray = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % p != 0:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            for j in range(top, nc):
                m[top][j] += m[stray][j]
            continue
        diag.append(abs(p))
        top += 1
    diag.extend([0] * (min(nr, nc) - len(diag)))
    return diag


def cokernel_invariants(entries: Iterable[Iterable[int]], columns: int | None = None) -> H1Invariants:
    """Invariants of Z^c / rowspace(M), where c is the column count of M."""
    m = [list(map(int, row)) for row in entries]
    if columns is None:
        if not m:
            raise InvalidDiagramError("column count required for an empty matrix")
        columns = len(m[0])
    if not m:
        return H1Invariants(factors=(), free_rank=columns)
    diag = smith_diagonal(m)
    rank = sum(1 for d in diag if d != 0)
    factors = tuple(d for d in diag if d > 1)
    return H1Invariants(factors=factors, free_rank=columns - rank)

"""Exact integer linear algebra over Python's arbitrary-precision integers.

The central routine is :func:`snf`, a Smith-normal-form engine driven by
unimodular row/column operations (swaps, negations, integer-multiple
additions, and extended-gcd 2x2 combinations, each a product of the
elementary operations).  It is cross-checkable against
:func:`invariant_factors_from_divisors`, a brute-force oracle that
computes determinantal divisors by enumerating all k x k minors.  The
oracle is combinatorially expensive and is capped at matrices whose
smaller dimension is at most 8.

Determinants are computed with the Bareiss fraction-free elimination,
which stays in the integers throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

_ORACLE_DIM_CAP = 8


class IntegerMatrix:
    """Dense, immutable matrix of arbitrary-precision integers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = [[int(x) for x in row] for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("all rows must have the same length")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntegerMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def row_count(self) -> int:
        return len(self._rows)

    @property
    def col_count(self) -> int:
        return len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.row_count == self.col_count

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._rows[i][j]

    def to_lists(self) -> list[list[int]]:
        """Deep copy of the entries as plain lists."""
        return [row[:] for row in self._rows]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self._rows[i])

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(zip(*self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntegerMatrix":
        return IntegerMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def delete_row_col(self, i: int, j: int) -> "IntegerMatrix":
        rows = [r for r in range(self.row_count) if r != i]
        cols = [c for c in range(self.col_count) if c != j]
        return self.submatrix(rows, cols)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.col_count != other.row_count:
            raise ValueError(
                f"dimension mismatch: {self.row_count}x{self.col_count} @ "
                f"{other.row_count}x{other.col_count}"
            )
        bt = list(zip(*other._rows))
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._rows]
        )

    def __pow__(self, exponent: int) -> "IntegerMatrix":
        if not self.is_square:
            raise ValueError("matrix power requires a square matrix")
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = IntegerMatrix.identity(self.row_count)
        for _ in range(exponent):
            result = result @ self
        return result

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix([[-x for x in row] for row in self._rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(tuple(tuple(row) for row in self._rows))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self._rows!r})"

    def __str__(self) -> str:
        widths = [
            max(len(str(self._rows[i][j])) for i in range(self.row_count))
            for j in range(self.col_count)
        ]
        lines = [
            " ".join(str(x).rjust(w) for x, w in zip(row, widths))
            for row in self._rows
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form: diagonal divisibility chain plus optional transforms.

    When transforms were requested, ``left_transform @ a @ right_transform``
    equals ``diag(diagonal)`` and both transforms are unimodular.
    """

    diagonal: tuple[int, ...]
    left_transform: Optional[IntegerMatrix] = None
    right_transform: Optional[IntegerMatrix] = None
    peak_bit_length: int = 0

    def nonzero_diagonal(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b) > 0 (a, b not both zero)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _min_abs_pivot(m: list[list[int]], t: int) -> tuple[Optional[tuple[int, int]], int]:
    """Position of a minimal-|value| nonzero entry in m[t:, t:], and the
    largest bit length seen in that submatrix."""
    best: Optional[tuple[int, int]] = None
    best_abs = 0
    peak = 0
    for i in range(t, len(m)):
        row = m[i]
        for j in range(t, len(row)):
            x = row[j]
            if x:
                ax = -x if x < 0 else x
                bl = ax.bit_length()
                if bl > peak:
                    peak = bl
                if best is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        # cannot do better; still finish the peak scan
                        for i2 in range(i, len(m)):
                            row2 = m[i2]
                            start = j + 1 if i2 == i else t
                            for j2 in range(start, len(row2)):
                                y = row2[j2]
                                if y:
                                    bl = abs(y).bit_length()
                                    if bl > peak:
                                        peak = bl
                        return best, peak
    return best, peak


def snf(a: IntegerMatrix, want_transforms: bool = False) -> SnfResult:
    """Smith normal form of an arbitrary rectangular integer matrix.

    Each stage moves the nonzero entry of minimal absolute value in the
    remaining submatrix to the pivot position, then clears the pivot row
    and column.  Non-divisible entries are handled with an extended-gcd
    2x2 block combination (the pivot becomes the gcd in one step), which
    keeps intermediate entries from the explosive growth that a naive
    swap-and-reduce cascade produces.  Once the cross is clear, the pivot
    is forced to divide the remaining submatrix by the usual add-a-row
    fix-up.  Diagonal entries come out nonnegative, with zeros (rank
    deficiency) at the tail.
    """
    m = a.to_lists()
    nr, nc = len(m), len(m[0])
    p = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)] if want_transforms else None
    q = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)] if want_transforms else None
    peak = 0

    def row_sub(i: int, t: int, factor: int) -> None:
        m[i] = [x - factor * y for x, y in zip(m[i], m[t])]
        if p is not None:
            p[i] = [x - factor * y for x, y in zip(p[i], p[t])]

    def rows_combine(t: int, i: int, aa: int, bb: int, cc: int, dd: int) -> None:
        # row_t <- aa*row_t + bb*row_i ; row_i <- cc*row_t + dd*row_i
        mt, mi = m[t], m[i]
        m[t] = [aa * x + bb * y for x, y in zip(mt, mi)]
        m[i] = [cc * x + dd * y for x, y in zip(mt, mi)]
        if p is not None:
            pt, pi = p[t], p[i]
            p[t] = [aa * x + bb * y for x, y in zip(pt, pi)]
            p[i] = [cc * x + dd * y for x, y in zip(pt, pi)]

    def col_sub(j: int, t: int, factor: int) -> None:
        for row in m:
            row[j] -= factor * row[t]
        if q is not None:
            for row in q:
                row[j] -= factor * row[t]

    def cols_combine(t: int, j: int, aa: int, bb: int, cc: int, dd: int) -> None:
        # col_t <- aa*col_t + bb*col_j ; col_j <- cc*col_t + dd*col_j
        for row in m:
            x, y = row[t], row[j]
            row[t] = aa * x + bb * y
            row[j] = cc * x + dd * y
        if q is not None:
            for row in q:
                x, y = row[t], row[j]
                row[t] = aa * x + bb * y
                row[j] = cc * x + dd * y

    def swap_rows(i: int, t: int) -> None:
        m[i], m[t] = m[t], m[i]
        if p is not None:
            p[i], p[t] = p[t], p[i]

    def swap_cols(j: int, t: int) -> None:
        for row in m:
            row[j], row[t] = row[t], row[j]
        if q is not None:
            for row in q:
                row[j], row[t] = row[t], row[j]

    def clear_column(t: int) -> None:
        for i in range(t + 1, nr):
            v = m[i][t]
            if not v:
                continue
            pivot = m[t][t]
            if v % pivot == 0:
                row_sub(i, t, v // pivot)
            else:
                g, x, y = _ext_gcd(pivot, v)
                rows_combine(t, i, x, y, v // g, -(pivot // g))

    def clear_row(t: int) -> None:
        for j in range(t + 1, nc):
            v = m[t][j]
            if not v:
                continue
            pivot = m[t][t]
            if v % pivot == 0:
                col_sub(j, t, v // pivot)
            else:
                g, x, y = _ext_gcd(pivot, v)
                cols_combine(t, j, x, y, v // g, -(pivot // g))

    for t in range(min(nr, nc)):
        pos, sub_peak = _min_abs_pivot(m, t)
        if sub_peak > peak:
            peak = sub_peak
        if pos is None:
            break
        swap_rows(pos[0], t)
        swap_cols(pos[1], t)

        while True:
            while any(m[i][t] for i in range(t + 1, nr)) or any(
                m[t][j] for j in range(t + 1, nc)
            ):
                clear_column(t)
                clear_row(t)
            # Pivot must divide every remaining entry; if not, pull the
            # offending row up and keep reducing (this shrinks the pivot).
            pivot = m[t][t]
            offender = None
            for i in range(t + 1, nr):
                row = m[i]
                for j in range(t + 1, nc):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)

        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            if p is not None:
                p[t] = [-x for x in p[t]]

    _, final_peak = _min_abs_pivot(m, 0)
    if final_peak > peak:
        peak = final_peak
    diag = tuple(m[i][i] for i in range(min(nr, nc)))
    return SnfResult(
        diagonal=diag,
        left_transform=IntegerMatrix(p) if p is not None else None,
        right_transform=IntegerMatrix(q) if q is not None else None,
        peak_bit_length=peak,
    )


def det_bareiss(a: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise ValueError("determinant requires a square matrix")
    n = a.row_count
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            m[i] = [
                (pivot * m[i][j] - mik * m[k][j]) // prev if j > k else 0
                for j in range(n)
            ]
        prev = pivot
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntegerMatrix) -> bool:
    """True iff the (square) matrix has determinant +1 or -1."""
    if not a.is_square:
        raise ValueError("unimodularity requires a square matrix")
    return det_bareiss(a) in (1, -1)


def determinantal_divisor(a: IntegerMatrix, k: int) -> int:
    """gcd of all k x k minors, by exhaustive enumeration.

    This is the independent oracle for the SNF engine; the enumeration is
    capped at min(rows, cols) <= 8.
    """
    nr, nc = a.row_count, a.col_count
    if min(nr, nc) > _ORACLE_DIM_CAP:
        raise ValueError(
            f"minor enumeration is capped at min dimension {_ORACLE_DIM_CAP}"
        )
    if not 1 <= k <= min(nr, nc):
        raise ValueError(f"minor order {k} out of range for {nr}x{nc} matrix")
    g = 0
    for rows in itertools.combinations(range(nr), k):
        for cols in itertools.combinations(range(nc), k):
            g = math.gcd(g, det_bareiss(a.submatrix(rows, cols)))
            if g == 1:
                return 1
    return g


def invariant_factors_from_divisors(a: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors as successive quotients of determinantal divisors.

    Returns the full diagonal (length min(rows, cols)): after the first
    vanishing divisor every remaining factor is 0.  Agrees with
    ``snf(a).diagonal`` and serves as its oracle.
    """
    n = min(a.row_count, a.col_count)
    factors: list[int] = []
    prev = 1
    for k in range(1, n + 1):
        d = determinantal_divisor(a, k)
        if d == 0:
            factors.extend([0] * (n - len(factors)))
            break
        factors.append(d // prev)
        prev = d
    return tuple(factors)


def canonical_chain(factors: Sequence[int]) -> tuple[int, ...]:
    """Reorder/merge positive integers into the unique divisibility chain.

    Repeatedly replaces adjacent pairs (a, b) with (gcd(a, b), lcm(a, b))
    until every entry divides the next; no factorization is performed.
    """
    chain = [int(x) for x in factors]
    if any(x < 1 for x in chain):
        raise ValueError("canonical_chain requires positive entries")
    changed = True
    while changed:
        changed = False
        for i in range(len(chain) - 1):
            x, y = chain[i], chain[i + 1]
            if y % x:
                g = math.gcd(x, y)
                chain[i], chain[i + 1] = g, x * y // g
                changed = True
    return tuple(chain)


def parse_matrix(text: str) -> IntegerMatrix:
    """Parse the matrix text format: first line ``rows cols``, then
    row-major whitespace-separated integers (line breaks are free)."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix file must start with 'rows cols'")
    try:
        nr, nc = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise ValueError(f"bad matrix header: {tokens[0]!r} {tokens[1]!r}") from exc
    if nr < 1 or nc < 1:
        raise ValueError("matrix dimensions must be positive")
    body = tokens[2:]
    if len(body) != nr * nc:
        raise ValueError(f"expected {nr * nc} entries, found {len(body)}")
    try:
        values = [int(tok) for tok in body]
    except ValueError as exc:
        raise ValueError("matrix entries must be integers") from exc
    return IntegerMatrix([values[i * nc : (i + 1) * nc] for i in range(nr)])


def format_matrix(a: IntegerMatrix) -> str:
    """Inverse of :func:`parse_matrix`."""
    lines = [f"{a.row_count} {a.col_count}"]
    lines.extend(" ".join(str(x) for x in a.row(i)) for i in range(a.row_count))
    return "\n".join(lines) + "\n"

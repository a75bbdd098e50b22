"""Dense exact linear algebra over the rationals.

Forward elimination is fraction-free (Bareiss) on integer rows obtained by
clearing denominators row by row; the echelon form is then normalised to
reduced row-echelon form with exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> RationalMatrix:
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls.from_rows(([0] * cols for _ in range(rows)), cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_rows(
            ([self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)), cols=self.rows
        )

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    out = []
    for row in M.entries:
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def bareiss_echelon(M: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns (integer rows, pivot columns).

    Pivot is the first nonzero entry found scanning down the current column.
    """
    a = _integer_rows(M)
    nrows, ncols = M.rows, M.cols
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _normalize(rows: list[list[Fraction]], pivots: list[int], ncols: int) -> list[list[Fraction]]:
    rows = [list(r) for r in rows]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        inv = 1 / rows[k][c]
        rows[k] = [x * inv for x in rows[k]]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return rows


def rref_with_pivots(M: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    ech, pivots = bareiss_echelon(M)
    reduced = _normalize([[Fraction(x) for x in r] for r in ech], pivots, M.cols)
    reduced += [[Fraction(0)] * M.cols for _ in range(M.rows - len(reduced))]
    return RationalMatrix.from_rows(reduced, cols=M.cols), pivots


def rref(M: RationalMatrix) -> RationalMatrix:
    """Reduced row-echelon form; zero rows kept at the bottom so the shape is unchanged."""
    return rref_with_pivots(M)[0]


def rank(M: RationalMatrix) -> int:
    return len(bareiss_echelon(M)[1])


def kernel_basis(M: RationalMatrix) -> list[list[Fraction]]:
    """Right kernel basis in normal form.

    One vector per free column ``f``: it has a 1 at ``f``, zeros at the other
    free columns, and the pivot entries forced by the reduced echelon form.
    """
    R, pivots = rref_with_pivots(M)
    pivot_set = set(pivots)
    free = [j for j in range(M.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R.entries[k][f]
        basis.append(v)
    assert len(pivots) + len(basis) == M.cols, "rank-nullity violated"
    for v in basis:
        assert not any(M.apply(v)), "kernel vector not annihilated"
    return basis


def rref_naive(M: RationalMatrix) -> RationalMatrix:
    """Textbook Gauss-Jordan with rational arithmetic; reference for :func:`rref`."""
    a = [list(r) for r in M.entries]
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(M.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == M.rows:
            break
    return RationalMatrix.from_rows(a, cols=M.cols)


class RowSpace:
    """Incrementally maintained row space, for independence tests."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, list[Fraction]] = {}  # pivot column -> reduced row

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        for c, row in self._rows.items():
            f = v[c]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        w = self.reduce(v)
        c = next((j for j, x in enumerate(w) if x), None)
        if c is None:
            return False
        inv = 1 / w[c]
        w = [x * inv for x in w]
        for k, row in self._rows.items():
            f = row[c]
            if f:
                self._rows[k] = [x - f * y for x, y in zip(row, w)]
        self._rows[c] = w
        return True

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))


class SparseRowSpace:
    """Row space of sparse vectors (dicts column -> value) in echelon form.

    Rows are only reduced against pivots of earlier rows, which keeps fill-in
    low for the very sparse Macaulay matrices.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict[int, Fraction]] = {}  # pivot column -> monic row

    def __len__(self):
        return len(self._rows)

    @property
    def full(self) -> bool:
        return len(self._rows) == self.ncols

    def reduce(self, v: dict) -> dict[int, Fraction]:
        w = {c: Fraction(x) for c, x in v.items() if x}
        while True:
            hits = [c for c in w if c in self._rows]
            if not hits:
                return w
            # eliminating the smallest pivot only creates larger columns
            c = min(hits)
            f = w[c]
            for j, y in self._rows[c].items():
                s = w.get(j, 0) - f * y
                if s:
                    w[j] = s
                else:
                    w.pop(j, None)

    def add(self, v: dict) -> bool:
        w = self.reduce(v)
        if not w:
            return False
        c = min(w)
        inv = 1 / w[c]
        self._rows[c] = {j: x * inv for j, x in w.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

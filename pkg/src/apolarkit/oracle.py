"""Brute-force cross-checks by Macaulay matrices (no Groebner bases involved).

For a homogeneous ideal I the degree-e piece I_e is spanned by the products
m*g with g a generator and m a monomial of degree e - deg(g); its dimension
is a matrix rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .linalg import RationalMatrix, SparseRowSpace, rank
from .poly import Exponents, Polynomial, RingContext, monomials_of_degree


@dataclass(frozen=True)
class MacaulayTruncation:
    generators: tuple[Polynomial, ...]
    degree_bound: int
    matrices: tuple[RationalMatrix, ...]  # index e: rows m*g of degree e
    monomials: tuple[tuple[Exponents, ...], ...]

    def quotient_piece(self, e: int) -> int:
        return len(self.monomials[e]) - rank(self.matrices[e])


def _check_homogeneous(gens: Sequence[Polynomial]) -> None:
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"oracle needs homogeneous generators, got {g}")


def _degree_rows(gens, nvars: int, e: int, monos: list[Exponents]):
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        if g.is_zero() or g.degree > e:
            continue
        for m in monomials_of_degree(nvars, e - g.degree):
            row = [Fraction(0)] * len(monos)
            for t, c in g.terms.items():
                row[index[tuple(x + y for x, y in zip(t, m))]] = c
            rows.append(row)
    return rows


def macaulay_truncation(gens: Sequence[Polynomial], D: int, ctx: RingContext | None = None) -> MacaulayTruncation:
    gens = tuple(gens)
    _check_homogeneous(gens)
    n = (ctx or gens[0].ctx).nvars
    mats, monos_all = [], []
    for e in range(D + 1):
        monos = monomials_of_degree(n, e)
        rows = _degree_rows(gens, n, e, monos)
        mats.append(RationalMatrix.from_rows(rows, cols=len(monos)))
        monos_all.append(tuple(monos))
    return MacaulayTruncation(gens, D, tuple(mats), tuple(monos_all))


@lru_cache(maxsize=256)
def _degree_space(gens: tuple[Polynomial, ...], nvars: int, e: int) -> tuple[SparseRowSpace, dict]:
    """Span of the degree-``e`` Macaulay rows, with the column index of each monomial."""
    monos = monomials_of_degree(nvars, e)
    index = {m: i for i, m in enumerate(monos)}
    space = SparseRowSpace(len(monos))
    for g in gens:
        if g.is_zero() or g.degree > e:
            continue
        for m in monomials_of_degree(nvars, e - g.degree):
            if space.full:
                return space, index
            space.add({index[tuple(x + y for x, y in zip(t, m))]: c for t, c in g.terms.items()})
    return space, index


def oracle_quotient_dimension(gens: Sequence[Polynomial], D: int, ctx: RingContext | None = None) -> Optional[int]:
    """Sum of graded quotient dimensions up to the first vanishing degree.

    Returns ``None`` when no degree ``e <= D`` has a zero quotient piece.
    """
    if not gens and ctx is None:
        raise ValueError("ring context required for an empty generator list")
    gens = tuple(gens)
    _check_homogeneous(gens)
    n = (ctx or gens[0].ctx).nvars
    total = 0
    for e in range(D + 1):
        space, index = _degree_space(gens, n, e)
        piece = len(index) - len(space)
        if piece == 0:
            return total
        total += piece
    return None


def oracle_membership(p: Polynomial, gens: Sequence[Polynomial], D: int) -> bool:
    """Whether homogeneous ``p`` lies in the degree-deg(p) span of the Macaulay matrix."""
    if p.is_zero():
        return True
    if not p.is_homogeneous():
        raise ValueError("oracle membership needs a homogeneous polynomial")
    e = p.degree
    if e > D:
        raise ValueError(f"degree {e} above bound {D}")
    gens = tuple(gens)
    _check_homogeneous(gens)
    n = p.ctx.nvars
    for k in range(e):
        # I_k = S_k forces I_e = S_e for every e >= k
        space, _ = _degree_space(gens, n, k)
        if space.full:
            return True
    space, index = _degree_space(gens, n, e)
    return space.contains({index[t]: c for t, c in p.terms.items()})

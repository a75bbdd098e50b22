"""Macaulay inverse systems.

Dual variables act on forms as partial derivatives (``a_i`` acts as
``d/dx_i``, with the usual factorial coefficients).  The apolar ideal of a
polynomial F is the annihilator of F under this action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import HilbertFunction, NotHomogeneousError, buchberger
from .ideals import Ideal
from .linalg import RationalMatrix, RowSpace, kernel_basis, rank
from .poly import (
    GREVLEX,
    ContextMismatchError,
    Exponents,
    Polynomial,
    RingContext,
    falling_factorial_ratio,
    monomials_of_degree,
)


def dual_name(name: str) -> str:
    """``x3`` -> ``a3``; other names get a ``d`` prefix."""
    if name.startswith("x") and len(name) > 1:
        return "a" + name[1:]
    return "d" + name


@dataclass(frozen=True)
class DualPairing:
    """Primal ring (forms) and dual ring (operators), paired index by index."""

    primal: RingContext
    dual: RingContext

    def __post_init__(self):
        if self.primal.nvars != self.dual.nvars:
            raise ValueError("paired rings need the same number of variables")

    @classmethod
    def for_primal(cls, primal: RingContext, dual_names=None) -> DualPairing:
        names = list(dual_names) if dual_names is not None else [dual_name(v) for v in primal.variables]
        return cls(primal, RingContext(names))


def contract(theta: Polynomial, F: Polynomial, pairing: DualPairing | None = None) -> Polynomial:
    """Apply the differential operator ``theta`` to ``F``."""
    if pairing is None:
        if theta.ctx.nvars != F.ctx.nvars:
            raise ContextMismatchError("operator and form have different numbers of variables")
    elif theta.ctx != pairing.dual or F.ctx != pairing.primal:
        raise ContextMismatchError("operands do not match the pairing")
    out: dict[Exponents, Fraction] = {}
    for a, c in theta.terms.items():
        for b, d in F.terms.items():
            if any(x > y for x, y in zip(a, b)):
                continue
            k = c * d
            for x, y in zip(a, b):
                if x:
                    k *= falling_factorial_ratio(y, x)
            e = tuple(y - x for x, y in zip(a, b))
            s = out.get(e, 0) + k
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return Polynomial._raw(F.ctx, out)


def _grevlex_desc(nvars: int, degree: int) -> list[Exponents]:
    return sorted(monomials_of_degree(nvars, degree), key=GREVLEX.key, reverse=True)


@dataclass(frozen=True)
class CatalecticantMap:
    """Matrix of ``theta -> theta(F)`` from degree-``degree`` operators to degree ``d - degree`` forms."""

    degree: int
    matrix: RationalMatrix
    column_monomials: tuple[Exponents, ...]  # dual side
    row_monomials: tuple[Exponents, ...]  # primal side

    @property
    def rank(self) -> int:
        return rank(self.matrix)


def catalecticant(F: Polynomial, e: int) -> CatalecticantMap:
    if F.is_zero() or not F.is_homogeneous():
        raise NotHomogeneousError("catalecticant needs a nonzero homogeneous form")
    d = F.degree
    if not 0 <= e <= d:
        raise ValueError(f"degree {e} outside 0..{d}")
    n = F.ctx.nvars
    cols = _grevlex_desc(n, e)
    rows = _grevlex_desc(n, d - e)
    row_index = {m: i for i, m in enumerate(rows)}
    data = [[Fraction(0)] * len(cols) for _ in rows]
    op_ctx = RingContext([f"d{i}" for i in range(n)]) if n else RingContext([])
    for j, a in enumerate(cols):
        image = contract(op_ctx.monomial(a), F)
        for m, c in image.terms.items():
            data[row_index[m]][j] = c
    return CatalecticantMap(e, RationalMatrix.from_rows(data, cols=len(cols)), tuple(cols), tuple(rows))


def apolar_hilbert(F: Polynomial) -> HilbertFunction:
    """Hilbert function of the apolar algebra from catalecticant ranks."""
    if F.is_zero() or not F.is_homogeneous():
        raise NotHomogeneousError("apolar_hilbert needs a nonzero homogeneous form")
    return HilbertFunction(tuple(catalecticant(F, e).rank for e in range(F.degree + 1)))


def _vector_to_poly(ctx: RingContext, monos, vec) -> Polynomial:
    return Polynomial(ctx, {m: c for m, c in zip(monos, vec) if c})


def apolar_ideal(F: Polynomial, dual: RingContext | None = None) -> Ideal:
    """Annihilator of ``F`` in the dual ring.

    Every dual monomial of degree ``deg F + 1`` kills ``F``, so kernels up to
    that degree generate the whole annihilator.  For homogeneous ``F`` only
    generators independent of the lower-degree ones are kept.
    """
    if F.is_zero():
        raise ValueError("the zero polynomial has the unit ideal as annihilator")
    if dual is None:
        dual = DualPairing.for_primal(F.ctx).dual
    if dual.nvars != F.ctx.nvars:
        raise ContextMismatchError("dual ring has the wrong number of variables")
    if F.is_homogeneous():
        return Ideal(dual, _homogeneous_generators(F, dual))
    return Ideal(dual, _filtered_generators(F, dual))


def _homogeneous_generators(F: Polynomial, dual: RingContext) -> list[Polynomial]:
    # a kernel vector is a new generator iff its normal form modulo the
    # generators found so far is independent of the previous ones
    n = dual.nvars
    d = F.degree
    gens: list[Polynomial] = []
    for e in range(1, d + 2):
        monos = _grevlex_desc(n, e)
        if e <= d:
            kernel = [_vector_to_poly(dual, monos, v) for v in kernel_basis(catalecticant(F, e).matrix)]
        else:
            kernel = [dual.monomial(m) for m in monos]
        if not kernel:
            continue
        gb = buchberger(gens, GREVLEX, ctx=dual) if gens else None
        index = {m: i for i, m in enumerate(monos)}
        span = RowSpace(len(monos))
        for p in kernel:
            r = gb.reduce(p) if gb is not None else p
            row = [Fraction(0)] * len(monos)
            for m, c in r.terms.items():
                row[index[m]] = c
            if span.add(row):
                gens.append(p)
    return gens


def _filtered_generators(F: Polynomial, dual: RingContext) -> list[Polynomial]:
    n = dual.nvars
    d = F.degree
    cols = [m for k in range(d + 2) for m in _grevlex_desc(n, k)]
    images = [contract(dual.monomial(m), F) for m in cols]
    rows = sorted({m for img in images for m in img.terms}, key=GREVLEX.key, reverse=True)
    row_index = {m: i for i, m in enumerate(rows)}
    data = [[Fraction(0)] * len(cols) for _ in rows]
    for j, img in enumerate(images):
        for m, c in img.terms.items():
            data[row_index[m]][j] = c
    M = RationalMatrix.from_rows(data, cols=len(cols))
    return [_vector_to_poly(dual, cols, v) for v in kernel_basis(M)]

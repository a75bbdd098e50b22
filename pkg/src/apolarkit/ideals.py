"""Ideal arithmetic on top of the Groebner engine.

Intersections use one auxiliary variable ``t``: the ideal
``t*I + (1 - t)*J`` is computed under an order eliminating ``t`` and the
``t``-free part of its basis generates ``I ∩ J``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .groebner import (
    GroebnerBasis,
    HilbertFunction,
    NotHomogeneousError,
    buchberger,
    hilbert_function,
    quotient_dimension,
)
from .poly import (
    GREVLEX,
    BlockOrder,
    ContextMismatchError,
    MonomialOrder,
    Polynomial,
    RingContext,
    change_ring,
    exact_divide,
)


def _fresh_name(ctx: RingContext, base: str = "t") -> str:
    name = base
    while name in ctx:
        name += "_"
    return name


class Ideal:
    """Finitely generated ideal of a polynomial ring.

    Groebner bases are computed lazily and cached per monomial order.
    Equality is extensional (reduced grevlex bases are compared).
    """

    def __init__(self, ctx: RingContext, generators: Iterable[Polynomial] = ()):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator {g!r} is not a Polynomial")
            if g.ctx != ctx:
                raise ContextMismatchError(f"generator {g} not in {ctx!r}")
        self.ctx = ctx
        self.generators = gens
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def unit(cls, ctx: RingContext) -> Ideal:
        return cls(ctx, [ctx.one()])

    @classmethod
    def zero(cls, ctx: RingContext) -> Ideal:
        return cls(ctx, [])

    @classmethod
    def maximal(cls, ctx: RingContext) -> Ideal:
        """The ideal of all variables."""
        return cls(ctx, ctx.gens())

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, ctx=self.ctx)
            # first writer wins; racing readers all see the stored value
            gb = self._gb.setdefault(order, gb)
        return gb

    def contains(self, p: Polynomial) -> bool:
        return self.groebner().contains(p)

    def __contains__(self, p: Polynomial) -> bool:
        return self.contains(p)

    def issubset(self, other: Ideal) -> bool:
        _check(self, other)
        return all(other.contains(g) for g in self.generators)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def quotient_dimension(self) -> int:
        return quotient_dimension(self.groebner())

    def hilbert_function(self) -> HilbertFunction:
        if not self.is_homogeneous():
            raise NotHomogeneousError("Hilbert function needs homogeneous generators")
        return hilbert_function(self.groebner())

    def reduced_generators(self) -> tuple[Polynomial, ...]:
        return self.groebner().elements

    def __add__(self, other: Ideal) -> Ideal:
        return ideal_sum(self, other)

    def __mul__(self, other: Ideal) -> Ideal:
        return ideal_product(self, other)

    def __pow__(self, n: int) -> Ideal:
        return ideal_power(self, n)

    def __and__(self, other: Ideal) -> Ideal:
        return ideal_intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"


def _check(I: Ideal, J: Ideal) -> None:
    if I.ctx != J.ctx:
        raise ContextMismatchError(f"{I.ctx!r} vs {J.ctx!r}")


def ideal(ctx: RingContext, *gens: Polynomial) -> Ideal:
    return Ideal(ctx, gens)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    return Ideal(I.ctx, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    gens = []
    seen = set()
    for f in I.generators:
        for g in J.generators:
            h = f * g
            if h and h not in seen:
                seen.add(h)
                gens.append(h)
    return Ideal(I.ctx, gens)


def ideal_power(I: Ideal, n: int) -> Ideal:
    if not isinstance(n, int) or n < 1:
        raise ValueError("ideal power needs n >= 1")
    result = I
    for _ in range(n - 1):
        result = ideal_product(result, I)
    return result


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    ctx = I.ctx
    tname = _fresh_name(ctx)
    big = ctx.extend(tname, front=True)
    t = big.var(tname)
    gens = [t * change_ring(g, big) for g in I.generators]
    gens += [(1 - t) * change_ring(h, big) for h in J.generators]
    if not gens:
        return Ideal.zero(ctx)
    gb = buchberger(gens, BlockOrder(1, GREVLEX, GREVLEX), ctx=big)
    kept = [change_ring(g, ctx) for g in gb if not _uses_first(g)]
    return Ideal(ctx, kept)


def _uses_first(g: Polynomial) -> bool:
    return any(e[0] for e in g.terms)


def ideal_colon(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f``, via ``I ∩ (f)`` divided exactly by ``f``."""
    if f.ctx != I.ctx:
        raise ContextMismatchError(f"{f.ctx!r} vs {I.ctx!r}")
    if f.is_zero():
        raise ZeroDivisionError("colon by the zero polynomial")
    meet = ideal_intersect(I, Ideal(I.ctx, [f]))
    # a failing division here means the intersection is wrong
    return Ideal(I.ctx, [exact_divide(g, f) for g in meet.generators])


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f^∞``: repeat the colon until the ideal stops growing."""
    current = I
    while True:
        nxt = ideal_colon(current, f)
        if nxt.issubset(current):
            return current
        current = nxt


def irrelevant_saturation(I: Ideal) -> Ideal:
    """Saturation by the ideal of all variables, as the intersection of per-variable saturations."""
    if not I.is_homogeneous():
        raise NotHomogeneousError("irrelevant saturation needs a homogeneous ideal")
    result = None
    for v in I.ctx.gens():
        sat = saturate(I, v)
        result = sat if result is None else ideal_intersect(result, sat)
    return result if result is not None else I


def homogenize_polynomial(p: Polynomial, target: RingContext, new_var: str) -> Polynomial:
    if p.is_zero():
        return target.zero()
    d = p.degree
    k = target.index(new_var)
    out = {}
    for e, c in p.terms.items():
        full = [0] * target.nvars
        for name, x in zip(p.ctx.variables, e):
            full[target.index(name)] = x
        full[k] = d - sum(e)
        out[tuple(full)] = c
    return Polynomial(target, out)


def homogenize(I: Ideal, new_var: str) -> Ideal:
    """Homogenization of the ideal (not just its generators) in ``ctx + [new_var]``.

    Uses a grevlex basis, whose homogenized elements generate the homogenized ideal.
    """
    if new_var in I.ctx:
        raise ValueError(f"variable {new_var!r} already in the ring")
    target = I.ctx.extend(new_var)
    gb = I.groebner(GREVLEX)
    return Ideal(target, [homogenize_polynomial(g, target, new_var) for g in gb])


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check(I, J)
    if I is J:
        return True
    return I.groebner(GREVLEX).elements == J.groebner(GREVLEX).elements


def extend_ideal(I: Ideal, target: RingContext) -> Ideal:
    """Extension of ``I`` to a larger ring containing its variables by name."""
    return Ideal(target, [change_ring(g, target) for g in I.generators])


def from_generators(gens: Sequence[Polynomial], ctx: RingContext | None = None) -> Ideal:
    if ctx is None:
        if not gens:
            raise ValueError("ring context required for an empty generator list")
        ctx = gens[0].ctx
    return Ideal(ctx, gens)

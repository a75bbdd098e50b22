"""Buchberger's algorithm and the invariants of zero-dimensional quotients."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .poly import (
    GREVLEX,
    Exponents,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingContext,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class InfiniteQuotientError(ArithmeticError):
    """The quotient ring is not finite-dimensional."""


class NotHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class HilbertFunction:
    """Values h(0), h(1), ..., h(d) with trailing zeros trimmed."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        if isinstance(i, int) and i >= len(self.values):
            return 0
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, HilbertFunction):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __str__(self):
        return "(" + ", ".join(map(str, self.values)) + ")"


def socle_degree(h: HilbertFunction) -> int:
    if not h.values:
        raise ValueError("socle degree of the zero Hilbert function is undefined")
    return len(h.values) - 1


# --- low-level reduction on term dicts --------------------------------------

Terms = dict  # Exponents -> Fraction


def _lead(terms: Terms, key) -> Exponents:
    return max(terms, key=key)


def _sub_multiple(target: Terms, g: Terms, shift: Exponents, coeff: Fraction) -> None:
    """target -= coeff * x^shift * g, in place."""
    for e, c in g.items():
        t = mono_mul(e, shift)
        s = target.get(t, 0) - coeff * c
        if s:
            target[t] = s
        else:
            target.pop(t, None)


def _normal_form(p: Terms, basis: list[tuple[Exponents, Terms]], key) -> Terms:
    """Full reduction of ``p`` by monic ``basis`` elements given as (lead, terms)."""
    p = dict(p)
    result: Terms = {}
    # max-heap of pending monomials; entries may be stale after cancellation
    heap = [(_Desc(key(m)), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                for e, gc in g.items():
                    t = mono_mul(e, shift)
                    s = p.get(t, 0) - c * gc
                    if s:
                        p[t] = s
                        if t not in queued:
                            queued.add(t)
                            heapq.heappush(heap, (_Desc(key(t)), t))
                    else:
                        p.pop(t, None)
                break
        else:
            result[m] = c
            del p[m]
    return result


class _Desc:
    """Inverts comparison so heapq pops the largest key first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def _monic(terms: Terms, key) -> tuple[Exponents, Terms]:
    lm = _lead(terms, key)
    inv = 1 / terms[lm]
    return lm, {e: c * inv for e, c in terms.items()}


# --- Groebner bases ----------------------------------------------------------

class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, sorted by descending leading monomial."""

    def __init__(self, ctx: RingContext, order: MonomialOrder, elements: Sequence[Polynomial]):
        self.ctx = ctx
        self.order = order
        self.elements = tuple(elements)
        self.leading = tuple(g.leading_monomial(order) for g in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ctx == other.ctx and self.order == other.order and self.elements == other.elements

    def __hash__(self):
        return hash((self.ctx, self.elements))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def _pairs(self):
        return list(zip(self.leading, (g.terms for g in self.elements)))

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ctx != self.ctx:
            raise ValueError("polynomial and basis live in different rings")
        return Polynomial._raw(self.ctx, _normal_form(p.terms, self._pairs(), self.order.key))

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()


def reduce(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Normal form of ``p`` modulo ``basis`` (any list, not necessarily a Groebner basis)."""
    key = order.key
    pairs = []
    for g in basis:
        if g.ctx != p.ctx:
            raise ValueError("polynomial and basis live in different rings")
        if g:
            pairs.append(_monic(g.terms, key))
    return Polynomial._raw(p.ctx, _normal_form(p.terms, pairs, key))


def _spoly(f: tuple[Exponents, Terms], g: tuple[Exponents, Terms]) -> Terms:
    lf, tf = f
    lg, tg = g
    lcm = mono_lcm(lf, lg)
    out = {}
    _sub_multiple(out, tf, mono_div(lcm, lf), Fraction(-1))
    _sub_multiple(out, tg, mono_div(lcm, lg), Fraction(1))
    return out


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX, ctx: RingContext | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair selection follows the normal strategy: smallest lcm degree first,
    then smallest lcm in ``order``, then pair creation order.  Coprime
    leading monomials and the chain criterion discard useless pairs.
    """
    if ctx is None:
        if not gens:
            raise ValueError("ring context required for an empty generator list")
        ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ValueError("generators live in different rings")
    key = order.key
    unit = GroebnerBasis(ctx, order, [ctx.one()])

    G: list[tuple[Exponents, Terms]] = []
    alive: list[bool] = []
    queue: list = []
    done: set[tuple[int, int]] = set()
    counter = 0

    def add(poly: tuple[Exponents, Terms]):
        nonlocal counter
        k = len(G)
        G.append(poly)
        alive.append(True)
        lk = poly[0]
        for i in range(k):
            if not alive[i]:
                continue
            lcm = mono_lcm(G[i][0], lk)
            heapq.heappush(queue, (sum(lcm), key(lcm), counter, i, k, lcm))
            counter += 1
        # elements whose leading monomial is now divisible are redundant for new pairs
        for i in range(k):
            if alive[i] and mono_divides(lk, G[i][0]) and G[i][0] != lk:
                alive[i] = False

    for g in gens:
        if g.is_zero():
            continue
        r = _normal_form(g.terms, [G[i] for i in range(len(G)) if alive[i]] if G else [], key)
        if not r:
            continue
        if all(not any(e) for e in r):
            return unit
        add(_monic(r, key))

    while queue:
        _, _, _, i, j, lcm = heapq.heappop(queue)
        done.add((i, j))
        li, lj = G[i][0], G[j][0]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        if _chain_criterion(i, j, lcm, G, done):
            continue
        s = _spoly(G[i], G[j])
        r = _normal_form(s, G, key)
        if not r:
            continue
        if all(not any(e) for e in r):
            return unit
        add(_monic(r, key))

    return GroebnerBasis(ctx, order, _interreduce(ctx, G, key))


def _chain_criterion(i, j, lcm, G, done) -> bool:
    # some g_k with lm(g_k) | lcm(i, j) whose pairs with i and j were already treated
    for k in range(len(G)):
        if k == i or k == j:
            continue
        if not mono_divides(G[k][0], lcm):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def _interreduce(ctx, G, key) -> list[Polynomial]:
    # minimal basis: drop elements whose leading monomial another one divides
    minimal = []
    for idx, (lm, t) in enumerate(G):
        redundant = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx:
                continue
            if mono_divides(lm2, lm) and (lm2 != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append((lm, t))
    reduced = []
    for idx, (lm, t) in enumerate(minimal):
        others = [minimal[j] for j in range(len(minimal)) if j != idx]
        tail = dict(t)
        del tail[lm]
        nf = _normal_form(tail, others, key)
        nf[lm] = Fraction(1)
        reduced.append((lm, nf))
    reduced.sort(key=lambda x: key(x[0]), reverse=True)
    return [Polynomial._raw(ctx, t) for _, t in reduced]


def membership(p: Polynomial, gb: GroebnerBasis) -> bool:
    return gb.contains(p)


# --- quotient invariants -------------------------------------------------------

def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    if gb.is_unit():
        return True
    n = gb.ctx.nvars
    found = [False] * n
    for lm in gb.leading:
        support = [i for i, k in enumerate(lm) if k]
        if len(support) == 1:
            found[support[0]] = True
    return all(found)


def standard_monomials(gb: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the leading-term ideal, ascending by degree then by order."""
    if not is_zero_dimensional(gb):
        raise InfiniteQuotientError("quotient is not finite-dimensional")
    if gb.is_unit():
        return []
    n = gb.ctx.nvars
    leads = gb.leading

    def standard(e):
        return not any(mono_divides(lm, e) for lm in leads)

    out: list[Exponents] = []
    layer = [(0,) * n]
    seen = set(layer)
    while layer:
        layer = [e for e in layer if standard(e)]
        out.extend(sorted(layer, key=gb.order.key))
        nxt = []
        for e in layer:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1 :]
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        layer = nxt
    return [Monomial(e) for e in out]


def _basis_for(gens, order, ctx) -> GroebnerBasis:
    if isinstance(gens, GroebnerBasis):
        return gens
    from .ideals import Ideal

    if isinstance(gens, Ideal):
        return gens.groebner(order)
    return buchberger(list(gens), order, ctx=ctx)


def quotient_dimension(gens, order: MonomialOrder = GREVLEX, ctx: RingContext | None = None) -> int:
    """Dimension over the rationals of the quotient ring by the generated ideal."""
    gb = _basis_for(gens, order, ctx)
    if not is_zero_dimensional(gb):
        raise InfiniteQuotientError("quotient is not finite-dimensional")
    return len(standard_monomials(gb))


def hilbert_function(gens, order: MonomialOrder = GREVLEX, ctx: RingContext | None = None) -> HilbertFunction:
    """Hilbert function of a graded zero-dimensional quotient."""
    from .ideals import Ideal

    polys = gens.generators if isinstance(gens, Ideal) else gens
    if not isinstance(polys, GroebnerBasis):
        for g in polys:
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"generator {g} is not homogeneous")
    if not order.is_graded:
        order = GREVLEX
    gb = _basis_for(gens, order, ctx)
    counts: dict[int, int] = {}
    for m in standard_monomials(gb):
        counts[m.degree] = counts.get(m.degree, 0) + 1
    top = max(counts, default=-1)
    return HilbertFunction(tuple(counts.get(i, 0) for i in range(top + 1)))

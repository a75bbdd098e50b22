"""Exact multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`; polynomials are sparse maps
from exponent tuples to nonzero coefficients, tied to a :class:`RingContext`
that fixes the variable names and their order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Mapping, Union

Rational = Fraction
Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class ContextMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"cannot convert {value!r} to an exact rational")
    return Fraction(value)


@dataclass(frozen=True)
class RingContext:
    """Ordered, immutable set of variable names; every variable has degree 1."""

    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __len__(self) -> int:
        return len(self.variables)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: Scalar) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: as_rational(c)})

    def var(self, name: str) -> Polynomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(v) for v in self.variables)

    def monomial(self, exponents: Iterable[int], coeff: Scalar = 1) -> Polynomial:
        return Polynomial(self, {tuple(exponents): as_rational(coeff)})

    def extend(self, *names: str, front: bool = False) -> RingContext:
        for name in names:
            if name in self:
                raise ValueError(f"variable {name!r} already in context")
        if front:
            return RingContext(names + self.variables)
        return RingContext(self.variables + names)

    def __repr__(self) -> str:
        return f"RingContext({', '.join(self.variables)})"


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: Exponents

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(mono_mul(self.exponents, other.exponents))

    def divides(self, other: Monomial) -> bool:
        return mono_divides(self.exponents, other.exponents)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(mono_div(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(mono_lcm(self.exponents, other.exponents))

    def to_str(self, ctx: RingContext) -> str:
        return _format_monomial(self.exponents, ctx.variables) or "1"


# Raw exponent-tuple helpers; the Groebner engine works on these directly.

def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent vectors of the given total degree (lex-descending)."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


# --- monomial orders -------------------------------------------------------

class MonomialOrder:
    """A multiplicative total order on monomials, realised by a sort key."""

    name = "order"

    def key(self, e: Exponents):
        raise NotImplementedError

    def compare(self, m1, m2) -> int:
        a = m1.exponents if isinstance(m1, Monomial) else tuple(m1)
        b = m2.exponents if isinstance(m2, Monomial) else tuple(m2)
        if len(a) != len(b):
            raise ValueError("monomials of different length")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @property
    def is_graded(self) -> bool:
        return False

    def __repr__(self) -> str:
        return self.name


class _Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, e):
        return (sum(e), tuple(-x for x in reversed(e)))

    @property
    def is_graded(self):
        return True

    def __eq__(self, other):
        return isinstance(other, _Grevlex)

    def __hash__(self):
        return hash(self.name)


class _Lex(MonomialOrder):
    name = "lex"

    def key(self, e):
        return e

    def __eq__(self, other):
        return isinstance(other, _Lex)

    def __hash__(self):
        return hash(self.name)


class _Grlex(MonomialOrder):
    name = "grlex"

    def key(self, e):
        return (sum(e), e)

    @property
    def is_graded(self):
        return True

    def __eq__(self, other):
        return isinstance(other, _Grlex)

    def __hash__(self):
        return hash(self.name)


GREVLEX = _Grevlex()
LEX = _Lex()
GRLEX = _Grlex()

ORDERS = {"grevlex": GREVLEX, "lex": LEX, "grlex": GRLEX, "graded-lex": GRLEX}


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Elimination order: the first ``split`` variables form the dominant block.

    Any monomial involving a first-block variable is larger than every
    monomial in the remaining variables alone.
    """

    split: int
    first: MonomialOrder = GREVLEX
    second: MonomialOrder = GREVLEX

    def key(self, e):
        return (self.first.key(e[: self.split]), self.second.key(e[self.split:]))

    @property
    def name(self):
        return f"block({self.split}; {self.first!r}, {self.second!r})"

    def __repr__(self):
        return self.name


def get_order(name: str) -> MonomialOrder:
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None


# --- polynomials -----------------------------------------------------------

def _format_monomial(e: Exponents, names: tuple[str, ...]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[Exponents, Scalar]):
        n = ctx.nvars
        clean = {}
        for e, c in terms.items():
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            c = as_rational(c)
            if c:
                clean[tuple(e)] = c
        self.ctx = ctx
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # trusted constructor: terms already cleaned
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        p._hash = None
        return p

    # -- basic properties
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ctx.nvars, Fraction(0))

    def coefficient(self, exponents: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def homogeneous_part(self, degree: int) -> Polynomial:
        return Polynomial._raw(self.ctx, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending ``order``."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    def variables_used(self) -> set[str]:
        names = self.ctx.variables
        return {names[i] for e in self.terms for i, k in enumerate(e) if k}

    # -- arithmetic
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, e: Exponents, c: Fraction) -> Polynomial:
        """Multiply by the single term ``c * x^e``."""
        if not c:
            return self.ctx.zero()
        return Polynomial._raw(
            self.ctx, {tuple(x + y for x, y in zip(m, e)): c * k for m, k in self.terms.items()}
        )

    # -- equality / hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.ctx.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .parser import serialize

        return serialize(self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ctx != q.ctx:
        raise ContextMismatchError(f"{p.ctx!r} vs {q.ctx!r}")
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ctx != q.ctx:
        raise ContextMismatchError(f"{p.ctx!r} vs {q.ctx!r}")
    return p * q


def substitute(p: Polynomial, assignments: Mapping[str, Union[Polynomial, Scalar]]) -> Polynomial:
    """Image of ``p`` under the ring map sending each assigned variable to its image.

    Unassigned variables are mapped to the variable of the same name in the
    target ring, which is the common ring of the polynomial images (or
    ``p``'s own ring when every image is a scalar).
    """
    for name in assignments:
        if name not in p.ctx:
            raise KeyError(f"unknown variable {name!r}")
    targets = {v.ctx for v in assignments.values() if isinstance(v, Polynomial)}
    if len(targets) > 1:
        raise ContextMismatchError("substitution images live in different rings")
    target = targets.pop() if targets else p.ctx

    images: list[Polynomial | None] = []
    for name in p.ctx.variables:
        if name in assignments:
            img = assignments[name]
            images.append(img if isinstance(img, Polynomial) else target.const(img))
        elif name in target:
            images.append(target.var(name))
        else:
            images.append(None)

    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, k: int) -> Polynomial:
        if (i, k) not in powers:
            powers[(i, k)] = images[i] ** k
        return powers[(i, k)]

    result = target.zero()
    for e, c in p.terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                if images[i] is None:
                    raise KeyError(f"variable {p.ctx.variables[i]!r} has no image in {target!r}")
                term = term * power(i, k)
        result = result + term
    return result


def change_ring(p: Polynomial, target: RingContext) -> Polynomial:
    """Move ``p`` into ``target``, matching variables by name."""
    idx = []
    for i, name in enumerate(p.ctx.variables):
        idx.append(target.index(name) if name in target else None)
    out = {}
    for e, c in p.terms.items():
        new = [0] * target.nvars
        for i, k in enumerate(e):
            if k:
                if idx[i] is None:
                    raise KeyError(f"variable {p.ctx.variables[i]!r} not in {target!r}")
                new[idx[i]] = k
        out[tuple(new)] = c
    return Polynomial._raw(target, out)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """Return 1, 0 or -1 as ``m1`` is greater than, equal to or less than ``m2``."""
    return order.compare(m1, m2)


def falling_factorial_ratio(n: int, k: int) -> int:
    """``n! / (n - k)!``: coefficient picked up by k-fold differentiation of x^n."""
    return factorial(n) // factorial(n - k)


def exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient ``p / f``; raises ArithmeticError when ``f`` does not divide ``p``."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.ctx != f.ctx:
        raise ContextMismatchError(f"{p.ctx!r} vs {f.ctx!r}")
    order = GREVLEX
    lm = f.leading_monomial(order)
    lc = f.terms[lm]
    rem = dict(p.terms)
    quot: dict[Exponents, Fraction] = {}
    while rem:
        m = max(rem, key=order.key)
        if not mono_divides(lm, m):
            raise ArithmeticError("polynomial division is not exact")
        q_e = mono_div(m, lm)
        q_c = rem[m] / lc
        quot[q_e] = q_c
        for e, c in f.terms.items():
            t = mono_mul(e, q_e)
            s = rem.get(t, 0) - q_c * c
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Polynomial._raw(p.ctx, quot)



import random

import pytest

from apolarkit.apolarity import (
    DualPairing,
    apolar_hilbert,
    apolar_ideal,
    catalecticant,
    contract,
    dual_name,
)
from apolarkit.groebner import NotHomogeneousError
from apolarkit.ideals import Ideal
from apolarkit.linalg import RowSpace
from apolarkit.parser import parse_ideal, parse_polynomial
from apolarkit.poly import ContextMismatchError, RingContext, monomials_of_degree, substitute

from conftest import IF_TEXT, random_form, random_poly

X = RingContext(["x1", "x2", "x3", "x4", "x5"])
A = RingContext(["a1", "a2", "a3", "a4", "a5"])
PAIR = DualPairing(X, A)


def fx(text):
    return parse_polynomial(text, X)


def fa(text):
    return parse_polynomial(text, A)


def test_dual_names():
    assert dual_name("x3") == "a3"
    assert dual_name("y") == "dy"
    assert DualPairing.for_primal(X).dual == A


def test_contraction_is_differentiation():
    assert contract(fa("a1"), fx("x1^3"), PAIR) == fx("3*x1^2")
    assert contract(fa("a1^2*a2"), fx("x1^2*x2*x3"), PAIR) == fx("2*x3")
    assert contract(fa("a2"), fx("x1^3"), PAIR).is_zero()


def test_pairing_mismatch():
    with pytest.raises(ContextMismatchError):
        contract(fx("x1"), fx("x1"), PAIR)
    with pytest.raises(ValueError):
        DualPairing(X, RingContext(["a1"]))


def test_listed_generators_annihilate(F):
    for g in parse_ideal(IF_TEXT, A):
        assert contract(g, F, PAIR).is_zero()


def test_apolar_ideal_of_form(F):
    I = apolar_ideal(F, A)
    assert I == Ideal(A, parse_ideal(IF_TEXT, A))
    assert len(I.generators) == 10
    assert I.quotient_dimension() == 12
    assert I.hilbert_function() == (1, 5, 5, 1)


def test_restricted_form():
    F = fx("x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4")
    small = RingContext(["x2", "x3", "x4", "x5"])
    G = substitute(F, {"x1": 0})
    G = parse_polynomial(str(G), small)
    assert apolar_ideal(G).hilbert_function() == (1, 4, 4, 1)
    assert apolar_hilbert(G) == (1, 4, 4, 1)


def test_catalecticant_rank(F):
    C = catalecticant(F, 1)
    assert (C.matrix.rows, C.matrix.cols) == (15, 5)
    assert C.rank == 5
    with pytest.raises(ValueError):
        catalecticant(F, 4)


def test_power_of_linear_form():
    one = RingContext(["x1"])
    I = apolar_ideal(parse_polynomial("x1^3", one))
    assert [str(g) for g in I.generators] == ["a1^4"]


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        apolar_ideal(X.zero())
    with pytest.raises(NotHomogeneousError):
        apolar_hilbert(fx("x1 + 1"))


def test_leibniz_and_bilinearity():
    rng = random.Random(44)
    for _ in range(60):
        s, t = random_poly(rng, A, 2, 3), random_poly(rng, A, 2, 3)
        F, G = random_poly(rng, X, 4, 4), random_poly(rng, X, 4, 4)
        assert contract(s * t, F, PAIR) == contract(s, contract(t, F, PAIR), PAIR)
        assert contract(s + t, F, PAIR) == contract(s, F, PAIR) + contract(t, F, PAIR)
        assert contract(s, F + G, PAIR) == contract(s, F, PAIR) + contract(s, G, PAIR)


def test_linear_operator_leibniz():
    rng = random.Random(45)
    for _ in range(40):
        F, G = random_poly(rng, X, 3, 3), random_poly(rng, X, 3, 3)
        i = rng.randrange(5)
        a = A.gens()[i]
        lhs = contract(a, F * G, PAIR)
        rhs = contract(a, F, PAIR) * G + F * contract(a, G, PAIR)
        assert lhs == rhs


def test_hilbert_symmetry_and_paths_small():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(2, 4)
        ctx = RingContext([f"x{i}" for i in range(1, n + 1)])
        F = random_form(rng, ctx, rng.choice([3, 4]))
        I = apolar_ideal(F)
        h = I.hilbert_function()
        assert tuple(h) == tuple(reversed(tuple(h)))
        assert h == apolar_hilbert(F)
        for g in I.generators:
            assert contract(g, F).is_zero()


def test_nonhomogeneous_annihilator():
    rng = random.Random(3)
    for _ in range(8):
        ctx = RingContext(["x1", "x2", "x3"])
        F = random_poly(rng, ctx, 3, 5)
        if F.is_zero() or F.is_homogeneous():
            continue
        I = apolar_ideal(F)
        for g in I.generators:
            assert contract(g, F).is_zero()
        # the quotient is the space of derivatives of F
        derivs = {contract(m, F) for m in _dual_monomials(I.ctx, F.degree)}
        span = _span_dim(derivs, ctx, F.degree)
        assert I.quotient_dimension() == span


def _dual_monomials(ctx, d):
    return [ctx.monomial(m) for k in range(d + 1) for m in monomials_of_degree(ctx.nvars, k)]


def _span_dim(polys, ctx, d):
    monos = [m for k in range(d + 1) for m in monomials_of_degree(ctx.nvars, k)]
    index = {m: i for i, m in enumerate(monos)}
    space = RowSpace(len(monos))
    for p in polys:
        row = [0] * len(monos)
        for m, c in p.terms.items():
            row[index[m]] = c
        space.add(row)
    return len(space)

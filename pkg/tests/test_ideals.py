import random

import pytest

from apolarkit.groebner import NotHomogeneousError
from apolarkit.ideals import (
    Ideal,
    homogenize,
    ideal,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_saturation,
    saturate,
)
from apolarkit.parser import parse_ideal, parse_polynomial
from apolarkit.poly import ContextMismatchError, RingContext, substitute

from conftest import IF_TEXT, random_form, random_poly

XY = RingContext(["x", "y"])
A = RingContext(["a1", "a2", "a3", "a4", "a5"])


def I_(text, ctx=XY):
    return Ideal(ctx, parse_ideal(text, ctx))


def p_(text, ctx=XY):
    return parse_polynomial(text, ctx)


class TestBasicOperations:
    def test_intersection_of_coordinate_ideals(self):
        assert ideal_intersect(I_("x"), I_("y")) == I_("x*y")

    def test_intersection_non_principal(self):
        assert ideal_intersect(I_("x^2, y"), I_("x, y^2")) == I_("x^2, x*y, y^2")

    def test_intersection_with_unit(self):
        J = I_("x^2 - y, y^3")
        assert ideal_intersect(J, Ideal.unit(XY)) == J

    def test_sum_comaximal(self):
        assert ideal_sum(I_("x"), I_("x - 1")).is_unit()

    def test_product(self):
        assert ideal_product(I_("x, y"), I_("x, y")) == I_("x^2, x*y, y^2")
        assert ideal_power(I_("x, y"), 3) == I_("x^3, x^2*y, x*y^2, y^3")

    def test_power_rejects_zero(self):
        with pytest.raises(ValueError):
            ideal_power(I_("x"), 0)

    def test_colon(self):
        assert ideal_colon(I_("x^2, x*y"), p_("x")) == I_("x, y")
        with pytest.raises(ZeroDivisionError):
            ideal_colon(I_("x"), XY.zero())

    def test_saturate(self):
        assert saturate(I_("x^3*y, x^2*y^2"), p_("x")) == I_("y")

    def test_operators(self):
        I, J = I_("x"), I_("y")
        assert I + J == I_("x, y")
        assert I * J == I_("x*y")
        assert I & J == I_("x*y")
        assert I**2 == I_("x^2")

    def test_membership_and_subset(self):
        I = I_("x^2, y^2")
        assert p_("x^2*y + y^3") in I
        assert p_("x*y") not in I
        assert I.issubset(I_("x, y"))
        assert not I_("x, y").issubset(I)

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            ideal_sum(I_("x"), I_("a1", A))

    def test_fresh_variable_avoids_t(self):
        ctx = RingContext(["t", "t_"])
        I = Ideal(ctx, parse_ideal("t", ctx))
        J = Ideal(ctx, parse_ideal("t_", ctx))
        assert ideal_intersect(I, J) == Ideal(ctx, parse_ideal("t*t_", ctx))


class TestHomogenization:
    def test_homogenize_uses_the_ideal_not_generators(self):
        # generators x^2 - y and x^2 homogenize to (x^2 - y*z, x^2),
        # but the ideal contains y, whose homogenization is y
        H = homogenize(I_("x^2 - y, x^2"), "z")
        assert parse_polynomial("y", H.ctx) in H

    def test_collision(self):
        with pytest.raises(ValueError):
            homogenize(I_("x"), "x")

    def test_saturated(self):
        H = homogenize(I_("x^2 - y, y^2"), "z")
        assert irrelevant_saturation(H) == H

    def test_irrelevant_saturation_removes_embedded_component(self):
        I = Ideal(XY, parse_ideal("x^2, x*y", XY))
        assert irrelevant_saturation(I) == I_("x")
        with pytest.raises(NotHomogeneousError):
            irrelevant_saturation(I_("x - 1"))


def _random_ideal(rng, ctx, k=2):
    return Ideal(ctx, [random_poly(rng, ctx, 2, 3) for _ in range(k)])


def test_product_in_intersection_in_factors():
    rng = random.Random(8)
    ctx = RingContext(["x", "y", "z"])
    for _ in range(20):
        I, J = _random_ideal(rng, ctx), _random_ideal(rng, ctx)
        meet = ideal_intersect(I, J)
        assert ideal_product(I, J).issubset(meet)
        assert meet.issubset(I) and meet.issubset(J)


def test_colon_inverts_principal_product():
    rng = random.Random(81)
    ctx = RingContext(["x", "y", "z"])
    for _ in range(15):
        I = _random_ideal(rng, ctx)
        f = random_poly(rng, ctx, 2, 2)
        if f.is_zero():
            continue
        assert ideal_colon(ideal_product(I, Ideal(ctx, [f])), f) == I


def test_saturation_is_idempotent():
    rng = random.Random(12)
    ctx = RingContext(["x", "y", "z"])
    for _ in range(10):
        I = Ideal(ctx, [random_form(rng, ctx, 2, 0.4) for _ in range(2)])
        f = ctx.var(rng.choice(ctx.variables))
        S = saturate(I, f)
        assert saturate(S, f) == S
        assert I.issubset(S)


def test_crt_small_comaximal():
    I = Ideal(A, parse_ideal(IF_TEXT, A))
    shifted = Ideal(A, [substitute(g, {"a1": p_("a1 - 1", A)}) for g in I.generators])
    assert ideal_sum(I, shifted).is_unit()
    meet = ideal_intersect(I, shifted)
    assert meet == ideal_product(I, shifted)
    assert meet.quotient_dimension() == 24


def test_ideal_equal_ignores_generator_choice():
    assert ideal_equal(I_("x + y, x - y"), I_("x, y"))
    assert ideal(XY, p_("x")) != I_("y")

import pytest

from apolarkit.oracle import macaulay_truncation, oracle_membership, oracle_quotient_dimension
from apolarkit.parser import parse_ideal, parse_polynomial
from apolarkit.poly import RingContext

from conftest import IF_TEXT

A = RingContext(["a1", "a2", "a3", "a4", "a5"])
XY = RingContext(["x", "y"])


def test_if_pieces():
    gens = parse_ideal(IF_TEXT, A)
    T = macaulay_truncation(gens, 4)
    assert [T.quotient_piece(e) for e in range(5)] == [1, 5, 5, 1, 0]
    assert oracle_quotient_dimension(gens, 4) == 12


def test_bound_too_small_returns_none():
    gens = parse_ideal(IF_TEXT, A)
    assert oracle_quotient_dimension(gens, 3) is None


def test_infinite_quotient_never_vanishes():
    assert oracle_quotient_dimension(parse_ideal("x*y", XY), 8) is None


def test_membership():
    gens = parse_ideal("x^2, y^2", XY)
    assert oracle_membership(parse_polynomial("x^2*y - 3*y^3", XY), gens, 3)
    assert not oracle_membership(parse_polynomial("x*y", XY), gens, 3)
    assert oracle_membership(XY.zero(), gens, 0)


def test_rejects_bad_input():
    gens = parse_ideal("x^2, y^2", XY)
    with pytest.raises(ValueError):
        oracle_membership(parse_polynomial("x + 1", XY), gens, 3)
    with pytest.raises(ValueError):
        oracle_membership(parse_polynomial("x^4", XY), gens, 3)
    with pytest.raises(ValueError):
        oracle_quotient_dimension(parse_ideal("x^2 - y", XY), 3)
    with pytest.raises(ValueError):
        oracle_quotient_dimension([], 3)


def test_empty_generators_with_context():
    assert oracle_quotient_dimension([], 2, XY) is None

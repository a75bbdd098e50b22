import random
from fractions import Fraction

import pytest

from apolarkit.parser import parse_ideal, parse_polynomial
from apolarkit.poly import Polynomial, RingContext, monomials_of_degree

IF_TEXT = "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2"
F_TEXT = "x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4"


@pytest.fixture(scope="session")
def X():
    return RingContext(["x1", "x2", "x3", "x4", "x5"])


@pytest.fixture(scope="session")
def A():
    return RingContext(["a1", "a2", "a3", "a4", "a5"])


@pytest.fixture(scope="session")
def F(X):
    return parse_polynomial(F_TEXT, X)


@pytest.fixture(scope="session")
def IF_gens(A):
    return parse_ideal(IF_TEXT, A)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_form(rng, ctx: RingContext, degree: int, density: float = 0.6, coeffs=(-3, 3)) -> Polynomial:
    terms = {}
    for m in monomials_of_degree(ctx.nvars, degree):
        if rng.random() < density:
            terms[m] = rng.randint(*coeffs)
    if not any(terms.values()):
        m = rng.choice(monomials_of_degree(ctx.nvars, degree))
        terms[m] = 1
    return Polynomial(ctx, terms)


def random_poly(rng, ctx: RingContext, max_degree: int, nterms: int, denominators=False) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_degree)
        m = rng.choice(monomials_of_degree(ctx.nvars, d))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4) if denominators else 1)
        terms[m] = c
    return Polynomial(ctx, terms)


def random_zero_dim_homogeneous(rng, nvars: int, max_degree: int = 3):
    """Random homogeneous generators that usually define a zero-dimensional ideal."""
    ctx = RingContext([f"y{i}" for i in range(1, nvars + 1)])
    ngens = nvars + rng.randint(0, 2)
    gens = []
    for _ in range(ngens):
        d = rng.randint(1, max_degree)
        gens.append(random_form(rng, ctx, d, density=rng.choice([0.3, 0.6, 1.0])))
    return ctx, gens


# --- acceptance reporting --------------------------------------------------------

_ACCEPTANCE: dict[str, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    criterion = str(marker.args[0])
    _ACCEPTANCE.setdefault(criterion, []).append("PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE, key=lambda c: (len(c), c)):
        results = _ACCEPTANCE[criterion]
        status = "PASS" if all(r == "PASS" for r in results) else "FAIL"
        terminalreporter.write_line(f"criterion {criterion}: {status} ({len(results)} test(s))")

import random

import hypothesis.strategies as st
import pytest
import sympy

from poissonres.exactalg import Polynomial
from poissonres.poisson import Bivector


def polys(nvars, max_deg=3, max_terms=4, coeff=5):
    mono = st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).map(tuple)
    c = st.fractions(min_value=-coeff, max_value=coeff, max_denominator=3)
    return st.dictionaries(mono, c, max_size=max_terms).map(lambda d: Polynomial(nvars, d))


def to_sympy(p: Polynomial, xs):
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(xs, m):
            t *= x**e
        expr += t
    return sympy.expand(expr)


def from_sympy(expr, xs) -> Polynomial:
    poly = sympy.Poly(sympy.expand(expr), *xs)
    from fractions import Fraction
    return Polynomial(len(xs), {m: Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
                                for m, c in poly.terms()})


def symbols(n):
    return sympy.symbols(f"x1:{n + 1}")


@pytest.fixture
def rng():
    return random.Random(20261016)


def rotational():
    return Bivector.from_strings(3, {(1, 2): "x3", (2, 3): "x1", (1, 3): "-x2"})


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and rep.when == "call":
        number, title = mark.args
        _CRITERIA[number] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"{status}  criterion {number:2d}: {title}")

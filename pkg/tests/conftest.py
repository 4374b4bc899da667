import sympy
from fractions import Fraction

from capelli.coeff_field import QT, FieldElement

SQ, ST, SR = sympy.symbols("q t r")


def to_sympy(a):
    """A field element (or rational) as a sympy expression."""
    if not isinstance(a, FieldElement):
        return sympy.Rational(Fraction(a).numerator, Fraction(a).denominator)
    syms = [{"q": SQ, "t": ST, "r": SR}[v] for v in a.field.vars]

    def poly(d):
        return sum(sympy.Integer(c) * sympy.Mul(*[s ** e for s, e in zip(syms, k)]) for k, c in d.items())

    return poly(a._n) / poly(a._d)


def from_sympy(expr, field=QT):
    expr = sympy.cancel(sympy.together(expr))
    num, den = sympy.fraction(expr)
    syms = [{"q": SQ, "t": ST, "r": SR}[v] for v in field.vars]

    def terms(p):
        P = sympy.Poly(p, *syms)
        return {k: Fraction(int(c.p), int(c.q)) for k, c in P.terms()}

    return FieldElement(field, terms(num), terms(den))


# --- acceptance summary: one PASS/FAIL line per criterion ------------------------------------

import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed):
        return
    num, title = mark.args
    _, ok = _CRITERIA.get(num, (title, True))
    _CRITERIA[num] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok = _CRITERIA[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num:2d}: {title}")

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from capelli.coeff_field import (
    QT, Q, R, FieldElement, LimitError, NonGenericSpecialization, ParamPolynomial,
    field_arith, limit_q1, param_gcd, specialize, substitute_t_power,
)
from conftest import SQ, ST, from_sympy, to_sympy

q, t = QT.gen("q"), QT.gen("t")
PQ = ParamPolynomial.gen(("q", "t"), "q")
PT = ParamPolynomial.gen(("q", "t"), "t")


def test_arith_examples():
    assert field_arith(q, t, "add") == q + t
    assert field_arith(q * t - 1, q * t - 1, "div") == QT.one
    assert field_arith((t - 1) / (q * t - 1), (q * t - 1) / (t - 1), "mul") == QT.one
    with pytest.raises(ValueError):
        field_arith(q, t, "pow")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        q / QT.zero


def test_gcd_examples():
    assert param_gcd(PQ * PQ * PT - PQ * PT, PQ * PT) == PQ * PT
    assert param_gcd(PQ * PT - 1, PT - 1) == ParamPolynomial.constant(("q", "t"), 1)
    assert param_gcd((PQ * PT - 1) * (PT - 1), (PQ * PT - 1) * (PQ - 1)) == PQ * PT - 1


def test_gcd_exhaustive_low_degree():
    # qt - 1 and t - 1 share no divisor among all monic q,t-polynomials of degree <= 1 with small coefficients
    cands = [a * PQ + b * PT + c for a in (0, 1) for b in (-1, 0, 1) for c in (-2, -1, 1, 2) if a or b]
    for d in cands:
        assert not (d.divides(PQ * PT - 1) and d.divides(PT - 1))


def test_canonical_form_is_structural():
    a = (q ** 2 - 1) / (q - 1)
    assert a == q + 1
    assert a._d == {(0, 0): 1}
    b = (t - 1) / (1 - q * t)
    assert next(iter(sorted(b._d.items(), reverse=True)))[1] > 0  # positive leading denominator
    assert hash((q * t - t) / (q - 1)) == hash(t)


def test_specialize_examples():
    assert specialize((t - 1) / (q * t - 1), {"q": 2, "t": 3}) == Fraction(2, 5)
    assert specialize(q + t, {"q": 1, "t": 1}) == 2
    with pytest.raises(NonGenericSpecialization):
        specialize(1 / (q * t - 1), {"q": 1, "t": 1})


def test_substitute_t_power():
    assert substitute_t_power(t, 2) == Q.gen("q") ** 2
    assert substitute_t_power((t - 1) / (q * t - 1), 1) == 1 / (Q.gen("q") + 1)
    with pytest.raises(NonGenericSpecialization):
        substitute_t_power(1 / (t - q), 1)


def test_limit_examples():
    qq = Q.gen("q")
    assert limit_q1(qq - 1, 1) == 1
    assert limit_q1((qq - 1) ** 2, 1) == 0
    for a in range(4):
        for b in range(3):
            for r in (1, 2, 3):
                expr = substitute_t_power(QT.monomial((a, b)) - 1, r)
                assert limit_q1(expr, 1) == a + b * r
    with pytest.raises(LimitError):
        limit_q1(qq + 1, 1)
    with pytest.raises(LimitError):
        limit_q1(1 / (qq - 1), 0)


def test_classical_field():
    r = R.gen("r")
    assert (r + 1) * (r + 2) == r ** 2 + 3 * r + 2
    assert specialize((r + 1) / (r - 1), {"r": 3}) == 2


small = st.integers(-3, 3)
monos = st.tuples(st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, small, min_size=1, max_size=4).filter(lambda d: any(d.values()))


def _elt(n, d):
    return FieldElement(QT, n, d)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys, polys)
def test_field_ops_match_sympy(n1, d1, n2, d2):
    a, b = _elt(n1, d1), _elt(n2, d2)
    sa, sb = to_sympy(a), to_sympy(b)
    for got, want in ((a + b, sa + sb), (a - b, sa - sb), (a * b, sa * sb)):
        assert sympy.cancel(to_sympy(got) - want) == 0
        assert got == from_sympy(want)
    if b:
        assert a / b == from_sympy(sa / sb)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(n1, n2, n3):
    a, b, c = (_elt(x, {(0, 0): 1}) for x in (n1, n2, n3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == QT.zero
    if a:
        assert a * a.inverse() == QT.one


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_gcd_against_sympy(n1, n2):
    a = ParamPolynomial(("q", "t"), n1)
    b = ParamPolynomial(("q", "t"), n2)
    g = param_gcd(a * (PQ * PT - 1), b * (PQ * PT - 1))
    sa = sympy.Poly(sum(c * SQ ** i * ST ** j for (i, j), c in (a * (PQ * PT - 1)).terms.items()), SQ, ST)
    sb = sympy.Poly(sum(c * SQ ** i * ST ** j for (i, j), c in (b * (PQ * PT - 1)).terms.items()), SQ, ST)
    sg = sympy.gcd(sa, sb)
    ours = sympy.Poly(sum(c * SQ ** i * ST ** j for (i, j), c in g.terms.items()), SQ, ST)
    assert sympy.div(ours, sg)[1].is_zero and sympy.div(sg, ours)[1].is_zero

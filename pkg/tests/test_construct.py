from fractions import Fraction
from math import comb

import pytest
import sympy

from capelli import construct as C
from capelli import weights as W
from capelli.coeff_field import QT, Q, R
from capelli.zpoly import ZPolynomial, evaluate, monomial_symmetric_expand, top_homogeneous
from conftest import SQ, SR, ST, from_sympy, to_sympy

q, t = QT.gen("q"), QT.gen("t")
r = R.gen("r")


def z(n, i, field=QT):
    return ZPolynomial.var(n, i, field)


def sympy_interpolant(lam, classical=False, symmetric=False):
    """Oracle: solve the vanishing conditions directly with sympy."""
    n, d = len(lam), sum(lam)
    zs = sympy.symbols(f"z1:{n + 1}")
    if symmetric:
        labels = W.enumerate(d, n, "partitions")
        basis = {mu: sum(sympy.Mul(*[x ** e for x, e in zip(zs, p)]) for p in set(
            __import__("itertools").permutations(mu))) for mu in labels}
    else:
        labels = W.enumerate(d, n)
        basis = {mu: sympy.Mul(*[x ** e for x, e in zip(zs, mu)]) for mu in labels}
    cs = {mu: sympy.Symbol(f"c{'_'.join(map(str, mu))}") for mu in labels if mu != lam}
    f = basis[lam] + sum(cs[mu] * basis[mu] for mu in cs)
    eqs = []
    for mu in labels:
        if mu == lam:
            continue
        if classical:
            pt = [a - SR * k for a, k in zip(mu, W.k_vector(mu))]
        else:
            pt = [SQ ** a * ST ** (-k) for a, k in zip(mu, W.k_vector(mu))]
        eqs.append(f.subs(dict(zip(zs, pt)), simultaneous=True))
    sol = sympy.solve(eqs, list(cs.values()), dict=True)[0] if cs else {}
    field = R if classical else QT
    terms = {lam: 1}
    for mu, c in cs.items():
        terms[mu] = from_sympy(sol[c], field)
    if symmetric:
        out = ZPolynomial.zero(n, field)
        for mu, c in terms.items():
            for p in set(__import__("itertools").permutations(mu)):
                out = out + ZPolynomial.monomial(p, c, field)
        return out
    return ZPolynomial(n, terms, field)


@pytest.mark.parametrize("lam", W.enumerate(2, 2))
def test_nonsym_against_sympy_oracle(lam):
    want = sympy_interpolant(lam)
    assert C.interpolate_nonsym(lam).body == want
    assert C.recurse_nonsym(lam).body == want


@pytest.mark.parametrize("lam", W.enumerate(2, 2, "partitions"))
def test_sym_against_sympy_oracle(lam):
    want = sympy_interpolant(lam, symmetric=True)
    assert C.interpolate_sym(lam).body == want
    assert C.symmetrize_hecke(lam).body == want


@pytest.mark.parametrize("lam", W.enumerate(2, 2))
def test_classical_against_sympy_oracle(lam):
    assert C.interpolate_classical(lam).body == sympy_interpolant(lam, classical=True)


def test_E_10_frozen():
    want = z(2, 1) + z(2, 2).scale((t - 1) / (q * t - 1)) - (q * t ** 2 - 1) / (t * (q * t - 1))
    assert C.interpolate_nonsym((1, 0)).body == want
    assert evaluate(want, (QT.one, 1 / t)) == QT.zero
    assert top_homogeneous(want) == z(2, 1) + z(2, 2).scale((t - 1) / (q * t - 1))


def test_small_cases():
    assert C.interpolate_nonsym((0, 0)).body == ZPolynomial.one(2, QT)
    assert C.interpolate_sym((0, 0)).body == ZPolynomial.one(2, QT)
    assert C.interpolate_sym((1,)).body == z(1, 1) - 1
    assert C.symmetrize_hecke((0, 0, 0)).body == ZPolynomial.one(3, QT)
    x = z(1, 1)
    for k in range(4):
        want = ZPolynomial.one(1, QT)
        for j in range(k):
            want = want * (x - q ** j)
        assert C.interpolate_nonsym((k,)).body == want
        assert C.recurse_nonsym((k,)).body == want


def test_P_10_m_expansion():
    coeffs = monomial_symmetric_expand(C.interpolate_sym((1, 0)).body)
    assert coeffs == {(1, 0): QT.one, (0, 0): -(1 + 1 / t)}


def test_normalized():
    assert C.normalized_nonsym((1,)).body == (z(1, 1) - 1).scale(1 - q * t)
    lam = (0, 2, 1)
    assert C.normalized_nonsym(lam).body == C.recurse_nonsym(lam).body.scale(W.norm_factor(lam))
    assert C.normalized_sym((1, 0)).body == C.interpolate_sym((1, 0)).body.scale(1 - t)


def test_phi_route():
    for lam in W.enumerate(3, 3):
        if lam[-1]:
            assert C.phi_route(lam) == C.recurse_nonsym(lam).body


def test_top_macdonald():
    E = C.interpolate_nonsym((1, 0))
    Eb = C.top_macdonald(E)
    assert Eb.family == "E_bar" and Eb.body.is_homogeneous()
    with pytest.raises(ValueError):
        C.top_macdonald(C.normalized_nonsym((1, 0)))


def test_expand_in_E_basis():
    for lam in W.enumerate(2, 2):
        assert C.expand_in_E_basis(C.recurse_nonsym(lam).body) == {lam: QT.one}
    assert C.expand_in_E_basis(ZPolynomial.one(2, QT)) == {(0, 0): QT.one}
    f = C.recurse_nonsym((1, 0)).body * C.recurse_nonsym((0, 1)).body
    coeffs = C.expand_in_E_basis(f)
    back = ZPolynomial.zero(2, QT)
    for nu, c in coeffs.items():
        back = back + C.recurse_nonsym(nu).body.scale(c)
    assert back == f
    assert all(W.preceq((1, 0), nu) and W.preceq((0, 1), nu) for nu in coeffs)


def test_inversion():
    assert C.inversion_psi(ZPolynomial.one(2, QT)) == ZPolynomial.one(2, QT)
    E = C.interpolate_nonsym((1, 0)).body
    assert C.inversion_psi(top_homogeneous(E)) == E
    for lam in W.enumerate(3, 2):
        E = C.recurse_nonsym(lam).body
        assert C.inversion_psi(top_homogeneous(E)) == E
    with pytest.raises(ValueError):
        C.inversion_psi(E)


def test_classical_inversion():
    one = ZPolynomial.one(2, R)
    assert C.classical_inversion(one) == one
    Et = C.interpolate_classical((1, 0)).body
    assert C.classical_inversion(top_homogeneous(Et)) == Et


def test_q_falling_and_factorial_schur():
    x = z(1, 1, Q)
    qq = Q.gen("q")
    assert C.q_falling(1, 1, 2) == x * x - x.scale(1 + qq) + qq
    for k in range(4):
        assert C.factorial_schur((k,)) == C.q_falling(1, 1, k)
    assert C.factorial_schur((0, 0)) == ZPolynomial.one(2, Q)
    assert C.factorial_schur((1, 0)).is_symmetric()


def test_classical_small():
    x = z(1, 1, R)
    for k in range(4):
        want = ZPolynomial.one(1, R)
        for j in range(k):
            want = want * (x - j)
        assert C.interpolate_classical((k,)).body == want
    assert C.interpolate_classical((0, 0)).body == ZPolynomial.one(2, R)
    assert C.interpolate_classical((1, 0), sym=True).body == z(2, 1, R) + z(2, 2, R) + r


def test_classical_limit_examples():
    for r_ in (1, 2, 3):
        assert C.classical_limit_check((0, 0), r_)
    assert C.classical_limit_check((1, 0), 1)
    assert C.classical_limit_check((2,), 1)
    lim = C.classical_limit(C.recurse_nonsym((2,)).body, 1, 2)
    x = ZPolynomial.var(1, 1)
    assert lim == x * (x - 1)


def test_unisolvence_determinant_matches_elimination():
    from capelli.coeff_field import specialize
    from capelli.linsolve import determinant
    q0, t0 = Fraction(3, 7), Fraction(5, 2)
    for n, d, s in ((2, 2, False), (2, 3, True), (3, 1, False)):
        det = C.unisolvence_determinant(n, d, s)
        _, M = C.interpolation_matrix(n, d, s)
        Ms = [[specialize(x, {"q": q0, "t": t0}) for x in row] for row in M]
        assert determinant(Ms) == specialize(det, {"q": q0, "t": t0})


def test_labeled_polynomial_validation():
    with pytest.raises(ValueError):
        C.LabeledPolynomial("F", (0,), 1, ZPolynomial.one(1, QT))
    with pytest.raises(ValueError):
        C.interpolate_sym((0, 1))
    with pytest.raises(ValueError):
        C.recurse_nonsym((1, -1))

"""Acceptance battery: every check is an exact equality over Q(q,t), Q(q), Q(r)
or Q; random specializations use exact rationals.  A PASS/FAIL line per
criterion is printed in the terminal summary."""
import random
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import pytest

from capelli import construct as C
from capelli import weights as W
from capelli.coeff_field import QT, Q, R, specialize, substitute_t_power
from capelli.linsolve import determinant
from capelli.ops import classical_ops, quantum_ops
from capelli.suite import random_specialization
from capelli.zpoly import (
    ZPolynomial,
    affine_substitute,
    evaluate,
    evaluate_at_monomials,
    monomial_symmetric,
    monomial_symmetric_expand,
    top_homogeneous,
)

# the oracle range: n <= 3 with |lam| <= 4, and n = 4 with |lam| <= 3
MAIN_RANGE = [(1, 4), (2, 4), (3, 4), (4, 3)]
MAIN_IDS = [f"n{n}d{d}" for n, d in MAIN_RANGE]


def crit(num, title):
    return pytest.mark.criterion(num, title)


def bar_exps(mu):
    return tuple((a, -k) for a, k in zip(mu, W.k_vector(mu)))


def E(lam):
    return C.recurse_nonsym(lam).body


def laurent_shift(c):
    """(min q exponent, min t exponent) if c is in Z[q^+-1, t^+-1], else None."""
    if len(c._d) != 1:
        return None
    ((kd, vd),) = c._d.items()
    if vd != 1 or any(Fraction(v).denominator != 1 for v in c._n.values()):
        return None
    return (min(k[0] for k in c._n) - kd[0], min(k[1] for k in c._n) - kd[1])


# --- 1 ------------------------------------------------------------------------------------------

@crit(1, "unisolvence on S(n,d) and S+(n,d), n <= 3, d <= 3")
@pytest.mark.parametrize("symmetric", [False, True], ids=["nonsym", "sym"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c01_unisolvence(n, symmetric):
    rng = random.Random(100 + n)
    kind = "partitions" if symmetric else "compositions"
    for d in range(4):
        det = C.unisolvence_determinant(n, d, symmetric)
        assert det != 0
        labs = W.enumerate(d, n, kind)
        q0, t0 = random_specialization(rng, 2 * d + n, [W.point_bar(l) for l in labs])
        at = {"q": q0, "t": t0}
        # the same matrix specialized entrywise
        _, M = C.interpolation_matrix(n, d, symmetric)
        assert determinant([[specialize(x, at) for x in row] for row in M]) == specialize(det, at)
        # independent oracle: monomial (or m-) basis evaluated at the specialized points
        cols = [monomial_symmetric(nu) if symmetric else ZPolynomial.monomial(nu) for nu in labs]
        pts = [tuple(Fraction(q0) ** a * Fraction(t0) ** -k for a, k in zip(mu, W.k_vector(mu))) for mu in labs]
        assert determinant([[evaluate(f, p) for f in cols] for p in pts]) != 0


# --- 2 ------------------------------------------------------------------------------------------

@crit(2, "recursion-built E equals interpolation-built E")
@pytest.mark.parametrize("n,d", MAIN_RANGE, ids=MAIN_IDS)
def test_c02_oracle_equivalence(n, d):
    for lam in W.enumerate(d, n):
        assert C.recurse_nonsym(lam).body == C.interpolate_nonsym(lam).body, lam


# --- 3 ------------------------------------------------------------------------------------------

@crit(3, "defining and extra vanishing")
@pytest.mark.parametrize("n,d", MAIN_RANGE, ids=MAIN_IDS)
def test_c03_vanishing(n, d):
    for lam in W.enumerate(d, n):
        f = C.normalized_nonsym(lam).body
        s = sum(lam)
        for mu in W.enumerate(s + 2, n):
            v = evaluate_at_monomials(f, bar_exps(mu))
            if mu == lam:
                assert v != 0
            elif sum(mu) <= s or not W.preceq(lam, mu):
                assert v == 0, (lam, mu)


@crit(3, "defining and extra vanishing")
def test_c03_normalization_is_a_unit_multiple():
    # the exact evaluations above use the normalized polynomial; check the scalar
    for lam in W.enumerate(3, 3):
        assert C.normalized_nonsym(lam).body == E(lam).scale(W.norm_factor(lam))
        assert W.norm_factor(lam) != 0


# --- 4 ------------------------------------------------------------------------------------------

@crit(4, "eigen-equations, quantum and classical")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c04_eigen(n):
    ops, cops = quantum_ops(n), classical_ops(n)
    for lam in W.enumerate(3, n):
        f, ft = E(lam), C.interpolate_classical(lam).body
        pb, pt = W.point_bar(lam), W.point_tilde(lam)
        for i in range(1, n + 1):
            assert ops.Xi(f, i) == f.scale(pb[i - 1].inverse()), (lam, i)
            assert cops.Xi(ft, i) == ft.scale(pt[i - 1]), (lam, i)


# --- 5 ------------------------------------------------------------------------------------------

@crit(5, "Hecke relations on monomials of degree <= 3")
@pytest.mark.parametrize("n", [2, 3])
def test_c05_hecke(n):
    ops = quantum_ops(n)
    t = QT.gen("t")
    for a in W.enumerate(3, n):
        f = ZPolynomial.monomial(a, 1, QT)
        for i in range(1, n):
            H, Hb = ops.H(f, i), ops.Hbar(f, i)
            assert ops.H(H, i) - H.scale(t - 1) - f.scale(t) == 0
            assert ops.H(Hb, i) == f.scale(t)
            assert H - Hb == f.scale(t - 1)
            assert ops.H(ops.Xi(f, i), i) == ops.Xi(Hb, i + 1)
            if i + 1 < n:
                assert ops.H(ops.H(H, i + 1), i) == ops.H(ops.H(ops.H(f, i + 1), i), i + 1)


# --- 6 ------------------------------------------------------------------------------------------

@crit(6, "commutativity of the Xi_i")
@pytest.mark.parametrize("n", [2, 3])
def test_c06_commutativity(n):
    ops = quantum_ops(n)
    for a in W.enumerate(3, n):
        f = ZPolynomial.monomial(a, 1, QT)
        img = {i: ops.Xi(f, i) for i in range(1, n + 1)}
        for i, j in combinations(range(1, n + 1), 2):
            assert ops.Xi(img[i], j) == ops.Xi(img[j], i), (a, i, j)


# --- 7 ------------------------------------------------------------------------------------------

@crit(7, "triangularity of E and P")
@pytest.mark.parametrize("n,d", MAIN_RANGE, ids=MAIN_IDS)
def test_c07_triangularity(n, d):
    for lam in W.enumerate(d, n):
        f = E(lam)
        assert f.coefficient(lam) == 1
        for mu in f.terms:
            assert sum(mu) <= sum(lam)
            if sum(mu) == sum(lam):
                assert W.order_leq(mu, lam), (lam, mu)
    for lam in W.enumerate(d, n, "partitions"):
        coeffs = monomial_symmetric_expand(C.interpolate_sym(lam).body)
        assert coeffs[lam] == 1
        for mu in coeffs:
            if sum(mu) == sum(lam):
                assert W.dominance_leq(mu, lam), (lam, mu)


# --- 8 ------------------------------------------------------------------------------------------

@crit(8, "special cases t = 1 and t = q")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c08_t_equals_one(n):
    rng = random.Random(800 + n)
    for _ in range(3):
        q0 = Fraction(rng.randint(2, 29), rng.randint(1, 31))
        while any(q0 ** e == 1 for e in range(1, 20)):
            q0 = Fraction(rng.randint(2, 29), rng.randint(1, 31))
        for lam in W.enumerate(4, n):
            got = E(lam).map_coefficients(lambda c: specialize(c, {"q": q0, "t": 1}), None)
            want = ZPolynomial.one(n)
            for i in range(n):
                want = want * C.q_falling(n, i + 1, lam[i], field=None, q=q0)
            assert got == want, (lam, q0)


@crit(8, "special cases t = 1 and t = q")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_c08_t_equals_q(n):
    q = Q.gen("q")
    for lam in W.enumerate(4, n, "partitions"):
        P = C.interpolate_sym(lam).body.map_coefficients(lambda c: substitute_t_power(c, 1), Q)
        s = affine_substitute(C.factorial_schur(lam), q ** (n - 1), 0)
        assert P == s.scale(q ** (-(n - 1) * sum(lam))), lam


# --- 9 ------------------------------------------------------------------------------------------

@crit(9, "inversion formula")
@pytest.mark.parametrize("n", [1, 2])
def test_c09_inversion_psi(n):
    for lam in W.enumerate(3, n):
        f = E(lam)
        assert C.inversion_psi(top_homogeneous(f)) == f, lam


@crit(9, "inversion formula")
@pytest.mark.parametrize("n", [1, 2])
def test_c09_raw_scale_as_derived(n):
    # the scalar that the raising operators actually produce
    ops = quantum_ops(n)
    for lam in W.enumerate(3, n):
        d, f = sum(lam), E(lam)
        assert C.inversion_raw(top_homogeneous(f)) == f.scale(ops.q ** -comb(d, 2) * ops.t ** (n * (n - 1) * d))


@crit(9, "inversion formula")
@pytest.mark.parametrize("n", [1, 2])
def test_c09_literal_q_binomial_exponent(n):
    # the stated exponent check Ebar(Z)(1) = q^C(d,2) E, taken literally
    ops = quantum_ops(n)
    bad = [lam for lam in W.enumerate(3, n)
           if C.inversion_raw(top_homogeneous(E(lam))) != E(lam).scale(ops.q ** comb(sum(lam), 2))]
    assert bad == [], f"literal exponent check fails for {bad}"


# --- 10 -----------------------------------------------------------------------------------------

@crit(10, "integrality")
@pytest.mark.parametrize("n,d", MAIN_RANGE, ids=MAIN_IDS)
def test_c10_integrality(n, d):
    for lam in W.enumerate(d, n):
        for mu, c in C.normalized_nonsym(lam).body.terms.items():
            sh = laurent_shift(c)
            assert sh is not None, (lam, mu, str(c))
            assert sh[0] >= 0 and sh[1] >= -(n - 1) * (sum(lam) - sum(mu)), (lam, mu, str(c))
    for lam in W.enumerate(d, n, "partitions"):
        for mu, c in monomial_symmetric_expand(C.normalized_sym(lam).body).items():
            sh = laurent_shift(c)
            assert sh is not None and sh[0] >= 0 and sh[1] >= -(n - 1) * (sum(lam) - sum(mu)), (lam, mu)


@crit(10, "integrality")
@pytest.mark.parametrize("n,d", MAIN_RANGE, ids=MAIN_IDS)
def test_c10_classical_integrality(n, d):
    for sym, kind in ((False, "compositions"), (True, "partitions")):
        for lam in W.enumerate(d, n, kind):
            for mu, c in C.normalized_classical(lam, sym).body.terms.items():
                assert c._d == {(0,): 1} and all(Fraction(v).denominator == 1 for v in c._n.values()), (lam, mu)


# --- 11 -----------------------------------------------------------------------------------------

@crit(11, "classical limit")
@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2])
def test_c11_classical_limit(n, r):
    for lam in W.enumerate(3, n):
        lim = C.classical_limit(E(lam), r, sum(lam))
        assert lim == C.interpolate_classical(lam).body.map_coefficients(lambda c: specialize(c, {"r": r}), None)
        d = sum(lam)
        lim = C.classical_limit(C.normalized_nonsym(lam).body, r, 2 * d)
        want = C.normalized_classical(lam).body.map_coefficients(lambda c: specialize(c, {"r": r}), None)
        assert lim == want.scale(Fraction((-1) ** d)), (lam, r)


# --- 12 -----------------------------------------------------------------------------------------

@crit(12, "product support")
@pytest.mark.parametrize("n,d", [(2, 2), (3, 1)], ids=["n2d2", "n3d1"])
def test_c12_product_support(n, d):
    labs = W.enumerate(d, n)
    for lam in labs:
        for mu in labs:
            coeffs = C.expand_in_E_basis(E(lam) * E(mu))
            assert coeffs
            for nu in coeffs:
                assert W.preceq(lam, nu) and W.preceq(mu, nu), (lam, mu, nu)


# --- 13 -----------------------------------------------------------------------------------------

@crit(13, "order-relation lemmas")
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_c13_order_lemmas(n):
    comps = W.compositions_bounded(n, 3)
    fast = W.preceq_matrix(comps, comps, "candidate")
    brute = W.preceq_matrix(comps, comps, "bruteforce")
    assert (fast == brute).all()
    subsets = [I for k in range(1, n + 1) for I in combinations(range(1, n + 1), k)]
    perms = list(permutations(range(n)))
    for a, lam in enumerate(comps):
        # the candidate permutation is the one matching the sort ranks
        wl = W.w_lambda(lam)
        assert W.k_vector(lam) == tuple(x - 1 for x in wl)
        for I in subsets:
            c = W.c_I(lam, I)
            assert W.preceq(lam, c) and c != lam
        for b, mu in enumerate(comps):
            rel = bool(brute[a, b])
            # scalar brute force over all permutations agrees with the batched kernel
            if n <= 3:
                assert rel == W.preceq_bruteforce(lam, mu)
            if rel:
                if sum(lam) >= sum(mu):
                    assert lam == mu
                if lam != mu:
                    assert any(W.preceq(W.c_I(lam, I), mu) for I in subsets), (lam, mu)
                wm = W.w_lambda(mu)
                pi = tuple(wm.index(wl[i]) for i in range(n))
                assert pi == W.defining_permutation(lam, mu)
                assert all((lam[i] < mu[pi[i]]) if i < pi[i] else (lam[i] <= mu[pi[i]]) for i in range(n))
            if W.is_partition(lam) and W.is_partition(mu):
                assert rel == all(x <= y for x, y in zip(lam, mu))
    assert len(perms) == len(W._kernels.all_permutations(n))

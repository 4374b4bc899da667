import os
import subprocess
import sys
from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from capelli import _kernels as K
from capelli import weights as W
from capelli.coeff_field import QT, R

q, t, r = QT.gen("q"), QT.gen("t"), R.gen("r")
comp3 = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)


def test_lambda_plus_and_w():
    assert W.lambda_plus((0, 2, 1)) == (2, 1, 0)
    assert W.lambda_plus((2, 1, 0)) == (2, 1, 0)
    assert W.w_lambda((3, 1, 0)) == (1, 2, 3)
    assert W.w_lambda((0, 1)) == (2, 1)
    assert W.w_lambda((1, 0, 2)) == (2, 3, 1)


def test_w_lambda_is_minimal():
    # independent oracle: all w with (w lam+)_i = lam_i, minimal inversion count
    for lam in product(range(3), repeat=3):
        lp = W.lambda_plus(lam)
        cands = [w for w in permutations(range(1, 4)) if all(lp[w[i] - 1] == lam[i] for i in range(3))]
        assert W.w_lambda(lam) == min(cands, key=W.inversions)


def test_k_vector():
    assert W.k_vector((2, 1, 0)) == (0, 1, 2)
    assert W.k_vector((0, 2, 1)) == (2, 0, 1)
    assert W.k_vector((0, 0)) == (0, 1)


def test_points():
    assert W.point_bar((0, 0, 0)) == (QT.one, 1 / t, t ** -2) == W.rho(3)
    assert W.point_bar((1, 0)) == (q, 1 / t)
    assert W.point_bar((0, 2, 1)) == (t ** -2, q ** 2, q / t)
    assert W.point_tilde((0, 0, 0)) == (R.zero, -r, -2 * r)
    assert W.point_tilde((1, 0)) == (R.one, -r)
    assert W.point_tilde((0, 2, 1)) == (-2 * r, R(2), 1 - r)


def test_points_distinct():
    labs = W.enumerate(3, 3)
    assert len({W.point_bar(l) for l in labs}) == len(labs)


def test_star():
    assert W.star((1, 0, 2)) == (1, 1, 0)
    assert W.star((1, 1)) == (0, 1)
    assert W.star((2, 0, 0), "recursion") == (1, 0, 0)
    assert W.star((0, 3, 1, 0), "recursion") == (0, 0, 3, 0)
    with pytest.raises(ValueError):
        W.star((1, 0))
    with pytest.raises(ValueError):
        W.star((0, 0), "recursion")


def test_bruhat():
    assert W.bruhat_leq((1, 2, 3), (3, 1, 2))
    assert not W.bruhat_leq((2, 1), (1, 2))
    assert W.bruhat_leq((2, 3, 1), (3, 2, 1))
    for n in (2, 3, 4):
        perms = list(permutations(range(1, n + 1)))
        for u in perms:
            for v in perms:
                assert W.bruhat_leq(u, v) == W.bruhat_leq_subword(u, v)


def test_order_leq():
    assert W.order_leq((0, 1), (1, 0))
    assert W.order_leq((1, 1), (2, 0))
    assert not W.order_leq((2, 0), (1, 1))
    with pytest.raises(ValueError):
        W.order_leq((1, 0), (1, 1))


def test_c_I():
    assert W.c_I((1, 0, 2), {1, 3}) == (2, 0, 2)
    assert W.c_I((1, 2), {1, 2}) == (2, 2)
    for lam in product(range(3), repeat=3):
        for i in range(1, 4):
            mu = list(lam)
            mu[i - 1] += 1
            assert W.c_I(lam, {i}) == tuple(mu)


def test_preceq_examples():
    assert W.preceq((1, 0, 2), (1, 0, 2))
    assert W.preceq((1, 0, 2), (2, 0, 2))
    assert not W.preceq((1, 0), (0, 1))
    assert not W.preceq_bruteforce((1, 0), (0, 1))


def test_preceq_fast_matches_bruteforce():
    comps = W.compositions_bounded(3, 3)
    for lam in comps:
        for mu in comps:
            W.preceq(lam, mu, verify=True)


@settings(max_examples=200, deadline=None)
@given(comp3, comp3, comp3)
def test_preceq_is_partial_order(a, b, c):
    assert W.preceq(a, a)
    if W.preceq(a, b) and W.preceq(b, a):
        assert a == b
    if W.preceq(a, b) and W.preceq(b, c):
        assert W.preceq(a, c)


def test_arm_leg():
    assert W.arm_leg((2, 1, 0), (1, 1)) == (1, 0, 1, 1)
    assert W.arm_leg((1,), (1, 1)) == (0, 0, 0, 0)
    assert W.arm_leg((0, 2), (2, 1)) == (1, 1, 0, 1)
    with pytest.raises(ValueError):
        W.arm_leg((1, 0), (2, 1))


def test_norm_factor():
    assert W.norm_factor((0, 0)) == QT.one
    assert W.norm_factor((1,)) == 1 - q * t
    assert W.norm_factor((1, 0)) == 1 - q * t
    assert W.norm_factor((0, 1)) == 1 - q * t ** 2
    assert W.norm_factor((2, 1), "sym") == (1 - q * t ** 2) * (1 - t) * (1 - t)
    assert W.norm_factor_classical((0,)) == R.one
    assert W.norm_factor_classical((1,)) == 1 + r
    assert W.norm_factor_classical((2,)) == (1 + r) * (2 + r)


def test_enumerate():
    assert W.enumerate(1, 2) == [(0, 0), (1, 0), (0, 1)]
    assert W.enumerate(2, 2, "partitions") == [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert len(W.enumerate(2, 3)) == 10
    assert len(W.enumerate_compositions(3, 3, exact=True)) == 10
    with pytest.raises(ValueError):
        W.enumerate(2, 2, "words")


def test_composition_validation():
    with pytest.raises(ValueError):
        W.composition((1, -1))
    with pytest.raises(ValueError):
        W.composition((1, 0), 3)


# --- kernels --------------------------------------------------------------------------

@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (4, 1)])
def test_kernel_paths_agree(n, m):
    comps = W.compositions_bounded(n, m)
    ks = [W.k_vector(c) for c in comps]
    a = K.preceq_bruteforce_matrix(comps, comps, use_numba=False)
    b = K.preceq_candidate_matrix(comps, comps, ks, ks, use_numba=False)
    assert np.array_equal(a, b)
    want = np.array([[W.preceq_bruteforce(x, y) for y in comps] for x in comps])
    assert np.array_equal(a, want)
    if K.HAVE_NUMBA:
        assert np.array_equal(K.preceq_bruteforce_matrix(comps, comps, use_numba=True), a)
        assert np.array_equal(K.preceq_candidate_matrix(comps, comps, ks, ks, use_numba=True), a)


def test_bruhat_kernel():
    perms = list(permutations(range(1, 5)))
    want = np.array([[W.bruhat_leq(u, v) for v in perms] for u in perms])
    zero = [tuple(x - 1 for x in p) for p in perms]  # the kernel is 0-indexed
    assert np.array_equal(K.bruhat_leq_matrix(zero, zero, use_numba=False), want)
    if K.HAVE_NUMBA:
        assert np.array_equal(K.bruhat_leq_matrix(zero, zero, use_numba=True), want)


def test_disable_flag():
    env = dict(os.environ, CAPELLI_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from capelli import _kernels; print(_kernels.HAVE_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"

"""Batched integer kernels for the order relations on compositions.

Each kernel has a numba ``@njit`` version and a vectorized numpy version with
identical results.  Set ``CAPELLI_DISABLE_NUMBA=1`` to force the numpy path
(numba is also skipped when it cannot be imported).
"""
from __future__ import annotations

import os
from itertools import permutations

import numpy as np

_DISABLED = os.environ.get("CAPELLI_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False


def all_permutations(n):
    """Every permutation of 0..n-1 as rows of an int64 array."""
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _np_preceq_bruteforce(L, M, perms):
    # cond[a, b, p, i]: lam_a[i] vs mu_b[perms[p, i]], strict where i < perms[p, i]
    n = L.shape[1]
    idx = np.arange(n)
    strict = idx[None, :] < perms  # (P, n)
    mu_perm = M[:, perms]  # (B, P, n)
    lam = L[:, None, None, :]  # (A, 1, 1, n)
    ok = np.where(strict[None, None], lam < mu_perm[None], lam <= mu_perm[None])
    return ok.all(axis=3).any(axis=2)


def _np_preceq_candidate(L, M, KL, KM):
    # pi(i) is the index j with k_j(mu) = k_i(lam); k-vectors are permutations of 0..n-1
    n = L.shape[1]
    inv_km = np.argsort(KM, axis=1)  # inv_km[b, k] = j with KM[b, j] = k
    rows = np.arange(M.shape[0])[None, :, None]
    pi = inv_km[rows, KL[:, None, :]]  # (A, B, n)
    mu_pi = M[rows, pi]
    idx = np.arange(n)[None, None, :]
    lam = L[:, None, :]
    ok = np.where(idx < pi, lam < mu_pi, lam <= mu_pi)
    return ok.all(axis=2)


def _np_bruhat_leq_matrix(U, V):
    # rank criterion: u <= v iff #{a <= i : u(a) >= j} <= same for v, for all i, j
    def ranks(W):
        n = W.shape[1]
        ge = W[:, :, None] >= np.arange(n)[None, None, :]  # (K, a, j)
        return np.cumsum(ge, axis=1)  # (K, i, j)

    ru = ranks(U)
    rv = ranks(V)
    return (ru[:, None] <= rv[None, :]).all(axis=(2, 3))


if HAVE_NUMBA:
    @njit(cache=True)
    def _nb_preceq_bruteforce(L, M, perms):
        A, n = L.shape
        B = M.shape[0]
        P = perms.shape[0]
        out = np.zeros((A, B), dtype=np.bool_)
        for a in range(A):
            for b in range(B):
                for p in range(P):
                    good = True
                    for i in range(n):
                        j = perms[p, i]
                        if i < j:
                            if not L[a, i] < M[b, j]:
                                good = False
                                break
                        elif not L[a, i] <= M[b, j]:
                            good = False
                            break
                    if good:
                        out[a, b] = True
                        break
        return out

    @njit(cache=True)
    def _nb_preceq_candidate(L, M, KL, KM):
        A, n = L.shape
        B = M.shape[0]
        out = np.zeros((A, B), dtype=np.bool_)
        inv = np.empty(n, dtype=np.int64)
        for b in range(B):
            for j in range(n):
                inv[KM[b, j]] = j
            for a in range(A):
                good = True
                for i in range(n):
                    j = inv[KL[a, i]]
                    if i < j:
                        if not L[a, i] < M[b, j]:
                            good = False
                            break
                    elif not L[a, i] <= M[b, j]:
                        good = False
                        break
                out[a, b] = good
        return out

    @njit(cache=True)
    def _nb_bruhat_leq_matrix(U, V):
        K1, n = U.shape
        K2 = V.shape[0]
        ru = np.zeros((K1, n, n), dtype=np.int64)
        rv = np.zeros((K2, n, n), dtype=np.int64)
        for k in range(K1):
            for j in range(n):
                c = 0
                for i in range(n):
                    if U[k, i] >= j:
                        c += 1
                    ru[k, i, j] = c
        for k in range(K2):
            for j in range(n):
                c = 0
                for i in range(n):
                    if V[k, i] >= j:
                        c += 1
                    rv[k, i, j] = c
        out = np.ones((K1, K2), dtype=np.bool_)
        for a in range(K1):
            for b in range(K2):
                for i in range(n):
                    for j in range(n):
                        if ru[a, i, j] > rv[b, i, j]:
                            out[a, b] = False
                            break
                    if not out[a, b]:
                        break
        return out


def _as_i64(x):
    return np.ascontiguousarray(np.asarray(x, dtype=np.int64))


def preceq_bruteforce_matrix(L, M, use_numba=None):
    """``out[a, b]`` is True iff L[a] precedes M[b], searching all permutations."""
    L, M = _as_i64(L), _as_i64(M)
    perms = all_permutations(L.shape[1])
    if (HAVE_NUMBA if use_numba is None else use_numba):
        return _nb_preceq_bruteforce(L, M, perms)
    return _np_preceq_bruteforce(L, M, perms)


def preceq_candidate_matrix(L, M, KL, KM, use_numba=None):
    """Same relation, testing only the permutation that matches k-vectors."""
    L, M, KL, KM = map(_as_i64, (L, M, KL, KM))
    if (HAVE_NUMBA if use_numba is None else use_numba):
        return _nb_preceq_candidate(L, M, KL, KM)
    return _np_preceq_candidate(L, M, KL, KM)


def bruhat_leq_matrix(U, V, use_numba=None):
    """Bruhat comparison of 0-indexed one-line permutations, all pairs."""
    U, V = _as_i64(U), _as_i64(V)
    if (HAVE_NUMBA if use_numba is None else use_numba):
        return _nb_bruhat_leq_matrix(U, V)
    return _np_bruhat_leq_matrix(U, V)

"""Combinatorics of compositions.

Compositions are plain tuples of naturals.  Permutations are tuples in
1-indexed one-line notation; ``w`` acts on vectors by ``(w x)_i = x_{w(i)}``,
so ``w_lambda(i)`` is the position of ``lambda_i`` in the stable decreasing
sort of ``lambda`` and ``k_i(lambda) = w_lambda(i) - 1``.
"""
from __future__ import annotations

import builtins
from itertools import combinations, permutations
from math import prod

from . import _kernels
from .coeff_field import QT, R, FieldElement

__all__ = [
    "composition",
    "size",
    "length",
    "is_partition",
    "lambda_plus",
    "w_lambda",
    "k_vector",
    "inversions",
    "point_bar",
    "point_tilde",
    "rho",
    "star",
    "bruhat_leq",
    "bruhat_leq_subword",
    "dominance_leq",
    "order_leq",
    "c_I",
    "defining_permutation",
    "preceq",
    "preceq_bruteforce",
    "diagram",
    "arm_leg",
    "norm_factor",
    "norm_factor_classical",
    "enumerate_compositions",
    "enumerate_partitions",
    "enumerate",
]


def composition(parts, n=None):
    """Validate and return ``parts`` as a tuple composition of length n."""
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {lam}")
    if n is not None and len(lam) != n:
        raise ValueError(f"{lam} does not have {n} parts")
    return lam


def size(lam):
    return sum(lam)


def length(lam):
    """Index of the last nonzero part (1-indexed), 0 for the zero composition."""
    for i in range(len(lam), 0, -1):
        if lam[i - 1]:
            return i
    return 0


def is_partition(lam):
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def lambda_plus(lam):
    return tuple(sorted(lam, reverse=True))


def w_lambda(lam):
    """Shortest w with lambda_i = lambda^+_{w(i)}: the stable sort ranks."""
    order = sorted(range(len(lam)), key=lambda i: (-lam[i], i))
    w = [0] * len(lam)
    for rank, i in builtins.enumerate(order):
        w[i] = rank + 1
    return tuple(w)


def k_vector(lam):
    n = len(lam)
    return tuple(
        sum(1 for j in range(i) if lam[j] >= lam[i]) + sum(1 for j in range(i + 1, n) if lam[j] > lam[i])
        for i in range(n))


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def point_bar(lam, field=QT):
    """Spectral point with coordinates q^{lam_i} t^{-k_i}."""
    return tuple(field.monomial((a, -k)) for a, k in zip(lam, k_vector(lam)))


def rho(n, field=QT):
    return tuple(field.monomial((0, -i)) for i in range(n))


def point_tilde(lam, field=R):
    """Classical spectral point with coordinates lam_i - r k_i."""
    r = field.gen("r")
    return tuple(field(a) - r * k for a, k in zip(lam, k_vector(lam)))


def star(lam, form="lemma"):
    """Rotate-and-decrement.

    ``form="lemma"``: (lam_n - 1, lam_1, ..., lam_{n-1}), needs lam_n != 0.
    ``form="recursion"``: with m = length(lam),
    (lam_m - 1, lam_1, ..., lam_{m-1}, 0, ..., 0), needs m > 0.
    """
    n = len(lam)
    if form == "lemma":
        if n == 0 or lam[-1] == 0:
            raise ValueError(f"last part of {lam} must be nonzero")
        return (lam[-1] - 1,) + tuple(lam[:-1])
    if form == "recursion":
        m = length(lam)
        if m == 0:
            raise ValueError("the zero composition has no star")
        return (lam[m - 1] - 1,) + tuple(lam[: m - 1]) + (0,) * (n - m)
    raise ValueError(f"unknown form {form!r}")


# --- orders -----------------------------------------------------------------

def bruhat_leq(u, v):
    """Bruhat order via the rank-matrix criterion."""
    n = len(u)
    if len(v) != n:
        raise ValueError("permutations of different size")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ru = sum(1 for a in range(i) if u[a] >= j)
            rv = sum(1 for a in range(i) if v[a] >= j)
            if ru > rv:
                return False
    return True


def _reduced_word(w):
    """A reduced word for w (bubble sort); s_i acts on positions i, i+1."""
    w = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def _word_to_perm(word, n):
    # product s_{word[0]} s_{word[1]} ...; right multiplication by s_i swaps positions
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def bruhat_leq_subword(u, v):
    """Bruhat order via the subword property (slow; used as a cross-check)."""
    n = len(u)
    word = _reduced_word(v)
    assert _word_to_perm(word, n) == tuple(v)
    target = tuple(u)
    lu = inversions(u)
    for idx in combinations(range(len(word)), lu):
        if _word_to_perm([word[i] for i in idx], n) == target:
            return True
    return False


def dominance_leq(mu, lam):
    """mu <= lam in dominance order on partitions of equal size."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of equal size")
    a = b = 0
    for x, y in zip(mu, lam):
        a += x
        b += y
        if a > b:
            return False
    return True


def order_leq(mu, lam):
    """mu <= lam in the order combining dominance of sorted parts with Bruhat
    order of the minimal permutations (reversed)."""
    if sum(mu) != sum(lam):
        raise ValueError("compositions of different size are not comparable")
    mp, lp = lambda_plus(mu), lambda_plus(lam)
    if mp != lp:
        return dominance_leq(mp, lp)
    return bruhat_leq(w_lambda(lam), w_lambda(mu))


def c_I(lam, I):
    """Cyclic shift of the parts indexed by I with the wrapped part raised by one."""
    idx = sorted(I)
    if not idx:
        raise ValueError("I must be nonempty")
    mu = list(lam)
    for a, b in zip(idx, idx[1:]):
        mu[a - 1] = lam[b - 1]
    mu[idx[-1] - 1] = lam[idx[0] - 1] + 1
    return tuple(mu)


def _defines(lam, mu, pi):
    # pi is 0-indexed
    for i, j in builtins.enumerate(pi):
        if i < j:
            if not lam[i] < mu[j]:
                return False
        elif not lam[i] <= mu[j]:
            return False
    return True


def defining_permutation(lam, mu):
    """The candidate pi (0-indexed) with k_i(lam) = k_{pi(i)}(mu)."""
    km = k_vector(mu)
    where = {k: j for j, k in builtins.enumerate(km)}
    return tuple(where[k] for k in k_vector(lam))


def preceq_bruteforce(lam, mu):
    if len(lam) != len(mu):
        raise ValueError("compositions of different length")
    return any(_defines(lam, mu, pi) for pi in permutations(range(len(lam))))


def preceq(lam, mu, verify=False):
    """lam ⪯ mu, decided by the k-vector matching permutation.

    With ``verify=True`` the answer is cross-checked against the search over
    all permutations.
    """
    if len(lam) != len(mu):
        raise ValueError("compositions of different length")
    fast = _defines(lam, mu, defining_permutation(lam, mu))
    if verify:
        slow = preceq_bruteforce(lam, mu)
        if slow != fast:
            raise AssertionError(f"preceq mismatch for {lam}, {mu}: fast={fast}, brute={slow}")
    return fast


def preceq_matrix(lams, mus, method="candidate", use_numba=None):
    """Boolean matrix [a][b] = lams[a] ⪯ mus[b] via the batched kernels."""
    if method == "candidate":
        return _kernels.preceq_candidate_matrix(
            lams, mus, [k_vector(x) for x in lams], [k_vector(x) for x in mus], use_numba=use_numba)
    if method == "bruteforce":
        return _kernels.preceq_bruteforce_matrix(lams, mus, use_numba=use_numba)
    raise ValueError(f"unknown method {method!r}")


# --- diagrams and normalizations ---------------------------------------------

def diagram(lam):
    return [(i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)]


def arm_leg(lam, box):
    """(a, l', l'', l) for the box (i, j) of lam."""
    i, j = box
    n = len(lam)
    if not (1 <= i <= n and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box {box} is not in the diagram of {lam}")
    li = lam[i - 1]
    a = li - j
    l1 = sum(1 for k in range(1, i) if j <= lam[k - 1] + 1 <= li)
    l2 = sum(1 for k in range(i + 1, n + 1) if j <= lam[k - 1] <= li)
    return a, l1, l2, l1 + l2


def norm_factor(lam, kind="nonsym", field=QT) -> FieldElement:
    """prod over boxes of (1 - q^{a+1} t^{l+1}) (nonsym) or (1 - q^a t^{l+1}) (sym)."""
    if kind == "sym" and not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    shift = {"nonsym": 1, "sym": 0}[kind]
    out = field.one
    for s in diagram(lam):
        a, _, _, l = arm_leg(lam, s)
        out = out * (1 - field.monomial((a + shift, l + 1)))
    return out


def norm_factor_classical(lam, kind="nonsym", field=R) -> FieldElement:
    """prod of ((a+1) + (l+1) r) (nonsym) or (a + (l+1) r) (sym)."""
    if kind == "sym" and not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    shift = {"nonsym": 1, "sym": 0}[kind]
    r = field.gen("r")
    out = field.one
    for s in diagram(lam):
        a, _, _, l = arm_leg(lam, s)
        out = out * (r * (l + 1) + (a + shift))
    return out


# --- enumeration ------------------------------------------------------------------

def _compositions_of(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in _compositions_of(d - first, n - 1):
            yield (first,) + rest


def enumerate_compositions(d, n, exact=False):
    """Compositions with n parts of size <= d (or == d), graded then reverse-lex."""
    sizes = [d] if exact else range(d + 1)
    return [lam for e in sizes for lam in _compositions_of(e, n)]


def enumerate_partitions(d, n, exact=False):
    return [lam for lam in enumerate_compositions(d, n, exact) if is_partition(lam)]


def enumerate(d, n, kind="compositions"):
    if kind == "compositions":
        return enumerate_compositions(d, n)
    if kind == "partitions":
        return enumerate_partitions(d, n)
    raise ValueError(f"unknown kind {kind!r}")


def compositions_bounded(n, max_part):
    """All compositions with n parts, each at most max_part."""
    from itertools import product as _product
    return [tuple(p) for p in _product(range(max_part + 1), repeat=n)]


def multinomial_orbit_size(lam):
    counts = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    from math import factorial
    return factorial(len(lam)) // prod(factorial(c) for c in counts.values())

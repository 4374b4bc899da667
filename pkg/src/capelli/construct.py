"""Constructors for the interpolation polynomial families.

Two independent routes produce E_lambda:

* ``recurse_nonsym``: the operator recursion for the normalized polynomial,
  run entirely in n variables with Laurent-polynomial coefficients;
* ``interpolate_nonsym``: the vanishing conditions solved as a linear system.

The linear solve is organized by degree (Newton style).  Degree-d basis
elements are first reduced modulo the interpolants of lower degree, which
makes the remaining d-th block of the system independent of the others; the
product of the block determinants is the determinant of the full
interpolation matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from . import weights as W
from .coeff_field import QT, Q, R, FieldElement, NonGenericSpecialization, limit_q1, specialize, substitute_t_power
from .linsolve import SingularMatrixError, eliminate
from .ops import classical_ops, quantum_ops
from .zpoly import (
    ZPolynomial,
    affine_substitute,
    evaluate,
    evaluate_at_monomials,
    exact_divide,
    monomial_symmetric,
    monomial_symmetric_expand,
    top_homogeneous,
)

__all__ = [
    "LabeledPolynomial",
    "FAMILIES",
    "ROUTES",
    "NewtonInterpolator",
    "interpolator",
    "interpolate_nonsym",
    "recurse_nonsym",
    "normalized_nonsym",
    "phi_route",
    "interpolate_sym",
    "symmetrize_hecke",
    "normalized_sym",
    "top_macdonald",
    "expand_in_E_basis",
    "inversion_psi",
    "inversion_raw",
    "factorial_schur",
    "q_falling",
    "interpolate_classical",
    "normalized_classical",
    "classical_limit_check",
    "classical_limit",
    "classical_inversion",
    "unisolvence_determinant",
    "interpolation_matrix",
    "lexmin_reduced_word",
]

FAMILIES = ("E", "P", "EE_norm", "P_norm", "E_bar", "P_bar", "E_tilde", "P_tilde", "EE_tilde_norm", "P_tilde_norm")
ROUTES = ("recursion", "interpolation", "symmetrization", "limit")


@dataclass(frozen=True)
class LabeledPolynomial:
    family: str
    lam: tuple
    n: int
    body: ZPolynomial = dc_field(compare=False)
    route: str = "interpolation"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")

    @property
    def field(self):
        return self.body.field

    def __eq__(self, other):
        return (isinstance(other, LabeledPolynomial) and (self.family, self.lam, self.n) ==
                (other.family, other.lam, other.n) and self.body == other.body)

    def __hash__(self):
        return hash((self.family, self.lam, self.n))


def _check_lambda(lam, n=None, partition=False):
    lam = W.composition(lam, n)
    if partition and not W.is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


# --- Newton-block interpolation ------------------------------------------------

def _composition_key(lam):
    # a linear extension of the (dominance, Bruhat) order: smaller first
    return (W.lambda_plus(lam), -W.inversions(W.w_lambda(lam)), lam)


class NewtonInterpolator:
    """Dual family to a graded point set.

    For each label ``lam`` the interpolant is the unique polynomial of degree
    ``|lam|`` in the span of the basis elements of degree <= |lam|, vanishing
    at the points of all other labels of degree <= |lam| and having
    coefficient 1 on the leading basis element of ``lam``.
    """

    def __init__(self, n, field, symmetric=False, classical=False):
        self.n = n
        self.field = field
        self.symmetric = symmetric
        self.classical = classical
        self.polys = {}
        self.diag = {}
        self.block_det = {}
        self.degree = -1
        self._labels = {}
        self._points = {}
        self._values = {}

    def labels(self, d):
        if d not in self._labels:
            if self.symmetric:
                labs = W.enumerate_partitions(d, self.n, exact=True)
                labs.sort()
            else:
                labs = W.enumerate_compositions(d, self.n, exact=True)
                labs.sort(key=_composition_key)
            self._labels[d] = labs
        return self._labels[d]

    def point(self, lam):
        p = self._points.get(lam)
        if p is None:
            p = W.point_tilde(lam, self.field) if self.classical else W.point_bar(lam, self.field)
            self._points[lam] = p
        return p

    def basis(self, lam):
        if self.symmetric:
            return monomial_symmetric(lam, self.field)
        return ZPolynomial.monomial(lam, 1, self.field)

    def value(self, kappa, mu):
        """E_kappa at the point of mu (zero by construction when |mu| <= |kappa|, mu != kappa)."""
        if kappa == mu:
            return self.diag[kappa]
        if sum(mu) <= sum(kappa):
            return self.field.zero
        key = (kappa, mu)
        v = self._values.get(key)
        if v is None:
            v = self._values[key] = evaluate(self.polys[kappa], self.point(mu))
        return v

    def extend(self, D):
        while self.degree < D:
            self._build_block(self.degree + 1)
            self.degree += 1
        return self

    def _build_block(self, d):
        F = self.field
        labs = self.labels(d)
        lower = [lab for e in range(d) for lab in self.labels(e)]
        # Newton coefficients of every degree-d basis element against lower interpolants
        coeffs = []
        for nu in labs:
            b = self.basis(nu)
            c = {}
            for mu in lower:
                v = evaluate(b, self.point(mu))
                for kappa, ck in c.items():
                    if sum(kappa) < sum(mu):
                        w = self.value(kappa, mu)
                        if w:
                            v = v - ck * w
                if v:
                    c[mu] = v / self.diag[mu]
            coeffs.append(c)
        # the Schur-complement block: reduced basis elements at the degree-d points
        G = []
        for mu in labs:
            pt = self.point(mu)
            row = []
            for nu, c in zip(labs, coeffs):
                v = evaluate(self.basis(nu), pt)
                for kappa, ck in c.items():
                    w = self.value(kappa, mu)
                    if w:
                        v = v - ck * w
                row.append(v)
            G.append(row)
        m = len(labs)
        eye = [[F.one if i == j else F.zero for j in range(m)] for i in range(m)]
        try:
            det, X = eliminate(G, eye)
        except SingularMatrixError as exc:
            raise NonGenericSpecialization(f"interpolation block of degree {d} is singular") from exc
        self.block_det[d] = det
        for j, lam in enumerate(labs):
            lead = X[j][j]
            if not lead:
                raise NonGenericSpecialization(f"no monic interpolant for {lam}")
            scale = lead.inverse()
            a = [X[i][j] * scale for i in range(m)]
            # E = sum_nu a_nu (b_nu - sum_kappa c_{nu,kappa} E_kappa)
            w = {}
            body = ZPolynomial.zero(self.n, F)
            for ai, nu, c in zip(a, labs, coeffs):
                if not ai:
                    continue
                body = body + self.basis(nu).scale(ai)
                for kappa, ck in c.items():
                    w[kappa] = w[kappa] - ai * ck if kappa in w else -(ai * ck)
            for kappa, wk in w.items():
                if wk:
                    body = body + self.polys[kappa].scale(wk)
            self.polys[lam] = body
            self.diag[lam] = scale

    def get(self, lam):
        self.extend(sum(lam))
        return self.polys[lam]

    def determinant(self, D):
        """Determinant of the interpolation matrix on all labels of degree <= D,
        up to the sign fixed by the label ordering."""
        self.extend(D)
        det = self.field.one
        for d in range(D + 1):
            det = det * self.block_det[d]
        return det


_INTERPOLATORS = {}


def interpolator(n, kind="nonsym") -> NewtonInterpolator:
    """Shared interpolation tables: kind in nonsym, sym, classical, classical_sym."""
    key = (n, kind)
    it = _INTERPOLATORS.get(key)
    if it is None:
        it = _INTERPOLATORS[key] = {
            "nonsym": lambda: NewtonInterpolator(n, QT),
            "sym": lambda: NewtonInterpolator(n, QT, symmetric=True),
            "classical": lambda: NewtonInterpolator(n, R, classical=True),
            "classical_sym": lambda: NewtonInterpolator(n, R, symmetric=True, classical=True),
        }[kind]()
    return it


def interpolate_nonsym(lam) -> LabeledPolynomial:
    lam = _check_lambda(lam)
    it = interpolator(len(lam), "nonsym")
    body = it.get(lam)
    if not it.diag[lam]:
        raise AssertionError(f"E_{lam} vanishes at its own point")
    return LabeledPolynomial("E", lam, len(lam), body, "interpolation")


def interpolate_sym(lam) -> LabeledPolynomial:
    lam = _check_lambda(lam, partition=True)
    body = interpolator(len(lam), "sym").get(lam)
    return LabeledPolynomial("P", lam, len(lam), body, "interpolation")


def interpolate_classical(lam, sym=False) -> LabeledPolynomial:
    lam = _check_lambda(lam, partition=sym)
    body = interpolator(len(lam), "classical_sym" if sym else "classical").get(lam)
    return LabeledPolynomial("P_tilde" if sym else "E_tilde", lam, len(lam), body, "interpolation")


def interpolation_matrix(n, d, symmetric=False, field=QT):
    """Rows: points of all labels of degree <= d; columns: basis elements."""
    it = NewtonInterpolator(n, field, symmetric=symmetric)
    labs = [lab for e in range(d + 1) for lab in it.labels(e)]
    return labs, [[evaluate(it.basis(nu), it.point(mu)) for nu in labs] for mu in labs]


def unisolvence_determinant(n, d, symmetric=False):
    """Exact determinant in Q(q,t) of the interpolation matrix (labels ordered
    as in ``interpolation_matrix``), from the Newton block factorization."""
    it = interpolator(n, "sym" if symmetric else "nonsym")
    det = it.determinant(d)
    # the block factorization keeps rows and columns in the same order, so no sign correction
    return det


# --- the operator recursion -------------------------------------------------------

@lru_cache(maxsize=None)
def _normalized(lam):
    n = len(lam)
    if not any(lam):
        return ZPolynomial.one(n, QT)
    m = W.length(lam)
    prev = _normalized(W.star(lam, "recursion"))
    ops = quantum_ops(n)
    t, q = ops.t, ops.q
    coef = W.point_bar(lam)[m - 1] * t ** m
    body = ops.A(prev, m, bar=True) - ops.A(prev, m).scale(coef)
    return body.scale(q ** (lam[m - 1] - 1))


def normalized_nonsym(lam) -> LabeledPolynomial:
    lam = _check_lambda(lam)
    return LabeledPolynomial("EE_norm", lam, len(lam), _normalized(lam), "recursion")


@lru_cache(maxsize=None)
def _recursed(lam):
    inv = W.norm_factor(lam).inverse()
    return _normalized(lam).scale(inv)


def recurse_nonsym(lam) -> LabeledPolynomial:
    """E_lambda from the normalized recursion divided by its normalization."""
    lam = _check_lambda(lam)
    return LabeledPolynomial("E", lam, len(lam), _recursed(lam), "recursion")


def phi_route(lam) -> ZPolynomial:
    """q^{lam_n - 1} Phi(E_{lam*}) with lam* = (lam_n - 1, lam_1, ..., lam_{n-1}).

    Needs lam_n != 0.  The power of q makes the coefficient of z^lam one.
    """
    lam = _check_lambda(lam)
    prev = _recursed(W.star(lam, "lemma"))
    ops = quantum_ops(len(lam))
    return ops.phi(prev).scale(ops.q ** (lam[-1] - 1))


# --- symmetric polynomials ---------------------------------------------------------

def lexmin_reduced_word(w):
    """Lexicographically smallest reduced word (i_1, ..., i_k) with w = s_{i_1}...s_{i_k}.

    ``w`` is 1-indexed one-line notation; s_i w exchanges the values i and i+1.
    """
    w = list(w)
    word = []
    while True:
        pos = {v: p for p, v in enumerate(w)}
        i = next((i for i in range(1, len(w)) if pos[i + 1] < pos[i]), None)
        if i is None:
            return tuple(word)
        word.append(i)
        a, b = pos[i], pos[i + 1]
        w[a], w[b] = i + 1, i


def symmetrize_hecke(lam) -> LabeledPolynomial:
    """Normalize sum_w H_w E_lambda (one lex-minimal reduced word per w)."""
    lam = _check_lambda(lam, partition=True)
    n = len(lam)
    ops = quantum_ops(n)
    E = _recursed(lam)
    total = ZPolynomial.zero(n, QT)
    for w in permutations(range(1, n + 1)):
        f = E
        for i in reversed(lexmin_reduced_word(w)):
            f = ops.H(f, i)
        total = total + f
    if not total or not total.is_symmetric():
        raise AssertionError(f"Hecke symmetrization of E_{lam} failed")
    lead = total.coefficient(lam)
    return LabeledPolynomial("P", lam, n, total.scale(lead.inverse()), "symmetrization")


def normalized_sym(lam, body=None) -> LabeledPolynomial:
    lam = _check_lambda(lam, partition=True)
    if body is None:
        body = interpolate_sym(lam).body
    return LabeledPolynomial("P_norm", lam, len(lam), body.scale(W.norm_factor(lam, "sym")), "interpolation")


def top_macdonald(p: LabeledPolynomial) -> LabeledPolynomial:
    fam = {"E": "E_bar", "P": "P_bar"}.get(p.family)
    if fam is None:
        raise ValueError("top_macdonald expects an E or P polynomial")
    return LabeledPolynomial(fam, p.lam, p.n, top_homogeneous(p.body), p.route)


# --- expansions ---------------------------------------------------------------------

def expand_in_E_basis(f: ZPolynomial) -> dict:
    """Coefficients c with f = sum_nu c_nu E_nu, by a triangular solve on the
    values of f at the points nu-bar, degree by degree upward."""
    if not f.is_polynomial():
        raise ValueError("expansion needs a polynomial")
    if not f:
        return {}
    it = interpolator(f.n, "nonsym")
    D = f.degree()
    it.extend(D)
    coeffs = {}
    for d in range(D + 1):
        for mu in it.labels(d):
            v = evaluate_at_monomials(f, tuple((a, -k) for a, k in zip(mu, W.k_vector(mu))))
            for kappa, ck in coeffs.items():
                if sum(kappa) < d:
                    w = it.value(kappa, mu)
                    if w:
                        v = v - ck * w
            if v:
                coeffs[mu] = v / it.diag[mu]
    return coeffs


# --- inversion --------------------------------------------------------------------------

def inversion_raw(fbar: ZPolynomial, ops=None) -> ZPolynomial:
    """fbar(Z_1, ..., Z_n)(1) for the raising operators Z_i (or any commuting
    family given by ``ops.Z``)."""
    n = fbar.n
    if ops is None:
        ops = quantum_ops(n, fbar.field)
    memo = {(0,) * n: ZPolynomial.one(n, fbar.field)}

    def power(a):
        v = memo.get(a)
        if v is None:
            i = max(j for j in range(n) if a[j])
            b = list(a)
            b[i] -= 1
            v = memo[a] = ops.Z(power(tuple(b)), i + 1)
        return v

    out = ZPolynomial.zero(n, fbar.field)
    for k, c in sorted(fbar.terms.items()):
        out = out + power(k).scale(c)
    return out


def inversion_psi(fbar: ZPolynomial) -> ZPolynomial:
    """The element of degree d vanishing on all points of degree < d whose top
    part is the homogeneous ``fbar``.

    Each Z_i raises the degree by one and scales top parts by
    q^{-e} t^{n(n-1)} on degree e, so fbar(Z)(1) has top part
    q^{-C(d,2)} t^{n(n-1)d} fbar; that scalar is divided out.
    """
    if not fbar.is_homogeneous():
        raise ValueError("inversion expects a homogeneous polynomial")
    if not fbar:
        return fbar
    n, d = fbar.n, fbar.degree()
    ops = quantum_ops(n, fbar.field)
    scale = ops.q ** comb(d, 2) * ops.t ** (-n * (n - 1) * d)
    return inversion_raw(fbar, ops).scale(scale)


def classical_inversion(fbar: ZPolynomial) -> ZPolynomial:
    """fbar(Z~_1, ..., Z~_n)(1)."""
    if not fbar.is_homogeneous():
        raise ValueError("inversion expects a homogeneous polynomial")
    return inversion_raw(fbar, classical_ops(fbar.n, fbar.field))


# --- special values -------------------------------------------------------------------

def q_falling(n, i, k, field=Q, q=None):
    """[z_i; k]_q = (z_i - 1)(z_i - q)...(z_i - q^{k-1})."""
    q = field.gen("q") if q is None else q
    z = ZPolynomial.var(n, i, field)
    out = ZPolynomial.one(n, field)
    for j in range(k):
        out = out * (z - q ** j)
    return out


def factorial_schur(lam, field=Q) -> ZPolynomial:
    """det[z_i; lam_j + n - j]_q divided by the Vandermonde product."""
    lam = _check_lambda(lam, partition=True)
    n = len(lam)
    M = [[q_falling(n, i, lam[j - 1] + n - j, field) for j in range(1, n + 1)] for i in range(1, n + 1)]
    det = ZPolynomial.zero(n, field)
    for p in permutations(range(n)):
        sign = (-1) ** W.inversions(p)
        term = ZPolynomial.constant(n, sign, field)
        for i in range(n):
            term = term * M[i][p[i]]
        det = det + term
    vdm = ZPolynomial.one(n, field)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vdm = vdm * (ZPolynomial.var(n, i, field) - ZPolynomial.var(n, j, field))
    return exact_divide(det, vdm)


# --- classical family ---------------------------------------------------------------

def normalized_classical(lam, sym=False) -> LabeledPolynomial:
    p = interpolate_classical(lam, sym)
    kind = "sym" if sym else "nonsym"
    body = p.body.scale(W.norm_factor_classical(p.lam, kind))
    return LabeledPolynomial("P_tilde_norm" if sym else "EE_tilde_norm", p.lam, p.n, body, "interpolation")


def classical_limit(f: ZPolynomial, r: int, k: int) -> ZPolynomial:
    """lim_{q->1} (q-1)^{-k} f((q-1) z + 1) after t = q^r, coefficientwise."""
    g = f.map_coefficients(lambda c: substitute_t_power(c, r), Q)
    g = affine_substitute(g, Q.gen("q") - 1, 1)
    return g.map_coefficients(lambda c: limit_q1(c, k), None)


def _at_r(f: ZPolynomial, r):
    return f.map_coefficients(lambda c: specialize(c, {"r": r}), None)


def classical_limit_check(lam, r: int, normalized=False, sym=False) -> bool:
    """Compare the exact q -> 1 limit of E_lambda (or the normalized versions,
    or the symmetric family) with the classical polynomial at this r."""
    lam = _check_lambda(lam, partition=sym)
    d = sum(lam)
    if sym:
        quantum = normalized_sym(lam).body if normalized else interpolate_sym(lam).body
    else:
        quantum = _normalized(lam) if normalized else _recursed(lam)
    k = 2 * d if normalized else d
    lim = classical_limit(quantum, r, k)
    if normalized:
        target = _at_r(normalized_classical(lam, sym).body, r).scale((-1) ** d)
    else:
        target = _at_r(interpolate_classical(lam, sym).body, r)
    return lim == target

"""Sparse Laurent polynomials in z_1..z_n over an exact coefficient field.

Coefficients are either ``FieldElement`` values of one ``ParamField`` or plain
rationals (``field=None``), which is what specialized polynomials use.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb

from .coeff_field import FieldElement, ParamField
from .polyring import DivisibilityError

__all__ = [
    "ZPolynomial",
    "zp_arith",
    "evaluate",
    "exact_divide",
    "top_homogeneous",
    "affine_substitute",
    "monomial_symmetric_expand",
    "from_monomial_symmetric",
    "monomial_symmetric",
    "is_polynomial",
    "evaluate_at_monomials",
    "DivisibilityError",
]


def _grlex(k):
    return (sum(k), k)


class ZPolynomial:
    """``terms`` maps exponent tuples of length ``n`` to nonzero coefficients."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n, terms=None, field=None):
        self.n = n
        self.field = field
        clean = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            if len(k) != n:
                raise ValueError(f"exponent {k} has length != {n}")
            c = self._coeff(c)
            if k in clean:
                c = clean[k] + c
            clean[k] = c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, n, field, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.field = field
        obj.terms = terms
        return obj

    def _coeff(self, c):
        if self.field is None:
            if isinstance(c, FieldElement):
                raise TypeError("rational polynomial given a parametric coefficient")
            return Fraction(c)
        return self.field(c)

    # --- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n, field=None):
        return cls._raw(n, field, {})

    @classmethod
    def constant(cls, n, c, field=None):
        return cls(n, {(0,) * n: c}, field)

    @classmethod
    def one(cls, n, field=None):
        return cls.constant(n, 1, field)

    @classmethod
    def var(cls, n, i, field=None):
        """The variable z_i (1-indexed)."""
        k = [0] * n
        k[i - 1] = 1
        return cls(n, {tuple(k): 1}, field)

    @classmethod
    def monomial(cls, exps, coeff=1, field=None):
        return cls(len(exps), {tuple(exps): coeff}, field)

    def _unit(self):
        return self.field.one if self.field is not None else Fraction(1)

    def _zero_c(self):
        return self.field.zero if self.field is not None else Fraction(0)

    # --- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_polynomial(self):
        return all(e >= 0 for k in self.terms for e in k)

    def is_homogeneous(self):
        return len({sum(k) for k in self.terms}) <= 1

    def is_symmetric(self):
        return all(self.swap(i) == self for i in range(1, self.n))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(k) for k in self.terms), default=-1)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self._zero_c())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    # --- arithmetic -------------------------------------------------------------
    def _check(self, other):
        if isinstance(other, ZPolynomial):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        return ZPolynomial.constant(self.n, other, self.field)

    def __add__(self, other):
        other = self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            w = out.get(k)
            if w is None:
                out[k] = c
            else:
                w = w + c
                if w:
                    out[k] = w
                else:
                    del out[k]
        return ZPolynomial._raw(self.n, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return ZPolynomial._raw(self.n, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._coeff(c)
        if not c:
            return ZPolynomial.zero(self.n, self.field)
        return ZPolynomial._raw(self.n, self.field, {k: v * c for k, v in self.terms.items()})

    def mul(self, other, max_degree=None):
        """Product; with ``max_degree`` terms above that total degree are dropped."""
        other = self._check(other)
        out = {}
        for ka, ca in self.terms.items():
            da = sum(ka)
            for kb, cb in other.terms.items():
                if max_degree is not None and da + sum(kb) > max_degree:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                w = out.get(k)
                out[k] = ca * cb if w is None else w + ca * cb
        return ZPolynomial._raw(self.n, self.field, {k: c for k, c in out.items() if c})

    def __mul__(self, other):
        if isinstance(other, ZPolynomial):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        r = ZPolynomial.one(self.n, self.field)
        for _ in range(e):
            r = r * self
        return r

    def shift(self, exps):
        """Multiply by the monomial z^exps (negative entries allowed)."""
        return ZPolynomial._raw(self.n, self.field, {
            tuple(x + y for x, y in zip(k, exps)): c for k, c in self.terms.items()})

    def swap(self, i):
        """Apply the simple transposition exchanging z_i and z_{i+1}."""
        i -= 1
        out = {}
        for k, c in self.terms.items():
            k = list(k)
            k[i], k[i + 1] = k[i + 1], k[i]
            out[tuple(k)] = c
        return ZPolynomial._raw(self.n, self.field, out)

    def permute(self, perm):
        """Variable substitution z_j -> z_{perm[j]} (0-indexed one-line notation)."""
        out = {}
        for k, c in self.terms.items():
            kk = [0] * self.n
            for j, e in enumerate(k):
                kk[perm[j]] += e
            out[tuple(kk)] = c
        return ZPolynomial._raw(self.n, self.field, out)

    def map_coefficients(self, fn, field=None):
        out = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return ZPolynomial._raw(self.n, field, out)

    # --- comparison / display -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ZPolynomial):
            if isinstance(other, (int, Fraction, FieldElement)):
                return self == ZPolynomial.constant(self.n, other, self.field)
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = "*".join(
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" if e > 0 else f"z{i + 1}^({e})"
                for i, e in enumerate(k) if e)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if " " in cs and not cs.startswith("("):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ZPolynomial(n={self.n}, {self})"


def zp_arith(f: ZPolynomial, g: ZPolynomial, kind: str) -> ZPolynomial:
    if f.n != g.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {g.n}")
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown operation {kind!r}")


def evaluate(f: ZPolynomial, point):
    """Exact value of f at ``point`` (a sequence of n coefficients)."""
    if len(point) != f.n:
        raise ValueError("point has the wrong length")
    cache = [dict() for _ in range(f.n)]
    total = f._zero_c()
    for k, c in f.terms.items():
        term = c
        for i, e in enumerate(k):
            if e:
                p = cache[i].get(e)
                if p is None:
                    p = point[i] ** e
                    cache[i][e] = p
                term = term * p
        total = total + term
    return total


def evaluate_at_monomials(f: ZPolynomial, exps):
    """Exact value of f at the point whose i-th coordinate is the parameter
    monomial with exponent vector ``exps[i]``.

    Coefficients must be Laurent polynomials; the work is then pure exponent
    bookkeeping with integer coefficients.
    """
    if f.field is None:
        raise ValueError("needs parametric coefficients")
    nv = len(f.field.vars)
    acc = {}
    den = None
    for k, c in f.terms.items():
        if len(c._d) != 1:
            return evaluate(f, tuple(f.field.monomial(e) for e in exps))
        ((kd, vd),) = c._d.items()
        if den is None:
            den = vd
        elif vd != den:
            return evaluate(f, tuple(f.field.monomial(e) for e in exps))
        sh = [-x for x in kd]
        for i, e in enumerate(k):
            if e:
                for j in range(nv):
                    sh[j] += e * exps[i][j]
        for kn, vn in c._n.items():
            key = tuple(x + y for x, y in zip(kn, sh))
            v = acc.get(key, 0) + vn
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    if not acc:
        return f.field.zero
    return FieldElement(f.field, acc, {(0,) * nv: den})


def exact_divide(f: ZPolynomial, g: ZPolynomial) -> ZPolynomial:
    """Quotient f/g; raises DivisibilityError when g does not divide f."""
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f.terms:
        return ZPolynomial.zero(f.n, f.field)
    n = f.n
    kg = max(g.terms)
    cg = g.terms[kg]
    inv = 1 / cg if f.field is None else cg.inverse()
    lo = [min(k[i] for k in f.terms) - min(k[i] for k in g.terms) for i in range(n)]
    hi = [max(k[i] for k in f.terms) - max(k[i] for k in g.terms) for i in range(n)]
    r = dict(f.terms)
    q = {}
    while r:
        kr = max(r)
        e = tuple(x - y for x, y in zip(kr, kg))
        if any(x < a or x > b for x, a, b in zip(e, lo, hi)):
            raise DivisibilityError("nonzero remainder")
        c = r[kr] * inv
        q[e] = c
        for k, v in g.terms.items():
            kk = tuple(x + y for x, y in zip(k, e))
            w = r.get(kk)
            w = -(v * c) if w is None else w - v * c
            if w:
                r[kk] = w
            else:
                r.pop(kk, None)
    return ZPolynomial._raw(n, f.field, q)


def top_homogeneous(f: ZPolynomial) -> ZPolynomial:
    """Sum of the terms of maximal total degree."""
    if not f.terms:
        raise ValueError("the zero polynomial has no top homogeneous part")
    d = f.degree()
    return ZPolynomial._raw(f.n, f.field, {k: c for k, c in f.terms.items() if sum(k) == d})


def homogeneous_part(f: ZPolynomial, d: int) -> ZPolynomial:
    return ZPolynomial._raw(f.n, f.field, {k: c for k, c in f.terms.items() if sum(k) == d})


def affine_substitute(f: ZPolynomial, scale, shift, field=None) -> ZPolynomial:
    """Replace every z_i by ``scale*z_i + shift`` and expand.

    ``field`` overrides the coefficient field of the result (defaults to f's).
    """
    if not f.is_polynomial():
        raise ValueError("affine substitution needs a polynomial")
    field = f.field if field is None else field
    conv = (lambda c: field(c)) if field is not None else Fraction
    scale = conv(scale)
    shift = conv(shift)
    if not scale:
        raise ValueError("scale must be nonzero")
    n = f.n
    top = max((max(k) for k in f.terms), default=0)
    spow = [conv(1)]
    hpow = [conv(1)]
    for _ in range(top):
        spow.append(spow[-1] * scale)
        hpow.append(hpow[-1] * shift)
    # (scale z + shift)^e = sum_j C(e,j) scale^j shift^(e-j) z^j
    expansions = {}
    for e in range(top + 1):
        expansions[e] = [(j, comb(e, j) * spow[j] * hpow[e - j]) for j in range(e + 1)
                         if hpow[e - j] or j == e]
    out = {}
    for k, c in f.terms.items():
        partial = {(): conv(c)}
        for e in k:
            nxt = {}
            for pk, pc in partial.items():
                for j, v in expansions[e]:
                    if not v:
                        continue
                    kk = pk + (j,)
                    w = nxt.get(kk)
                    nxt[kk] = pc * v if w is None else w + pc * v
            partial = nxt
        for kk, v in partial.items():
            w = out.get(kk)
            out[kk] = v if w is None else w + v
    return ZPolynomial._raw(n, field, {k: c for k, c in out.items() if c})


def is_polynomial(f: ZPolynomial) -> bool:
    return f.is_polynomial()


def monomial_symmetric_expand(f: ZPolynomial) -> dict:
    """Coefficients of a symmetric f on the monomial symmetric basis.

    Keys are partitions padded to length n.
    """
    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    return {k: c for k, c in f.terms.items() if all(k[i] >= k[i + 1] for i in range(f.n - 1))}


def monomial_symmetric(mu, field=None) -> ZPolynomial:
    """m_mu in len(mu) variables."""
    n = len(mu)
    one = field.one if field is not None else Fraction(1)
    return ZPolynomial._raw(n, field, {k: one for k in set(permutations(mu))})


def from_monomial_symmetric(coeffs: dict, n: int, field=None) -> ZPolynomial:
    out = ZPolynomial.zero(n, field)
    for mu, c in coeffs.items():
        out = out + monomial_symmetric(tuple(mu), field).scale(c)
    return out

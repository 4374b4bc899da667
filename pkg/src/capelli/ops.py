"""Difference-reflection operators acting on ``ZPolynomial``.

Operators are pure functions.  Each linear operator is given by its action on
monomials; images are cached per operator context, so repeated application
(operator words, whole bases) only pays for the coefficient arithmetic.

Quantum operators live in ``QuantumOps`` (coefficients in Q(q,t), or in Q(q)
with t a fixed power of q for limit computations).  Classical ones live in
``ClassicalOps`` (coefficients in Q(r), or plain rationals for an integer r).
Words such as ``H_i ... H_{n-1} Phi H_1 ... H_{i-1}`` are applied right to
left, as written.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .coeff_field import QT, R, ParamField
from .zpoly import ZPolynomial, affine_substitute

__all__ = [
    "QuantumOps",
    "ClassicalOps",
    "OperatorTag",
    "quantum_ops",
    "classical_ops",
    "apply_si",
    "apply_Ni",
    "apply_hecke",
    "apply_delta",
    "apply_phi",
    "apply_xi_inv",
    "apply_xi_big",
    "apply_zi",
    "apply_am",
    "apply_euler_s",
    "apply_classical",
    "PolynomialityError",
    "conjugate_limit",
]

QUANTUM_KINDS = ("Si", "Ni", "Hi", "HbarI", "Delta", "Phi", "XiInvSmall", "XiBig", "Zi", "Am", "AbarM", "EulerS")
CLASSICAL_KINDS = ("SigmaI", "DeltaTilde", "PhiTilde", "XiTilde", "ZTilde")
_REFLECTION = {"Si", "Ni", "Hi", "HbarI", "SigmaI"}
_CHEREDNIK = {"XiInvSmall", "XiBig", "Zi", "Am", "AbarM", "XiTilde", "ZTilde"}


class PolynomialityError(ArithmeticError):
    """An operator that must preserve polynomials produced a Laurent term."""


class OperatorTag:
    """Operator name plus index, validated against n."""

    __slots__ = ("kind", "index")

    def __init__(self, kind, index=None):
        if kind not in QUANTUM_KINDS + CLASSICAL_KINDS:
            raise ValueError(f"unknown operator kind {kind!r}")
        indexed = kind in _REFLECTION or kind in _CHEREDNIK
        if indexed != (index is not None):
            raise ValueError(f"{kind} {'needs' if indexed else 'takes no'} index")
        self.kind = kind
        self.index = index

    def check(self, n):
        if self.kind in _REFLECTION and not 1 <= self.index <= n - 1:
            raise IndexError(f"{self.kind} index {self.index} outside 1..{n - 1}")
        if self.kind in _CHEREDNIK and not 1 <= self.index <= n:
            raise IndexError(f"{self.kind} index {self.index} outside 1..{n}")

    def __repr__(self):
        return self.kind if self.index is None else f"{self.kind}[{self.index}]"


def _n_image(k, i):
    """N_i(z^k) as a list of (exponent, integer coefficient); i is 0-indexed."""
    x, y = k[i], k[i + 1]
    if x == y:
        return []
    sign = 1
    if x < y:
        x, y, sign = y, x, -1
    out = []
    base = list(k)
    for j in range(x - y):
        e = list(base)
        e[i] = y + j
        e[i + 1] = x - 1 - j
        out.append((tuple(e), sign))
    return out


class _LinearOps:
    """Shared machinery: monomial-image caches and accumulation."""

    def __init__(self, n, field):
        self.n = n
        self.field = field
        self._cache = {}
        if field is None:
            self.one = Fraction(1)
            self.conv = Fraction
        else:
            self.one = field.one
            self.conv = field

    def _check(self, f):
        if f.n != self.n:
            raise ValueError(f"operator on {self.n} variables applied to a polynomial in {f.n}")
        if f.field is not self.field and (f.field is None or self.field is None
                                          or f.field.vars != self.field.vars):
            raise ValueError("coefficient field mismatch")

    def _apply(self, f, key, image):
        """Apply the linear map whose monomial images are ``image(k)``."""
        self._check(f)
        cache = self._cache.setdefault(key, {})
        out = {}
        for k, c in f.terms.items():
            img = cache.get(k)
            if img is None:
                img = image(k)
                cache[k] = img
            for kk, v in img:
                w = out.get(kk)
                p = c * v
                out[kk] = p if w is None else w + p
        return ZPolynomial._raw(self.n, self.field, {k: c for k, c in out.items() if c})

    def _combine(self, pairs):
        """Sum of coefficient * exponent pairs into a cleaned image list."""
        out = {}
        for k, c in pairs:
            w = out.get(k)
            out[k] = c if w is None else w + c
        return [(k, c) for k, c in out.items() if c]

    def _idx(self, i, upper):
        if not 1 <= i <= upper:
            raise IndexError(f"index {i} outside 1..{upper}")
        return i - 1

    def s(self, f, i):
        """Simple reflection s_i: exchange z_i and z_{i+1}."""
        self._idx(i, self.n - 1)
        self._check(f)
        return f.swap(i)

    def N(self, f, i):
        """Divided difference (1 - s_i)/(z_i - z_{i+1})."""
        j = self._idx(i, self.n - 1)
        conv = self.conv
        return self._apply(f, ("N", i), lambda k: [(e, conv(c)) for e, c in _n_image(k, j)])

    def mul_var(self, f, i, power=1):
        e = [0] * self.n
        e[i - 1] = power
        return f.shift(tuple(e))

    def word(self, f, letters):
        """Apply ``letters`` (callables or (method, index) pairs) right to left."""
        for op in reversed(letters):
            if callable(op):
                f = op(f)
            else:
                name, *args = op
                f = getattr(self, name)(f, *args)
        return f


class QuantumOps(_LinearOps):
    """Quantum operators in n variables.

    ``t`` defaults to the generator of ``field``; pass ``t = q**r`` with
    ``field = Q`` for the t = q^r specialization.
    """

    def __init__(self, n, field: ParamField = QT, t=None):
        super().__init__(n, field)
        self.q = field.gen("q")
        self.t = field.gen("t") if t is None else field(t)
        self.qinv = self.q.inverse()

    # --- Hecke operators ------------------------------------------------------
    def _h_image(self, k, j, bar):
        one, t = self.one, self.t
        sk = list(k)
        sk[j], sk[j + 1] = sk[j + 1], sk[j]
        pairs = [(tuple(sk), one)]
        if bar:
            # s_i - (1-t) z_{i+1} N_i
            for e, c in _n_image(k, j):
                e = list(e)
                e[j + 1] += 1
                pairs.append((tuple(e), (t - 1) * c))
        else:
            # s_i - (1-t) N_i z_i
            kz = list(k)
            kz[j] += 1
            for e, c in _n_image(tuple(kz), j):
                pairs.append((e, (t - 1) * c))
        return self._combine(pairs)

    def _h_image_alt(self, k, j, bar):
        one, t = self.one, self.t
        sk = list(k)
        sk[j], sk[j + 1] = sk[j + 1], sk[j]
        pairs = [(tuple(sk), t * one)]
        if bar:
            # t s_i - (1-t) N_i z_{i+1}
            kz = list(k)
            kz[j + 1] += 1
            for e, c in _n_image(tuple(kz), j):
                pairs.append((e, (t - 1) * c))
        else:
            # t s_i - (1-t) z_i N_i
            for e, c in _n_image(k, j):
                e = list(e)
                e[j] += 1
                pairs.append((tuple(e), (t - 1) * c))
        return self._combine(pairs)

    def H(self, f, i, form=1):
        j = self._idx(i, self.n - 1)
        img = self._h_image if form == 1 else self._h_image_alt
        return self._apply(f, ("H", i, form), lambda k: img(k, j, False))

    def Hbar(self, f, i, form=1):
        j = self._idx(i, self.n - 1)
        img = self._h_image if form == 1 else self._h_image_alt
        return self._apply(f, ("Hb", i, form), lambda k: img(k, j, True))

    def hecke(self, f, i, bar=False):
        return self.Hbar(f, i) if bar else self.H(f, i)

    # --- shift operators ------------------------------------------------------
    def delta(self, f):
        """f(z_n/q, z_1, ..., z_{n-1})."""
        def image(k):
            return [(k[1:] + k[:1], self.qinv ** k[0])]
        return self._apply(f, ("D",), image)

    def phi(self, f):
        """(z_n - t^{-n+1}) Delta."""
        c = self.t ** (-(self.n - 1))

        def image(k):
            e = k[1:] + k[:1]
            v = self.qinv ** k[0]
            up = e[:-1] + (e[-1] + 1,)
            return [(up, v), (e, -(c * v))]
        return self._apply(f, ("Phi",), image)

    # --- words ----------------------------------------------------------------------
    def _hs(self, f, indices, bar=False):
        """Apply H_{indices[0]} ... H_{indices[-1]} (rightmost first)."""
        for i in reversed(indices):
            f = self.Hbar(f, i) if bar else self.H(f, i)
        return f

    def xi_inv(self, f, i):
        """xi_i^{-1} = Hbar_i ... Hbar_{n-1} Delta H_1 ... H_{i-1}."""
        self._idx(i, self.n)
        g = self._hs(f, list(range(1, i)))
        g = self.delta(g)
        return self._hs(g, list(range(i, self.n)), bar=True)

    def B(self, f, i):
        """z_i Xi_i - 1 = H_i ... H_{n-1} Phi H_1 ... H_{i-1}."""
        self._idx(i, self.n)
        g = self._hs(f, list(range(1, i)))
        g = self.phi(g)
        return self._hs(g, list(range(i, self.n)))

    def Xi(self, f, i):
        """z_i^{-1} (1 + H_i ... H_{n-1} Phi H_1 ... H_{i-1}); output must be polynomial."""
        g = f + self.B(f, i)
        out = self.mul_var(g, i, -1)
        if not out.is_polynomial():
            raise PolynomialityError(f"Xi_{i} left the polynomial ring")
        return out

    def Xi_recursive(self, f, i):
        """Xi_i via Xi_i = t^{-1} Hbar_i Xi_{i+1} Hbar_i, starting from Xi_n."""
        self._idx(i, self.n)
        if i == self.n:
            return self.Xi(f, i)
        g = self.Hbar(f, i)
        g = self.Xi_recursive(g, i + 1)
        return self.Hbar(g, i).scale(self.t.inverse())

    def Xi_product(self, f, indices):
        for i in reversed(list(indices)):
            f = self.Xi(f, i)
        return f

    def Z(self, f, i):
        """t^{C(n,2)} (z_i Xi_i - 1) prod_{j != i} Xi_j."""
        others = [j for j in range(1, self.n + 1) if j != i]
        g = self.Xi_product(f, others)
        return self.B(g, i).scale(self.t ** comb(self.n, 2))

    def A(self, f, m, bar=False):
        """H_m ... H_{n-1} Phi (or the barred version)."""
        self._idx(m, self.n)
        return self._hs(self.phi(f), list(range(m, self.n)), bar=bar)

    def S(self, f):
        """Euler operator t^{C(n,2)} Xi_1 ... Xi_n."""
        return self.Xi_product(f, range(1, self.n + 1)).scale(self.t ** comb(self.n, 2))

    def apply(self, f, tag: OperatorTag):
        tag.check(self.n)
        k, i = tag.kind, tag.index
        table = {
            "Si": lambda: self.s(f, i),
            "Ni": lambda: self.N(f, i),
            "Hi": lambda: self.H(f, i),
            "HbarI": lambda: self.Hbar(f, i),
            "Delta": lambda: self.delta(f),
            "Phi": lambda: self.phi(f),
            "XiInvSmall": lambda: self.xi_inv(f, i),
            "XiBig": lambda: self.Xi(f, i),
            "Zi": lambda: self.Z(f, i),
            "Am": lambda: self.A(f, i),
            "AbarM": lambda: self.A(f, i, bar=True),
            "EulerS": lambda: self.S(f),
        }
        if k not in table:
            raise ValueError(f"{k} is not a quantum operator")
        return table[k]()


class ClassicalOps(_LinearOps):
    """Classical-limit operators in n variables over Q(r) or, for an integer
    ``r``, over the rationals (``field=None``)."""

    def __init__(self, n, field=R, r=None):
        super().__init__(n, field)
        if r is None:
            if field is None:
                raise ValueError("an explicit r is needed over the rationals")
            r = field.gen("r")
        self.r = self.conv(r) if field is None else field(r)

    def sigma(self, f, i):
        """s_i + r N_i, the q -> 1 limit of H_i and Hbar_i.

        With this sign z_{i+1} sigma_i = sigma_i z_i - r and the classical
        Cherednik operators have the eigenvalues lam_i - r k_i.
        """
        j = self._idx(i, self.n - 1)
        one, r = self.one, self.r

        def image(k):
            sk = list(k)
            sk[j], sk[j + 1] = sk[j + 1], sk[j]
            pairs = [(tuple(sk), one)]
            pairs.extend((e, r * c) for e, c in _n_image(k, j))
            return self._combine(pairs)
        return self._apply(f, ("sigma", i), image)

    def delta(self, f):
        """f(z_n - 1, z_1, ..., z_{n-1})."""
        def image(k):
            a = k[0]
            if a < 0:
                raise ValueError("the classical shift needs polynomial input")
            rest = k[1:]
            return [(rest + (j,), self.conv(comb(a, j) * (-1) ** (a - j))) for j in range(a + 1)]
        return self._apply(f, ("D",), image)

    def phi(self, f):
        """(z_n + (n-1) r) Delta~."""
        g = self.delta(f)
        return self.mul_var(g, self.n) + g.scale(self.r * (self.n - 1))

    def _sigmas(self, f, indices):
        for i in reversed(indices):
            f = self.sigma(f, i)
        return f

    def B(self, f, i):
        """sigma_i ... sigma_{n-1} Phi~ sigma_1 ... sigma_{i-1}."""
        self._idx(i, self.n)
        g = self._sigmas(f, list(range(1, i)))
        return self._sigmas(self.phi(g), list(range(i, self.n)))

    def Xi(self, f, i):
        """z_i - sigma_i ... sigma_{n-1} Phi~ sigma_1 ... sigma_{i-1}."""
        return self.mul_var(f, i) - self.B(f, i)

    def Z(self, f, i):
        """z_i - Xi~_i."""
        return self.B(f, i)

    def apply(self, f, tag: OperatorTag):
        tag.check(self.n)
        k, i = tag.kind, tag.index
        table = {
            "SigmaI": lambda: self.sigma(f, i),
            "DeltaTilde": lambda: self.delta(f),
            "PhiTilde": lambda: self.phi(f),
            "XiTilde": lambda: self.Xi(f, i),
            "ZTilde": lambda: self.Z(f, i),
        }
        if k not in table:
            raise ValueError(f"{k} is not a classical operator")
        return table[k]()


# --- cached default contexts and the flat functional interface --------------------

_CONTEXTS = {}


def quantum_ops(n, field=QT, t=None) -> QuantumOps:
    key = ("Q", n, field.vars, None if t is None else (t.field.vars, frozenset(t._n.items()), frozenset(t._d.items())))
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = _CONTEXTS[key] = QuantumOps(n, field, t)
    return ctx


def classical_ops(n, field=R, r=None) -> ClassicalOps:
    key = ("C", n, None if field is None else field.vars, None if r is None else Fraction(r))
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = _CONTEXTS[key] = ClassicalOps(n, field, r)
    return ctx


def _q(f):
    return quantum_ops(f.n, f.field or QT)


def apply_si(f, i):
    return _q(f).s(f, i)


def apply_Ni(f, i):
    return _q(f).N(f, i)


def apply_hecke(f, i, bar=False):
    return _q(f).hecke(f, i, bar)


def apply_delta(f):
    return _q(f).delta(f)


def apply_phi(f):
    return _q(f).phi(f)


def apply_xi_inv(f, i):
    return _q(f).xi_inv(f, i)


def apply_xi_big(f, i):
    return _q(f).Xi(f, i)


def apply_zi(f, i):
    return _q(f).Z(f, i)


def apply_am(f, m, bar=False):
    return _q(f).A(f, m, bar)


def apply_euler_s(f):
    return _q(f).S(f)


def apply_classical(f, tag, index=None):
    if not isinstance(tag, OperatorTag):
        tag = OperatorTag(tag, index)
    return classical_ops(f.n, f.field or R).apply(f, tag)


# --- q -> 1 limits of conjugated operators -----------------------------------------

def conjugate_limit(op, f, k, field):
    """Coefficientwise lim_{q->1} (q-1)^{-k} phi_q op phi_q^{-1} f.

    ``f`` has rational coefficients; ``op`` maps polynomials over ``field``
    (the Q(q) instantiation) to polynomials over it.  Returns a rational
    polynomial.  Here phi_q f(z) = f((q-1) z + 1).
    """
    from .coeff_field import limit_q1

    q = field.gen("q")
    inv = 1 / (q - 1)
    lifted = f.map_coefficients(lambda c: field(c), field)
    g = affine_substitute(lifted, inv, -inv)  # phi_q^{-1} f = f(phi_q(z))
    g = op(g)
    g = affine_substitute(g, q - 1, 1)
    return g.map_coefficients(lambda c: limit_q1(c, k), None)

"""Field of fractions of parameter polynomials, kept in canonical form.

A value is stored as ``num/den`` with both integer-coefficient polynomials
with nonnegative exponents, no common factor (monomials and integer content
included), and ``den`` having a positive graded-lex leading coefficient.
Canonical forms are unique, so equality is structural.

Three instantiations are used throughout: ``QT`` (parameters q, t), ``Q``
(q alone, after t is replaced by a power of q) and ``R`` (the classical
parameter r).
"""
from __future__ import annotations

import math
from fractions import Fraction

from .polyring import (
    ParamPolynomial,
    _add,
    _clear_denominators,
    _exquo_dict,
    _int_content,
    _leading,
    _min_exponents,
    _mul,
    _neg,
    _shift,
    _sub,
    gcd_dicts,
    param_gcd,
)

__all__ = [
    "ParamPolynomial",
    "param_gcd",
    "FieldElement",
    "ParamField",
    "QT",
    "Q",
    "R",
    "NonGenericSpecialization",
    "LimitError",
    "field_arith",
    "specialize",
    "substitute_t_power",
    "limit_q1",
]


class NonGenericSpecialization(ZeroDivisionError):
    """A denominator vanished: the parameters hit a degenerate value."""


class LimitError(ArithmeticError):
    """The requested q -> 1 limit does not exist."""


def _is_unit_den(d, zero):
    return len(d) == 1 and d.get(zero) == 1


def _canonical(n, d, nv):
    """Reduce integer dicts n/d to canonical form; returns (n, d)."""
    zero = (0,) * nv
    if not n:
        return {}, {zero: 1}
    if not d:
        raise NonGenericSpecialization("division by zero")
    # clear monomials (possibly negative exponents) shared by the pair
    mn = _min_exponents(n)
    md = _min_exponents(d)
    m = tuple(min(x, y) for x, y in zip(mn, md))
    if any(m):
        neg = tuple(-e for e in m)
        n = _shift(n, neg)
        d = _shift(d, neg)
    if len(d) == 1:
        ((kd, vd),) = d.items()
        # monomial denominator: only the numerator's monomial and integer content can cancel
        mn = _min_exponents(n)
        c = tuple(min(x, y) for x, y in zip(mn, kd))
        g = math.gcd(_int_content(n), vd)
        if vd < 0:
            g = -g
        if any(c):
            negc = tuple(-e for e in c)
            n = _shift(n, negc)
            kd = tuple(x - y for x, y in zip(kd, c))
        if g != 1:
            n = {k: v // g for k, v in n.items()}
            vd //= g
        return n, {kd: vd}
    if len(n) == 1:
        ((kn, vn),) = n.items()
        md = _min_exponents(d)
        c = tuple(min(x, y) for x, y in zip(md, kn))
        g = math.gcd(_int_content(d), vn)
        if any(c):
            negc = tuple(-e for e in c)
            d = _shift(d, negc)
            kn = tuple(x - y for x, y in zip(kn, c))
        if _leading(d)[1] < 0:
            g = -g
        if g != 1:
            d = {k: v // g for k, v in d.items()}
            vn //= g
        return {kn: vn}, d
    g = gcd_dicts(n, d, nv)
    if not (len(g) == 1 and not any(next(iter(g)))):
        n = _exquo_dict(n, g)
        d = _exquo_dict(d, g)
    else:
        gi = abs(g[zero])
        if gi != 1:
            n = {k: v // gi for k, v in n.items()}
            d = {k: v // gi for k, v in d.items()}
    c = math.gcd(_int_content(n), _int_content(d))
    if _leading(d)[1] < 0:
        c = -c
    if c != 1:
        n = {k: v // c for k, v in n.items()}
        d = {k: v // c for k, v in d.items()}
    return n, d


class FieldElement:
    """Element of the fraction field of ``ParamPolynomial`` in fixed parameters."""

    __slots__ = ("field", "_n", "_d", "_hash")

    def __init__(self, field, num, den=None):
        if isinstance(num, ParamPolynomial):
            num = num.terms
        if isinstance(den, ParamPolynomial):
            den = den.terms
        nv = len(field.vars)
        if den is None:
            den = {(0,) * nv: 1}
        n, a = _clear_denominators({k: v for k, v in num.items() if v})
        d, b = _clear_denominators({k: v for k, v in den.items() if v})
        # num/den == (n/a)/(d/b) == (n*b)/(d*a)
        if b != 1:
            n = {k: v * b for k, v in n.items()}
        if a != 1:
            d = {k: v * a for k, v in d.items()}
        self.field = field
        self._n, self._d = _canonical(n, d, nv)
        self._hash = None

    @classmethod
    def _make(cls, field, n, d):
        obj = cls.__new__(cls)
        obj.field = field
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    # --- views --------------------------------------------------------------
    @property
    def num(self):
        return ParamPolynomial._raw(self.field.vars, self._n)

    @property
    def den(self):
        return ParamPolynomial._raw(self.field.vars, self._d)

    def is_zero(self):
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_constant(self):
        z = self.field._zero_exp
        return (not self._n or (len(self._n) == 1 and z in self._n)) and len(self._d) == 1 and z in self._d

    def is_laurent_polynomial(self):
        """True when the denominator is a monomial."""
        return len(self._d) == 1

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        z = self.field._zero_exp
        return Fraction(self._n.get(z, 0), self._d[z])

    def laurent_terms(self):
        """Terms of a Laurent polynomial as ``{exponent: Fraction}``."""
        if len(self._d) != 1:
            raise ValueError(f"{self} is not a Laurent polynomial")
        ((kd, vd),) = self._d.items()
        return {tuple(x - y for x, y in zip(k, kd)): Fraction(v, vd) for k, v in self._n.items()}

    # --- arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field.vars != self.field.vars:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        if isinstance(other, ParamPolynomial):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o._n:
            return self
        if not self._n:
            return o
        nv = len(self.field.vars)
        a, b, c, d = self._n, self._d, o._n, o._d
        if b == d:
            n = _add(a, c)
            if len(b) == 1 and next(iter(b.values())) == 1:
                if not n:
                    return self.field.zero
                return FieldElement._make(self.field, *_canonical(n, b, nv))
            return FieldElement._make(self.field, *_canonical(n, b, nv))
        if len(b) == 1 and len(d) == 1:
            return FieldElement._make(self.field, *_canonical(_add(_mul(a, d), _mul(c, b)), _mul(b, d), nv))
        g = gcd_dicts(b, d, nv)
        if len(g) == 1 and not any(next(iter(g))):
            n = _add(_mul(a, d), _mul(c, b))
            return FieldElement._make(self.field, *_canonical(n, _mul(b, d), nv))
        bg = _exquo_dict(b, g)
        dg = _exquo_dict(d, g)
        n = _add(_mul(a, dg), _mul(c, bg))
        return FieldElement._make(self.field, *_canonical(n, _mul(b, dg), nv))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, _neg(self._n), self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self._n or not o._n:
            return self.field.zero
        nv = len(self.field.vars)
        a, b, c, d = self._n, self._d, o._n, o._d
        if len(b) == 1 and len(d) == 1:
            return FieldElement._make(self.field, *_canonical(_mul(a, c), _mul(b, d), nv))
        # cross-cancel: gcd(a, d) and gcd(c, b)
        g1 = gcd_dicts(a, d, nv)
        g2 = gcd_dicts(c, b, nv)
        if not (len(g1) == 1 and not any(next(iter(g1)))):
            a = _exquo_dict(a, g1)
            d = _exquo_dict(d, g1)
        if not (len(g2) == 1 and not any(next(iter(g2)))):
            c = _exquo_dict(c, g2)
            b = _exquo_dict(b, g2)
        return FieldElement._make(self.field, *_canonical(_mul(a, c), _mul(b, d), nv))

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise NonGenericSpecialization("inverse of zero")
        return FieldElement._make(self.field, *_canonical(self._d, self._n, len(self.field.vars)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o._n:
            raise NonGenericSpecialization("division by zero")
        if len(self._d) == 1 and len(o._d) == 1 and len(o._n) > 1:
            # Laurent / Laurent: try an exact quotient before paying for a gcd
            q = _exquo_dict(self._n, o._n)
            if q is not None:
                nv = len(self.field.vars)
                return FieldElement._make(self.field, *_canonical(_mul(q, o._d), self._d, nv))
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        r = self.field.one
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    # --- comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._n
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.vars == other.field.vars and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.vars, frozenset(self._n.items()), frozenset(self._d.items())))
        return self._hash

    def __str__(self):
        n = str(self.num)
        if _is_unit_den(self._d, self.field._zero_exp):
            return n
        d = str(self.den)
        if len(self._n) > 1:
            n = f"({n})"
        if len(self._d) > 1 or next(iter(self._d.values())) != 1 and any(next(iter(self._d))):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"FieldElement[{','.join(self.field.vars)}]({self})"


class ParamField:
    """Factory for elements of the fraction field over the named parameters."""

    def __init__(self, vars):
        self.vars = tuple(vars)
        self._zero_exp = (0,) * len(self.vars)
        self.zero = FieldElement._make(self, {}, {self._zero_exp: 1})
        self.one = FieldElement._make(self, {self._zero_exp: 1}, {self._zero_exp: 1})

    def __call__(self, value, den=None):
        if isinstance(value, FieldElement):
            if value.field.vars != self.vars:
                raise ValueError(f"cannot coerce {value!r} into {self}")
            return value
        if isinstance(value, (int, Fraction)):
            v = Fraction(value)
            if not v:
                return self.zero
            return FieldElement(self, {self._zero_exp: v.numerator}, {self._zero_exp: v.denominator})
        if isinstance(value, ParamPolynomial):
            if value.vars != self.vars:
                raise ValueError(f"cannot coerce {value!r} into {self}")
            return FieldElement(self, value.terms, None if den is None else den.terms)
        if isinstance(value, dict):
            return FieldElement(self, value, den)
        raise TypeError(f"cannot build a field element from {value!r}")

    def gen(self, name):
        k = [0] * len(self.vars)
        k[self.vars.index(name)] = 1
        return FieldElement._make(self, {tuple(k): 1}, {self._zero_exp: 1})

    def monomial(self, exps, coeff=1):
        """``coeff * prod(var**e)`` with possibly negative exponents."""
        return FieldElement(self, {tuple(exps): coeff})

    def __eq__(self, other):
        return isinstance(other, ParamField) and other.vars == self.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return f"ParamField({','.join(self.vars)})"

    def __str__(self):
        return f"Q({','.join(self.vars)})"


QT = ParamField(("q", "t"))
Q = ParamField(("q",))
R = ParamField(("r",))


def field_arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Exact ``a <kind> b`` for kind in add/sub/mul/div."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def _eval_dict(terms, vars, vals):
    total = Fraction(0)
    for k, c in terms.items():
        term = Fraction(c)
        for x, e in zip(vals, k):
            if e:
                term *= x ** e
        total += term
    return total


def specialize(a, assignment) -> Fraction:
    """Exact rational value of ``a`` at the parameter assignment."""
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    vals = [Fraction(assignment[v]) for v in a.field.vars]
    den = _eval_dict(a._d, a.field.vars, vals)
    if den == 0:
        raise NonGenericSpecialization(f"denominator of {a} vanishes at {assignment}")
    return _eval_dict(a._n, a.field.vars, vals) / den


def substitute_t_power(a: FieldElement, r: int) -> FieldElement:
    """Image of a (q,t)-element in the q-field under t -> q**r."""
    if a.field.vars != ("q", "t"):
        raise ValueError("expected an element of Q(q,t)")

    def sub(terms):
        out = {}
        for (i, j), v in terms.items():
            k = (i + r * j,)
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    d = sub(a._d)
    if not d:
        raise NonGenericSpecialization(f"denominator of {a} vanishes under t = q^{r}")
    return FieldElement(Q, sub(a._n), d)


def _q1_valuation(terms):
    """Return (v, rest) with the univariate integer polynomial ``terms`` equal
    to (q-1)**v * rest and rest(1) != 0."""
    lo = min(k[0] for k in terms)
    hi = max(k[0] for k in terms)
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in terms.items():
        coeffs[e - lo] = c
    v = 0
    # synthetic division by (q - 1) while the value at q = 1 vanishes
    while sum(coeffs) == 0:
        out = [0] * (len(coeffs) - 1)
        acc = 0
        for i in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[i]
            out[i - 1] = acc
        coeffs = out
        v += 1
    return v, sum(coeffs)


def limit_q1(a, k: int = 0) -> Fraction:
    """Exact value of ``a / (q-1)**k`` at q = 1.

    Raises LimitError when a vanishes at q = 1 to order smaller than k
    (or has a pole there).
    """
    if isinstance(a, (int, Fraction)):
        if k > 0 and a:
            raise LimitError(f"{a} does not vanish at q = 1")
        return Fraction(a) if k == 0 else Fraction(0)
    if a.field.vars != ("q",):
        raise ValueError("limit_q1 expects an element of Q(q)")
    if not a._n:
        return Fraction(0)
    vn, n1 = _q1_valuation(a._n)
    vd, d1 = _q1_valuation(a._d)
    order = vn - vd
    if order < k:
        raise LimitError(f"{a} vanishes to order {order} < {k} at q = 1")
    if order > k:
        return Fraction(0)
    return Fraction(n1, d1)

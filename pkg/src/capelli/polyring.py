"""Sparse Laurent polynomials in a small set of parameters, with exact GCD.

Polynomials are stored as ``{exponent tuple: coefficient}`` dicts with
``int`` or ``Fraction`` coefficients.  GCDs are computed on a dense
recursive representation: a heuristic GCD (evaluation at a large integer,
verified by exact division) is tried first, and a subresultant remainder
sequence is the fallback.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

__all__ = [
    "ParamPolynomial",
    "param_gcd",
    "DivisibilityError",
]


class DivisibilityError(ArithmeticError):
    """An exact division had a nonzero remainder."""


# ---------------------------------------------------------------------------
# raw dict helpers (exponent tuple -> coefficient)
# ---------------------------------------------------------------------------

def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w += v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _sub(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = -v
        else:
            w -= v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _neg(a):
    return {k: -v for k, v in a.items()}


def _scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _shift(a, m):
    """Multiply by the monomial with exponent vector ``m``."""
    if len(m) == 1:
        (s,) = m
        return {(k[0] + s,): v for k, v in a.items()}
    s0, s1 = m
    return {(k[0] + s0, k[1] + s1): v for k, v in a.items()}


def _mul(a, b):
    if len(a) == 1:
        ((ka, va),) = a.items()
        if len(ka) == 1:
            return {(k[0] + ka[0],): v * va for k, v in b.items()}
        return {(k[0] + ka[0], k[1] + ka[1]): v * va for k, v in b.items()}
    if len(b) == 1:
        return _mul(b, a)
    out = {}
    get = out.get
    if a and len(next(iter(a))) == 2:
        for (a0, a1), va in a.items():
            for (b0, b1), vb in b.items():
                k = (a0 + b0, a1 + b1)
                out[k] = get(k, 0) + va * vb
    else:
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _min_exponents(a):
    keys = iter(a)
    m = list(next(keys))
    for k in keys:
        for i, e in enumerate(k):
            if e < m[i]:
                m[i] = e
    return tuple(m)


def _grlex_key(k):
    return (sum(k), k)


def _leading(a):
    """Leading (exponent, coefficient) under graded-lexicographic order."""
    k = max(a, key=_grlex_key)
    return k, a[k]


def _int_content(a):
    g = 0
    for v in a.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    return g


def _clear_denominators(a):
    """Return (integer dict, d) with integer dict == d * a."""
    den = 1
    for v in a.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // math.gcd(den, v.denominator)
    if den == 1:
        return {k: int(v) for k, v in a.items()}, 1
    return {k: int(v * den) for k, v in a.items()}, den


def _exquo_dict(a, b):
    """Exact quotient a / b of polynomial dicts, or None if b does not divide a.

    Works for Laurent dicts; leading terms are taken in lex order.
    Coefficients must be integers; non-integral quotients count as failure.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    if len(b) == 1:
        ((kb, vb),) = b.items()
        neg = tuple(-e for e in kb)
        out = {}
        for k, v in a.items():
            qv, rv = divmod(v, vb)
            if rv:
                return None
            out[tuple(x + y for x, y in zip(k, neg))] = qv
        return out
    kb = max(b)
    vb = b[kb]
    # a quotient's exponents lie in the box [min a - min b, max a - max b]
    # coordinatewise (Newton polytopes add); leaving it means no quotient
    nv = len(kb)
    lo = [min(k[i] for k in a) - min(k[i] for k in b) for i in range(nv)]
    hi = [max(k[i] for k in a) - max(k[i] for k in b) for i in range(nv)]
    if any(l > h for l, h in zip(lo, hi)):
        return None
    r = dict(a)
    q = {}
    while r:
        kr = max(r)
        vr = r[kr]
        qv, rv = divmod(vr, vb)
        if rv:
            return None
        e = tuple(x - y for x, y in zip(kr, kb))
        if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
            return None
        q[e] = qv
        for k, v in b.items():
            kk = tuple(x + y for x, y in zip(k, e))
            w = r.get(kk, 0) - v * qv
            if w:
                r[kk] = w
            else:
                r.pop(kk, None)
    return q


# ---------------------------------------------------------------------------
# dense recursive representation used by the GCD code
#   level 0: int; level k: list (low -> high) of level k-1 polynomials
# ---------------------------------------------------------------------------

def _strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def _d_add(f, g, lev):
    if lev == 0:
        return f + g
    if len(f) < len(g):
        f, g = g, f
    if lev == 1:
        h = [a + b for a, b in zip(f, g)]
    else:
        h = [_d_add(a, b, lev - 1) for a, b in zip(f, g)]
    h.extend(f[len(g):])
    return _strip(h)


def _d_neg(f, lev):
    if lev == 0:
        return -f
    if lev == 1:
        return [-a for a in f]
    return [_d_neg(a, lev - 1) for a in f]


def _d_sub(f, g, lev):
    return _d_add(f, _d_neg(g, lev), lev)


def _up_mul(f, g):
    if not f or not g:
        return []
    if len(f) < 12 or len(g) < 12:
        h = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    h[i + j] += a * b
        return _strip(h)
    # Kronecker substitution: pack into big integers and use the C multiplier
    bound = max(map(abs, f)) * max(map(abs, g)) * min(len(f), len(g))
    bits = bound.bit_length() + 2
    F = _pack(f, bits)
    G = _pack(g, bits)
    return _unpack(F * G, bits, len(f) + len(g) - 1)


def _pack(f, bits):
    x = 0
    for a in reversed(f):
        x = (x << bits) + a
    return x


def _unpack(x, bits, n):
    out = []
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    for _ in range(n):
        d = x & mask
        x >>= bits
        if d >= half:
            d -= 1 << bits
            x += 1
        out.append(d)
    return _strip(out)


def _d_mul(f, g, lev):
    if lev == 0:
        return f * g
    if lev == 1:
        return _up_mul(f, g)
    if not f or not g:
        return []
    h = [[] for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    h[i + j] = _d_add(h[i + j], _d_mul(a, b, lev - 1), lev - 1)
    return _strip(h)


def _d_scale(f, c, lev):
    """Multiply by a ground (level lev-1) element c."""
    if not c:
        return []
    return _strip([_d_mul(a, c, lev - 1) for a in f])


def _d_exquo_ground(f, c, lev):
    """Divide every coefficient of f by the level lev-1 element c, or None."""
    out = []
    for a in f:
        qa = _d_exquo(a, c, lev - 1)
        if qa is None:
            return None
        out.append(qa)
    return out


def _d_exquo(f, g, lev):
    """Exact quotient f/g at level lev, or None."""
    if lev == 0:
        if g == 0:
            raise ZeroDivisionError
        qv, rv = divmod(f, g)
        return None if rv else qv
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    r = list(f)
    q = [[] if lev > 1 else 0] * (df - dg + 1)
    lcg = g[-1]
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if not c:
            continue
        qc = _d_exquo(c, lcg, lev - 1)
        if qc is None:
            return None
        q[k] = qc
        for j, b in enumerate(g):
            if b:
                r[k + j] = _d_sub(r[k + j], _d_mul(qc, b, lev - 1), lev - 1)
    if any(r):
        return None
    return _strip(q)


def _d_max_norm(f, lev):
    if lev == 0:
        return abs(f)
    if lev == 1:
        return max(map(abs, f)) if f else 0
    return max((_d_max_norm(a, lev - 1) for a in f), default=0)


def _d_ground_content(f, lev):
    """Integer content of f."""
    if lev == 0:
        return abs(f)
    g = 0
    for a in f:
        g = math.gcd(g, _d_ground_content(a, lev - 1))
        if g == 1:
            return 1
    return g


def _d_ground_quo(f, c, lev):
    if lev == 0:
        return f // c
    return [_d_ground_quo(a, c, lev - 1) for a in f]


def _d_ground_lc(f, lev):
    while lev:
        f = f[-1]
        lev -= 1
    return f


def _d_eval_top(f, x, lev):
    """Evaluate the outermost variable at the integer x."""
    if lev == 1:
        r = 0
        for a in reversed(f):
            r = r * x + a
        return r
    r = []
    for a in reversed(f):
        r = _d_add(_d_scale_int(r, x, lev - 1), a, lev - 1)
    return r


def _d_scale_int(f, c, lev):
    if lev == 0:
        return f * c
    if not c:
        return []
    return [_d_scale_int(a, c, lev - 1) for a in f]


def _d_interpolate(h, x, lev):
    """Inverse of evaluating the outermost variable at x (symmetric digits)."""
    coeffs = []
    half = x // 2
    while h:
        if lev == 1:
            g = h % x
            if g > half:
                g -= x
        else:
            g = _d_symmod(h, x, half, lev - 1)
        coeffs.append(g)
        h = _d_ground_quo(_d_sub(h, g, lev - 1), x, lev - 1) if lev > 1 else (h - g) // x
    return _strip(coeffs)


def _d_symmod(f, x, half, lev):
    if lev == 0:
        g = f % x
        return g - x if g > half else g
    return _strip([_d_symmod(a, x, half, lev - 1) for a in f])


def _d_gcd(f, g, lev):
    """GCD with positive ground leading coefficient, integer content included."""
    if lev == 0:
        return math.gcd(f, g)
    if not f:
        return _d_normalize_sign(g, lev)
    if not g:
        return _d_normalize_sign(f, lev)
    cf = _d_ground_content(f, lev)
    cg = _d_ground_content(g, lev)
    c = math.gcd(cf, cg)
    f = _d_ground_quo(f, cf, lev)
    g = _d_ground_quo(g, cg, lev)
    h = _d_heu_gcd(f, g, lev)
    if h is None:
        h = _d_subresultant_gcd(f, g, lev)
    h = _d_normalize_sign(h, lev)
    return _d_scale_int(h, c, lev) if c != 1 else h


def _d_normalize_sign(f, lev):
    if _d_ground_lc(f, lev) < 0:
        return _d_neg(f, lev)
    return f


def _d_primitive_ground(f, lev):
    c = _d_ground_content(f, lev)
    if c > 1:
        f = _d_ground_quo(f, c, lev)
    return _d_normalize_sign(f, lev)


def _d_heu_gcd(f, g, lev, tries=6):
    """Heuristic GCD of integer-primitive f, g; None if it gives up."""
    if len(f) == 1 and lev == 1:
        return [math.gcd(f[0], *g)]
    if len(g) == 1 and lev == 1:
        return [math.gcd(g[0], *f)]
    fn = _d_max_norm(f, lev)
    gn = _d_max_norm(g, lev)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * math.isqrt(b)),
            2 * min(fn // abs(_d_ground_lc(f, lev)), gn // abs(_d_ground_lc(g, lev))) + 2)
    for _ in range(tries):
        ff = _d_eval_top(f, x, lev)
        gg = _d_eval_top(g, x, lev)
        if ff and gg:
            hh = _d_gcd(ff, gg, lev - 1)
            h = _d_primitive_ground(_d_interpolate(hh, x, lev), lev)
            if h and _d_exquo(f, h, lev) is not None and _d_exquo(g, h, lev) is not None:
                return h
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def _d_content(f, lev):
    """Content of f as a polynomial in its outer variable (a level lev-1 element)."""
    return reduce(lambda a, b: _d_gcd(a, b, lev - 1), f, [] if lev > 1 else 0)


def _d_prem(f, g, lev):
    """Pseudo-remainder of f by g in the outer variable."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return f
    r = list(f)
    lcg = g[-1]
    for k in range(df - dg, -1, -1):
        c = r[k + dg] if k + dg < len(r) else ([] if lev > 1 else 0)
        r = [_d_mul(a, lcg, lev - 1) for a in r]
        if c:
            for j, b in enumerate(g):
                r[k + j] = _d_sub(r[k + j], _d_mul(c, b, lev - 1), lev - 1)
        _strip(r)
    return _strip(r[:dg] if len(r) > dg else r)


def _d_one(lev):
    r = 1
    for _ in range(lev):
        r = [r]
    return r


def _d_pow(c, e, lev):
    r = _d_one(lev)
    for _ in range(e):
        r = _d_mul(r, c, lev)
    return r


def _d_subresultant_gcd(f, g, lev):
    """GCD through the subresultant polynomial remainder sequence."""
    if len(f) < len(g):
        f, g = g, f
    if not g:
        return f
    ground = lev - 1
    cf = _d_content(f, lev)
    cg = _d_content(g, lev)
    d = _d_gcd(cf, cg, ground)
    a = _d_exquo_ground(f, cf, lev)
    b = _d_exquo_ground(g, cg, lev)
    one = _d_one(ground)
    gg = one
    hh = one
    while True:
        delta = len(a) - len(b)
        r = _d_prem(a, b, lev)
        if not r:
            break
        if len(r) == 1:
            b = [one]
            break
        a = b
        den = _d_mul(gg, _d_pow(hh, delta, ground), ground)
        b = _d_exquo_ground(r, den, lev)
        gg = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            hh = gg
        else:
            hh = _d_exquo(_d_pow(gg, delta, ground), _d_pow(hh, delta - 1, ground), ground)
    cb = _d_content(b, lev)
    b = _d_exquo_ground(b, cb, lev)
    return _d_scale(b, d, lev)


def _to_dense(a, nvars, order):
    """Dict with nonnegative exponents -> dense; ``order`` lists variable
    indices from outermost to innermost."""
    if nvars == 1:
        deg = max(k[0] for k in a)
        f = [0] * (deg + 1)
        for k, v in a.items():
            f[k[0]] = v
        return f
    o, i = order
    deg = max(k[o] for k in a)
    f = [[] for _ in range(deg + 1)]
    buckets = {}
    for k, v in a.items():
        buckets.setdefault(k[o], {})[k[i]] = v
    for e, row in buckets.items():
        inner = [0] * (max(row) + 1)
        for j, v in row.items():
            inner[j] = v
        f[e] = _strip(inner)
    return f


def _from_dense(f, nvars, order):
    out = {}
    if nvars == 1:
        for e, v in enumerate(f):
            if v:
                out[(e,)] = v
        return out
    o, _ = order
    for e, row in enumerate(f):
        for j, v in enumerate(row):
            if v:
                k = [0, 0]
                k[o] = e
                k[1 - o] = j
                out[tuple(k)] = v
    return out


def _gcd_dict(a, b, nvars):
    """GCD of integer-coefficient polynomial dicts with nonnegative exponents
    and no monomial content.  Sign is not normalized."""
    if nvars == 1:
        return _from_dense(_d_gcd(_to_dense(a, 1, None), _to_dense(b, 1, None), 1), 1, None)
    # outer variable: the one of smaller degree, so remainder sequences stay short
    deg0 = max(max(k[0] for k in a), max(k[0] for k in b))
    deg1 = max(max(k[1] for k in a), max(k[1] for k in b))
    order = (0, 1) if deg0 <= deg1 else (1, 0)
    h = _d_gcd(_to_dense(a, 2, order), _to_dense(b, 2, order), 2)
    return _from_dense(h, 2, order)


def _is_constant(a):
    return len(a) == 1 and not any(next(iter(a)))


def gcd_dicts(a, b, nvars):
    """GCD of integer polynomial dicts (nonnegative exponents), with monomial
    and integer content handled by fast paths.  Sign unnormalized."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    ma = _min_exponents(a)
    mb = _min_exponents(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    if len(a) == 1 or len(b) == 1:
        c = math.gcd(_int_content(a), _int_content(b))
        return {m: c}
    if any(ma):
        a = _shift(a, tuple(-e for e in ma))
    if any(mb):
        b = _shift(b, tuple(-e for e in mb))
    h = _gcd_dict(a, b, nvars)
    if any(m):
        h = _shift(h, m)
    return h


# ---------------------------------------------------------------------------
# public class
# ---------------------------------------------------------------------------

class ParamPolynomial:
    """Sparse Laurent polynomial in the named parameters ``vars``.

    ``terms`` maps exponent tuples (negative entries allowed) to nonzero
    ``int``/``Fraction`` coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        if not 1 <= len(self.vars) <= 2:
            raise ValueError("at most two parameters are supported")
        clean = {}
        for k, v in (terms or {}).items():
            k = tuple(int(e) for e in k)
            if len(k) != len(self.vars):
                raise ValueError(f"exponent {k} does not match variables {self.vars}")
            if v:
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = v.numerator
                clean[k] = clean.get(k, 0) + v
        self.terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def gen(cls, vars, name, power=1):
        vars = tuple(vars)
        k = [0] * len(vars)
        k[vars.index(name)] = power
        return cls(vars, {tuple(k): 1})

    # --- predicates -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_laurent(self):
        """True if some exponent is negative."""
        return any(e < 0 for k in self.terms for e in k)

    def is_integral(self):
        return all(isinstance(v, int) or v.denominator == 1 for v in self.terms.values())

    # --- structure --------------------------------------------------------
    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(k) for k in self.terms)
        i = self.vars.index(var)
        return max(k[i] for k in self.terms)

    def min_degree(self, var):
        i = self.vars.index(var)
        return min(k[i] for k in self.terms)

    def leading_term(self):
        """(exponent, coefficient) maximal under graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return _leading(self.terms)

    def content(self):
        """Positive rational content: the gcd of the coefficients."""
        ints, den = _clear_denominators(self.terms)
        return Fraction(_int_content(ints), den)

    def primitive(self):
        """Integer-coefficient primitive part with positive grlex leading coefficient."""
        if not self.terms:
            return self
        ints, _ = _clear_denominators(self.terms)
        c = _int_content(ints)
        if _leading(ints)[1] < 0:
            c = -c
        return ParamPolynomial._raw(self.vars, {k: v // c for k, v in ints.items()})

    # --- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, ParamPolynomial):
            if isinstance(other, (int, Fraction)):
                return ParamPolynomial.constant(self.vars, other)
            return NotImplemented
        if other.vars != self.vars:
            raise ValueError(f"parameter mismatch: {self.vars} vs {other.vars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ParamPolynomial._raw(self.vars, _add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return ParamPolynomial._raw(self.vars, _neg(self.terms))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ParamPolynomial._raw(self.vars, _sub(self.terms, other.terms))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ParamPolynomial._raw(self.vars, _mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            ((k, v),) = self.terms.items()
            return ParamPolynomial(self.vars, {tuple(-e * x for x in k): Fraction(1, v) ** (-e)})
        r = ParamPolynomial.constant(self.vars, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def exact_div(self, other):
        """Quotient ``self / other``; raises DivisibilityError on a remainder."""
        other = self._check(other)
        a, da = _clear_denominators(self.terms)
        b, db = _clear_denominators(other.terms)
        cb = _int_content(b)
        b = {k: v // cb for k, v in b.items()}
        q = _exquo_dict(a, b)
        if q is None:
            raise DivisibilityError(f"{other} does not divide {self}")
        scale = Fraction(db, da * cb)
        return ParamPolynomial(self.vars, {k: v * scale for k, v in q.items()})

    def divides(self, other):
        try:
            other.exact_div(self)
        except DivisibilityError:
            return False
        return True

    # --- evaluation -------------------------------------------------------
    def evaluate(self, assignment):
        """Exact value at ``{name: rational}``; every variable must be assigned."""
        vals = [Fraction(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for k, c in self.terms.items():
            term = Fraction(c)
            for x, e in zip(vals, k):
                if e:
                    term *= x ** e
            total += term
        return total

    # --- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPolynomial.constant(self.vars, other)
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __str__(self):
        return format_param_poly(self.terms, self.vars)

    def __repr__(self):
        return f"ParamPolynomial({self.vars!r}, {str(self)!r})"


def _monomial_str(k, vars, sep="*"):
    parts = []
    for name, e in zip(vars, k):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}" if e > 0 else f"{name}^({e})")
    return sep.join(parts)


def format_param_poly(terms, vars):
    if not terms:
        return "0"
    out = []
    for k, c in sorted(terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True):
        mono = _monomial_str(k, vars)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def param_gcd(a: ParamPolynomial, b: ParamPolynomial) -> ParamPolynomial:
    """Greatest common divisor, primitive over the integers, positive leading
    coefficient under graded-lex order.  ``gcd(a, 0)`` is ``a`` normalized.

    Monomial factors are handled as polynomial factors, so Laurent inputs
    give the monomial of the smallest shared exponents.
    """
    if a.vars != b.vars:
        raise ValueError("parameter mismatch")
    if not a.terms and not b.terms:
        return a
    ia, _ = _clear_denominators(a.terms)
    ib, _ = _clear_denominators(b.terms)
    if not ia:
        return ParamPolynomial._raw(a.vars, ib).primitive()
    if not ib:
        return ParamPolynomial._raw(a.vars, ia).primitive()
    h = gcd_dicts(ia, ib, len(a.vars))
    return ParamPolynomial._raw(a.vars, h).primitive()

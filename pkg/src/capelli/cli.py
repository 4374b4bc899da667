"""Command-line front end, JSON/LaTeX serialization and the on-disk cache.

    capelli compute --family E --n 2 --lambda 1,0 --format latex
    capelli verify --suite eigen --n-max 2 --degree-max 3
    capelli expand --n 2 --lambda 1,0 --lambda 0,1
    capelli cache stat --cache-dir /tmp/capelli

Exit codes: 0 ok, 2 usage error, 3 internal assertion (including a failed suite).
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import construct as C
from . import weights as W
from .coeff_field import QT, R, FieldElement, ParamField
from .suite import SUITES, SuiteConfig, run_suite
from .zpoly import ZPolynomial, monomial_symmetric_expand

__all__ = [
    "SCHEMA",
    "CacheKey",
    "Cache",
    "UsageError",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "to_latex",
    "parse_polynomial",
    "compute_family",
    "main",
]

SCHEMA = "capelli/1"
CLI_FAMILIES = ("E", "P", "EE", "Ptilde", "Etilde", "Ebar", "Pbar")
SYMMETRIC = {"P", "Ptilde", "Pbar"}
DEFAULT_ROUTE = {
    "E": "recursion", "EE": "recursion", "Ebar": "recursion",
    "P": "interpolation", "Pbar": "interpolation",
    "Etilde": "interpolation", "Ptilde": "interpolation",
}
ALLOWED_ROUTES = {
    "E": ("recursion", "interpolation"),
    "Ebar": ("recursion", "interpolation"),
    "EE": ("recursion",),
    "P": ("interpolation", "symmetrization"),
    "Pbar": ("interpolation", "symmetrization"),
    "Etilde": ("interpolation",),
    "Ptilde": ("interpolation",),
}
_FIELDS = {QT.vars: QT, R.vars: R}

# number of polynomials actually constructed (cache hits leave it alone)
COMPUTE_COUNT = 0


class UsageError(ValueError):
    pass


# --- cache keys ----------------------------------------------------------------------

@dataclass(frozen=True)
class CacheKey:
    family: str
    n: int
    lam: tuple
    field: str
    route: str
    schema: str = SCHEMA

    def slug(self):
        """Filesystem-safe name, unique per key."""
        parts = "-".join(str(p) for p in self.lam) or "empty"
        return f"{self.schema.replace('/', '_')}__{self.family}__n{self.n}__{parts}__{self.field}__{self.route}"

    @classmethod
    def for_family(cls, family, lam, route=None):
        route = route or DEFAULT_ROUTE[family]
        tag = "r" if family in ("Etilde", "Ptilde") else "q,t"
        return cls(family, len(lam), tuple(lam), tag.replace(",", ""), route)


# --- documents ------------------------------------------------------------------------

def _param_terms(d):
    return [{"exponents": list(k), "value": str(v)} for k, v in sorted(d.items())]


def _coeff_doc(c):
    if isinstance(c, FieldElement):
        return {"num": _param_terms(c._n), "den": _param_terms(c._d)}
    c = Fraction(c)
    return {"num": [{"exponents": [], "value": str(c.numerator)}] if c else [],
            "den": [{"exponents": [], "value": str(c.denominator)}]}


def _coeff_from_doc(doc, field):
    num = {tuple(t["exponents"]): Fraction(t["value"]) for t in doc["num"]}
    den = {tuple(t["exponents"]): Fraction(t["value"]) for t in doc["den"]}
    if field is None:
        return Fraction(num.get((), 0)) / den[()]
    return FieldElement(field, num, den)


def to_document(f: ZPolynomial, meta=None) -> dict:
    """Canonical JSON-ready document for a polynomial."""
    return {
        "schema": SCHEMA,
        "meta": dict(meta or {}, n=f.n, parameters=list(f.field.vars) if f.field else [],
                     library=f"capelli {__version__}"),
        "terms": [{"exponents": list(k), "coefficient": _coeff_doc(c)} for k, c in f.sorted_terms()],
    }


def from_document(doc) -> ZPolynomial:
    if doc.get("schema") != SCHEMA:
        raise UsageError(f"unsupported schema {doc.get('schema')!r}")
    meta = doc["meta"]
    params = tuple(meta["parameters"])
    field = _FIELDS.get(params) if params else None
    if params and field is None:
        field = ParamField(params)
    n = meta["n"]
    terms = {tuple(t["exponents"]): _coeff_from_doc(t["coefficient"], field) for t in doc["terms"]}
    return ZPolynomial(n, terms, field)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text):
    return json.loads(text)


# --- LaTeX ------------------------------------------------------------------------------

def _monomial_tex(names, k):
    out = []
    for name, e in zip(names, k):
        if e == 1:
            out.append(name)
        elif e:
            out.append(f"{name}^{{{e}}}")
    return " ".join(out)


def _int_poly_tex(d, names):
    """Sum of integer-coefficient terms; returns (text, leading sign, number of terms)."""
    parts = []
    for k, v in sorted(d.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
        v = Fraction(v)
        mono = _monomial_tex(names, k)
        mag = abs(v)
        mag_s = (f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}" if mag.denominator != 1 else str(mag))
        if mono:
            body = mono if mag == 1 else f"{mag_s} {mono}"
        else:
            body = mag_s
        parts.append(("-" if v < 0 else "+", body))
    text = ""
    for idx, (sgn, body) in enumerate(parts):
        if idx == 0:
            text = body if sgn == "+" else f"-{body}"
        else:
            text += f" {sgn} {body}"
    return text, parts[0][0] if parts else "+", len(parts)


def _coeff_tex(c, names):
    """(sign, magnitude text, needs parentheses before a monomial)."""
    if not isinstance(c, FieldElement):
        c = Fraction(c)
        d = {(): c}
        names = ()
    elif c.is_laurent_polynomial():
        d = c.laurent_terms()
    else:
        d = None
    if d is not None:
        lead_negative = sorted(d.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)[0][1] < 0
        if lead_negative:
            d = {k: -v for k, v in d.items()}
        text, _, count = _int_poly_tex(d, names)
        return ("-" if lead_negative else "+"), text, count > 1
    num, den = dict(c._n), dict(c._d)
    sign = "+"
    if sorted(num.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)[0][1] < 0:
        num = {k: -v for k, v in num.items()}
        sign = "-"
    return sign, f"\\frac{{{_int_poly_tex(num, names)[0]}}}{{{_int_poly_tex(den, names)[0]}}}", False


def to_latex(f: ZPolynomial) -> str:
    names = tuple(f.field.vars) if f.field else ()
    znames = [f"z_{i}" if i < 10 else f"z_{{{i}}}" for i in range(1, f.n + 1)]
    if not f.terms:
        return "0"
    out = ""
    for idx, (k, c) in enumerate(f.sorted_terms()):
        sign, mag, paren = _coeff_tex(c, names)
        mono = _monomial_tex(znames, k)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        elif paren:
            body = f"\\left({mag}\\right) {mono}"
        else:
            body = f"{mag} {mono}"
        if idx == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out


# --- inline polynomial grammar (plain text and the LaTeX we emit) -----------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+|\\,|\\;|\\!|\\left|\\right)
  | (?P<frac>\\frac)
  | (?P<cdot>\\cdot|\\times)
  | (?P<z>z(?:_\{(?P<zb>\d+)\}|_(?P<zs>\d)|(?P<zp>\d+)))
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<param>[a-y])
  | (?P<op>[-+*/^(){}\[\]])
""", re.VERBOSE)


def _tokenize(text):
    text = text.replace("−", "-").replace("**", "^")
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse at {text[pos:pos + 12]!r}")
        pos = m.end()
        kind = m.lastgroup
        if kind in ("zb", "zs", "zp"):
            kind = "z"
        if kind == "ws":
            continue
        if kind == "z":
            out.append(("z", int(m.group("zb") or m.group("zs") or m.group("zp"))))
        elif kind == "num":
            out.append(("num", Fraction(m.group())))
        elif kind == "cdot":
            out.append(("op", "*"))
        else:
            out.append((kind, m.group()))
    return out


class _Parser:
    def __init__(self, tokens, n, field):
        self.toks, self.i, self.n, self.field = tokens, 0, n, field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise UsageError(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok

    def const(self, c):
        return ZPolynomial.constant(self.n, c, self.field)

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term().scale(sign)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_factor(self):
        kind, v = self.peek()
        return kind in ("num", "param", "z", "frac") or v in ("(", "{", "[")

    def term(self):
        val = self.factor()
        while True:
            v = self.peek()[1]
            if v == "*":
                self.take()
                val = val * self.factor()
            elif v == "/":
                self.take()
                val = self._divide(val, self.factor())
            elif self._starts_factor():
                val = val * self.factor()
            else:
                return val

    def _divide(self, a, b):
        zero = (0,) * self.n
        if set(b.terms) != {zero}:
            raise UsageError("division is only allowed by a coefficient")
        return a.scale(1 / b.terms[zero])

    def _exponent(self):
        if self.peek()[1] in ("{", "("):
            close = "}" if self.take()[1] == "{" else ")"
            e = self._signed_int()
            self.take(value=close)
            return e
        return self._signed_int()

    def _signed_int(self):
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        v = self.take("num")[1]
        if v.denominator != 1:
            raise UsageError("exponents must be integers")
        return sign * int(v)

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            e = self._exponent()
            if e >= 0:
                return base ** e
            if len(base.terms) != 1:
                raise UsageError("negative powers need a single term")
            ((k, c),) = base.terms.items()
            return ZPolynomial(self.n, {tuple(x * e for x in k): c ** e}, self.field)
        return base

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return self.const(v)
        if kind == "param":
            if self.field is None or v not in self.field.vars:
                raise UsageError(f"unknown parameter {v!r}")
            return self.const(self.field.gen(v))
        if kind == "z":
            if not 1 <= v <= self.n:
                raise UsageError(f"z_{v} out of range for n={self.n}")
            return ZPolynomial.var(self.n, v, self.field)
        if kind == "frac":
            self.take(value="{")
            a = self.expr()
            self.take(value="}")
            self.take(value="{")
            b = self.expr()
            self.take(value="}")
            return self._divide(a, b)
        if v in ("(", "{", "["):
            val = self.expr()
            self.take(value={"(": ")", "{": "}", "[": "]"}[v])
            return val
        raise UsageError(f"unexpected {v!r}")


def parse_polynomial(text, n, field=QT) -> ZPolynomial:
    """Parse plain (``(t-1)/(q*t-1)*z2``) or LaTeX (``\\frac{t-1}{qt-1} z_2``) input."""
    p = _Parser(_tokenize(text), n, field)
    if p.peek()[0] is None:
        raise UsageError("empty polynomial")
    val = p.expr()
    if p.peek()[0] is not None:
        raise UsageError(f"trailing input at {p.peek()[1]!r}")
    return val


# --- cache ------------------------------------------------------------------------------

class Cache:
    """One JSON document per key; writes go through a temporary file and an
    atomic rename, so concurrent readers see either the old or new state."""

    def __init__(self, directory):
        self.dir = Path(directory) if directory else None
        self.enabled = self.dir is not None
        if self.enabled:
            try:
                self.dir.mkdir(parents=True, exist_ok=True)
            except OSError as exc:
                self._disable(exc)

    @classmethod
    def from_args(cls, flag):
        return cls(flag if flag else os.environ.get("CAPELLI_CACHE_DIR"))

    def _disable(self, exc):
        warnings.warn(f"cache directory {self.dir} unusable ({exc}); continuing without cache", RuntimeWarning)
        self.enabled = False

    def path(self, key: CacheKey):
        return self.dir / f"{key.slug()}.json"

    def get(self, key: CacheKey):
        if not self.enabled:
            return None
        try:
            return self.path(key).read_text()
        except FileNotFoundError:
            return None
        except OSError as exc:
            self._disable(exc)
            return None

    def put(self, key: CacheKey, text: str):
        if not self.enabled:
            return False
        tmp = None
        try:
            fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, self.path(key))
            return True
        except OSError as exc:
            if tmp and os.path.exists(tmp):
                os.unlink(tmp)
            self._disable(exc)
            return False

    def purge(self):
        if not self.enabled:
            return 0
        count = 0
        for p in self.dir.glob("*.json"):
            if not p.name.startswith(".tmp-"):
                p.unlink()
                count += 1
        return count

    def stat(self):
        if not self.enabled:
            return []
        return [{"key": p.stem, "bytes": p.stat().st_size}
                for p in sorted(self.dir.glob("*.json")) if not p.name.startswith(".tmp-")]


# --- compute ------------------------------------------------------------------------------

def parse_lambda(text, n):
    try:
        parts = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"lambda must be comma-separated integers, got {text!r}") from None
    if len(parts) != n:
        raise UsageError(f"lambda {parts} does not have n={n} parts")
    if any(p < 0 for p in parts):
        raise UsageError(f"lambda {parts} has a negative part")
    return parts


def _construct(family, lam, route):
    global COMPUTE_COUNT
    COMPUTE_COUNT += 1
    if family in ("E", "Ebar"):
        p = C.recurse_nonsym(lam) if route == "recursion" else C.interpolate_nonsym(lam)
        return C.top_macdonald(p) if family == "Ebar" else p
    if family == "EE":
        return C.normalized_nonsym(lam)
    if family in ("P", "Pbar"):
        p = C.interpolate_sym(lam) if route == "interpolation" else C.symmetrize_hecke(lam)
        return C.top_macdonald(p) if family == "Pbar" else p
    return C.interpolate_classical(lam, sym=(family == "Ptilde"))


def compute_family(family, lam, route=None, cache=None):
    """Canonical JSON text for the requested family member, through the cache."""
    if family not in CLI_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(CLI_FAMILIES)}")
    route = route or DEFAULT_ROUTE[family]
    if route not in ALLOWED_ROUTES[family]:
        raise UsageError(f"route {route!r} not available for {family}")
    if family in SYMMETRIC and not W.is_partition(lam):
        raise UsageError(f"{lam} is not a partition")
    key = CacheKey.for_family(family, lam, route)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    p = _construct(family, lam, route)
    text = dumps(to_document(p.body, {"family": family, "lambda": list(lam), "route": route,
                                      "field": key.field}))
    if cache is not None:
        cache.put(key, text)
    return text


# --- subcommands ------------------------------------------------------------------------------

def _emit(obj):
    sys.stdout.write(obj if isinstance(obj, str) else dumps(obj))
    if isinstance(obj, str) and not obj.endswith("\n"):
        sys.stdout.write("\n")


def cmd_compute(args):
    lam = parse_lambda(args.lam, args.n)
    text = compute_family(args.family, lam, args.route, Cache.from_args(args.cache_dir))
    if args.format == "json":
        _emit(text)
    else:
        _emit(to_latex(from_document(loads(text))))
    return 0


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        rs = tuple(int(x) for x in args.r.split(",")) if args.r else (1, 2, 3)
        cfg = SuiteConfig(n_max=args.n_max, degree_max=args.degree_max, extra_degree=args.extra_degree,
                          classical_r_values=rs, random_seed=args.seed,
                          specialization_samples=args.samples)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = run_suite(args.suite, cfg)
    _emit(dict(rep.to_dict(), schema=SCHEMA, config=asdict(cfg)))
    return 0 if rep.passed else 3


def _label_doc(coeffs):
    return [{"label": list(k), "coefficient": _coeff_doc(v)} for k, v in sorted(coeffs.items())]


def cmd_expand(args):
    n = args.n
    if args.poly is not None:
        text = args.poly
        if text.lstrip().startswith("{"):
            f = from_document(loads(text))
        else:
            if n is None:
                raise UsageError("--n is required for inline polynomials")
            f = parse_polynomial(text, n, QT)
        source = {"poly": text}
    elif args.lam:
        if n is None:
            raise UsageError("--n is required")
        lams = [parse_lambda(x, n) for x in args.lam]
        if args.family:
            if len(lams) != 1:
                raise UsageError("--family takes a single --lambda")
            f = from_document(loads(compute_family(args.family, lams[0], None, Cache.from_args(args.cache_dir))))
        else:
            f = ZPolynomial.one(n, QT)
            for lam in lams:
                f = f * from_document(loads(compute_family("E", lam, None, Cache.from_args(args.cache_dir))))
        source = {"lambdas": [list(x) for x in lams], "family": args.family or "E"}
    else:
        raise UsageError("give --lambda (one or more) or --poly")
    if args.basis == "m":
        if not f.is_symmetric():
            raise UsageError("the m-basis expansion needs a symmetric polynomial")
        coeffs = monomial_symmetric_expand(f)
    else:
        if f.field is not QT and f.field != QT:
            raise UsageError("the E-basis expansion needs coefficients in Q(q,t)")
        coeffs = C.expand_in_E_basis(f)
    _emit({"schema": SCHEMA, "basis": args.basis, "source": source, "coefficients": _label_doc(coeffs)})
    return 0


def cmd_cache(args):
    cache = Cache.from_args(args.cache_dir)
    if args.action == "stat":
        _emit({"schema": SCHEMA, "enabled": cache.enabled, "entries": cache.stat()})
    elif args.action == "purge":
        _emit({"schema": SCHEMA, "purged": cache.purge()})
    elif args.action == "get":
        if not (args.family and args.lam is not None and args.n is not None):
            raise UsageError("cache get needs --family, --n and --lambda")
        key = CacheKey.for_family(args.family, parse_lambda(args.lam, args.n), args.route)
        text = cache.get(key)
        _emit(text if text is not None else {"schema": SCHEMA, "status": "miss", "key": key.slug()})
    elif args.action == "put":
        text = sys.stdin.read() if args.file in (None, "-") else Path(args.file).read_text()
        doc = loads(text)
        meta = doc.get("meta", {})
        try:
            key = CacheKey.for_family(meta["family"], tuple(meta["lambda"]), meta.get("route"))
        except KeyError:
            raise UsageError("document lacks family/lambda metadata") from None
        from_document(doc)
        ok = cache.put(key, dumps(doc))
        _emit({"schema": SCHEMA, "status": "stored" if ok else "bypassed", "key": key.slug()})
    return 0


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _ArgumentParser(prog="capelli", description="Quantum Capelli polynomials: compute, verify, expand.")
    p.add_argument("--version", action="version", version=f"capelli {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    c = sub.add_parser("compute", help="construct one polynomial")
    c.add_argument("--family", required=True, choices=CLI_FAMILIES)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts, e.g. 1,0")
    c.add_argument("--format", choices=("json", "latex"), default="latex")
    c.add_argument("--route", choices=C.ROUTES)
    c.add_argument("--cache-dir")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--n-max", type=int, default=2)
    v.add_argument("--degree-max", type=int, default=2)
    v.add_argument("--extra-degree", type=int, default=2)
    v.add_argument("--r", help="comma-separated classical r values (default 1,2,3)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=3)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="expand in the E basis or the m basis")
    e.add_argument("--n", type=int)
    e.add_argument("--lambda", dest="lam", action="append", help="repeat to multiply several E's")
    e.add_argument("--family", choices=CLI_FAMILIES)
    e.add_argument("--poly", help="inline polynomial or a JSON document")
    e.add_argument("--basis", choices=("E", "m"), default="E")
    e.add_argument("--cache-dir")
    e.set_defaults(func=cmd_expand)

    k = sub.add_parser("cache", help="inspect or manage the cache")
    k.add_argument("action", choices=("get", "put", "purge", "stat"))
    k.add_argument("--cache-dir")
    k.add_argument("--family", choices=CLI_FAMILIES)
    k.add_argument("--n", type=int)
    k.add_argument("--lambda", dest="lam")
    k.add_argument("--route", choices=C.ROUTES)
    k.add_argument("--file", help="document to store (default: standard input)")
    k.set_defaults(func=cmd_cache)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"capelli: error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError) as exc:
        print(f"capelli: error: malformed input: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # assertion-type failures surface as exit 3
        print(f"capelli: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Exact rational arithmetic: multivariate polynomials, rational functions and
fraction-free determinants.

Polynomials live in one shared :mod:`flint` context whose symbols are, in
order,

    z (zeta), m (mu), n (nu), x, y, u, v, w1..w16, t1..t32

with graded lexicographic monomial order.  The ``t`` symbols are scratch
indeterminates for internal expansions.

Text format
-----------
A polynomial is written as a sum of terms in ascending graded-lex order::

    7/2 + 1/2*z^2
    1 - 3*z*w1 + w1^2

Each term is ``[coeff*]x1^e1*x2^e2...`` with a reduced rational coefficient;
a unit coefficient is omitted and exponent 1 is not written.  The first term
carries its sign directly (``-z``), later terms are joined with `` + `` or
`` - ``.  A rational function with non-trivial denominator is written
``(num)/(den)``.  :func:`parse` accepts this format and, more generally, any
expression built from integers, symbols, ``+ - * / ^`` and parentheses.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations

import flint
import numpy as np

from .errors import CapacityError, DomainError, InternalConsistencyError

__all__ = [
    "SYMBOLS",
    "CTX",
    "MultiPoly",
    "RatFunc",
    "var",
    "const",
    "det_fraction_free",
    "det_cofactor",
    "serialize",
    "parse",
    "poly_ops",
    "DET_MAX_SIZE",
]

SYMBOLS = ("z", "m", "n", "x", "y", "u", "v") + tuple(f"w{i}" for i in range(1, 17)) + tuple(
    f"t{i}" for i in range(1, 33)
)
CTX = flint.fmpq_mpoly_ctx.get(SYMBOLS, "deglex")
MultiPoly = flint.fmpq_mpoly
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_GENS = CTX.gens()
_NVARS = len(SYMBOLS)

DET_MAX_SIZE = 10

_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0,) * _NVARS: 1})


def _poly_const(c) -> MultiPoly:
    c = Fraction(c)
    if c == 0:
        return _ZERO
    return CTX.from_dict({(0,) * _NVARS: flint.fmpq(c.numerator, c.denominator)})


def _to_fraction(q) -> Fraction:
    q = flint.fmpq(q)
    return Fraction(int(q.p), int(q.q))


def _exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    try:
        return a / b
    except flint.DomainError as exc:
        raise InternalConsistencyError("expected exact polynomial division") from exc


class RatFunc:
    """Reduced quotient of two polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _coerce_poly(num)
        den = _ONE if den is None else _coerce_poly(den)
        if den.is_zero():
            raise DomainError("division by the zero polynomial")
        if not _reduced and not den.is_one():
            if num.is_zero():
                den = _ONE
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = _exact_div(num, g)
                    den = _exact_div(den, g)
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den

    # construction helpers
    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MultiPoly):
            return cls(value, _ONE, _reduced=True)
        if isinstance(value, (int, Fraction, flint.fmpq, flint.fmpz)):
            return cls(_poly_const(Fraction(int(value)) if isinstance(value, flint.fmpz) else value), _ONE, _reduced=True)
        if isinstance(value, str):
            return parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")

    # arithmetic
    def __add__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, _ONE, _reduced=True)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise DomainError("division by the zero polynomial")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer powers are supported")
        if e < 0:
            if self.num.is_zero():
                raise DomainError("negative power of zero")
            return RatFunc(self.den**-e, self.num**-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def __eq__(self, other):
        o = _maybe(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __repr__(self):
        return f"RatFunc({serialize(self)!r})"

    def __str__(self):
        return serialize(self)

    # queries
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def variables(self) -> set[str]:
        used = set()
        for poly in (self.num, self.den):
            for i, d in enumerate(poly.degrees()):
                if d > 0:
                    used.add(SYMBOLS[i])
        return used

    def degree(self, name: str) -> int:
        """Degree of the numerator in ``name``."""
        if self.num.is_zero():
            return -1
        return int(self.num.degrees()[_INDEX[name]])

    def coefficient(self, name: str, power: int) -> "RatFunc":
        """Coefficient of ``name**power`` in the numerator, over the denominator."""
        idx = _INDEX[name]
        picked = {}
        for mon, c in self.num.to_dict().items():
            if mon[idx] == power:
                mon = list(mon)
                mon[idx] = 0
                picked[tuple(mon)] = c
        return RatFunc(CTX.from_dict(picked), self.den)

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return _to_fraction(self.num.leading_coefficient() if not self.num.is_zero() else 0) / _to_fraction(
            self.den.leading_coefficient()
        )

    # evaluation and substitution
    def substitute(self, values: dict) -> "RatFunc":
        """Simultaneous exact substitution ``{symbol: value}``.

        Values may be numbers, strings or rational functions.  A single
        substitution may refer to its own symbol (z -> f(z)); with several,
        the values must not contain any of the substituted symbols.
        """
        vals = {k: RatFunc.coerce(v) for k, v in values.items()}
        for k in vals:
            if k not in _INDEX:
                raise DomainError(f"unknown symbol {k!r}")
        for v in vals.values():
            if len(vals) > 1 and v.variables() & set(vals):
                raise DomainError("substituted values may not contain substituted symbols")
        num = _subs_poly(self.num, vals)
        den = _subs_poly(self.den, vals)
        if den.is_zero():
            raise DomainError("substitution hits a pole")
        return num / den

    def eval_exact(self, values: dict) -> Fraction:
        """Exact value at rational points; every used symbol must be given."""
        missing = self.variables() - set(values)
        if missing:
            raise DomainError(f"missing values for {sorted(missing)}")
        res = self.substitute({k: Fraction(v) for k, v in values.items() if k in self.variables()})
        return res.to_fraction()

    def eval_complex(self, values: dict, precision: int | None = None):
        """Floating value at complex points (mpmath when precision > 53)."""
        missing = self.variables() - set(values)
        if missing:
            raise DomainError(f"missing values for {sorted(missing)}")
        d = _eval_poly(self.den, values, precision)
        if d == 0:
            raise DomainError("evaluation at a pole")
        return _eval_poly(self.num, values, precision) / d


def _coerce_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return _poly_const(value)
    if isinstance(value, flint.fmpq):
        return _poly_const(_to_fraction(value))
    raise TypeError(f"cannot convert {type(value).__name__} to a polynomial")


def _maybe(value):
    try:
        return RatFunc.coerce(value)
    except TypeError:
        return NotImplemented


def _subs_poly(poly: MultiPoly, vals: dict) -> RatFunc:
    if poly.is_zero():
        return RatFunc(_ZERO)
    degs = poly.degrees()
    vals = {k: v for k, v in vals.items() if degs[_INDEX[k]] > 0}
    if not vals:
        return RatFunc(poly)
    if all(v.is_polynomial() for v in vals.values()):
        args = list(_GENS)
        for k, v in vals.items():
            args[_INDEX[k]] = v.num
        return RatFunc(poly.compose(*args, ctx=CTX), _ONE, _reduced=True)
    # Homogenised Horner in one symbol at a time: the numerator collects
    # sum_e C_e a^e b^(d-e) and the denominator b^d.
    num = poly
    den = _ONE
    for k, v in vals.items():
        idx = _INDEX[k]
        d = int(num.degrees()[idx])
        if d == 0:
            continue
        parts = [dict() for _ in range(d + 1)]
        for mon, c in num.to_dict().items():
            e = mon[idx]
            mon = list(mon)
            mon[idx] = 0
            parts[e][tuple(mon)] = c
        coeffs = [CTX.from_dict(p) for p in parts]
        a, b = v.num, v.den
        acc = coeffs[d]
        bpow = _ONE
        for e in range(d - 1, -1, -1):
            bpow = bpow * b
            acc = acc * a + coeffs[e] * bpow
        num = acc
        den = den * b**d
    return RatFunc(num, den)


def _eval_poly(poly: MultiPoly, values: dict, precision):
    if poly.is_zero():
        return 0
    terms = poly.to_dict()
    if precision is not None and precision > 53:
        import mpmath

        with mpmath.workprec(precision):
            vals = {i: mpmath.mpc(values[name]) for name, i in _INDEX.items() if name in values}
            total = mpmath.mpc(0)
            for mon, c in terms.items():
                t = mpmath.mpf(int(c.p)) / int(c.q)
                for i, e in enumerate(mon):
                    if e:
                        t *= vals[i] ** int(e)
                total += t
            return total
    used = [i for i, d in enumerate(poly.degrees()) if d > 0]
    mons = np.array([[mon[i] for i in used] for mon in terms], dtype=float).reshape(len(terms), len(used))
    coeffs = np.array([float(Fraction(int(c.p), int(c.q))) for c in terms.values()])
    pts = np.array([complex(values[SYMBOLS[i]]) for i in used], dtype=complex)
    if used:
        return complex(np.sum(coeffs * np.prod(pts[None, :] ** mons, axis=1)))
    return complex(coeffs.sum())


def var(name: str) -> RatFunc:
    if name not in _INDEX:
        raise DomainError(f"unknown symbol {name!r}")
    return RatFunc(_GENS[_INDEX[name]], _ONE, _reduced=True)


def const(value) -> RatFunc:
    return RatFunc.coerce(Fraction(value) if isinstance(value, str) else value)


def poly_ops(op: str, a, b=None):
    """Dispatch ``add | sub | mul | eval | substitute`` on rational functions."""
    a = RatFunc.coerce(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eval":
        if all(isinstance(v, (int, Fraction)) for v in b.values()):
            return a.eval_exact(b)
        return a.eval_complex(b)
    if op == "substitute":
        return a.substitute(b)
    raise DomainError(f"unknown operation {op!r}")


# determinants

def det_fraction_free(M, max_size: int = DET_MAX_SIZE) -> RatFunc:
    """Exact determinant by Bareiss elimination.

    Row denominators are cleared first so that elimination runs over the
    polynomial ring with exact divisions only.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError("matrix must be square")
    if n > max_size:
        raise CapacityError(f"determinant size {n} exceeds bound {max_size}")
    if n == 0:
        return RatFunc(_ONE)
    rows = []
    scale = _ONE
    for row in M:
        row = [RatFunc.coerce(e) for e in row]
        lcm = _ONE
        for e in row:
            if not e.den.is_one():
                g = lcm.gcd(e.den)
                lcm = _exact_div(lcm * e.den, g)
        rows.append([e.num * _exact_div(lcm, e.den) for e in row])
        scale = scale * lcm
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if rows[k][k].is_zero():
            cands = [i for i in range(k + 1, n) if not rows[i][k].is_zero()]
            if not cands:
                return RatFunc(_ZERO)
            best = min(cands, key=lambda i: len(rows[i][k]))
            rows[k], rows[best] = rows[best], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = _exact_div(pivot * rows[i][j] - rows[i][k] * rows[k][j], prev)
            rows[i][k] = _ZERO
        prev = pivot
    det = rows[n - 1][n - 1]
    return RatFunc(det * sign, scale)


def det_cofactor(M) -> RatFunc:
    """Determinant by Laplace expansion along the first row (small sizes only)."""
    n = len(M)
    if n == 0:
        return RatFunc(_ONE)
    if n == 1:
        return RatFunc.coerce(M[0][0])
    total = RatFunc(_ZERO)
    for j in range(n):
        if RatFunc.coerce(M[0][j]).is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = RatFunc.coerce(M[0][j]) * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(M) -> RatFunc:
    """Determinant as a signed sum over permutations."""
    n = len(M)
    total = RatFunc(_ZERO)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = RatFunc(_ONE)
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total - term if inv % 2 else total + term
    return total


# text format

def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _serialize_poly(poly: MultiPoly) -> str:
    if poly.is_zero():
        return "0"
    terms = [(mon, _to_fraction(c)) for mon, c in poly.to_dict().items()]
    # Ascending graded-lex: total degree first, then lexicographic exponents.
    terms.sort(key=lambda t: (sum(t[0]), tuple(t[0])))
    out = []
    for idx, (mon, c) in enumerate(terms):
        factors = []
        for i, e in enumerate(mon):
            if e == 1:
                factors.append(SYMBOLS[i])
            elif e > 1:
                factors.append(f"{SYMBOLS[i]}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_fraction(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_fraction(mag) + "*" + "*".join(factors)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def serialize(value) -> str:
    value = RatFunc.coerce(value)
    if value.den.is_one():
        return _serialize_poly(value.num)
    return f"({_serialize_poly(value.num)})/({_serialize_poly(value.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("sym", m.group(2)))
        else:
            toks.append(("op", m.group(3)))
        pos = m.end()
    toks.append(("end", None))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise DomainError(f"parse error near token {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            val = -self.term()
        else:
            if tok == ("op", "+"):
                self.take()
            val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.power()
            val = val * rhs if op == "*" else val / rhs
        return val

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            exp = self.take("num")[1]
            base = base ** (-exp if neg else exp)
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return const(tok[1])
        if tok[0] == "sym":
            self.take()
            return var(tok[1])
        if tok == ("op", "("):
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        if tok == ("op", "-"):
            self.take()
            return -self.power()
        raise DomainError(f"parse error near token {tok[1]!r}")


def parse(text: str) -> RatFunc:
    """Parse the canonical text format (or any rational expression)."""
    p = _Parser(text)
    val = p.expr()
    if p.peek()[0] != "end":
        raise DomainError(f"trailing input near {p.peek()[1]!r}")
    return val

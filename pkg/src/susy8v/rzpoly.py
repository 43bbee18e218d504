"""The polynomials H_{2k}(w_1, ..., w_{2k}) and their special points.

H_{2k} is the Vandermonde-divided determinant

    H_{2k}(w) = prod_{i,j} h(w_i, w_{j+k}) det(1 / h(w_i, w_{j+k}))
                / (Delta(w_1..w_k) Delta(w_{k+1}..w_{2k}))

with h(w, w') = 1 - (3+z^2) w w' + (1-z^2) w w' (w + w') and z standing for
zeta.  Missing trailing arguments are zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import asm_count, enumerate_asms  # noqa: F401  (re-exported)
from .errors import CapacityError, DomainError, InternalConsistencyError
from .exactpoly import RatFunc, const, det_fraction_free, var

__all__ = [
    "HSpecPoint",
    "J2",
    "J3",
    "J4",
    "ZERO",
    "mu_bar",
    "nu_bar",
    "free",
    "h_pair",
    "H_poly",
    "H4",
    "H_two_var",
    "H_condensed",
    "eta_coeff",
    "zeta_mobius",
    "mobius_residual",
    "bilinear_residual",
    "leading_coefficient_residual",
    "asm_count",
    "H_MAX_K",
    "capacity",
]

# Largest k per number of symbolic (non-zeta) arguments, measured so that
# one polynomial stays under a minute on a desktop machine.
H_MAX_K = 8
_CAPACITY = ((2, 8), (4, 5), (6, 4))
_CAPACITY_FULL = 3


def capacity(n_symbolic: int) -> int:
    """Largest supported k when ``n_symbolic`` arguments carry free symbols."""
    for limit, kmax in _CAPACITY:
        if n_symbolic <= limit:
            return kmax
    return _CAPACITY_FULL


ZETA = var("z")


@dataclass(frozen=True)
class HSpecPoint:
    """A tagged argument of H_{2k}."""

    tag: str
    payload: RatFunc

    def __post_init__(self):
        if self.tag not in ("J2", "J3", "J4", "MuBar", "NuBar", "Zero", "Free"):
            raise DomainError(f"unknown point tag {self.tag!r}")


def _point(tag, payload):
    return HSpecPoint(tag, RatFunc.coerce(payload))


J2 = _point("J2", Fraction(-1, 2))
J3 = _point("J3", 1 / (1 + ZETA))
J4 = _point("J4", 1 / (1 - ZETA))
ZERO = _point("Zero", 0)


def mu_bar(mu=None) -> HSpecPoint:
    m = var("m") if mu is None else RatFunc.coerce(mu)
    return _point("MuBar", (m - 1) ** 2 / ((ZETA**2 - 1) * m))


def nu_bar(nu=None) -> HSpecPoint:
    n = var("n") if nu is None else RatFunc.coerce(nu)
    return _point("NuBar", (n - ZETA) * (n * ZETA - 1) / ((ZETA**2 - 1) * n))


def free(value) -> HSpecPoint:
    return _point("Free", value)


def _payload(arg) -> RatFunc:
    if isinstance(arg, HSpecPoint):
        return arg.payload
    return RatFunc.coerce(arg)


def h_pair(w, w_prime) -> RatFunc:
    w = _payload(w)
    wp = _payload(w_prime)
    return 1 - (3 + ZETA**2) * w * wp + (1 - ZETA**2) * w * wp * (w + wp)


def _h_coeffs(v: RatFunc):
    # h(w, v) = 1 + c1 w + c2 w^2 as a polynomial in w
    return [const(1), (1 - ZETA**2) * v * v - (3 + ZETA**2) * v, (1 - ZETA**2) * v]


def _poly_mul(a, b):
    out = [const(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _complete_homogeneous(points, top):
    """Lists h_m(points[:i]) for m = 0..top and i = 1..len(points)."""
    table = []
    prev = [const(1)] + [const(0)] * top
    for x in points:
        cur = [const(1)]
        for m in range(1, top + 1):
            cur.append(prev[m] + x * cur[m - 1])
        table.append(cur)
        prev = cur
    return table


def _split_halves(values, k):
    """Put one copy of as many distinct values as possible in the second half."""
    distinct = []
    for v in values:
        if not any(v == d for d in distinct):
            distinct.append(v)
    # Simplest values first so the symbolic work stays small.
    distinct.sort(key=lambda v: (len(v.variables()), len(str(v))))
    second = distinct[:k]
    rest = list(values)
    for v in second:
        for i, r in enumerate(rest):
            if r == v:
                del rest[i]
                break
    first = rest[:k]
    second = second + rest[k:]
    return first, second


def H_poly(k: int, args=(), max_k: int | None = None) -> RatFunc:
    """H_{2k} at the given arguments (padded with zeros to length 2k).

    Arguments are rational functions, numbers or :class:`HSpecPoint` values.
    The first half of the arguments may coincide freely: the Vandermonde in
    them is removed with divided differences.  Repeated values in the second
    half are replaced by scratch indeterminates, divided out exactly and
    substituted afterwards.
    """
    if not isinstance(k, int) or k < 0:
        raise DomainError("k must be a non-negative integer")
    args = [_payload(a) for a in args]
    if len(args) > 2 * k:
        raise DomainError(f"H_{2 * k} takes at most {2 * k} arguments")
    n_free = sum(1 for a in args if not a.variables() <= {"z"})
    bound = max_k if max_k is not None else capacity(n_free)
    if k > bound:
        raise CapacityError(f"k = {k} exceeds the configured bound {bound}")
    if k == 0:
        return const(1)
    values = args + [const(0)] * (2 * k - len(args))
    first, second = _split_halves(values, k)

    # Second half: duplicates become scratch symbols t1, t2, ...
    vs = []
    pending = {}
    for v in second:
        if any(v == u for u in vs):
            name = f"t{len(pending) + 1}"
            pending[name] = v
            vs.append(var(name))
        else:
            vs.append(v)

    # Row i (divided difference over w_1..w_i) of g_j(w) = prod_{l != j} h(w, v_l)
    hc = [_h_coeffs(v) for v in vs]
    gs = []
    for j in range(k):
        g = [const(1)]
        for l in range(k):
            if l != j:
                g = _poly_mul(g, hc[l])
        gs.append(g)
    top = 2 * (k - 1)
    hom = _complete_homogeneous(first, top)
    M = []
    for i in range(k):
        row = []
        for j in range(k):
            entry = const(0)
            for m in range(i, top + 1):
                c = gs[j][m] if m < len(gs[j]) else None
                if c is not None and not c.is_zero():
                    h_m = hom[i][m - i]
                    if not h_m.is_zero():
                        entry = entry + c * h_m
            row.append(entry)
        M.append(row)
    det = det_fraction_free(M, max_size=max(k, 10))
    vander = const(1)
    for a in range(k):
        for b in range(a + 1, k):
            vander = vander * (vs[b] - vs[a])
    result = det / vander
    if pending:
        if RatFunc(result.den).variables() & set(pending):
            raise InternalConsistencyError("Vandermonde division left a remainder")
        result = result.substitute(pending)
    return result


def H4(w1=0, w2=0, w3=0, w4=0) -> RatFunc:
    """Closed form of H_4."""
    w1, w2, w3, w4 = (_payload(w) for w in (w1, w2, w3, w4))
    return 3 + ZETA**2 + (ZETA**2 - 1) * (w1 + w2 + w3 + w4 + (ZETA**2 - 1) * w1 * w2 * w3 * w4)


@lru_cache(maxsize=None)
def eta_coeff(i: int, j: int) -> RatFunc:
    """Polynomial coefficient used by the two-argument determinant formula."""
    if i < 0 or j < 0:
        return const(0)
    total = const(0)
    lo = -(-(i + j) // 3)
    for n in range(lo, min(i, j) + 1):
        num = factorial(n)
        den = factorial(i - n) * factorial(j - n) * factorial(3 * n - i - j)
        total = total + Fraction(num, den) * (3 + ZETA**2) ** (3 * n - i - j) * (ZETA**2 - 1) ** (i + j - 2 * n)
    return total


def H_two_var(k: int, w=0, w_prime=0) -> RatFunc:
    """H_{2k}(w, w') from a (k-1) x (k-1) determinant with polynomial entries."""
    if k < 2:
        raise DomainError("the two-argument formula needs k >= 2")
    w = _payload(w)
    wp = _payload(w_prime)
    h4 = H4(w, wp)
    s = ZETA**2 - 1
    M = [
        [
            h4 * eta_coeff(i, j) + s * (eta_coeff(i - 1, j) + eta_coeff(i, j - 1) + s * w * wp * eta_coeff(i - 1, j - 1))
            for j in range(k - 1)
        ]
        for i in range(k - 1)
    ]
    return det_fraction_free(M, max_size=max(k, 10))


def H_condensed(k: int, args) -> RatFunc:
    """H_{2k} from the (k-1) x (k-1) determinant of H_4 blocks.

    Uses the first k-1 and the next k-1 arguments as row and column labels,
    with w_k and w_{2k} shared by every block.  Needs pairwise distinct row
    and column labels.
    """
    if k < 2:
        raise DomainError("the condensed formula needs k >= 2")
    ws = [_payload(a) for a in args] + [const(0)] * (2 * k - len(args))
    rows = ws[: k - 1]
    wk = ws[k - 1]
    cols = ws[k : 2 * k - 1]
    w2k = ws[2 * k - 1]
    pref = const(1)
    for a in rows:
        for b in cols:
            pref = pref * h_pair(a, b)
    for lst in (rows, cols):
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                pref = pref / (lst[b] - lst[a])
    M = [[H4(a, wk, b, w2k) / h_pair(a, b) for b in cols] for a in rows]
    return pref * det_fraction_free(M, max_size=max(k, 10))


def zeta_mobius(P) -> RatFunc:
    """Apply zeta -> (zeta + 3) / (zeta - 1)."""
    P = RatFunc.coerce(P)
    return P.substitute({"z": (ZETA + 3) / (ZETA - 1)})


def mobius_residual(k: int, args) -> RatFunc:
    """H|_{zeta -> zeta'} - (2/(zeta-1))^{k(k-1)} H(2w/(zeta-1)); zero when the rescaling law holds."""
    ws = [_payload(a) for a in args]
    lhs = zeta_mobius(H_poly(k, ws))
    scaled = [2 * w / (ZETA - 1) for w in ws]
    rhs = (2 / (ZETA - 1)) ** (k * (k - 1)) * H_poly(k, scaled)
    return lhs - rhs


def bilinear_residual(k: int, ws, which: int, x=None, y=None, u=None, v=None) -> RatFunc:
    """Left minus right side of the two bilinear (Pluecker type) identities.

    ``which=1`` needs 2k-1 fixed arguments ``ws``, ``which=2`` needs 2k.
    Unspecified x, y, u, v are free symbols.
    """
    x, y, u, v = (var(nm) if a is None else _payload(a) for nm, a in zip("xyuv", (x, y, u, v)))
    ws = [_payload(w) for w in ws]
    if which == 1:
        if len(ws) != 2 * k - 1:
            raise DomainError(f"need {2 * k - 1} fixed arguments")
        total = const(0)
        for a, b, c in ((x, y, u), (y, u, x), (u, x, y)):
            total = total + (a - b) * h_pair(c, v) * H_poly(k + 1, ws + [a, b, v]) * H_poly(k, ws + [c])
        return total
    if which == 2:
        if len(ws) != 2 * k:
            raise DomainError(f"need {2 * k} fixed arguments")
        lhs = (x - u) * (y - v) * H_poly(k + 2, ws + [x, y, u, v]) * H_poly(k, ws)
        rhs = h_pair(x, v) * h_pair(y, u) * H_poly(k + 1, ws + [u, v]) * H_poly(k + 1, ws + [x, y]) - h_pair(
            x, y
        ) * h_pair(u, v) * H_poly(k + 1, ws + [y, u]) * H_poly(k + 1, ws + [x, v])
        return lhs - rhs
    raise DomainError("which must be 1 or 2")


def leading_coefficient_residual(k: int, ws) -> RatFunc:
    """Top coefficient in x of H_{2k}(ws, x, 0) minus (z^2-1)^(k-1) H_{2(k-1)}(ws).

    Also checks that the degree in x is k-1.
    """
    if len(ws) != 2 * (k - 1):
        raise DomainError(f"need {2 * (k - 1)} fixed arguments")
    full = H_poly(k, list(ws) + [var("x"), 0])
    if full.degree("x") != k - 1:
        raise InternalConsistencyError(f"degree in x is {full.degree('x')}, expected {k - 1}")
    return full.coefficient("x", k - 1) - (ZETA**2 - 1) ** (k - 1) * H_poly(k - 1, list(ws))

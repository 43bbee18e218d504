"""Scalar products of the distinguished eigenvector and their closed forms.

Two families live here.  The inhomogeneous ones are overlaps of the vector
Psi_n(x_1, -x_1, ..., x_n, -x_n, 0) with products of boundary vectors; their
closed forms are products of elliptic Tsuchiya determinants.  The homogeneous
ones (S, Sbar, Sigma, components, square norm) are polynomials in zeta and a
spectral symbol, built from H_{2k} at special points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import flint
import numpy as np

from .errors import ConditioningError, DomainError, InternalConsistencyError, PoleError
from .exactpoly import RatFunc, const, var
from .lattice import config_index, xi_vector, xibar_vector
from .rzpoly import J2, J3, J4, H_poly, mu_bar, nu_bar
from .theta import ThetaParams
from .tsuchiya import beta_points, tsuchiya_H

__all__ = [
    "ScalarPrediction",
    "Partition",
    "psi_arguments",
    "Z_measure",
    "Zbar_measure",
    "Z_prefactor",
    "Zbar_prefactor",
    "XY_extract",
    "Y_predict",
    "Z1_closed",
    "X1_closed",
    "gamma_delta",
    "F_factor",
    "Fbar_factor",
    "component_predict",
    "S_predict",
    "Sbar_predict",
    "Sigma_predict",
    "norm_predict",
    "S_measure",
    "Sbar_measure",
    "Sigma_measure",
    "norm_measure",
    "mu_of_lambda",
    "nu_of_lambda",
    "double_staircase",
    "schur",
    "symplectic_char",
    "staircase_schur_residual",
    "symplectic_limit_residual",
    "w_bar",
    "PATTERNS",
    "removable_limit",
]

ZETA = var("z")
MU = var("m")
NU = var("n")
PATTERNS = ("alternating", "polarized", "almost_polarized")


@dataclass(frozen=True)
class ScalarPrediction:
    """A named predicted value with its parameters."""

    name: str
    parameters: dict
    exact_value: object
    provenance: str = ""


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts must be weakly decreasing and non-negative: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


# inhomogeneous scalar products

def psi_arguments(xs) -> tuple:
    """(x_1, -x_1, ..., x_n, -x_n, 0)."""
    out = []
    for x in xs:
        out += [x, -x]
    return tuple(out) + (0,)


def _check_args(xs, psi):
    want = psi_arguments(xs)
    if len(psi.args) != len(want) or not np.allclose(np.array(psi.args, dtype=complex), np.array(want, dtype=complex), atol=1e-12):
        raise DomainError("vector arguments do not follow the pattern (x1, -x1, ..., xn, -xn, 0)")


def _state(psi):
    return psi.state if hasattr(psi, "state") else np.asarray(psi)


def Z_measure(n: int, xs, params: ThetaParams, psi) -> complex:
    """<xi_n(xs)|psi> (plain transpose)."""
    xs = list(xs)
    if len(xs) != n:
        raise DomainError(f"need {n} boundary arguments")
    if hasattr(psi, "args"):
        _check_args(xs, psi)
    return complex(xi_vector(xs, params) @ _state(psi))


def Zbar_measure(n: int, xs, sign: int, params: ThetaParams, psi) -> complex:
    xs = list(xs)
    if len(xs) != n:
        raise DomainError(f"need {n} boundary arguments")
    if hasattr(psi, "args"):
        _check_args(xs, psi)
    return complex(xibar_vector(xs, sign, params) @ _state(psi))


def Z_prefactor(xs, params: ThetaParams) -> complex:
    eta = params.eta
    out = 1
    for x in xs:
        out *= params.thq(4, 2 * (eta + x)) * params.th(1, eta + x) * params.th(1, eta - x)
    return out


def Zbar_prefactor(xs, params: ThetaParams) -> complex:
    out = 1
    for x in xs:
        out *= params.thq(1, 2 * (params.eta + x))
    return out


def XY_extract(n: int, xs, params: ThetaParams, value, kind: str = "Z", floor: float = 1e-12) -> complex:
    """Divide the trivial theta factors out of Z (kind 'Z') or Zbar (kind 'Zbar')."""
    if kind == "Z":
        pref = Z_prefactor(xs, params)
    elif kind == "Zbar":
        pref = Zbar_prefactor(xs, params)
    else:
        raise DomainError(f"unknown kind {kind!r}")
    if abs(pref) < floor:
        raise PoleError("trivial prefactor vanishes at these arguments")
    return value / pref


def gamma_delta(n: int, sign: int, params: ThetaParams):
    """The coefficients (gamma_n^sign, delta_n^sign) of the barred determinant formula."""
    th, thq = params.th, params.thq
    eta = params.eta
    el = eta + params.lam
    base = 2 / (th(2, 0) ** 2 * th(1, el) ** 2)
    if sign == 1:
        g0 = base * (th(3, 0) * th(4, el)) ** 2
        d0 = -base * (th(4, 0) * th(3, el)) ** 2
    elif sign == -1:
        g0 = -base * th(3, 0) * th(4, 0) * th(3, el) * th(4, el)
        d0 = -g0
    else:
        raise DomainError("sign must be +1 or -1")
    step = params.p * np.exp(-2j * eta) / thq(4, 0) ** 2
    k, odd = divmod(n, 2)
    if odd:
        pe = params.p * np.exp(-2j * eta)
        g0 = -pe * th(4, 0) / (thq(4, 0) * th(4, el) * th(2, eta)) * g0
        d0 = -pe * th(4, el) / (thq(4, 0) * th(4, 0) * th(2, eta)) * d0
    return step**k * g0, step**k * d0


def Y_predict(n: int, xs, params: ThetaParams, kind: str = "Y") -> complex:
    """Determinant formula for X_n (kind 'Y') or Xbar_n^+- (kinds 'Ybar+', 'Ybar-')."""
    xs = list(xs)
    if len(xs) != n:
        raise DomainError(f"need {n} arguments")
    b = beta_points(params)
    el = params.eta + params.lam
    k, odd = divmod(n, 2)
    H = lambda m, args: tsuchiya_H(m, args, params)  # noqa: E731
    q4 = params.thq(4, 0)
    if kind == "Y":
        if odd:
            return (-1) ** k * params.th(2, el) / q4**n * H(k + 1, xs + [b[2]]) * H(k + 1, xs + [el])
        return (-1) ** k / q4**n * H(k, xs) * H(k + 1, xs + [b[2], el])
    if kind not in ("Ybar+", "Ybar-"):
        raise DomainError(f"unknown kind {kind!r}")
    g, d = gamma_delta(n, 1 if kind == "Ybar+" else -1, params)
    if odd:
        return g * H(k + 1, xs + [0]) * H(k + 2, xs + [el, b[3], b[4]]) + d * H(k + 1, xs + [el]) * H(k + 2, xs + [0, b[3], b[4]])
    return g * H(k + 1, xs + [0, b[4]]) * H(k + 1, xs + [el, b[3]]) + d * H(k + 1, xs + [0, b[3]]) * H(k + 1, xs + [el, b[4]])


def _rho(params):
    return 2 / (params.th(2, 0) * params.thq(4, 0))


def Z1_closed(x, params: ThetaParams) -> dict:
    """Closed forms of Z_1 and Zbar_1^+- for the explicit n = 1 vector.

    The minus entry uses theta_3(eta + lambda), the factor that agrees with
    the overlap.
    """
    th, thq, eta = params.th, params.thq, params.eta
    el = eta + params.lam
    rho = _rho(params)
    return {
        "Z": rho / 2 * th(2, 0) * th(2, el) * thq(4, 2 * (eta + x)) * th(1, eta - x) * th(1, eta + x),
        "Zbar+": rho * th(4, 0) * th(4, el) * thq(1, 2 * (eta + x)) * th(3, eta + x) * th(3, eta - x),
        "Zbar-": rho * th(3, 0) * th(3, el) * thq(1, 2 * (eta + x)) * th(4, eta + x) * th(4, eta - x),
    }


def X1_closed(x, params: ThetaParams) -> dict:
    th, eta = params.th, params.eta
    el = eta + params.lam
    rho = _rho(params)
    return {
        "X": rho / 2 * th(2, 0) * th(2, el),
        "Xbar+": rho * th(4, 0) * th(4, el) * th(3, eta + x) * th(3, eta - x),
        "Xbar-": rho * th(3, 0) * th(3, el) * th(4, eta + x) * th(4, eta - x),
    }


def F_factor(x, params: ThetaParams) -> complex:
    th, eta, lam = params.th, params.eta, params.lam
    return th(2, x) * th(2, x + eta) * th(1, x + lam) * th(1, x - lam + eta) / params.thq(4, 0) ** 2


def Fbar_factor(x, params: ThetaParams) -> complex:
    th, eta, lam = params.th, params.eta, params.lam
    return (
        th(3, x) * th(3, x + eta) * th(4, x) * th(4, x + eta) * th(1, x - eta) ** 2
        * th(1, x + lam) * th(1, x - lam + eta) / params.thq(4, 0) ** 2
    )


def mu_of_lambda(params: ThetaParams) -> complex:
    t, lam, eta = params.thq, params.lam, params.eta
    return t(4, lam) * t(1, lam - eta) / (t(1, lam) * t(4, lam - eta))


def nu_of_lambda(params: ThetaParams) -> complex:
    t, lam, eta = params.thq, params.lam, params.eta
    return t(4, lam - eta) * t(4, lam) / (t(1, lam - eta) * t(1, lam))


# homogeneous closed forms

def _H(k: int, *args) -> RatFunc:
    """H_{2k}(args), with H_0 of any argument list equal to 1."""
    if k == 0:
        return const(1)
    return H_poly(k, list(args))


def _assert_polynomial(value: RatFunc, what: str) -> RatFunc:
    if not value.is_polynomial():
        raise InternalConsistencyError(f"{what} is not a polynomial: denominator {RatFunc(value.den)}")
    return value


def _specialise(value: RatFunc, symbol: str, at):
    if at is None:
        return value
    return value.substitute({symbol: RatFunc.coerce(at)})


@lru_cache(maxsize=None)
def component_predict(n: int, pattern: str) -> RatFunc:
    """Closed form of one component of psi_n as a polynomial in zeta.

    Patterns: 'alternating' (up, down, ..., up), 'polarized' (all down) and
    'almost_polarized' (up, ..., up, down).
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    k, odd = divmod(n, 2)
    z = ZETA
    if pattern == "alternating":
        val = 2**k * _H(k) * (_H(k + 1, J2) if odd else _H(k, J2))
    elif pattern == "polarized":
        if odd:
            val = z ** (k + 1) * _H(k + 1, J3) * _H(k + 1, J4)
        else:
            val = z**k * _H(k) * _H(k + 1, J3, J4)
    elif pattern == "almost_polarized":
        if odd:
            val = z**k * ((1 - z**2) * _H(k + 1) * _H(k + 1, J3, J4) + _H(k) * _H(k + 2, J3, J4)) / 2
        else:
            val = z**k * ((1 + z) * _H(k, J3) * _H(k + 1, J4) + (1 - z) * _H(k, J4) * _H(k + 1, J3)) / 2
    else:
        raise DomainError(f"unknown pattern {pattern!r}")
    return _assert_polynomial(val, f"{pattern} component for n = {n}")


@lru_cache(maxsize=None)
def _S_symbolic(n: int) -> RatFunc:
    k, odd = divmod(n, 2)
    mb = mu_bar()
    if odd:
        val = (2 * MU) ** k * (MU + 1) * _H(k + 1, J2) * _H(k + 1, mb)
    else:
        val = (2 * MU) ** k * _H(k) * _H(k + 1, J2, mb)
    return _assert_polynomial(val, f"S_{n}")


def S_predict(n: int, mu=None, zeta=None):
    """S_n as a polynomial in mu (symbol 'm') and zeta (symbol 'z').

    Passing exact ``mu`` or ``zeta`` substitutes them; floating values give
    a complex number.
    """
    return _finish(_S_symbolic(n), {"m": mu, "z": zeta})


def _finish(value: RatFunc, values: dict):
    exact = {}
    floating = {}
    for name, v in values.items():
        if v is None:
            continue
        if isinstance(v, (int, Fraction, RatFunc)):
            exact[name] = v
        else:
            floating[name] = v
    if exact:
        value = value.substitute({k: RatFunc.coerce(v) for k, v in exact.items()})
    if floating:
        return value.eval_complex(floating)
    return value


def _sbar_constants():
    z, v = ZETA, NU
    c = {(a, b): (z + a) * (v + b) for a in (1, -1) for b in (1, -1)}
    d = {1: v * (z + 1) ** 2, -1: v * (z - 1) ** 2}
    dbar = {1: z * (v + 1) ** 2, -1: z * (v - 1) ** 2}
    return c, d, dbar


@lru_cache(maxsize=None)
def _Sbar_symbolic(n: int, sign: int, form: str) -> RatFunc:
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    k, odd = divmod(n, 2)
    z, v = ZETA, NU
    nb = nu_bar()
    c, d, dbar = _sbar_constants()
    den = 2 * (v - z) * (v * z - 1)
    if not odd:
        a = _H(k + 1, J4) * _H(k + 1, J3, nb)
        b = _H(k + 1, J3) * _H(k + 1, J4, nb)
        if sign == 1:
            val = v**k * (c[1, -1] ** 2 * a - c[-1, 1] ** 2 * b) / den
        else:
            val = c[1, -1] * c[-1, 1] * v**k * (a - b) / den
    elif form == "theorem":
        cc = c[-1, -1] if sign == 1 else c[1, 1]
        val = cc * v**k * (
            d[sign] * _H(k + 1) * _H(k + 2, J3, J4, nb) - dbar[sign] * _H(k + 1, nb) * _H(k + 2, J3, J4)
        ) / (z * den)
    elif form == "simplified":
        a = _H(k + 1, J4) * _H(k + 2, J3, nb)
        b = _H(k + 1, J3) * _H(k + 2, J4, nb)
        if sign == 1:
            val = v ** (k - 1) * (v - 1) / 2 * ((1 + v**2) * a - (1 + v) ** 2 * b)
        else:
            val = v ** (k - 1) * (v + 1) / 2 * ((1 - v) ** 2 * a - (1 + v**2) * b)
    else:
        raise DomainError(f"unknown form {form!r}")
    return _assert_polynomial(val, f"Sbar_{n}^{'+' if sign == 1 else '-'}")


def Sbar_predict(n: int, nu=None, zeta=None, sign: int = 1, form: str = "theorem"):
    """Sbar_n^+- as a polynomial in nu (symbol 'n') and zeta.

    ``form`` picks between the general two-term determinant expression
    ('theorem') and the shorter odd-n expression ('simplified').
    """
    return _finish(_Sbar_symbolic(n, sign, form), {"n": nu, "z": zeta})


@lru_cache(maxsize=None)
def _Sigma_symbolic(n: int, barred: bool) -> RatFunc:
    k, odd = divmod(n, 2)
    if barred != bool(odd):
        return const(0)
    if odd:
        val = 2 ** (k + 1) * (ZETA + 3) ** (k + 1) * _H(k + 1, J2) * _H(k + 1, J3)
    else:
        val = 2 ** (k + 1) * (ZETA + 3) ** k * _H(k) * _H(k + 1, J2, J3)
    return _assert_polynomial(val, "Sigma")


def Sigma_predict(n: int, zeta=None, barred: bool = False):
    """Component sum of psi_n (``barred=False``) or of P psi_n (``barred=True``)."""
    return _finish(_Sigma_symbolic(n, barred), {"z": zeta})


@lru_cache(maxsize=None)
def _norm_symbolic(n: int) -> RatFunc:
    if n > 6:
        from .errors import CapacityError

        raise CapacityError("square norm prediction is bounded to n <= 6")
    k, odd = divmod(n, 2)
    if odd:
        val = 2 ** (2 * (k + 1)) * _H(k + 1, J2) * _H(k + 1, J3) * _H(k + 1, J4) * _H(k + 2, J2, J3, J4)
    else:
        val = 2 ** (2 * k + 1) * _H(k) * _H(k + 1, J2, J3) * _H(k + 1, J3, J4) * _H(k + 1, J2, J4)
    return _assert_polynomial(val, f"square norm for n = {n}")


def norm_predict(n: int, zeta=None):
    return _finish(_norm_symbolic(n), {"z": zeta})


# homogeneous measurements

def _components(psi):
    if getattr(psi, "exact", None) is not None:
        return psi.exact
    return list(_state(psi))


def _contract(psi, n: int, pair: dict, last: dict):
    """Sum of components weighted by a product of two-site and one-site weights."""
    comps = _components(psi)
    if len(comps) != 2 ** (2 * n + 1):
        raise DomainError("vector length does not match n")
    total = 0
    pairs = [(p, w) for p, w in pair.items() if w != 0]
    ends = [(s, w) for s, w in last.items() if w != 0]
    for choice in product(pairs, repeat=n):
        weight = 1
        label = ""
        for p, w in choice:
            weight = weight * w
            label += p
        for s, w in ends:
            total = total + weight * w * comps[config_index(label + s)]
    return total


def S_measure(n: int, mu, psi):
    """((<ud| + mu <du|)^n (x) <u|) psi."""
    return _contract(psi, n, {"ud": 1, "du": mu}, {"u": 1})


def Sbar_measure(n: int, nu, sign: int, psi):
    """((<uu| + nu <dd|)^n (x) (<u| +- <d|)) psi."""
    return _contract(psi, n, {"uu": 1, "dd": nu}, {"u": 1, "d": sign})


def Sigma_measure(psi):
    comps = _components(psi)
    return sum(comps[1:], comps[0])


def norm_measure(psi):
    comps = _components(psi)
    return sum((c * c for c in comps[1:]), comps[0] * comps[0])


# trigonometric limit: Schur functions and symplectic characters

def double_staircase(k: int) -> Partition:
    return Partition(tuple((k - i) // 2 for i in range(1, k + 1)))


def _is_exact(zs):
    return all(isinstance(z, (int, Fraction)) for z in zs)


def _det(M, exact: bool):
    if not M:
        return 1
    if exact:
        return Fraction(str(flint.fmpq_mat([[flint.fmpq(x.numerator, x.denominator) for x in map(Fraction, row)] for row in M]).det()))
    return complex(np.linalg.det(np.array(M, dtype=complex)))


def _complete(zs, top):
    """h_m(zs) for m = 0..top."""
    h = [1] + [0] * top
    for z in zs:
        for m in range(1, top + 1):
            h[m] = h[m] + z * h[m - 1]
    return h


def schur(lam, zs):
    """s_lambda(zs) by the Jacobi-Trudi determinant det(h_{lambda_i - i + j})."""
    parts = list(Partition(tuple(lam)).parts)
    zs = list(zs)
    exact = _is_exact(zs)
    if exact:
        zs = [Fraction(z) for z in zs]
    parts = [p for p in parts if p > 0]
    if len(parts) > len(zs):
        return 0
    m = len(parts)
    if m == 0:
        return 1
    h = _complete(zs, parts[0] + m)
    M = [[h[parts[i] - i + j] if parts[i] - i + j >= 0 else 0 for j in range(m)] for i in range(m)]
    return _det(M, exact)


def symplectic_char(lam, zs, floor: float = 1e-12):
    """chi_lambda(zs) as a ratio of alternants in z^a - z^-a.

    Needs pairwise distinct z with distinct inverses and z != +-1.
    """
    parts = list(Partition(tuple(lam)).parts)
    zs = list(zs)
    k = len(zs)
    if len(parts) > k:
        raise DomainError("more parts than variables")
    parts = parts + [0] * (k - len(parts))
    exact = _is_exact(zs)
    if exact:
        zs = [Fraction(z) for z in zs]

    def alt(exps):
        return [[z**e - z ** (-e) for e in exps] for z in zs]

    den = _det(alt([k - j for j in range(k)]), exact)
    if den == 0 or (not exact and abs(den) < floor):
        raise ConditioningError("coincident arguments (or their inverses) in the symplectic character")
    return _det(alt([parts[j] + k - j for j in range(k)]), exact) / den


def w_bar(z):
    """(z - 1)^2 / (1 + z + z^2), the trigonometric image of the spectral variable."""
    return (z - 1) ** 2 / (1 + z + z * z)


def _rel(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else float(abs(a - b) / scale)


def symplectic_limit_residual(k: int, zs) -> float:
    """H_{2k}(w_bar(z))|_{zeta=0} against its symplectic-character form."""
    zs = list(zs)
    if len(zs) != 2 * k:
        raise DomainError(f"need {2 * k} points")
    exact = _is_exact(zs)
    ws = [w_bar(Fraction(z) if exact else z) for z in zs]
    if exact:
        lhs = H_poly(k, ws).eval_exact({"z": 0})
    else:
        lhs = _H_at_zero_complex(k, ws)
    rhs = 3 ** (k * (k - 1)) * symplectic_char(double_staircase(2 * k), zs)
    for z in zs:
        rhs = rhs * (1 + z + 1 / (Fraction(z) if exact else z)) ** (1 - k)
    return _rel(lhs, rhs)


def _H_at_zero_complex(k, ws):
    # complex points: evaluate the defining determinant directly

    def h(a, b):
        return 1 - 3 * a * b + a * b * (a + b)

    first, second = ws[:k], ws[k:]
    M = np.array([[1 / h(a, b) for b in second] for a in first], dtype=complex)
    pref = 1
    for a in first:
        for b in second:
            pref *= h(a, b)
    vd = 1
    for lst in (first, second):
        for i in range(k):
            for j in range(i + 1, k):
                vd *= lst[j] - lst[i]
    return pref * np.linalg.det(M) / vd


def staircase_schur_residual(k: int, zs, z, which: int = 1) -> float:
    """Residual of the factorisation of s_{Y} at an inverse-closed argument list.

    ``which=1``: zs has 2k entries and Y = Y_{4k+2}; ``which=2``: zs has
    2k+1 entries and Y = Y_{4k+4}.
    """
    zs = list(zs)
    omega = np.exp(1j * np.pi / 3)
    prod_ = 1
    for x in zs:
        prod_ *= 1 + x + 1 / x
    args = zs + [1 / x for x in zs] + [z, 1]
    if which == 1:
        if len(zs) != 2 * k:
            raise DomainError(f"need {2 * k} points")
        lhs = schur(double_staircase(4 * k + 2), args)
        rhs = z**k * prod_ * symplectic_char(double_staircase(2 * k + 2), zs + [z, omega]) * (
            symplectic_char(double_staircase(2 * k), zs) if zs else 1
        )
    elif which == 2:
        if len(zs) != 2 * k + 1:
            raise DomainError(f"need {2 * k + 1} points")
        lhs = schur(double_staircase(4 * k + 4), args)
        rhs = z**k * (1 + z) * prod_ * symplectic_char(double_staircase(2 * k + 2), zs + [z]) * symplectic_char(
            double_staircase(2 * k + 2), zs + [omega]
        )
    else:
        raise DomainError("which must be 1 or 2")
    return _rel(complex(lhs), complex(rhs))


def removable_limit(f, x0, eps: float = 1e-3):
    """f(x0) for f analytic at x0 but evaluated through a removable 0/0.

    Symmetric averages cancel odd orders and one Richardson step removes
    the eps^2 term, leaving an O(eps^4) error.
    """

    def g(e):
        return (f(x0 + e) + f(x0 - e)) / 2

    return (4 * g(eps / 2) - g(eps)) / 3

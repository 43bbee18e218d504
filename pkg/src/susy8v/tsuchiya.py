"""The elliptic Tsuchiya determinant and the map to the polynomial variables.

    hh(x, y) = th1(x-y+eta) th1(x-y-eta) th1(x+y+eta) th1(x+y-eta)

    HH_{2k}(x) = prod_{i,j} hh(x_i, x_{j+k}) det(1 / hh(x_i, x_{j+k}))
                 / (D(x_1..x_k) D(x_{k+1}..x_{2k}))

    D(x_1..x_m) = prod_{i<j} th1(x_j - x_i) th1(x_j + x_i)

All theta functions here are at nome p unless marked p^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import mpmath

from .errors import ConditioningError, DomainError, PoleError
from .theta import ThetaParams

__all__ = [
    "BetaPoints",
    "beta_points",
    "hh",
    "tsuchiya_H",
    "tsuchiya_condensed",
    "w_map",
    "zeta_of_p",
    "uniformisation_prefactor",
    "reduction_prefactor",
    "random_points",
    "CONDITION_FLOOR",
]

CONDITION_FLOOR = 1e-6


@dataclass(frozen=True)
class BetaPoints:
    b1: complex
    b2: complex
    b3: complex
    b4: complex

    def __getitem__(self, i: int) -> complex:
        return (self.b1, self.b2, self.b3, self.b4)[i - 1]


def beta_points(params: ThetaParams) -> BetaPoints:
    eta = params.eta
    half_pi = np.pi / 2
    half_pt = params.pi_tau / 2
    return BetaPoints(eta, eta + half_pi, eta + half_pi + half_pt, eta + half_pt)


def hh(x, y, params: ThetaParams):
    th1 = lambda z: params.th(1, z)  # noqa: E731
    eta = params.eta
    return th1(x - y + eta) * th1(x - y - eta) * th1(x + y + eta) * th1(x + y - eta)


def _dd(xs, params):
    out = 1
    for i, j in combinations(range(len(xs)), 2):
        out *= params.th(1, xs[j] - xs[i]) * params.th(1, xs[j] + xs[i])
    return out


def _det(M, params):
    if params.precision > 53:
        with mpmath.workprec(params.precision):
            return mpmath.det(mpmath.matrix(M))
    return complex(np.linalg.det(np.array(M, dtype=complex)))


def _worst_factor(first, second, params):
    """Smallest relative magnitude among the hh and D factors of a split."""
    worst = np.inf
    for a in first:
        for b in second:
            worst = min(worst, abs(hh(a, b, params)))
    for half in (first, second):
        for i, j in combinations(range(len(half)), 2):
            worst = min(worst, abs(params.th(1, half[j] - half[i]) * params.th(1, half[j] + half[i])))
    return worst


def _direct(first, second, params):
    k = len(first)
    H = [[hh(a, b, params) for b in second] for a in first]
    prod = 1
    for row in H:
        for e in row:
            prod *= e
    M = [[1 / e for e in row] for row in H]
    return prod * _det(M, params) / (_dd(first, params) * _dd(second, params)) if k else 1


def tsuchiya_H(k: int, xs, params: ThetaParams, regroup: bool = True):
    """HH_{2k}(x_1, ..., x_{2k}).

    The function is symmetric in all arguments, so when the given split into
    halves is ill-conditioned (a factor below :data:`CONDITION_FLOOR`) another
    split is searched for.  If none works a :class:`ConditioningError` is
    raised.
    """
    xs = list(xs)
    if len(xs) != 2 * k:
        raise DomainError(f"HH_{2 * k} needs {2 * k} arguments, got {len(xs)}")
    if k <= 1:
        # HH_2 is identically 1; skip the 0/0 form at zeros of hh
        return 1.0 + 0j
    first, second = xs[:k], xs[k:]
    if _worst_factor(first, second, params) >= CONDITION_FLOOR:
        return _direct(first, second, params)
    if regroup:
        best = None
        for idx in combinations(range(2 * k), k):
            if 0 not in idx:
                break
            f = [xs[i] for i in idx]
            s = [xs[i] for i in range(2 * k) if i not in idx]
            score = _worst_factor(f, s, params)
            if best is None or score > best[0]:
                best = (score, f, s)
        if best is not None and best[0] >= CONDITION_FLOOR:
            return _direct(best[1], best[2], params)
    raise ConditioningError(
        "arguments nearly coincide modulo the period lattice; permute them or move them apart"
    )


def tsuchiya_condensed(k: int, xs, params: ThetaParams):
    """HH_{2k} from the (k-1) x (k-1) determinant of HH_4 blocks."""
    if k < 2:
        return tsuchiya_H(k, xs, params)
    xs = list(xs)
    rows, xk = xs[: k - 1], xs[k - 1]
    cols, x2k = xs[k : 2 * k - 1], xs[2 * k - 1]
    pref = 1
    for a in rows:
        for b in cols:
            pref *= hh(a, b, params)
    pref /= _dd(rows, params) * _dd(cols, params)
    M = [[tsuchiya_H(2, [a, xk, b, x2k], params) / hh(a, b, params) for b in cols] for a in rows]
    return pref * _det(M, params)


def zeta_of_p(params: ThetaParams) -> float:
    eta = params.eta
    return float(((params.thq(1, eta) / params.thq(4, eta)) ** 2).real)


def w_map(x, params: ThetaParams):
    eta = params.eta
    den = params.th(1, x - eta) * params.th(1, x + eta)
    if abs(den) < 1e-14:
        raise PoleError("w(x) has a pole at x = +-eta modulo the lattice")
    return params.thq(4, eta) / params.thq(4, 0) * params.th(1, x) ** 2 / den


def uniformisation_prefactor(xs, params: ThetaParams):
    """The factor f(x) in HH_{2k}(x) = f(x) H_{2k}(w(x))."""
    k = len(xs) // 2
    eta = params.eta
    out = (params.thq(4, eta) / (params.th(1, eta) ** 2 * params.thq(4, 0))) ** (k * (k - 1))
    for x in xs:
        out *= (params.th(1, x + eta) * params.th(1, x - eta)) ** (k - 1)
    return out


def reduction_prefactor(xs, i: int, params: ThetaParams):
    """Product multiplying HH_{2(k-1)} when x_1 = x_i + eta (i is 0-based, i >= 1)."""
    eta = params.eta
    xi = xs[i]
    out = 1
    for j in range(1, len(xs)):
        if j != i:
            out *= params.th(1, xi - xs[j] - eta) * params.th(1, xi + xs[j] - eta)
    return out


def random_points(rng, count: int, params: ThetaParams, floor: float = CONDITION_FLOOR):
    """Sample complex points a + bi, a in (0, pi), |b| < 0.2 |Im pi tau|.

    Draws are repeated until every pairwise hh and D factor is above
    ``floor``.
    """
    scale = 0.2 * abs(params.pi_tau.imag)
    for _ in range(1000):
        xs = [complex(rng.uniform(0, np.pi), rng.uniform(-scale, scale)) for _ in range(count)]
        ok = True
        for a, b in combinations(xs, 2):
            if abs(hh(a, b, params)) < floor or abs(params.th(1, a - b) * params.th(1, a + b)) < floor:
                ok = False
                break
        if ok:
            return xs
    raise ConditioningError("could not draw well-separated points")

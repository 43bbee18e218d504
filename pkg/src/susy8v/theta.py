"""Jacobi theta functions in the Whittaker-Watson normalisation.

    theta1(z, q) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) z)
    theta2(z, q) = 2 sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1) z)
    theta3(z, q) = 1 + 2 sum_{n>=1}        q^{n^2} cos(2 n z)
    theta4(z, q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2 n z)

Double precision uses :mod:`cmath`; any precision above 53 bits switches the
same series to :mod:`mpmath` numbers.  The environment variable
``SUSY8V_PRECISION`` sets the default precision in bits.
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field, replace

import mpmath

from .errors import DomainError

__all__ = [
    "ThetaParams",
    "theta",
    "default_precision",
    "relative_residual",
    "MAX_TERMS",
    "ETA",
]

MAX_TERMS = 256
ETA = math.pi / 3


def default_precision() -> int:
    value = os.environ.get("SUSY8V_PRECISION", "53")
    try:
        prec = int(value)
    except ValueError as exc:
        raise DomainError(f"SUSY8V_PRECISION must be an integer, got {value!r}") from exc
    if prec < 53:
        raise DomainError("precision below 53 bits is not supported")
    return prec


def _series(kind, z, q, eps, sin, cos, exp, absval):
    # The stop test uses the envelope q^{e} exp(m |Im z|), which bounds the
    # term magnitude; a term can vanish by accident (sin(3 z) at z = pi/3),
    # so the actual term is not a safe signal.  Envelopes may grow before
    # they decay, so only stop once past the peak.
    y = absval(z.imag)
    log_q = math.log(float(q))
    if kind in (1, 2):
        total = 0
        scale = 0.0
        for n in range(MAX_TERMS):
            m = 2 * n + 1
            qpow = q ** ((4 * n * n + 4 * n + 1) / 4)
            if kind == 1:
                term = (-1) ** n * qpow * sin(m * z)
            else:
                term = qpow * cos(m * z)
            total += term
            bound = qpow * exp(m * y)
            scale = max(scale, absval(term), absval(total))
            past_peak = (2 * n + 2) * log_q + 2 * y < 0
            if past_peak and bound <= eps * scale:
                break
        return 2 * total
    total = 0
    scale = 1.0
    sign = -1 if kind == 4 else 1
    for n in range(1, MAX_TERMS):
        qpow = q ** (n * n)
        term = sign**n * qpow * cos(2 * n * z)
        total += term
        bound = qpow * exp(2 * n * y)
        scale = max(scale, absval(term), absval(1 + 2 * total))
        past_peak = (2 * n + 1) * log_q + 2 * y < 0
        if past_peak and bound <= eps * scale:
            break
    return 1 + 2 * total


def theta(kind: int, z, q, params: "ThetaParams | None" = None, *, eps: float | None = None, precision: int | None = None):
    """Evaluate theta_kind(z, q) for a real nome 0 < q < 1.

    Truncation and precision come from ``params`` when given; explicit
    ``eps`` or ``precision`` keywords override them.

    The series stops once the magnitude bound of the next term drops below
    ``eps`` times the partial-sum scale (the larger of the running sum and
    the largest term seen), with a hard cap of :data:`MAX_TERMS` terms.
    """
    if kind not in (1, 2, 3, 4):
        raise DomainError(f"theta kind must be 1..4, got {kind}")
    if eps is None:
        eps = params.trunc_eps if params is not None else 1e-17
    if precision is None:
        precision = params.precision if params is not None else default_precision()
    prec = precision
    if prec <= 53:
        qf = float(q)
        if not 0.0 < qf < 1.0:
            raise DomainError(f"nome must lie in (0, 1), got {q}")
        zc = complex(z)
        if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
            raise DomainError("theta argument must be finite")
        return _series(kind, zc, qf, eps, cmath.sin, cmath.cos, math.exp, abs)
    with mpmath.workprec(prec):
        qm = mpmath.mpf(q)
        if not 0 < qm < 1:
            raise DomainError(f"nome must lie in (0, 1), got {q}")
        zm = mpmath.mpc(z)
        mp_eps = mpmath.mpf(2) ** (-prec - 4)
        return _series(kind, zm, qm, mp_eps, mpmath.sin, mpmath.cos, mpmath.exp, abs)


def relative_residual(lhs, rhs) -> float:
    """``|lhs - rhs| / max(|lhs|, |rhs|, 1)`` for scalars or arrays (max norm)."""
    import numpy as np

    a = np.asarray(lhs, dtype=complex)
    b = np.asarray(rhs, dtype=complex)
    diff = float(np.max(np.abs(a - b))) if a.size else 0.0
    scale = max(float(np.max(np.abs(a))) if a.size else 0.0, float(np.max(np.abs(b))) if b.size else 0.0, 1.0)
    return diff / scale


@dataclass(frozen=True)
class ThetaParams:
    """Special-function context: nome, crossing parameter and boundary parameter.

    ``tau`` is fixed once from the principal branch ``tau = ln(p) / (i pi)``,
    so shifts by ``pi*tau`` never recompute a logarithm.  ``eta`` is always
    pi/3.
    """

    p: float
    lam: complex = 0.37 + 0.11j
    trunc_eps: float = 1e-17
    precision: int = field(default_factory=default_precision)
    tau: complex = field(init=False)

    def __post_init__(self):
        if not 0.0 < float(self.p) < 1.0:
            raise DomainError(f"elliptic nome must lie in (0, 1), got {self.p}")
        object.__setattr__(self, "tau", complex(0.0, -math.log(float(self.p)) / math.pi))

    @property
    def eta(self) -> float:
        return ETA

    @property
    def pi_tau(self) -> complex:
        """pi*tau = i ln(1/p)."""
        return math.pi * self.tau

    def with_lambda(self, lam) -> "ThetaParams":
        return replace(self, lam=lam)

    def th(self, kind: int, z):
        """theta_kind(z, p)."""
        return theta(kind, z, self.p, self)

    def thq(self, kind: int, z):
        """theta_kind(z, p^2)."""
        return theta(kind, z, self.p * self.p, self)

    def nome_check(self) -> float:
        """|exp(i pi tau) - p|, which should vanish to rounding."""
        return abs(cmath.exp(1j * self.pi_tau) - self.p)

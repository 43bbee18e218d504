"""The distinguished transfer-matrix eigenvector and its homogeneous limit.

Inhomogeneous vectors come from floating null spaces and carry an arbitrary
scale, so everything built on them is compared up to a scalar.  Homogeneous
vectors are computed exactly from the XYZ Hamiltonian at rational zeta and
scaled so the alternating component matches its closed form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import math

import flint
import numpy as np

from .errors import AnchorZeroError, CapacityError, ConvergenceError, DomainError, NullDimError
from .lattice import (
    SX,
    apply_local,
    rcheck_matrix,
    SY,
    SZ,
    config_index,
    phi_embed,
    r_func,
    symmetry_ops,
    transfer_matrix,
)
from .theta import ThetaParams

__all__ = [
    "PsiVector",
    "XYZParams",
    "theta_eigenvalue",
    "solve_psi",
    "psi1_explicit",
    "check_collinear",
    "alternating_config",
    "norm_factor",
    "xyz_hamiltonian",
    "xyz_hamiltonian_exact",
    "u_transform",
    "parity_flip",
    "homogeneous_psi",
    "homogeneous_psi_elliptic",
    "exact_ground_space",
    "transfer_multiplicity_gap",
    "wheel_scaling",
    "exchange",
    "MAX_N",
    "DEFAULT_PROBES",
]

MAX_N = 4
# Spectral parameters used to intersect eigenspaces; any generic pair works.
DEFAULT_PROBES = (0.41 + 0.23j, 1.27 - 0.19j)


@dataclass
class PsiVector:
    """A transfer-matrix eigenvector with its arguments and normalisation.

    ``normalization`` is ``"raw"`` for a unit null-space vector (phase fixed
    so the largest component is real and positive) or ``"anchored"`` when one
    component was set equal to a predicted value recorded in ``anchor``.
    """

    n: int
    args: tuple
    state: np.ndarray
    normalization: str = "raw"
    anchor: tuple | None = None
    exact: list | None = field(default=None, repr=False)
    zeta: object = None

    @property
    def L(self) -> int:
        return 2 * self.n + 1

    def component(self, spins: str):
        if self.exact is not None:
            return self.exact[config_index(spins)]
        return self.state[config_index(spins)]


def alternating_config(n: int) -> str:
    """The pattern up, down, ..., up, down, up on 2n+1 sites."""
    return "ud" * n + "u"


def theta_eigenvalue(n: int, u, inhoms, params: ThetaParams):
    if len(inhoms) != 2 * n + 1:
        raise DomainError(f"need {2 * n + 1} inhomogeneities, got {len(inhoms)}")
    out = 1
    for ui in inhoms:
        out *= r_func(ui - u, params)
    return out


def _fix_phase(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k])


def solve_psi(
    n: int,
    inhoms,
    params: ThetaParams,
    probes=DEFAULT_PROBES,
    tol_null: float = 1e-8,
    sector: int | None = None,
) -> PsiVector:
    """Unit vector spanning the F = (-1)^n solutions of T(u) Psi = Theta(u) Psi.

    The eigenspaces at the probe values of u are intersected with the
    spin-reversal sector through one SVD of the stacked (row-normalised)
    blocks.  ``sector`` overrides the spin-reversal eigenvalue.
    """
    if n > MAX_N:
        raise CapacityError(f"n = {n} exceeds the bound {MAX_N}")
    inhoms = tuple(complex(u) for u in inhoms)
    L = 2 * n + 1
    if len(inhoms) != L:
        raise DomainError(f"need {L} inhomogeneities, got {len(inhoms)}")
    s = (-1) ** n if sector is None else sector
    dim = 2**L
    blocks = []
    for u in probes:
        T = transfer_matrix(u, inhoms, params)
        A = T - theta_eigenvalue(n, u, inhoms, params) * np.eye(dim)
        blocks.append(A / np.max(np.abs(T)))
    F = symmetry_ops(L)["F"]
    blocks.append(F - s * np.eye(dim))
    M = np.vstack(blocks)
    _, sv, vh = np.linalg.svd(M)
    thresh = tol_null * np.max(np.abs(M))
    small = int(np.sum(sv < thresh))
    if small != 1:
        raise NullDimError(f"solution space has dimension {small}, expected 1", singular_values=sv[-4:])
    if sv[-2] < 1e3 * thresh:
        raise ConvergenceError("singular-value gap too small to isolate the solution")
    v = _fix_phase(vh[-1].conj())
    return PsiVector(n, inhoms, v)


def psi1_explicit(u1, u2, u3, params: ThetaParams) -> np.ndarray:
    """The n = 1 vector in closed form, with the overall factor included."""
    t = params.thq
    eta = params.eta
    rho = 2 / (params.th(2, 0) * t(4, 0))
    A, B, C = u2 - u1 + eta, u3 - u2 + eta, u1 - u3 + eta
    v = np.zeros(8, dtype=complex)
    vals = {
        "uuu": rho * t(1, A) * t(1, B) * t(1, C),
        "udd": rho * t(4, A) * t(1, B) * t(4, C),
        "dud": rho * t(4, A) * t(4, B) * t(1, C),
        "ddu": rho * t(1, A) * t(4, B) * t(4, C),
    }
    flip = {"u": "d", "d": "u"}
    for cfg, val in vals.items():
        v[config_index(cfg)] = val
        v[config_index("".join(flip[c] for c in cfg))] = -val
    return v


def check_collinear(v1, v2, tol: float = 1e-6):
    """Least-squares ratio of v1 to v2 and the relative residual.

    Returns ``(passed, ratio, residual)`` with residual
    ``|v1 - ratio v2| / |v1|``.
    """
    v1 = np.asarray(v1, dtype=complex)
    v2 = np.asarray(v2, dtype=complex)
    n1 = np.linalg.norm(v1)
    n2 = np.linalg.norm(v2)
    if n1 == 0 or n2 == 0:
        raise DomainError("collinearity is undefined for a zero vector")
    ratio = np.vdot(v2, v1) / np.vdot(v2, v2)
    residual = float(np.linalg.norm(v1 - ratio * v2) / n1)
    return residual < tol, complex(ratio), residual


def norm_factor(n: int, params: ThetaParams):
    """Scale turning Psi_n(0, ..., 0) into psi_n."""
    eta = params.eta
    sign = (-1) ** ((n + 1) // 2)
    return sign / params.th(1, eta) ** (n * n) * (params.thq(4, 0) / params.thq(4, eta)) ** (n * (n + 1) // 2)


def transfer_multiplicity_gap(n: int, u, params: ThetaParams):
    """Singular values of T(u) - (a+b)^(2n+1) for the homogeneous chain.

    Returns ``(multiplicity, gap, singular_values)`` where the multiplicity
    counts values below 1e-9 of the largest and ``gap`` is the ratio of the
    third-smallest to the second-smallest singular value.
    """
    L = 2 * n + 1
    T = transfer_matrix(u, [0.0] * L, params)
    A = T - theta_eigenvalue(n, u, [0.0] * L, params) * np.eye(2**L)
    sv = np.linalg.svd(A, compute_uv=False)
    mult = int(np.sum(sv < 1e-9 * sv[0]))
    return mult, float(sv[-3] / sv[-2]), sv


# XYZ chain

@dataclass(frozen=True)
class XYZParams:
    """Couplings of the XYZ chain on L = 2n+1 sites at anisotropy zeta."""

    n: int
    zeta: object

    def __post_init__(self):
        if self.zeta in (1, -1):
            raise DomainError("zeta = +-1 makes the couplings singular")

    @property
    def L(self) -> int:
        return 2 * self.n + 1

    def _num(self, x):
        return Fraction(x) if isinstance(self.zeta, (Fraction, int)) else x

    @property
    def J2(self):
        return self._num(-1) / 2

    @property
    def J3(self):
        return 1 / (1 + self._num(self.zeta))

    @property
    def J4(self):
        return 1 / (1 - self._num(self.zeta))

    @property
    def E0(self):
        z = self._num(self.zeta)
        return -(2 * self.n + 1) * (3 + z * z) / (4 * (1 - z * z))


def xyz_hamiltonian(xyz: XYZParams) -> np.ndarray:
    """Dense periodic XYZ Hamiltonian -1/2 sum (J4 XX + J3 YY + J2 ZZ)."""
    L = xyz.L
    if L > 9:
        raise CapacityError(f"L = {L} exceeds the bound 9")
    dim = 2**L
    H = np.zeros((dim, dim), dtype=complex)
    J = {"x": float(xyz.J4), "y": float(xyz.J3), "z": float(xyz.J2)}
    pauli = {"x": SX, "y": SY, "z": SZ}
    for i in range(L):
        j = (i + 1) % L
        for kind, coup in J.items():
            ops = [np.eye(2, dtype=complex)] * L
            ops = list(ops)
            ops[i] = pauli[kind]
            ops[j] = pauli[kind]
            H -= 0.5 * coup * reduce(np.kron, ops)
    return H


def xyz_hamiltonian_exact(xyz: XYZParams) -> dict:
    """Sparse exact Hamiltonian as {(row, col): Fraction}."""
    L = xyz.L
    J2, J3, J4 = Fraction(xyz.J2), Fraction(xyz.J3), Fraction(xyz.J4)
    H: dict = {}
    for col in range(2**L):
        for i in range(L):
            j = (i + 1) % L
            if i == j:
                # a single site: sigma^a sigma^a is the identity
                H[(col, col)] = H.get((col, col), 0) - (J2 + J3 + J4) / 2
                continue
            bi = (col >> (L - 1 - i)) & 1
            bj = (col >> (L - 1 - j)) & 1
            same = bi == bj
            H[(col, col)] = H.get((col, col), 0) - J2 / 2 * (1 if same else -1)
            row = col ^ (1 << (L - 1 - i)) ^ (1 << (L - 1 - j))
            off = -(J4 - J3) / 2 if same else -(J4 + J3) / 2
            H[(row, col)] = H.get((row, col), 0) + off
    return H


def u_transform(L: int) -> np.ndarray:
    """U = 2^(-L/2) prod_j (1 + i sigma^y_j), a real orthogonal matrix."""
    one = (np.eye(2) + 1j * SY).real / np.sqrt(2)
    return reduce(np.kron, [one] * L)


def parity_flip(vec, L: int):
    """P applied to a vector given as a list or array (works for exact entries)."""
    out = list(vec)
    for idx in range(2**L):
        downs = bin(idx).count("1")
        if (L + downs) % 2:
            out[idx] = -out[idx]
    return out if not isinstance(vec, np.ndarray) else np.array(out)


def exact_ground_space(n: int, zeta) -> list:
    """Exact basis vector of H psi = E0 psi with F psi = (-1)^n psi.

    Works in the spin-reversal sector: representatives have site 1 up and the
    partner component is fixed by the sector sign.  Returns the full vector
    as Fractions with an arbitrary scale.
    """
    if n > MAX_N:
        raise CapacityError(f"n = {n} exceeds the bound {MAX_N}")
    zeta = Fraction(zeta)
    xyz = XYZParams(n, zeta)
    L = xyz.L
    dim = 2**L
    half = dim // 2
    full = dim - 1
    s = (-1) ** n
    H = xyz_hamiltonian_exact(xyz)
    E0 = xyz.E0
    M = [[Fraction(0)] * half for _ in range(half)]
    for (row, col), val in H.items():
        if val == 0:
            continue
        # column basis vector e_col + s e_{F col}; only representative columns
        if col < half:
            c, w = col, 1
        else:
            c, w = full - col, s
        r = row if row < half else None
        if r is None:
            continue
        M[r][c] += w * val
    for i in range(half):
        M[i][i] -= E0
    den = math.lcm(*(x.denominator for row in M for x in row))
    Z = flint.fmpz_mat([[int(x * den) for x in row] for row in M])
    X, nullity = Z.nullspace()
    if nullity != 1:
        raise NullDimError(f"exact solution space has dimension {nullity}, expected 1")
    rep = [Fraction(int(X[i, 0])) for i in range(half)]
    vec = rep + [Fraction(0)] * half
    for i in range(half):
        vec[full - i] = s * rep[i]
    return vec


def homogeneous_psi(n: int, zeta, anchor_value=None) -> dict:
    """psi_n, psibar_n = P psi_n and phi_n = (psi_n + psibar_n)/2 at rational zeta.

    The free scale is fixed by setting the alternating component to
    ``anchor_value`` (by default its closed form at this zeta).
    """
    zeta = Fraction(zeta)
    vec = exact_ground_space(n, zeta)
    alt = alternating_config(n)
    if anchor_value is None:
        from .scalars import component_predict

        anchor_value = component_predict(n, "alternating").eval_exact({"z": zeta})
    anchor_value = Fraction(anchor_value)
    if anchor_value == 0:
        raise AnchorZeroError(f"alternating component prediction vanishes at zeta = {zeta}")
    raw = vec[config_index(alt)]
    if raw == 0:
        raise AnchorZeroError("computed alternating component is zero")
    scale = anchor_value / raw
    psi = [x * scale for x in vec]
    L = 2 * n + 1
    psibar = parity_flip(psi, L)
    phi = [(a + b) / 2 for a, b in zip(psi, psibar)]
    anchor = (alt, anchor_value)

    def wrap(v):
        return PsiVector(n, (0,) * L, np.array([float(x) for x in v]), "anchored", anchor, v, zeta)

    return {"psi": wrap(psi), "psibar": wrap(psibar), "phi": wrap(phi)}


def homogeneous_psi_elliptic(n: int, params: ThetaParams, probes=DEFAULT_PROBES) -> PsiVector:
    """psi_n from the homogeneous transfer matrix, anchored like the exact route."""
    from .scalars import component_predict
    from .tsuchiya import zeta_of_p

    raw = solve_psi(n, [0.0] * (2 * n + 1), params, probes)
    alt = alternating_config(n)
    target = component_predict(n, "alternating").eval_complex({"z": zeta_of_p(params)})
    state = raw.state * (target / raw.state[config_index(alt)])
    return PsiVector(n, raw.args, state, "anchored", (alt, target))


def wheel_scaling(n: int, base, params: ThetaParams, eps_values=(1e-2, 1e-3, 1e-4), extra=()):
    """Approach the wheel (x, x+2 eta, x+4 eta) and follow the vector norm.

    The absolute scale of each null-space vector is fixed by continuation
    from a closed form: the n = 1 formula directly, and for n = 2 the
    reduction relation on a spectator pair (y, y + 2 eta) placed after the
    wheel.  Returns a list of ``(eps, norm, collinearity_residual)``.
    """
    eta = params.eta
    out = []
    for eps in eps_values:
        args = [base, base + 2 * eta, base + 4 * eta + eps]
        if n == 1:
            ref = psi1_explicit(*args, params)
        elif n == 2:
            (y,) = extra
            args = args + [y, y + 2 * eta]
            pref = 1
            for uj in args[:3]:
                pref *= params.th(1, y - uj - 2 * eta)
            ref = pref * (phi_embed(4, 3) @ psi1_explicit(*args[:3], params))
        else:
            raise CapacityError("wheel continuation is implemented for n <= 2")
        v = solve_psi(n, args, params)
        _, ratio, res = check_collinear(ref, v.state)
        out.append((eps, float(np.linalg.norm(ref)), res))
    return out


def exchange(state, args, i: int, params: ThetaParams):
    """Move from Psi(.., u_i, u_{i+1}, ..) to Psi(.., u_{i+1}, u_i, ..) with the same scale.

    ``i`` is 1-based.  Returns the new state and argument tuple.
    """
    args = tuple(args)
    if not 1 <= i < len(args):
        raise DomainError(f"exchange position {i} out of range")
    d = args[i] - args[i - 1]
    new = apply_local(rcheck_matrix(d, params), [i, i + 1], np.asarray(state)) / r_func(d, params)
    swapped = args[: i - 1] + (args[i], args[i - 1]) + args[i + 1 :]
    return new, swapped

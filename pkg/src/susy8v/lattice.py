"""Spin-chain operators of the eight-vertex model.

Basis conventions: a single spin is up (index 0) or down (index 1); on L
sites the first site is the most significant bit, so ``|up, down, up>`` has
index 0b010.  Dual vectors are plain transposes, no complex conjugation.

Site indices in this module are 1-based, matching the usual physics
labelling of a chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import CapacityError, DomainError
from .theta import ThetaParams

__all__ = [
    "SX",
    "SY",
    "SZ",
    "ID2",
    "UP",
    "DOWN",
    "SINGLET",
    "SiteOperator",
    "embed",
    "apply_local",
    "basis_state",
    "config_index",
    "config_label",
    "vertex_weights",
    "r_func",
    "r_matrix",
    "rcheck_matrix",
    "PERM",
    "transfer_matrix",
    "symmetry_ops",
    "sigma",
    "phi_embed",
    "boundary_vectors",
    "xi_vector",
    "xibar_vector",
    "op_residual",
    "ybe_residual",
    "braid_ybe_residual",
    "boundary_ybe_residual",
    "fish_residual",
    "special_sp_residual",
    "MAX_SITES",
]

MAX_SITES = 9

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)
UP = np.array([1, 0], dtype=complex)
DOWN = np.array([0, 1], dtype=complex)
SINGLET = np.kron(UP, DOWN) - np.kron(DOWN, UP)
PERM = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
_PAULI = {"x": SX, "y": SY, "z": SZ}


def config_index(spins: str) -> int:
    """Index of a configuration written with 'u'/'d' (or arrows)."""
    bits = []
    for ch in spins:
        if ch in "u↑0":
            bits.append("0")
        elif ch in "d↓1":
            bits.append("1")
        else:
            raise DomainError(f"bad spin symbol {ch!r}")
    return int("".join(bits), 2) if bits else 0


def config_label(index: int, L: int) -> str:
    return "".join("u" if b == "0" else "d" for b in format(index, f"0{L}b")) if L else ""


def basis_state(spins: str) -> np.ndarray:
    v = np.zeros(2 ** len(spins), dtype=complex)
    v[config_index(spins)] = 1
    return v


def apply_local(op: np.ndarray, sites, psi: np.ndarray) -> np.ndarray:
    """Apply a 2^M x 2^M operator on the given sites to a state vector."""
    sites = [s - 1 for s in sites]
    L = int(round(np.log2(psi.size)))
    M = len(sites)
    if op.shape != (2**M, 2**M):
        raise DomainError("operator size does not match the number of sites")
    if len(set(sites)) != M or min(sites) < 0 or max(sites) >= L:
        raise DomainError("site indices out of range")
    t = psi.reshape([2] * L)
    opt = op.reshape([2] * (2 * M))
    out = np.tensordot(opt, t, axes=(list(range(M, 2 * M)), sites))
    # tensordot puts the acted-on axes first; move them back into place.
    rest = [i for i in range(L) if i not in sites]
    order = sites + rest
    inv = np.argsort(order)
    return np.transpose(out, inv).reshape(-1)


def embed(op: np.ndarray, sites, L: int) -> np.ndarray:
    """Dense matrix of an operator acting on ``sites`` of an L-site chain."""
    dim = 2**L
    cols = [apply_local(op, sites, np.eye(dim, dtype=complex)[:, j]) for j in range(dim)]
    return np.array(cols).T


@dataclass(frozen=True)
class SiteOperator:
    """A local matrix together with its target sites in an L-site chain."""

    matrix: np.ndarray
    sites: tuple
    L: int

    def dense(self) -> np.ndarray:
        return embed(self.matrix, self.sites, self.L)

    def __call__(self, psi: np.ndarray) -> np.ndarray:
        return apply_local(self.matrix, self.sites, psi)


# weights and R-matrices

def vertex_weights(u, params: ThetaParams):
    """(a, b, c, d) at spectral parameter u, theta functions at nome p^2."""
    t = params.thq
    e2 = 2 * params.eta
    a = t(4, e2) * t(1, u + e2) * t(4, u)
    b = t(4, e2) * t(4, u + e2) * t(1, u)
    c = t(1, e2) * t(4, u + e2) * t(4, u)
    d = t(1, e2) * t(1, u + e2) * t(1, u)
    return a, b, c, d


def r_func(u, params: ThetaParams):
    """r(u) = a(u) + b(u) in product form."""
    t = params.thq
    return t(4, 0) * t(1, u + params.eta) * t(4, u + params.eta)


def r_matrix(u, params: ThetaParams) -> np.ndarray:
    a, b, c, d = vertex_weights(u, params)
    return np.array([[a, 0, 0, d], [0, b, c, 0], [0, c, b, 0], [d, 0, 0, a]], dtype=complex)


def rcheck_matrix(u, params: ThetaParams) -> np.ndarray:
    return PERM @ r_matrix(u, params)


def transfer_matrix(u, inhoms, params: ThetaParams, max_sites: int = MAX_SITES) -> np.ndarray:
    """T(u | u_1..u_L) = tr_0 R_{0,L}(u_L - u) ... R_{0,1}(u_1 - u).

    Built as a product over the auxiliary space whose entries are operators
    on the chain; each step adds one site as the least significant factor.
    """
    L = len(inhoms)
    if L == 0:
        raise DomainError("need at least one site")
    if L > max_sites:
        raise CapacityError(f"L = {L} exceeds the bound {max_sites}")
    blocks = []
    for ui in inhoms:
        R = r_matrix(ui - u, params)
        # blocks[a][b] is the site operator <a| R_{0,i} |b> on the aux space
        blocks.append([[_aux_block(R, a, b) for b in range(2)] for a in range(2)])
    prod = [[blocks[0][a][b] for b in range(2)] for a in range(2)]
    for W in blocks[1:]:
        prod = [
            [sum(np.kron(prod[c][b], W[a][c]) for c in range(2)) for b in range(2)]
            for a in range(2)
        ]
    return prod[0][0] + prod[1][1]


def _aux_block(R: np.ndarray, a: int, b: int) -> np.ndarray:
    # R acts on aux (first factor) and site (second factor)
    return np.array([[R[2 * a + s, 2 * b + t] for t in range(2)] for s in range(2)], dtype=complex)


# symmetry operators

def sigma(i: int, kind: str, L: int) -> np.ndarray:
    if not 1 <= i <= L:
        raise DomainError(f"site {i} out of range 1..{L}")
    return embed(_PAULI[kind], [i], L)


def phi_embed(i: int, L: int) -> np.ndarray:
    """Matrix of the map V^L -> V^(L+2) inserting the singlet at positions i, i+1."""
    if not 1 <= i <= L + 1:
        raise DomainError(f"insertion point {i} out of range 1..{L + 1}")
    left = np.eye(2 ** (i - 1), dtype=complex)
    right = np.eye(2 ** (L - i + 1), dtype=complex)
    return np.kron(np.kron(left, SINGLET.reshape(4, 1)), right)


def symmetry_ops(L: int) -> dict:
    """Spin reversal F, spin parity P and helpers on an L-site chain."""
    F = reduce(np.kron, [SX] * L)
    P = (-1) ** L * reduce(np.kron, [SZ] * L)
    return {
        "F": F,
        "P": P,
        "sigma": lambda i, kind: sigma(i, kind, L),
        "phi_embed": lambda i: phi_embed(i, L),
        "singlet": SINGLET.copy(),
    }


# boundary vectors

def boundary_vectors(x, params: ThetaParams) -> dict:
    lam = params.lam
    e2 = 2 * params.eta
    t = params.thq
    chi = t(1, x + lam) * t(4, x - lam - e2) * np.kron(UP, DOWN) + t(1, x - lam - e2) * t(4, x + lam) * np.kron(DOWN, UP)
    chibar = t(1, x + lam) * t(1, x - lam - e2) * np.kron(UP, UP) + t(4, x - lam - e2) * t(4, x + lam) * np.kron(DOWN, DOWN)
    eta = params.eta
    g = _ratio(t(4, 2 * (eta + x)), t(4, 2 * (eta - x)))
    gbar = _ratio(t(1, 2 * (eta + x)), t(1, 2 * (eta - x)))
    return {"chi": chi, "chibar": chibar, "g": g, "gbar": gbar}


def _ratio(a, b):
    # g and gbar have poles; the vectors themselves stay finite there
    return a / b if b != 0 else complex("inf")


def xi_vector(xs, params: ThetaParams) -> np.ndarray:
    """chi(x_1) (x) ... (x) chi(x_n) (x) |up>."""
    parts = [boundary_vectors(x, params)["chi"] for x in xs] + [UP]
    return reduce(np.kron, parts)


def xibar_vector(xs, sign: int, params: ThetaParams) -> np.ndarray:
    """chibar(x_1) (x) ... (x) chibar(x_n) (x) (|up> +- |down>)."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    parts = [boundary_vectors(x, params)["chibar"] for x in xs] + [UP + sign * DOWN]
    return reduce(np.kron, parts)


# identity residuals

def op_residual(lhs, rhs) -> float:
    """Max-entry difference over the larger max-entry magnitude of the two sides."""
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    scale = max(np.max(np.abs(lhs)), np.max(np.abs(rhs)))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(lhs - rhs)) / scale)


def ybe_residual(u, v, params: ThetaParams) -> float:
    R12 = embed(r_matrix(u - v, params), [1, 2], 3)
    R13 = embed(r_matrix(u, params), [1, 3], 3)
    R23 = embed(r_matrix(v, params), [2, 3], 3)
    return op_residual(R12 @ R13 @ R23, R23 @ R13 @ R12)


def braid_ybe_residual(u, v, params: ThetaParams) -> float:
    def Rc(w, i):
        return embed(rcheck_matrix(w, params), [i, i + 1], 3)

    return op_residual(Rc(u - v, 1) @ Rc(u, 2) @ Rc(v, 1), Rc(v, 2) @ Rc(u, 1) @ Rc(u - v, 2))


def boundary_ybe_residual(x, y, params: ThetaParams, kind: str = "chi") -> float:
    cx = boundary_vectors(x, params)[kind]
    cy = boundary_vectors(y, params)[kind]
    lhs = apply_local(rcheck_matrix(x - y, params), [1, 2], apply_local(rcheck_matrix(-x - y, params), [2, 3], np.kron(cx, cy)))
    rhs = apply_local(rcheck_matrix(x - y, params), [3, 4], apply_local(rcheck_matrix(-x - y, params), [2, 3], np.kron(cy, cx)))
    return op_residual(lhs, rhs)


def fish_residual(x, params: ThetaParams, kind: str = "chi") -> float:
    """Rcheck(2x) chi(x) against g(x) r(2x) chi(-x) (or the barred version)."""
    bx = boundary_vectors(x, params)
    bm = boundary_vectors(-x, params)
    g = bx["g"] if kind == "chi" else bx["gbar"]
    return op_residual(rcheck_matrix(2 * x, params) @ bx[kind], g * r_func(2 * x, params) * bm[kind])


def special_sp_residual(x, params: ThetaParams, kind: str = "chi") -> float:
    """The two-singlet matrix element against its closed form."""
    eta = params.eta
    lam = params.lam
    b2 = boundary_vectors(x + 2 * eta, params)
    b1 = boundary_vectors(x, params)
    bra = np.kron(b2[kind], b1[kind])
    ket = apply_local(rcheck_matrix(-2 * (x + eta), params), [2, 3], np.kron(SINGLET, SINGLET))
    r = r_func(-2 * (x + eta), params)
    lhs = bra @ ket / r
    g = b1["g"] if kind == "chi" else b1["gbar"]
    th = params.th
    rhs = th(2, 0) ** 2 * th(1, x - lam) * th(1, x + lam + 2 * eta) * g / 2
    # the Cauchy-Schwarz bound sets the scale where both sides vanish
    scale = max(abs(lhs), abs(rhs), np.linalg.norm(bra) * np.linalg.norm(ket) / abs(r))
    return 0.0 if scale == 0 else float(abs(lhs - rhs) / scale)

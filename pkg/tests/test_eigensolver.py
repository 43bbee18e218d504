from fractions import Fraction

import numpy as np
import pytest

from conftest import rel
from susy8v.eigensolver import (
    PsiVector,
    XYZParams,
    check_collinear,
    exact_ground_space,
    exchange,
    homogeneous_psi,
    homogeneous_psi_elliptic,
    norm_factor,
    parity_flip,
    psi1_explicit,
    solve_psi,
    theta_eigenvalue,
    transfer_multiplicity_gap,
    u_transform,
    wheel_scaling,
    xyz_hamiltonian,
    xyz_hamiltonian_exact,
)
from susy8v.errors import CapacityError, DomainError, NullDimError
from susy8v.lattice import DOWN, UP, config_index, op_residual, phi_embed, r_func, sigma, symmetry_ops, transfer_matrix
from susy8v.theta import ThetaParams
from susy8v.tsuchiya import zeta_of_p

P = ThetaParams(0.25)


def random_args(rng, L):
    return [complex(rng.uniform(0, np.pi), rng.uniform(-0.2, 0.2)) for _ in range(L)]


def test_eigenvalue():
    u = 0.3 + 0.1j
    assert rel(theta_eigenvalue(0, u, [u], P), r_func(0, P)) < 1e-15
    a_plus_b = r_func(-u, P)
    assert rel(theta_eigenvalue(2, u, [0] * 5, P), a_plus_b**5) < 1e-13
    assert rel(theta_eigenvalue(1, u, [0.1, 0.5, 0.9], P), theta_eigenvalue(1, u, [0.9, 0.1, 0.5], P)) < 1e-14


def test_n0_vector():
    v = solve_psi(0, [0.4], P).state
    assert check_collinear(v, UP + DOWN)[0]


def test_n1_explicit(rng):
    for _ in range(5):
        u = random_args(rng, 3)
        ok, _, res = check_collinear(solve_psi(1, u, P).state, psi1_explicit(*u, P))
        assert ok and res < 1e-9


def test_n1_explicit_structure(rng):
    u = random_args(rng, 3)
    v = psi1_explicit(*u, P)
    assert v[config_index("uuu")] == -v[config_index("ddd")]
    F = symmetry_ops(3)["F"]
    assert op_residual(F @ v, -v) < 1e-15
    x = 0.7 + 0.05j
    T = transfer_matrix(x, u, P)
    assert op_residual(T @ v, theta_eigenvalue(1, x, u, P) * v) < 1e-12


def test_collinearity_helper():
    v = np.array([1.0, 2.0, -1.0])
    ok, ratio, res = check_collinear(2 * v, v)
    assert ok and abs(ratio - 2) < 1e-15 and res < 1e-15
    assert not check_collinear(v, np.array([1.0, 0.0, 0.0]))[0]
    with pytest.raises(DomainError):
        check_collinear(v, 0 * v)


@pytest.mark.parametrize("n", [1, 2])
def test_exchange(n, rng):
    L = 2 * n + 1
    u = random_args(rng, L)
    v = solve_psi(n, u, P).state
    for i in range(1, L):
        w, a = exchange(v, u, i, P)
        assert a[i - 1] == u[i] and a[i] == u[i - 1]
        assert check_collinear(w, solve_psi(n, a, P).state)[2] < 1e-6


def test_exchange_keeps_the_scale(rng):
    u = random_args(rng, 3)
    for i in (1, 2):
        w, a = exchange(psi1_explicit(*u, P), u, i, P)
        assert op_residual(w, psi1_explicit(*a, P)) < 1e-12
    with pytest.raises(DomainError):
        exchange(psi1_explicit(*u, P), u, 3, P)


@pytest.mark.parametrize("n", [1, 2])
def test_spin_flip_and_shifts(n, rng):
    L = 2 * n + 1
    u = random_args(rng, L)
    v = solve_psi(n, u, P).state
    for i in range(L):
        sh = list(u)
        sh[i] += P.pi_tau
        assert check_collinear(sigma(i + 1, "x", L) @ v, solve_psi(n, sh, P).state)[2] < 1e-6
        sh = list(u)
        sh[i] += 2 * P.pi_tau
        assert check_collinear(v, solve_psi(n, sh, P).state)[2] < 1e-6


@pytest.mark.parametrize("n", [1, 2])
def test_reduction(n, rng):
    L = 2 * n + 1
    u = random_args(rng, L)
    for i in range(1, L):
        a = list(u)
        a[i] = a[i - 1] + 2 * P.eta
        low = solve_psi(n - 1, a[: i - 1] + a[i + 1 :], P).state
        assert check_collinear(solve_psi(n, a, P).state, phi_embed(i, L - 2) @ low)[2] < 1e-6


def test_wheel():
    base = 0.4 + 0.05j
    with pytest.raises(NullDimError):
        solve_psi(1, [base, base + 2 * P.eta, base + 4 * P.eta], P)
    data = wheel_scaling(1, base, P)
    norms = [d[1] for d in data]
    for a, b in zip(norms, norms[1:]):
        assert abs(np.log10(a / b) - 1) < 0.05
    assert max(d[2] for d in data) < 1e-6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_double_eigenvalue(n):
    mult, gap, _ = transfer_multiplicity_gap(n, 0.31 + 0.07j, P)
    assert mult == 2 and gap >= 1e6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_homogeneous_vector_solves_xyz(n):
    for zeta in (Fraction(1, 3), Fraction(1, 2)):
        v = homogeneous_psi(n, zeta)["psi"]
        X = XYZParams(n, zeta)
        H = xyz_hamiltonian(X)
        assert np.linalg.norm(H @ v.state - float(X.E0) * v.state) < 1e-9 * np.linalg.norm(v.state)


def test_exact_hamiltonian_matches_dense():
    X = XYZParams(1, Fraction(1, 3))
    H = xyz_hamiltonian(X)
    E = np.zeros_like(H)
    for (r, c), val in xyz_hamiltonian_exact(X).items():
        E[r, c] = float(val)
    assert op_residual(H, E) < 1e-15


def test_psi1_homogeneous_values():
    for zeta in (Fraction(1, 3), Fraction(1, 2), Fraction(2)):
        v = homogeneous_psi(1, zeta)["psi"]
        assert v.component("udu") == 1
        assert v.component("ddd") == zeta
        assert sum(c * c for c in v.exact) == 2 * (3 + zeta**2)


def test_exact_route_is_sector_consistent():
    vec = exact_ground_space(2, Fraction(1, 2))
    L = 5
    full = 2**L - 1
    assert all(vec[full - i] == vec[i] for i in range(2**L))
    with pytest.raises(CapacityError):
        exact_ground_space(5, Fraction(1, 2))


def test_parity_and_psibar():
    vecs = homogeneous_psi(2, Fraction(1, 3))
    Pm = symmetry_ops(5)["P"]
    assert op_residual(Pm @ vecs["psi"].state, vecs["psibar"].state) < 1e-15
    assert parity_flip(parity_flip(vecs["psi"].exact, 5), 5) == vecs["psi"].exact
    assert vecs["psi"].normalization == "anchored"


def test_u_transform():
    zeta = Fraction(1, 2)
    zp = (zeta + 3) / (zeta - 1)
    for n in (1, 2):
        L = 2 * n + 1
        U = u_transform(L)
        assert op_residual(U.T @ U, np.eye(2**L)) < 1e-14
        lhs = xyz_hamiltonian(XYZParams(n, zp)) @ U
        rhs = float((zeta - 1) / 2) * U @ xyz_hamiltonian(XYZParams(n, zeta))
        assert op_residual(lhs, rhs) < 1e-13


@pytest.mark.parametrize("n", [1, 2])
def test_elliptic_homogeneous_matches_exact_shape(n):
    e = homogeneous_psi_elliptic(n, P)
    X = XYZParams(n, zeta_of_p(P))
    H = xyz_hamiltonian(X)
    assert np.linalg.norm(H @ e.state - X.E0 * e.state) < 1e-9 * np.linalg.norm(e.state)


def test_norm_factor_turns_raw_vector_into_psi():
    # the scale of Psi_1(0, 0, 0) from the closed form against psi_1's anchor
    zeta = zeta_of_p(P)
    v = norm_factor(1, P) * psi1_explicit(0, 0, 0, P)
    assert rel(v[config_index("udu")], 1) < 1e-12
    assert rel(v[config_index("ddd")], zeta) < 1e-12


def test_psivector_and_errors():
    v = PsiVector(1, (0, 0, 0), np.arange(8.0))
    assert v.L == 3 and v.component("udd") == 3
    with pytest.raises(DomainError):
        solve_psi(1, [0.1, 0.2], P)
    with pytest.raises(DomainError):
        XYZParams(1, 1)
    with pytest.raises(CapacityError):
        solve_psi(5, [0.1] * 11, P)

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rel
from susy8v.errors import CapacityError, DomainError
from susy8v.lattice import (
    DOWN,
    SINGLET,
    SZ,
    UP,
    apply_local,
    basis_state,
    boundary_vectors,
    boundary_ybe_residual,
    braid_ybe_residual,
    config_index,
    config_label,
    embed,
    fish_residual,
    op_residual,
    phi_embed,
    r_func,
    r_matrix,
    rcheck_matrix,
    sigma,
    special_sp_residual,
    symmetry_ops,
    transfer_matrix,
    vertex_weights,
    ybe_residual,
)
from susy8v.theta import ThetaParams

P = ThetaParams(0.25, lam=0.31 + 0.07j)
points = st.tuples(st.floats(-3.0, 3.0), st.floats(-0.25, 0.25)).map(lambda t: complex(*t))


def dense_transfer(u, inhoms, params):
    """Trace over an auxiliary first site of a dense (L+1)-site product."""
    L = len(inhoms)
    M = np.eye(2 ** (L + 1), dtype=complex)
    for i, ui in enumerate(inhoms):
        M = embed(r_matrix(ui - u, params), [1, i + 2], L + 1) @ M
    half = 2**L
    return M[:half, :half] + M[half:, half:]


def test_basis_conventions():
    assert config_index("udu") == 0b010
    assert config_label(0b010, 3) == "udu"
    assert np.array_equal(basis_state("ud"), np.kron(UP, DOWN))
    with pytest.raises(DomainError):
        config_index("uxd")


@given(points)
def test_weights(u):
    a, b, c, d = vertex_weights(u, P)
    assert rel((a * a + a * b) * (b * b + a * b), (c * c + a * b) * (d * d + a * b)) < 1e-10
    assert rel(r_func(u, P), a + b) < 1e-12


def test_weights_at_zero():
    a, b, c, d = vertex_weights(0, P)
    assert b == 0 and d == 0
    t = P.thq
    assert op_residual(r_matrix(0, P), t(4, 0) * t(1, 2 * P.eta) * t(4, 2 * P.eta) * np.eye(4)[[0, 2, 1, 3]]) < 1e-14
    assert rel(r_func(0, P), t(4, 0) * t(1, P.eta) * t(4, P.eta)) < 1e-15


@given(points, points)
def test_yang_baxter(u, v):
    assert ybe_residual(u, v, P) < 1e-9
    assert braid_ybe_residual(u, v, P) < 1e-9


def test_singlet_eigenvalue():
    assert op_residual(rcheck_matrix(-2 * P.eta, P) @ SINGLET, -2 * r_func(-2 * P.eta, P) * SINGLET) < 1e-13


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_transfer_against_dense_product(L, rng):
    inhoms = [complex(rng.uniform(0, 3), rng.uniform(-0.2, 0.2)) for _ in range(L)]
    u = 0.37 + 0.05j
    assert op_residual(transfer_matrix(u, inhoms, P), dense_transfer(u, inhoms, P)) < 1e-13


def test_single_site_transfer():
    u, u1 = 0.4 + 0.1j, 1.1
    assert op_residual(transfer_matrix(u, [u1], P), r_func(u1 - u, P) * np.eye(2)) < 1e-14


@pytest.mark.parametrize("L", [3, 5, 7])
def test_transfer_commutation(L, rng):
    inhoms = [complex(rng.uniform(0, 3), rng.uniform(-0.2, 0.2)) for _ in range(L)]
    T1 = transfer_matrix(0.3 + 0.1j, inhoms, P)
    T2 = transfer_matrix(1.7 - 0.05j, inhoms, P)
    ops = symmetry_ops(L)
    assert op_residual(T1 @ T2, T2 @ T1) < 1e-9
    assert op_residual(T1 @ ops["F"], ops["F"] @ T1) < 1e-9
    assert op_residual(T1 @ ops["P"], ops["P"] @ T1) < 1e-9


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_symmetry_operators(L):
    ops = symmetry_ops(L)
    F, Pm = ops["F"], ops["P"]
    I = np.eye(2**L)
    assert op_residual(F @ F, I) == 0 and op_residual(Pm @ Pm, I) == 0
    assert op_residual(F @ Pm, (-1) ** L * Pm @ F) == 0


def test_phi_embed():
    assert np.array_equal(phi_embed(1, 1) @ UP, np.kron(np.kron(UP, DOWN), UP) - np.kron(np.kron(DOWN, UP), UP))
    assert phi_embed(2, 3).shape == (32, 8)
    with pytest.raises(DomainError):
        phi_embed(5, 3)


def test_apply_local_matches_embed(rng):
    op = rng.normal(size=(4, 4))
    psi = rng.normal(size=16)
    assert op_residual(apply_local(op, [3, 1], psi), embed(op, [3, 1], 4) @ psi) < 1e-14
    with pytest.raises(DomainError):
        apply_local(op, [1, 1], psi)


@given(points, points, points)
def test_boundary_yang_baxter(x, y, lam):
    Q = P.with_lambda(lam)
    assert boundary_ybe_residual(x, y, Q, "chi") < 1e-9
    assert boundary_ybe_residual(x, y, Q, "chibar") < 1e-9


@given(points, points)
def test_boundary_reflection_and_matrix_elements(x, lam):
    Q = P.with_lambda(lam)
    for kind in ("chi", "chibar"):
        assert fish_residual(x, Q, kind) < 1e-9
        assert special_sp_residual(x, Q, kind) < 1e-9


@given(points)
def test_boundary_vector_shifts(x):
    zz = embed(np.kron(SZ, SZ), [1, 2], 2)
    b = boundary_vectors(x, P)
    shifted = boundary_vectors(x + np.pi, P)
    assert op_residual(shifted["chi"], zz @ b["chi"]) < 1e-12
    assert op_residual(zz @ b["chi"], -b["chi"]) == 0


def test_boundary_vector_at_pole_stays_finite():
    b = boundary_vectors(P.eta, P)
    assert np.all(np.isfinite(b["chi"]))


def test_sigma_and_capacity():
    assert op_residual(sigma(2, "z", 2), np.kron(np.eye(2), SZ)) == 0
    with pytest.raises(DomainError):
        sigma(3, "x", 2)
    with pytest.raises(CapacityError):
        transfer_matrix(0.1, [0.0] * 10, P)

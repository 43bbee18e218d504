import cmath

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from susy8v.errors import DomainError
from susy8v.theta import ETA, ThetaParams, relative_residual, theta

nomes = st.floats(0.02, 0.6)
reals = st.floats(-3.0, 3.0)
imags = st.floats(-0.3, 0.3)
kinds = st.sampled_from([1, 2, 3, 4])


@given(kinds, reals, imags, nomes)
def test_matches_mpmath(kind, x, y, q):
    z = complex(x, y)
    assert relative_residual(theta(kind, z, q), complex(mpmath.jtheta(kind, z, q))) < 1e-13


@given(nomes)
def test_theta1_vanishes_at_zero(q):
    assert theta(1, 0, q) == 0


@given(reals, imags, nomes)
def test_parity_and_periodicity(x, y, q):
    z = complex(x, y)
    assert relative_residual(theta(1, -z, q), -theta(1, z, q)) < 1e-14
    assert relative_residual(theta(4, z + np.pi, q), theta(4, z, q)) < 1e-13
    assert relative_residual(theta(1, z + np.pi, q), -theta(1, z, q)) < 1e-13


@given(reals, imags, st.floats(0.05, 0.5))
def test_quasi_periodicity(x, y, p):
    P = ThetaParams(p)
    z = complex(x, y)
    shifted = P.th(1, z + P.pi_tau)
    assert relative_residual(shifted, -P.th(1, z) * cmath.exp(-2j * z) / p) < 1e-10
    assert relative_residual(P.th(4, z + P.pi_tau), -P.th(4, z) * cmath.exp(-2j * z) / p) < 1e-10


@given(reals, imags)
def test_nome_doubling_product(x, y):
    P = ThetaParams(0.3)
    z = complex(x, y)
    assert relative_residual(P.th(1, z) * P.th(2, 0), 2 * P.thq(1, z) * P.thq(4, z)) < 1e-13


@pytest.mark.parametrize("p", [0.1, 0.25, 0.5])
def test_half_constant_at_eta(p):
    P = ThetaParams(p)
    assert relative_residual(2 * P.th(2, ETA) * P.thq(4, ETA), P.th(2, 0) * P.thq(4, 0)) < 1e-14


@pytest.mark.parametrize("p", [0.1, 0.3])
def test_jacobi_quartic(p):
    t = [theta(k, 0, p) for k in (2, 3, 4)]
    assert relative_residual(t[1] ** 4, t[0] ** 4 + t[2] ** 4) < 1e-14


def test_series_survives_vanishing_terms():
    # sin(3 eta) = 0 makes the second term vanish; the sum must not stop there
    q = 0.3**2
    assert relative_residual(theta(1, ETA, q), complex(mpmath.jtheta(1, ETA, q))) < 1e-15


def test_extended_precision_agrees():
    z = 0.41 + 0.07j
    hi = theta(3, z, 0.2, precision=200)
    with mpmath.workprec(200):
        ref = mpmath.jtheta(3, mpmath.mpc(z), mpmath.mpf(0.2))
        assert abs(hi - ref) < mpmath.mpf(2) ** -190


def test_precision_from_environment(monkeypatch):
    monkeypatch.setenv("SUSY8V_PRECISION", "120")
    assert ThetaParams(0.2).precision == 120
    monkeypatch.setenv("SUSY8V_PRECISION", "abc")
    with pytest.raises(DomainError):
        ThetaParams(0.2)


def test_params_shape():
    P = ThetaParams(0.25)
    assert P.eta == ETA
    assert P.nome_check() < 1e-15
    assert P.with_lambda(1.0).lam == 1.0


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5])
def test_bad_nome(bad):
    with pytest.raises(DomainError):
        ThetaParams(bad)
    with pytest.raises(DomainError):
        theta(1, 0.1, bad)


def test_bad_kind_and_argument():
    with pytest.raises(DomainError):
        theta(5, 0.1, 0.2)
    with pytest.raises(DomainError):
        theta(1, complex("nan"), 0.2)

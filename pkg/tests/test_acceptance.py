"""One test per acceptance criterion, run on the default configuration.

Each test selects the registry checks that make up the criterion, confirms
the coverage and tolerances it demands, and records a PASS/FAIL line that is
printed at the end of the session.
"""
import time

import pytest

from susy8v.checks import SUITES, RunConfig

CFG = RunConfig()


@pytest.fixture(scope="module")
def results():
    out = {}
    times = {}
    for name, fn in SUITES.items():
        t0 = time.perf_counter()
        for r in fn(CFG):
            out[r.check_id] = r
        times[name] = time.perf_counter() - t0
    return out, times


def select(results, *prefixes, exclude=()):
    res, _ = results
    picked = [r for cid, r in sorted(res.items()) if cid.startswith(prefixes) and not cid.endswith(exclude)]
    assert picked, f"no checks under {prefixes}"
    return picked


def verdict(log, number, text, checks, max_tol=None, extra=""):
    bad = [r.check_id for r in checks if not r.passed]
    if max_tol is not None:
        bad += [f"{r.check_id} (tolerance {r.tolerance})" for r in checks if r.tolerance is not None and r.tolerance > max_tol]
    ok = not bad
    worst = max((r.residual for r in checks if r.residual is not None), default=None)
    detail = f"{len(checks)} checks" + (f", worst residual {worst:.1e}" if worst is not None else ", all exact") + extra
    log[number] = (ok, f"{text} ({detail})" + ("" if ok else f"; failing: {bad}"))
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")
    assert ok, bad


def test_criterion_01_polynomial_identities(results, acceptance_log):
    res, times = results
    ids = set(res)
    assert {f"polynomials.two_var.k{k}" for k in range(2, 6)} <= ids
    assert {f"polynomials.bilinear.k{k}" for k in range(1, 4)} <= ids
    assert {f"polynomials.mobius.k{k}" for k in range(1, 4)} <= ids
    assert {f"polynomials.leading.k{k}" for k in range(1, 5)} <= ids
    checks = select(results, "polynomials.two_var", "polynomials.bilinear", "polynomials.mobius", "polynomials.leading")
    assert all(r.exact is not None for r in checks)
    assert times["polynomials"] < 300
    verdict(acceptance_log, 1, "exact polynomial identities", checks)


def test_criterion_02_combinatorial_evaluations(results, acceptance_log):
    checks = select(results, "polynomials.combinatorial", "polynomials.asm_bruteforce")
    assert len(checks) == 5
    verdict(acceptance_log, 2, "zeta = 0 enumerations and brute-force A(3) = 7", checks)


def test_criterion_03_elliptic_polynomial_bridge(results, acceptance_log):
    uni = select(results, "tsuchiya.uniformisation")
    assert {r.inputs["p"] for r in uni} == {0.1, 0.3}
    assert all(r.tolerance <= 1e-7 for r in uni)
    other = select(results, "tsuchiya.symmetry", "tsuchiya.reduction")
    assert all(r.tolerance <= 1e-8 for r in other)
    verdict(acceptance_log, 3, "uniformisation, symmetry and reduction of the elliptic determinant", uni + other)


def test_criterion_04_lattice_identities(results, acceptance_log):
    checks = select(
        results,
        "lattice.ybe",
        "lattice.braid_ybe",
        "lattice.boundary_ybe",
        "lattice.transfer_commutation",
        "lattice.fish",
        "lattice.special_matrix_elements",
    )
    assert len(checks) == 6 and all(r.inputs["draws"] >= 10 for r in checks)
    verdict(acceptance_log, 4, "lattice identities", checks, max_tol=1e-9)


def test_criterion_05_double_eigenvalue(results, acceptance_log):
    checks = select(results, "eigenvector.multiplicity")
    assert checks[0].inputs["min_gap"] >= 1e6
    verdict(acceptance_log, 5, "double eigenvalue (a+b)^(2n+1), n <= 3", checks)


def test_criterion_06_structural_eigenvector(results, acceptance_log):
    checks = select(
        results,
        "eigenvector.exchange",
        "eigenvector.spin_flip",
        "eigenvector.reduction",
        "eigenvector.shifts",
        "eigenvector.wheel",
    )
    for n in (1, 2):
        assert any(r.check_id.endswith(f"n{n}") for r in checks)
    slopes = [r for r in checks if r.check_id.endswith(".vanishing")]
    collinear = [r for r in checks if r.residual is not None and r not in slopes]
    assert slopes and all(r.tolerance <= 1e-6 for r in collinear)
    worst_slope = max(r.residual for r in slopes)
    verdict(
        acceptance_log, 6, "scale-free eigenvector structure, n <= 2", collinear, max_tol=1e-6,
        extra=f"; wheel zero order deviates from 1 by at most {worst_slope:.1e}",
    )
    assert all(r.passed for r in checks)


def test_criterion_07_n1_closed_forms(results, acceptance_log):
    checks = select(results, "eigenvector.n1_closed_form", "scalars.n1_closed_forms")
    verdict(acceptance_log, 7, "n = 1 vector and overlaps in closed form", checks, max_tol=1e-9)


def test_criterion_08_inhomogeneous_ratios(results, acceptance_log):
    ratios = select(results, "scalars.lambda_ratios")
    assert {r.inputs["n"] for r in ratios} == {1, 2, 3}
    assert all(len(r.inputs["lambda_pairs"]) == 3 for r in ratios)
    zeros = select(results, "scalars.trivial_zeros")
    assert all(r.inputs["min_suppression"] > 1e6 for r in zeros)
    verdict(acceptance_log, 8, "determinant formulas through lambda ratios and trivial zeros", ratios + zeros, max_tol=1e-6)


def test_criterion_09_homogeneous_exact(results, acceptance_log):
    checks = select(results, "scalars.homogeneous.")
    for n in range(4):
        for zeta in ("1/3", "1/2", "2"):
            cell = [r for r in checks if r.check_id.endswith(f".n{n}.z{zeta}")]
            assert len(cell) >= 12
    assert all(r.exact is not None for r in checks)
    rules = select(results, "scalars.sum_rule")
    verdict(acceptance_log, 9, "homogeneous closed forms in exact arithmetic, plus the rotated sum rule", checks + rules, max_tol=1e-9)


def test_criterion_10_trigonometric_limits(results, acceptance_log):
    checks = select(results, "scalars.trig", "scalars.symplectic")
    verdict(acceptance_log, 10, "zeta = 0 limits and character identities", checks, max_tol=1e-8)


def test_criterion_11_u_transform(results, acceptance_log):
    rot = select(results, "scalars.u_transform")
    assert rot[0].tolerance <= 1e-7
    big = select(results, "scalars.large_zeta")
    assert big[0].tolerance <= 1e-3
    verdict(acceptance_log, 11, "rotated-basis relation and large-anisotropy limit", rot + big)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from susy8v.errors import CapacityError, DomainError
from susy8v.exactpoly import (
    RatFunc,
    const,
    det_cofactor,
    det_fraction_free,
    det_leibniz,
    parse,
    poly_ops,
    serialize,
    var,
)

z, x, y = var("z"), var("x"), var("y")
small = st.integers(-5, 5)
points = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@st.composite
def polys(draw):
    """Random polynomial in z, x together with a plain Python evaluator."""
    terms = draw(st.lists(st.tuples(small, st.integers(0, 3), st.integers(0, 2)), min_size=1, max_size=5))
    p = RatFunc.coerce(0)
    for c, a, b in terms:
        p = p + c * z**a * x**b
    return p, lambda zv, xv: sum(c * zv**a * xv**b for c, a, b in terms)


@given(polys(), polys(), points, points)
def test_ring_operations_commute_with_evaluation(P, Q, zv, xv):
    (p, fp), (q, fq) = P, Q
    at = {"z": zv, "x": xv}
    assert (p + q).eval_exact(at) == fp(zv, xv) + fq(zv, xv)
    assert (p - q).eval_exact(at) == fp(zv, xv) - fq(zv, xv)
    assert (p * q).eval_exact(at) == fp(zv, xv) * fq(zv, xv)
    if fq(zv, xv) != 0 and not q.is_zero():
        assert (p / q).eval_exact(at) == Fraction(fp(zv, xv)) / fq(zv, xv)


@given(polys(), polys())
def test_quotients_are_reduced(P, Q):
    (p, _), (q, _) = P, Q
    if q.is_zero():
        return
    r = (p * q) / q
    assert r == p
    assert r.den.is_one()


@given(polys(), polys())
def test_serialize_roundtrip(P, Q):
    (p, _), (q, _) = P, Q
    assert parse(serialize(p)) == p
    if not q.is_zero():
        assert parse(serialize(p / q)) == p / q


def test_small_examples():
    assert (z + 1) * (z - 1) == z**2 - 1
    w = var("w1")
    assert (1 - w).substitute({"w1": 1 / (1 - z)}) == -z / (1 - z)
    assert ((7 + z**2) / 2).eval_exact({"z": 0}) == Fraction(7, 2)
    assert serialize((7 + z**2) / 2) == "7/2 + 1/2*z^2"
    assert serialize(1 + var("m")) == "1 + m"
    assert serialize(-z + 3) == "3 - z"


def test_denominator_normalised():
    r = (2 * x) / (4 * z + 2)
    assert r.den.leading_coefficient() == 1
    assert r == x / (2 * z + 1)


def test_self_substitution_and_involution():
    zp = (z + 3) / (z - 1)
    assert zp.substitute({"z": zp}) == z
    assert (z**2 + x).substitute({"z": 2 * z}) == 4 * z**2 + x
    with pytest.raises(DomainError):
        (z + x).substitute({"z": x, "x": z})


def test_eval_complex_and_missing():
    p = z**2 + x
    assert p.eval_complex({"z": 1j, "x": 2}) == 1
    with pytest.raises(DomainError):
        p.eval_exact({"z": 1})
    with pytest.raises(DomainError):
        (1 / z).eval_complex({"z": 0})


def test_poly_ops_dispatch():
    assert poly_ops("add", z, 1) == z + 1
    assert poly_ops("mul", z, z) == z**2
    assert poly_ops("eval", z + 1, {"z": 2}) == 3
    with pytest.raises(DomainError):
        poly_ops("pow", z, 2)


def test_parse_general_expressions():
    assert parse("(z+1)^2 - (z^2 + 2*z)") == 1
    assert parse("1/(1-z) - 1") == z / (1 - z)
    with pytest.raises(DomainError):
        parse("z +")
    with pytest.raises(DomainError):
        parse("q")


def test_vandermonde_against_cofactors():
    ws = [var(f"w{i}") for i in (1, 2, 3)]
    M = [[w**j for j in range(3)] for w in ws]
    expected = (ws[1] - ws[0]) * (ws[2] - ws[0]) * (ws[2] - ws[1])
    assert det_fraction_free(M) == expected
    assert det_cofactor(M) == expected


def test_trivial_determinants():
    assert det_fraction_free([[x]]) == x
    assert det_fraction_free([[int(i == j) for j in range(3)] for i in range(3)]) == 1
    assert det_fraction_free([]) == 1


@given(st.lists(st.lists(points, min_size=4, max_size=4), min_size=4, max_size=4), st.integers(0, 3), st.integers(0, 3))
def test_determinant_alternating(rows, i, j):
    d = det_fraction_free(rows)
    assert d == det_leibniz(rows)
    if i != j:
        swapped = list(rows)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_fraction_free(swapped) == -d


def test_symbolic_determinant_with_denominators():
    M = [[1 / (1 + z), x], [y, 1 / (1 - z)]]
    assert det_fraction_free(M) == det_leibniz(M)


def test_errors():
    with pytest.raises(DomainError):
        RatFunc(1, 0)
    with pytest.raises(DomainError):
        var("q")
    with pytest.raises(DomainError):
        det_fraction_free([[1, 2]])
    with pytest.raises(CapacityError):
        det_fraction_free([[0] * 11 for _ in range(11)])
    with pytest.raises(DomainError):
        z.to_fraction()
    assert const("3/4").to_fraction() == Fraction(3, 4)

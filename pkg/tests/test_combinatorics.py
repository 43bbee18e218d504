import pytest

from susy8v.combinatorics import FAMILIES, asm_count, enumerate_asms
from susy8v.errors import DomainError


@pytest.fixture(scope="module")
def asms():
    return {n: list(enumerate_asms(n)) for n in range(1, 6)}


def test_asm_totals_by_enumeration(asms):
    for n in range(1, 6):
        assert len(asms[n]) == asm_count("A", n)
    assert [asm_count("A", n) for n in range(1, 5)] == [1, 2, 7, 42]


def test_refined_counts_by_first_row(asms):
    for n in range(1, 6):
        for k in range(1, n + 1):
            count = sum(1 for a in asms[n] if a[0][k - 1] == 1)
            assert count == asm_count("A_refined", n, k)
    assert asm_count("A_refined", 3, 2) == 3


def test_vertically_symmetric_by_enumeration(asms):
    for n in (1, 3, 5):
        count = sum(1 for a in asms[n] if all(row == row[::-1] for row in a))
        assert count == asm_count("A_V", n)
    assert asm_count("A_V", 5) == 3
    assert asm_count("A_V", 7) == 26
    assert asm_count("A_V", 9) == 646


def test_diagonal_antidiagonal_by_enumeration(asms):
    for n in (1, 3, 5):
        def dad(a):
            return all(a[i][j] == a[j][i] == a[n - 1 - j][n - 1 - i] for i in range(n) for j in range(n))

        assert sum(1 for a in asms[n] if dad(a)) == asm_count("A_DAD", n)
    assert asm_count("A_DAD", 3) == 3
    assert asm_count("A_DAD", 5) == 15


def test_frozen_values():
    assert [asm_count("N8", n) for n in (2, 4, 6, 8)] == [1, 2, 11, 170]
    assert [asm_count("A_UU2", n) for n in (4, 8, 12)] == [5, 66, 2431]
    assert [asm_count("Catalan", n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_domain_errors():
    for family, n in (("A_V", 4), ("N8", 3), ("A_DAD", 2), ("A_UU2", 6)):
        with pytest.raises(DomainError):
            asm_count(family, n)
    with pytest.raises(DomainError):
        asm_count("A_refined", 3)
    with pytest.raises(DomainError):
        asm_count("B", 3)
    assert set(FAMILIES) >= {"A", "A_V", "N8"}

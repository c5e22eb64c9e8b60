"""Charge-statistic oracle, checked against Lusztig's t-analogue of Kostant's
partition function (an independent route to Kostka-Foulkes polynomials)."""
import itertools
from functools import lru_cache

import pytest

from hallhodge.errors import DomainError
from hallhodge.laurent import LaurentPoly, ONE, T
from hallhodge.oracles.charge import (
    charge,
    hl_charge_typeA,
    kostka_foulkes_charge,
    kostka_number,
    partitions,
    semistandard_tableaux,
)
from hallhodge.symfunc import SymmetricFunction
from hallhodge import build_root_datum

t = LaurentPoly({1: 1})


def _sign(perm):
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def kostant_t(gamma):
    """Coefficient of x^gamma in prod_{i<j} 1/(1 - t x_i/x_j)."""
    n = len(gamma)
    roots = [(i, j) for i in range(n) for j in range(i + 1, n)]

    @lru_cache(maxsize=None)
    def rec(g, k):
        if k == len(roots):
            return ONE if not any(g) else LaurentPoly()
        i, j = roots[k]
        total = LaurentPoly()
        m = 0
        while True:
            h = list(g)
            h[i] -= m
            h[j] += m
            if any(sum(h[:p + 1]) < 0 for p in range(n)):
                break
            total = total + LaurentPoly({m: 1}) * rec(tuple(h), k + 1)
            m += 1
        return total

    if any(sum(gamma[:p + 1]) < 0 for p in range(n)) or sum(gamma):
        return LaurentPoly()
    return rec(tuple(gamma), 0)


def lusztig_kf(lam, mu):
    n = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    rho = tuple(range(n - 1, -1, -1))
    total = LaurentPoly()
    for perm in itertools.permutations(range(n)):
        lr = [lam[i] + rho[i] for i in range(n)]
        w = [lr[perm[i]] for i in range(n)]
        gamma = tuple(w[i] - mu[i] - rho[i] for i in range(n))
        total = total + _sign(perm) * kostant_t(gamma)
    return total


def test_examples():
    assert kostka_foulkes_charge((2,), (1, 1)) == t
    assert kostka_foulkes_charge((2, 1), (2, 1)) == 1
    assert kostka_foulkes_charge((2, 1), (1, 1, 1)) == t + t * t
    with pytest.raises(DomainError):
        kostka_foulkes_charge((2,), (1,))


def test_tableau_enumeration():
    tabs = semistandard_tableaux((2, 1), (1, 1, 1))
    assert sorted(tabs) == [((1, 2), (3,)), ((1, 3), (2,))]
    for tab in semistandard_tableaux((3, 2, 1), (2, 2, 1, 1)):
        assert all(a <= b for row in tab for a, b in zip(row, row[1:]))
        assert all(tab[i][j] < tab[i + 1][j] for i in range(len(tab) - 1) for j in range(len(tab[i + 1])))
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((3, 2), (2, 2, 1)) == 2


def test_charge_of_words():
    assert charge([1, 2]) == 1
    assert charge([2, 1]) == 0
    assert charge([3, 1, 2]) == 2
    assert charge([2, 1, 3]) == 1


@pytest.mark.parametrize("size", range(1, 7))
def test_charge_matches_lusztig(size):
    parts = partitions(size)
    for lam in parts:
        for mu in parts:
            assert kostka_foulkes_charge(lam, mu) == lusztig_kf(lam, mu), (lam, mu)


def test_kostka_foulkes_at_one_is_kostka():
    for lam in partitions(5):
        for mu in partitions(5):
            assert kostka_foulkes_charge(lam, mu)(1) == kostka_number(lam, mu)


def test_hl_charge_examples():
    gl2, gl3 = build_root_datum("GL", 2), build_root_datum("GL", 3)
    assert hl_charge_typeA(2, (2, 0)) == SymmetricFunction(gl2, {(2, 0): 1, (1, 1): ONE - T})
    assert hl_charge_typeA(2, (1, 0)) == SymmetricFunction(gl2, {(1, 0): 1})
    assert hl_charge_typeA(3, (1, 1, 0)) == SymmetricFunction(gl3, {(1, 1, 0): 1})
    with pytest.raises(DomainError):
        hl_charge_typeA(2, (1, 1, 1))

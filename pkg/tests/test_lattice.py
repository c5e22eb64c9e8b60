import random

import pytest

from hallhodge import build_root_datum, euler_table, hall_littlewood
from hallhodge.errors import CapacityError, DomainError
from hallhodge.hodge import cartan_stratum_count, predict_point_count
from hallhodge.oracles.lattice import (
    LatticePoint,
    classify_lattice,
    count_lattice_points,
    iwasawa_counts,
    lattice_census,
    rref,
    shift_t,
    submodules,
)


def test_count_examples():
    assert count_lattice_points(2, (1, 0), (1, 0), 2) == 2
    assert count_lattice_points(2, (1, 0), (0, 1), 2) == 1
    assert count_lattice_points(2, (2, 0), (1, 1), 3) == 2
    assert count_lattice_points(2, (0, 0), (0, 0), 3) == 1
    assert count_lattice_points(2, (2, 0), (5, -3), 2) == 0


def test_classify_examples():
    base = LatticePoint.from_generators(2, 1, 2, [])
    assert classify_lattice(base) == ((0, 0), (0, 0))
    whole = LatticePoint.from_columns(2, 1, 2, [[{-1: 1}, {}], [{}, {-1: 1}]])
    assert classify_lattice(whole) == ((1, 1), (1, 1))
    p = LatticePoint.from_columns(2, 1, 2, [[{-1: 1}, {}], [{}, {0: 1}]])
    assert classify_lattice(p) == ((1, 0), (1, 0))
    assert (p.cartan_type, p.iwasawa_type) == ((1, 0), (1, 0))


def test_big_cell_calibration():
    # Gr^(1,0) = P^1: lines spanned by t^-1 (a e1 + b e2); only b-axis line is the point S_(0,1)
    for q0 in (2, 3):
        for a in range(q0):
            for b in range(q0):
                if (a, b) == (0, 0):
                    continue
                p = LatticePoint.from_generators(2, 1, q0, [(a, b)])
                expected = (0, 1) if a == 0 else (1, 0)
                assert p.iwasawa_type == expected


def test_malformed():
    with pytest.raises(DomainError):
        LatticePoint.from_generators(2, 1, 4, [])
    with pytest.raises(DomainError):
        LatticePoint.from_generators(2, 2, 2, [(1, 0, 0)])
    with pytest.raises(DomainError):
        LatticePoint.from_columns(2, 1, 2, [[{-2: 1}, {}]])
    bad = LatticePoint(2, 2, 2, ((0, 1, 0, 0),))  # t^-1 e1 without t-closure issues is fine
    assert classify_lattice(bad) == ((1, 0), (1, 0))
    not_module = LatticePoint(2, 2, 2, ((1, 0, 0, 0),))  # t^-2 e1 alone is not t-stable
    with pytest.raises(DomainError):
        classify_lattice(not_module)
    with pytest.raises(DomainError):
        count_lattice_points(2, (0, 1), (0, 1), 2)


def test_capacity():
    with pytest.raises(CapacityError):
        count_lattice_points(3, (3, 0, 0), (3, 0, 0), 3)


def test_submodule_counts():
    # subspaces of F_2^3 (M = 1): 1 + 7 + 7 + 1
    assert len(submodules(3, 1, 2)) == 16
    for n, M, p in [(2, 2, 2), (2, 3, 3), (3, 2, 2)]:
        subs = submodules(n, M, p)
        assert len(set(subs)) == len(subs)
        for W in subs:
            assert rref(W, p) == W
            piv = [next(i for i, x in enumerate(r) if x) for r in W]
            assert rref(list(W) + [shift_t(r, n, M) for r in W], p) == W


@pytest.mark.parametrize("n, M, q0", [(2, 1, 2), (2, 2, 3), (2, 3, 2), (2, 3, 3), (3, 1, 3), (3, 2, 2), (4, 1, 2)])
def test_iwasawa_strata_partition_cartan_strata(n, M, q0):
    d = build_root_datum("GL", n)
    totals = {}
    for (lam, nu), k in lattice_census(n, M, q0).items():
        totals[lam] = totals.get(lam, 0) + k
        assert sum(lam) == sum(nu)
        assert d.pair_rho2(tuple(a + b for a, b in zip(lam, nu))) >= 0
    for lam, total in totals.items():
        assert total == cartan_stratum_count(d, lam)(q0)


def test_well_defined_under_change_of_generators():
    rng = random.Random(11)
    n, M, p = 2, 3, 3
    for W in submodules(n, M, p)[::7]:
        point = LatticePoint.from_generators(n, M, p, W)
        for _ in range(3):
            gens = []
            for _ in range(len(W) + 1):
                v = [0] * (n * M)
                for r in W:
                    c = rng.randrange(p)
                    v = [(a + c * b) % p for a, b in zip(v, r)]
                gens.append(v)
            gens += [shift_t(r, n, M) for r in W] + list(W)
            rng.shuffle(gens)
            other = LatticePoint.from_generators(n, M, p, gens)
            assert classify_lattice(other) == classify_lattice(point)
            assert other.basis == point.basis


def test_central_shift_invariance():
    for lam, nu in [((2, 0), (1, 1)), ((1, 0), (0, 1)), ((3, 1), (2, 2))]:
        base = count_lattice_points(2, lam, nu, 2)
        for c in (-3, 2):
            assert count_lattice_points(2, [x + c for x in lam], [x + c for x in nu], 2) == base


@pytest.mark.parametrize("n, lams, q0s", [
    (2, [(0, 0), (1, 0), (2, 0), (3, 0)], (2, 3)),
    (3, [(1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0), (2, 2, 0), (2, 1, 1)], (2,)),
    (4, [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)], (2,)),
])
def test_scholium_end_to_end(n, lams, q0s):
    d = build_root_datum("GL", n)
    for lam in lams:
        table = euler_table(hall_littlewood(d, lam))
        for q0 in q0s:
            counts = iwasawa_counts(n, lam, q0)
            for nu in table.rows:
                assert counts.get(nu, 0) == predict_point_count(table, nu, q0)
            for nu in counts:
                if d.is_dominant(nu):
                    assert nu in table.rows


def test_non_dominant_nu_measured():
    # the orbit partner of the big cell is a point, not an affine line
    counts = iwasawa_counts(2, (1, 0), 3)
    assert counts == {(1, 0): 3, (0, 1): 1}

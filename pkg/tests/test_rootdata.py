import itertools
from fractions import Fraction

import pytest

from hallhodge.errors import CapacityError, ConfigurationError, DomainError
from hallhodge.laurent import LaurentPoly
from hallhodge.rootdata import (
    build_root_datum,
    dominant_below,
    dominant_within_bound,
    orbit,
    pair_rho,
    stabilizer_poincare,
    weyl_elements,
)

DATA = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3),
        ("D", 4), ("G2", 2), ("GL", 1), ("GL", 2), ("GL", 3), ("GL", 4)]
POSITIVE_COUNT = {"A": lambda r: r * (r + 1) // 2, "B": lambda r: r * r, "C": lambda r: r * r,
                  "D": lambda r: r * (r - 1), "G2": lambda r: 6, "GL": lambda n: n * (n - 1) // 2}
PUBLISHED = {
    ("B", 2): ((2, -1), (-2, 2)),
    ("C", 2): ((2, -2), (-1, 2)),
    ("G2", 2): ((2, -3), (-1, 2)),
    ("A", 3): ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    ("B", 3): ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    ("C", 3): ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    ("D", 4): ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
}


@pytest.mark.parametrize("family, rank", DATA)
def test_datum_invariants(family, rank):
    d = build_root_datum(family, rank)
    r = len(d.cartan)
    assert all(d.cartan[i][i] == 2 for i in range(r))
    assert all(d.cartan[i][j] <= 0 for i in range(r) for j in range(r) if i != j)
    assert len(d.positive_coroots) == POSITIVE_COUNT[family](rank)
    for a in d.simple_coroots:
        assert pair_rho(d, a) == 1
    if (family, rank) in PUBLISHED:
        assert d.cartan == PUBLISHED[family, rank]


@pytest.mark.parametrize("family, rank", DATA)
def test_length_counts_inversions(family, rank):
    d = build_root_datum(family, rank)
    positive = set(d.positive_coroots)
    elements = weyl_elements(d)
    assert len(elements) == d.weyl_order
    assert len({w.matrix for w in elements}) == len(elements)
    assert elements[0].length == 0
    for w in elements:
        flips = sum(1 for a in d.positive_coroots if w.act(a) not in positive)
        assert flips == w.length
    keys = [(w.length, w.word) for w in elements]
    assert keys == sorted(keys)


def test_build_examples():
    a1 = build_root_datum("A", 1)
    assert len(a1.positive_coroots) == 1 and len(weyl_elements(a1)) == 2
    assert len(build_root_datum("G2", 2).positive_coroots) == 6
    gl2 = build_root_datum("GL", 2)
    assert gl2.positive_coroots == ((1, -1),)
    assert pair_rho(gl2, (3, 1)) == 1 and pair_rho(gl2, (4, 0)) == 2 and pair_rho(gl2, (0, 0)) == 0
    assert pair_rho(gl2, (1, 0)) == Fraction(1, 2)


@pytest.mark.parametrize("family, rank", [("X", 1), ("D", 1), ("G2", 3), ("A", 0)])
def test_unsupported(family, rank):
    with pytest.raises(ConfigurationError):
        build_root_datum(family, rank)


def test_weyl_lengths():
    lengths = lambda f, r: sorted(w.length for w in weyl_elements(build_root_datum(f, r)))
    assert lengths("A", 1) == [0, 1]
    assert lengths("A", 2) == [0, 1, 1, 2, 2, 3]
    assert len(lengths("B", 2)) == 8 and max(lengths("B", 2)) == 4


def test_weyl_capacity():
    with pytest.raises(CapacityError, match="192"):
        weyl_elements(build_root_datum("D", 4), bound=100)


def test_dominant_below_examples(gl2):
    assert dominant_below(gl2, (1, 0)) == ((1, 0),)
    assert dominant_below(gl2, (2, 0)) == ((2, 0), (1, 1))
    assert dominant_below(gl2, (0, 0)) == ((0, 0),)
    assert dominant_below(build_root_datum("B", 2), (0, 0)) == ((0, 0),)
    with pytest.raises(DomainError):
        dominant_below(gl2, (0, 1))


def _brute_dominant_below(d, lam, box=6):
    r = len(d.simple_coroots)
    out = set()
    for c in itertools.product(range(box + 1), repeat=r):
        nu = tuple(l - sum(ci * a[k] for ci, a in zip(c, d.simple_coroots)) for k, l in enumerate(lam))
        if d.is_dominant(nu):
            out.add(nu)
    return out


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("C", 2), ("G2", 2), ("A", 3), ("GL", 3)])
def test_dominant_below_matches_brute_force(family, rank):
    d = build_root_datum(family, rank)
    for lam in dominant_within_bound(d, 6):
        below = dominant_below(d, lam)
        assert set(below) == _brute_dominant_below(d, lam, box=12)
        for nu in below:
            assert set(dominant_below(d, nu)) <= set(below)
            two = d.pair_rho2(tuple(a + b for a, b in zip(lam, nu)))
            assert two >= 0 and two % 2 == 0


def test_orbit_examples(gl2, gl3):
    assert orbit(gl2, (1, 0)) == {(1, 0), (0, 1)}
    assert orbit(gl2, (1, 1)) == {(1, 1)}
    assert orbit(gl3, (2, 1, 0)) == set(itertools.permutations((2, 1, 0)))


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G2", 2), ("C", 3), ("GL", 3)])
def test_orbit_stabilizer(family, rank):
    d = build_root_datum(family, rank)
    for lam in dominant_within_bound(d, 4):
        stab = stabilizer_poincare(d, lam)
        assert stab.coefficient(0) == 1
        assert len(orbit(d, lam)) * stab(1) == d.weyl_order


def test_stabilizer_examples(gl2, gl3):
    t = LaurentPoly({1: 1})
    assert stabilizer_poincare(gl2, (2, 0)) == 1
    assert stabilizer_poincare(gl2, (1, 1)) == 1 + t
    assert stabilizer_poincare(gl3, (1, 1, 0)) == 1 + t
    assert stabilizer_poincare(gl3, (0, 0, 0)) == LaurentPoly({0: 1, 1: 2, 2: 2, 3: 1})
    with pytest.raises(DomainError):
        stabilizer_poincare(gl2, (0, 1))


def test_coroot_coordinates():
    b2 = build_root_datum("B", 2)
    assert b2.coroot_coordinates((2, -1)) == (1, 0)
    assert b2.coroot_coordinates((1, 0)) is None
    gl3 = build_root_datum("GL", 3)
    assert gl3.coroot_coordinates((1, 0, -1)) == (1, 1)
    assert gl3.coroot_coordinates((1, 0, 0)) is None


def test_table_bound_for_gl(gl2):
    assert dominant_within_bound(gl2, 2) == ((0, 0), (1, 1), (1, 0), (2, 0))
    assert dominant_within_bound(gl2, 0) == ((0, 0),)
    assert dominant_within_bound(build_root_datum("A", 2), 0) == ((0, 0),)

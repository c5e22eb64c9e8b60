"""Root data, Weyl groups and the coweight combinatorics indexing the Cartan
and Iwasawa strata.

Coordinates
-----------
For the simple families (A, B, C, D, G2) a coweight is an integer tuple in
fundamental-coweight coordinates, so ``mu[i] = <mu, alpha_i>`` and a coweight
is dominant iff all coordinates are non-negative.  The simple roots are then
the standard basis of the dual lattice and the simple coroot ``alpha_i^v`` is
row ``i`` of the Cartan matrix ``A[i][j] = <alpha_i^v, alpha_j>``.

``GL`` lives on ``Z^n`` with the standard pairing; roots and coroots are both
``e_i - e_j``.  Every coweight pairing below is a plain dot product, so the two
cases share one code path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import CapacityError, ConfigurationError, ConsistencyError, DomainError
from .laurent import LaurentPoly

Coweight = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G2", "GL")
DEFAULT_WEYL_BOUND = 10 ** 4


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``A[i][j] = <alpha_i^v, alpha_j>``, Bourbaki node numbering."""
    if family == "G2":
        if rank != 2:
            raise ConfigurationError("G2 has rank 2")
        # alpha_1 short, alpha_2 long
        return ((2, -3), (-1, 2))
    if family not in ("A", "B", "C", "D"):
        raise ConfigurationError(f"unsupported family {family!r}")
    if rank < 1 or (family == "D" and rank < 2):
        raise ConfigurationError(f"unsupported rank {rank} for family {family}")
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    if family == "D":
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        if rank >= 3:
            a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    else:
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if rank >= 2 and family == "B":
            a[rank - 1][rank - 2] = -2  # alpha_r short
        elif rank >= 2 and family == "C":
            a[rank - 2][rank - 1] = -2  # alpha_r long
    return tuple(tuple(row) for row in a)


def _weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "G2":
        return 12
    return factorial(rank)  # GL_n


def _positive_pairs(A: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Positive (root, coroot) pairs in simple-root / simple-coroot coordinates.

    Generated by reflection closure from the simple pairs; each root travels
    together with its own coroot.
    """
    r = len(A)
    start = [(tuple(int(i == j) for j in range(r)),) * 2 for i in range(r)]
    seen = {k: c for k, c in start}
    queue = deque(start)
    while queue:
        k, c = queue.popleft()
        for i in range(r):
            a = sum(A[i][j] * k[j] for j in range(r))  # <alpha_i^v, beta>
            b = sum(c[j] * A[j][i] for j in range(r))  # <beta^v, alpha_i>
            if a == 0:
                continue
            k2 = tuple(x - a * int(j == i) for j, x in enumerate(k))
            c2 = tuple(x - b * int(j == i) for j, x in enumerate(c))
            if k2 not in seen and all(x >= 0 for x in k2):
                seen[k2] = c2
                queue.append((k2, c2))
    return sorted(seen.items(), key=lambda kc: (sum(kc[0]), tuple(-x for x in kc[0])))


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def act(self, mu: Sequence[int]) -> Coweight:
        return tuple(_dot(row, mu) for row in self.matrix)


@dataclass(frozen=True)
class RootDatum:
    """A reduced root datum presented on its coweight lattice.

    ``simple_coroots`` are vectors in coweight coordinates and ``simple_roots``
    vectors in the dual coordinates; ``<mu, alpha> = dot(mu, alpha)``.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[Coweight, ...]
    simple_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[Coweight, ...] = field(repr=False)
    # positive_roots[k] is the root whose coroot is positive_coroots[k]
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        """Length of a coweight tuple."""
        return len(self.simple_coroots[0]) if self.simple_coroots else self.rank

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}" if self.family != "G2" else "G2"

    def check(self, mu: Sequence[int]) -> Coweight:
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.dim:
            raise DomainError(f"coweight {mu} has length {len(mu)}, expected {self.dim} for {self.name}")
        return mu

    def pairing(self, mu: Sequence[int], root: Sequence[int]) -> int:
        return _dot(mu, root)

    def reflect(self, i: int, mu: Sequence[int]) -> Coweight:
        k = _dot(mu, self.simple_roots[i])
        return tuple(m - k * a for m, a in zip(mu, self.simple_coroots[i]))

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(_dot(mu, a) >= 0 for a in self.simple_roots)

    def require_dominant(self, mu: Sequence[int]) -> Coweight:
        mu = self.check(mu)
        if not self.is_dominant(mu):
            raise DomainError(f"coweight {mu} is not dominant for {self.name}")
        return mu

    def dominant_representative(self, mu: Sequence[int]) -> Coweight:
        mu = tuple(mu)
        while True:
            for i, a in enumerate(self.simple_roots):
                if _dot(mu, a) < 0:
                    mu = self.reflect(i, mu)
                    break
            else:
                return mu

    def pair_rho2(self, mu: Sequence[int]) -> int:
        """``<mu, 2 rho>``, the sum of pairings with all positive roots."""
        return sum(_dot(mu, b) for b in self.positive_roots)

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """A Weyl-invariant symmetric form on coweights."""
        if self.family == "GL":
            return _dot(x, y)
        return sum(_dot(x, b) * _dot(y, b) for b in self.positive_roots)

    @property
    def two_rho_coroot(self) -> Coweight:
        """Sum of the positive coroots."""
        out = [0] * self.dim
        for b in self.positive_coroots:
            for k, v in enumerate(b):
                out[k] += v
        return tuple(out)

    def coroot_coordinates(self, mu: Sequence[int]) -> tuple[int, ...] | None:
        """Integer ``c`` with ``mu = sum c_i alpha_i^v``, or ``None`` off the coroot lattice."""
        mu = tuple(mu)
        r = len(self.simple_roots)
        if self.family == "GL":
            c, run = [], 0
            for x in mu[:-1]:
                run += x
                c.append(run)
            if run + (mu[-1] if mu else 0) != 0:
                return None
            return tuple(c)
        # mu_j = sum_i c_i A[i][j]: solve with A^T over the rationals
        m = [[Fraction(self.cartan[i][j]) for i in range(r)] + [Fraction(mu[j])] for j in range(r)]
        for col in range(r):
            piv = next(k for k in range(col, r) if m[k][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [v / p for v in m[col]]
            for k in range(r):
                if k != col and m[k][col] != 0:
                    f = m[k][col]
                    m[k] = [a - f * b for a, b in zip(m[k], m[col])]
        sol = [m[k][r] for k in range(r)]
        if any(v.denominator != 1 for v in sol):
            return None
        return tuple(int(v) for v in sol)

    @property
    def weyl_order(self) -> int:
        return _weyl_order(self.family, self.rank)


def build_root_datum(family: str, rank: int) -> RootDatum:
    """Construct the root datum of the given family and rank."""
    if family not in FAMILIES:
        raise ConfigurationError(f"unsupported family {family!r}; expected one of {FAMILIES}")
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f"rank must be a positive integer, got {rank!r}")
    return _build(family, rank)


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootDatum:
    if family == "GL":
        n = rank
        r = n - 1
        basis = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(r)]
        cartan = tuple(tuple(_dot(basis[i], basis[j]) for j in range(r)) for i in range(r))
        simple_coroots = tuple(basis)
        simple_roots = tuple(basis)
    else:
        cartan = cartan_matrix(family, rank)
        r = rank
        simple_coroots = tuple(tuple(row) for row in cartan)
        simple_roots = tuple(tuple(int(k == i) for k in range(r)) for i in range(r))

    A = cartan
    pairs = _positive_pairs(A)
    ro_coords = [k for k, _ in pairs]
    co_coords = [c for _, c in pairs]

    def combine(coords, vectors):
        dim = len(vectors[0]) if vectors else rank
        return tuple(
            tuple(sum(c[j] * vectors[j][k] for j in range(r)) for k in range(dim)) for c in coords
        )

    datum = RootDatum(
        family=family,
        rank=rank,
        cartan=A,
        simple_coroots=simple_coroots,
        simple_roots=simple_roots,
        positive_coroots=combine(co_coords, simple_coroots),
        positive_roots=combine(ro_coords, simple_roots),
    )
    if r and any(datum.pair_rho2(a) != 2 for a in simple_coroots):
        raise ConsistencyError(f"rho normalization failed for {datum.name}")
    return datum


# -- Weyl group


def _reflection_matrix(datum: RootDatum, i: int) -> tuple[tuple[int, ...], ...]:
    a_co, a = datum.simple_coroots[i], datum.simple_roots[i]
    d = datum.dim
    return tuple(tuple(int(x == y) - a_co[x] * a[y] for y in range(d)) for x in range(d))


def _matmul(m1, m2):
    cols = list(zip(*m2))
    return tuple(tuple(_dot(row, col) for col in cols) for row in m1)


def weyl_elements(datum: RootDatum, bound: int = DEFAULT_WEYL_BOUND) -> tuple[WeylElement, ...]:
    """All Weyl group elements with lexicographically least reduced words.

    Ordered by ``(length, word)``; the identity comes first.
    """
    if datum.weyl_order > bound:
        raise CapacityError(f"|W({datum.name})| = {datum.weyl_order} exceeds the bound {bound}")
    return _weyl_elements(datum, tuple(range(len(datum.simple_roots))))


@lru_cache(maxsize=None)
def _weyl_elements(datum: RootDatum, generators: tuple[int, ...]) -> tuple[WeylElement, ...]:
    gens = {i: _reflection_matrix(datum, i) for i in generators}
    d = datum.dim
    ident = tuple(tuple(int(x == y) for y in range(d)) for x in range(d))
    found = {ident: ()}
    layer = [((), ident)]
    out = [WeylElement((), ident)]
    while layer:
        nxt = []
        for word, mat in layer:
            for i in generators:
                m = _matmul(mat, gens[i])
                if m not in found:
                    found[m] = word + (i,)
                    nxt.append((word + (i,), m))
        nxt.sort()
        out.extend(WeylElement(w, m) for w, m in nxt)
        layer = nxt
    return tuple(out)


def pair_rho(datum: RootDatum, mu: Sequence[int]) -> Fraction:
    """``<mu, rho>`` where ``2 rho`` is the sum of the positive roots."""
    return Fraction(datum.pair_rho2(datum.check(mu)), 2)


def stratum_dimension(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """``<lam + nu, rho>``, which must be an integer when ``lam - nu`` is in the coroot lattice."""
    s = tuple(a + b for a, b in zip(lam, nu))
    two = datum.pair_rho2(s)
    if two % 2:
        raise ConsistencyError(f"<{tuple(lam)} + {tuple(nu)}, rho> = {two}/2 is not an integer")
    return two // 2


def orbit(datum: RootDatum, nu: Sequence[int]) -> frozenset[Coweight]:
    """The Weyl orbit of ``nu``."""
    nu = datum.check(nu)
    seen = {nu}
    queue = deque([nu])
    while queue:
        mu = queue.popleft()
        for i in range(len(datum.simple_roots)):
            m = datum.reflect(i, mu)
            if m not in seen:
                seen.add(m)
                queue.append(m)
    return frozenset(seen)


def dominant_below(datum: RootDatum, lam: Sequence[int]) -> tuple[Coweight, ...]:
    """Dominant ``nu`` with ``lam - nu`` a non-negative integer combination of simple coroots.

    Sorted by descending ``<nu, rho>`` and then lexicographically.
    """
    lam = datum.require_dominant(lam)
    return _dominant_below(datum, lam)


@lru_cache(maxsize=4096)
def _dominant_below(datum: RootDatum, lam: Coweight) -> tuple[Coweight, ...]:
    # The weights of V_lam form the saturated set generated by lam; its dominant
    # members are exactly the dominant coweights below lam.
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for b, b_root in zip(datum.positive_coroots, datum.positive_roots):
            k = _dot(mu, b_root)
            for j in range(1, k + 1):
                nu = datum.dominant_representative(tuple(m - j * x for m, x in zip(mu, b)))
                if nu not in seen:
                    seen.add(nu)
                    queue.append(nu)
    return tuple(sorted(seen, key=lambda nu: (-datum.pair_rho2(nu), nu)))


def stabilizer_poincare(datum: RootDatum, lam: Sequence[int]) -> LaurentPoly:
    """Poincare polynomial ``sum_{w in W_lam} t^l(w)`` of the stabilizer of ``lam``.

    Returned as a polynomial whose variable is ``t``.
    """
    lam = datum.require_dominant(lam)
    gens = tuple(i for i, a in enumerate(datum.simple_roots) if _dot(lam, a) == 0)
    acc: dict[int, int] = {}
    for w in _weyl_elements(datum, gens):
        acc[w.length] = acc.get(w.length, 0) + 1
    return LaurentPoly(acc)


def weyl_poincare(datum: RootDatum) -> LaurentPoly:
    acc: dict[int, int] = {}
    for w in weyl_elements(datum):
        acc[w.length] = acc.get(w.length, 0) + 1
    return LaurentPoly(acc)


def dominant_within_bound(datum: RootDatum, bound: int) -> tuple[Coweight, ...]:
    """Dominant coweights with ``<lam, 2 rho> <= bound``.

    For GL_n the central direction is unbounded, so there ``lam`` ranges over
    partitions (non-negative entries) with ``|lam| <= bound`` as well.
    """
    if bound < 0:
        raise ConfigurationError("bound must be non-negative")
    out = []
    if datum.family == "GL":
        n = datum.rank

        def parts(remaining, maxpart, k):
            if k == 0:
                yield ()
                return
            for p in range(min(remaining, maxpart), -1, -1):
                for rest in parts(remaining - p, p, k - 1):
                    yield (p,) + rest

        for size in range(bound + 1):
            for lam in parts(size, size, n):
                if sum(lam) == size and datum.pair_rho2(lam) <= bound:
                    out.append(lam)
    else:
        # <omega_i^v, 2 rho> >= 1, so each coordinate is at most bound
        r = datum.rank

        def rec(prefix):
            if len(prefix) == r:
                yield tuple(prefix)
                return
            for c in range(bound + 1):
                yield from rec(prefix + [c])

        for lam in rec([]):
            if datum.pair_rho2(lam) <= bound:
                out.append(lam)
    return tuple(sorted(out, key=lambda lam: (datum.pair_rho2(lam), lam)))

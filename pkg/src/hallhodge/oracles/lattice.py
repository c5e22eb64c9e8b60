"""Brute-force point counts of ``Gr^lam ∩ S_nu`` for GL_n over a prime field.

A lattice ``L`` with ``L_0 ⊆ L ⊆ t^-M L_0`` is the same thing as an
``F_p[t]``-submodule ``W = L / L_0`` of ``V = (t^-M O / O)^n``.  ``V`` is stored
as ``F_p^(nM)``: block ``i`` holds the coefficients of ``t^-M e_i, ..., t^-1 e_i``
in that order, and multiplication by ``t`` shifts every block one step right.

Conventions:

* Cartan type: ``W ≅ ⊕ F_p[t]/t^(a_i)``, ``lam = sorted(a, reverse=True)``, so
  ``t^-lam L_0`` has type ``lam``.
* Iwasawa type: ``nu_j`` is the largest pole order of the ``e_j`` coordinate on
  ``L ∩ span(e_j, ..., e_n)``, i.e. ``L = n^- t^-nu L_0`` with ``n^-`` lower
  unitriangular.  With this choice the big cell of ``Gr^(1,0) = P^1`` is ``S_(1,0)``.

Both are read off the reduced row echelon form of ``W``: ``nu_j`` is the number
of pivots in block ``j``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from ..errors import CapacityError, DomainError

Vector = tuple[int, ...]
DEFAULT_CAPACITY = 2 ** 24


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def rref(rows: Iterable[Sequence[int]], p: int) -> tuple[Vector, ...]:
    """Reduced row echelon form over F_p; zero rows dropped."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return ()
    width = len(m[0])
    rank = 0
    for col in range(width):
        piv = next((k for k in range(rank, len(m)) if m[k][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for k in range(len(m)):
            if k != rank and m[k][col]:
                f = m[k][col]
                m[k] = [(a - f * b) % p for a, b in zip(m[k], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return tuple(tuple(r) for r in m[:rank])


def _pivots(basis: Sequence[Vector]) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in basis]


def _reduce(v: Sequence[int], basis: Sequence[Vector], pivots: Sequence[int], p: int) -> list[int]:
    v = list(v)
    for r, c in zip(basis, pivots):
        if v[c]:
            f = v[c]
            v = [(a - f * b) % p for a, b in zip(v, r)]
    return v


def shift_t(v: Sequence[int], n: int, M: int) -> Vector:
    """Multiplication by ``t`` on ``V``."""
    out = []
    for i in range(n):
        block = v[i * M:(i + 1) * M]
        out.extend((0,) + tuple(block[:-1]))
    return tuple(out)


def cartan_type_of(basis: Sequence[Vector], n: int, M: int, p: int) -> tuple[int, ...]:
    dims = []
    cur = list(basis)
    for _ in range(M + 1):
        cur = list(rref(cur, p))
        dims.append(len(cur))
        cur = [shift_t(v, n, M) for v in cur]
    # number of cyclic summands of length > k is dim t^k W - dim t^(k+1) W
    longer = [dims[k] - dims[k + 1] for k in range(M)]
    # conjugate partition: a_j = #{k : more than j summands are longer than k}
    return tuple(sum(1 for k in range(M) if longer[k] > j) for j in range(n))


def iwasawa_type_of(basis: Sequence[Vector], n: int, M: int) -> tuple[int, ...]:
    counts = [0] * n
    for c in _pivots(basis):
        counts[c // M] += 1
    return tuple(counts)


@dataclass(frozen=True)
class LatticePoint:
    """A lattice ``t^-shift (L_0 + preimage of W)`` in the GL_n model over ``F_p``.

    ``basis`` is the reduced row echelon form of the submodule ``W``.
    """

    n: int
    M: int
    p: int
    basis: tuple[Vector, ...]
    shift: int = 0
    cartan_type: tuple[int, ...] = field(default=(), compare=False)
    iwasawa_type: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def from_generators(cls, n: int, M: int, p: int, generators: Iterable[Sequence[int]],
                        shift: int = 0) -> "LatticePoint":
        """The lattice generated over ``O`` by ``L_0`` and the given vectors of ``V``."""
        if n < 1 or M < 0:
            raise DomainError(f"bad lattice model n={n}, M={M}")
        if not _is_prime(p):
            raise DomainError(f"field size {p} is not a prime")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != n * M:
                raise DomainError(f"generator of length {len(g)}, expected {n * M}")
            gens.append(g)
        closure = []
        for g in gens:
            for _ in range(M):
                closure.append(g)
                g = shift_t(g, n, M)
        basis = rref(closure, p)
        return cls._certified(n, M, p, basis, shift)

    @classmethod
    def from_columns(cls, n: int, M: int, p: int, columns: Sequence[Sequence[Mapping[int, int]]],
                     shift: int = 0) -> "LatticePoint":
        """Lattice generated by ``L_0`` and columns of Laurent polynomials in ``t``.

        Each column is a length-``n`` list of ``{exponent: coefficient}``;
        non-negative exponents lie in ``L_0`` and are dropped.
        """
        gens = []
        for col in columns:
            if len(col) != n:
                raise DomainError(f"column of length {len(col)}, expected {n}")
            v = [0] * (n * M)
            for i, entry in enumerate(col):
                for e, c in entry.items():
                    if e >= 0:
                        continue
                    if -e > M:
                        raise DomainError(f"pole t^{e} exceeds the truncation t^-{M}")
                    v[i * M + (M + e)] = c % p
            gens.append(v)
        return cls.from_generators(n, M, p, gens, shift)

    @classmethod
    def _certified(cls, n, M, p, basis, shift):
        a = cartan_type_of(basis, n, M, p)
        nu = iwasawa_type_of(basis, n, M)
        return cls(n, M, p, basis, shift,
                   tuple(x + shift for x in a), tuple(x + shift for x in nu))

    def generator_rows(self) -> tuple[Vector, ...]:
        return self.basis


def classify_lattice(point: LatticePoint) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(cartan_type, iwasawa_type)`` recomputed from the generators."""
    n, M, p = point.n, point.M, point.p
    for r in point.basis:
        if len(r) != n * M or any(not 0 <= x < p for x in r):
            raise DomainError("malformed generator matrix")
    basis = rref(point.basis, p)
    for r in basis:
        if _reduce(shift_t(r, n, M), basis, _pivots(basis), p) != [0] * (n * M):
            raise DomainError("generators do not span an F_p[t]-submodule")
    a = cartan_type_of(basis, n, M, p)
    nu = iwasawa_type_of(basis, n, M)
    c = point.shift
    return tuple(x + c for x in a), tuple(x + c for x in nu)


def submodules(n: int, M: int, p: int) -> list[tuple[Vector, ...]]:
    """Every ``F_p[t]``-submodule of ``(F_p[t]/t^M)^n``, as RREF bases.

    Grown one dimension at a time: ``W + F_p v`` is a submodule whenever
    ``t v ∈ W``, and every non-zero submodule arises this way from a maximal one.
    """
    return list(_submodules(n, M, p))


@lru_cache(maxsize=None)
def _submodules(n: int, M: int, p: int) -> tuple[tuple[Vector, ...], ...]:
    dim = n * M
    found = [()]
    layer = {()}
    while layer:
        nxt = set()
        for W in sorted(layer):
            piv = _pivots(W)
            free = [c for c in range(dim) if c not in piv]
            for values in itertools.product(range(p), repeat=len(free)):
                nz = next((x for x in values if x), 0)
                if nz != 1:  # projective normalization, skips the zero vector
                    continue
                v = [0] * dim
                for c, x in zip(free, values):
                    v[c] = x
                if any(_reduce(shift_t(v, n, M), W, piv, p)):
                    continue
                nxt.add(rref(list(W) + [v], p))
        found.extend(sorted(nxt))
        layer = nxt
    return tuple(found)


@lru_cache(maxsize=None)
def _census(n: int, M: int, p: int) -> tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], int], ...]:
    counts: Counter = Counter()
    for W in _submodules(n, M, p):
        counts[(cartan_type_of(W, n, M, p), iwasawa_type_of(W, n, M))] += 1
    return tuple(sorted(counts.items()))


def _capacity_check(n: int, M: int, q0: int, capacity: int):
    if q0 ** (n * M * n) > capacity:
        raise CapacityError(f"q0^(n*M*n) = {q0}^{n * M * n} exceeds the capacity {capacity}")


def lattice_census(n: int, M: int, q0: int, capacity: int = DEFAULT_CAPACITY) -> dict:
    """``{(cartan_type, iwasawa_type): count}`` over all lattices between ``L_0`` and ``t^-M L_0``."""
    if not _is_prime(q0):
        raise DomainError(f"q0 = {q0} is not a prime")
    _capacity_check(n, M, q0, capacity)
    return dict(_census(n, M, q0))


def _normalize(n: int, lam: Sequence[int], nu: Sequence[int]):
    lam, nu = tuple(int(x) for x in lam), tuple(int(x) for x in nu)
    if len(lam) != n or len(nu) != n:
        raise DomainError(f"expected coweights of length {n}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not dominant")
    c = min(lam)
    return tuple(x - c for x in lam), tuple(x - c for x in nu)


def count_lattice_points(n: int, lam: Sequence[int], nu: Sequence[int], q0: int,
                         capacity: int = DEFAULT_CAPACITY) -> int:
    """``|Gr^lam ∩ S_nu (F_q0)|`` by exhaustive submodule enumeration."""
    lam, nu = _normalize(n, lam, nu)
    M = lam[0]
    return lattice_census(n, M, q0, capacity).get((lam, nu), 0)


def iwasawa_counts(n: int, lam: Sequence[int], q0: int, capacity: int = DEFAULT_CAPACITY) -> dict:
    """``{nu: |Gr^lam ∩ S_nu(F_q0)|}`` for every ``nu`` that occurs, in the original coordinates."""
    lam0 = tuple(int(x) for x in lam)
    lam, _ = _normalize(n, lam0, lam0)
    c = lam0[0] - lam[0]
    census = lattice_census(n, lam[0], q0, capacity)
    return {tuple(x + c for x in nu): k for (a, nu), k in sorted(census.items()) if a == lam}

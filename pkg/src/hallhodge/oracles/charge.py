"""Type A Hall-Littlewood polynomials from Kostka-Foulkes polynomials.

``K_{lam,mu}(t)`` is the charge generating function of semistandard tableaux of
shape ``lam`` and content ``mu``; inverting ``s_lam = sum_mu K_{lam,mu}(t) P_mu``
gives ``P_lam`` without any Weyl symmetrization.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import DomainError
from ..laurent import LaurentPoly
from ..rootdata import build_root_datum
from ..symfunc import SymmetricFunction

Partition = tuple[int, ...]


def _strip(p: Sequence[int]) -> Partition:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _check_partition(p: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise DomainError(f"{p} is not a partition")
    return _strip(p)


def partitions(n: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order (so ``(n,)`` first)."""
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return a == b


def _horizontal_strips(shape: Partition, size: int) -> Iterator[Partition]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes."""
    rows = list(shape) + [0]

    def rec(i, remaining, acc):
        if i == len(rows):
            if remaining == 0:
                yield _strip(acc)
            return
        cap = remaining if i == 0 else min(remaining, shape[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, remaining - add, acc + [rows[i] + add])

    yield from rec(0, size, [])


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux (rows of entries, English notation) of given shape and content."""
    shape = _check_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return []
    out = []

    def rec(value, cur, fill):
        if value > len(content):
            if cur == shape:
                out.append(tuple(tuple(r) for r in fill))
            return
        for nxt in _horizontal_strips(cur, content[value - 1]):
            if len(nxt) > len(shape) or any(a > b for a, b in zip(nxt, shape)):
                continue
            rows = [list(r) for r in fill] + [[] for _ in range(len(nxt) - len(fill))]
            for i, length in enumerate(nxt):
                rows[i].extend([value] * (length - (cur[i] if i < len(cur) else 0)))
            rec(value + 1, nxt, rows)

    rec(1, (), [])
    return out


def reading_word(tableau: Sequence[Sequence[int]]) -> list[int]:
    """Rows from bottom to top, each left to right."""
    return [x for row in reversed(tableau) for x in row]


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word whose content is a partition."""
    letters = list(enumerate(word))
    total = 0
    while letters:
        n = len(letters)
        pos = None
        for k in range(n - 1, -1, -1):
            if letters[k][1] == 1:
                pos = k
                break
        if pos is None:
            raise DomainError(f"content of {list(word)} is not a partition")
        chosen = [pos]
        index = 0
        letter = 1
        while True:
            letter += 1
            found = None
            wrapped = False
            k = pos
            for _ in range(n - 1):
                k -= 1
                if k < 0:
                    k = n - 1
                    wrapped = True
                if letters[k][1] == letter:
                    found = k
                    break
            if found is None:
                break
            if wrapped:
                index += 1
            total += index
            chosen.append(found)
            pos = found
        letters = [x for i, x in enumerate(letters) if i not in set(chosen)]
    return total


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    return len(semistandard_tableaux(lam, _strip(mu)))


@lru_cache(maxsize=None)
def _kf(lam: Partition, mu: Partition) -> LaurentPoly:
    acc: dict[int, int] = {}
    for tab in semistandard_tableaux(lam, mu):
        c = charge(reading_word(tab))
        acc[c] = acc.get(c, 0) + 1
    return LaurentPoly(acc)


def kostka_foulkes_charge(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """``K_{lam,mu}(t)`` as a polynomial in ``t``."""
    lam, mu = _check_partition(lam), _check_partition(mu)
    if sum(lam) != sum(mu):
        raise DomainError(f"|{lam}| != |{mu}|")
    return _kf(lam, mu)


@lru_cache(maxsize=None)
def _hl_t(lam: Partition, n: int) -> tuple[tuple[Partition, LaurentPoly], ...]:
    """``P_lam`` in ``n`` variables, m-basis, coefficients in ``t``."""
    size = sum(lam)
    parts = partitions(size, n)
    # s_lam in the m-basis
    acc: dict[Partition, LaurentPoly] = {}
    for nu in parts:
        k = kostka_number(lam, nu)
        if k:
            acc[nu] = LaurentPoly.const(k)
    for mu in parts:
        if mu == lam or not dominates(lam, mu):
            continue
        kf = _kf(lam, mu)
        if not kf:
            continue
        for nu, c in _hl_t(mu, n):
            acc[nu] = acc.get(nu, LaurentPoly()) - kf * c
    return tuple((nu, c) for nu, c in acc.items() if c)


def hl_charge_typeA(n: int, lam: Sequence[int]) -> SymmetricFunction:
    """``P_lam`` for GL_n via the inverse Kostka-Foulkes matrix, with ``t = q^-1``."""
    lam = _check_partition(lam)
    if len(lam) > n:
        raise DomainError(f"{lam} has more than {n} parts")
    datum = build_root_datum("GL", n)
    pad = lambda p: tuple(p) + (0,) * (n - len(p))
    return SymmetricFunction(datum, {pad(nu): c.invert_variable() for nu, c in _hl_t(lam, n)})

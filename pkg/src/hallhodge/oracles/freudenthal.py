"""Weight multiplicities of irreducible highest-weight modules by Freudenthal's recursion.

The module lives on the coweight lattice, so its roots are the coroots of the
datum and ``rho`` below is half the sum of positive coroots.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..errors import CapacityError, ConsistencyError
from ..rootdata import Coweight, RootDatum, dominant_below

DEFAULT_RHO_BOUND = 24


def dominant_multiplicities(datum: RootDatum, lam: Sequence[int],
                            rho_bound: int = DEFAULT_RHO_BOUND) -> dict[Coweight, int]:
    """Multiplicity of every dominant weight of ``V_lam``."""
    lam = datum.require_dominant(lam)
    if datum.pair_rho2(lam) > rho_bound:
        raise CapacityError(f"<2 lam, rho> = {datum.pair_rho2(lam)} for lam = {lam} exceeds {rho_bound}")
    return dict(_multiplicities(datum, lam))


@lru_cache(maxsize=1024)
def _multiplicities(datum: RootDatum, lam: Coweight) -> tuple[tuple[Coweight, int], ...]:
    B = datum.form
    two_rho = datum.two_rho_coroot
    top = tuple(2 * a + b for a, b in zip(lam, two_rho))
    top_norm = B(top, top)
    mult: dict[Coweight, int] = {}
    # dominant_below lists higher weights first, so every mu + k beta is already known
    for mu in dominant_below(datum, lam):
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for beta in datum.positive_coroots:
            k = 1
            while True:
                shifted = tuple(m + k * b for m, b in zip(mu, beta))
                rep = datum.dominant_representative(shifted)
                m = mult.get(rep)
                if m is None:
                    break
                total += m * B(shifted, beta)
                k += 1
        cur = tuple(2 * a + b for a, b in zip(mu, two_rho))
        den = top_norm - B(cur, cur)
        value = Fraction(8 * total, den)
        if den <= 0 or value.denominator != 1:
            raise ConsistencyError(f"Freudenthal recursion is not integral at {mu} for lam = {lam}")
        mult[mu] = int(value)
    return tuple(mult.items())


def freudenthal_multiplicity(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of the weight ``nu`` in ``V_lam``; zero for non-weights."""
    nu = datum.check(nu)
    return dominant_multiplicities(datum, lam).get(datum.dominant_representative(nu), 0)

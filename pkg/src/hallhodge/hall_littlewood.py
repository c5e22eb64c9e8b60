"""Hall-Littlewood polynomials by exact Weyl symmetrization.

    P_lam = v_lam(t)^-1 sum_{w in W} w( x^lam prod_{a > 0} (1 - t x^-a) / (1 - x^-a) )

with the product over positive coroots and ``t = q^-1``.  Writing
``Delta = prod_{a>0} (1 - x^-a)`` one has ``w(Delta) = sign(w) x^(rho - w rho) Delta``
(``rho`` half the sum of positive coroots), so the whole sum is a single
numerator over ``Delta``; that numerator is divided by each factor ``1 - x^-a``
exactly, then each m-coefficient by ``v_lam(q^-1)``.

Internally a group algebra element over ``Z[q, q^-1]`` is a flat ``dict`` from
``exponent + (q-exponent,)`` to ``int``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapacityError, ConsistencyError, DomainError
from .laurent import LaurentPoly
from .oracles.freudenthal import dominant_multiplicities
from .rootdata import (
    DEFAULT_WEYL_BOUND,
    Coweight,
    RootDatum,
    dominant_below,
    stabilizer_poincare,
    weyl_elements,
)
from .symfunc import GroupAlgebraElement, SymmetricFunction, to_m_basis

DEFAULT_RHO_BOUND = 12


@dataclass(frozen=True)
class HLPolynomial:
    datum: RootDatum
    lam: Coweight
    expansion: SymmetricFunction

    def __str__(self):
        return str(self.expansion)


def _mul_flat(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def divide_binomial(f: dict, beta: Sequence[int]) -> dict:
    """Exact quotient ``f / (1 - x^beta)`` for a flat group-algebra element.

    Along each string ``mu + k beta`` the quotient satisfies
    ``g_mu = f_mu + g_(mu - beta)``, a running sum from the bottom of the
    string that must return to zero past its top.
    """
    i = next(k for k, b in enumerate(beta) if b)
    strings: dict = {}
    for mu, c in f.items():
        k = mu[i] // beta[i]
        base = tuple(m - k * b for m, b in zip(mu, beta))
        strings.setdefault(base, {})[k] = c
    out: dict = {}
    for base, coeffs in strings.items():
        run = 0
        for k in range(min(coeffs), max(coeffs) + 1):
            run += coeffs.get(k, 0)
            if run:
                out[tuple(x + k * b for x, b in zip(base, beta))] = run
        if run:
            raise ConsistencyError(f"numerator is not divisible by (1 - x^{list(beta[:-1])})")
    return out


def _symmetrized_numerator(datum: RootDatum, lam: Coweight) -> dict:
    d = datum.dim
    num = {lam + (0,): 1}
    for a in datum.positive_coroots:
        num = _mul_flat(num, {(0,) * d + (0,): 1, tuple(-x for x in a) + (-1,): -1})
    two_rho = datum.two_rho_coroot
    total: dict = {}
    for w in weyl_elements(datum):
        moved = w.act(two_rho)
        diff = [m - r for m, r in zip(moved, two_rho)]
        if any(x % 2 for x in diff):
            raise ConsistencyError(f"w rho - rho is not integral for w = {w.word}")
        shift = [x // 2 for x in diff]
        sign = w.sign
        for key, c in num.items():
            mu = w.act(key[:-1])
            k = tuple(m + s for m, s in zip(mu, shift)) + (key[-1],)
            v = total.get(k, 0) + sign * c
            if v:
                total[k] = v
            else:
                total.pop(k, None)
    return total


def hall_littlewood(datum: RootDatum, lam: Sequence[int], rho_bound: int = DEFAULT_RHO_BOUND,
                    weyl_bound: int = DEFAULT_WEYL_BOUND) -> HLPolynomial:
    """``P_lam`` in the m-basis with coefficients in ``Z[q^-1]``."""
    lam = datum.require_dominant(lam)
    if datum.pair_rho2(lam) > rho_bound:
        raise CapacityError(f"<2 lam, rho> = {datum.pair_rho2(lam)} for lam = {lam} exceeds {rho_bound}")
    if datum.weyl_order > weyl_bound:
        raise CapacityError(f"|W({datum.name})| = {datum.weyl_order} exceeds the bound {weyl_bound}")

    flat = _symmetrized_numerator(datum, lam)
    for a in datum.positive_coroots:
        flat = divide_binomial(flat, tuple(-x for x in a) + (0,))

    grouped: dict[Coweight, dict[int, int]] = {}
    for key, c in flat.items():
        grouped.setdefault(key[:-1], {})[key[-1]] = c
    element = GroupAlgebraElement(datum.dim, {mu: LaurentPoly(cs) for mu, cs in grouped.items()})
    sym = to_m_basis(datum, element)

    v = stabilizer_poincare(datum, lam).invert_variable()
    expansion = sym.map_coefficients(lambda c: c.exact_div(v))
    _certify(datum, lam, expansion)
    return HLPolynomial(datum, lam, expansion)


def _certify(datum: RootDatum, lam: Coweight, expansion: SymmetricFunction):
    if expansion.coefficient(lam) != LaurentPoly.const(1):
        raise ConsistencyError(f"coefficient of m_{list(lam)} in P_{list(lam)} is {expansion.coefficient(lam)}")
    allowed = set(dominant_below(datum, lam))
    for nu, c in expansion.items():
        if nu not in allowed:
            raise ConsistencyError(f"m_{list(nu)} occurs in P_{list(lam)} but is not below it")
        if c and c.degree() > 0:
            raise ConsistencyError(f"coefficient {c} of m_{list(nu)} has a positive power of q")


def weyl_character(datum: RootDatum, lam: Sequence[int]) -> SymmetricFunction:
    """The irreducible character of highest coweight ``lam``, via Freudenthal multiplicities."""
    return SymmetricFunction(datum, dominant_multiplicities(datum, lam))


def specialize_t(p: HLPolynomial | SymmetricFunction, t0: int) -> SymmetricFunction:
    """Substitute ``t = q^-1 -> t0`` in every coefficient."""
    f = p.expansion if isinstance(p, HLPolynomial) else p

    def sub(c: LaurentPoly) -> LaurentPoly:
        if c and c.degree() > 0:
            raise DomainError(f"coefficient {c} is not a polynomial in t = q^-1")
        return LaurentPoly.const(sum(k * t0 ** (-e) for e, k in c.items()))

    return f.map_coefficients(sub)

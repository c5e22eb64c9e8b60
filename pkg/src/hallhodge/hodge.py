"""Point counts / Hodge-Euler characteristics of ``Gr^lam ∩ S_nu`` read off ``P_lam``.

For dominant ``nu``: ``L_{lam,nu}(q) = q^<lam+nu, rho> * [m_nu] P_lam``.  A
table is certified when it is built: every ``L`` is a polynomial of degree
``<lam + nu, rho>`` whose expansion in powers of ``q - 1`` is non-negative,
and ``L(1)`` is 1 on the diagonal and 0 elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionViolation, DomainError, PolynomialityViolation, PositivityViolation
from .hall_littlewood import HLPolynomial
from .laurent import LaurentPoly
from .rootdata import Coweight, RootDatum, orbit, stabilizer_poincare, stratum_dimension, weyl_poincare


@dataclass(frozen=True)
class EulerRow:
    L: LaurentPoly
    dimension: int
    qm1: tuple[int, ...]


@dataclass(frozen=True)
class EulerTable:
    datum: RootDatum
    lam: Coweight
    rows: dict  # dominant nu -> EulerRow, ordered as in P_lam

    def __iter__(self):
        return iter(self.rows.items())

    def __len__(self):
        return len(self.rows)

    def polynomials(self) -> dict[Coweight, LaurentPoly]:
        return {nu: row.L for nu, row in self.rows.items()}

    def _row(self, nu: Sequence[int]) -> EulerRow | None:
        nu = self.datum.check(nu)
        if not self.datum.is_dominant(nu):
            raise DomainError(f"{nu} is not dominant; the table only covers dominant nu")
        return self.rows.get(nu)


def qm1_expand(L: LaurentPoly) -> tuple[int, ...]:
    """``c`` with ``L(q) = sum_j c_j (q - 1)^j``; every ``c_j`` must be non-negative."""
    if not L.is_polynomial():
        raise DomainError(f"{L} is not a polynomial in q")
    c = L.qm1_coefficients()
    if any(x < 0 for x in c):
        raise PositivityViolation(f"{L} = sum {c} (q-1)^j has a negative coefficient")
    return tuple(c)


def euler_table(p: HLPolynomial) -> EulerTable:
    datum, lam = p.datum, p.lam
    rows = {}
    for nu, coeff in p.expansion.items():
        dim = stratum_dimension(datum, lam, nu)
        L = coeff.shift(dim)
        if not L.is_polynomial():
            raise PolynomialityViolation(f"L_{list(lam)},{list(nu)} = {L} has negative powers of q")
        if L.degree() != dim:
            raise DimensionViolation(f"deg L_{list(lam)},{list(nu)} = {L.degree()} but <lam+nu, rho> = {dim}")
        qm1 = qm1_expand(L)
        at_one = qm1[0] if qm1 else 0
        if at_one != (1 if nu == lam else 0):
            raise PositivityViolation(f"L_{list(lam)},{list(nu)}(1) = {at_one}")
        rows[nu] = EulerRow(L, dim, qm1)
    return EulerTable(datum, lam, rows)


def predict_point_count(table: EulerTable, nu: Sequence[int], q0: int) -> int:
    """``L_{lam,nu}(q0)``; zero for dominant ``nu`` outside the support (empty intersection)."""
    if q0 < 2:
        raise DomainError(f"q0 = {q0} is not a field size")
    row = table._row(nu)
    return 0 if row is None else row.L(q0)


def topological_euler(table: EulerTable, nu: Sequence[int]) -> int:
    row = table._row(nu)
    return 0 if row is None else row.L(1)


def cartan_stratum_count(datum: RootDatum, lam: Sequence[int]) -> LaurentPoly:
    """``|Gr^lam(F_q)| = q^<2 lam, rho> W(q^-1) / W_lam(q^-1)`` as a polynomial in ``q``."""
    lam = datum.require_dominant(lam)
    w = weyl_poincare(datum).invert_variable()
    w_lam = stabilizer_poincare(datum, lam).invert_variable()
    return w.exact_div(w_lam).shift(datum.pair_rho2(lam))


def orbit_sum_estimate(table: EulerTable, q0: int) -> int:
    """Heuristic ``sum_nu |W nu| L_{lam,nu}(q0)`` over dominant rows.

    Treats every ``nu`` in a Weyl orbit as having the dominant representative's
    count.  This is not an identity (for GL_2 and ``lam = (1,0)`` it gives
    ``2q`` against ``q + 1`` points); compare with :func:`cartan_stratum_count`.
    """
    return sum(len(orbit(table.datum, nu)) * row.L(q0) for nu, row in table)

"""Named verification suites run by ``hallhodge verify``.

Each suite yields :class:`Check` records; a suite passes iff every check does.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ConfigurationError, HallHodgeError
from .hall_littlewood import hall_littlewood, specialize_t, weyl_character
from .hodge import cartan_stratum_count, euler_table, predict_point_count
from .oracles.charge import hl_charge_typeA
from .oracles.freudenthal import freudenthal_multiplicity
from .oracles.lattice import iwasawa_counts
from .rootdata import RootDatum, orbit
from .symfunc import SymmetricFunction

SUITES = ("typeA-charge", "weyl-char", "specializations", "positivity", "lattice-count")


@dataclass(frozen=True)
class Check:
    suite: str
    instance: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.suite} {self.instance}: expected {self.expected}, got {self.actual}"


def _shift(f: SymmetricFunction, datum: RootDatum, c: int) -> SymmetricFunction:
    return SymmetricFunction(datum, {tuple(x + c for x in nu): v for nu, v in f.items()})


def _typea(datum: RootDatum, lams, q0s) -> Iterator[Check]:
    if datum.family != "GL":
        raise ConfigurationError("typeA-charge needs a GL datum")
    for lam in lams:
        c = min(lam)
        expected = _shift(hl_charge_typeA(datum.rank, tuple(x - c for x in lam)), datum, c)
        actual = hall_littlewood(datum, lam).expansion
        yield Check("typeA-charge", f"lambda={list(lam)}", str(expected), str(actual), expected == actual)


def weyl_dimension(datum: RootDatum, lam: Sequence[int]) -> int:
    """Weyl dimension formula for the module of highest coweight ``lam``."""
    rho2 = datum.two_rho_coroot
    num = prod(datum.pairing(tuple(2 * a + b for a, b in zip(lam, rho2)), r) for r in datum.positive_roots)
    den = prod(datum.pairing(rho2, r) for r in datum.positive_roots)
    value = Fraction(num, den)
    return int(value) if value.denominator == 1 else value


def _weyl_char(datum: RootDatum, lams, q0s) -> Iterator[Check]:
    for lam in lams:
        table = euler_table(hall_littlewood(datum, lam))
        for nu, row in table:
            m = freudenthal_multiplicity(datum, lam, nu)
            yield Check("weyl-char", f"lambda={list(lam)} nu={list(nu)} leading coefficient",
                        str(m), str(row.L.leading_coefficient()), m == row.L.leading_coefficient())
        chi = weyl_character(datum, lam)
        total = sum(len(orbit(datum, nu)) * c(1) for nu, c in chi.items())
        dim = weyl_dimension(datum, lam)
        yield Check("weyl-char", f"lambda={list(lam)} dimension", str(dim), str(total), dim == total)


def _specializations(datum: RootDatum, lams, q0s) -> Iterator[Check]:
    for lam in lams:
        p = hall_littlewood(datum, lam)
        chi = weyl_character(datum, lam)
        at0 = specialize_t(p, 0)
        yield Check("specializations", f"lambda={list(lam)} t=0", str(chi), str(at0), at0 == chi)
        m = SymmetricFunction(datum, {lam: 1})
        at1 = specialize_t(p, 1)
        yield Check("specializations", f"lambda={list(lam)} t=1", str(m), str(at1), at1 == m)


def _positivity(datum: RootDatum, lams, q0s) -> Iterator[Check]:
    for lam in lams:
        try:
            table = euler_table(hall_littlewood(datum, lam))
        except HallHodgeError as exc:
            yield Check("positivity", f"lambda={list(lam)}", "certified table", repr(exc), False)
            continue
        for nu, row in table:
            ok = all(c >= 0 for c in row.qm1) and row.L.degree() == row.dimension
            yield Check("positivity", f"lambda={list(lam)} nu={list(nu)} L={row.L}",
                        f"deg {row.dimension}, (q-1)-coefficients >= 0",
                        f"deg {row.L.degree()}, {list(row.qm1)}", ok)


def _lattice(datum: RootDatum, lams, q0s) -> Iterator[Check]:
    if datum.family != "GL":
        raise ConfigurationError("lattice-count needs a GL datum")
    n = datum.rank
    for lam in lams:
        table = euler_table(hall_littlewood(datum, lam))
        total_poly = cartan_stratum_count(datum, lam)
        for q0 in q0s:
            counts = iwasawa_counts(n, lam, q0)
            for nu, count in counts.items():
                if datum.is_dominant(nu):
                    pred = predict_point_count(table, nu, q0)
                    yield Check("lattice-count", f"lambda={list(lam)} nu={list(nu)} q0={q0}",
                                str(pred), str(count), pred == count)
            for nu in table.rows:
                if nu not in counts:
                    yield Check("lattice-count", f"lambda={list(lam)} nu={list(nu)} q0={q0}",
                                str(predict_point_count(table, nu, q0)), "0", False)
            total = sum(counts.values())
            yield Check("lattice-count", f"lambda={list(lam)} q0={q0} |Gr^lambda|",
                        str(total_poly(q0)), str(total), total == total_poly(q0))


RUNNERS = {
    "typeA-charge": _typea,
    "weyl-char": _weyl_char,
    "specializations": _specializations,
    "positivity": _positivity,
    "lattice-count": _lattice,
}


def run_suite(suite: str, datum: RootDatum, lams, q0s=(2, 3)) -> list[Check]:
    if suite not in RUNNERS:
        raise ConfigurationError(f"unknown suite {suite!r}; expected one of {SUITES}")
    return list(RUNNERS[suite](datum, lams, q0s))

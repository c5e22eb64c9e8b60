"""Weyl-invariant elements of the group algebra of the coweight lattice over
``Z[q, q^-1]`` and their expansion in the monomial basis ``m_nu``.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InvarianceError
from .laurent import LaurentPoly, ONE, parse_laurent
from .rootdata import Coweight, RootDatum, orbit


class GroupAlgebraElement:
    """Finite sum ``sum_mu c_mu x^mu`` with Laurent-polynomial coefficients."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], LaurentPoly | int] = None):
        self.rank = rank
        acc: dict[Coweight, LaurentPoly] = {}
        for mu, c in (terms or {}).items():
            mu = tuple(mu)
            if len(mu) != rank:
                raise DomainError(f"exponent {mu} does not have rank {rank}")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            acc[mu] = acc.get(mu, LaurentPoly()) + c
        self._terms = {mu: acc[mu] for mu in sorted(acc) if acc[mu]}

    @classmethod
    def monomial(cls, mu: Sequence[int], c: LaurentPoly | int = 1) -> "GroupAlgebraElement":
        return cls(len(mu), {tuple(mu): c})

    @property
    def terms(self) -> dict[Coweight, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mu: Sequence[int]) -> LaurentPoly:
        return self._terms.get(tuple(mu), LaurentPoly())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, tuple(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*x^{list(mu)}" for mu, c in self._terms.items()) or "0"
        return f"GroupAlgebraElement({body})"

    def _same_rank(self, other: "GroupAlgebraElement"):
        if self.rank != other.rank:
            raise DomainError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._same_rank(other)
        acc = dict(self._terms)
        for mu, c in other._terms.items():
            acc[mu] = acc.get(mu, LaurentPoly()) + c
        return GroupAlgebraElement(self.rank, acc)

    def __neg__(self):
        return GroupAlgebraElement(self.rank, {mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return GroupAlgebraElement(self.rank, {mu: c * other for mu, c in self._terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product: exponents add, coefficients multiply."""
    a._same_rank(b)
    acc: dict[Coweight, LaurentPoly] = {}
    for mu, c in a._terms.items():
        for nu, d in b._terms.items():
            key = tuple(x + y for x, y in zip(mu, nu))
            acc[key] = acc.get(key, LaurentPoly()) + c * d
    return GroupAlgebraElement(a.rank, acc)


def monomial_sym(datum: RootDatum, nu: Sequence[int]) -> GroupAlgebraElement:
    """``m_nu``: the sum of ``x^mu`` over the Weyl orbit of dominant ``nu``."""
    nu = datum.require_dominant(nu)
    return GroupAlgebraElement(datum.dim, {mu: ONE for mu in orbit(datum, nu)})


def sort_key(datum: RootDatum):
    return lambda nu: (-datum.pair_rho2(nu), nu)


class SymmetricFunction:
    """An m-basis expansion ``sum_nu c_nu m_nu`` over dominant ``nu``."""

    __slots__ = ("datum", "_coeffs")

    def __init__(self, datum: RootDatum, coeffs: Mapping[Sequence[int], LaurentPoly | int] = None):
        self.datum = datum
        acc: dict[Coweight, LaurentPoly] = {}
        for nu, c in (coeffs or {}).items():
            nu = datum.require_dominant(nu)
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            acc[nu] = acc.get(nu, LaurentPoly()) + c
        self._coeffs = {nu: acc[nu] for nu in sorted(acc, key=sort_key(datum)) if acc[nu]}

    @property
    def coeffs(self) -> dict[Coweight, LaurentPoly]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def support(self) -> tuple[Coweight, ...]:
        return tuple(self._coeffs)

    def coefficient(self, nu: Sequence[int]) -> LaurentPoly:
        return self._coeffs.get(tuple(nu), LaurentPoly())

    def map_coefficients(self, f) -> "SymmetricFunction":
        return SymmetricFunction(self.datum, {nu: f(c) for nu, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self.datum == other.datum and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.datum.name, tuple(self._coeffs.items())))

    def __add__(self, other):
        acc = dict(self._coeffs)
        for nu, c in other._coeffs.items():
            acc[nu] = acc.get(nu, LaurentPoly()) + c
        return SymmetricFunction(self.datum, acc)

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def to_group_algebra(self) -> GroupAlgebraElement:
        acc = {}
        for nu, c in self._coeffs.items():
            for mu in orbit(self.datum, nu):
                acc[mu] = c
        return GroupAlgebraElement(self.datum.dim, acc)

    def __repr__(self):
        return f"SymmetricFunction({self.datum.name}: {self})"

    def __str__(self):
        return render_symmetric(self)


def to_m_basis(datum: RootDatum, e: GroupAlgebraElement) -> SymmetricFunction:
    """Read off m-basis coefficients, checking that ``e`` is constant on Weyl orbits."""
    if e.rank != datum.dim:
        raise DomainError(f"rank mismatch: element of rank {e.rank}, datum {datum.name}")
    terms = e.terms
    out: dict[Coweight, LaurentPoly] = {}
    done: set[Coweight] = set()
    for mu, c in terms.items():
        if mu in done:
            continue
        nu = datum.dominant_representative(mu)
        for other in orbit(datum, nu):
            if terms.get(other, LaurentPoly()) != c:
                raise InvarianceError(
                    f"not Weyl invariant: coefficient of x^{list(mu)} is {c} but of x^{list(other)} is "
                    f"{terms.get(other, LaurentPoly())}",
                    pair=(mu, other),
                )
            done.add(other)
        out[nu] = c
    return SymmetricFunction(datum, out)


# -- text form: "m[2,0] + (1 - q^-1)·m[1,1]"

MUL = "·"


def _m(nu: Sequence[int]) -> str:
    return "m[" + ",".join(str(x) for x in nu) + "]"


def render_symmetric(f: SymmetricFunction, var: str = "q") -> str:
    parts = []
    for i, (nu, c) in enumerate(f.items()):
        negative = c.is_single_term() and c.leading_coefficient() < 0
        mag = -c if negative else c
        if mag == ONE:
            body = _m(nu)
        elif mag.is_single_term():
            body = mag.to_str(var) + MUL + _m(nu)
        else:
            body = "(" + mag.to_str(var) + ")" + MUL + _m(nu)
        if i == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) or "0"


_M_TERM = re.compile(r"^(.*?)[·*]?\s*m\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$", re.S)


def parse_symmetric(datum: RootDatum, text: str, var: str = "q") -> SymmetricFunction:
    """Inverse of :func:`render_symmetric`."""
    s = text.strip()
    if s == "0":
        return SymmetricFunction(datum)
    pieces: list[tuple[int, str]] = []
    depth, start, sign = 0, 0, 1
    for k, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and k > 0 and s[k - 1] == " ":
            pieces.append((sign, s[start:k]))
            sign, start = (1 if ch == "+" else -1), k + 1
    pieces.append((sign, s[start:]))
    coeffs: dict[Coweight, LaurentPoly] = {}
    for sgn, piece in pieces:
        piece = piece.strip()
        m = _M_TERM.match(piece)
        if not m:
            raise DomainError(f"cannot parse term {piece!r} of {text!r}")
        head, nu_text = m.group(1).strip(), m.group(2) or ""
        nu = tuple(int(x) for x in nu_text.split(",")) if nu_text else ()
        if head in ("", "+"):
            c = ONE
        elif head == "-":
            c = -ONE
        else:
            neg = head.startswith("-")
            if neg:
                head = head[1:].strip()
            if head.startswith("(") and head.endswith(")"):
                head = head[1:-1]
            c = parse_laurent(head, var)
            if neg:
                c = -c
        coeffs[nu] = coeffs.get(nu, LaurentPoly()) + c * sgn
    return SymmetricFunction(datum, coeffs)

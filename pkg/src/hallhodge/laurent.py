"""Sparse Laurent polynomials in one variable with big-integer coefficients.

The variable is ``q`` by default; ``t = q^-1`` is obtained with :meth:`LaurentPoly.invert_variable`.
The canonical text form lists terms by descending exponent, e.g. ``"q^2 - q"``
or ``"1 - q^-1"``; :func:`parse_laurent` reads the same grammar back.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .errors import ConsistencyError, DomainError


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return self.to_str()

    # -- structure

    def degree(self) -> int:
        if not self._terms:
            raise DomainError("degree of the zero polynomial")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise DomainError("low degree of the zero polynomial")
        return min(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[self.degree()]

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_polynomial(self) -> bool:
        """True when no negative exponents occur."""
        return all(e >= 0 for e in self._terms)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``var -> var^-1`` (exchanges the q- and t-pictures)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise DomainError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise DomainError("negative power of a non-unit monomial")
            return LaurentPoly({-e * (-n): c ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient of an exact division; raises :class:`ConsistencyError` on a remainder."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        lo_d, hi_d = divisor.low_degree(), divisor.degree()
        lead = divisor._terms[hi_d]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        floor = self.low_degree() - lo_d
        while rem:
            top = max(rem)
            e = top - hi_d
            if e < floor:
                break
            c, r = divmod(rem[top], lead)
            if r:
                break
            quot[e] = c
            for de, dc in divisor._terms.items():
                k = e + de
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise ConsistencyError(f"({self}) is not divisible by ({divisor})")
        return LaurentPoly(quot)

    def __call__(self, x):
        """Evaluate exactly; an ``int`` unless negative exponents force a ``Fraction``."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def qm1_coefficients(self) -> list[int]:
        """Coefficients ``c`` with ``self = sum_j c[j] (var - 1)^j`` (polynomials only)."""
        if not self.is_polynomial():
            raise DomainError(f"{self} is not a polynomial")
        if not self:
            return []
        out = [0] * (self.degree() + 1)
        for e, c in self._terms.items():
            for j in range(e + 1):
                out[j] += c * comb(e, j)
        while out and out[-1] == 0:
            out.pop()
        return out

    # -- text

    def to_str(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(sorted(self._terms.items(), reverse=True)):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def is_single_term(self) -> bool:
        return len(self._terms) == 1


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(?:([A-Za-z])(?:\^(-?\d+))?)?\s*")


def parse_laurent(text: str, var: str = "q") -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.to_str`; also tolerates spacing variations."""
    s = text.strip()
    if not s:
        raise DomainError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, coeff, name, exp = m.groups()
        if m.end() == pos or (coeff is None and name is None):
            raise DomainError(f"cannot parse polynomial {text!r} at offset {pos}")
        if sign is None and not first:
            raise DomainError(f"missing operator in {text!r} at offset {pos}")
        if name is not None and name != var:
            raise DomainError(f"unexpected variable {name!r} in {text!r}")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        e = 0 if name is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
T = LaurentPoly.monomial(-1)  # t = q^-1

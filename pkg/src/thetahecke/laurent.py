"""Exact Laurent arithmetic in a half-integer power of a deformation variable.

The ground ring is Z[v, v^-1] where v**2 = nu, the deformation variable.
A ring element is stored as a sparse map ``{e: c}`` meaning ``sum c * nu**(e/2)``,
with integer coefficients and integer exponent numerators (denominator fixed
at 2).  Two specializations are supported exactly:

* ``nu = 1``  -- the integer obtained by summing all coefficients;
* ``nu = q``  -- for an integer q >= 2, a value ``a + b*sqrt(q)`` with exact
  rational ``a``, ``b`` (a plain Fraction when q is a perfect square).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

HalfInt = Fraction  # values with denominator 1 or 2


def half(numerator: int) -> HalfInt:
    """The half-integer numerator/2."""
    return Fraction(numerator, 2)


def as_half(value) -> HalfInt:
    """Coerce an int, Fraction or 'p/q' string to a half-integer.

    >>> as_half("3/2")
    Fraction(3, 2)
    >>> as_half(-2)
    Fraction(-2, 1)
    """
    f = Fraction(value)
    if f.denominator not in (1, 2):
        raise ValueError(f"not a half-integer: {value!r}")
    return f


def format_half(value: HalfInt) -> str:
    """Render a half-integer the way the CLI serializes it ('2', '-3/2')."""
    f = as_half(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/2"


class LaurentPoly:
    """A Laurent polynomial in nu**(1/2) with integer coefficients.

    Immutable by convention: no method mutates ``self.terms``.

    >>> p = LaurentPoly.nu_power(half(1)) + LaurentPoly.const(2)
    >>> str(p)
    '2 + nu^(1/2)'
    >>> (p * p).specialize_nu1()
    9
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                assert isinstance(e, int) and isinstance(c, int)
                if c:
                    clean[e] = c
        self.terms: dict[int, int] = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def nu_power(cls, e, coeff: int = 1) -> "LaurentPoly":
        """coeff * nu**e for a half-integer e."""
        f = as_half(e)
        return cls({int(f * 2): coeff})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly({e: c * k for e, k in self.terms.items()})

    def shift(self, e) -> "LaurentPoly":
        """Multiply by nu**e (a monomial shift)."""
        n = int(as_half(e) * 2)
        return LaurentPoly({k + n: c for k, c in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        assert n >= 0
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[int]:
        """Exponent numerators in increasing order."""
        return sorted(self.terms)

    def degree_span(self) -> int:
        """max minus min exponent numerator (0 for zero or a monomial)."""
        if not self.terms:
            return 0
        s = self.support()
        return s[-1] - s[0]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in self.support():
            c = self.terms[e]
            if e == 0:
                parts.append(f"{c}")
                continue
            exp = f"nu^{e // 2}" if e % 2 == 0 else f"nu^({e}/2)"
            if c == 1:
                parts.append(exp)
            elif c == -1:
                parts.append(f"-{exp}")
            else:
                parts.append(f"{c}*{exp}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    # -- specialization ----------------------------------------------------

    def specialize_nu1(self) -> int:
        """Evaluate at nu = 1 (so also v = 1): the coefficient sum."""
        return sum(self.terms.values())

    def specialize_prime_power(self, q: int):
        """Evaluate at nu = q exactly.

        Returns a Fraction when q is a perfect square, else a QuadExtValue
        over sqrt(q).

        >>> LaurentPoly.nu_power(half(3)).specialize_prime_power(2)
        QuadExtValue(0, 2, sqrt(2))
        >>> p = LaurentPoly.nu_power(-1, 2) + LaurentPoly.nu_power(1)
        >>> p.specialize_prime_power(4)
        Fraction(9, 2)
        """
        assert q >= 2
        r = math.isqrt(q)
        if r * r == q:
            total = Fraction(0)
            for e, c in self.terms.items():
                total += c * Fraction(r) ** e
            return total
        rational = Fraction(0)
        surd = Fraction(0)
        for e, c in self.terms.items():
            # nu^(e/2) = q^(e//2) * sqrt(q)^(e%2) with floor division
            base = Fraction(q) ** (e // 2) if e % 2 == 0 else Fraction(q) ** ((e - 1) // 2)
            if e % 2 == 0:
                rational += c * base
            else:
                surd += c * base
        return QuadExtValue(rational, surd, q)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict[str, int]:
        """Map exponent numerator -> coefficient, keys sorted numerically."""
        return {str(e): self.terms[e] for e in self.support()}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, s: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(s))


@dataclass(frozen=True)
class QuadExtValue:
    """An exact value a + b*sqrt(radicand) with rational a, b.

    The radicand is a fixed non-square integer >= 2; values with different
    radicands do not mix.
    """

    rational: Fraction
    surd: Fraction
    radicand: int

    def __post_init__(self):
        r = math.isqrt(self.radicand)
        assert self.radicand >= 2 and r * r != self.radicand, "radicand must be a non-square"

    def _check(self, other: "QuadExtValue"):
        assert self.radicand == other.radicand, "mixed radicands"

    def __add__(self, other: "QuadExtValue") -> "QuadExtValue":
        self._check(other)
        return QuadExtValue(self.rational + other.rational, self.surd + other.surd, self.radicand)

    def __neg__(self) -> "QuadExtValue":
        return QuadExtValue(-self.rational, -self.surd, self.radicand)

    def __sub__(self, other: "QuadExtValue") -> "QuadExtValue":
        return self + (-other)

    def __mul__(self, other: "QuadExtValue") -> "QuadExtValue":
        self._check(other)
        a, b, c, d = self.rational, self.surd, other.rational, other.surd
        return QuadExtValue(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    def is_zero(self) -> bool:
        return self.rational == 0 and self.surd == 0

    def __repr__(self) -> str:
        return f"QuadExtValue({self.rational}, {self.surd}, sqrt({self.radicand}))"


def divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a / b in the Laurent ring; raises if b does not divide a.

    Plain long division on the underlying ordinary polynomials after shifting
    away the lowest exponents.  Every intermediate coefficient quotient must
    be an exact integer, which holds whenever the quotient lies in the ring.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    sa, sb = a.support(), b.support()
    # work with ordinary polynomials in v = nu^(1/2)
    rem = {e - sa[0]: c for e, c in a.terms.items()}
    den = {e - sb[0]: c for e, c in b.terms.items()}
    dmax = max(den)
    dlead = den[dmax]
    quot: dict[int, int] = {}
    while rem:
        rmax = max(rem)
        if rmax < dmax:
            raise ValueError("not divisible")
        lead = rem[rmax]
        if lead % dlead:
            raise ValueError("not divisible")
        qc, qe = lead // dlead, rmax - dmax
        quot[qe] = qc
        for e, c in den.items():
            k = e + qe
            s = rem.get(k, 0) - qc * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    shift = sa[0] - sb[0]
    return LaurentPoly({e + shift: c for e, c in quot.items()})


def content_normalize(vals: list[LaurentPoly]) -> list[LaurentPoly]:
    """Divide a vector of ring elements by its integer content and lowest
    common monomial, fixing the sign so the lowest-order leading coefficient
    of the first nonzero entry is positive.  Canonical up to nothing."""
    nonzero = [p for p in vals if not p.is_zero()]
    if not nonzero:
        return list(vals)
    g = 0
    emin = min(min(p.support()) for p in nonzero)
    for p in nonzero:
        for c in p.terms.values():
            g = math.gcd(g, c)
    lead = nonzero[0].terms[min(nonzero[0].support())]
    if lead < 0:
        g = -g
    return [LaurentPoly({e - emin: c // g for e, c in p.terms.items()}) for p in vals]


def iter_terms(p: LaurentPoly) -> Iterator[tuple[int, int]]:
    """(exponent numerator, coefficient) pairs in increasing exponent order."""
    for e in p.support():
        yield e, p.terms[e]

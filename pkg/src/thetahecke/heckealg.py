"""Generic Hecke algebra of a signed permutation group, two parameters.

The algebra over Z[nu^(1/2), nu^(-1/2)] has basis T_w indexed by group
elements, with T_u T_w = T_(uw) whenever lengths add and quadratic relations

    (T_s + 1)(T_s - nu) = 0                for the adjacent swaps,
    (T_t + 1)(T_t - nu**flip_exponent) = 0  for the sign flip,

the flip exponent being any half-integer.  Dropping the flip generator gives
the unsigned (type A) subalgebra on the swap generators alone.

Products are computed by peeling reduced words one generator at a time:
multiplying a basis element on the right by a generator either ascends
(plain relabel) or descends, in which case the quadratic relation spends a
factor of the generator's parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import HalfInt, LaurentPoly, as_half
from .weylbc import (
    SignedPerm,
    gen_perm,
    identity,
    inv,
    length,
    mul,
    num_flips,
    reduced_word,
)


@dataclass(frozen=True)
class HeckeParams:
    """Rank plus the flip parameter exponent; flip_numer is the numerator of
    the half-integer exponent, or None for the unsigned subalgebra."""

    rank: int
    flip_numer: int | None

    @classmethod
    def signed(cls, l: int, mu) -> "HeckeParams":
        return cls(l, int(as_half(mu) * 2))

    @classmethod
    def signed_partner(cls, l: int, mu) -> "HeckeParams":
        """Same shape with flip exponent -1-mu (the pairing partner)."""
        return cls(l, int(as_half(-1 - as_half(mu)) * 2))

    @classmethod
    def unsigned(cls, l: int) -> "HeckeParams":
        return cls(l, None)

    @property
    def flip_exponent(self) -> HalfInt:
        assert self.flip_numer is not None
        return HalfInt(self.flip_numer, 2)

    def gen_exponent(self, g: int) -> HalfInt:
        """Exponent e with parameter nu**e for generator g."""
        if g == self.rank and self.flip_numer is not None:
            return HalfInt(self.flip_numer, 2)
        assert 1 <= g < self.rank or (g == self.rank and self.flip_numer is None)
        if g == self.rank:
            raise ValueError("flip generator not present in the unsigned subalgebra")
        return HalfInt(1)

    def allows(self, w: SignedPerm) -> bool:
        return self.flip_numer is not None or num_flips(w) == 0


class HeckeElem:
    """A finitely supported map from group elements to ring elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[SignedPerm, LaurentPoly] | None = None):
        self.terms: dict[SignedPerm, LaurentPoly] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @classmethod
    def basis(cls, w: SignedPerm, coeff: LaurentPoly | None = None) -> "HeckeElem":
        return cls({w: coeff if coeff is not None else LaurentPoly.one()})

    @classmethod
    def unit(cls, l: int) -> "HeckeElem":
        return cls.basis(identity(l))

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return HeckeElem(out)

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + other.scale_poly(LaurentPoly.const(-1))

    def scale_poly(self, p: LaurentPoly) -> "HeckeElem":
        if p.is_zero():
            return HeckeElem()
        return HeckeElem({w: c * p for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElem) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[SignedPerm]:
        return sorted(self.terms, key=lambda w: (length(w), w))

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {self.terms[w]}" for w in self.support())
        return f"HeckeElem({{{inner}}})"

    # -- serialization --

    def to_json_obj(self) -> list[dict]:
        return [
            {"perm": list(w), "poly": self.terms[w].to_json_obj()} for w in self.support()
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "HeckeElem":
        return cls(
            {tuple(item["perm"]): LaurentPoly.from_json_obj(item["poly"]) for item in obj}
        )


@lru_cache(maxsize=None)
def _basis_times_gen(params: HeckeParams, w: SignedPerm, g: int) -> tuple:
    """T_w * T_g as ((perm, poly), ...); the single recursion step."""
    l = params.rank
    wg = mul(w, gen_perm(g, l))
    if length(wg) > length(w):
        return ((wg, LaurentPoly.one()),)
    e = params.gen_exponent(g)
    return ((wg, LaurentPoly.nu_power(e)), (w, LaurentPoly.nu_power(e) - LaurentPoly.one()))


def basis_product(params: HeckeParams, u: SignedPerm, w: SignedPerm) -> HeckeElem:
    """T_u * T_w, peeling a fixed reduced word of w."""
    assert params.allows(u) and params.allows(w)
    cur = {u: LaurentPoly.one()}
    for g in reduced_word(w):
        nxt: dict[SignedPerm, LaurentPoly] = {}
        for x, c in cur.items():
            for y, p in _basis_times_gen(params, x, g):
                s = nxt.get(y, LaurentPoly.zero()) + c * p
                if s.is_zero():
                    nxt.pop(y, None)
                else:
                    nxt[y] = s
        cur = nxt
    return HeckeElem(cur)


def he_mul(params: HeckeParams, a: HeckeElem, b: HeckeElem) -> HeckeElem:
    """Product in the algebra, extended bilinearly from basis products."""
    out = HeckeElem()
    for w, cb in b.terms.items():
        for u, ca in a.terms.items():
            out = out + basis_product(params, u, w).scale_poly(ca * cb)
    return out


def gen_elem(params: HeckeParams, g: int) -> HeckeElem:
    return HeckeElem.basis(gen_perm(g, params.rank))


@lru_cache(maxsize=None)
def _gen_inverse(params: HeckeParams, g: int) -> HeckeElem:
    # T_g^-1 = nu_g^-1 T_g + (nu_g^-1 - 1) T_e, from the quadratic relation
    e = params.gen_exponent(g)
    l = params.rank
    return HeckeElem(
        {
            gen_perm(g, l): LaurentPoly.nu_power(-e),
            identity(l): LaurentPoly.nu_power(-e) - LaurentPoly.one(),
        }
    )


def he_inv_basis(params: HeckeParams, w: SignedPerm) -> HeckeElem:
    """T_w^-1, the reversed word of generator inverses.

    >>> p = HeckeParams.signed(2, HalfInt(1, 2))
    >>> he_mul(p, he_inv_basis(p, (2, 1)), HeckeElem.basis((2, 1))) == HeckeElem.unit(2)
    True
    """
    out = HeckeElem.unit(params.rank)
    for g in reversed(reduced_word(w)):
        out = he_mul(params, out, _gen_inverse(params, g))
    return out


def flip_twist_iso(a: HeckeElem, mu) -> HeckeElem:
    """Algebra isomorphism from flip exponent -mu to flip exponent mu.

    On a basis element it multiplies by (-1)**f * nu**(-mu*f) where f counts
    flip letters of the index; the support is unchanged.
    """
    m = as_half(mu)
    out = {}
    for w, c in a.terms.items():
        f = num_flips(w)
        sign = -1 if f % 2 else 1
        out[w] = c.scale(sign).shift(-m * f)
    return HeckeElem(out)


def sign_character(params: HeckeParams, a: HeckeElem) -> LaurentPoly:
    """Swap generators evaluate to nu, the flip to -1; linear in a."""
    total = LaurentPoly.zero()
    for w, c in a.terms.items():
        f = num_flips(w)
        val = LaurentPoly.nu_power(HalfInt(length(w) - f)).scale(-1 if f % 2 else 1)
        total = total + c * val
    return total


def index_character(params: HeckeParams, a: HeckeElem) -> LaurentPoly:
    """Swap generators evaluate to nu, the flip to its own parameter."""
    total = LaurentPoly.zero()
    for w, c in a.terms.items():
        f = num_flips(w)
        e = HalfInt(length(w) - f) + params.flip_exponent * f if f else HalfInt(length(w))
        total = total + c * LaurentPoly.nu_power(e)
    return total


def he_specialize_nu1(a: HeckeElem) -> dict[SignedPerm, int]:
    """Coefficients at nu = 1: an integral group-algebra element."""
    out = {}
    for w, c in a.terms.items():
        v = c.specialize_nu1()
        if v:
            out[w] = v
    return out


def he_specialize_prime_power(a: HeckeElem, q: int) -> dict[SignedPerm, object]:
    out = {}
    for w, c in a.terms.items():
        v = c.specialize_prime_power(q)
        if not (v == 0):
            out[w] = v
    return out

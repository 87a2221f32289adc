"""Bookkeeping for the five families of dimension towers behind the
correspondence: parameter ranges, scalar-normalization exponents,
first-occurrence indices, and the conservation identity.

Everything is exact integer / Fraction arithmetic.  No Hecke algebra or
group computation happens here; the one brute-force oracle at the bottom
enumerates an 18-element matrix group over the field with four elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipartition import check_partition, r1, theta_lift

HalfInt = Fraction


# -- cases and towers ----------------------------------------------------------


@dataclass(frozen=True)
class DualPairCase:
    """One of the five tower families.

    parity0 / parity_p constrain dimV0 / dimVp0 mod 2 (None = unconstrained).
    chi_is_xi marks the one family whose twisting character is a genuine
    quadratic character, so chi(-1) must be supplied rather than assumed.
    """

    tag: str
    delta: int
    delta_prime: int
    parity0: int | None
    parity_p: int | None
    chi_is_xi: bool


CASES = {
    "A": DualPairCase("A", 1, 1, None, None, False),
    "B": DualPairCase("B", 0, 2, 1, 0, False),
    "C": DualPairCase("C", 2, 0, 0, 0, False),
    "Ct": DualPairCase("Ct", 2, 0, 0, 1, True),
    "D": DualPairCase("D", 0, 2, 0, 0, False),
}

assert all(c.delta + c.delta_prime == 2 for c in CASES.values())


def get_case(case) -> DualPairCase:
    if isinstance(case, DualPairCase):
        return case
    try:
        return CASES[case]
    except KeyError:
        raise ValueError(f"unknown case tag {case!r}; expected one of {sorted(CASES)}") from None


def mu_range_check(case, mu) -> bool:
    """Whether mu lies in the parameter range of the given case: strict
    half-integers for A, odd integers for B and C, even for Ct and D."""
    case = get_case(case)
    mu = Fraction(mu)
    if case.tag == "A":
        return mu.denominator == 2
    if mu.denominator != 1:
        return False
    return mu.numerator % 2 == (1 if case.tag in ("B", "C") else 0)


class TowerConfig:
    """A compatible pair of companion towers over a fixed base space.

    dimV0 is the base dimension, dimVp0 the first member of the chosen
    companion tower; the first member of the other companion tower is then
    forced: dimVp0 + dimVt0 = 2*dimV0 + delta.
    """

    def __init__(self, case, dimV0: int, dimVp0: int, chi_minus_one: int | None = None):
        case = get_case(case)
        if dimV0 < 0 or dimVp0 < 0:
            raise ValueError("dimensions must be nonnegative")
        if case.parity0 is not None and dimV0 % 2 != case.parity0:
            raise ValueError(f"case {case.tag}: dimV0 must be {'odd' if case.parity0 else 'even'}")
        if case.parity_p is not None and dimVp0 % 2 != case.parity_p:
            raise ValueError(f"case {case.tag}: dimVp0 must be {'odd' if case.parity_p else 'even'}")
        dimVt0 = 2 * dimV0 + case.delta - dimVp0
        if dimVt0 < 0:
            raise ValueError("companion tower would start at negative dimension")
        if case.chi_is_xi:
            if chi_minus_one not in (1, -1):
                raise ValueError(f"case {case.tag} requires chi_minus_one = +1 or -1")
        elif chi_minus_one is None:
            chi_minus_one = 1
        if chi_minus_one not in (1, -1):
            raise ValueError("chi_minus_one must be +1 or -1")
        self.case = case
        self.dimV0 = dimV0
        self.dimVp0 = dimVp0
        self.dimVt0 = dimVt0
        self.chi_minus_one = chi_minus_one

    def __repr__(self):
        return f"TowerConfig({self.case.tag}, dimV0={self.dimV0}, dimVp0={self.dimVp0})"

    def swapped(self) -> "TowerConfig":
        """The same data with the roles of the two companion towers exchanged."""
        return TowerConfig(self.case, self.dimV0, self.dimVt0, self.chi_minus_one)

    def member(self, steps: int) -> int:
        # dimension of the tower member `steps` levels above the first
        return self.dimVp0 + 2 * steps


def dimension_grid(case, max_dim: int) -> list[TowerConfig]:
    """All parity-valid configs with both starting dimensions at most max_dim."""
    case = get_case(case)
    out = []
    for v0 in range(max_dim + 1):
        for vp in range(max_dim + 1):
            try:
                out.append(TowerConfig(case, v0, vp, chi_minus_one=1))
            except ValueError:
                continue
    return out


# -- the normalization parameter -----------------------------------------------


def mu_of(cfg: TowerConfig) -> HalfInt:
    """Exponent parameter of the flip generator for this tower pair."""
    mu = Fraction(cfg.dimVp0 - cfg.dimV0) - Fraction(cfg.case.delta, 2)
    assert mu_range_check(cfg.case, mu), (cfg, mu)
    return mu


def mu_sigma(n, ntilde) -> HalfInt:
    """Parameter read off from a pair of first-occurrence dimensions."""
    return Fraction(n - ntilde, 2)


def mu_str(mu) -> str:
    """Serialize a half-integer as 'p' or 'p/2'."""
    mu = Fraction(mu)
    return str(mu.numerator) if mu.denominator == 1 else f"{mu.numerator}/2"


def lambda_exponents(cfg: TowerConfig) -> dict:
    """Formal scalar data for the two flip normalizations.

    The sign symbols are never evaluated; only their two defining relations
    enter: the companion sign is the negative of the chosen one, and their
    product is -chi(-1).  Exponents are half-integers (powers of q).
    """
    d = Fraction(cfg.case.delta, 2)
    e = cfg.dimV0 - Fraction(cfg.dimVp0, 2) + d
    et = cfg.dimV0 - Fraction(cfg.dimVt0, 2) + d
    mu = mu_of(cfg)
    assert et - e == mu
    assert e + et == cfg.dimV0 + d
    return {
        "lambda": {"sign": "gamma", "q_exponent": e},
        "lambda_tilde": {"sign": "-gamma", "q_exponent": et},
        "ratio": {"sign": -1, "q_exponent": mu},
        "product": {"sign": -cfg.chi_minus_one, "q_exponent": cfg.dimV0 + d},
        "normalized_eigenvalues": (
            {"sign": -1, "q_exponent": Fraction(0)},
            {"sign": 1, "q_exponent": mu},
        ),
    }


# -- first occurrence and conservation ------------------------------------------


def first_occurrence(alpha, beta, l: int, cfg: TowerConfig) -> dict:
    """First-occurrence dimensions of the (alpha, beta)-labeled
    representation of the rank-l group in both companion towers, plus the
    degree-drop index c.

    The closed forms are cross-checked against a direct search along the
    tower (least rank with a nonzero lift; the companion side uses the
    label with the two slots exchanged).
    """
    alpha = check_partition(alpha)
    beta = check_partition(beta)
    if sum(alpha) + sum(beta) != l:
        raise ValueError("label size must equal the rank")
    steps = max(0, l - r1(beta))
    steps_t = max(0, l - r1(alpha))
    least = min(lp for lp in range(l + 1) if theta_lift(alpha, beta, l, lp))
    least_t = min(lp for lp in range(l + 1) if theta_lift(beta, alpha, l, lp))
    assert least == steps and least_t == steps_t, (alpha, beta, l)
    return {
        "n": cfg.dimVp0 + 2 * steps,
        "n_tilde": cfg.dimVt0 + 2 * steps_t,
        "c": r1(alpha) + r1(beta),
    }


def conservation_check(alpha, beta, l: int, cfg: TowerConfig) -> dict:
    """Evaluate both weightings of the degree-drop index against the
    dimension budget 2*dimV_l + delta.

    The variant counting c twice vanishes identically; the report carries
    the residual of the single-c variant as well.
    """
    occ = first_occurrence(alpha, beta, l, cfg)
    rhs = 2 * (cfg.dimV0 + 2 * l) + cfg.case.delta
    one_c = occ["n"] + occ["n_tilde"] + occ["c"]
    two_c = occ["n"] + occ["n_tilde"] + 2 * occ["c"]
    assert two_c == rhs, (alpha, beta, l, cfg)
    return {
        "n": occ["n"],
        "n_tilde": occ["n_tilde"],
        "c": occ["c"],
        "rhs": rhs,
        "residual_double_c": two_c - rhs,
        "residual_single_c": one_c - rhs,
    }


# -- relevance of parameters -----------------------------------------------------


def relevance_closure(mu, case, bound: int = 8) -> set[HalfInt]:
    """Orbit of mu under the two reflections x -> -x and x -> -x-2,
    reported within |x| <= bound.

    The walk explores a slightly wider box so that in-window values whose
    connecting path briefly overshoots are still found.
    """
    case = get_case(case)
    mu = Fraction(mu)
    if not mu_range_check(case, mu):
        raise ValueError(f"mu={mu_str(mu)} out of range for case {case.tag}")
    bound = max(bound, abs(mu))
    seen: set[Fraction] = set()
    frontier = [mu]
    while frontier:
        x = frontier.pop()
        if x in seen or abs(x) > bound + 2:
            continue
        seen.add(x)
        frontier.append(-x)
        frontier.append(-x - 2)
    return {x for x in seen if abs(x) <= bound}


def abundance_witness(mu, case) -> TowerConfig:
    """A smallest-dimension tower pair whose parameter equals mu."""
    case = get_case(case)
    mu = Fraction(mu)
    if not mu_range_check(case, mu):
        raise ValueError(f"mu={mu_str(mu)} out of range for case {case.tag}")
    if case.tag == "A":
        m = int(mu + Fraction(1, 2))
        v0 = max(0, m - 1, -m)
        vp = v0 + m
    elif case.tag in ("B", "D"):
        m = int(mu)
        v0 = abs(m)
        vp = v0 + m
    elif case.tag == "C":
        m = int(mu)
        v0 = max(0, m - 1, -m - 1)
        vp = v0 + m + 1
    else:  # Ct
        m = int(mu)
        v0 = abs(m)
        vp = v0 + m + 1
    cfg = TowerConfig(case, v0, vp, chi_minus_one=1)
    assert mu_of(cfg) == mu
    return cfg


# -- the unipotent tower --------------------------------------------------------


def lusztig_unipotent(m: int) -> dict:
    """Dimension data of the m-th special datum in the unitary towers:
    the space carrying it and its first occurrences one tower down and up."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return {
        "dimV": m * (m + 1) // 2,
        "first_occ_low": (m - 1) * m // 2,
        "first_occ_high": (m + 1) * (m + 2) // 2,
        "mu": Fraction(2 * m + 1, 2),
    }


# -- brute-force oracle over F_4 --------------------------------------------------


def _f4_mul(a: int, b: int) -> int:
    # bits: 1 = constant term, 2 = generator w with w^2 = w + 1
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = (a0 & b0) ^ (a1 & b1)
    c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
    return c0 | (c1 << 1)


def _f4_conj(a: int) -> int:
    return _f4_mul(a, a)


def _m2_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (
        _f4_mul(a, e) ^ _f4_mul(b, g),
        _f4_mul(a, f) ^ _f4_mul(b, h),
        _f4_mul(c, e) ^ _f4_mul(d, g),
        _f4_mul(c, f) ^ _f4_mul(d, h),
    )


def unitary2_signed_fixed_space_sum() -> int:
    """Sum of (-2)^(dim of the 1-eigenspace) over the rank-2 unitary group
    over the 2-element subfield, enumerated by brute force.

    The group is cut out of the 256 matrices over F_4 by conj(g)^T J g = J
    with J the antidiagonal form, and has exactly 18 elements.
    """
    J = (0, 1, 1, 0)
    total = 0
    count = 0
    for code in range(256):
        g = (code & 3, (code >> 2) & 3, (code >> 4) & 3, code >> 6)
        gbar_t = (_f4_conj(g[0]), _f4_conj(g[2]), _f4_conj(g[1]), _f4_conj(g[3]))
        if _m2_mul(_m2_mul(gbar_t, J), g) != J:
            continue
        count += 1
        a, b, c, d = g[0] ^ 1, g[1], g[2], g[3] ^ 1
        if a == b == c == d == 0:
            fixed = 2
        elif _f4_mul(a, d) ^ _f4_mul(b, c) == 0:
            fixed = 1
        else:
            fixed = 0
        total += (-2) ** fixed
    assert count == 18, count
    return total

"""Partition and bipartition combinatorics for the signed Weyl groups.

Partitions are tuples of weakly decreasing positive integers.  A bipartition
(alpha, beta) with |alpha| + |beta| = m labels an irreducible character of
the rank-m signed permutation group through

    induce from W_a x W_b the character (chi_alpha o proj) (x) ((chi_beta o proj) . eps_b)

where proj forgets signs and eps is the character that is trivial on swaps
and -1 on sign flips.  Under this labeling (m) x () is the trivial character
and () x (m) is eps itself.

VirtualSum values are plain dicts keyed by partitions or bipartitions with
integer multiplicities; zero entries are dropped.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .weylbc import partitions

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]
ClassType = tuple[Partition, Partition]


def check_partition(lam) -> Partition:
    lam = tuple(operator.index(x) for x in lam)
    if not all(a >= b for a, b in zip(lam, lam[1:])) or not all(x > 0 for x in lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def bipartitions(m: int) -> list[Bipartition]:
    """All bipartitions of total size m, deterministic order."""
    out = []
    for a in range(m + 1):
        for alpha in partitions(a):
            for beta in partitions(m - a):
                out.append((alpha, beta))
    return out


def part_union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def part_splits(lam: Partition):
    """All ways to split the multiset of parts into an ordered pair."""
    vals = sorted(set(lam), reverse=True)
    mults = [lam.count(v) for v in vals]
    for pick in iproduct(*(range(m + 1) for m in mults)):
        first = tuple(v for v, c in zip(vals, pick) for _ in range(c))
        second = tuple(v for v, c, m in zip(vals, pick, mults) for _ in range(m - c))
        yield first, second


def sym_centralizer(rho: Partition) -> int:
    z = 1
    for v in set(rho):
        m = rho.count(v)
        z *= v**m * math.factorial(m)
    return z


def signed_centralizer(cls: ClassType) -> int:
    z = 1
    for rho in cls:
        for v in set(rho):
            m = rho.count(v)
            z *= (2 * v) ** m * math.factorial(m)
    return z


def signed_class_types(m: int) -> list[ClassType]:
    """Conjugacy-class labels (positive type; negative type) of rank m."""
    out = []
    for a in range(m + 1):
        for lam in partitions(a):
            for mu in partitions(m - a):
                out.append((lam, mu))
    return out


def eps_value(cls: ClassType) -> int:
    """The swap-trivial, flip-negating character on a class."""
    return -1 if len(cls[1]) % 2 else 1


# -- symmetric group characters (Murnaghan-Nakayama) --------------------------


@lru_cache(maxsize=None)
def sn_char(lam: Partition, rho: Partition) -> int:
    """chi_lam evaluated on the class of cycle type rho."""
    assert sum(lam) == sum(rho), (lam, rho)
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    rows = len(lam)
    betas = [lam[i] + (rows - 1 - i) for i in range(rows)]
    total = 0
    bset = set(betas)
    for j, b in enumerate(betas):
        b2 = b - r
        if b2 < 0 or b2 in bset:
            continue
        crossed = sum(1 for c in betas if b2 < c < b)
        newb = sorted((bset - {b}) | {b2}, reverse=True)
        newlam = tuple(v - (len(newb) - 1 - i) for i, v in enumerate(newb))
        newlam = tuple(v for v in newlam if v)
        total += (-1) ** crossed * sn_char(newlam, rest)
    return total


def sn_dim(lam: Partition) -> int:
    """Hook length formula; independent route to sn_char at the identity."""
    n = sum(lam)
    if n == 0:
        return 1
    cols = [sum(1 for v in lam if v > j) for j in range(lam[0])]
    hooks = 1
    for i, v in enumerate(lam):
        for j in range(v):
            hooks *= (v - j) + (cols[j] - i) - 1
    return math.factorial(n) // hooks


# -- Pieri operators ----------------------------------------------------------


def pieri_add(lam: Partition, i: int) -> dict[Partition, int]:
    """Partitions obtained by adding a horizontal i-strip (at most one new
    cell per column): new_0 >= old_0 >= new_1 >= old_1 >= ..."""
    assert i >= 0
    out: dict[Partition, int] = {}
    rows = len(lam)
    padded = lam + (0,)

    def build(idx: int, remaining: int, acc: list[int]):
        if idx == rows + 1:
            if remaining == 0:
                out[tuple(v for v in acc if v)] = 1
            return
        old = padded[idx]
        hi = old + remaining if idx == 0 else min(padded[idx - 1], old + remaining)
        for v in range(old, hi + 1):
            build(idx + 1, remaining - (v - old), acc + [v])

    build(0, i, [])
    return out


def pieri_remove(lam: Partition, i: int) -> dict[Partition, int]:
    """Partitions obtained by removing a horizontal i-strip."""
    assert i >= 0
    out: dict[Partition, int] = {}
    rows = len(lam)
    padded = lam + (0,)

    def build(idx: int, remaining: int, acc: list[int]):
        if idx == rows:
            if remaining == 0:
                out[tuple(v for v in acc if v)] = 1
            return
        old = padded[idx]
        nxt = padded[idx + 1]
        lo = max(nxt, old - remaining)
        for v in range(lo, old + 1):
            # interlacing old_idx >= new_idx >= old_{idx+1} keeps the strip horizontal
            build(idx + 1, remaining - (old - v), acc + [v])

    build(0, i, [])
    return out


def r1(lam: Partition) -> int:
    """Largest removable horizontal-strip size, found by enumeration."""
    best = 0
    for i in range(sum(lam) + 1):
        if pieri_remove(lam, i):
            best = i
    return best


# -- virtual sums -------------------------------------------------------------


def vs_add(acc: dict, key, mult: int = 1) -> None:
    c = acc.get(key, 0) + mult
    if c:
        acc[key] = c
    else:
        acc.pop(key, None)


def is_multiplicity_free(vs: dict) -> bool:
    return all(v in (0, 1) for v in vs.values())


def vs_to_json(vs: dict) -> list[dict]:
    items = sorted(vs.items())
    return [{"bipartition": [list(a), list(b)], "mult": m} for (a, b), m in items]


# -- products in the two Grothendieck rings -----------------------------------


@lru_cache(maxsize=None)
def sym_product_pair(alpha: Partition, gamma: Partition) -> tuple:
    """chi_alpha . chi_gamma expanded in irreducibles of the larger group.

    Multiplicities are induction coefficients computed by exact character
    inner products; when one factor is a single row this reduces to Pieri
    addition, which serves as an independent check in the tests.
    """
    a, c = sum(alpha), sum(gamma)
    n = a + c
    out = {}
    for lam in partitions(n):
        m = Fraction(0)
        for rho1 in partitions(a):
            x1 = sn_char(alpha, rho1)
            if not x1:
                continue
            for rho2 in partitions(c):
                x2 = sn_char(gamma, rho2)
                if not x2:
                    continue
                m += Fraction(x1 * x2 * sn_char(lam, part_union(rho1, rho2)),
                              sym_centralizer(rho1) * sym_centralizer(rho2))
        assert m.denominator == 1 and m >= 0, (alpha, gamma, lam, m)
        if m:
            out[lam] = int(m)
    return tuple(sorted(out.items()))


def sym_product(alpha: Partition, gamma: Partition) -> dict[Partition, int]:
    return dict(sym_product_pair(alpha, gamma))


def bip_product(a, b) -> dict[Bipartition, int]:
    """Product of bipartition sums, slot by slot."""
    if isinstance(a, tuple):
        a = {a: 1}
    if isinstance(b, tuple):
        b = {b: 1}
    out: dict[Bipartition, int] = {}
    for (a1, a2), m1 in a.items():
        for (b1, b2), m2 in b.items():
            for p1, c1 in sym_product(a1, b1).items():
                for p2, c2 in sym_product(a2, b2).items():
                    vs_add(out, (p1, p2), m1 * m2 * c1 * c2)
    return out


def eps_twist(a) -> dict[Bipartition, int]:
    """Tensoring with the full eps character swaps the two slots."""
    if isinstance(a, tuple):
        a = {a: 1}
    out: dict[Bipartition, int] = {}
    for (a1, a2), m in a.items():
        vs_add(out, (a2, a1), m)
    return out


# -- signed-group characters ---------------------------------------------------


@lru_cache(maxsize=None)
def wl_char(bip: Bipartition, cls: ClassType) -> int:
    """Character of the bipartition-labeled irreducible on a class.

    Evaluated by the induced-character sum over the block subgroup
    W_a x W_b, with conjugacy classes fused by part-multiset union.
    """
    alpha, beta = bip
    lam, mu = cls
    a = sum(alpha)
    assert a + sum(beta) == sum(lam) + sum(mu), (bip, cls)
    total = Fraction(0)
    for lam1, lam2 in part_splits(lam):
        for mu1, mu2 in part_splits(mu):
            if sum(lam1) + sum(mu1) != a:
                continue
            x1 = sn_char(alpha, part_union(lam1, mu1))
            if not x1:
                continue
            x2 = sn_char(beta, part_union(lam2, mu2))
            if not x2:
                continue
            sign = -1 if len(mu2) % 2 else 1
            total += Fraction(sign * x1 * x2,
                              signed_centralizer((lam1, mu1)) * signed_centralizer((lam2, mu2)))
    total *= signed_centralizer(cls)
    assert total.denominator == 1, (bip, cls, total)
    return int(total)


def wl_char_table(m: int) -> dict[Bipartition, dict[ClassType, int]]:
    classes = signed_class_types(m)
    return {bip: {cls: wl_char(bip, cls) for cls in classes} for bip in bipartitions(m)}


def wl_inner(table_row_a: dict, table_row_b: dict, m: int) -> Fraction:
    """Class-weighted inner product of two rank-m class functions."""
    total = Fraction(0)
    for cls in signed_class_types(m):
        total += Fraction(table_row_a[cls] * table_row_b[cls], signed_centralizer(cls))
    return total


# -- theta lifts ---------------------------------------------------------------


def theta_lift(alpha: Partition, beta: Partition, l: int, lp: int) -> dict[Bipartition, int]:
    """Lift of the (alpha, beta)-labeled representation from rank l to rank l'.

    Sum over k of (remove an (l-k)-strip from beta) x (add an (l'-k)-strip
    to alpha); asserted multiplicity-free.
    """
    assert sum(alpha) + sum(beta) == l, (alpha, beta, l)
    assert lp >= 0
    out: dict[Bipartition, int] = {}
    for k in range(min(l, lp) + 1):
        for ap in pieri_remove(beta, l - k):
            for bp in pieri_add(alpha, lp - k):
                vs_add(out, (ap, bp))
    assert all(sum(x[0]) + sum(x[1]) == lp for x in out)
    assert is_multiplicity_free(out), (alpha, beta, l, lp, out)
    return out


def amr_lift(m: int, l: int, lp: int, alpha: Partition, beta: Partition) -> dict[Bipartition, int]:
    """The lift in the unipotent normalization: slots appear in the other
    order (add-strips on alpha first, removed strips from beta second).

    The cuspidal-support parameter m fixes the normalization but does not
    enter the displayed sum.
    """
    assert m >= 0
    assert sum(alpha) + sum(beta) == l, (alpha, beta, l)
    out: dict[Bipartition, int] = {}
    for k in range(min(l, lp) + 1):
        for bp in pieri_add(alpha, lp - k):
            for ap in pieri_remove(beta, l - k):
                vs_add(out, (bp, ap))
    assert is_multiplicity_free(out)
    return out


# -- nu = 1 module decomposition ----------------------------------------------


def induced_eps_character(l: int, lp: int, k: int) -> dict[tuple[ClassType, ClassType], int]:
    """Character of the product group induced from the three-block subgroup
    (first l-k positions) x (diagonal k-block shared by both factors) x
    (last l'-k positions), with the flip-negating character on every block.
    """
    assert 0 <= k <= min(l, lp)
    out: dict[tuple[ClassType, ClassType], Fraction] = {}
    for ta in signed_class_types(l - k):
        za = signed_centralizer(ta)
        ea = eps_value(ta)
        for td in signed_class_types(k):
            zd = signed_centralizer(td)
            ed = eps_value(td)
            left = (part_union(ta[0], td[0]), part_union(ta[1], td[1]))
            for tb in signed_class_types(lp - k):
                zb = signed_centralizer(tb)
                eb = eps_value(tb)
                right = (part_union(td[0], tb[0]), part_union(td[1], tb[1]))
                key = (left, right)
                out[key] = out.get(key, Fraction(0)) + Fraction(ea * ed * eb, za * zd * zb)
    final: dict[tuple[ClassType, ClassType], int] = {}
    for cl in signed_class_types(l):
        for cr in signed_class_types(lp):
            v = out.get((cl, cr), Fraction(0)) * signed_centralizer(cl) * signed_centralizer(cr)
            assert v.denominator == 1
            if v:
                final[(cl, cr)] = int(v)
    return final


def expected_module_character(l: int, lp: int) -> dict[tuple[ClassType, ClassType], int]:
    """Sum of the induced characters over every grade."""
    out: dict[tuple[ClassType, ClassType], int] = {}
    for k in range(min(l, lp) + 1):
        for key, v in induced_eps_character(l, lp, k).items():
            vs_add(out, key, v)
    return out


def expected_decomposition(l: int, lp: int) -> dict[tuple[Bipartition, Bipartition], int]:
    """Irreducible content of the nu=1 module: for each shared grade k and
    each bipartition (gamma, eta) of k, pair (gamma x add-strips(eta)) with
    (eta x add-strips(gamma))."""
    out: dict[tuple[Bipartition, Bipartition], int] = {}
    for k in range(min(l, lp) + 1):
        for gamma, eta in bipartitions(k):
            for left in pieri_add(eta, l - k):
                for right in pieri_add(gamma, lp - k):
                    vs_add(out, ((gamma, left), (eta, right)))
    return out


def decompose(charfn: dict[tuple[ClassType, ClassType], int], l: int, lp: int
              ) -> dict[tuple[Bipartition, Bipartition], int]:
    """Multiplicities of product-group irreducibles in an exact character.

    Raises if any inner product fails to be a nonnegative integer, and
    asserts that the multiplicities reconstruct the input classwise.
    """
    classes_l = signed_class_types(l)
    classes_lp = signed_class_types(lp)
    mults: dict[tuple[Bipartition, Bipartition], int] = {}
    for bl in bipartitions(l):
        for br in bipartitions(lp):
            total = Fraction(0)
            for cl in classes_l:
                xl = wl_char(bl, cl)
                if not xl:
                    continue
                for cr in classes_lp:
                    v = charfn.get((cl, cr), 0)
                    if not v:
                        continue
                    xr = wl_char(br, cr)
                    if not xr:
                        continue
                    total += Fraction(v * xl * xr,
                                      signed_centralizer(cl) * signed_centralizer(cr))
            assert total.denominator == 1 and total >= 0, (bl, br, total)
            if total:
                mults[(bl, br)] = int(total)
    for cl in classes_l:
        for cr in classes_lp:
            rec = sum(m * wl_char(bl, cl) * wl_char(br, cr) for (bl, br), m in mults.items())
            assert rec == charfn.get((cl, cr), 0), ("reconstruction", cl, cr)
    return mults

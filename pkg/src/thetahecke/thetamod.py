"""The graded Hecke bimodule deforming a theta-correspondence multiplicity space.

For ranks l, l' and a half-integer parameter mu, the module carries commuting
actions of two Hecke algebras: the rank-l algebra with flip parameter nu**mu
and the rank-l' algebra with flip parameter nu**(-1-mu).  Its basis is graded
by k = 0..min(l, l'); a grade-k label is a triple

    (d1, d2, x)

with d1 a minimal representative for the two-block quotient of the unsigned
rank-l group (blocks l-k / k), d2 a minimal representative for the
symmetric-times-signed quotient of the rank-l' signed group (blocks k / l'-k),
and x an unsigned permutation of the shared k-slot.

Both swap actions and the primed flip act grade-by-grade through the transfer
lemma for distinguished representatives: a generator either stays in the
quotient (relabel, possibly spending the quadratic parameter) or transfers
into the parabolic, where it acts on the trivial block by its index value, on
the signed tail by the sign character, or on the shared slot by genuine Hecke
multiplication (right multiplication from the unsigned side, left from the
signed side).

The unprimed flip generator is the one operator that moves between grades.
Its action is seeded on the grade-k base vector by two explicit expansions
(one for the flip at the last position, one for the flip at position l-k) and
propagated to general labels through the double-coset split of d1: either d1
fixes the last position and commutes with the flip, or d1 factors through the
cross-block cycle and the flip conjugates to position l-k at the cost of an
inverted Hecke element.

Everything is exact.  The coefficient ring is pluggable: symbolic Laurent
polynomials by default, or exact evaluation at a chosen point for large-rank
identity testing and for specialization cross-checks.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from functools import lru_cache

from .heckealg import HeckeParams, he_inv_basis
from .laurent import HalfInt, LaurentPoly, QuadExtValue, as_half
from .weylbc import (
    CosetSpec,
    SignedPerm,
    all_unsigned_perms,
    cross_block_cycle,
    deodhar_transfer,
    double_coset_split,
    flip_at,
    gen_perm,
    identity,
    length,
    mul,
    reduced_word,
    swap_range,
)

BasisIndex = tuple[int, SignedPerm, SignedPerm, SignedPerm]


# -- coefficient rings -------------------------------------------------------


class LaurentRing:
    """Symbolic coefficients: the Laurent ring itself."""

    name = "symbolic"

    def zero(self):
        return LaurentPoly.zero()

    def one(self):
        return LaurentPoly.one()

    def monomial(self, c: int, e) -> LaurentPoly:
        return LaurentPoly.nu_power(as_half(e), c)

    def from_laurent(self, p: LaurentPoly) -> LaurentPoly:
        return p

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a.is_zero()


class FractionPointRing:
    """Exact evaluation at a rational value of the square root of nu.

    Identities of bounded degree vanish identically once they vanish at
    enough such points, which is the large-rank verification strategy.
    """

    def __init__(self, u0):
        self.u0 = Fraction(u0)
        assert self.u0 != 0
        self.name = f"point(nu^(1/2)={self.u0})"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def monomial(self, c: int, e) -> Fraction:
        return c * self.u0 ** int(2 * as_half(e))

    def from_laurent(self, p: LaurentPoly) -> Fraction:
        return sum((c * self.u0**e for e, c in p.terms.items()), Fraction(0))

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0


class PrimePowerRing:
    """Exact evaluation at nu = q for an integer q >= 2 (surd arithmetic when
    q is not a perfect square)."""

    def __init__(self, q: int):
        assert q >= 2
        self.q = q
        r = math.isqrt(q)
        self.root: Fraction | None = Fraction(r) if r * r == q else None
        self.name = f"point(nu={q})"

    def zero(self):
        return Fraction(0) if self.root is not None else QuadExtValue(Fraction(0), Fraction(0), self.q)

    def one(self):
        return self.from_laurent(LaurentPoly.one())

    def monomial(self, c: int, e):
        return self.from_laurent(LaurentPoly.nu_power(as_half(e), c))

    def from_laurent(self, p: LaurentPoly):
        return p.specialize_prime_power(self.q) if self.root is None else sum(
            (c * self.root**e for e, c in p.terms.items()), Fraction(0)
        )

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0 if self.root is not None else a.is_zero()


# -- sparse vectors keyed by basis position ----------------------------------


def _axpy(ring, out: dict, col, c) -> None:
    for p, a in col:
        s = ring.add(out.get(p, ring.zero()), ring.mul(c, a))
        if ring.is_zero(s):
            out.pop(p, None)
        else:
            out[p] = s


def _add_scaled(ring, out: dict, vec: dict, c) -> None:
    for p, a in vec.items():
        s = ring.add(out.get(p, ring.zero()), ring.mul(c, a))
        if ring.is_zero(s):
            out.pop(p, None)
        else:
            out[p] = s


def grade_dim_formula(l: int, lp: int, k: int) -> int:
    """2^k l! l'! / ((l-k)! k! (l'-k)!), the closed-form grade dimension."""
    return (
        2**k
        * math.factorial(l)
        * math.factorial(lp)
        // (math.factorial(l - k) * math.factorial(k) * math.factorial(lp - k))
    )


class ThetaModule:
    """The graded bimodule for ranks (l, l') at parameter mu."""

    def __init__(self, l: int, lp: int, mu, ring=None):
        assert l >= 0 and lp >= 0
        self.l = l
        self.lp = lp
        self.mu: HalfInt = as_half(mu)
        self.ring = ring if ring is not None else LaurentRing()
        self.kmax = min(l, lp)

        self.basis: list[BasisIndex] = []
        self.grade_range: dict[int, tuple[int, int]] = {}
        for k in range(self.kmax + 1):
            d1s = list(distinguished_cache("sym_block", l, k))
            d2s = list(distinguished_cache("mixed_block", lp, k))
            slots = sorted(all_unsigned_perms(k), key=lambda w: (length(w), w))
            start = len(self.basis)
            for d1 in d1s:
                for d2 in d2s:
                    for x in slots:
                        self.basis.append((k, d1, d2, x))
            self.grade_range[k] = (start, len(self.basis))
            assert len(self.basis) - start == grade_dim_formula(l, lp, k)
        self.pos: dict[BasisIndex, int] = {b: i for i, b in enumerate(self.basis)}
        self.dim = len(self.basis)

        self._cols: dict[tuple, dict[int, tuple]] = {}
        self._seeds: dict[tuple, dict] = {}
        self._w2_inverses: dict[int, list[tuple[SignedPerm, LaurentPoly]]] = {}

    # -- bookkeeping --

    def grade_dims(self) -> list[int]:
        return [self.grade_range[k][1] - self.grade_range[k][0] for k in range(self.kmax + 1)]

    def unit_pos(self, k: int) -> int:
        return self.pos[(k, identity(self.l), identity(self.lp), identity(k))]

    def basis_vec(self, p: int) -> dict:
        return {p: self.ring.one()}

    def gen_keys(self) -> list[tuple]:
        keys: list[tuple] = [("S", i) for i in range(1, self.l)]
        if self.l >= 1:
            keys.append(("T",))
        keys += [("Sp", i) for i in range(1, self.lp)]
        if self.lp >= 1:
            keys.append(("Tp",))
        return keys

    # -- generator columns --

    def column(self, key: tuple, p: int):
        table = self._cols.setdefault(key, {})
        col = table.get(p)
        if col is None:
            if key[0] == "S":
                col = self._col_swap(key[1], p)
            elif key[0] == "Sp":
                col = self._col_prime_swap(key[1], p)
            elif key[0] == "Tp":
                col = self._col_prime_flip(p)
            else:
                col = self._col_flip(p)
            table[p] = col
        return col

    def apply_gen(self, key: tuple, vec: dict) -> dict:
        out: dict = {}
        for p, c in vec.items():
            _axpy(self.ring, out, self.column(key, p), c)
        return out

    def apply_word(self, word: list[int], vec: dict) -> dict:
        """Unprimed side: word in swap indices only (rightmost acts first)."""
        for g in reversed(word):
            assert 1 <= g < self.l
            vec = self.apply_gen(("S", g), vec)
        return vec

    def apply_prime_word(self, word: list[int], vec: dict) -> dict:
        """Primed side: swap indices, with index l' meaning the flip."""
        for g in reversed(word):
            vec = self.apply_gen(("Tp",) if g == self.lp else ("Sp", g), vec)
        return vec

    # -- the three grade-preserving generator actions --

    def _col_swap(self, i: int, p: int):
        R = self.ring
        k, d1, d2, x = self.basis[p]
        res = deodhar_transfer(d1, i, CosetSpec("sym_block", self.l, k))
        nu = R.monomial(1, 1)
        if res[0] == "coset":
            np_ = self.pos[(k, res[1], d2, x)]
            if res[2] > 0:
                return ((np_, R.one()),)
            return ((np_, nu), (p, R.add(nu, R.neg(R.one()))))
        h = res[1]
        if h < self.l - k:
            return ((p, nu),)
        m = h - (self.l - k)
        y = mul(x, gen_perm(m, k))
        yp = self.pos[(k, d1, d2, y)]
        if length(y) > length(x):
            return ((yp, R.one()),)
        return ((yp, nu), (p, R.add(nu, R.neg(R.one()))))

    def _col_prime_swap(self, i: int, p: int):
        R = self.ring
        k, d1, d2, x = self.basis[p]
        res = deodhar_transfer(d2, i, CosetSpec("mixed_block", self.lp, k))
        nu = R.monomial(1, 1)
        if res[0] == "coset":
            np_ = self.pos[(k, d1, res[1], x)]
            if res[2] > 0:
                return ((np_, R.one()),)
            return ((np_, nu), (p, R.add(nu, R.neg(R.one()))))
        h = res[1]
        assert h != self.lp, "a swap cannot transfer to the flip"
        if h > k:
            return ((p, nu),)
        y = mul(gen_perm(h, k), x)
        yp = self.pos[(k, d1, d2, y)]
        if length(y) > length(x):
            return ((yp, R.one()),)
        return ((yp, nu), (p, R.add(nu, R.neg(R.one()))))

    def _col_prime_flip(self, p: int):
        R = self.ring
        k, d1, d2, x = self.basis[p]
        res = deodhar_transfer(d2, self.lp, CosetSpec("mixed_block", self.lp, k))
        if res[0] == "coset":
            np_ = self.pos[(k, d1, res[1], x)]
            if res[2] > 0:
                return ((np_, R.one()),)
            par = R.monomial(1, -1 - self.mu)
            return ((np_, par), (p, R.add(par, R.neg(R.one()))))
        assert res[1] == self.lp, "a flip transfer lands on the flip"
        return ((p, R.neg(R.one())),)

    # -- seeded flip action --

    def _term(self, k: int, d1: SignedPerm, d2: SignedPerm, x: SignedPerm) -> dict:
        """Operator word T_(d1) T'_(d2) T'_(x) applied to the grade-k base."""
        vec = self.basis_vec(self.unit_pos(k))
        vec = self.apply_prime_word(reduced_word(x), vec)
        vec = self.apply_prime_word(reduced_word(d2), vec)
        vec = self.apply_word(reduced_word(d1), vec)
        return vec

    def seed_flip_top(self, k: int) -> dict:
        """The flip generator applied to the grade-k base vector."""
        key = ("top", k)
        if key in self._seeds:
            return self._seeds[key]
        if k == 0:
            vec = self.seed_flip_inner(0)  # the inner flip at position l-0 is the flip itself
            self._seeds[key] = vec
            return vec
        R = self.ring
        l, lp, mu = self.l, self.lp, self.mu
        out: dict = {}
        _add_scaled(R, out, self._term(k, identity(l), flip_at(k, lp), identity(k)), R.monomial(-1, k - lp + mu))
        # bracket, entering with weight nu^(k-l'+1) - nu^(k-l')
        w_plus = R.monomial(1, k - lp + 1)
        w_minus = R.monomial(-1, k - lp)
        for i in range(k + 1, lp + 1):
            t = self._term(k, identity(l), mul(flip_at(i, lp), swap_range(k, i, lp)), identity(k))
            c = R.mul(R.add(w_plus, w_minus), R.monomial(1, mu))
            _add_scaled(R, out, t, c)
        low = self._term(k - 1, swap_range(l - k + 1, l, l), identity(lp), identity(k - 1))
        c_low = R.mul(R.add(w_plus, w_minus), R.monomial(-1, -1))
        _add_scaled(R, out, low, c_low)
        for i in range(k, lp + 1):
            t = self._term(k, identity(l), swap_range(k, i, lp), identity(k))
            _add_scaled(R, out, t, c_low)
        self._seeds[key] = out
        return out

    def seed_flip_inner(self, k: int) -> dict:
        """The flip at position l-k applied to the grade-k base vector.

        Defined for 0 <= k <= l-1; grade-(k+1) labels only arise when
        k < l', which keeps them inside the grading.
        """
        key = ("inner", k)
        if key in self._seeds:
            return self._seeds[key]
        assert 0 <= k < self.l
        R = self.ring
        l, lp, mu = self.l, self.lp, self.mu
        out: dict = {self.unit_pos(k): R.monomial(-1, 2 * k - lp)}
        scale = R.monomial(-1, k - lp)
        if k < lp:
            slot_up = swap_range(1, k + 1, k + 1)
            for i in range(k + 1, lp + 1):
                plain = self._term(k + 1, identity(l), swap_range(k + 1, i, lp), slot_up)
                _add_scaled(R, out, plain, scale)
                flipped = self._term(
                    k + 1, identity(l), mul(flip_at(i, lp), swap_range(k + 1, i, lp)), slot_up
                )
                _add_scaled(R, out, flipped, R.mul(scale, R.monomial(-1, mu + 1)))
        for i in range(1, k + 1):
            t = self._term(k, swap_range(l - k, l - k + i, l), identity(lp), swap_range(1, i, k))
            c = R.mul(scale, R.add(R.monomial(1, k - i + 1), R.monomial(-1, k - i)))
            _add_scaled(R, out, t, c)
        self._seeds[key] = out
        return out

    def _w2_inverse(self, k: int) -> list[tuple[SignedPerm, LaurentPoly]]:
        """Expansion of the inverse of T_w for w the inverted cross-block cycle."""
        got = self._w2_inverses.get(k)
        if got is None:
            params = HeckeParams.unsigned(self.l)
            w2 = cross_block_cycle(self.l, k)
            elem = he_inv_basis(params, tuple(_inv(w2)))
            got = [(w, c) for w, c in elem.terms.items()]
            got.sort(key=lambda t: (length(t[0]), t[0]))
            self._w2_inverses[k] = got
        return got

    def _col_flip(self, p: int):
        assert self.l >= 1
        R = self.ring
        k, d1, d2, x = self.basis[p]
        branch = double_coset_split(d1, k)
        if branch[0] == "fix":
            vec = dict(self.seed_flip_top(k))
            vec = self.apply_word(reduced_word(d1), vec)
        else:
            y = branch[1]
            inner = self.seed_flip_inner(k)
            vec: dict = {}
            for u, c in self._w2_inverse(k):
                moved = self.apply_word(reduced_word(u), dict(inner))
                _add_scaled(R, vec, moved, R.from_laurent(c))
            vec = self.apply_word(reduced_word(y), vec)
        vec = self.apply_prime_word(reduced_word(x), vec)
        vec = self.apply_prime_word(reduced_word(d2), vec)
        return tuple(sorted(vec.items()))

    # -- relation suite --

    def _scaled(self, vec: dict, c) -> dict:
        out: dict = {}
        _add_scaled(self.ring, out, vec, c)
        return out

    def _vsum(self, a: dict, b: dict) -> dict:
        out = dict(a)
        _add_scaled(self.ring, out, b, self.ring.one())
        return out

    def relation_suite(self) -> list[dict]:
        """Every defining relation of the bimodule presentation, as data.

        Quadratic entries carry the nu-exponent of the non-unipotent
        eigenvalue; word entries compare two operator products (rightmost
        factor acts first).
        """
        checks: list[dict] = []

        def quad(name, gen, par):
            checks.append({"name": name, "kind": "quad", "gen": gen, "par": as_half(par)})

        def equal(name, lhs, rhs):
            checks.append({"name": name, "kind": "equal", "lhs": lhs, "rhs": rhs})

        def S(i):
            return ("S", i)

        def Sp(i):
            return ("Sp", i)

        T = ("T",)
        Tp = ("Tp",)

        for i in range(1, self.l):
            quad(f"quad_swap_{i}", S(i), 1)
        if self.l >= 1:
            quad("quad_flip", T, self.mu)
        for i in range(1, self.lp):
            quad(f"quad_prime_swap_{i}", Sp(i), 1)
        if self.lp >= 1:
            quad("quad_prime_flip", Tp, -1 - self.mu)

        for i in range(1, self.l):
            for j in range(i + 2, self.l):
                equal(f"comm_swap_{i}_{j}", [S(i), S(j)], [S(j), S(i)])
            if i + 1 < self.l:
                equal(f"braid_swap_{i}", [S(i), S(i + 1), S(i)], [S(i + 1), S(i), S(i + 1)])
        for i in range(1, self.lp):
            for j in range(i + 2, self.lp):
                equal(f"comm_prime_swap_{i}_{j}", [Sp(i), Sp(j)], [Sp(j), Sp(i)])
            if i + 1 < self.lp:
                equal(
                    f"braid_prime_swap_{i}",
                    [Sp(i), Sp(i + 1), Sp(i)],
                    [Sp(i + 1), Sp(i), Sp(i + 1)],
                )

        if self.l >= 2:
            equal("braid_flip", [T, S(self.l - 1), T, S(self.l - 1)], [S(self.l - 1), T, S(self.l - 1), T])
        for i in range(1, self.l - 1):
            equal(f"comm_flip_swap_{i}", [T, S(i)], [S(i), T])
        if self.lp >= 2:
            equal(
                "braid_prime_flip",
                [Tp, Sp(self.lp - 1), Tp, Sp(self.lp - 1)],
                [Sp(self.lp - 1), Tp, Sp(self.lp - 1), Tp],
            )
        for i in range(1, self.lp - 1):
            equal(f"comm_prime_flip_swap_{i}", [Tp, Sp(i)], [Sp(i), Tp])

        left_ops = [(f"swap_{i}", S(i)) for i in range(1, self.l)]
        if self.l >= 1:
            left_ops.append(("flip", T))
        right_ops = [(f"prime_swap_{i}", Sp(i)) for i in range(1, self.lp)]
        if self.lp >= 1:
            right_ops.append(("prime_flip", Tp))
        for an, a in left_ops:
            for bn, b in right_ops:
                equal(f"cross_{an}_{bn}", [a, b], [b, a])
        return checks

    def _run_word(self, keys: list, vec: dict) -> dict:
        for key in reversed(keys):
            vec = self.apply_gen(key, vec)
        return vec

    def relation_sides(self, chk: dict, vec: dict) -> tuple[dict, dict]:
        """Evaluate one suite entry on a vector, returning (lhs, rhs)."""
        if chk["kind"] == "equal":
            return self._run_word(chk["lhs"], vec), self._run_word(chk["rhs"], vec)
        R = self.ring
        par = R.monomial(1, chk["par"])
        w = self.apply_gen(chk["gen"], vec)
        lhs = self.apply_gen(chk["gen"], w)
        rhs = self._vsum(self._scaled(w, R.add(par, R.neg(R.one()))), self._scaled(vec, par))
        return lhs, rhs

    def verify_relations(self, columns: range | None = None) -> dict:
        """Run every defining relation column by column.

        Returns {"ok": bool, "dimension": ..., "relations": [{name, ok,
        failure?}...]}; a failure records the first offending basis column,
        entry, and residual.
        """
        cols = columns if columns is not None else range(self.dim)
        report = []
        all_ok = True
        for chk in self.relation_suite():
            t0 = time.perf_counter()
            failure = None
            for p in cols:
                v = self.basis_vec(p)
                lhs, rhs = self.relation_sides(chk, v)
                if lhs != rhs:
                    diff: dict = dict(lhs)
                    _add_scaled(self.ring, diff, rhs, self.ring.neg(self.ring.one()))
                    bad = min(diff)
                    failure = {
                        "column": self._index_obj(p),
                        "entry": self._index_obj(bad),
                        "residual": str(diff[bad]),
                    }
                    all_ok = False
                    break
            report.append(
                {
                    "name": chk["name"],
                    "ok": failure is None,
                    **({"failure": failure} if failure else {}),
                    "elapsed": time.perf_counter() - t0,
                }
            )
        return {"ok": all_ok, "dimension": self.dim, "grades": self.grade_dims(), "relations": report}

    # -- verification by evaluation at points --

    def materialize_columns(self) -> None:
        for key in self.gen_keys():
            for p in range(self.dim):
                self.column(key, p)

    def _exponent_interval(self, key: tuple) -> tuple[int, int]:
        # measured (min, max) exponent numerator over the generator matrix
        lo = hi = 0
        found = False
        for col in self._cols[key].values():
            for _, a in col:
                for e in a.terms:
                    if not found:
                        lo = hi = e
                        found = True
                    elif e < lo:
                        lo = e
                    elif e > hi:
                        hi = e
        return lo, hi

    def point_plan(self) -> dict:
        """Degree budget for deciding the relation suite by evaluation.

        Entry exponents of each assembled generator matrix are measured;
        interval arithmetic over each identity's factor words then bounds
        the exponent span of every matrix entry of lhs - rhs.  A Laurent
        identity of span D vanishing at D+1 distinct integer points >= 2
        vanishes identically, so that many points decide the suite.
        """
        assert isinstance(self.ring, LaurentRing)
        self.materialize_columns()
        iv = {key: self._exponent_interval(key) for key in self.gen_keys()}

        def word_iv(keys):
            lo = hi = 0
            for key in keys:
                lo += iv[key][0]
                hi += iv[key][1]
            return lo, hi

        span = 0
        for chk in self.relation_suite():
            if chk["kind"] == "equal":
                l1, h1 = word_iv(chk["lhs"])
                l2, h2 = word_iv(chk["rhs"])
                lo, hi = min(l1, l2), max(h1, h2)
            else:
                glo, ghi = iv[chk["gen"]]
                pe = int(2 * chk["par"])
                lo = min(2 * glo, glo + min(pe, 0), min(pe, 0))
                hi = max(2 * ghi, ghi + max(pe, 0), max(pe, 0))
            span = max(span, hi - lo)
        return {"span": span, "points": list(range(2, span + 3))}

    def evaluate_at(self, u0: int) -> "ThetaModule":
        """This module over exact rationals at nu**(1/2) = u0, generator
        columns evaluated from the symbolic ones rather than re-derived."""
        assert isinstance(self.ring, LaurentRing)
        self.materialize_columns()
        pt = ThetaModule(self.l, self.lp, self.mu, ring=FractionPointRing(u0))
        for key, table in self._cols.items():
            dst = pt._cols.setdefault(key, {})
            for p, col in table.items():
                ev = ((r, pt.ring.from_laurent(a)) for r, a in col)
                dst[p] = tuple((r, v) for r, v in ev if v)
        return pt

    def verify_relations_points(self, points: list[int] | None = None) -> dict:
        """Decide the relation suite by exact evaluation at integer points."""
        plan = self.point_plan()
        pts = list(points) if points is not None else plan["points"]
        per_point = []
        ok = True
        for u0 in pts:
            rep = self.evaluate_at(u0).verify_relations()
            ok = ok and rep["ok"]
            per_point.append(
                {
                    "point": u0,
                    "ok": rep["ok"],
                    "failed": [r["name"] for r in rep["relations"] if not r["ok"]],
                }
            )
        return {
            "ok": ok,
            "mode": "points",
            "dimension": self.dim,
            "grades": self.grade_dims(),
            "span": plan["span"],
            "points": pts,
            "reports": per_point,
        }

    def verify_relations_auto(self, symbolic_limit: int = 300) -> dict:
        """Column-by-column symbolic verification while the total dimension
        stays at or below symbolic_limit; past that, exact evaluation at
        enough integer points to decide every identity."""
        if self.dim <= symbolic_limit:
            out = self.verify_relations()
            out["mode"] = "symbolic"
            return out
        return self.verify_relations_points()

    # -- serialization --

    def _index_obj(self, p: int) -> dict:
        k, d1, d2, x = self.basis[p]
        return {"k": k, "d1": list(d1), "d2": list(d2), "x": list(x)}

    def vec_to_json(self, vec: dict) -> list[dict]:
        assert isinstance(self.ring, LaurentRing)
        return [
            {"index": self._index_obj(p), "coeff": vec[p].to_json_obj()}
            for p in sorted(vec)
            if not vec[p].is_zero()
        ]

    def vec_from_json(self, obj) -> dict:
        out = {}
        for item in obj:
            d = item["index"]
            idx = (d["k"], tuple(d["d1"]), tuple(d["d2"]), tuple(d["x"]))
            out[self.pos[idx]] = LaurentPoly.from_json_obj(item["coeff"])
        return out

    def operator_matrix(self, key: tuple) -> list[list]:
        """Columns of a generator in basis order, each a sparse [row, coeff] list."""
        out = []
        for p in range(self.dim):
            col = self.column(key, p)
            out.append([[r, c.to_json_obj()] for r, c in sorted(col)])
        return out

    # -- specialization at nu = 1 --

    def matrices_at_one(self) -> dict:
        """Integer matrices of every generator at nu = 1 (numpy, int64)."""
        import numpy as np

        assert isinstance(self.ring, LaurentRing)
        mats = {}
        for key in self.gen_keys():
            m = np.zeros((self.dim, self.dim), dtype=np.int64)
            for p in range(self.dim):
                for r, c in self.column(key, p):
                    m[r, p] = c.specialize_nu1()
            mats[key] = m
        return mats


def _inv(w: SignedPerm) -> SignedPerm:
    from .weylbc import inv as winv

    return winv(w)


@lru_cache(maxsize=None)
def distinguished_cache(kind: str, n: int, k: int):
    from .weylbc import distinguished_reps

    return distinguished_reps(CosetSpec(kind, n, k))


# -- nu = 1 representation of the product of signed groups -------------------


class GroupRepAtOne:
    """The pair of commuting signed-group representations cut out at nu = 1."""

    def __init__(self, mod: ThetaModule):
        import numpy as np

        self.l, self.lp = mod.l, mod.lp
        self.dim = mod.dim
        mats = mod.matrices_at_one()
        self._gen_left = {i: mats[("S", i)] for i in range(1, mod.l)}
        if mod.l >= 1:
            self._gen_left[mod.l] = mats[("T",)]
        self._gen_right = {i: mats[("Sp", i)] for i in range(1, mod.lp)}
        if mod.lp >= 1:
            self._gen_right[mod.lp] = mats[("Tp",)]
        self._eye = np.eye(self.dim, dtype=np.int64)
        self._cache_left: dict[SignedPerm, object] = {}
        self._cache_right: dict[SignedPerm, object] = {}

    def check_group_relations(self) -> None:
        """Generators square to the identity and satisfy the braid relations."""
        import numpy as np

        for gens, rank in ((self._gen_left, self.l), (self._gen_right, self.lp)):
            for g, m in gens.items():
                assert np.array_equal(m @ m, self._eye), f"generator {g} not an involution"
            for i in range(1, rank):
                for j in range(i + 1, rank + 1):
                    a, b = gens[i], gens[j]
                    if j == rank and i == rank - 1 and rank >= 2:
                        assert np.array_equal(a @ b @ a @ b, b @ a @ b @ a)
                    elif j == i + 1 and j < rank:
                        assert np.array_equal(a @ b @ a, b @ a @ b)
                    elif j > i + 1 or j == rank:
                        assert np.array_equal(a @ b, b @ a)
        for a in self._gen_left.values():
            for b in self._gen_right.values():
                assert np.array_equal(a @ b, b @ a), "sides fail to commute at nu = 1"

    def _rep(self, w: SignedPerm, gens, cache):
        got = cache.get(w)
        if got is None:
            got = self._eye
            for g in reduced_word(w):
                got = got @ gens[g]
            cache[w] = got
        return got

    def rep_left(self, w: SignedPerm):
        return self._rep(w, self._gen_left, self._cache_left)

    def rep_right(self, w: SignedPerm):
        return self._rep(w, self._gen_right, self._cache_right)

    def character(self) -> dict:
        """Trace on one representative per conjugacy-class pair.

        Keyed by ((pos_type, neg_type), (pos_type, neg_type)).
        """
        import numpy as np

        from .weylbc import conjugacy_classes

        out = {}
        for cl in conjugacy_classes(self.l):
            ml = self.rep_left(cl["rep"])
            for cr in conjugacy_classes(self.lp):
                mr = self.rep_right(cr["rep"])
                out[(cl["type"], cr["type"])] = int(np.trace(ml @ mr))
        return out

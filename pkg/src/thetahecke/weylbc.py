"""Signed permutations and their Coxeter combinatorics.

The signed permutation group of rank l consists of bijections w of
{-l,...,-1,1,...,l} with w(-i) = -w(i); we store the image tuple
(w(1),...,w(l)).  Generators are numbered 1..l: index i < l is the adjacent
swap of positions i, i+1 and index l is the sign flip at the last position.
With this numbering the flip generator sorts after every swap, which fixes
the deterministic choice made by ``reduced_word``.

Coset combinatorics here covers the two parabolic shapes the theta module
needs: a two-block symmetric subgroup inside the unsigned group, and a
symmetric-times-signed block subgroup inside the full signed group.
Distinguished (minimal length) left-coset representatives are produced in
closed form and checked against descent criteria.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

SignedPerm = tuple[int, ...]


# -- elementary group operations ------------------------------------------


def identity(l: int) -> SignedPerm:
    return tuple(range(1, l + 1))


def mul(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """Composition a after b: (a*b)(i) = a(b(i)), signs multiplying through.

    >>> mul((2, 1), (1, -2))
    (2, -1)
    """
    assert len(a) == len(b)
    out = []
    for v in b:
        img = a[abs(v) - 1]
        out.append(img if v > 0 else -img)
    return tuple(out)


def inv(w: SignedPerm) -> SignedPerm:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return tuple(out)


def gen_perm(g: int, l: int) -> SignedPerm:
    """The generator with index g (swap for g < l, sign flip for g == l)."""
    assert 1 <= g <= l
    img = list(range(1, l + 1))
    if g == l:
        img[l - 1] = -l
    else:
        img[g - 1], img[g] = img[g], img[g - 1]
    return tuple(img)


def word_to_perm(word: list[int], l: int) -> SignedPerm:
    """Product of generators, leftmost factor applied last (outermost)."""
    out = identity(l)
    for g in word:
        out = mul(out, gen_perm(g, l))
    return out


def is_unsigned(w: SignedPerm) -> bool:
    return all(v > 0 for v in w)


def num_flips(w: SignedPerm) -> int:
    """Number of sign-flip letters in any reduced word (= negative entries)."""
    return sum(1 for v in w if v < 0)


# -- length ----------------------------------------------------------------


def _mirror(w: SignedPerm) -> SignedPerm:
    # conjugate by the position reversal, moving the flip generator from the
    # last position to the first so the textbook length statistic applies
    l = len(w)
    out = []
    for i in range(l, 0, -1):
        v = w[i - 1]
        out.append((l + 1 - abs(v)) * (1 if v > 0 else -1))
    return tuple(out)


def length(w: SignedPerm) -> int:
    """Coxeter length.

    Computed by the standard type-B statistic (inversions plus absolute
    values at negative entries) after mirroring coordinates; the mirroring
    accounts for our flip generator living at the last position.

    >>> length((1, -2))
    1
    >>> length((-1, 2))
    3
    """
    u = _mirror(w)
    n = len(u)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])
    return inversions + sum(-v for v in u if v < 0)


def left_descents(w: SignedPerm) -> list[int]:
    l = len(w)
    lw = length(w)
    return [g for g in range(1, l + 1) if length(mul(gen_perm(g, l), w)) < lw]


def reduced_word(w: SignedPerm) -> list[int]:
    """A reduced word, deterministic: lowest-index left descent first.

    >>> reduced_word((-1, 2))
    [1, 2, 1]
    """
    l = len(w)
    word = []
    cur = w
    while cur != identity(l):
        ds = left_descents(cur)
        assert ds, f"no descent for non-identity {cur}"
        g = ds[0]
        word.append(g)
        cur = mul(gen_perm(g, l), cur)
    return word


def reduced_word_rightmost(w: SignedPerm) -> list[int]:
    """An alternative reduced word peeling highest-index right descents."""
    l = len(w)
    word = []
    cur = w
    lw = length(cur)
    while cur != identity(l):
        g = next(
            g
            for g in range(l, 0, -1)
            if length(mul(cur, gen_perm(g, l))) < lw
        )
        word.insert(0, g)
        cur = mul(cur, gen_perm(g, l))
        lw -= 1
    return word


# -- special elements -------------------------------------------------------


def flip_at(k: int, l: int) -> SignedPerm:
    """Sign change at position k alone (conjugate of the flip generator).

    >>> flip_at(1, 2)
    (-1, 2)
    """
    assert 1 <= k <= l
    img = list(range(1, l + 1))
    img[k - 1] = -k
    return tuple(img)


def swap_range(i: int, j: int, l: int) -> SignedPerm:
    """The cycle product s_(j-1)...s_i for i <= j (identity when i == j)."""
    assert 1 <= i <= j <= l
    return word_to_perm(list(range(j - 1, i - 1, -1)), l)


def cross_block_cycle(l: int, k: int) -> SignedPerm:
    """The product s_(l-1) s_(l-2) ... s_(l-k); identity for k == 0."""
    assert 0 <= k <= l - 1 or (k == 0 and l >= 0)
    return word_to_perm(list(range(l - 1, l - k - 1, -1)), l)


# -- parabolic cosets --------------------------------------------------------


@dataclass(frozen=True)
class CosetSpec:
    """A block parabolic subgroup, for distinguished-representative purposes.

    kind 'sym_block': the subgroup S_(n-k) x S_k of the unsigned group S_n,
    blocks {1..n-k} and {n-k+1..n}.

    kind 'mixed_block': the subgroup S_k x W_(n-k) of the signed group W_n,
    S_k unsigned on {1..k}, full signed group on {k+1..n}.
    """

    kind: str
    n: int
    k: int

    def __post_init__(self):
        assert self.kind in ("sym_block", "mixed_block")
        assert 0 <= self.k <= self.n

    def parabolic_gens(self) -> list[int]:
        n, k = self.n, self.k
        if self.kind == "sym_block":
            return [g for g in range(1, n) if g != n - k]
        gens = [g for g in range(1, n) if g != k]
        if n - self.k >= 1:
            gens.append(n)  # the flip generator belongs to the signed block
        return gens


def is_distinguished(w: SignedPerm, spec: CosetSpec) -> bool:
    """No right descent at any parabolic generator."""
    l = len(w)
    assert l == spec.n
    lw = length(w)
    return all(length(mul(w, gen_perm(g, l))) > lw for g in spec.parabolic_gens())


def _perm_sort_key(w: SignedPerm):
    return (length(w), w)


@lru_cache(maxsize=None)
def distinguished_reps(spec: CosetSpec) -> tuple[SignedPerm, ...]:
    """Minimal-length left-coset representatives, sorted by (length, images).

    sym_block: one representative per k-subset of values routed to the second
    block, increasing within each block.

    mixed_block: one representative per choice of k signed values for the
    leading block.  The head is sorted by the mirrored-value order (the flip
    generator acts at the last position, so the minimal arrangement sorts
    values v by decreasing sign(v)*(n+1-|v|)); the remaining absolute values
    sit on the tail, positive and increasing.
    """
    n, k = spec.n, spec.k
    reps = []
    if spec.kind == "sym_block":
        for subset in itertools.combinations(range(1, n + 1), k):
            chosen = set(subset)
            rest = [v for v in range(1, n + 1) if v not in chosen]
            reps.append(tuple(rest + sorted(subset)))
    else:
        def mirror_key(v: int) -> int:
            return -(n + 1 - abs(v)) if v > 0 else (n + 1 - abs(v))

        for subset in itertools.combinations(range(1, n + 1), k):
            chosen = set(subset)
            rest = [v for v in range(1, n + 1) if v not in chosen]
            for signs in itertools.product((1, -1), repeat=k):
                head = sorted((s * v for s, v in zip(signs, subset)), key=mirror_key)
                reps.append(tuple(head + rest))
    reps.sort(key=_perm_sort_key)
    for d in reps:
        assert is_distinguished(d, spec), (d, spec)
    return tuple(reps)


def distinguished_reps_bruteforce(spec: CosetSpec) -> tuple[SignedPerm, ...]:
    """Independent route: scan the whole group for coset minima (small n)."""
    group = (
        all_unsigned_perms(spec.n) if spec.kind == "sym_block" else all_signed_perms(spec.n)
    )
    best: dict[tuple, SignedPerm] = {}
    for w in group:
        key = _coset_key(w, spec)
        cur = best.get(key)
        if cur is None or _perm_sort_key(w) < _perm_sort_key(cur):
            best[key] = w
    return tuple(sorted(best.values(), key=_perm_sort_key))


def _coset_key(w: SignedPerm, spec: CosetSpec):
    n, k = spec.n, spec.k
    if spec.kind == "sym_block":
        return (tuple(sorted(w[: n - k])), tuple(sorted(w[n - k :])))
    return (tuple(sorted(w[:k])), tuple(sorted(abs(v) for v in w[k:])))


def deodhar_transfer(d: SignedPerm, g: int, spec: CosetSpec):
    """Multiply a distinguished representative by a generator on the left.

    Returns ('coset', g*d, +1 or -1) when g*d is again distinguished, the
    sign recording the length change; otherwise ('transfer', h) where h is
    the parabolic generator index with g*d = d*h.
    """
    l = len(d)
    gp = gen_perm(g, l)
    gd = mul(gp, d)
    if is_distinguished(gd, spec):
        return ("coset", gd, 1 if length(gd) > length(d) else -1)
    h = mul(mul(inv(d), gp), d)
    for t in spec.parabolic_gens():
        if h == gen_perm(t, l):
            return ("transfer", t)
    raise AssertionError(f"transfer fell outside the parabolic: d={d} g={g}")


def double_coset_split(d1: SignedPerm, k: int):
    """Split a representative for the two-block quotient along the extra
    one-position block at the end.

    Returns ('fix', d1) when d1 fixes the last position, else ('cross', y)
    with d1 = y * cross_block_cycle(l, k) and lengths adding.
    """
    l = len(d1)
    assert is_unsigned(d1)
    if d1[l - 1] == l:
        return ("fix", d1)
    w2 = cross_block_cycle(l, k)
    y = mul(d1, inv(w2))
    assert y[l - 1] == l, f"cross-branch remainder moves the last position: {d1}"
    assert length(d1) == length(y) + k, f"lengths fail to add for {d1}"
    return ("cross", y)


# -- enumeration and conjugacy ----------------------------------------------


def all_unsigned_perms(l: int) -> list[SignedPerm]:
    return [tuple(p) for p in itertools.permutations(range(1, l + 1))]


def all_signed_perms(l: int) -> list[SignedPerm]:
    out = []
    for p in itertools.permutations(range(1, l + 1)):
        for signs in itertools.product((1, -1), repeat=l):
            out.append(tuple(s * v for s, v in zip(signs, p)))
    return out


def group_order(l: int) -> int:
    out = 1
    for i in range(1, l + 1):
        out *= 2 * i
    return out


def cycle_type(w: SignedPerm) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Signed cycle type: (positive-cycle lengths, negative-cycle lengths),
    each sorted decreasingly.  A cycle is negative when the signs along it
    multiply to -1.

    >>> cycle_type((1, -2))
    ((1,), (1,))
    """
    l = len(w)
    seen = [False] * (l + 1)
    pos, neg = [], []
    for start in range(1, l + 1):
        if seen[start]:
            continue
        i, sign, size = start, 1, 0
        while True:
            seen[i] = True
            size += 1
            v = w[i - 1]
            if v < 0:
                sign = -sign
            i = abs(v)
            if i == start:
                break
        (pos if sign > 0 else neg).append(size)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def _partitions(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    cap = n if cap is None else min(cap, n)
    out = []
    for head in range(cap, 0, -1):
        for rest in _partitions(n - head, head):
            out.append((head,) + rest)
    return out


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, decreasing parts, reverse-lex order."""
    return _partitions(n)


def _centralizer_factor(lam: tuple[int, ...]) -> int:
    out = 1
    for j in set(lam):
        m = lam.count(j)
        f = 1
        for i in range(1, m + 1):
            f *= i
        out *= (2 * j) ** m * f
    return out


def class_rep(lam: tuple[int, ...], mu: tuple[int, ...], l: int) -> SignedPerm:
    """A block representative with the given signed cycle type."""
    assert sum(lam) + sum(mu) == l
    img = [0] * l
    pos = 0
    for j in lam:
        for t in range(j):
            img[pos + t] = pos + t + 2 if t < j - 1 else pos + 1
        pos += j
    for j in mu:
        for t in range(j):
            img[pos + t] = pos + t + 2 if t < j - 1 else -(pos + 1)
        pos += j
    return tuple(img)


def conjugacy_classes(l: int) -> list[dict]:
    """Classes of the rank-l signed group: signed cycle type pairs with
    representative and size (order / centralizer product)."""
    out = []
    order = group_order(l)
    for a in range(l + 1):
        for lam in partitions(a):
            for mu in partitions(l - a):
                size = order // (_centralizer_factor(lam) * _centralizer_factor(mu))
                out.append(
                    {
                        "type": (lam, mu),
                        "rep": class_rep(lam, mu, l),
                        "size": size,
                    }
                )
    out.sort(key=lambda c: c["type"])
    return out


def sym_conjugacy_classes(l: int) -> list[dict]:
    """Classes of the unsigned symmetric group by cycle type."""
    out = []
    fact = 1
    for i in range(1, l + 1):
        fact *= i
    for lam in partitions(l):
        z = 1
        for j in set(lam):
            m = lam.count(j)
            f = 1
            for i in range(1, m + 1):
                f *= i
            z *= j**m * f
        out.append({"type": lam, "rep": class_rep(lam, (), l), "size": fact // z})
    out.sort(key=lambda c: c["type"])
    return out


def block_split(w: SignedPerm, a: int) -> tuple[SignedPerm, SignedPerm] | None:
    """Split a block-preserving element of rank a+b into its two factors;
    None when the blocks mix."""
    l = len(w)
    first, second = [], []
    for i, v in enumerate(w, start=1):
        if i <= a:
            if abs(v) > a:
                return None
            first.append(v)
        else:
            if abs(v) <= a:
                return None
            second.append(v - a if v > 0 else v + a)
    return tuple(first), tuple(second)


# -- BFS oracle (tests) ------------------------------------------------------


def bfs_lengths(l: int) -> dict[SignedPerm, int]:
    """Word lengths by breadth-first search over the Cayley graph."""
    start = identity(l)
    dist = {start: 0}
    frontier = [start]
    gens = [gen_perm(g, l) for g in range(1, l + 1)]
    while frontier:
        nxt = []
        for w in frontier:
            for gp in gens:
                u = mul(gp, w)
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    return dist

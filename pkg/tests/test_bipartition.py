"""Partition combinatorics, characters of both group families, lifts."""

from fractions import Fraction

import pytest

from thetahecke.bipartition import (
    amr_lift,
    bip_product,
    bipartitions,
    check_partition,
    decompose,
    eps_twist,
    eps_value,
    expected_decomposition,
    expected_module_character,
    is_multiplicity_free,
    part_splits,
    part_union,
    pieri_add,
    pieri_remove,
    r1,
    signed_centralizer,
    signed_class_types,
    sn_char,
    sn_dim,
    sym_centralizer,
    sym_product,
    theta_lift,
    wl_char,
    wl_char_table,
    wl_inner,
)
from thetahecke.weylbc import partitions as partitions_of

# -- plain partitions ----------------------------------------------------------


def test_counting():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert [len(bipartitions(m)) for m in range(7)] == [1, 2, 5, 10, 20, 36, 65]
    for m in range(5):
        assert len(signed_class_types(m)) == len(bipartitions(m))


def test_check_partition_rejects_garbage():
    assert check_partition([3, 1]) == (3, 1)
    for bad in ([1, 3], [0], [2, -1], [1.5]):
        with pytest.raises((ValueError, TypeError)):
            check_partition(bad)


S3_TABLE = {
    # class: (3) -> chi, (2,1) -> chi, (1,1,1) -> chi
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}

S4_TABLE = {
    (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
    (3, 1): {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
    (2, 2): {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
    (2, 1, 1): {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
    (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
}


@pytest.mark.parametrize("table", [S3_TABLE, S4_TABLE])
def test_sn_char_against_frozen_tables(table):
    for lam, row in table.items():
        for rho, want in row.items():
            assert sn_char(lam, rho) == want


def test_sn_dim_is_identity_value():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert sn_dim(lam) == sn_char(lam, (1,) * n)
    # hook products, spot value
    assert sn_dim((3, 2)) == 5
    assert sn_dim((2, 2, 1)) == 5


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sn_orthogonality(n):
    lams = partitions_of(n)
    for a in lams:
        for b in lams:
            inner = sum(
                Fraction(sn_char(a, rho) * sn_char(b, rho), sym_centralizer(rho))
                for rho in lams
            )
            assert inner == (1 if a == b else 0)


# -- horizontal strips ----------------------------------------------------------


def contains(big, small):
    if len(small) > len(big):
        return False
    return all(small[i] <= big[i] for i in range(len(small)))


def is_horizontal_strip(big, small):
    """No two added cells share a column: big_{i+1} <= small_i rowwise."""
    if not contains(big, small):
        return False
    padded = list(small) + [0] * (len(big) - len(small))
    return all(big[i + 1] <= padded[i] for i in range(len(big) - 1))


def brute_pieri_add(lam, i):
    out = {}
    for mu in partitions_of(sum(lam) + i):
        if is_horizontal_strip(mu, lam):
            out[mu] = 1
    return out


@pytest.mark.parametrize("size", range(6))
def test_pieri_add_matches_cell_oracle(size):
    for lam in partitions_of(size):
        for i in range(6 - size + 1):
            assert pieri_add(lam, i) == brute_pieri_add(lam, i)


def test_pieri_adjointness():
    for n in range(7):
        for lam in partitions_of(n):
            for i in range(0, 7 - n):
                for mu in partitions_of(n + i):
                    assert (mu in pieri_add(lam, i)) == (lam in pieri_remove(mu, i))


def test_r1_is_first_part():
    for n in range(11):
        for lam in partitions_of(n):
            assert r1(lam) == (lam[0] if lam else 0)


def test_pieri_trivia():
    assert pieri_add((), 0) == {(): 1}
    assert pieri_add((2, 1), 0) == {(2, 1): 1}
    assert pieri_remove((1,), 2) == {}
    assert set(pieri_add((2,), 2)) == {(4,), (3, 1), (2, 2)}


# -- signed-group characters ------------------------------------------------------


def test_class_data_partitions_group():
    import math

    for m in range(1, 5):
        order = 2**m * math.factorial(m)
        assert sum(order // signed_centralizer(c) for c in signed_class_types(m)) == order


def test_trivial_and_sign_labels():
    for m in range(1, 5):
        for cls in signed_class_types(m):
            assert wl_char(((m,), ()), cls) == 1
            assert wl_char(((), (m,)), cls) == eps_value(cls)


def test_eps_value_counts_negative_parts():
    assert eps_value(((2, 1), ())) == 1
    assert eps_value(((1,), (2,))) == -1
    assert eps_value(((), (2, 2))) == 1
    assert eps_value(((), (3, 2, 1))) == -1


def test_eps_twist_swaps_slots_classwise():
    for m in range(1, 4):
        for bip in bipartitions(m):
            twisted = eps_twist({bip: 1})
            assert twisted == {(bip[1], bip[0]): 1}
            for cls in signed_class_types(m):
                assert wl_char(bip, cls) * eps_value(cls) == wl_char(
                    (bip[1], bip[0]), cls
                )


@pytest.mark.parametrize("m", [1, 2, 3])
def test_wl_orthogonality(m):
    table = wl_char_table(m)
    bips = list(table)
    for a in bips:
        for b in bips:
            assert wl_inner(table[a], table[b], m) == (1 if a == b else 0)


def test_wl_dimensions():
    import math

    for m in range(1, 5):
        id_cls = ((1,) * m, ())
        for alpha, beta in bipartitions(m):
            a = sum(alpha)
            want = math.comb(m, a) * sn_dim(alpha) * sn_dim(beta)
            assert wl_char((alpha, beta), id_cls) == want


# -- products and branching --------------------------------------------------------


def test_sym_product_small():
    assert sym_product((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert sym_product((2,), (1,)) == {(3,): 1, (2, 1): 1}
    assert sym_product((2, 1), (1,)) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    # row products agree with strip addition
    for lam in partitions_of(3):
        for k in range(3):
            assert sym_product(lam, (k,) if k else ()) == pieri_add(lam, k)


def test_bip_product_is_slotwise():
    one = ((1,), ())
    assert bip_product({one: 1}, {one: 1}) == {((2,), ()): 1, ((1, 1), ()): 1}
    assert bip_product(one, ((), (1,))) == {((1,), (1,)): 1}
    a = {((1,), (1,)): 1}
    prod = bip_product(a, a)
    assert prod == {
        ((2,), (2,)): 1,
        ((2,), (1, 1)): 1,
        ((1, 1), (2,)): 1,
        ((1, 1), (1, 1)): 1,
    }
    # twisting distributes over the slotwise product
    assert eps_twist(prod) == bip_product(eps_twist(a), eps_twist(a))


def test_branching_trivial_from_plain_subgroup():
    """Inducing the trivial character of the plain subgroup gives the sum of
    all two-row labels, classwise."""
    from thetahecke.bipartition import sym_centralizer as zs

    for d in range(1, 5):
        for cls in signed_class_types(d):
            lam, mu = cls
            induced = Fraction(signed_centralizer(cls), zs(lam)) if mu == () else 0
            want = sum(wl_char(((a,) if a else (), (d - a,) if d - a else ()), cls) for a in range(d + 1))
            assert induced == want


def test_part_splits_and_union():
    assert part_union((2, 1), (1,)) == (2, 1, 1)
    splits = list(part_splits((2, 1, 1)))
    assert ((2, 1), (1,)) in splits or ((1,), (2, 1)) in splits
    for a, b in splits:
        assert part_union(a, b) == (2, 1, 1)
    # split count: each distinct part value contributes multiplicity+1 choices
    assert len(list(part_splits((2, 1, 1)))) == 2 * 3


# -- lifts --------------------------------------------------------------------------


def test_theta_lift_contract_example():
    lift = theta_lift((), (1,), 1, 1)
    assert lift == {((), (1,)): 1, ((1,), ()): 1}


def test_theta_lift_sizes_and_freeness():
    for l in range(4):
        for lp in range(4):
            for alpha, beta in bipartitions(l):
                lift = theta_lift(alpha, beta, l, lp)
                assert is_multiplicity_free(lift)
                assert all(sum(a) + sum(b) == lp for a, b in lift)


def test_theta_lift_monotone_in_target_rank():
    # once the label occurs, it keeps occurring further up the tower
    alpha, beta = (2,), (1,)
    occs = [bool(theta_lift(alpha, beta, 3, lp)) for lp in range(6)]
    assert occs == sorted(occs)


def test_amr_lift_is_slot_flipped_theta_lift():
    for l in range(3):
        for lp in range(3):
            for alpha, beta in bipartitions(l):
                flipped = amr_lift(0, l, lp, alpha, beta)
                lift = theta_lift(alpha, beta, l, lp)
                assert flipped == {(bp, ap): m for (ap, bp), m in lift.items()}


def test_amr_lift_vanishing_example():
    assert amr_lift(0, 1, 0, (1,), ()) == {}


# -- module-side predictions ---------------------------------------------------------


def test_expected_decomposition_rank_one():
    want = {
        ((((1,), ()), ((), (1,)))): 1,
        ((((), (1,)), ((1,), ()))): 1,
        ((((), (1,)), ((), (1,)))): 1,
    }
    assert expected_decomposition(1, 1) == want


def test_predicted_character_decomposes_consistently():
    for l, lp in [(1, 1), (2, 1), (2, 2)]:
        char = expected_module_character(l, lp)
        assert decompose(char, l, lp) == expected_decomposition(l, lp)

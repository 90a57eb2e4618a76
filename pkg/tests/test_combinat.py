import itertools

import pytest
from hypothesis import given, strategies as st

from qweb import combinat as cb


partitions = st.lists(st.integers(1, 5), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_bar_and_tilde():
    assert cb.bar_partition((3, 2)) == (2, 1)
    assert cb.bar_partition((3, 1)) == (2, 0)
    assert cb.bar_partition(()) == ()
    assert cb.tilde_partition((3, 2)) == (1, 1)
    assert cb.from_tilde((1, 1), 2) == (3, 2)


def test_dominance():
    assert cb.dominance_leq((2, 1, 1), (3, 1))
    assert cb.dominance_leq((2, 2), (2, 2))
    assert not cb.dominance_leq((3, 1), (2, 2))
    with pytest.raises(ValueError):
        cb.dominance_leq((2,), (1,))


def test_sort_desc():
    assert cb.sort_desc((1, 3, 2)) == (3, 2, 1)
    assert cb.sort_desc((0, 2, 0)) == (2,)
    assert cb.union((2, 1), (3,)) == (3, 2, 1)
    with pytest.raises(ValueError):
        cb.sort_desc((1, -1))


def test_apply_raising():
    assert cb.apply_raising({(1, 2)}, (1, 1)) == (2, 0)
    assert cb.apply_raising(set(), (2, 0)) == (2, 0)
    assert cb.apply_raising({(1, 2), (1, 3)}, (1, 1, 0)) == (3, 0, -1)
    assert len(list(cb.raising_subsets(3))) == 8


def test_gamma_packet():
    assert cb.gamma_packet((3, 1), (2, 1)) == (1, 1)
    assert cb.gamma_packet((2, 1), ()) == ()
    assert cb.gamma_packet((3, 2), (3,)) == (2,)
    # windows are half-open above: a part equal to bar(lam)_1 is not counted
    # into the top packet
    assert cb.gamma_packet((2,), (1,)) == ()
    with pytest.raises(ValueError):
        cb.gamma_packet((2, 2), (1,))


def test_nu_profile():
    assert cb.nu_profile((3, 1), (2, 1)) == (1, 1, 0, 0)
    assert cb.nu_profile((3, 2), ()) == (1, 1)
    assert cb.nu_profile((2,), (1,)) == (1, 1)


def test_gamma_profile_consistency():
    # nu is the multiset union of tilde(lam) and mu - gamma, and gamma
    # fits under mu with partition difference
    for a, k in [(3, 1), (3, 2), (4, 2)]:
        for lam in cb.strict_partitions_fixed_length(a, k):
            for w in range(0, 5):
                for mu in cb.partitions_of(w, a):
                    gam = cb.gamma_packet(lam, mu)
                    gam_p = gam + (0,) * (len(mu) - len(gam))
                    assert all(g <= m for g, m in zip(gam_p, mu))
                    diff = tuple(m - g for m, g in zip(mu, gam_p))
                    assert all(diff[i] >= diff[i + 1] for i in range(len(diff) - 1))
                    nu = cb.nu_profile(lam, mu)
                    assert sorted(nu) == sorted(
                        cb.tilde_partition(lam) + diff
                    )
                    assert all(nu[i] >= nu[i + 1] for i in range(len(nu) - 1))


def test_pair_lt():
    p = cb.PairIndex((3, 1), (2, 1), 4)
    q = cb.PairIndex((3, 2), (2,), 4)
    assert cb.pair_lt(p, q)
    assert not cb.pair_lt(q, p)
    assert not cb.pair_lt(p, p)
    with pytest.raises(ValueError):
        cb.pair_lt(p, cb.PairIndex((2, 1), (1,), 4))


def test_enumerate_matrices():
    ms = cb.enumerate_matrices((1, 1), (1, 1))
    assert ms == [((1, 0), (0, 1)), ((0, 1), (1, 0))]
    assert cb.enumerate_matrices((2,), (2,)) == [((2,),)]
    assert len(cb.enumerate_matrices((2, 1), (1, 1, 1))) == 3
    assert cb.enumerate_matrices((2,), (1,)) == []


def test_v_graph_basics():
    for (lam, mu, a) in [((3, 1), (2, 1), 4), ((2,), (1,), 3), ((4, 2), (2, 2), 4)]:
        verts, edges = cb.v_graph(lam, mu, a)
        assert lam in verts
        assert cb.beta_of(lam, mu, lam) == cb.canonical(mu)
        assert cb.is_connected(verts, edges)


@given(partitions, partitions)
def test_union_monotone_reflexive(alpha, beta):
    u = cb.union(alpha, beta)
    assert sorted(u, reverse=True) == list(u)
    assert sum(u) == sum(alpha) + sum(beta)


def test_union_dominance_monotonicity():
    # alpha <= beta and gamma <= delta imply union comparisons, weights <= 6
    parts = [p for w in range(7) for p in cb.partitions_of(w)]
    by_weight = {}
    for p in parts:
        by_weight.setdefault(sum(p), []).append(p)
    for w1, group1 in by_weight.items():
        for w2, group2 in by_weight.items():
            if w1 + w2 > 6:
                continue
            for a in group1:
                for b in group1:
                    if not cb.dominance_leq(a, b):
                        continue
                    for g in group2:
                        for d in group2:
                            if cb.dominance_leq(g, d):
                                assert cb.dominance_leq(
                                    cb.union(a, g), cb.union(b, d)
                                )


def test_mu_minus_alpha_dominance():
    # [mu - gamma] <= [mu - alpha] for alpha in I_{k,mu}, gamma = [alpha]
    for k in (1, 2, 3):
        for w in range(0, 7):
            for mu in cb.partitions_of(w):
                for alpha in cb.index_tuples(k, mu):
                    gamma = tuple(sorted(alpha, reverse=True))
                    lhs = cb.sort_desc(tuple(m - g for m, g in zip(mu, gamma)))
                    rhs = cb.sort_desc(tuple(m - x for m, x in zip(mu, alpha)))
                    assert cb.dominance_leq(lhs, rhs)


def test_pair_maximality():
    # (lam, mu) is maximal among {(alpha, beta_alpha)} over the vertex set
    for a in (3, 4):
        for k in (1, 2):
            for lam in cb.strict_partitions_fixed_length(a, k):
                for w in range(0, 4):
                    for mu in cb.partitions_of(w, a):
                        pref = cb.PairIndex(lam, mu, a)
                        verts, _ = cb.v_graph(lam, mu, a)
                        for alpha in verts:
                            beta = cb.beta_of(lam, mu, alpha)
                            if any(p > a for p in beta):
                                continue
                            other = cb.PairIndex(alpha, beta, a)
                            if other == pref:
                                continue
                            assert cb.pair_lt(other, pref) or not cb.pair_lt(
                                pref, other
                            )


def test_pair_order_from_profile_dominance():
    # alpha-tilde cup [beta - gamma] dominated by the profile forces the
    # pair order, checked exhaustively at small size
    a = 4
    for k in (1, 2):
        for d in range(0, 5):
            pairs = cb.pair_set(a, k, d)
            for p in pairs:
                gam = cb._gamma_padded(p.lam, p.mu)
                prof = cb.sort_desc(
                    cb.tilde_partition(p.lam)
                    + tuple(m - g for m, g in zip(p.mu, gam))
                )
                for q in pairs:
                    if q == p:
                        continue
                    gq = gam + (0,) * max(0, len(q.mu) - len(gam))
                    if len(q.mu) < len(gam):
                        if any(g > 0 for g in gam[len(q.mu):]):
                            continue
                        gq = gam[: len(q.mu)]
                    diff = tuple(m - g for m, g in zip(q.mu, gq))
                    if any(x < 0 for x in diff):
                        continue
                    cand = cb.sort_desc(cb.tilde_partition(q.lam) + diff)
                    if sum(cand) != sum(prof):
                        continue
                    if cb.dominance_leq(cand, prof):
                        assert cb.pair_lt(q, p) or q == p

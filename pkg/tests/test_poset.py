"""Poset layer: order axioms, chain enumeration against an independent DP
count, ensembles/pseudo-ensembles against brute-force subset filtering, and
the canonical-form round trip."""

import random

import pytest

from weylfan.poset import (
    INF,
    Chain,
    Ensemble,
    Interval,
    PosetPoint,
    PseudoEnsemble,
    all_points,
    chain_count,
    ensemble_rank,
    enumerate_chains,
    enumerate_ensembles,
    enumerate_pseudo_ensembles,
    interval_realize,
    is_chain,
    level_set,
    sort_key,
    star_size,
)

P = PosetPoint


def powerset(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield {items[i] for i in range(len(items)) if mask >> i & 1}


def test_level_set_contents():
    assert level_set(3, 2) == [P(0, 2), P(1, 1), P(2, 0)]
    assert level_set(5, 0) == [P(0, 0)]
    with pytest.raises(ValueError):
        level_set(3, 4)
    with pytest.raises(ValueError):
        level_set(3, -1)


@pytest.mark.parametrize("n", range(0, 9))
def test_levels_partition_and_size(n):
    pts = all_points(n)
    assert len(pts) == star_size(n) == n * (n + 3) // 2
    by_level = [p for i in range(1, n + 1) for p in sorted(level_set(n, i), key=sort_key)]
    assert sorted(pts, key=sort_key) == sorted(by_level, key=sort_key)
    assert all(len(level_set(n, i)) == i + 1 for i in range(n + 1))


def test_order_axioms_seeded():
    rng = random.Random(20250825)
    pts = all_points(8, include_origin=True)
    for _ in range(500):
        p, q, r = (rng.choice(pts) for _ in range(3))
        assert p <= p
        if p <= q and q <= p:
            assert p == q
        if p <= q and q <= r:
            assert p <= r
        assert (p <= q) == (p.a <= q.a and p.b <= q.b)
        assert p <= INF and not (INF <= p) and INF <= INF


def test_interval_realize():
    iv = Interval(P(1, 0), P(2, 1))
    assert interval_realize(iv, 3) == [P(1, 0), P(2, 0), P(1, 1), P(2, 1)]
    assert interval_realize(Interval(P(0, 0), P(0, 0)), 3, ambient="E") == [P(0, 0)]
    assert interval_realize(Interval(P(0, 0), P(0, 0)), 3) == []
    assert interval_realize(Interval(P(1, 1), INF), 3) == [P(1, 1), P(2, 1), P(1, 2)]
    with pytest.raises(ValueError):
        Interval(P(1, 0), P(0, 1))
    with pytest.raises(ValueError):
        interval_realize(iv, 3, ambient="F")


def test_chain_enumeration_order_n2():
    got = list(enumerate_chains(2, 2))
    assert got == [
        (P(1, 0), P(2, 0)),
        (P(1, 0), P(1, 1)),
        (P(0, 1), P(1, 1)),
        (P(0, 1), P(0, 2)),
    ]


def test_chain_edge_cases():
    assert list(enumerate_chains(3, 0)) == [()]
    assert list(enumerate_chains(3, -1)) == []
    assert list(enumerate_chains(3, 4)) == []
    assert chain_count(3, 0) == 1 and chain_count(3, -1) == 0 and chain_count(3, 4) == 0


def _brute_chain_count(n, k):
    pts = all_points(n)
    if k == 0:
        return 1
    count = 0
    for subset in powerset(pts):
        if len(subset) == k and is_chain(subset):
            count += 1
    return count


@pytest.mark.parametrize("n", range(0, 5))
def test_chain_counts_three_ways(n):
    for k in range(0, n + 1):
        enumerated = sum(1 for _ in enumerate_chains(n, k))
        assert enumerated == chain_count(n, k) == _brute_chain_count(n, k)


def test_chains_are_chains_and_lex_sorted():
    for n in range(1, 7):
        for k in range(n + 1):
            keys = []
            for c in enumerate_chains(n, k):
                assert is_chain(c)
                assert list(c) == sorted(c, key=sort_key)
                keys.append([sort_key(p) for p in c])
            assert keys == sorted(keys)


def test_translation_isomorphism():
    # The points strictly above P form a copy of E*_{n - level(P)} via Q -> Q - P.
    n = 7
    for p in [P(1, 0), P(0, 2), P(2, 1), P(3, 3)]:
        above = [q for q in all_points(n) if q > p]
        image = sorted((PosetPoint(q.a - p.a, q.b - p.b) for q in above), key=sort_key)
        assert image == sorted(all_points(n - p.level), key=sort_key)
        for j in range(0, n - p.level + 1):
            local = sum(1 for c in enumerate_chains(n, j) if all(q > p for q in c))
            assert local == chain_count(n - p.level, j)


# --- ensembles ---------------------------------------------------------------


def test_ensemble_validation():
    o = P(0, 0)
    with pytest.raises(ValueError):
        Ensemble(2, ())
    with pytest.raises(ValueError):
        Ensemble(2, (Interval(P(1, 0), P(1, 1)),))  # must start at the origin
    with pytest.raises(ValueError):
        Ensemble(2, (Interval(o, P(1, 1)),))  # last finite end at level n
    with pytest.raises(ValueError):
        Ensemble(3, (Interval(o, P(1, 0)), Interval(P(1, 1), INF)),)  # gap fails
    e = Ensemble(3, (Interval(o, P(1, 0)), Interval(P(2, 1), INF)))
    assert e.realized() == {P(1, 0), P(2, 1)}
    assert e.rank == 2 and e.interval_count == 2 and ensemble_rank(e) == 2


def test_ensembles_n2_explicit():
    o = P(0, 0)
    by_k = {k: list(enumerate_ensembles(2, k)) for k in range(3)}
    assert [e.realized() for e in by_k[0]] == [frozenset()]
    assert sorted(tuple(sorted(e.realized(), key=sort_key)) for e in by_k[1]) == sorted(
        [(P(1, 0),), (P(0, 1),), (P(1, 1),)]
    )
    assert [e.intervals for e in by_k[2]] == [(Interval(o, INF),)]


EXPECTED_ENSEMBLE_COUNTS = {
    0: [1],
    1: [1, 1],
    2: [1, 3, 1],
    3: [1, 5, 6, 1],
    4: [1, 8, 14, 10, 1],
    5: [1, 12, 29, 31, 15, 1],
    6: [1, 17, 54, 79, 60, 21, 1],
}


@pytest.mark.parametrize("n", sorted(EXPECTED_ENSEMBLE_COUNTS))
def test_ensemble_counts(n):
    got = [sum(1 for _ in enumerate_ensembles(n, k)) for k in range(n + 1)]
    assert got == EXPECTED_ENSEMBLE_COUNTS[n]


@pytest.mark.parametrize("n", range(0, 6))
def test_ensemble_canonical_round_trip(n):
    for k in range(n + 1):
        for e in enumerate_ensembles(n, k):
            assert e.rank == k
            assert Ensemble.from_points(n, e.realized()) == e


@pytest.mark.parametrize("n", range(0, 5))
def test_ensembles_by_subset_filter(n):
    """The enumerator and the canonicalizer agree on which subsets of E*_n
    are realized sets of ensembles."""
    accepted = {}
    for subset in powerset(all_points(n)):
        try:
            e = Ensemble.from_points(n, subset)
        except ValueError:
            continue
        assert e.realized() == frozenset(subset)
        accepted.setdefault(e.rank, set()).add(frozenset(subset))
    for k in range(n + 1):
        enumerated = {e.realized() for e in enumerate_ensembles(n, k)}
        assert enumerated == accepted.get(k, set())


def test_distinct_presentations_distinct_sets():
    for n in range(0, 6):
        seen = {}
        for k in range(n + 1):
            for e in enumerate_ensembles(n, k):
                r = e.realized()
                assert r not in seen, f"{e} and {seen[r]} share a realized set"
                seen[r] = e


# --- pseudo-ensembles --------------------------------------------------------

EXPECTED_PSEUDO_COUNTS = {
    # n -> counts for k = -1, 0, 1, ..., n (hand-checked at n=2, recursion beyond)
    2: [1, 6, 5, 1],
    3: [1, 10, 14, 8, 1],
}


@pytest.mark.parametrize("n", sorted(EXPECTED_PSEUDO_COUNTS))
def test_pseudo_counts(n):
    got = [sum(1 for _ in enumerate_pseudo_ensembles(n, k)) for k in range(-1, n + 1)]
    assert got == EXPECTED_PSEUDO_COUNTS[n]


def test_pseudo_rank1_n2_explicit():
    sets = sorted(
        tuple(sorted(p.realized(), key=sort_key)) for p in enumerate_pseudo_ensembles(2, 1)
    )
    assert sets == sorted(
        [
            (P(0, 0), P(1, 0)),
            (P(0, 0), P(0, 1)),
            (P(0, 0), P(1, 1)),
            (P(1, 0), P(2, 0), P(1, 1)),
            (P(0, 1), P(1, 1), P(0, 2)),
        ]
    )


@pytest.mark.parametrize("n", range(0, 5))
def test_pseudo_by_subset_filter(n):
    accepted = {}
    for subset in powerset(all_points(n, include_origin=True)):
        try:
            pe = PseudoEnsemble.from_points(n, subset)
        except ValueError:
            continue
        assert pe.realized() == frozenset(subset)
        accepted.setdefault(pe.rank, set()).add(frozenset(subset))
    for k in range(-1, n + 1):
        enumerated = {pe.realized() for pe in enumerate_pseudo_ensembles(n, k)}
        assert enumerated == accepted.get(k, set())


@pytest.mark.parametrize("n", range(0, 5))
def test_origin_adjoining_bijection(n):
    """Adjoining the origin maps k-ensembles of E*_n bijectively onto the
    origin-containing pseudo-ensembles of E_n of rank k."""
    o = P(0, 0)
    for k in range(n + 1):
        from_ensembles = {e.realized() | {o} for e in enumerate_ensembles(n, k)}
        with_origin = {
            pe.realized()
            for pe in enumerate_pseudo_ensembles(n, k)
            if o in pe.realized()
        }
        assert from_ensembles == with_origin

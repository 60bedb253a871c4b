from itertools import permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latgeom._bits import from_mask, full_mask, to_mask
from latgeom.bruhat import (
    DominanceCache,
    Permutation,
    beta_transforms,
    boolean_flag_h,
    build_hall_matching,
    check_grouped_bijection,
    count_dominating_supersets,
    count_orderings_before,
    dominates,
    superset_bound,
    lift_witness,
    qualifying_sets,
    r_minus,
    t_circ_beta,
    matching_range,
    validate_witness,
    verify_conjecture,
    weak_leq,
)
from latgeom.bruhat.dominance import DominanceUndecided
from latgeom.bruhat.perms import class_arrays, descent_class_seqs, descent_mask, inversion_mask
from latgeom.bruhat.known import CONJECTURE_CASES, EXAMPLE_WITNESS

perm_strategy = st.integers(2, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def descents_by_filter(n, t):
    return sorted(p for p in permutations(range(1, n + 1)) if descent_mask(p) == t)


def inversion_set(p):
    return {(p[i], p[j]) for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]}


def networkx_dominates(n, s, t):
    left = descents_by_filter(n, t)
    right = descents_by_filter(n, s)
    g = nx.Graph()
    g.add_nodes_from((("L", a) for a in left))
    g.add_nodes_from((("R", b) for b in right))
    for a in left:
        ia = inversion_set(a)
        for b in right:
            if ia <= inversion_set(b):
                g.add_edge(("L", a), ("R", b))
    top = [("L", a) for a in left]
    match = nx.bipartite.hopcroft_karp_matching(g, top_nodes=top)
    return all(v in match for v in top)


@pytest.mark.parametrize("n", range(1, 7))
def test_descent_classes_against_filter(n):
    total = 0
    for t in range(0, 1 << n, 2):
        seqs = descent_class_seqs(n, t)
        assert sorted(seqs) == descents_by_filter(n, t)
        assert len(seqs) == boolean_flag_h(n, t)
        total += len(seqs)
    assert total == len(list(permutations(range(n))))


def test_small_descent_classes():
    assert [str(Permutation(p)) for p in descent_class_seqs(3, 1 << 1)] == ["213", "312"]
    assert sorted(map(lambda p: str(Permutation(p)), descent_class_seqs(4, 1 << 1))) == ["2134", "3124", "4123"]


def test_class_arrays_match_python_encoding():
    perms, inv = class_arrays(6, to_mask([2, 4]))
    for row, mask in zip(perms, inv):
        assert inversion_mask(tuple(int(x) for x in row)) == int(mask)


@settings(max_examples=200)
@given(perm_strategy)
def test_inversion_mask_matches_pairs(p):
    q = Permutation(tuple(p))
    assert q.inversions() == inversion_set(tuple(p))
    assert from_mask(q.des) == tuple(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


@settings(max_examples=200)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(*[st.permutations(list(range(1, n + 1)))] * 3)))
def test_weak_order_axioms(triple):
    p, q, w = (Permutation(tuple(x)) for x in triple)
    assert weak_leq(p, p)
    if weak_leq(p, q) and weak_leq(q, p):
        assert p == q
    if weak_leq(p, q) and weak_leq(q, w):
        assert weak_leq(p, w)
    n = p.n
    ident = Permutation(tuple(range(1, n + 1)))
    top = Permutation(tuple(range(n, 0, -1)))
    assert weak_leq(ident, p) and weak_leq(p, top)


@settings(max_examples=200)
@given(perm_strategy)
def test_adjacent_swap_at_ascent_goes_up(p):
    q = Permutation(tuple(p))
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            up = list(p)
            up[i], up[i + 1] = up[i + 1], up[i]
            assert weak_leq(q, Permutation(tuple(up)))
            assert len(inversion_set(tuple(up))) == len(inversion_set(tuple(p))) + 1


@settings(max_examples=200)
@given(perm_strategy)
def test_beta_identities(p):
    q = Permutation(tuple(p))
    r = q.n - 1
    left, right, both = beta_transforms(q)
    assert right.des == t_circ_beta(r, q.des)
    assert both.des == r_minus(r, q.des)
    assert left.des == full_mask(r) & ~q.des


@settings(max_examples=100)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(*[st.permutations(list(range(1, n + 1)))] * 2)))
def test_beta_conjugation_preserves_weak_order(pair):
    p, q = (Permutation(tuple(x)) for x in pair)
    n = p.n
    beta = Permutation(tuple(range(n, 0, -1)))
    conj = lambda x: beta.compose(x).compose(beta)  # noqa: E731
    assert weak_leq(p, q) == weak_leq(conj(p), conj(q))


def test_t_circ_beta_examples():
    assert from_mask(t_circ_beta(3, to_mask([1]))) == (1, 2)
    assert from_mask(t_circ_beta(6, to_mask([1, 4]))) == (1, 2, 4, 5)
    for r in range(1, 8):
        for t in range(0, 1 << (r + 1), 2):
            assert r_minus(r, t_circ_beta(r, t)) == full_mask(r) & ~t


@pytest.mark.parametrize("n", range(2, 6))
def test_dominance_against_networkx(n):
    sets = range(0, 1 << n, 2)
    for s, t in product(sets, sets):
        want = networkx_dominates(n, s, t)
        assert dominates(n, s, t, prune=False).dominated == want
        assert dominates(n, s, t).dominated == want


def test_pruning_agrees_with_matching_at_n6():
    # every pair pruned by subset or count really fails the matching
    sets = list(range(0, 1 << 6, 2))
    for s, t in product(sets[::3], sets[::2]):
        pruned = dominates(6, s, t)
        if pruned.method in ("subset", "count"):
            assert not dominates(6, s, t, prune=False).dominated


def test_example_witness():
    res = dominates(4, to_mask([1, 2]), to_mask([1]), witness=True)
    assert res.dominated
    assert validate_witness(4, to_mask([1, 2]), to_mask([1]), EXAMPLE_WITNESS) == []
    assert validate_witness(4, to_mask([1, 2]), to_mask([1]), res.witness.pairs) == []


def test_validate_witness_catches_errors():
    s, t = to_mask([1, 2]), to_mask([1])
    bad = list(EXAMPLE_WITNESS)
    bad[0] = ((2, 1, 3, 4), (4, 3, 1, 2))
    assert any("twice" in p for p in validate_witness(4, s, t, bad))
    assert any("domain" in p for p in validate_witness(4, s, t, EXAMPLE_WITNESS[:2]))


def test_limit_raises():
    # undecidable by pruning: {1} -> {1,2} at n = 10 would need a matching
    with pytest.raises(DominanceUndecided):
        dominates(10, to_mask([1, 2]), to_mask([1]))


@pytest.mark.parametrize("r", range(2, 8))
def test_orderings_independent_of_position(r):
    if r > 6:
        sets = [to_mask([1, 3]), to_mask([2, 5, 6])]
    else:
        sets = range(0, 1 << (r + 1), 2)
    for s in sets:
        counts = {count_orderings_before(r, i, s) for i in range(1, r + 1)}
        assert len(counts) == 1


def _dominating_pairs(n):
    sets = range(0, 1 << n, 2)
    return [(s, t) for s, t in product(sets, sets) if s != t and dominates(n, s, t).dominated]


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(_dominating_pairs(4)),
    st.sampled_from(["", "a", "ba", "aa"]),
    st.sampled_from(["", "a", "ab"]),
)
def test_lifting_preserves_witnesses(pair, prefix, suffix):
    s, t = pair
    res = dominates(4, s, t, witness=True)
    n_big, s_big, t_big, lifted = lift_witness(res.witness.pairs, 3, t, prefix, suffix)
    assert validate_witness(n_big, s_big, t_big, lifted) == []


def test_lifting_rejects_bad_padding():
    res = dominates(4, to_mask([1, 2]), to_mask([1]), witness=True)
    with pytest.raises(ValueError):
        lift_witness(res.witness.pairs, 3, to_mask([1]), "b", "")
    with pytest.raises(ValueError):
        lift_witness(res.witness.pairs, 3, to_mask([1]), "", "b")


@pytest.mark.parametrize("r", range(1, 7))
def test_conjecture_small_r(r):
    rep = verify_conjecture(r)
    assert rep.complete and rep.passed
    assert {row.t for row in rep.rows} == set(qualifying_sets(r))


def test_conjecture_symmetry_matches_direct():
    a = verify_conjecture(5, use_symmetry=True)
    b = verify_conjecture(5, use_symmetry=False)
    assert [row.t for row in a.rows] == [row.t for row in b.rows]
    assert all(row.status == "PASS" for row in b.rows)
    assert any(row.implied for row in a.rows) and not any(row.implied for row in b.rows)


def test_conjecture_parallel_and_budget():
    rep = verify_conjecture(5, workers=2)
    assert rep.passed
    partial = verify_conjecture(7, budget_secs=1e-9)
    assert not partial.complete
    assert any(row.status == "PENDING" for row in partial.rows)


def test_known_cases_are_qualifying():
    for r, rows in CONJECTURE_CASES.items():
        q = set(qualifying_sets(r))
        for t, s in rows:
            assert to_mask(t) in q
            assert t_circ_beta(r, to_mask(t)) == to_mask(s)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "dom.tsv"
    cache = DominanceCache(path)
    verify_conjecture(5, cache=cache)
    cache.save()
    again = DominanceCache(path)
    assert len(again) == len(cache) > 0
    res = dominates(6, to_mask([1, 2, 3]), to_mask([1, 2]), cache=again)
    assert res.method == "cache" and res.dominated


@pytest.mark.parametrize("r", range(2, 8))
def test_superset_lower_bound(r):
    for t in range(0, 1 << (r + 1), 2):
        c = count_dominating_supersets(r, t)
        assert c.ok, (from_mask(t), c.count, c.bound)


def test_superset_bound_values():
    assert superset_bound(10, 1) == 7
    assert superset_bound(10, 4) == 0
    assert superset_bound(7, 2) == 2


@pytest.mark.parametrize("r", range(2, 8))
def test_hall_matchings_in_range(r):
    for i in range(1, r + 1):
        res = build_hall_matching(r, i)
        if matching_range(r, i):
            assert res.saturating, (r, i)
        if not res.saturating:
            # the violator certifies the failure
            assert len(res.neighbours) < len(res.violator)


def test_grouped_bijection():
    assert check_grouped_bijection() == []


def test_negative_example_counts():
    t = to_mask([2, 5, 6, 9])
    c = count_dominating_supersets(10, t)
    assert c.count == 0
    ht = boolean_flag_h(11, t)
    assert ht == 109979
    for x in (1, 3, 4, 7, 8, 10):
        assert boolean_flag_h(11, t | 1 << x) < ht

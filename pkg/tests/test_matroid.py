from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latgeom._bits import from_mask, full_mask, submasks, to_mask
from latgeom.corpus import simple_matroids
from latgeom.matroid import (
    Matroid,
    MatroidError,
    from_vectors,
    load_matroid,
    make_boolean,
    make_near_pencil,
    make_uniform,
    parse_matroid,
)

SMALL = simple_matroids(5, 4)


def brute_circuits(m):
    dependent = [a for a in range(0, 1 << (m.n + 1), 2) if not m.is_independent(a)]
    return sorted(
        (a for a in dependent if all(m.is_independent(a & ~(1 << x)) for x in from_mask(a))),
        key=lambda c: (c.bit_count(), from_mask(c)),
    )


def brute_closure(m, a):
    r = m.rank_of(a)
    return a | sum(1 << x for x in range(1, m.n + 1) if m.rank_of(a | 1 << x) == r)


def test_example_circuits(small_example):
    assert [from_mask(c) for c in small_example.circuits] == [(1, 2, 3), (3, 4, 5), (1, 2, 4, 5)]
    assert from_mask(small_example.closure(to_mask([1, 2]))) == (1, 2, 3)


def test_example_nbc(small_example):
    assert [from_mask(b) for b in small_example.nbc_bases()] == [(1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
    assert small_example.find_broken_circuit(to_mask([1, 4, 5])) == to_mask([4, 5])


@pytest.mark.parametrize("m", SMALL, ids=lambda m: f"n{m.n}r{m.rank}")
def test_circuits_match_brute_force(m):
    assert list(m.circuits) == brute_circuits(m)


@pytest.mark.parametrize("m", SMALL[::7], ids=lambda m: f"n{m.n}r{m.rank}")
def test_closure_axioms(m):
    for a in submasks(m.ground):
        c = m.closure(a)
        assert c == brute_closure(m, a)
        assert a & ~c == 0 and m.closure(c) == c
        assert m.rank_of(c) == m.rank_of(a)


def nbc_oracle(m, order):
    pos = {a: k for k, a in enumerate(order)}
    broken = [c & ~(1 << min(from_mask(c), key=pos.__getitem__)) for c in brute_circuits(m)]
    return {b for b in m.bases if not any(bc & ~b == 0 for bc in broken)}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_nbc_under_any_order(m, rnd):
    order = list(range(1, m.n + 1))
    rnd.shuffle(order)
    got = m.nbc_bases(order)
    assert set(got) == nbc_oracle(m, order)
    assert len(got) == len(set(got))


def test_nbc_count_is_top_mobius_magnitude():
    # number of nbc bases of U(3,n) is C(n-1,2)
    for n in range(3, 8):
        assert len(make_uniform(3, n).nbc_bases()) == (n - 1) * (n - 2) // 2


def test_fundamental_circuit_on_vector_instance():
    e = [[1 if i == j else 0 for i in range(5)] for j in range(5)]
    generic = [[1, 2, 3, 5, 7], [1, 4, 9, 16, 25]]
    f8 = [1, 0, 1, 1, 0]
    m = from_vectors(e + generic + [f8])
    base = to_mask(range(1, 6))
    assert m.rank == 5 and m.is_basis(base)
    assert from_mask(m.fundamental_circuit(8, base)) == (1, 3, 4, 8)
    with pytest.raises(MatroidError):
        m.fundamental_circuit(3, base)


def test_families():
    assert len(make_boolean(4).bases) == 1
    assert len(make_uniform(3, 6).bases) == 20
    np_ = make_near_pencil(3, 5)
    # coloop 1, the other four on a line
    assert np_.circuits[0] == to_mask([2, 3, 4])
    assert all(b >> 1 & 1 for b in np_.bases)
    assert make_near_pencil(2, 4) == make_uniform(2, 4)


@pytest.mark.parametrize(
    "n,bases",
    [
        (3, [(1, 2), (1, 3)]),  # 2 and 3 parallel
        (3, [(1, 2)]),  # 3 is a loop
        (4, [(1, 2), (3, 4)]),  # exchange fails
        (2, [(1, 2, 3)]),
    ],
)
def test_rejects_bad_input(n, bases):
    with pytest.raises(MatroidError):
        Matroid.from_bases(n, bases)


def test_json_round_trip(tmp_path, small_example):
    p = tmp_path / "m.json"
    small_example.save(p)
    assert load_matroid(p) == small_example
    with pytest.raises(MatroidError):
        parse_matroid('{"n": 3}')
    with pytest.raises(MatroidError):
        parse_matroid("not json")


def test_all_corpus_matroids_satisfy_exchange():
    for m in SMALL:
        assert m.satisfies_exchange()
        assert m.rank_of(full_mask(m.n)) == m.rank
        for x, y in combinations(range(1, m.n + 1), 2):
            assert m.is_independent(to_mask([x, y])) or m.rank == 1

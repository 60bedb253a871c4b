from collections import Counter

import pytest

from _oracles import brute_matroid_count, linear_space_count
from latgeom.corpus import corpus_text, generate_corpus, simple_matroids


@pytest.fixture(scope="module")
def counts():
    return Counter((m.n, m.rank) for m in simple_matroids(6, 4))


@pytest.mark.parametrize("n", range(3, 7))
def test_rank3_counts_match_linear_spaces(counts, n):
    assert counts[(n, 3)] == linear_space_count(n)


@pytest.mark.parametrize("n,k", [(4, 4), (5, 4), (6, 4), (5, 3), (4, 2), (5, 2)])
def test_counts_match_basis_family_search(counts, n, k):
    assert counts[(n, k)] == brute_matroid_count(n, k)


def test_known_totals(counts):
    assert counts[(6, 3)] == 352 and counts[(6, 4)] == 337
    assert counts[(5, 3)] == 31 and counts[(5, 4)] == 16
    assert all(counts[(n, 2)] == 1 for n in range(2, 7))


def test_corpus_shape(corpus):
    names = [e.name for e in corpus]
    assert len(names) == len(set(names))
    assert names[0] == "boolean(2)"
    assert all(e.matroid.rank >= 2 for e in corpus)
    assert len({(e.matroid.n, e.matroid.bases) for e in corpus}) == len(corpus)
    assert len(corpus) == len(generate_corpus())
    assert corpus_text(corpus[:2]).count("\n") == 2


def test_bounds_enforced():
    with pytest.raises(ValueError):
        simple_matroids(7, 4)

"""Bipartite matching helpers.

Maximum matchings come from scipy's Hopcroft-Karp implementation; this
module adds the adjacency plumbing and the Hall-violator extraction used
as a failure certificate.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching


def adjacency_to_csr(adj: Sequence[Sequence[int]], n_right: int) -> csr_matrix:
    indptr = np.zeros(len(adj) + 1, dtype=np.int64)
    for i, nbrs in enumerate(adj):
        indptr[i + 1] = indptr[i] + len(nbrs)
    indices = np.fromiter((j for nbrs in adj for j in nbrs), dtype=np.int32, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.int8)
    return csr_matrix((data, indices, indptr), shape=(len(adj), n_right))


def max_matching(graph: csr_matrix) -> np.ndarray:
    """For each left vertex (row) the matched right vertex, or -1."""
    if graph.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if graph.shape[1] == 0 or graph.nnz == 0:
        return np.full(graph.shape[0], -1, dtype=np.int64)
    return np.asarray(maximum_bipartite_matching(graph, perm_type="column"), dtype=np.int64)


def hall_violator(adj: Sequence[Sequence[int]], match: Sequence[int]) -> tuple[list[int], list[int]]:
    """A left set X with |N(X)| < |X|, given a maximum matching that misses some left vertex.

    X is everything reachable from the unmatched left vertices along
    alternating paths (König's construction); N(X) is then entirely matched
    into X minus the unmatched roots.
    """
    right_owner = {int(j): i for i, j in enumerate(match) if j >= 0}
    roots = [i for i, j in enumerate(match) if j < 0]
    if not roots:
        return [], []
    seen_left = set(roots)
    seen_right: set[int] = set()
    queue = deque(roots)
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j in seen_right:
                continue
            seen_right.add(j)
            owner = right_owner.get(j)
            if owner is not None and owner not in seen_left:
                seen_left.add(owner)
                queue.append(owner)
    return sorted(seen_left), sorted(seen_right)

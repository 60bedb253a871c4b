"""Reference dominance data used as regression targets.

Sets are written as tuples of elements; permutations in one-line notation.
"""

# T -> T o beta, keyed by r
CONJECTURE_CASES = {
    3: [((1,), (1, 2)), ((3,), (2, 3))],
    5: [
        ((1, 2), (1, 2, 3)),
        ((4, 5), (3, 4, 5)),
        ((1, 4), (1, 3, 4)),
        ((2, 5), (2, 3, 5)),
    ],
    7: [
        ((1, 2, 3), (1, 2, 3, 4)),
        ((5, 6, 7), (4, 5, 6, 7)),
        ((1, 2, 5), (1, 2, 4, 5)),
        ((3, 6, 7), (3, 4, 6, 7)),
        ((1, 3, 6), (1, 3, 4, 6)),
        ((2, 5, 7), (2, 4, 5, 7)),
        ((1, 5, 6), (1, 4, 5, 6)),
        ((2, 3, 7), (2, 3, 4, 7)),
    ],
}

# injection from D({1}) to D({1,2}) in S_4
EXAMPLE_WITNESS = [
    ((2, 1, 3, 4), (3, 2, 1, 4)),
    ((3, 1, 2, 4), (4, 3, 1, 2)),
    ((4, 1, 2, 3), (4, 2, 1, 3)),
]

# 2-subsets of [6] -> dominating 3-subsets
MATCHING_2_TO_3_OF_6 = [
    ((1, 2), (1, 2, 3)),
    ((1, 3), (1, 3, 6)),
    ((1, 4), (1, 3, 4)),
    ((1, 5), (1, 4, 5)),
    ((1, 6), (1, 5, 6)),
    ((2, 3), (2, 3, 4)),
    ((2, 4), (2, 4, 6)),
    ((2, 5), (2, 3, 5)),
    ((2, 6), (2, 5, 6)),
    ((3, 4), (3, 4, 6)),
    ((3, 5), (1, 3, 5)),
    ((3, 6), (2, 3, 6)),
    ((4, 5), (2, 4, 5)),
    ((4, 6), (1, 4, 6)),
    ((5, 6), (4, 5, 6)),
]

# 3-subsets of [8] -> dominating 4-subsets
MATCHING_3_TO_4_OF_8 = [
    ((1, 2, 3), (1, 2, 3, 4)),
    ((1, 2, 5), (1, 2, 4, 5)),
    ((1, 2, 6), (1, 2, 4, 6)),
    ((1, 2, 8), (1, 2, 3, 8)),
    ((1, 3, 4), (1, 3, 4, 8)),
    ((1, 3, 6), (1, 3, 6, 8)),
    ((1, 3, 7), (1, 3, 6, 7)),
    ((1, 3, 8), (1, 3, 5, 8)),
    ((1, 4, 5), (1, 4, 5, 8)),
    ((1, 4, 6), (1, 4, 6, 8)),
    ((1, 4, 7), (1, 4, 5, 7)),
    ((1, 4, 8), (1, 4, 7, 8)),
    ((1, 5, 6), (1, 2, 5, 6)),
    ((1, 5, 7), (1, 2, 5, 7)),
    ((1, 5, 8), (1, 2, 5, 8)),
    ((1, 6, 7), (1, 2, 6, 7)),
    ((1, 6, 8), (1, 2, 6, 8)),
    ((1, 7, 8), (1, 6, 7, 8)),
    ((2, 3, 4), (2, 3, 4, 5)),
    ((2, 3, 5), (2, 3, 5, 6)),
    ((2, 3, 6), (2, 3, 6, 8)),
    ((2, 3, 7), (2, 3, 4, 7)),
    ((2, 3, 8), (2, 3, 4, 8)),
    ((2, 4, 5), (2, 4, 5, 6)),
    ((2, 4, 6), (2, 4, 6, 7)),
    ((2, 4, 7), (2, 4, 5, 7)),
    ((2, 4, 8), (2, 4, 7, 8)),
    ((2, 5, 6), (2, 5, 6, 8)),
    ((2, 5, 7), (2, 3, 5, 7)),
    ((2, 5, 8), (2, 4, 5, 8)),
    ((2, 6, 7), (2, 3, 6, 7)),
    ((2, 6, 8), (2, 4, 6, 8)),
    ((2, 7, 8), (2, 6, 7, 8)),
    ((3, 4, 5), (1, 3, 4, 5)),
    ((3, 4, 6), (1, 3, 4, 6)),
    ((3, 4, 7), (1, 3, 4, 7)),
    ((3, 4, 8), (3, 4, 7, 8)),
    ((3, 5, 6), (1, 3, 5, 6)),
    ((3, 5, 7), (1, 3, 5, 7)),
    ((3, 5, 8), (2, 3, 5, 8)),
    ((3, 6, 7), (3, 4, 6, 7)),
    ((3, 6, 8), (3, 5, 6, 8)),
    ((3, 7, 8), (2, 3, 7, 8)),
    ((4, 5, 6), (1, 4, 5, 6)),
    ((4, 5, 7), (3, 4, 5, 7)),
    ((4, 5, 8), (3, 4, 5, 8)),
    ((4, 6, 7), (1, 4, 6, 7)),
    ((4, 6, 8), (3, 4, 6, 8)),
    ((4, 7, 8), (4, 5, 7, 8)),
    ((5, 6, 7), (4, 5, 6, 7)),
    ((5, 6, 8), (4, 5, 6, 8)),
    ((5, 7, 8), (1, 5, 7, 8)),
    ((6, 7, 8), (5, 6, 7, 8)),
]

# weak-order bijection D({3}) u D({2}) -> D({2,3}) u D({1,3}) in S_4
GROUPED_SOURCES = ((3,), (2,))
GROUPED_TARGETS = ((2, 3), (1, 3))
GROUPED_BIJECTION = [
    ((1, 2, 4, 3), (2, 1, 4, 3)),
    ((1, 3, 4, 2), (1, 4, 3, 2)),
    ((2, 3, 4, 1), (2, 4, 3, 1)),
    ((1, 3, 2, 4), (3, 1, 4, 2)),
    ((1, 4, 2, 3), (4, 1, 3, 2)),
    ((2, 3, 1, 4), (3, 2, 4, 1)),
    ((2, 4, 1, 3), (4, 2, 3, 1)),
    ((3, 4, 1, 2), (3, 4, 2, 1)),
]

# T inside [10] with no dominating 5-superset
NO_DOMINATING_SUPERSET = (10, (2, 5, 6, 9))

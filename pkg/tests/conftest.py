"""Shared golden tables and sweep parameters for the test suite."""

from frcage import chunks_per_iteration

# S(2,3,7) block design: the q=2, n=1 storage table (7 nodes, 7 chunks,
# replication 3).  Reproduced with identity labeling by the library.
GOLDEN_S237 = [
    [0, 1, 2],
    [0, 3, 6],
    [0, 4, 5],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 4],
    [2, 5, 6],
]

# q=2, n=2 storage table: 15 nodes of 7 slots over 35 chunks,
# replication 3.  Nodes 0..6 extend GOLDEN_S237 row-for-row.
GOLDEN_S2315_T = [
    [0, 1, 2, 7, 8, 9, 10],
    [0, 3, 6, 11, 14, 15, 18],
    [0, 4, 5, 12, 13, 16, 17],
    [1, 3, 5, 19, 22, 23, 26],
    [1, 4, 6, 20, 21, 24, 25],
    [2, 3, 4, 27, 30, 31, 34],
    [2, 5, 6, 28, 29, 32, 33],
    [7, 11, 13, 19, 21, 27, 29],
    [7, 12, 14, 20, 22, 28, 30],
    [8, 11, 12, 23, 25, 31, 33],
    [8, 13, 14, 24, 26, 32, 34],
    [9, 15, 17, 19, 20, 31, 32],
    [9, 16, 18, 21, 22, 33, 34],
    [10, 15, 16, 23, 24, 27, 28],
    [10, 17, 18, 25, 26, 29, 30],
]

# S(2,3,9): 12 blocks over 9 elements, every element in 4 blocks.
GOLDEN_S239 = [
    [0, 1, 2],
    [0, 3, 6],
    [0, 4, 8],
    [0, 5, 7],
    [1, 3, 8],
    [1, 4, 7],
    [1, 5, 6],
    [2, 3, 7],
    [2, 4, 6],
    [2, 5, 8],
    [3, 4, 5],
    [6, 7, 8],
]

# Documented relabeling between the library's X-side block list at
# q=2, n=1 and GOLDEN_S237: swap element ids 4 and 6, then sort the
# blocks.  (The storage view needs no relabeling at all.)
X_SIDE_RELABEL_Q2 = {0: 0, 1: 1, 2: 2, 3: 3, 4: 6, 5: 5, 6: 4}

# The three orthogonal squares of order 3, with symbols 0..2.
GOLDEN_MOLS_Q3 = [
    [[0, 0, 0], [1, 1, 1], [2, 2, 2]],
    [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
    [[0, 2, 1], [1, 0, 2], [2, 1, 0]],
]


def sweep_params(limit: int = 25_000) -> list[tuple[int, int]]:
    """Every (q, n) with q in {2,3,4,5,7,8,9} whose chunk count stays
    at or below the limit."""
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        n = 1
        while chunks_per_iteration(q, n) <= limit:
            out.append((q, n))
            n += 1
    return out

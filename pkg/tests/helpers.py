"""Independent oracles used by the tests.

Everything here recomputes properties from first principles, without
touching the library's own scan routines, so a library bug cannot hide
behind a matching bug in its checker.
"""

from collections import Counter
from itertools import combinations

from frcage import BipartiteDesign, FieldMeta, StorageDesign


def naive_no_four_cycles(d: BipartiteDesign) -> bool:
    """Literal enumeration over all (x, y, x', y') quadruples.
    Quadratic in both sides; keep to designs with |X| <= 40."""
    nb = [set(ys) for ys in d.x_neighbors]
    for x1 in range(d.u):
        for x2 in range(x1 + 1, d.u):
            for y1 in nb[x1]:
                for y2 in nb[x1]:
                    if y1 < y2 and y1 in nb[x2] and y2 in nb[x2]:
                        return False
    return True


def pair_cover_counts(blocks) -> Counter:
    """How often each unordered element pair occurs across the blocks."""
    counts: Counter = Counter()
    for block in blocks:
        for pair in combinations(sorted(block), 2):
            counts[pair] += 1
    return counts


def is_steiner_exact(blocks, num_elements: int) -> bool:
    counts = pair_cover_counts(blocks)
    want = num_elements * (num_elements - 1) // 2
    return len(counts) == want and set(counts.values()) == {1}


def incidence_from_blocks(blocks, num_elements, q=None, n=None) -> BipartiteDesign:
    """Hand-built bipartite design: one X vertex per block."""
    k = len(blocks[0])
    replicas = Counter(e for b in blocks for e in b)
    l = replicas.most_common(1)[0][1]
    return BipartiteDesign(
        q=q,
        n=n,
        k=k,
        l=l,
        u=len(blocks),
        v=num_elements,
        x_neighbors=tuple(tuple(sorted(b)) for b in blocks),
        y_tags=None,
        x_tags=None,
        input_blocks=(),
    )


def storage_from_rows(rows, num_chunks, k, q=3, n=1) -> StorageDesign:
    """Hand-built storage table for repair tests."""
    return StorageDesign(
        q=q,
        n=n,
        k=k,
        l=len(rows[0]),
        num_nodes=len(rows),
        num_chunks=num_chunks,
        nodes=tuple(tuple(r) for r in rows),
        field_meta=FieldMeta.for_q(q),
        construction="hand-built",
    )


def bipartite_isomorphic(d1: BipartiteDesign, d2: BipartiteDesign) -> bool:
    """Backtracking search for a Y-relabeling carrying d1's block
    multiset onto d2's.  Fine for the small designs used in tests."""
    if (d1.u, d1.v, d1.k, d1.l) != (d2.u, d2.v, d2.k, d2.l):
        return False
    blocks1 = [frozenset(b) for b in d1.x_neighbors]
    blocks2 = set(frozenset(b) for b in d2.x_neighbors)
    if len(blocks2) != d2.u:
        return False

    # order d1's Y vertices so consecutive choices share blocks
    order: list[int] = []
    seen = set()
    queue = [0]
    member = [[] for _ in range(d1.v)]
    for bi, b in enumerate(blocks1):
        for e in b:
            member[e].append(bi)
    while queue:
        y = queue.pop(0)
        if y in seen:
            continue
        seen.add(y)
        order.append(y)
        for bi in member[y]:
            for e in sorted(blocks1[bi]):
                if e not in seen:
                    queue.append(e)
    order.extend(y for y in range(d1.v) if y not in seen)

    blocks2_list = list(blocks2)
    mapping: dict[int, int] = {}
    used = set()

    def feasible() -> bool:
        for b in blocks1:
            image = {mapping[e] for e in b if e in mapping}
            if len(image) < sum(1 for e in b if e in mapping):
                return False
            if len(image) == len(b):
                if frozenset(image) not in blocks2:
                    return False
            elif image and not any(image <= b2 for b2 in blocks2_list):
                return False
        return True

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        y = order[idx]
        for cand in range(d2.v):
            if cand in used:
                continue
            mapping[y] = cand
            used.add(cand)
            if feasible() and backtrack(idx + 1):
                return True
            del mapping[y]
            used.discard(cand)
        return False

    return backtrack(0)

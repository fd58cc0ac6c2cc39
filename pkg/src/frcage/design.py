"""Storage-system view of a design: nodes, chunks, growth and repair.

A storage design reads the bipartite graph transposed: Y vertices are
storage nodes, X vertices are data chunks, so each chunk has k = q+1
replicas and each node holds l = p_n(q) chunk slots.  Slots are kept
in ascending chunk-id order; because expansion only ever appends ids,
the (q, n-1) table is literally the first l[n-1] columns of the
(q, n) table restricted to the old node ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cage import BipartiteDesign, build_scaled_cage, p_n
from .errors import (
    InvalidDesign,
    NoSurvivingReplica,
    NodeOutOfRange,
    NotCanonical,
    OutOfRange,
)
from .gf import field_new

__all__ = [
    "SCHEMA_VERSION",
    "CONSTRUCTION",
    "FieldMeta",
    "StorageDesign",
    "RepairPlan",
    "to_storage_design",
    "incidence_design",
    "chunk_locations",
    "expand",
    "partial_fill",
    "repair_plan",
    "check_partial_invariants",
    "to_json",
    "from_json",
    "to_csv",
    "chunks_per_iteration",
]

SCHEMA_VERSION = "1"
CONSTRUCTION = "layered-mols-expansion"


def chunks_per_iteration(q: int, n: int) -> int:
    """Total chunk count u at iteration n (u = 1 at n = 0)."""
    return p_n(q, n + 1) * p_n(q, n) // (q + 1)


@dataclass(frozen=True)
class FieldMeta:
    p: int
    m: int
    modulus: tuple[int, ...]
    primitive: int

    @classmethod
    def for_q(cls, q: int) -> "FieldMeta":
        f = field_new(q)
        return cls(p=f.p, m=f.m, modulus=f.modulus, primitive=f.alpha)


@dataclass(frozen=True)
class StorageDesign:
    """Ordered node table.  Slots hold chunk ids; None marks an empty
    slot left by partial fill."""

    q: int
    n: int
    k: int
    l: int
    num_nodes: int
    num_chunks: int
    nodes: tuple[tuple[int | None, ...], ...]
    field_meta: FieldMeta
    version: str = SCHEMA_VERSION
    construction: str = CONSTRUCTION

    @property
    def is_complete(self) -> bool:
        return all(slot is not None for row in self.nodes for slot in row)


@dataclass(frozen=True)
class RepairPlan:
    """One helper per lost chunk; helpers are pairwise distinct."""

    failed_node: int
    assignments: tuple[tuple[int, int], ...]


def to_storage_design(d: BipartiteDesign) -> StorageDesign:
    """Transpose a constructed design into its node/chunk table."""
    if d.q is None or d.n is None:
        raise ValueError("storage view needs a design with (q, n) metadata")
    return StorageDesign(
        q=d.q,
        n=d.n,
        k=d.k,
        l=d.l,
        num_nodes=d.v,
        num_chunks=d.u,
        nodes=tuple(d.y_neighbor_lists()),
        field_meta=FieldMeta.for_q(d.q),
    )


def incidence_design(sd: StorageDesign) -> BipartiteDesign:
    """Rebuild the bipartite graph from a complete storage table.
    Layer tags are not recoverable from the table and stay None."""
    if not sd.is_complete:
        raise InvalidDesign("cannot rebuild a graph from a partially filled design")
    locs = chunk_locations(sd)
    return BipartiteDesign(
        q=sd.q,
        n=sd.n,
        k=sd.k,
        l=sd.l,
        u=sd.num_chunks,
        v=sd.num_nodes,
        x_neighbors=locs,
        y_tags=None,
        x_tags=None,
        input_blocks=(),
    )


def chunk_locations(sd: StorageDesign) -> tuple[tuple[int, ...], ...]:
    """For every chunk id, the ascending list of nodes storing it
    (empty for chunks blanked by partial fill)."""
    locs: list[list[int]] = [[] for _ in range(sd.num_chunks)]
    for g, row in enumerate(sd.nodes):
        for c in row:
            if c is not None:
                locs[c].append(g)
    return tuple(tuple(sorted(row)) for row in locs)


def expand(old: StorageDesign, max_edges: int | None = None) -> StorageDesign:
    """Grow a canonical (q, n) design to (q, n+1).

    Every old node keeps its slots as a prefix and every old chunk id
    is preserved; new chunk ids are appended only.  Raises NotCanonical
    when `old` is not exactly this library's construction for its
    declared parameters.
    """
    if old.version != SCHEMA_VERSION or old.construction != CONSTRUCTION:
        raise NotCanonical(
            f"unknown provenance: version={old.version!r}, construction={old.construction!r}"
        )
    if not old.is_complete:
        raise NotCanonical("partially filled designs cannot be expanded")
    if old.n < 1:
        raise NotCanonical(f"expansion needs n >= 1, got n={old.n}")
    canonical = to_storage_design(build_scaled_cage(old.q, old.n, max_edges=max_edges))
    if canonical != old:
        raise NotCanonical(
            f"design does not match the canonical (q={old.q}, n={old.n}) construction"
        )
    return to_storage_design(build_scaled_cage(old.q, old.n + 1, max_edges=max_edges))


def partial_fill(full: StorageDesign, u_tilde: int) -> StorageDesign:
    """Blank every slot holding a chunk id >= u_tilde.

    Valid u_tilde lie strictly above the previous iteration's chunk
    count and at most at this iteration's; slot positions are kept so
    chunks can be filled in later without moving anything.
    """
    if not full.is_complete:
        raise InvalidDesign("partial_fill expects the full (q, n) design")
    u_prev = chunks_per_iteration(full.q, full.n - 1)
    if not u_prev < u_tilde <= full.num_chunks:
        raise OutOfRange(
            f"u_tilde must be in ({u_prev}, {full.num_chunks}], got {u_tilde}"
        )
    nodes = tuple(
        tuple(c if c is not None and c < u_tilde else None for c in row) for row in full.nodes
    )
    return StorageDesign(
        q=full.q,
        n=full.n,
        k=full.k,
        l=full.l,
        num_nodes=full.num_nodes,
        num_chunks=full.num_chunks,
        nodes=nodes,
        field_meta=full.field_meta,
        version=full.version,
        construction=full.construction,
    )


def repair_plan(
    sd: StorageDesign,
    failed: int,
    policy: str = "lowest",
    locations: tuple[tuple[int, ...], ...] | None = None,
) -> RepairPlan:
    """Pick one distinct helper node per chunk of the failed node.

    "lowest" always takes the smallest surviving holder id; the
    "round-robin" policy rotates through the holders by slot position
    to spread load across repeated failures.  Distinctness needs no
    checking: two chunks of one node never share another holder, or
    that holder and the failed node would share a chunk pair.
    `locations` lets callers planning many repairs reuse one
    chunk_locations(sd) index.
    """
    if not 0 <= failed < sd.num_nodes:
        raise NodeOutOfRange(f"node id must be in [0, {sd.num_nodes}), got {failed}")
    if policy not in ("lowest", "round-robin"):
        raise ValueError(f"unknown policy {policy!r}")
    locs = chunk_locations(sd) if locations is None else locations
    assignments = []
    for slot, chunk in enumerate(sd.nodes[failed]):
        if chunk is None:
            continue
        survivors = [g for g in locs[chunk] if g != failed]
        if not survivors:
            raise NoSurvivingReplica(f"chunk {chunk} has no replica outside node {failed}")
        if policy == "lowest":
            helper = survivors[0]
        else:
            helper = survivors[slot % len(survivors)]
        assignments.append((chunk, helper))
    return RepairPlan(failed_node=failed, assignments=tuple(assignments))


def check_partial_invariants(sd: StorageDesign):
    """(ok, detail) for possibly partially-filled tables: present
    chunks keep exactly k replicas, slots within a node are distinct,
    and no two nodes share more than one chunk."""
    detail: dict = {}
    ok = True
    for g, row in enumerate(sd.nodes):
        present = [c for c in row if c is not None]
        if len(set(present)) != len(present):
            ok = False
            detail["duplicate_slot"] = (g,)
            break
    if ok:
        for c, holders in enumerate(chunk_locations(sd)):
            if holders and len(holders) != sd.k:
                ok = False
                detail["replicas"] = (c, len(holders))
                break
    if ok:
        seen: dict[tuple[int, int], int] = {}
        for c, holders in enumerate(chunk_locations(sd)):
            for i in range(len(holders)):
                for j in range(i + 1, len(holders)):
                    pair = (holders[i], holders[j])
                    if pair in seen:
                        ok = False
                        detail["overlap"] = (pair[0], pair[1], seen[pair], c)
                        break
                    seen[pair] = c
                if not ok:
                    break
            if not ok:
                break
    return ok, detail


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_json(sd: StorageDesign) -> str:
    """Canonical JSON: header plus node rows, empty slots as null."""
    payload = {
        "header": {
            "version": sd.version,
            "construction": sd.construction,
            "q": sd.q,
            "n": sd.n,
            "k": sd.k,
            "l": sd.l,
            "num_nodes": sd.num_nodes,
            "num_chunks": sd.num_chunks,
            "field": {
                "p": sd.field_meta.p,
                "m": sd.field_meta.m,
                "modulus": list(sd.field_meta.modulus),
                "primitive": sd.field_meta.primitive,
            },
        },
        "nodes": [list(row) for row in sd.nodes],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def from_json(text: str) -> StorageDesign:
    """Parse and validate a serialized design.  Raises InvalidDesign."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDesign(f"not valid JSON: {exc}") from exc
    try:
        header = payload["header"]
        fmeta = header["field"]
        sd = StorageDesign(
            q=int(header["q"]),
            n=int(header["n"]),
            k=int(header["k"]),
            l=int(header["l"]),
            num_nodes=int(header["num_nodes"]),
            num_chunks=int(header["num_chunks"]),
            nodes=tuple(
                tuple(None if c is None else int(c) for c in row) for row in payload["nodes"]
            ),
            field_meta=FieldMeta(
                p=int(fmeta["p"]),
                m=int(fmeta["m"]),
                modulus=tuple(int(c) for c in fmeta["modulus"]),
                primitive=int(fmeta["primitive"]),
            ),
            version=str(header["version"]),
            construction=str(header["construction"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDesign(f"malformed design payload: {exc}") from exc
    _validate(sd)
    return sd


def _validate(sd: StorageDesign) -> None:
    if len(sd.nodes) != sd.num_nodes:
        raise InvalidDesign(f"expected {sd.num_nodes} nodes, found {len(sd.nodes)}")
    for g, row in enumerate(sd.nodes):
        if len(row) != sd.l:
            raise InvalidDesign(f"node {g} has {len(row)} slots, expected {sd.l}")
        present = [c for c in row if c is not None]
        if any(not 0 <= c < sd.num_chunks for c in present):
            raise InvalidDesign(f"node {g} references a chunk id out of range")
        if len(set(present)) != len(present):
            raise InvalidDesign(f"node {g} repeats a chunk id")
    for c, holders in enumerate(chunk_locations(sd)):
        if holders and len(holders) != sd.k:
            raise InvalidDesign(f"chunk {c} has {len(holders)} replicas, expected {sd.k}")


def to_csv(sd: StorageDesign) -> str:
    """One row per node: node id followed by its slots (blank = empty)."""
    lines = []
    for g, row in enumerate(sd.nodes):
        cells = [str(g)] + ["" if c is None else str(c) for c in row]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"

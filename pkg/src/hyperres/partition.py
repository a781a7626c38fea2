"""Resolving-partition certificates, the twin-class lower bound, and exact
partition dimension.

The solver enumerates unordered partitions into exactly t classes via
restricted-growth sequences for t increasing from the lower bound, skipping
any assignment that puts two twin vertices into one class (twins have equal
distances to everything else, so no partition separating coordinates can
ever tell them apart).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hypergraph, is_sperner, twin_classes
from .errors import CapExceeded, Disconnected, NotAPartition, NotSperner
from .metric import DistanceMatrix, distance_matrix

# Partition counts grow like Bell numbers; refuse above this many vertices.
DEFAULT_VERTEX_CAP = 15


@dataclass(frozen=True)
class PartitionCertificate:
    """A vertex partition with every vertex's distance tuple to the classes.

    Only same-class pairs can collide: a vertex has coordinate 0 exactly at
    its own class, so vertices of different classes always differ.
    ``conflict`` is the lexicographically first unresolved same-class pair.
    """

    classes: tuple[frozenset[int], ...]
    representations: dict[int, tuple[int, ...]]
    valid: bool
    conflict: tuple[int, int] | None


def _partition_certificate(
    D: DistanceMatrix, classes: Sequence[frozenset[int]]
) -> PartitionCertificate:
    entries = D.entries
    reps = {}
    for v in range(D.size):
        row = entries[v]
        reps[v] = tuple(min(row[x] for x in cls) for cls in classes)
    conflict = None
    for cls in classes:
        members = sorted(cls)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if reps[u] == reps[v]:
                    if conflict is None or (u, v) < conflict:
                        conflict = (u, v)
    return PartitionCertificate(tuple(classes), reps, conflict is None, conflict)


def is_resolving_partition(
    H: Hypergraph, classes: Sequence[Iterable[int]]
) -> PartitionCertificate:
    """Certificate for whether the given class list resolves H."""
    normalized = tuple(frozenset(cls) for cls in classes)
    if any(not cls for cls in normalized):
        raise NotAPartition("partition classes must be nonempty")
    union: set[int] = set()
    total = 0
    for cls in normalized:
        union |= cls
        total += len(cls)
    if union != set(range(H.m)) or total != H.m:
        raise NotAPartition("classes must partition the vertex set exactly")
    D = distance_matrix(H)
    if not D.connected:
        raise Disconnected(
            "resolving partitions are defined on connected hypergraphs"
        )
    return _partition_certificate(D, normalized)


def pd_lower_bound(H: Hypergraph) -> int:
    """One more than the largest twin-class size; for a single hyperedge the
    bound tightens to the vertex count, because any class with two vertices
    inside the lone edge is unresolvable."""
    if not is_sperner(H):
        raise NotSperner("the partition lower bound requires a Sperner hypergraph")
    if H.k == 1:
        return H.m
    return twin_classes(H).largest_class_size() + 1


def _pair_priority(drows: list[list[int | None]], m: int) -> list[tuple[int, int]]:
    """Vertex pairs ordered by how few other vertices tell them apart, so
    validity checks hit unresolvable pairs early."""

    def disagreements(u: int, v: int) -> int:
        ru, rv = drows[u], drows[v]
        return sum(1 for w in range(m) if w != u and w != v and ru[w] != rv[w])

    pairs = list(itertools.combinations(range(m), 2))
    pairs.sort(key=lambda p: disagreements(*p))
    return pairs


def _rgs_assignments(m: int, t: int, class_id: list[int]):
    """Yield block assignments (vertex -> block) for all partitions of m
    vertices into exactly t unordered blocks, pruning assignments that put
    two vertices of one twin class together. The yielded list is reused;
    callers must copy before storing."""
    assign = [0] * m
    used_twins: list[set[int]] = [set() for _ in range(t)]

    def rec(i: int, blocks: int):
        if i == m:
            if blocks == t:
                yield assign
            return
        if blocks + (m - i) < t:
            return
        limit = min(blocks + 1, t)
        cid = class_id[i]
        for b in range(limit):
            if b < blocks and cid in used_twins[b]:
                continue
            assign[i] = b
            if b == blocks:
                used_twins[b] = {cid}
                yield from rec(i + 1, blocks + 1)
                used_twins[b] = set()
            else:
                used_twins[b].add(cid)
                yield from rec(i + 1, blocks)
                used_twins[b].discard(cid)

    yield from rec(0, 0)


def _assignment_resolves(
    drows: list[list[int | None]],
    assign: Sequence[int],
    t: int,
    pair_priority: Sequence[tuple[int, int]],
) -> bool:
    blocks: list[list[int]] = [[] for _ in range(t)]
    for v, b in enumerate(assign):
        blocks[b].append(v)
    cache: dict[tuple[int, int], int] = {}

    def dist(v: int, b: int) -> int:
        key = (v, b)
        got = cache.get(key)
        if got is None:
            row = drows[v]
            got = min(row[x] for x in blocks[b])
            cache[key] = got
        return got

    for u, v in pair_priority:
        if assign[u] != assign[v]:
            continue
        for b in range(t):
            if dist(u, b) != dist(v, b):
                break
        else:
            return False
    return True


def partition_dimension(
    H: Hypergraph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    known_dim: int | None = None,
) -> tuple[int, PartitionCertificate]:
    """Exact partition dimension with a certificate for the first minimum
    resolving partition in restricted-growth order.

    ``known_dim`` caps the search at known_dim + 1 classes when the metric
    dimension has already been computed.
    """
    D = distance_matrix(H)
    if not D.connected:
        raise Disconnected(
            "partition dimension is defined on connected hypergraphs"
        )
    if H.m > vertex_cap:
        raise CapExceeded(
            f"partition search over {H.m} vertices exceeds the cap of "
            f"{vertex_cap}"
        )
    if H.m == 1:
        cert = _partition_certificate(D, (frozenset({0}),))
        return 1, cert

    tw = twin_classes(H)
    sig_index = {sig: i for i, sig in enumerate(sorted(tw.classes))}
    class_id = [0] * H.m
    for sig, members in tw.classes.items():
        for v in members:
            class_id[v] = sig_index[sig]

    try:
        start = max(pd_lower_bound(H), 2)
    except NotSperner:
        # the +1 strengthening needs the Sperner property; the pigeonhole
        # part (twins pairwise separated) does not
        start = max(tw.largest_class_size(), 2)

    drows = D.rows()
    priority = _pair_priority(drows, H.m)
    upper = H.m if known_dim is None else min(H.m, known_dim + 1)
    for t in range(start, upper + 1):
        for assign in _rgs_assignments(H.m, t, class_id):
            if _assignment_resolves(drows, assign, t, priority):
                classes = [set() for _ in range(t)]
                for v, b in enumerate(assign):
                    classes[b].add(v)
                cert = _partition_certificate(
                    D, tuple(frozenset(c) for c in classes)
                )
                return t, cert
    raise AssertionError("the all-singletons partition always resolves")

"""Resolving-set certificates, the twin-class lower bound, exact metric
dimension, and minimum-basis counting.

The exact solver searches only vertex sets of the form F union S, where F
is the forced set (every twin class minus its representative) and S ranges
over subsets of the representatives in increasing size. Any resolving set
can be rewritten into this form by repeated same-class swaps without
changing its size, so the restricted search is still exact; the argument is
spelled out in the package README.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

from .core import Hypergraph, twin_classes
from .errors import CapExceeded, Disconnected, VertexOutOfRange
from .metric import DistanceMatrix, distance_matrix

# The subset search enumerates up to 2^|R| candidate sets; refuse beyond
# this many representatives rather than approximate.
DEFAULT_REPRESENTATIVE_CAP = 24
# count_minimum_bases enumerates binom(|R|, dim - |F|) subsets.
DEFAULT_ENUMERATION_CAP = 1_000_000


@dataclass(frozen=True)
class ResolvingSetCertificate:
    """A landmark set with every vertex's distance tuple.

    ``valid`` iff the representations of vertices outside the landmark set
    are pairwise distinct (landmark members are always distinguished by
    their own zero coordinate). ``conflict`` is the lexicographically first
    unresolved pair when invalid.
    """

    landmarks: tuple[int, ...]
    representations: dict[int, tuple[int, ...]]
    valid: bool
    conflict: tuple[int, int] | None


def _certificate(
    D: DistanceMatrix, W: tuple[int, ...]
) -> ResolvingSetCertificate:
    entries = D.entries
    reps = {v: tuple(entries[v][w] for w in W) for v in range(D.size)}
    inside = set(W)
    outside = [v for v in range(D.size) if v not in inside]
    conflict = None
    for i, u in enumerate(outside):
        for v in outside[i + 1 :]:
            if reps[u] == reps[v]:
                conflict = (u, v)
                break
        if conflict:
            break
    return ResolvingSetCertificate(W, reps, conflict is None, conflict)


def is_resolving_set(H: Hypergraph, W) -> ResolvingSetCertificate:
    """Certificate for whether the ordered vertex set W resolves H."""
    seen = []
    for v in W:
        if not 0 <= v < H.m:
            raise VertexOutOfRange(f"vertex id {v}")
        if v not in seen:
            seen.append(v)
    D = distance_matrix(H)
    if not D.connected:
        raise Disconnected("resolving sets are defined on connected hypergraphs")
    return _certificate(D, tuple(seen))


def dim_lower_bound(H: Hypergraph) -> int:
    """Sum of all twin-class excess values: every resolving set must pick
    all but one member of each twin class."""
    return sum(twin_classes(H).excess.values())


def _resolves(drows: list[list[int | None]], outside: list[int], W: tuple[int, ...]) -> bool:
    seen = set()
    for v in outside:
        row = drows[v]
        key = tuple(row[w] for w in W)
        if key in seen:
            return False
        seen.add(key)
    return True


def metric_dimension(
    H: Hypergraph, representative_cap: int = DEFAULT_REPRESENTATIVE_CAP
) -> tuple[int, ResolvingSetCertificate]:
    """Exact metric dimension with a certificate for the first minimum
    basis in search order (forced vertices plus representative subsets in
    increasing size, lexicographic by representative id)."""
    D = distance_matrix(H)
    if not D.connected:
        raise Disconnected("metric dimension is defined on connected hypergraphs")
    tw = twin_classes(H)
    reps = sorted(tw.representatives.values())
    forced = sorted(tw.forced)
    if len(reps) > representative_cap:
        raise CapExceeded(
            f"{len(reps)} representative vertices exceed the exact-search cap "
            f"of {representative_cap}"
        )
    drows = D.rows()
    for size in range(len(reps) + 1):
        for extra in itertools.combinations(reps, size):
            W = tuple(sorted(forced + list(extra)))
            inside = set(W)
            outside = [v for v in range(H.m) if v not in inside]
            if _resolves(drows, outside, W):
                return len(W), _certificate(D, W)
    raise AssertionError("the full vertex set always resolves")


def count_minimum_bases(
    H: Hypergraph,
    representative_cap: int = DEFAULT_REPRESENTATIVE_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Exact number of distinct minimum resolving sets.

    Every minimum basis is a same-class swap variant of some resolving
    F union S: enumerate all resolving S of minimum size, expand each into
    its swap variants (each class whose representative is outside S may
    drop any one member), and count the distinct sets.
    """
    dim, _ = metric_dimension(H, representative_cap)
    D = distance_matrix(H)
    tw = twin_classes(H)
    reps = sorted(tw.representatives.values())
    forced = sorted(tw.forced)
    extra_size = dim - len(forced)
    if comb(len(reps), extra_size) > enumeration_cap:
        raise CapExceeded(
            f"counting would enumerate {comb(len(reps), extra_size)} subsets, "
            f"above the cap of {enumeration_cap}"
        )
    drows = D.rows()
    classes = sorted(tw.classes.values(), key=min)
    bases: set[frozenset[int]] = set()
    for extra in itertools.combinations(reps, extra_size):
        W = tuple(sorted(forced + list(extra)))
        inside = set(W)
        outside = [v for v in range(H.m) if v not in inside]
        if not _resolves(drows, outside, W):
            continue
        chosen = set(extra)
        # classes with representative in S stay whole; the rest contribute
        # one variant per droppable member
        variant_pools = []
        fixed: list[int] = []
        for cls in classes:
            rep = min(cls)
            if rep in chosen:
                fixed.extend(cls)
            else:
                variant_pools.append(sorted(cls))
        for drops in itertools.product(*variant_pools):
            variant = set(fixed)
            for pool, dropped in zip(variant_pools, drops):
                variant.update(pool)
                variant.discard(dropped)
            bases.add(frozenset(variant))
    return len(bases)

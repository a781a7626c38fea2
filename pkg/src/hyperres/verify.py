"""Cross-check harness: every closed-form dimension value for the named
families, plus a handful of pinned reference instances, compared against
the exact solvers.

Each check is one row; a row passes iff the predicted and solved values are
exactly equal. Rows are reported sorted by rule id and parameters, whatever
order they were computed in.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import Hypergraph, analyze_structure, build_hypergraph
from .families import GeneratorSpec, generate, predicted_dim, predicted_pd
from .partition import partition_dimension
from .resolving import metric_dimension
from .transforms import dual


def reference_instances() -> dict[str, Hypergraph]:
    """Small instances with hand-pinned dimension values.

    overlap4: two overlapping edges on 4 vertices; the twin lower bound (1)
    is strict, dim = 2.
    cover6: three pairwise overlapping 4-edges on 6 vertices; bound 3 is
    strict, dim = 5.
    twoblock11: two big edges sharing two vertices; pd = 6 while rank = 7,
    the pinned counterexample to rank as a pd lower bound.
    """
    return {
        "overlap4": build_hypergraph(
            [["v1", "v2", "v3"], ["v3", "v4"]]
        ),
        "cover6": build_hypergraph(
            [
                ["v1", "v2", "v3", "v4"],
                ["v3", "v4", "v5", "v6"],
                ["v1", "v2", "v5", "v6"],
            ]
        ),
        "twoblock11": build_hypergraph(
            [
                [f"v{i}" for i in range(1, 8)],
                [f"v{i}" for i in range(6, 12)],
            ]
        ),
    }


@dataclass(frozen=True)
class VerifyRow:
    rule: str
    params: dict
    expected: int
    actual: int
    elapsed_seconds: float

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.rows if not r.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _family_rows(max_k: int | None, max_n: int | None):
    def keep(k: int, n: int) -> bool:
        return (max_k is None or k <= max_k) and (max_n is None or n <= max_n)

    rows: list[tuple[str, dict, GeneratorSpec, str]] = []
    for k in (3, 4, 5, 6, 7, 8, 9):
        if keep(k, 3):
            rows.append(
                ("dim/hypercycle-3uniform", {"k": k, "n": 3},
                 GeneratorSpec("hypercycle", k, 3), "dim")
            )
    for k in (3, 4, 5):
        for n in (4, 5):
            if keep(k, n):
                rows.append(
                    ("dim/hypercycle-uniform", {"k": k, "n": n},
                     GeneratorSpec("hypercycle", k, n), "dim")
                )
    for k in (3, 4, 5):
        for n in (3, 4):
            if keep(k, n):
                rows.append(
                    ("dim/hyperstar", {"k": k, "n": n},
                     GeneratorSpec("hyperstar", k, n), "dim")
                )
    for k in (2, 3, 4, 5):
        for n in (3, 4, 5):
            if keep(k, n):
                rows.append(
                    ("dim/hyperpath", {"k": k, "n": n},
                     GeneratorSpec("hyperpath", k, n), "dim")
                )
    for k in (3, 4, 5, 6):
        if keep(k, 3):
            rows.append(
                ("pd/hypercycle-3uniform", {"k": k, "n": 3},
                 GeneratorSpec("hypercycle", k, 3), "pd")
            )
    for k in (3, 4):
        for n in (2, 4):
            if keep(k, n):
                rows.append(
                    ("pd/hypercycle-uniform", {"k": k, "n": n},
                     GeneratorSpec("hypercycle", k, n), "pd")
                )
    for k in (2, 3, 4):
        for n in (2, 3, 4):
            if keep(k, n):
                rows.append(
                    ("pd/hyperpath", {"k": k, "n": n},
                     GeneratorSpec("hyperpath", k, n), "pd")
                )
    return rows


def _dual_rows(max_k: int | None):
    def keep(k: int) -> bool:
        return max_k is None or k <= max_k

    rows: list[tuple[str, dict, GeneratorSpec, str, int]] = []
    for k in (2, 3, 4, 5):
        if keep(k):
            rows.append(
                ("dim/dual-hyperpath", {"k": k, "n": 3},
                 GeneratorSpec("hyperpath", k, 3), "dim", 1)
            )
            rows.append(
                ("pd/dual-hyperpath", {"k": k, "n": 3},
                 GeneratorSpec("hyperpath", k, 3), "pd", 2)
            )
    for k in (3, 4, 5):
        if keep(k):
            rows.append(
                ("dim/dual-hypercycle", {"k": k, "n": 3},
                 GeneratorSpec("hypercycle", k, 3), "dim", 2)
            )
            rows.append(
                ("pd/dual-hypercycle", {"k": k, "n": 3},
                 GeneratorSpec("hypercycle", k, 3), "pd", 3)
            )
    return rows


def run_verification(
    max_k: int | None = None, max_n: int | None = None
) -> VerifyReport:
    report = VerifyReport()

    def record(rule: str, params: dict, expected: int, solve) -> None:
        t0 = time.perf_counter()
        actual = solve()
        report.rows.append(
            VerifyRow(rule, params, expected, actual, time.perf_counter() - t0)
        )

    for rule, params, spec, which in _family_rows(max_k, max_n):
        H = generate(spec)
        if which == "dim":
            record(rule, params, predicted_dim(spec),
                   lambda H=H: metric_dimension(H)[0])
        else:
            record(rule, params, predicted_pd(spec),
                   lambda H=H: partition_dimension(H)[0])

    for rule, params, spec, which, expected in _dual_rows(max_k):
        Hd = dual(generate(spec))
        if which == "dim":
            record(rule, params, expected, lambda Hd=Hd: metric_dimension(Hd)[0])
        else:
            record(rule, params, expected, lambda Hd=Hd: partition_dimension(Hd)[0])

    pinned = reference_instances()
    record("pinned/dim-overlap4", {}, 2,
           lambda: metric_dimension(pinned["overlap4"])[0])
    record("pinned/dim-cover6", {}, 5,
           lambda: metric_dimension(pinned["cover6"])[0])
    record("pinned/pd-twoblock11", {}, 6,
           lambda: partition_dimension(pinned["twoblock11"])[0])
    record("pinned/rank-twoblock11", {}, 7,
           lambda: analyze_structure(pinned["twoblock11"]).rank)

    report.rows.sort(key=lambda r: (r.rule, sorted(r.params.items())))
    return report

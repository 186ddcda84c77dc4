"""End-to-end comparison of exact maximum t-intersecting families with the stabilizer bound."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..families import CycleSet, Family, is_stabilizer_of_t_fixed_points, is_t_intersecting, stabilizer_family
from ..stirling import stirling_recurrence
from .clique import DEFAULT_BUDGET, all_maximum_cliques, max_clique
from .graph import DEFAULT_VERTEX_CAP, build_graph

#: all maximum cliques are only enumerated up to this many vertices
UNIQUENESS_VERTEX_CAP = 5000


@dataclass(frozen=True)
class TheoremReport:
    n: int
    k: int
    t: int
    vertex_count: int
    bound_stirling: int
    max_size: int
    optimal: bool
    is_stabilizer: bool | None
    witness_cycles: tuple[str, ...]
    elapsed_ms: float
    uniqueness_checked: bool = False
    maximum_families: int | None = None
    stabilizer_points: tuple[int, ...] | None = None

    @property
    def relation(self) -> str:
        if self.max_size < self.bound_stirling:
            return "below"
        if self.max_size == self.bound_stirling:
            return "equal"
        return "above"

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "vertex_count": self.vertex_count,
            "bound_stirling": str(self.bound_stirling),
            "max_size": self.max_size,
            "optimal": self.optimal,
            "is_stabilizer": self.is_stabilizer,
            "witness_cycles": list(self.witness_cycles),
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        out["relation"] = self.relation
        out["uniqueness_checked"] = self.uniqueness_checked
        out["maximum_families"] = self.maximum_families
        out["stabilizer_points"] = None if self.stabilizer_points is None else list(self.stabilizer_points)
        return out


def _check_params(n: int, k: int, t: int) -> None:
    if not 1 <= t < k <= n:
        raise ValueError(f"need 1 <= t < k <= n, got n={n}, k={k}, t={t}")


def verify_theorem(
    n: int,
    k: int,
    t: int,
    budget: float | None = DEFAULT_BUDGET,
    threads: int = 1,
    enumerate_all: bool = True,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> TheoremReport:
    """Exact maximum t-intersecting family in S_{n,k} against ``[n-t, k-t]``.

    The stabilizer of the points 1..t seeds the search. When the maximum
    meets the bound and the search is optimal, every maximum family is
    enumerated (``enumerate_all``, graphs up to ``UNIQUENESS_VERTEX_CAP``
    vertices) and each must be a stabilizer of t fixed points; otherwise only
    the reported witness is classified.
    """
    _check_params(n, k, t)
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    bound = stirling_recurrence(n - t, k - t)
    g = build_graph(n, k, t, vertex_cap=vertex_cap)

    seed_family = stabilizer_family(n, k, CycleSet.fixed_points(range(1, t + 1)))
    seed = sorted(g.index_of(pi) for pi in seed_family)
    result = max_clique(g, budget=_left(deadline), threads=threads, seed_clique=seed)
    witness = result.witness
    assert witness is not None and is_t_intersecting(witness, t)

    points = is_stabilizer_of_t_fixed_points(witness, t)
    is_stab: bool | None = points is not None
    uniqueness_checked = False
    n_max_families = None
    if result.optimal and result.best_size == bound and enumerate_all and g.vertex_count <= UNIQUENESS_VERTEX_CAP:
        cliques, complete = all_maximum_cliques(g, bound, budget=_left(deadline))
        if complete:
            uniqueness_checked = True
            n_max_families = len(cliques)
            is_stab = all(
                is_stabilizer_of_t_fixed_points(Family((g.vertices[v] for v in c), ground=witness.ground, k=k), t)
                is not None
                for c in cliques
            )
    if not result.optimal:
        is_stab = None

    return TheoremReport(
        n=n,
        k=k,
        t=t,
        vertex_count=g.vertex_count,
        bound_stirling=bound,
        max_size=result.best_size,
        optimal=result.optimal,
        is_stabilizer=is_stab,
        witness_cycles=tuple(witness.to_strings()),
        elapsed_ms=round((time.monotonic() - start) * 1000.0, 3),
        uniqueness_checked=uniqueness_checked,
        maximum_families=n_max_families,
        stabilizer_points=None if points is None else tuple(sorted(points)),
    )


def _left(deadline: float | None) -> float | None:
    if deadline is None:
        return None
    return max(deadline - time.monotonic(), 0.0)


@dataclass(frozen=True)
class ThresholdReport:
    """Per-n table for fixed (k, t) and the smallest n from which the claims held."""

    k: int
    t: int
    n_max: int
    rows: tuple[TheoremReport, ...]
    bound_threshold: int | None
    structure_threshold: int | None
    notes: tuple[str, ...] = field(default=())

    def as_dict(self, timing: bool = True) -> dict:
        return {
            "k": self.k,
            "t": self.t,
            "n_min": self.k,
            "n_max": self.n_max,
            "bound_threshold": self.bound_threshold,
            "structure_threshold": self.structure_threshold,
            "bound_observed": self.bound_threshold is not None,
            "structure_observed": self.structure_threshold is not None,
            "notes": list(self.notes),
            "rows": [_row(r, timing) for r in self.rows],
        }


def _row(r: TheoremReport, timing: bool) -> dict:
    out = {
        "n": r.n,
        "vertex_count": r.vertex_count,
        "max_size": r.max_size,
        "bound_stirling": str(r.bound_stirling),
        "relation": r.relation,
        "optimal": r.optimal,
        "is_stabilizer": r.is_stabilizer,
        "uniqueness_checked": r.uniqueness_checked,
        "maximum_families": r.maximum_families,
    }
    if timing:
        out["elapsed_ms"] = r.elapsed_ms
    return out


def _suffix_threshold(ns: list[int], ok: list[bool]) -> int | None:
    threshold = None
    for n, good in zip(reversed(ns), reversed(ok)):
        if not good:
            break
        threshold = n
    return threshold


def find_n0(
    k: int,
    t: int,
    n_max: int,
    budget: float | None = DEFAULT_BUDGET,
    threads: int = 1,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> ThresholdReport:
    """Run :func:`verify_theorem` for n = k..n_max and report empirical thresholds.

    ``bound_threshold``: smallest n with ``max_size == [n-t, k-t]`` (exactly,
    optimal search) for every scanned n from there on.
    ``structure_threshold``: same, additionally requiring every maximum
    family to be a stabilizer of t fixed points.
    """
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got k={k}, t={t}")
    if n_max < k:
        raise ValueError(f"empty range: n_max={n_max} < k={k}")
    rows = tuple(verify_theorem(n, k, t, budget=budget, threads=threads, vertex_cap=vertex_cap) for n in range(k, n_max + 1))
    ns = [r.n for r in rows]
    meets = [r.optimal and r.max_size == r.bound_stirling for r in rows]
    structured = [m and r.is_stabilizer is True and r.uniqueness_checked for m, r in zip(meets, rows)]
    notes = []
    for r in rows:
        if not r.optimal:
            notes.append(f"n={r.n}: budget exhausted, incumbent {r.max_size}")
        elif r.max_size > r.bound_stirling:
            notes.append(f"n={r.n}: maximum {r.max_size} exceeds the bound {r.bound_stirling}")
    return ThresholdReport(
        k=k,
        t=t,
        n_max=n_max,
        rows=rows,
        bound_threshold=_suffix_threshold(ns, meets),
        structure_threshold=_suffix_threshold(ns, structured),
        notes=tuple(notes),
    )

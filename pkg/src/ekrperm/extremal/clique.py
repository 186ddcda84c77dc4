"""Exact maximum clique by branch and bound with greedy colouring bounds."""
from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from ..families import Family
from ._backend import BACKEND, kernel
from .graph import BitGraph, IntersectionGraph

DEFAULT_BUDGET = 300.0


@dataclass(frozen=True)
class SearchResult:
    best_size: int
    clique: tuple[int, ...]
    witness: Family | None
    optimal: bool
    nodes_explored: int
    elapsed: float
    backend: str = BACKEND


class _Relabelled:
    """The graph renumbered so that position 0 is the last vertex left by degeneracy peeling."""

    def __init__(self, g: BitGraph) -> None:
        base = kernel.prepare(g.adjacency, g.vertex_count)
        order = kernel.degeneracy_order(base)[::-1]
        self.old_of = order
        new_of = [0] * len(order)
        for i, v in enumerate(order):
            new_of[v] = i
        self.new_of = new_of
        self.nv = len(order)
        self.handle = kernel.relabel(base, order)

    @classmethod
    def of(cls, g: BitGraph) -> "_Relabelled":
        # cached per graph instance; graphs are immutable
        key = f"_relabelled_{kernel.NAME}"
        cached = g.__dict__.get(key)
        if cached is None:
            cached = cls(g)
            g.__dict__[key] = cached
        return cached

    def row(self, v: int) -> int:
        return kernel.row(self.handle, v)

    def to_old(self, clique: Sequence[int]) -> tuple[int, ...]:
        return tuple(sorted(self.old_of[v] for v in clique))

    def to_new(self, clique: Sequence[int]) -> list[int]:
        return [self.new_of[v] for v in clique]


def _remaining(deadline: float | None) -> float | None:
    if deadline is None:
        return None
    return max(deadline - time.monotonic(), 0.0)


def _search_parallel(rg: _Relabelled, lower: int, incumbent, deadline, threads: int):
    # one task per root vertex i: cliques whose lowest relabelled vertex is i
    nv = rg.nv
    lock = threading.Lock()
    state = {"best": lower, "clique": incumbent, "nodes": 0, "complete": True}

    def task(i: int) -> None:
        cand = rg.row(i) >> (i + 1) << (i + 1)
        with lock:
            floor = state["best"]
        if 1 + cand.bit_count() <= floor:
            return
        best, clique, nodes, complete = kernel.search_max(rg.handle, [i], cand, floor, _remaining(deadline))
        with lock:
            state["nodes"] += nodes
            if not complete:
                state["complete"] = False
            if clique is not None and best > state["best"]:
                state["best"] = best
                state["clique"] = clique

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(task, range(nv)))
    return state["best"], state["clique"], state["nodes"], state["complete"]


def max_clique(
    g: BitGraph,
    seed_lower_bound: int = 0,
    budget: float | None = DEFAULT_BUDGET,
    threads: int = 1,
    seed_clique: Sequence[int] | None = None,
) -> SearchResult:
    """Maximum clique of ``g``.

    ``seed_clique`` (vertex labels of ``g``) is a known clique used as the
    starting incumbent; ``seed_lower_bound`` is a size the caller vouches
    for. Branches whose colouring bound does not beat the incumbent are cut.

    The reported clique is always the first maximum clique met by a
    sequential search in the fixed relabelled order, so the answer does not
    depend on ``threads`` or on which seed was supplied.
    """
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    nv = g.vertex_count
    if not 0 <= seed_lower_bound <= nv:
        raise ValueError(f"seed_lower_bound must lie in [0, {nv}], got {seed_lower_bound}")
    if seed_clique is not None and not g.is_clique(seed_clique):
        raise ValueError("seed_clique is not a clique")

    if nv == 0:
        return _result(g, (), True, 0, start)

    rg = _Relabelled.of(g)
    incumbent = None
    lower = seed_lower_bound
    if seed_clique:
        incumbent = tuple(rg.to_new(seed_clique))
        lower = max(lower, len(incumbent))

    nodes = 0
    while True:
        if threads > 1:
            best, clique, n_nodes, complete = _search_parallel(rg, lower, incumbent, deadline, threads)
        else:
            best, clique, n_nodes, complete = kernel.search_max(
                rg.handle, [], (1 << nv) - 1, lower, _remaining(deadline)
            )
            if clique is None:
                clique = incumbent
        nodes += n_nodes
        if not complete:
            witness = clique if clique is not None else ()
            return _result(g, rg.to_old(witness), False, nodes, start)
        found, n_nodes, complete = kernel.enumerate_cliques(rg.handle, best, 1, _remaining(deadline))
        nodes += n_nodes
        if found:
            return _result(g, rg.to_old(found[0]), complete, nodes, start)
        if not complete:
            return _result(g, rg.to_old(clique or ()), False, nodes, start)
        if lower == 0:
            raise AssertionError("clique search lost its own incumbent")
        # the caller's bound was not attained by any clique; search from scratch
        lower, incumbent = 0, None


def _result(g: BitGraph, clique: tuple[int, ...], optimal: bool, nodes: int, start: float) -> SearchResult:
    witness = None
    if isinstance(g, IntersectionGraph):
        witness = Family((g.vertices[v] for v in clique), ground=tuple(range(1, g.n + 1)), k=g.k)
    return SearchResult(
        best_size=len(clique),
        clique=clique,
        witness=witness,
        optimal=optimal,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
        backend=kernel.NAME,
    )


def all_maximum_cliques(g: BitGraph, size: int, budget: float | None = None) -> tuple[list[tuple[int, ...]], bool]:
    """Every clique of ``size`` vertices (the maximum cliques when ``size`` is the clique number).

    Returns the cliques, each sorted, in a fixed order, and whether the
    enumeration finished inside ``budget``.
    """
    if g.vertex_count == 0:
        return ([()] if size == 0 else []), True
    rg = _Relabelled.of(g)
    found, _, complete = kernel.enumerate_cliques(rg.handle, size, 0, budget)
    return sorted(rg.to_old(c) for c in found), complete

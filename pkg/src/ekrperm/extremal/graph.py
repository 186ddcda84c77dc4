"""Bitset graphs, and the t-intersection graph on S_{n,k}."""
from __future__ import annotations

import heapq
from collections import defaultdict
from typing import Iterable, Iterator, Sequence

from ..permutations import CyclePermutation, snk, snk_index
from ..stirling import stirling_recurrence

DEFAULT_VERTEX_CAP = 200_000


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BitGraph:
    """Undirected loop-free graph; ``adjacency[v]`` is an int bitset of neighbours."""

    def __init__(self, adjacency: Sequence[int]) -> None:
        self.adjacency: tuple[int, ...] = tuple(adjacency)
        nv = len(self.adjacency)
        for v, row in enumerate(self.adjacency):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> nv:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{nv - 1}")
        for v, row in enumerate(self.adjacency):
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, nv: int, edges: Iterable[tuple[int, int]]) -> "BitGraph":
        adj = [0] * nv
        for u, v in edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(adj)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                yield u, v

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def induced(self, vertices: Sequence[int]) -> "BitGraph":
        """Subgraph on ``vertices``, relabelled 0..len-1 in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adjacency[v]):
                j = pos.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return BitGraph(adj)

    def degeneracy_order(self) -> list[int]:
        """Repeatedly remove a minimum-degree vertex (ties: smallest label)."""
        deg = [self.degree(v) for v in range(self.vertex_count)]
        heap = [(d, v) for v, d in enumerate(deg)]
        heapq.heapify(heap)
        removed = [False] * self.vertex_count
        order = []
        while heap:
            d, v = heapq.heappop(heap)
            if removed[v] or d != deg[v]:
                continue
            removed[v] = True
            order.append(v)
            for u in iter_bits(self.adjacency[v]):
                if not removed[u]:
                    deg[u] -= 1
                    heapq.heappush(heap, (deg[u], u))
        return order


class IntersectionGraph(BitGraph):
    """Vertices are S_{n,k} in enumeration order; edges join permutations sharing >= t cycles."""

    def __init__(self, n: int, k: int, t: int, vertices: Sequence[CyclePermutation], adjacency: Sequence[int]) -> None:
        self.n, self.k, self.t = n, k, t
        self.vertices: tuple[CyclePermutation, ...] = tuple(vertices)
        # adjacency is symmetric by construction; skip the O(E) re-check
        self.adjacency = tuple(adjacency)

    def index_of(self, pi: CyclePermutation) -> int:
        return snk_index(self.n, self.k)[pi]


def build_graph(n: int, k: int, t: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> IntersectionGraph:
    """Build the t-intersection graph through a cycle -> vertices inverted index."""
    if not 1 <= t <= k <= n:
        raise ValueError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    size = stirling_recurrence(n, k)
    if size > vertex_cap:
        raise ValueError(f"S_({n},{k}) has {size} vertices, above the cap of {vertex_cap}")
    vertices = snk(n, k)
    index: dict = defaultdict(list)
    for v, pi in enumerate(vertices):
        for c in pi.cycles:
            index[c].append(v)
    adjacency = []
    if t == 1:
        masks = {c: sum(1 << v for v in vs) for c, vs in index.items()}
        for v, pi in enumerate(vertices):
            row = 0
            for c in pi.cycles:
                row |= masks[c]
            adjacency.append(row & ~(1 << v))
    else:
        for v, pi in enumerate(vertices):
            counts: dict[int, int] = defaultdict(int)
            for c in pi.cycles:
                for u in index[c]:
                    counts[u] += 1
            row = 0
            for u, shared in counts.items():
                if shared >= t and u != v:
                    row |= 1 << u
            adjacency.append(row)
    return IntersectionGraph(n, k, t, vertices, adjacency)

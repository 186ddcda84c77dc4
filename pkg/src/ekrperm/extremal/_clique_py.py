"""Pure-Python clique kernel on integer bitsets.

Same algorithm and tie-breaking as the compiled kernel: greedy colour classes
built by lowest-bit-first scans, candidates expanded from the highest colour
down. Both kernels return identical results on identical input.
"""
from __future__ import annotations

import time

NAME = "python"

_CHECK_EVERY = 1024


class PreparedGraph:
    __slots__ = ("adj", "nv")

    def __init__(self, adj, nv):
        self.adj = list(adj)
        self.nv = nv


def prepare(adj, nv):
    return PreparedGraph(adj, nv)


class _Timeout(Exception):
    pass


def _colour_sort(P, adj):
    order = []
    colours = []
    colour = 0
    Q = P
    while Q:
        colour += 1
        avail = Q
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            Q ^= low
            avail ^= low
            avail &= ~adj[v]
            order.append(v)
            colours.append(colour)
    return order, colours


class _Search:
    def __init__(self, g, time_limit):
        self.adj = g.adj
        self.nodes = 0
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.current = []

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def expand_max(self, P):
        self.tick()
        adj = self.adj
        current = self.current
        order, colours = _colour_sort(P, adj)
        size = len(current)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= self.best:
                return
            v = order[i]
            current.append(v)
            newP = P & adj[v]
            if newP:
                self.expand_max(newP)
            elif size + 1 > self.best:
                self.best = size + 1
                self.best_clique = tuple(current)
            current.pop()
            P &= ~(1 << v)

    def expand_enum(self, P):
        self.tick()
        adj = self.adj
        current = self.current
        order, colours = _colour_sort(P, adj)
        size = len(current)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] < self.target:
                return
            v = order[i]
            current.append(v)
            if size + 1 == self.target:
                self.found.append(tuple(current))
                if self.limit and len(self.found) >= self.limit:
                    current.pop()
                    raise StopIteration
            else:
                newP = P & adj[v]
                if newP:
                    self.expand_enum(newP)
            current.pop()
            P &= ~(1 << v)


def search_max(g, base, cand, lower, time_limit=None):
    """Look for a clique larger than ``lower`` made of ``base`` plus vertices of ``cand``.

    Returns ``(best_size, clique_or_None, nodes, complete)``.
    """
    s = _Search(g, time_limit)
    s.current = list(base)
    s.best = lower
    s.best_clique = None
    complete = True
    try:
        if cand:
            s.expand_max(cand)
        elif len(base) > lower:
            s.best = len(base)
            s.best_clique = tuple(base)
    except _Timeout:
        complete = False
    return s.best, s.best_clique, s.nodes, complete


def enumerate_cliques(g, target, limit=0, time_limit=None):
    """All cliques of exactly ``target`` vertices (stop after ``limit`` if nonzero)."""
    s = _Search(g, time_limit)
    s.target = target
    s.limit = limit
    s.found = []
    complete = True
    if target <= 0:
        return [()], 0, True
    try:
        s.expand_enum((1 << g.nv) - 1)
    except StopIteration:
        pass
    except _Timeout:
        complete = False
    return s.found, s.nodes, complete


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def row(g, v):
    return g.adj[v]


def degeneracy_order(g):
    """Peel a minimum-degree vertex at a time, ties to the smallest label."""
    import heapq

    adj = g.adj
    deg = [a.bit_count() for a in adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    alive = (1 << g.nv) - 1
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive >> v & 1 or d != deg[v]:
            continue
        alive ^= 1 << v
        order.append(v)
        for u in _bits(adj[v] & alive):
            deg[u] -= 1
            heapq.heappush(heap, (deg[u], u))
    return order


def relabel(g, order):
    """Graph with vertex ``order[i]`` renamed ``i``."""
    new_of = [0] * g.nv
    for i, v in enumerate(order):
        new_of[v] = i
    adj = []
    for v in order:
        r = 0
        for u in _bits(g.adj[v]):
            r |= 1 << new_of[u]
        adj.append(r)
    return PreparedGraph(adj, g.nv)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled clique kernel on uint64 word bitsets.

Mirrors ``_clique_py`` step for step; ``search_max`` runs without the GIL so
root branches can be searched from several threads.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, realloc, free
from libc.string cimport memcpy, memset

NAME = "cython"

cdef extern from "<time.h>" nogil:
    ctypedef long time_t
    struct timespec:
        time_t tv_sec
        long tv_nsec
    int clock_gettime(int clk_id, timespec *tp)
    int CLOCK_MONOTONIC

cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return <double>ts.tv_sec + 1e-9 * <double>ts.tv_nsec

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef inline int _ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)

cdef enum:
    CHECK_EVERY = 1024


cdef class PreparedGraph:
    cdef uint64_t* adj
    cdef public int nv
    cdef public int nw
    cdef public int maxdeg

    def __cinit__(self):
        self.adj = NULL

    def __dealloc__(self):
        free(self.adj)


def prepare(adj, int nv):
    cdef PreparedGraph g = PreparedGraph()
    cdef int nw = max(1, (nv + 63) // 64)
    cdef int v, w, deg
    cdef bytes raw
    cdef const unsigned char* src
    g.nv = nv
    g.nw = nw
    g.adj = <uint64_t*> calloc(<size_t>nv * nw + 1, sizeof(uint64_t))
    if g.adj == NULL:
        raise MemoryError()
    g.maxdeg = 0
    for v in range(nv):
        raw = int(adj[v]).to_bytes(nw * 8, "little")
        src = raw
        memcpy(&g.adj[<size_t>v * nw], src, nw * 8)
        deg = 0
        for w in range(nw):
            deg += __builtin_popcountll(g.adj[<size_t>v * nw + w])
        if deg > g.maxdeg:
            g.maxdeg = deg
    return g


cdef struct State:
    const uint64_t* adj
    int nv
    int nw
    int width          # capacity of order/colour arrays below level 0
    uint64_t* P        # levels x nw
    uint64_t* Q        # scratch nw
    uint64_t* avail    # scratch nw
    int* order         # laid out by _slot()
    int* colour
    int* current
    int size
    int best
    int* best_clique
    int found_better
    # enumeration
    int target
    int limit
    int* found
    int nfound
    int found_cap
    int stop
    # budget
    long long nodes
    double deadline
    int timed_out


cdef int _alloc(State* s, PreparedGraph g, int levels) noexcept nogil:
    s.adj = g.adj
    s.nv = g.nv
    s.nw = g.nw
    s.width = g.maxdeg if g.maxdeg > 0 else 1
    s.P = <uint64_t*> calloc(<size_t>(levels + 1) * s.nw, sizeof(uint64_t))
    s.Q = <uint64_t*> calloc(s.nw, sizeof(uint64_t))
    s.avail = <uint64_t*> calloc(s.nw, sizeof(uint64_t))
    s.order = <int*> malloc((<size_t>g.nv + 1 + <size_t>levels * s.width) * sizeof(int))
    s.colour = <int*> malloc((<size_t>g.nv + 1 + <size_t>levels * s.width) * sizeof(int))
    s.current = <int*> malloc((g.nv + 1) * sizeof(int))
    s.best_clique = <int*> malloc((g.nv + 1) * sizeof(int))
    s.found = NULL
    s.nfound = 0
    s.found_cap = 0
    s.stop = 0
    s.nodes = 0
    s.timed_out = 0
    s.found_better = 0
    if (s.P == NULL or s.Q == NULL or s.avail == NULL or s.order == NULL
            or s.colour == NULL or s.current == NULL or s.best_clique == NULL):
        return -1
    return 0


cdef void _release(State* s) noexcept nogil:
    free(s.P)
    free(s.Q)
    free(s.avail)
    free(s.order)
    free(s.colour)
    free(s.current)
    free(s.best_clique)
    free(s.found)


cdef inline size_t _slot(State* s, int level) noexcept nogil:
    # level 0 may hold every vertex; deeper levels hold neighbourhoods only
    if level == 0:
        return 0
    return <size_t>s.nv + 1 + <size_t>(level - 1) * s.width


cdef inline int _empty(const uint64_t* x, int nw) noexcept nogil:
    cdef int w
    for w in range(nw):
        if x[w]:
            return 0
    return 1


cdef int _colour_sort(State* s, int level) noexcept nogil:
    cdef int nw = s.nw
    cdef uint64_t* P = &s.P[<size_t>level * nw]
    cdef uint64_t* Q = s.Q
    cdef uint64_t* avail = s.avail
    cdef int* order = &s.order[_slot(s, level)]
    cdef int* colour = &s.colour[_slot(s, level)]
    cdef const uint64_t* row
    cdef int cnt = 0, col = 0, w, v, start
    cdef uint64_t low
    memcpy(Q, P, nw * sizeof(uint64_t))
    while not _empty(Q, nw):
        col += 1
        memcpy(avail, Q, nw * sizeof(uint64_t))
        start = 0
        while True:
            w = start
            while w < nw and avail[w] == 0:
                w += 1
            if w == nw:
                break
            start = w
            low = avail[w] & (~avail[w] + 1)
            v = w * 64 + _ctz(avail[w])
            Q[w] ^= low
            avail[w] ^= low
            row = &s.adj[<size_t>v * nw]
            for w in range(start, nw):
                avail[w] &= ~row[w]
            order[cnt] = v
            colour[cnt] = col
            cnt += 1
    return cnt


cdef inline int _tick(State* s) noexcept nogil:
    s.nodes += 1
    if s.deadline > 0 and s.nodes % CHECK_EVERY == 0:
        if _now() > s.deadline:
            s.timed_out = 1
            return 1
    return 0


cdef void _expand_max(State* s, int level) noexcept nogil:
    if _tick(s):
        return
    cdef int nw = s.nw
    cdef int m = _colour_sort(s, level)
    cdef uint64_t* P = &s.P[<size_t>level * nw]
    cdef uint64_t* newP = &s.P[<size_t>(level + 1) * nw]
    cdef int* order = &s.order[_slot(s, level)]
    cdef int* colour = &s.colour[_slot(s, level)]
    cdef const uint64_t* row
    cdef int size = s.size
    cdef int i, v, w, any_bit
    i = m - 1
    while i >= 0:
        if size + colour[i] <= s.best:
            return
        v = order[i]
        s.current[size] = v
        row = &s.adj[<size_t>v * nw]
        any_bit = 0
        for w in range(nw):
            newP[w] = P[w] & row[w]
            if newP[w]:
                any_bit = 1
        if any_bit:
            s.size = size + 1
            _expand_max(s, level + 1)
            s.size = size
            if s.timed_out:
                return
        elif size + 1 > s.best:
            s.best = size + 1
            memcpy(s.best_clique, s.current, (size + 1) * sizeof(int))
            s.found_better = 1
        P[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        i -= 1


cdef int _emit(State* s, int size) noexcept nogil:
    cdef int* grown
    cdef int cap
    if s.nfound == s.found_cap:
        cap = 16 if s.found_cap == 0 else 2 * s.found_cap
        grown = <int*> realloc(s.found, <size_t>cap * s.target * sizeof(int))
        if grown == NULL:
            return -1
        s.found = grown
        s.found_cap = cap
    memcpy(&s.found[<size_t>s.nfound * s.target], s.current, size * sizeof(int))
    s.nfound += 1
    return 0


cdef void _expand_enum(State* s, int level) noexcept nogil:
    if _tick(s):
        return
    cdef int nw = s.nw
    cdef int m = _colour_sort(s, level)
    cdef uint64_t* P = &s.P[<size_t>level * nw]
    cdef uint64_t* newP = &s.P[<size_t>(level + 1) * nw]
    cdef int* order = &s.order[_slot(s, level)]
    cdef int* colour = &s.colour[_slot(s, level)]
    cdef const uint64_t* row
    cdef int size = s.size
    cdef int i, v, w, any_bit
    i = m - 1
    while i >= 0:
        if size + colour[i] < s.target:
            return
        v = order[i]
        s.current[size] = v
        if size + 1 == s.target:
            if _emit(s, size + 1) != 0:
                s.stop = 1
                return
            if s.limit and s.nfound >= s.limit:
                s.stop = 1
                return
        else:
            row = &s.adj[<size_t>v * nw]
            any_bit = 0
            for w in range(nw):
                newP[w] = P[w] & row[w]
                if newP[w]:
                    any_bit = 1
            if any_bit:
                s.size = size + 1
                _expand_enum(s, level + 1)
                s.size = size
                if s.timed_out or s.stop:
                    return
        P[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        i -= 1


def search_max(PreparedGraph g, base, cand, int lower, time_limit=None):
    """Look for a clique larger than ``lower`` made of ``base`` plus vertices of ``cand``.

    Returns ``(best_size, clique_or_None, nodes, complete)``.
    """
    cdef State s
    cdef int nbase = len(base)
    cdef int levels = min(g.nv, g.maxdeg + 1) + 1
    cdef int i
    cdef bytes raw
    cdef const unsigned char* src
    if _alloc(&s, g, levels) != 0:
        _release(&s)
        raise MemoryError()
    try:
        for i in range(nbase):
            s.current[i] = base[i]
        s.size = nbase
        s.best = lower
        s.deadline = 0.0 if time_limit is None else _now() + float(time_limit)
        raw = int(cand).to_bytes(g.nw * 8, "little")
        src = raw
        memcpy(s.P, src, g.nw * 8)
        if not _empty(s.P, g.nw):
            with nogil:
                _expand_max(&s, 0)
        elif nbase > lower:
            s.best = nbase
            for i in range(nbase):
                s.best_clique[i] = s.current[i]
            s.found_better = 1
        clique = None
        if s.found_better:
            clique = tuple(s.best_clique[i] for i in range(s.best))
        return s.best, clique, s.nodes, not s.timed_out
    finally:
        _release(&s)


def enumerate_cliques(PreparedGraph g, int target, int limit=0, time_limit=None):
    """All cliques of exactly ``target`` vertices (stop after ``limit`` if nonzero)."""
    cdef State s
    cdef int levels = min(g.nv, g.maxdeg + 1) + 1
    cdef int i, j, w
    if target <= 0:
        return [()], 0, True
    if _alloc(&s, g, levels) != 0:
        _release(&s)
        raise MemoryError()
    try:
        s.size = 0
        s.target = target
        s.limit = limit
        s.deadline = 0.0 if time_limit is None else _now() + float(time_limit)
        for i in range(g.nv):
            s.P[i >> 6] |= (<uint64_t>1) << (i & 63)
        if g.nv > 0:
            with nogil:
                _expand_enum(&s, 0)
        if s.stop and (s.limit == 0 or s.nfound < s.limit):
            raise MemoryError()
        found = [
            tuple(s.found[<size_t>i * target + j] for j in range(target))
            for i in range(s.nfound)
        ]
        return found, s.nodes, not s.timed_out
    finally:
        _release(&s)


def row(PreparedGraph g, int v):
    return int.from_bytes((<char*>&g.adj[<size_t>v * g.nw])[:g.nw * 8], "little")


def degeneracy_order(PreparedGraph g):
    """Peel a minimum-degree vertex at a time, ties to the smallest label."""
    cdef int nv = g.nv, nw = g.nw
    cdef int* deg = <int*> malloc((nv + 1) * sizeof(int))
    cdef char* removed = <char*> calloc(nv + 1, 1)
    cdef int* order = <int*> malloc((nv + 1) * sizeof(int))
    cdef int step, v, u, w, best, bestdeg
    cdef uint64_t bits
    cdef const uint64_t* r
    if deg == NULL or removed == NULL or order == NULL:
        free(deg); free(removed); free(order)
        raise MemoryError()
    try:
        with nogil:
            for v in range(nv):
                deg[v] = 0
                r = &g.adj[<size_t>v * nw]
                for w in range(nw):
                    deg[v] += __builtin_popcountll(r[w])
            for step in range(nv):
                best = -1
                bestdeg = 0
                for v in range(nv):
                    if not removed[v] and (best < 0 or deg[v] < bestdeg):
                        best = v
                        bestdeg = deg[v]
                removed[best] = 1
                order[step] = best
                r = &g.adj[<size_t>best * nw]
                for w in range(nw):
                    bits = r[w]
                    while bits:
                        u = w * 64 + _ctz(bits)
                        bits &= bits - 1
                        if not removed[u]:
                            deg[u] -= 1
        return [order[i] for i in range(nv)]
    finally:
        free(deg)
        free(removed)
        free(order)


def relabel(PreparedGraph g, order):
    """Graph with vertex ``order[i]`` renamed ``i``."""
    cdef int nv = g.nv, nw = g.nw
    cdef PreparedGraph h = PreparedGraph()
    cdef int* new_of = <int*> malloc((nv + 1) * sizeof(int))
    cdef int* old = <int*> malloc((nv + 1) * sizeof(int))
    cdef int i, v, u, w
    cdef uint64_t bits
    cdef const uint64_t* r
    cdef uint64_t* dst
    if new_of == NULL or old == NULL:
        free(new_of); free(old)
        raise MemoryError()
    h.nv = nv
    h.nw = nw
    h.maxdeg = g.maxdeg
    h.adj = <uint64_t*> calloc(<size_t>nv * nw + 1, sizeof(uint64_t))
    if h.adj == NULL:
        free(new_of); free(old)
        raise MemoryError()
    try:
        for i in range(nv):
            old[i] = order[i]
            new_of[old[i]] = i
        with nogil:
            for i in range(nv):
                r = &g.adj[<size_t>old[i] * nw]
                dst = &h.adj[<size_t>i * nw]
                for w in range(nw):
                    bits = r[w]
                    while bits:
                        u = new_of[w * 64 + _ctz(bits)]
                        bits &= bits - 1
                        dst[u >> 6] |= (<uint64_t>1) << (u & 63)
        return h
    finally:
        free(new_of)
        free(old)

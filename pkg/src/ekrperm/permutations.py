"""Permutations held as sets of canonical cycles, and enumeration of S_{n,k}.

Elements are labelled 1..n. A permutation carries its ground set explicitly,
so removing cycles leaves the surviving labels untouched.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Cycle",
    "CyclePermutation",
    "canonicalize",
    "from_one_line",
    "parse_cycles",
    "enumerate_snk",
    "snk",
    "snk_index",
    "remove_cycles",
]


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle stored min-first.

    Equality is equality of the rotated sequence, so ``(2 4 3)`` and
    ``(2 3 4)`` are different cycles on the same support.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = self.elements
        if not elems:
            raise ValueError("a cycle needs at least one element")
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in cycle {elems}")
        if elems[0] != min(elems):
            raise ValueError(f"cycle {elems} is not in canonical rotation; use canonicalize()")

    @classmethod
    def of(cls, *elements: int) -> "Cycle":
        return canonicalize(elements)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def first(self) -> int:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.elements)) + ")"

    def __repr__(self) -> str:
        return f"Cycle{self.elements}"


def canonicalize(raw: Sequence[int]) -> Cycle:
    """Rotate ``raw`` so that its smallest element comes first."""
    seq = tuple(int(x) for x in raw)
    if not seq:
        raise ValueError("cannot canonicalize an empty cycle")
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated element in cycle {seq}")
    i = seq.index(min(seq))
    return Cycle(seq[i:] + seq[:i])


@dataclass(frozen=True)
class CyclePermutation:
    """A permutation of ``ground`` given by its disjoint cycles.

    ``cycles`` is sorted by first (= minimum) element and covers ``ground``
    exactly; fixed points appear as 1-cycles.
    """

    ground: tuple[int, ...]
    cycles: tuple[Cycle, ...]

    def __post_init__(self) -> None:
        seen: list[int] = []
        for c in self.cycles:
            seen.extend(c.elements)
        if len(seen) != len(set(seen)):
            raise ValueError(f"cycles are not disjoint: {self.cycles}")
        if sorted(seen) != list(self.ground):
            raise ValueError(f"cycles do not cover the ground set {self.ground}")
        if any(a.first >= b.first for a, b in zip(self.cycles, self.cycles[1:])):
            raise ValueError("cycles must be sorted by their first element")

    @classmethod
    def from_cycles(cls, cycles: Iterable[Cycle | Sequence[int]], ground: Iterable[int] | None = None) -> "CyclePermutation":
        cs = sorted(c if isinstance(c, Cycle) else canonicalize(c) for c in cycles)
        if ground is None:
            ground = (x for c in cs for x in c.elements)
        return cls(tuple(sorted(ground)), tuple(cs))

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def k(self) -> int:
        return len(self.cycles)

    @cached_property
    def cycle_set(self) -> frozenset[Cycle]:
        return frozenset(self.cycles)

    def mapping(self) -> dict[int, int]:
        image: dict[int, int] = {}
        for c in self.cycles:
            e = c.elements
            for i, x in enumerate(e):
                image[x] = e[(i + 1) % len(e)]
        return image

    def to_one_line(self) -> tuple[int, ...]:
        """Images of the ground elements in increasing order."""
        image = self.mapping()
        return tuple(image[x] for x in self.ground)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(c.first for c in self.cycles if len(c) == 1)

    def __str__(self) -> str:
        return "".join(map(str, self.cycles))

    def __repr__(self) -> str:
        return f"CyclePermutation({str(self)!r})"


def from_one_line(image: Sequence[int]) -> CyclePermutation:
    """Decompose ``image`` (``image[i-1]`` is the image of ``i``) into cycles."""
    n = len(image)
    if sorted(image) != list(range(1, n + 1)):
        raise ValueError(f"{list(image)} is not a bijection on 1..{n}")
    return _from_successors([0] + [int(x) for x in image], range(1, n + 1))


def _from_successors(succ: Sequence[int], ground: Iterable[int]) -> CyclePermutation:
    # walking from each unvisited element in increasing order yields
    # min-first cycles already sorted by minimum
    ground = tuple(ground)
    seen = set()
    cycles = []
    for start in ground:
        if start in seen:
            continue
        elems = [start]
        seen.add(start)
        x = succ[start]
        while x != start:
            elems.append(x)
            seen.add(x)
            x = succ[x]
        cycles.append(Cycle(tuple(elems)))
    return CyclePermutation(ground, tuple(cycles))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> CyclePermutation:
    """Parse ``"(1 3 4)(2)(5 6)"``; every element, fixed points included, must appear.

    With ``n`` given, the ground set must be exactly 1..n.
    """
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        parts = body.replace(",", " ").split()
        if not parts:
            raise ValueError(f"empty cycle in {text!r}")
        cycles.append(canonicalize([int(p) for p in parts]))
    pi = CyclePermutation.from_cycles(cycles)
    if n is not None and pi.ground != tuple(range(1, n + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{n}")
    return pi


def enumerate_snk(n: int, k: int, ground: Sequence[int] | None = None) -> Iterator[CyclePermutation]:
    """Yield every permutation of ``ground`` (default 1..n) with exactly k cycles.

    Elements are placed in increasing order: each new element either opens a
    fixed point or is inserted right after one of the elements already
    placed. This is the combinatorial form of ``[n k] = [n-1 k-1] +
    (n-1)[n-1 k]``, so every permutation appears exactly once, in a fixed
    order.
    """
    if ground is None:
        ground = tuple(range(1, n + 1))
    else:
        ground = tuple(sorted(ground))
        if len(ground) != n:
            raise ValueError(f"ground set has {len(ground)} elements, expected {n}")
    if k < 0 or k > n or (k == 0 and n > 0):
        raise ValueError(f"S_({n},{k}) is not enumerable: need 1 <= k <= n")
    if n == 0:
        yield CyclePermutation((), ())
        return

    top = max(ground)
    succ = [0] * (top + 1)

    def place(i: int, cycles: int) -> Iterator[CyclePermutation]:
        if i == n:
            yield _from_successors(succ, ground)
            return
        x = ground[i]
        remaining = n - i - 1
        if cycles < k:
            succ[x] = x
            yield from place(i + 1, cycles + 1)
        if i > 0 and cycles + remaining >= k:
            for j in range(i):
                y = ground[j]
                after = succ[y]
                succ[y] = x
                succ[x] = after
                yield from place(i + 1, cycles)
                succ[y] = after

    yield from place(0, 0)


@lru_cache(maxsize=64)
def snk(n: int, k: int, ground: tuple[int, ...] | None = None) -> tuple[CyclePermutation, ...]:
    """Materialized, indexable enumeration (cached)."""
    return tuple(enumerate_snk(n, k, ground))


@lru_cache(maxsize=64)
def snk_index(n: int, k: int, ground: tuple[int, ...] | None = None) -> dict[CyclePermutation, int]:
    return {pi: i for i, pi in enumerate(snk(n, k, ground))}


def remove_cycles(pi: CyclePermutation, cycles: Iterable[Cycle]) -> CyclePermutation:
    """Drop ``cycles`` from ``pi``; the remaining elements keep their labels."""
    drop = frozenset(cycles)
    if not drop <= pi.cycle_set:
        missing = sorted(drop - pi.cycle_set)
        raise ValueError(f"cycles {[str(c) for c in missing]} are not cycles of {pi}")
    if not drop:
        return pi
    removed = {x for c in drop for x in c.elements}
    ground = tuple(x for x in pi.ground if x not in removed)
    return CyclePermutation(ground, tuple(c for c in pi.cycles if c not in drop))

"""Families of permutations with a fixed number of cycles.

Intersection, independence, the greedy cover bound, and the restriction and
star operators used to pin down stabilizer families.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .permutations import (
    Cycle,
    CyclePermutation,
    canonicalize,
    enumerate_snk,
    remove_cycles,
    snk_index,
)
from .stirling import stirling_recurrence

__all__ = [
    "Family",
    "CycleSet",
    "CoverBoundReport",
    "common_cycles",
    "is_t_intersecting",
    "is_independent",
    "greedy_maximal_independent",
    "cover_bound_check",
    "stabilizer_family",
    "restrict",
    "star",
    "is_stabilizer_of_t_fixed_points",
]


class Family:
    """An ordered, duplicate-free collection of permutations sharing ground set and k.

    Member order is kept as given (the enumeration order when the family comes
    from :func:`~ekrperm.permutations.enumerate_snk`); it drives every
    order-dependent choice such as the greedy independent subfamily. Equality
    ignores order.
    """

    __slots__ = ("ground", "k", "members", "_set")

    def __init__(
        self,
        members: Iterable[CyclePermutation],
        ground: Sequence[int] | None = None,
        k: int | None = None,
    ) -> None:
        ordered: list[CyclePermutation] = []
        seen: set[CyclePermutation] = set()
        for pi in members:
            if pi not in seen:
                seen.add(pi)
                ordered.append(pi)
        if ordered:
            first = ordered[0]
            ground = first.ground if ground is None else tuple(sorted(ground))
            k = first.k if k is None else k
            for pi in ordered:
                if pi.ground != ground:
                    raise ValueError(f"{pi} is not a permutation of {ground}")
                if pi.k != k:
                    raise ValueError(f"{pi} has {pi.k} cycles, family has k={k}")
        elif ground is None or k is None:
            raise ValueError("an empty family needs an explicit ground set and k")
        self.ground: tuple[int, ...] = tuple(sorted(ground))
        self.k: int = k
        self.members: tuple[CyclePermutation, ...] = tuple(ordered)
        self._set = frozenset(ordered)

    @classmethod
    def full(cls, n: int, k: int, ground: Sequence[int] | None = None) -> "Family":
        g = tuple(range(1, n + 1)) if ground is None else tuple(sorted(ground))
        return cls(enumerate_snk(n, k, g), ground=g, k=k)

    @property
    def ground_n(self) -> int:
        return len(self.ground)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[CyclePermutation]:
        return iter(self.members)

    def __contains__(self, pi: object) -> bool:
        return pi in self._set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.ground == other.ground and self.k == other.k and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.ground, self.k, self._set))

    def __repr__(self) -> str:
        return f"Family(n={self.ground_n}, k={self.k}, size={len(self)})"

    def subfamily(self, members: Iterable[CyclePermutation]) -> "Family":
        return Family(members, ground=self.ground, k=self.k)

    def indices(self) -> tuple[int, ...]:
        """Positions of the members in the enumeration of S_{n,k} over this ground set."""
        index = snk_index(self.ground_n, self.k, self.ground)
        return tuple(index[pi] for pi in self.members)

    def to_strings(self) -> list[str]:
        return [str(pi) for pi in self.members]


class CycleSet:
    """Cycles with pairwise disjoint supports (a candidate common part T)."""

    __slots__ = ("cycles", "support")

    def __init__(self, cycles: Iterable[Cycle | Sequence[int]] = ()) -> None:
        cs = sorted({c if isinstance(c, Cycle) else canonicalize(c) for c in cycles})
        support: set[int] = set()
        for c in cs:
            if support & c.support:
                raise ValueError(f"cycle {c} overlaps the other cycles of {[str(x) for x in cs]}")
            support |= c.support
        self.cycles: frozenset[Cycle] = frozenset(cs)
        self.support: frozenset[int] = frozenset(support)

    @classmethod
    def fixed_points(cls, points: Iterable[int]) -> "CycleSet":
        return cls(Cycle((p,)) for p in points)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[Cycle]:
        return iter(sorted(self.cycles))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleSet):
            return NotImplemented
        return self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash(self.cycles)

    def __str__(self) -> str:
        return "".join(str(c) for c in self)

    def __repr__(self) -> str:
        return f"CycleSet({str(self)!r})"


def _as_cycleset(T: CycleSet | Iterable[Cycle]) -> CycleSet:
    return T if isinstance(T, CycleSet) else CycleSet(T)


def common_cycles(pi1: CyclePermutation, pi2: CyclePermutation) -> int:
    if pi1.ground != pi2.ground:
        raise ValueError(f"{pi1} and {pi2} live on different ground sets")
    return len(pi1.cycle_set & pi2.cycle_set)


def is_t_intersecting(fam: Family, t: int) -> bool:
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if len(fam) and fam.k < t:
        return False
    sets = [pi.cycle_set for pi in fam]
    return all(len(a & b) >= t for a, b in combinations(sets, 2))


def is_independent(fam: Family) -> bool:
    sets = [pi.cycle_set for pi in fam]
    return all(a.isdisjoint(b) for a, b in combinations(sets, 2))


def greedy_maximal_independent(fam: Family) -> Family:
    """First-fit independent subfamily in member order; maximal by construction."""
    if not len(fam):
        raise ValueError("greedy_maximal_independent needs a nonempty family")
    used: set[Cycle] = set()
    chosen = []
    for pi in fam:
        if used.isdisjoint(pi.cycle_set):
            chosen.append(pi)
            used |= pi.cycle_set
    return fam.subfamily(chosen)


@dataclass(frozen=True)
class CoverBoundReport:
    size: int
    bound_rhs: int
    l: int
    holds: bool

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        return {"size": self.size, "bound_rhs": str(self.bound_rhs), "l": self.l, "holds": self.holds}


def cover_bound_check(fam: Family) -> CoverBoundReport:
    """Compare ``|fam|`` with ``k * l * [n-1, k-1]``, l from the greedy independent subfamily."""
    if fam.k < 2:
        raise ValueError(f"the cover bound needs k >= 2, got k={fam.k}")
    l = len(greedy_maximal_independent(fam))
    rhs = fam.k * l * stirling_recurrence(fam.ground_n - 1, fam.k - 1)
    return CoverBoundReport(size=len(fam), bound_rhs=rhs, l=l, holds=len(fam) <= rhs)


def stabilizer_family(n: int, k: int, T: CycleSet | Iterable[Cycle]) -> Family:
    """All of S_{n,k} whose cycle set contains T, built from S over [n] minus supp(T)."""
    T = _as_cycleset(T)
    ground = tuple(range(1, n + 1))
    if not T.support <= set(ground):
        raise ValueError(f"T={T} is not supported inside 1..{n}")
    rest_k = k - len(T)
    rest = tuple(x for x in ground if x not in T.support)
    if rest_k < 0:
        raise ValueError(f"|T|={len(T)} exceeds k={k}")
    if rest_k > len(rest):
        raise ValueError(f"k-|T|={rest_k} exceeds n-|P|={len(rest)}")
    if rest_k == 0 and rest:
        return Family((), ground=ground, k=k)
    fixed = tuple(T)
    members = (
        CyclePermutation(ground, tuple(sorted(fixed + sigma.cycles)))
        for sigma in enumerate_snk(len(rest), rest_k, rest)
    )
    return Family(members, ground=ground, k=k)


def restrict(fam: Family, T: CycleSet | Iterable[Cycle]) -> Family:
    cycles = _as_cycleset(T).cycles
    return fam.subfamily(pi for pi in fam if cycles <= pi.cycle_set)


def star(fam: Family, T: CycleSet | Iterable[Cycle]) -> Family:
    """Restrict to members containing T, then delete T's cycles from each."""
    T = _as_cycleset(T)
    ground = tuple(x for x in fam.ground if x not in T.support)
    k = fam.k - len(T)
    return Family(
        (remove_cycles(pi, T.cycles) for pi in restrict(fam, T)),
        ground=ground,
        k=k,
    )


def is_stabilizer_of_t_fixed_points(fam: Family, t: int) -> frozenset[int] | None:
    """Return points ``p_1..p_t`` with ``fam`` equal to their stabilizer, else None."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if not len(fam) or fam.k < t:
        return None
    n = fam.ground_n
    if fam.ground != tuple(range(1, n + 1)):
        return None
    if len(fam) != stirling_recurrence(n - t, fam.k - t):
        return None
    common = frozenset.intersection(*(pi.cycle_set for pi in fam))
    fixed = sorted(c.first for c in common if len(c) == 1)
    for points in combinations(fixed, t):
        if stabilizer_family(n, fam.k, CycleSet.fixed_points(points)) == fam:
            return frozenset(points)
    return None

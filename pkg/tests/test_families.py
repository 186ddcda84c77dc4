import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ekrperm.families import (
    CycleSet,
    Family,
    common_cycles,
    cover_bound_check,
    greedy_maximal_independent,
    is_independent,
    is_stabilizer_of_t_fixed_points,
    is_t_intersecting,
    restrict,
    stabilizer_family,
    star,
)
from ekrperm.permutations import parse_cycles, snk
from ekrperm.reports import family_from_json, family_to_json
from ekrperm.stirling import stirling_recurrence
from oracles import brute_snk


def fam(*texts):
    return Family(parse_cycles(s) for s in texts)


PAIRWISE_DISJOINT = ("(1)(2 3)", "(2)(1 3)", "(3)(1 2)")


def test_family_validation():
    with pytest.raises(ValueError):
        fam("(1)(2 3)", "(1 2 3)")
    with pytest.raises(ValueError):
        Family([parse_cycles("(1)(2 3)"), parse_cycles("(1)(2 3 4)")])
    with pytest.raises(ValueError):
        Family([])
    f = fam("(1)(2 3)", "(2 3)(1)")
    assert len(f) == 1


def test_cycleset_rejects_overlap():
    with pytest.raises(ValueError):
        CycleSet([(1, 2), (2, 3)])
    T = CycleSet([(2, 1), (3,)])
    assert T.support == {1, 2, 3} and len(T) == 2


class TestCommonCycles:
    def test_examples(self):
        pi = parse_cycles("(1)(2)(3 4 5)")
        assert common_cycles(pi, pi) == 3
        assert common_cycles(pi, parse_cycles("(1)(2)(3 5 4)")) == 2
        assert common_cycles(parse_cycles("(1 2)(3)(4)"), parse_cycles("(3)(4)(1 2)")) == 3

    def test_ground_mismatch(self):
        with pytest.raises(ValueError):
            common_cycles(parse_cycles("(1)(2)"), parse_cycles("(1)(2)(3)"))

    def test_symmetric(self):
        row = snk(5, 3)
        for a, b in combinations(row[:20], 2):
            assert common_cycles(a, b) == common_cycles(b, a)


class TestIntersecting:
    def test_examples(self):
        assert is_t_intersecting(fam("(1)(2 3)"), 2)
        assert not is_t_intersecting(fam("(1)(2 3)"), 3)
        assert not is_t_intersecting(fam(*PAIRWISE_DISJOINT), 1)
        for n, k, t in [(5, 3, 1), (6, 3, 2), (6, 4, 3)]:
            assert is_t_intersecting(stabilizer_family(n, k, CycleSet.fixed_points(range(1, t + 1))), t)

    def test_rejects_t0(self):
        with pytest.raises(ValueError):
            is_t_intersecting(fam("(1)(2 3)"), 0)

    def test_monotone_under_subfamily(self):
        f = stabilizer_family(6, 3, CycleSet([(1,)]))
        rng = random.Random(3)
        for _ in range(30):
            sub = f.subfamily(m for m in f if rng.random() < 0.5)
            if len(sub):
                assert is_t_intersecting(sub, 1)


class TestIndependent:
    def test_examples(self):
        assert is_independent(fam("(1)(2 3)"))
        assert is_independent(fam(*PAIRWISE_DISJOINT))
        assert not is_independent(fam("(1)(2 3 4)", "(1)(2 4 3)"))

    def test_greedy_examples(self):
        f = fam(*PAIRWISE_DISJOINT)
        assert greedy_maximal_independent(f) == f
        shared = fam("(1)(2 3 4)", "(1)(2 4 3)")
        assert greedy_maximal_independent(shared).members == shared.members[:1]
        stab = stabilizer_family(6, 3, CycleSet.fixed_points([1, 2]))
        assert len(greedy_maximal_independent(stab)) == 1

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_greedy_is_independent_and_maximal(self, data):
        n, k = data.draw(st.sampled_from([(5, 2), (5, 3), (6, 3), (6, 4)]))
        row = snk(n, k)
        picks = data.draw(st.sets(st.integers(0, len(row) - 1), min_size=1, max_size=60))
        f = Family((row[i] for i in sorted(picks)), ground=row[0].ground, k=k)
        g = greedy_maximal_independent(f)
        assert is_independent(g)
        chosen = set(g.members)
        for pi in f:
            if pi not in chosen:
                assert any(common_cycles(pi, q) for q in g)


class TestCoverBound:
    def test_full_s42(self):
        f = Family.full(4, 2)
        assert len(f) == 11
        rep = cover_bound_check(f)
        l = len(greedy_maximal_independent(f))
        assert rep.l == l and rep.bound_rhs == 2 * l * 2 and rep.holds

    def test_singleton(self):
        rep = cover_bound_check(fam("(1)(2 3 4)"))
        assert (rep.size, rep.bound_rhs, rep.holds) == (1, 4, True)
        assert rep.as_dict() == {"size": 1, "bound_rhs": "4", "l": 1, "holds": True}

    def test_rejects_k1(self):
        with pytest.raises(ValueError):
            cover_bound_check(fam("(1 2 3)"))

    def test_random_s63(self):
        row = snk(6, 3)
        rng = random.Random(11)
        for _ in range(200):
            f = Family((pi for pi in row if rng.random() < rng.random()), ground=row[0].ground, k=3)
            if len(f):
                assert cover_bound_check(f).holds


class TestStabilizer:
    def test_examples(self):
        assert len(stabilizer_family(5, 3, CycleSet.fixed_points([1, 2]))) == 2
        f = stabilizer_family(4, 2, CycleSet([(1, 2)]))
        assert [str(p) for p in f] == ["(1 2)(3 4)"]

    def test_matches_brute_force_filter(self):
        for n, k, T in [(5, 3, [(1,), (2,)]), (6, 3, [(1, 3)]), (6, 4, [(2,), (1, 4, 5)]), (5, 2, [(1, 2, 3)])]:
            Ts = frozenset(tuple(c) for c in T)
            expected = {cs for cs in brute_snk(n, k) if Ts <= cs}
            got = {frozenset(c.elements for c in pi.cycles) for pi in stabilizer_family(n, k, CycleSet(T))}
            assert got == expected

    def test_size_law(self):
        for n in range(2, 8):
            for k in range(1, n + 1):
                for t in range(1, k + 1):
                    f = stabilizer_family(n, k, CycleSet.fixed_points(range(1, t + 1)))
                    assert len(f) == stirling_recurrence(n - t, k - t)

    @pytest.mark.parametrize(
        "n,k,T",
        [(4, 2, [(5,)]), (4, 1, [(1,), (2,)]), (4, 3, [(1, 2, 3)])],
    )
    def test_rejects(self, n, k, T):
        with pytest.raises(ValueError):
            stabilizer_family(n, k, CycleSet(T))

    def test_degenerate_rest(self):
        assert len(stabilizer_family(3, 1, CycleSet([(1,)]))) == 0
        assert [str(p) for p in stabilizer_family(3, 2, CycleSet([(1,), (2, 3)]))] == ["(1)(2 3)"]


class TestRestrictStar:
    def test_restrict_examples(self):
        f = Family.full(4, 2)
        assert restrict(f, CycleSet()) == f
        got = restrict(f, CycleSet([(1,)]))
        assert {str(p) for p in got} == {"(1)(2 3 4)", "(1)(2 4 3)"}
        T = CycleSet([(1,), (3,)])
        stab = stabilizer_family(6, 4, T)
        assert restrict(stab, T) == stab

    def test_star_examples(self):
        T = CycleSet([(1,), (2, 3)])
        stab = stabilizer_family(7, 4, T)
        s = star(stab, T)
        assert s == Family.full(4, 2, ground=(4, 5, 6, 7))
        assert star(fam("(1)(2 3 4)"), CycleSet([(2,)])).members == ()

    def test_star_size_matches_restrict(self):
        f = Family.full(6, 3)
        for T in ([(1,)], [(1, 2)], [(1,), (2,)], [(3, 5, 4)], [(1, 6), (2,)]):
            T = CycleSet(T)
            assert len(star(f, T)) == len(restrict(f, T))


class TestIsStabilizer:
    def test_examples(self):
        assert is_stabilizer_of_t_fixed_points(stabilizer_family(6, 3, CycleSet.fixed_points([1, 2])), 2) == {1, 2}
        assert is_stabilizer_of_t_fixed_points(stabilizer_family(6, 3, CycleSet([(1, 2)])), 1) is None
        small = stabilizer_family(6, 3, CycleSet.fixed_points([1, 2]))
        assert is_stabilizer_of_t_fixed_points(small.subfamily(small.members[:-1]), 2) is None

    def test_superset_of_fixed_points(self):
        # a single identity-like member: many common fixed points, one of them works
        f = Family.full(3, 3)
        assert is_stabilizer_of_t_fixed_points(f, 2) == {1, 2}

    def test_right_size_but_not_a_stabilizer(self):
        # pairwise intersecting, size [3, 2] = 3, yet no common fixed point
        tri = fam("(1)(2)(3 4)", "(1)(3)(2 4)", "(2)(3)(1 4)")
        assert is_t_intersecting(tri, 1)
        assert len(tri) == stirling_recurrence(3, 2)
        assert is_stabilizer_of_t_fixed_points(tri, 1) is None


def test_family_json_round_trip():
    f = stabilizer_family(5, 3, CycleSet.fixed_points([2]))
    text = family_to_json(f)
    assert text.startswith('["(1')
    back = family_from_json(text, n=5)
    assert back == f and back.members == f.members


def test_family_indices():
    f = Family.full(5, 2)
    assert f.indices() == tuple(range(50))

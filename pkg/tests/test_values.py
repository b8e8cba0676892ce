"""Universe construction, consistency, and the conflict-set algebra."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from valuetrust import UniverseError, ValueUniverse, conflict_set, is_consistent, opposing_set

NAMES = [f"v{i}" for i in range(5)]


@st.composite
def universes(draw) -> ValueUniverse:
    n = draw(st.integers(min_value=1, max_value=5))
    names = NAMES[:n]
    pairs = list(combinations(names, 2))
    chosen = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    return ValueUniverse(names, chosen)


@st.composite
def universe_and_subsets(draw, k: int = 2):
    universe = draw(universes())
    members = sorted(universe.values)
    subsets = tuple(draw(st.frozensets(st.sampled_from(members))) for _ in range(k))
    return (universe, *subsets)


class TestValueUniverse:
    def test_pairs_are_normalized_and_unordered(self):
        u = ValueUniverse(["b", "a"], [("b", "a")])
        assert u.values == frozenset({"a", "b"})
        assert u.oppositions == frozenset({("a", "b")})

    def test_opponents_see_both_directions(self, pair_universe):
        assert pair_universe.opponents("a") == {"b"}
        assert pair_universe.opponents("b") == {"a"}

    def test_value_may_oppose_several_values(self, star_universe):
        assert star_universe.opponents("a") == {"b", "c"}
        assert star_universe.opponents("d") == frozenset()

    def test_self_opposition_rejected(self):
        with pytest.raises(UniverseError):
            ValueUniverse(["a"], [("a", "a")])

    def test_pair_with_unknown_value_rejected(self):
        with pytest.raises(UniverseError):
            ValueUniverse(["a"], [("a", "b")])

    @pytest.mark.parametrize("bad", ["", "a b", " a", None, 3])
    def test_malformed_value_names_rejected(self, bad):
        with pytest.raises(UniverseError):
            ValueUniverse([bad])

    def test_subset_normalizes_and_checks_membership(self):
        u = ValueUniverse(["a", "b"])
        assert u.subset(["a", "a"]) == frozenset({"a"})
        with pytest.raises(UniverseError):
            u.subset(["a", "z"])

    def test_container_protocol(self):
        u = ValueUniverse(["b", "a", "c"])
        assert "a" in u
        assert "z" not in u
        assert len(u) == 3
        assert list(u) == ["a", "b", "c"]

    def test_equality_ignores_declaration_order(self):
        left = ValueUniverse(["a", "b"], [("a", "b")])
        right = ValueUniverse(["b", "a"], [("b", "a")])
        assert left == right
        assert hash(left) == hash(right)
        assert left != ValueUniverse(["a", "b"])


class TestOpposingSet:
    def test_multiple_opponents(self, star_universe):
        assert opposing_set(star_universe, "a") == {"b", "c"}

    def test_empty_relation(self):
        assert opposing_set(ValueUniverse(["a", "b"]), "a") == frozenset()

    def test_symmetric_lookup(self, pair_universe):
        assert opposing_set(pair_universe, "b") == {"a"}

    def test_unknown_value_rejected(self):
        with pytest.raises(UniverseError):
            opposing_set(ValueUniverse(["a"]), "z")

    @given(universes())
    def test_never_contains_its_own_value(self, universe):
        for value in universe:
            assert value not in opposing_set(universe, value)


class TestIsConsistent:
    def test_opposing_pair_is_inconsistent(self, pair_universe):
        assert not is_consistent(pair_universe, {"a", "b"})

    def test_empty_set_is_consistent(self, pair_universe):
        assert is_consistent(pair_universe, frozenset())

    def test_pair_buried_in_a_larger_set(self):
        u = ValueUniverse(list("acd"), [("c", "d")])
        assert not is_consistent(u, {"a", "c", "d"})

    def test_unknown_member_rejected(self, pair_universe):
        with pytest.raises(UniverseError):
            is_consistent(pair_universe, {"z"})

    @given(universe_and_subsets())
    def test_subsets_of_consistent_sets_stay_consistent(self, drawn):
        universe, big, small = drawn
        if is_consistent(universe, big):
            assert is_consistent(universe, big & small)


class TestConflictSet:
    def test_directional_result(self, star_universe):
        # a opposes b and c, so {a} against {b, c, d} conflicts at a only
        assert conflict_set(star_universe, {"a"}, {"b", "c", "d"}) == {"a"}

    def test_reversed_arguments_give_the_other_side(self, star_universe):
        assert conflict_set(star_universe, {"b", "c", "d"}, {"a"}) == {"b", "c"}

    def test_consistent_set_has_no_self_conflict(self, running_universe):
        assert conflict_set(running_universe, {"a", "b", "c"}, {"a", "b", "c"}) == frozenset()

    def test_unknown_member_rejected(self, pair_universe):
        with pytest.raises(UniverseError):
            conflict_set(pair_universe, {"z"}, {"a"})

    @given(universe_and_subsets())
    def test_result_is_a_subset_of_the_first_argument(self, drawn):
        universe, first, second = drawn
        assert conflict_set(universe, first, second) <= first

    @given(universe_and_subsets(k=3))
    def test_distributes_over_intersection_and_union(self, drawn):
        universe, v, w, u = drawn
        left = conflict_set(universe, v, u)
        right = conflict_set(universe, w, u)
        assert conflict_set(universe, v & w, u) == left & right
        assert conflict_set(universe, v | w, u) == left | right


class TestAlgebraCounterexamples:
    """The three witnesses that pin down what the algebra does NOT satisfy.

    All three live on the two-value universe with V = {a}, W = {b}, U = {a}.
    """

    V, W, U = frozenset("a"), frozenset("b"), frozenset("a")

    def test_union_does_not_distribute_over_conflict(self, pair_universe):
        u = pair_universe
        left = conflict_set(u, self.V, self.U) | self.W
        right = conflict_set(u, self.V | self.W, self.U | self.W)
        assert left == {"b"}
        assert right == {"a", "b"}
        assert left != right

    def test_intersection_does_not_distribute_over_conflict(self, pair_universe):
        u = pair_universe
        left = conflict_set(u, self.V, self.W) & self.U
        right = conflict_set(u, self.V & self.U, self.W & self.U)
        assert left == {"a"}
        assert right == frozenset()
        assert left != right

    def test_conflict_is_not_associative(self, pair_universe):
        u = pair_universe
        left = conflict_set(u, conflict_set(u, self.V, self.W), self.U)
        right = conflict_set(u, self.V, conflict_set(u, self.W, self.U))
        assert left == frozenset()
        assert right == {"a"}
        assert left != right


class TestMultiOpponentConflictBehavior:
    """Conflict-set consistency laws that hold for single-opponent relations
    break once a value has two opponents; these witnesses pin the behavior.
    """

    def test_consistent_right_side_does_not_protect_the_conflict_set(self):
        u = ValueUniverse(list("abcd"), [("a", "b"), ("a", "c"), ("b", "d")])
        v, w = frozenset("ab"), frozenset("cd")
        assert is_consistent(u, w)
        conflicts = conflict_set(u, v, w)
        # each member of v finds a different opponent inside w
        assert conflicts == {"a", "b"}
        assert not is_consistent(u, conflicts)

    def test_inconsistent_conflict_set_without_a_shared_opposing_pair(self, star_universe):
        v, w = frozenset("ab"), frozenset("ac")
        conflicts = conflict_set(star_universe, v, w)
        assert conflicts == {"a", "b"}
        assert not is_consistent(star_universe, conflicts)
        shared = [p for p in star_universe.oppositions if set(p) <= v and set(p) <= w]
        assert shared == []

    def test_consistent_left_side_always_protects_the_conflict_set(self):
        u = ValueUniverse(list("abcd"), [("a", "b"), ("a", "c"), ("b", "d")])
        v = frozenset("cd")  # consistent
        conflicts = conflict_set(u, v, frozenset("ab"))
        assert conflicts <= v
        assert is_consistent(u, conflicts)

"""Value vocabulary, opposition relation, and conflict-set algebra.

A universe is a finite set of named values together with a symmetric,
irreflexive opposition relation. Value sets are plain ``frozenset[str]``
drawn from a universe; the three module functions implement the algebra
used by every trust assessment: the opposing set of a single value,
consistency of a value set, and the directional conflict set between two
value sets.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UniverseError

__all__ = ["ValueUniverse", "opposing_set", "is_consistent", "conflict_set"]


def _checked_name(name: object, kind: str) -> str:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
        raise UniverseError(f"{kind} must be a nonempty string without whitespace, got {name!r}")
    return name


class ValueUniverse:
    """A finite value vocabulary with a symmetric, irreflexive opposition relation.

    Opposition pairs are unordered: declaring ``("a", "b")`` makes each value an
    opponent of the other. A value never opposes itself, and every name in a
    pair must belong to the universe. Instances are immutable and compare by
    (values, oppositions).
    """

    __slots__ = ("_values", "_pairs", "_opponents")

    def __init__(self, values: Iterable[str], oppositions: Iterable[tuple[str, str]] = ()):
        vals = frozenset(_checked_name(v, "value name") for v in values)
        opponents: dict[str, set[str]] = {v: set() for v in vals}
        pairs: set[tuple[str, str]] = set()
        for left, right in oppositions:
            for name in (left, right):
                if name not in vals:
                    raise UniverseError(f"opposition references unknown value {name!r}")
            if left == right:
                raise UniverseError(f"value {left!r} cannot oppose itself")
            pairs.add((min(left, right), max(left, right)))
            opponents[left].add(right)
            opponents[right].add(left)
        self._values = vals
        self._pairs = frozenset(pairs)
        self._opponents = {v: frozenset(opp) for v, opp in opponents.items()}

    @property
    def values(self) -> frozenset[str]:
        return self._values

    @property
    def oppositions(self) -> frozenset[tuple[str, str]]:
        """The opposition relation as normalized (min, max) pairs."""
        return self._pairs

    def opponents(self, value: str) -> frozenset[str]:
        """All values declared to oppose ``value``."""
        try:
            return self._opponents[value]
        except KeyError:
            raise UniverseError(f"unknown value {value!r}") from None

    def subset(self, values: Iterable[str]) -> frozenset[str]:
        """Normalize an iterable of names into a value set, requiring membership."""
        members = frozenset(values)
        unknown = members - self._values
        if unknown:
            raise UniverseError(f"unknown values: {sorted(unknown)}")
        return members

    def __contains__(self, value: object) -> bool:
        return value in self._values

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValueUniverse):
            return NotImplemented
        return self._values == other._values and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash((self._values, self._pairs))

    def __repr__(self) -> str:
        return f"ValueUniverse(values={sorted(self._values)}, oppositions={sorted(self._pairs)})"


def opposing_set(universe: ValueUniverse, value: str) -> frozenset[str]:
    """The set of values opposing ``value``; empty when it opposes nothing."""
    return universe.opponents(value)


def is_consistent(universe: ValueUniverse, values: Iterable[str]) -> bool:
    """True iff no member of ``values`` has an opponent also in ``values``.

    The empty set and singletons are vacuously consistent (the relation is
    irreflexive).
    """
    members = universe.subset(values)
    return all(universe.opponents(v).isdisjoint(members) for v in members)


def conflict_set(universe: ValueUniverse, first: Iterable[str], second: Iterable[str]) -> frozenset[str]:
    """Members of ``first`` that oppose at least one member of ``second``.

    Directional: the result is a subset of ``first``, and swapping the
    arguments generally yields a different set.
    """
    left = universe.subset(first)
    right = universe.subset(second)
    return frozenset(v for v in left if not universe.opponents(v).isdisjoint(right))

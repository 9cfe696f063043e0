"""Finite posets on dense indices 0..n-1 with bit-packed order rows.

The order is stored as one integer bitmask per element (the full reflexive
relation), so comparability queries are O(1) word operations.  Distances are
measured in the comparability graph: an edge joins two distinct comparable
elements, and the distance across different order components is infinite.
Infinity is a symbolic :class:`Distance` value, never a numeric sentinel.

All objects are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Iterator, Sequence

from .errors import (
    AntisymmetryBroken,
    IndexOutOfRange,
    ReflexivityBroken,
    SizeLimitExceeded,
    TransitivityBroken,
)

#: Default cap on downset enumeration (the count can be exponential).
DOWNSET_LIMIT = 1 << 20


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@total_ordering
class Distance:
    """Length of a shortest comparability path, or infinity.

    Compares numerically; the infinite value is strictly greater than every
    finite one.  Plain ints are accepted on the other side of a comparison.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f"distance must be a natural number or None: {value!r}")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("Distance is immutable")

    @classmethod
    def finite(cls, k: int) -> "Distance":
        return cls(k)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @staticmethod
    def _coerce(other):
        if isinstance(other, Distance):
            return other
        if isinstance(other, int):
            return Distance(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.value is None or other.value is None:
            return INFINITE
        return Distance(self.value + other.value)

    __radd__ = __add__

    def __hash__(self):
        return hash(("Distance", self.value))

    def __repr__(self):
        return "Distance.INFINITE" if self.value is None else f"Distance({self.value})"


INFINITE = Distance(None)


class Poset:
    """An immutable finite partial order on indices ``0..n-1``.

    ``up_rows[i]`` is the bitmask of ``{j : i <= j}``.  The constructor
    validates reflexivity, antisymmetry and transitivity; use
    :meth:`from_pairs` to build from generating pairs (reflexive-transitive
    closure is taken, then antisymmetry is checked).
    """

    __slots__ = ("n", "_up", "_down", "_nbr", "_all")

    def __init__(self, up_rows: Sequence[int]):
        n = len(up_rows)
        up = list(up_rows)
        all_mask = (1 << n) - 1
        for i in range(n):
            if up[i] & ~all_mask:
                raise IndexOutOfRange(f"row {i} mentions indices >= {n}")
            if not (up[i] >> i) & 1:
                raise ReflexivityBroken(f"{i} not <= {i}", witness=(i, i))
        for i in range(n):
            for j in iter_bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise AntisymmetryBroken(
                        f"{i} <= {j} and {j} <= {i}", witness=(i, j)
                    )
                if up[j] & ~up[i]:
                    k = next(iter_bits(up[j] & ~up[i]))
                    raise TransitivityBroken(
                        f"{i} <= {j} <= {k} but not {i} <= {k}", witness=(i, j, k)
                    )
        down = [0] * n
        for i in range(n):
            for j in iter_bits(up[i]):
                down[j] |= 1 << i
        nbr = [(up[i] | down[i]) & ~(1 << i) for i in range(n)]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_down", tuple(down))
        object.__setattr__(self, "_nbr", tuple(nbr))
        object.__setattr__(self, "_all", all_mask)

    def __setattr__(self, name, val):
        raise AttributeError("Poset is immutable")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Build from order-generating pairs ``(a, b)`` meaning ``a <= b``."""
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexOutOfRange(f"pair ({a}, {b}) out of range for n={n}")
            up[a] |= 1 << b
        # Warshall closure on bit rows.
        for k in range(n):
            bit_k = 1 << k
            for i in range(n):
                if up[i] & bit_k:
                    up[i] |= up[k]
        return cls(up)

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls([1 << i for i in range(n)])

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    # -- raw mask access (used by the search modules) --------------------

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def down_mask(self, x: int) -> int:
        return self._down[x]

    @property
    def all_mask(self) -> int:
        return self._all

    def mask_of(self, xs: Iterable[int]) -> int:
        mask = 0
        for x in xs:
            if not 0 <= x < self.n:
                raise IndexOutOfRange(f"index {x} out of range for n={self.n}")
            mask |= 1 << x
        return mask

    @staticmethod
    def set_of(mask: int) -> frozenset[int]:
        return frozenset(iter_bits(mask))

    # -- order queries ----------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        return bool((self._up[x] >> y) & 1)

    def _check(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"index {x} out of range for n={self.n}")

    def down_closure(self, xs: Iterable[int]) -> frozenset[int]:
        """All elements below some member of ``xs``."""
        mask = 0
        for x in xs:
            self._check(x)
            mask |= self._down[x]
        return self.set_of(mask)

    def up_closure(self, xs: Iterable[int]) -> frozenset[int]:
        """All elements above some member of ``xs``."""
        mask = 0
        for x in xs:
            self._check(x)
            mask |= self._up[x]
        return self.set_of(mask)

    def is_decreasing(self, xs: Iterable[int]) -> bool:
        xs = frozenset(xs)
        return self.down_closure(xs) == xs

    def minimals_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            if self._down[i] == 1 << i:
                mask |= 1 << i
        return mask

    def maximals_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            if self._up[i] == 1 << i:
                mask |= 1 << i
        return mask

    def minimals(self) -> frozenset[int]:
        return self.set_of(self.minimals_mask())

    def maximals(self) -> frozenset[int]:
        return self.set_of(self.maximals_mask())

    def min_below(self, x: int) -> frozenset[int]:
        """Minimal elements below ``x`` (the lower shadow of a point)."""
        self._check(x)
        return self.set_of(self._down[x] & self.minimals_mask())

    # -- comparability-graph metrics --------------------------------------

    def _frontiers(self, start_mask: int) -> Iterator[tuple[int, int]]:
        """Yield ``(k, mask)`` of elements at distance exactly k from the set."""
        seen = frontier = start_mask
        level = 0
        while frontier:
            yield level, frontier
            nxt = 0
            for j in iter_bits(frontier):
                nxt |= self._nbr[j]
            frontier = nxt & ~seen
            seen |= frontier
            level += 1

    def distance(self, x: int, y: int) -> Distance:
        """Shortest-path distance between ``x`` and ``y``; infinite across components."""
        self._check(x)
        self._check(y)
        bit_y = 1 << y
        for level, frontier in self._frontiers(1 << x):
            if frontier & bit_y:
                return Distance(level)
        return INFINITE

    def distance_to_set(self, x: int, xs: Iterable[int]) -> Distance:
        """Least distance from ``x`` to a member of ``xs``; infinite for the empty set."""
        self._check(x)
        target = self.mask_of(xs)
        if not target:
            return INFINITE
        for level, frontier in self._frontiers(1 << x):
            if frontier & target:
                return Distance(level)
        return INFINITE

    def distance_levels(self, xs: Iterable[int]) -> list[Distance]:
        """Distance of every element from the set ``xs``, in one sweep."""
        target = self.mask_of(xs)
        out = [INFINITE] * self.n
        if not target:
            return out
        for level, frontier in self._frontiers(target):
            for j in iter_bits(frontier):
                out[j] = Distance(level)
        return out

    def ball(self, x: int, radius: int) -> frozenset[int]:
        """All elements at distance at most ``radius`` from ``x``."""
        self._check(x)
        if radius < 0:
            raise IndexOutOfRange("radius must be a natural number")
        mask = 0
        for level, frontier in self._frontiers(1 << x):
            if level > radius:
                break
            mask |= frontier
        return self.set_of(mask)

    def order_components(self) -> tuple[frozenset[int], ...]:
        """Connected components of the comparability graph, by least element."""
        remaining = self._all
        blocks = []
        while remaining:
            start = remaining & -remaining
            mask = 0
            for _, frontier in self._frontiers(start):
                mask |= frontier
            blocks.append(self.set_of(mask))
            remaining &= ~mask
        return tuple(sorted(blocks, key=min))

    def height(self) -> int:
        """Length, in edges, of a longest chain."""
        n = self.n
        order = sorted(range(n), key=lambda i: self._down[i].bit_count())
        h = [0] * n
        for i in order:
            below = self._down[i] & ~(1 << i)
            h[i] = max((h[j] + 1 for j in iter_bits(below)), default=0)
        return max(h, default=0)

    # -- downsets ----------------------------------------------------------

    def downsets(self, limit: int = DOWNSET_LIMIT) -> list[frozenset[int]]:
        """All decreasing subsets, sorted by cardinality then element tuple.

        Raises :class:`SizeLimitExceeded` once more than ``limit`` sets exist.
        """
        n = self.n
        order = sorted(range(n), key=lambda i: self._down[i].bit_count())
        strict_down = [self._down[i] & ~(1 << i) for i in range(n)]
        found: list[int] = []

        def extend(idx: int, mask: int) -> None:
            if idx == n:
                if len(found) >= limit:
                    raise SizeLimitExceeded(
                        f"more than {limit} downsets; raise the limit to proceed"
                    )
                found.append(mask)
                return
            e = order[idx]
            extend(idx + 1, mask)
            if not strict_down[e] & ~mask:
                extend(idx + 1, mask | (1 << e))

        extend(0, 0)
        sets = [self.set_of(m) for m in found]
        sets.sort(key=lambda s: (len(s), tuple(sorted(s))))
        return sets

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(a, b)``: a < b with nothing strictly between."""
        out = []
        for a in range(self.n):
            strictly_above = self._up[a] & ~(1 << a)
            for b in iter_bits(strictly_above):
                between = strictly_above & self._down[b] & ~(1 << b)
                if not between:
                    out.append((a, b))
        return out

    def __eq__(self, other):
        return isinstance(other, Poset) and self._up == other._up

    def __hash__(self):
        return hash(self._up)

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"

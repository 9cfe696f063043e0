"""Constructors for the concrete spaces the library is exercised on.

Six small building blocks ``q0`` .. ``q5``, the two-level bipartite family
``q6(m, n)``, the width-2 grid family ``range2_grid(n)``, the doubled crown
family ``crown_pair(n)``, closed subalgebra families on the latter two kinds
of space, and a non-regular three-chain used as a negative control.

Index conventions (also used for the printable element names):

* ``q6(m, n)``: minimal level ``s_0 .. s_{n-1}`` at indices ``0..n-1`` with
  the involution sending ``i`` to ``n+i``; the first ``m`` minimal elements
  are the ones not below their own image.
* ``range2_grid(n)``: minimals ``x_0..x_{n-1}`` at ``0..n-1``, maximals
  ``y_i = zeta(x_i)`` at ``n+i``; ``x_i < y_j`` unless ``i`` is ``j-1`` or
  ``j+1`` (plain integers, no wraparound).
* ``crown_pair(n)``: minimals ``a_0..a_{n-1}`` at ``0..n-1`` and
  ``b_0..b_{n-1}`` at ``n..2n-1``; their images at ``2n+i`` and ``3n+i``.
  Every ``a_i`` is below every ``zeta(a_j)``, every ``b_i`` below every
  ``zeta(b_j)``, and the mixed relations hold exactly when the indices
  differ.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import (
    BadParams,
    IndexOutOfRange,
    NotBooleanSubalgebra,
    PairedSingletonViolation,
)
from .order import Poset
from .space import Space


def q(i: int) -> Space:
    """The six small spaces: a fixed point, a swapped pair, a two-chain,
    two swapped two-chains, and the two four-element crowns (with and
    without one missing diagonal relation)."""
    if i == 0:
        return Space(Poset.antichain(1), (0,))
    if i == 1:
        return Space(Poset.antichain(2), (1, 0))
    if i == 2:
        return Space(Poset.chain(2), (1, 0))
    if i == 3:
        # 0 < 1 and 2 < 3, the chains swapped by the involution.
        return Space(Poset.from_pairs(4, [(0, 1), (2, 3)]), (3, 2, 1, 0))
    if i == 4:
        # minimals 0, 1; maximals 2 = zeta(0), 3 = zeta(1); 0 is not below
        # its own image.
        return Space(Poset.from_pairs(4, [(0, 3), (1, 2), (1, 3)]), (2, 3, 0, 1))
    if i == 5:
        # full bipartite relation between {0, 1} and their images.
        return Space(
            Poset.from_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)]), (2, 3, 0, 1)
        )
    raise IndexOutOfRange(f"q(i) requires 0 <= i <= 5, got {i}")


def q_names(i: int) -> tuple[str, ...]:
    return {
        0: ("p",),
        1: ("x", "zx"),
        2: ("x", "zx"),
        3: ("a", "b", "zb", "za"),
        4: ("x", "y", "zx", "zy"),
        5: ("x", "y", "zx", "zy"),
    }[i]


def q6(m: int, n: int) -> Space:
    """Two-level bipartite space on 2n points; the first ``m`` minimals are
    exactly the ones not below their own involution image."""
    if n < 3 or not 0 <= m <= n:
        raise BadParams(f"q6 requires n >= 3 and 0 <= m <= n, got ({m}, {n})")
    pairs = []
    for i in range(n):
        for j in range(n):
            if i != j or i >= m:
                pairs.append((i, n + j))
    zeta = tuple(range(n, 2 * n)) + tuple(range(n))
    return Space(Poset.from_pairs(2 * n, pairs), zeta)


def q6_names(m: int, n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(n)) + tuple(f"zs{i}" for i in range(n))


def range2_grid(n: int) -> Space:
    """Grid family of width 2: ``x_i < y_j`` unless the indices are adjacent."""
    if n < 5:
        raise BadParams(f"range2_grid requires n >= 5, got {n}")
    pairs = []
    for i in range(n):
        for j in range(n):
            if i not in (j - 1, j + 1):
                pairs.append((i, n + j))
    zeta = tuple(range(n, 2 * n)) + tuple(range(n))
    return Space(Poset.from_pairs(2 * n, pairs), zeta)


def range2_grid_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n)) + tuple(f"y{i}" for i in range(n))


def crown_pair(n: int) -> Space:
    """Doubled crown on 4n points; mixed relations hold iff indices differ."""
    if n < 2:
        raise BadParams(f"crown_pair requires n >= 2, got {n}")
    pairs = []
    for i in range(n):
        for j in range(n):
            pairs.append((i, 2 * n + j))          # a_i < zeta(a_j)
            pairs.append((n + i, 3 * n + j))      # b_i < zeta(b_j)
            if i != j:
                pairs.append((i, 3 * n + j))      # a_i < zeta(b_j)
                pairs.append((n + i, 2 * n + j))  # b_i < zeta(a_j)
    zeta = tuple(range(2 * n, 4 * n)) + tuple(range(2 * n))
    return Space(Poset.from_pairs(4 * n, pairs), zeta)


def crown_pair_names(n: int) -> tuple[str, ...]:
    return (
        tuple(f"a{i}" for i in range(n))
        + tuple(f"b{i}" for i in range(n))
        + tuple(f"za{i}" for i in range(n))
        + tuple(f"zb{i}" for i in range(n))
    )


def nonregular_chain3() -> Space:
    """Three-chain with the endpoints swapped: a valid space of height 2."""
    return Space(Poset.chain(3), (2, 1, 0))


def chain3_names() -> tuple[str, ...]:
    return ("a", "b", "c")


def disjoint_union(a: Space, b: Space) -> Space:
    """Side-by-side union; handy for non-simple test spaces."""
    shift = a.n
    pairs = [(x, y) for x in range(a.n) for y in range(a.n) if a.poset.leq(x, y)]
    pairs += [
        (shift + x, shift + y)
        for x in range(b.n)
        for y in range(b.n)
        if b.poset.leq(x, y)
    ]
    zeta = tuple(a.zeta) + tuple(shift + z for z in b.zeta)
    return Space(Poset.from_pairs(a.n + b.n, pairs), zeta)


# -- closed subalgebra families ------------------------------------------------


def _check_boolean_subalgebra(family, ground: frozenset[int]):
    sets = {frozenset(x) for x in family}
    if frozenset() not in sets or ground not in sets:
        raise NotBooleanSubalgebra("family must contain the empty set and the ground set")
    for xs in sets:
        if not xs <= ground:
            raise NotBooleanSubalgebra(f"{sorted(xs)} is not a subset of the ground set")
        if ground - xs not in sets:
            raise NotBooleanSubalgebra(f"complement of {sorted(xs)} missing")
    for xs in sets:
        for ys in sets:
            if xs & ys not in sets:
                raise NotBooleanSubalgebra(
                    f"intersection of {sorted(xs)} and {sorted(ys)} missing"
                )
    return sets


def boolean_closure(ground: Iterable[int], generators) -> set[frozenset[int]]:
    """Least field of subsets of ``ground`` containing the generators."""
    ground = frozenset(ground)
    sets = {frozenset(), ground}
    sets.update(frozenset(g) for g in generators)
    while True:
        fresh = set()
        for xs in sets:
            comp = ground - xs
            if comp not in sets:
                fresh.add(comp)
        for xs, ys in combinations(sets, 2):
            if xs & ys not in sets:
                fresh.add(xs & ys)
            if xs | ys not in sets:
                fresh.add(xs | ys)
        if not fresh:
            return sets
        sets |= fresh


def kf_subalgebra_q6(m: int, n: int, family) -> list[frozenset[int]]:
    """Closed three-part family on ``q6(m, n)`` built from a field of subsets
    of the minimal level: the field itself, each member's image joined with
    the whole minimal level, and the principal downsets of images of
    singletons from the first ``m`` indices."""
    space = q6(m, n)
    ground = frozenset(range(n))
    sets = _check_boolean_subalgebra(family, ground)
    members = set(sets)
    for xs in sets:
        members.add(frozenset(n + i for i in xs) | ground)
    for xs in sets:
        if len(xs) == 1:
            (x,) = xs
            if x < m:
                members.add(space.poset.down_closure([n + x]))
    out = sorted(members, key=lambda s: (len(s), tuple(sorted(s))))
    assert all(space.poset.is_decreasing(s) for s in out)
    return out


def kf_subalgebra_crown(n: int, family_a, family_b) -> list[frozenset[int]]:
    """Analogous closed family on ``crown_pair(n)``.

    ``family_a`` and ``family_b`` are fields of subsets of the two halves of
    the minimal level (indices ``0..n-1`` and ``n..2n-1``); a singleton may
    be present in one only if its partner is present in the other.
    """
    space = crown_pair(n)
    ground_a = frozenset(range(n))
    ground_b = frozenset(range(n, 2 * n))
    sets_a = _check_boolean_subalgebra(family_a, ground_a)
    sets_b = _check_boolean_subalgebra(family_b, ground_b)
    for i in range(n):
        if (frozenset((i,)) in sets_a) != (frozenset((n + i,)) in sets_b):
            raise PairedSingletonViolation(
                f"singleton a{i}/b{i} must be present in both halves or neither"
            )
    ground = ground_a | ground_b
    sets = {ya | zb for ya in sets_a for zb in sets_b}
    members = set(sets)
    for xs in sets:
        members.add(frozenset(2 * n + i for i in xs) | ground)
    for xs in sets:
        if len(xs) == 1:
            (x,) = xs
            members.add(space.poset.down_closure([2 * n + x]))
    out = sorted(members, key=lambda s: (len(s), tuple(sorted(s))))
    assert all(space.poset.is_decreasing(s) for s in out)
    return out


# -- name registry ----------------------------------------------------------


def named_space(token: str) -> tuple[Space, tuple[str, ...]]:
    """Resolve a catalog token (``q0``..``q5``, ``q6:m,n``, ``grid:n``,
    ``crown:n``, ``chain3``) to a space plus printable element names."""
    token = token.strip()
    if token == "chain3":
        return nonregular_chain3(), chain3_names()
    if token.startswith("q6:"):
        try:
            m_str, n_str = token[3:].split(",")
            m, n = int(m_str), int(n_str)
        except ValueError:
            raise BadParams(f"expected q6:m,n with integers, got {token!r}") from None
        return q6(m, n), q6_names(m, n)
    if token.startswith("grid:"):
        try:
            n = int(token[5:])
        except ValueError:
            raise BadParams(f"expected grid:n with an integer, got {token!r}") from None
        return range2_grid(n), range2_grid_names(n)
    if token.startswith("crown:"):
        try:
            n = int(token[6:])
        except ValueError:
            raise BadParams(f"expected crown:n with an integer, got {token!r}") from None
        return crown_pair(n), crown_pair_names(n)
    if len(token) == 2 and token[0] == "q" and token[1].isdigit():
        i = int(token[1])
        if 0 <= i <= 5:
            return q(i), q_names(i)
    raise BadParams(f"unknown catalog token {token!r}")

"""Variety-level reasoning over finite simple algebras.

Everything here is phrased through dual spaces: one finite simple algebra
lies in the variety generated by others exactly when its space is the image
of one of their spaces under a surjective structure map.  For the two-level
bipartite family there is also a closed-form membership predicate, kept
strictly separate from the search so the two can be played against each
other as oracles.

Sub variety lattices of finitely many simple generators are materialised as
the downset lattice of the embeddability order on the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import catalog
from .errors import BadLabel, NotRegular
from .morphism import DEFAULT_BUDGET, search_surjective
from .order import Poset
from .space import Space


@dataclass(frozen=True)
class SimpleRef:
    """A named finite simple algebra, addressed through its dual space."""

    label: str
    space: Space

    @classmethod
    def builtin(cls, i: int) -> "SimpleRef":
        return cls(f"L{i}", catalog.q(i))

    @classmethod
    def l6(cls, m: int, n: int) -> "SimpleRef":
        _check_label(m, n)
        return cls(f"L6({m},{n})", catalog.q6(m, n))

    @classmethod
    def custom(cls, label: str, space: Space) -> "SimpleRef":
        if not space.is_simple():
            raise NotRegular(f"{label}: the space is not simple")
        return cls(label, space)


def _check_label(p: int, q: int) -> None:
    if q < 3 or not 0 <= p <= q:
        raise BadLabel(f"labels require q >= 3 and 0 <= p <= q, got ({p}, {q})")


def l6_member(p: int, q: int, m: int, n: int) -> bool:
    """Closed-form test: does the (p, q) bipartite algebra embed into the
    (m, n) one?  Requires ``p <= m`` and either all four parameters equal or
    ``p < q`` with ``q`` at most ``p + (m - p)//2 + n - m``."""
    _check_label(p, q)
    _check_label(m, n)
    if p > m:
        return False
    if p == q == m == n:
        return True
    return p < q and q <= p + (m - p) // 2 + (n - m)


def l6_member_oracle(p: int, q: int, m: int, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Brute-force counterpart of :func:`l6_member` by morphism search."""
    _check_label(p, q)
    _check_label(m, n)
    return search_surjective(catalog.q6(m, n), catalog.q6(p, q), budget).found


def is_member(
    candidate: SimpleRef,
    generators: Sequence[SimpleRef],
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True when the candidate's space is a surjective image of some
    generator's space (membership in the generated variety, for finite
    simple algebras in a locally finite setting)."""
    return any(
        search_surjective(g.space, candidate.space, budget).found for g in generators
    )


@dataclass(frozen=True)
class VarietyLattice:
    """The subvariety lattice of finitely many simple generators.

    ``classes`` are the equivalence classes of generators under mutual
    embeddability; ``order`` is the induced poset on classes (``i <= j``
    when class ``i`` embeds into class ``j``); ``downsets`` enumerates all
    decreasing sets of classes.  The empty downset is the trivial variety.
    """

    generators: tuple[SimpleRef, ...]
    classes: tuple[tuple[str, ...], ...]
    order: Poset
    downsets: tuple[frozenset[int], ...]

    @property
    def nontrivial_count(self) -> int:
        return len(self.downsets) - 1

    def decomposition(self, downset: frozenset[int]) -> frozenset[str]:
        """Labels of the maximal classes of a downset: its join decomposition."""
        maximal = {
            c
            for c in downset
            if not any(d != c and self.order.leq(c, d) for d in downset)
        }
        return frozenset(self.classes[c][0] for c in maximal)

    def decompositions(self) -> set[frozenset[str]]:
        return {self.decomposition(d) for d in self.downsets if d}

    def node_label(self, downset: frozenset[int]) -> str:
        if not downset:
            return "T"
        return "+".join(sorted(self.decomposition(downset)))

    def covers(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Covering pairs of the downset lattice (they differ by one class)."""
        out = []
        pool = set(self.downsets)
        for d in self.downsets:
            for extra in range(len(self.classes)):
                if extra in d:
                    continue
                bigger = d | {extra}
                if bigger in pool:
                    out.append((d, frozenset(bigger)))
        return out

    def is_chain(self) -> bool:
        ordered = sorted(self.downsets, key=len)
        return all(a <= b for a, b in zip(ordered, ordered[1:]))

    def to_dot(self) -> str:
        """Hasse diagram in DOT text, edges pointing at the larger variety."""
        lines = ["digraph subvarieties {", "  rankdir=BT;"]
        for d in self.downsets:
            lines.append(f'  "{self.node_label(d)}";')
        for low, high in self.covers():
            lines.append(
                f'  "{self.node_label(low)}" -> "{self.node_label(high)}";'
            )
        lines.append("}")
        return "\n".join(lines)


def subvariety_lattice(
    generators: Sequence[SimpleRef], budget: int = DEFAULT_BUDGET
) -> VarietyLattice:
    """Compute the lattice of subvarieties generated by the given simples."""
    gens = tuple(generators)
    k = len(gens)
    embeds = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                embeds[i][j] = True
            else:
                # class i below class j: i's space is an image of j's.
                embeds[i][j] = search_surjective(
                    gens[j].space, gens[i].space, budget
                ).found
    classes: list[tuple[str, ...]] = []
    class_of = [-1] * k
    for i in range(k):
        if class_of[i] >= 0:
            continue
        block = [j for j in range(k) if embeds[i][j] and embeds[j][i]]
        for j in block:
            class_of[j] = len(classes)
        classes.append(tuple(gens[j].label for j in block))
    pairs = {
        (class_of[i], class_of[j])
        for i in range(k)
        for j in range(k)
        if embeds[i][j]
    }
    order = Poset.from_pairs(len(classes), pairs)
    downsets = tuple(order.downsets())
    return VarietyLattice(gens, tuple(classes), order, downsets)


def distinct_varieties(labels: Iterable[tuple[int, int]], use_oracle: bool = False) -> bool:
    """For diagonal labels ``(n, n)``: do distinct subsets always generate
    distinct varieties?  Reduces to mutual non-embeddability of distinct
    diagonal members."""
    labels = list(labels)
    for n, n2 in labels:
        if n != n2:
            raise BadLabel(f"diagonal labels only, got ({n}, {n2})")
        _check_label(n, n)
    member = l6_member_oracle if use_oracle else l6_member
    for (n, _), (m, _) in ((a, b) for a in labels for b in labels):
        if member(n, n, m, m) != (n == m):
            return False
    return True

"""Structure-preserving maps between spaces: validation and search.

A legal map must preserve the order, commute with the involutions, and pull
no new minimal elements out of thin air: every minimal element below the
image of a point must be the image of a minimal element below the point.
Surjective maps of this kind are exactly the duals of subalgebra embeddings,
so the exhaustive search below decides embeddability questions.

The search assigns images to minimal elements first; the involution then
forces the images of their partners, which halves the branching on spaces
of height at most 1.  Pruning is by per-assignment order checks and a
surjectivity reachability bound; the minimal-element condition is verified
at the leaves by the same validator used for standalone checking.  The scan
is in lexicographic order with a configurable node budget, so verdicts and
witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import IndexOutOfRange, NotQ6Shaped, SearchBudgetExceeded
from .order import iter_bits
from .space import Space

#: Default cap on assignment attempts per search.
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class MorphismMap:
    """A total map between the element sets of two spaces."""

    src: Space
    dst: Space
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.src.n:
            raise IndexOutOfRange("mapping must assign every source element")
        if any(not 0 <= t < self.dst.n for t in self.mapping):
            raise IndexOutOfRange("mapping image out of range")

    def check(self) -> "MorphismCheck":
        return check_pm_morphism(self.src, self.dst, self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.dst.n


@dataclass(frozen=True)
class MorphismCheck:
    """Verdict of a map check; on failure names the clause and a witness."""

    ok: bool
    clause: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def check_pm_morphism(src: Space, dst: Space, mapping: Sequence[int]) -> MorphismCheck:
    """Check order preservation, involution equivariance and the
    minimal-element condition, reporting the first violation found."""
    phi = MorphismMap(src, dst, tuple(mapping)).mapping
    for x in range(src.n):
        if phi[src.zeta[x]] != dst.zeta[phi[x]]:
            return MorphismCheck(False, "involution", (x,))
    for x in range(src.n):
        for y in iter_bits(src.poset.up_mask(x)):
            if not dst.poset.leq(phi[x], phi[y]):
                return MorphismCheck(False, "order", (x, y))
    for x in range(src.n):
        image_minimals = dst.poset.min_below(phi[x])
        pushed = {phi[y] for y in src.poset.min_below(x)}
        if not image_minimals <= pushed:
            bad = min(image_minimals - pushed)
            return MorphismCheck(False, "minimals", (x, bad))
    return MorphismCheck(True)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a surjective-map search."""

    found: bool
    witness: Optional[MorphismMap]
    nodes_explored: int


class _Search:
    """Shared backtracking core for the surjective and bijective searches."""

    def __init__(self, src: Space, dst: Space, budget: int, bijective: bool):
        self.src = src
        self.dst = dst
        self.budget = budget
        self.bijective = bijective
        self.nodes = 0
        sp, dp = src.poset, dst.poset
        src_min, src_max = sp.minimals_mask(), sp.maximals_mask()
        dst_min, dst_max = dp.minimals_mask(), dp.maximals_mask()
        self.cand = []
        for x in range(src.n):
            c = dp.all_mask
            if (src_min >> x) & 1:
                c &= dst_min
            if (src_max >> x) & 1:
                c &= dst_max
            self.cand.append(c)
        # Minimal elements first: their partners' images come for free.
        minimals = sorted(iter_bits(src_min))
        rest = sorted(set(range(src.n)) - set(minimals))
        self.order = minimals + rest
        self.mapping = [-1] * src.n
        self.assigned: list[int] = []
        self.covered = [0] * dst.n
        self.covered_count = 0
        self.witness: Optional[tuple[int, ...]] = None

    def _consistent(self, x: int, t: int) -> bool:
        sp, dp = self.src.poset, self.dst.poset
        for u in self.assigned:
            fu = self.mapping[u]
            if sp.leq(u, x) and not dp.leq(fu, t):
                return False
            if sp.leq(x, u) and not dp.leq(t, fu):
                return False
        return True

    def _place(self, x: int, t: int) -> bool:
        self.mapping[x] = t
        self.assigned.append(x)
        self.covered[t] += 1
        if self.covered[t] == 1:
            self.covered_count += 1
        return True

    def _remove(self, x: int) -> None:
        t = self.mapping[x]
        self.covered[t] -= 1
        if self.covered[t] == 0:
            self.covered_count -= 1
        self.assigned.pop()
        self.mapping[x] = -1

    def _leaf_ok(self) -> bool:
        if self.covered_count != self.dst.n:
            return False
        phi = tuple(self.mapping)
        if self.bijective:
            if not _is_order_iso(self.src, self.dst, phi):
                return False
            inverse = [0] * self.dst.n
            for i, t in enumerate(phi):
                inverse[t] = i
            if not check_pm_morphism(self.dst, self.src, inverse).ok:
                return False
        return check_pm_morphism(self.src, self.dst, phi).ok

    def run(self) -> bool:
        return self._extend(0)

    def _extend(self, pos: int) -> bool:
        n = self.src.n
        while pos < n and self.mapping[self.order[pos]] >= 0:
            pos += 1
        if pos == n:
            if self._leaf_ok():
                self.witness = tuple(self.mapping)
                return True
            return False
        x = self.order[pos]
        zx = self.src.zeta[x]
        unassigned = n - len(self.assigned)
        for t in iter_bits(self.cand[x]):
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"search exceeded {self.budget} assignment attempts"
                )
            tz = self.dst.zeta[t]
            if zx == x and tz != t:
                continue
            if self.bijective and (self.covered[t] or (zx != x and self.covered[tz])):
                continue
            if self.bijective and zx != x and tz == t:
                continue
            if not self._consistent(x, t):
                continue
            self._place(x, t)
            forced = False
            if zx != x:
                if not (self.cand[zx] >> tz) & 1 or not self._consistent(zx, tz):
                    self._remove(x)
                    continue
                self._place(zx, tz)
                forced = True
            # Every remaining unassigned element covers at most one new target.
            remaining = self.src.n - len(self.assigned)
            if self.dst.n - self.covered_count <= remaining and self._extend(pos + 1):
                return True
            if forced:
                self._remove(zx)
            self._remove(x)
        return False


def _is_order_iso(src: Space, dst: Space, phi: Sequence[int]) -> bool:
    for x in range(src.n):
        for y in range(src.n):
            if src.poset.leq(x, y) != dst.poset.leq(phi[x], phi[y]):
                return False
    return True


def search_surjective(src: Space, dst: Space, budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Exhaustive search for a surjective structure map from ``src`` onto ``dst``."""
    if dst.n > src.n:
        return SearchReport(False, None, 0)
    if dst.n == 0:
        if src.n == 0:
            return SearchReport(True, MorphismMap(src, dst, ()), 0)
        return SearchReport(False, None, 0)
    search = _Search(src, dst, budget, bijective=False)
    found = search.run()
    witness = (
        MorphismMap(src, dst, search.witness) if found and search.witness else None
    )
    return SearchReport(found, witness, search.nodes)


def _iso_signature(space: Space, x: int):
    p = space.poset
    return (
        p.down_mask(x).bit_count(),
        p.up_mask(x).bit_count(),
        space.zeta[x] == x,
        p.leq(x, space.zeta[x]) or p.leq(space.zeta[x], x),
    )


def is_pm_isomorphic(a: Space, b: Space, budget: int = DEFAULT_BUDGET) -> bool:
    """True when a bijective structure map with structure-map inverse exists."""
    if a.n != b.n:
        return False
    if a.n == 0:
        return True
    sig_a = sorted(_iso_signature(a, x) for x in range(a.n))
    sig_b = sorted(_iso_signature(b, x) for x in range(b.n))
    if sig_a != sig_b:
        return False
    if a.poset.height() != b.poset.height():
        return False
    search = _Search(a, b, budget, bijective=True)
    # Refine candidates: identical point signatures only.
    for x in range(a.n):
        mask = 0
        sx = _iso_signature(a, x)
        for t in iter_bits(search.cand[x]):
            if _iso_signature(b, t) == sx:
                mask |= 1 << t
        search.cand[x] = mask
    return search.run()


# -- specialised criteria for the two-level bipartite family -----------------


def q6_params_of(space: Space) -> tuple[int, int, frozenset[int]]:
    """Recognise a two-level bipartite space of the ``q6`` kind.

    Returns ``(m, n, minimal_exceptions)`` where the exceptions are the
    minimal elements not below their own involution image.  Raises
    :class:`NotQ6Shaped` when the space does not match.
    """
    p = space.poset
    minimals = p.minimals()
    maximals = p.maximals()
    n = len(minimals)
    if n < 3 or space.n != 2 * n or minimals & maximals:
        raise NotQ6Shaped("expected disjoint minimal/maximal levels with |min| >= 3")
    if space.zeta_image(minimals) != maximals:
        raise NotQ6Shaped("involution must swap the two levels")
    for x in minimals:
        for y in minimals:
            if x != y and not p.leq(x, space.zeta[y]):
                raise NotQ6Shaped(
                    "distinct minimals must lie below each other's images"
                )
    exceptions = frozenset(
        x for x in minimals if not p.leq(x, space.zeta[x])
    )
    return len(exceptions), n, exceptions


@dataclass(frozen=True)
class Q6CriteriaReport:
    """Per-clause verdicts of the surjectivity criteria for q6-shaped maps."""

    level_onto_and_equivariant: bool
    exception_preimage_inside: bool
    injective_on_exception_preimage: bool
    collapsed_exceptions_witnessed: bool

    @property
    def ok(self) -> bool:
        return (
            self.level_onto_and_equivariant
            and self.exception_preimage_inside
            and self.injective_on_exception_preimage
            and self.collapsed_exceptions_witnessed
        )


def check_q6_criteria(src: Space, dst: Space, mapping: Sequence[int]) -> Q6CriteriaReport:
    """Evaluate the four clauses characterising surjective structure maps
    between q6-shaped spaces.

    Writing ``S``/``I`` for the source minimal level and its exceptional
    part, ``T``/``J`` for the target ones: the map must send ``S`` onto
    ``T`` equivariantly; the preimage of ``J`` must lie inside ``I``; the
    map must be injective on that preimage; and every exceptional point
    mapped outside ``J`` must share its image with another non-preimage
    point of ``S``.
    """
    _, n_src, exc_src = q6_params_of(src)
    _, n_dst, exc_dst = q6_params_of(dst)
    phi = MorphismMap(src, dst, tuple(mapping)).mapping
    s_level = src.poset.minimals()
    t_level = dst.poset.minimals()

    onto = {phi[x] for x in s_level} == t_level
    equivariant = all(phi[src.zeta[x]] == dst.zeta[phi[x]] for x in s_level)
    clause1 = onto and equivariant

    preimage = frozenset(x for x in s_level if phi[x] in exc_dst)
    clause2 = preimage <= exc_src

    images = [phi[x] for x in sorted(preimage)]
    clause3 = len(images) == len(set(images))

    clause4 = True
    for x in exc_src - preimage:
        if not any(
            phi[u] == phi[x]
            for u in s_level - preimage
            if u != x
        ):
            clause4 = False
            break

    return Q6CriteriaReport(clause1, clause2, clause3, clause4)

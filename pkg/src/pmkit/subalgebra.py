"""Subalgebra generation by closure, and finiteness/growth experiments.

The closure operator keeps a worklist of fresh elements and applies the two
unary operations to them and the two lattice operations against everything
already generated, until nothing new appears.  Growth experiments on the
width-2 grid family show one generator producing at least ``n`` elements,
the finite shadow of a free algebra being infinite.
"""

from __future__ import annotations

from typing import Iterable

from . import catalog
from .algebra import Algebra, dual_algebra
from .errors import BadParams, Overflow
from .order import DOWNSET_LIMIT


from dataclasses import dataclass


@dataclass(frozen=True)
class ClosureResult:
    """A generated subalgebra, in canonical element order."""

    generated: tuple[frozenset[int], ...]
    generator_count: int
    op_applications: int

    def __len__(self) -> int:
        return len(self.generated)


def generate_subalgebra(algebra: Algebra, gens: Iterable[Iterable[int]]) -> ClosureResult:
    """Least subset of the algebra containing the generators and constants,
    closed under meet, join, pseudocomplement and the de Morgan operation."""
    gens = [algebra.check_element(g) for g in gens]
    generated: set[frozenset[int]] = {algebra.zero, algebra.one}
    generated.update(gens)
    worklist = list(generated)
    ops = 0
    while worklist:
        fresh: set[frozenset[int]] = set()
        snapshot = list(generated)
        for xs in worklist:
            for unary in (algebra.star, algebra.prime):
                ops += 1
                ys = unary(xs)
                if ys not in generated:
                    fresh.add(ys)
            for others in snapshot:
                ops += 2
                for zs in (xs & others, xs | others):
                    if zs not in generated:
                        fresh.add(zs)
        fresh -= generated
        generated |= fresh
        worklist = list(fresh)
    out = sorted(generated, key=lambda s: (len(s), tuple(sorted(s))))
    return ClosureResult(tuple(out), len(gens), ops)


def is_closed_family(algebra: Algebra, family: Iterable[Iterable[int]]) -> bool:
    """Check a family is a subalgebra: contains the constants and is closed
    under all four operations."""
    sets = {algebra.check_element(f) for f in family}
    if algebra.zero not in sets or algebra.one not in sets:
        return False
    for xs in sets:
        if algebra.star(xs) not in sets or algebra.prime(xs) not in sets:
            return False
        for ys in sets:
            if xs & ys not in sets or xs | ys not in sets:
                return False
    return True


def one_generator_growth(n: int, limit: int = DOWNSET_LIMIT) -> int:
    """Size of the subalgebra generated by the first minimal singleton in
    the dual algebra of the width-2 grid; always at least ``n``."""
    space = catalog.range2_grid(n)
    algebra = dual_algebra(space, limit)
    closure = generate_subalgebra(algebra, [frozenset((0,))])
    return len(closure)


def local_finiteness_bound(generators: int) -> int:
    """The doubly exponential ceiling ``3 * 2**(2**(2N))`` on the size of an
    ``N``-generated subalgebra in the two-level bipartite family.

    Values for ``N >= 3`` are reported as overflow rather than computed;
    they are astronomically past any runtime use.
    """
    if generators < 1:
        raise BadParams("the bound is stated for at least one generator")
    if generators >= 3:
        raise Overflow(
            f"3 * 2**(2**{2 * generators}) exceeds any practical representation"
        )
    return 3 * 2 ** (2 ** (2 * generators))


def crown_bound_ceiling(generators: int) -> int:
    """Ceiling ``3 * (2**(2**(4N)))**2`` for the doubled-crown family."""
    if generators < 0 or generators > 1:
        raise BadParams("only N in {0, 1} is representable here")
    return 3 * (2 ** (2 ** (4 * generators))) ** 2


def crown_bound_check(n: int, generators: int) -> bool:
    """Verify every ``N``-generated closure in the doubled-crown algebra
    stays below the stated ceiling (trivially so, via the algebra size)."""
    if not 2 <= n <= 4:
        raise BadParams(f"crown bound check supports 2 <= n <= 4, got {n}")
    if generators not in (0, 1):
        raise BadParams("only N in {0, 1} is supported")
    algebra = dual_algebra(catalog.crown_pair(n))
    ceiling = crown_bound_ceiling(generators)
    if generators == 0:
        return len(generate_subalgebra(algebra, [])) <= ceiling
    if len(algebra) > ceiling:
        return False
    return all(
        len(generate_subalgebra(algebra, [xs])) <= ceiling for xs in algebra.elements
    )

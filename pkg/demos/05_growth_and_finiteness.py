"""Subalgebra growth against local-finiteness ceilings.

In the two-level bipartite algebras a single generator can only produce a
bounded subalgebra (at most 48 elements).  In the width-2 grid algebras one
generator already produces at least n elements, and the derivation that
walks from each minimal singleton to the next shows why the growth never
stops as n increases.
"""

from pmkit import catalog, dual_algebra
from pmkit.subalgebra import (
    crown_bound_check,
    generate_subalgebra,
    local_finiteness_bound,
    one_generator_growth,
)

print("single-generator ceiling:", local_finiteness_bound(1))
worst = 0
for n in (3, 4):
    for m in range(n + 1):
        algebra = dual_algebra(catalog.q6(m, n))
        worst = max(
            worst, max(len(generate_subalgebra(algebra, [xs])) for xs in algebra.elements)
        )
print("largest observed one-generator closure in the bipartite family:", worst)

print("\none-generator growth in the grid family:")
for n in (5, 6, 7, 8):
    print(f"  n={n}: closure size {one_generator_growth(n)} (>= {n})")

# The derivation chain behind the growth: each minimal singleton yields the
# next one by a star-prime-star step meeting the previous pseudocomplement.
algebra = dual_algebra(catalog.range2_grid(6))
star, prime = algebra.star, algebra.prime
current = frozenset({0})
print("\nwalking the minimal singletons of grid:6")
print("  start:", sorted(current))
step = star(prime(star(current)))
print("  star-prime-star:", sorted(step))
for i in range(1, 5):
    nxt = star(prime(star(frozenset({i})))) & star(frozenset({i - 1}))
    print(f"  next from x{i}:", sorted(nxt))

print("\ncrown family ceilings hold:", crown_bound_check(2, 1), crown_bound_check(3, 1))

"""Width of a space equals range of its algebra, through distances.

The range of an algebra is how many prime-star steps it takes every
element's descending chain to stall.  On spaces of height at most 1 each
iterate has a closed distance form, and the stalling step is exactly the
largest finite min-distance between points and involution images: the
width.
"""

from pmkit import catalog, dual_algebra

for token in ["q0", "q2", "q5", "q6:0,3", "q6:4,4", "grid:5", "crown:3"]:
    space, _ = catalog.named_space(token)
    algebra = dual_algebra(space)
    print(
        f"{token:8s} width={space.zeta_width()}  range={algebra.range_of()}  "
        f"|algebra|={len(algebra)}"
    )

# The distance form of the iterates, spelled out on the width-2 grid.
space = catalog.range2_grid(5)
algebra = dual_algebra(space)
xs = frozenset({0, 1, 2})
print("\nX =", sorted(xs))
for k in range(4):
    via_ops = algebra.range_iterate(xs, k)
    via_dist = algebra.range_term_via_distance(xs, k)
    marker = "==" if via_ops == via_dist else "!="
    print(f"k={k}: iterated {sorted(via_ops)} {marker} distance form {sorted(via_dist)}")

# Distances behind the scenes: the grid family needs two steps.
print("\ndistance between the first two maximals:", space.poset.distance(5, 6))
print("distance to the partner of the second: ", space.poset.distance(5, 1))
print("their min (the width-2 witness):       ", space.zeta_distance(5, 6))

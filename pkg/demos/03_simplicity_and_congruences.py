"""Simplicity through order components and congruence sets.

Congruences of the dual algebra correspond to sets that are closed under
the involution and up-closed on their minimal part.  An algebra on a
regular space is simple exactly when one order component together with its
involution image covers the whole space, equivalently when only the empty
and full congruence sets exist.
"""

from pmkit import catalog, disjoint_union, dual_algebra

for token in ["q2", "q3", "q6:1,3", "crown:2"]:
    space, names = catalog.named_space(token)
    algebra = dual_algebra(space)
    witness = space.simple_component()
    sets = algebra.congruence_sets()
    shown = "none" if witness is None else "{" + ", ".join(names[i] for i in sorted(witness)) + "}"
    print(f"{token:8s} congruence sets={len(sets)}  simple component: {shown}")

# A non-simple example: two copies of the two-chain side by side.
union = disjoint_union(catalog.q(2), catalog.q(2))
algebra = dual_algebra(union)
print("\ntwo two-chains:")
for xs in algebra.congruence_sets():
    print("  congruence set", sorted(xs))
print("simple:", union.is_simple())

# The pairwise-distance membership test at different bounds.
grid = catalog.range2_grid(5)
print("\nwidth-2 grid inside the width-1 class:", grid.simple_in_mn(1))
print("width-2 grid inside the width-2 class:", grid.simple_in_mn(2))

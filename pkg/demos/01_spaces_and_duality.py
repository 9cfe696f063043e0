"""Build spaces, inspect their structure, and round-trip the duality.

A space is a finite poset plus an order-reversing involution.  Its dual
algebra is the lattice of downsets with a pseudocomplement (complement of
the up-closure) and a de Morgan operation (complement of the involution
image).  Rebuilding the space from per-point prime ideals gives the
original back.
"""

from pmkit import Poset, Space, catalog, dual_algebra, format_space, is_pm_isomorphic

# Hand-built: the two-element chain x < zx with the swap involution.
two_chain = Space(Poset.from_pairs(2, [(0, 1)]), (1, 0))
print("two-chain kind:", two_chain.kind())

# The catalog covers everything used in the verification suite.
for token in ["q0", "q3", "q5", "q6:2,4", "grid:5", "crown:2", "chain3"]:
    space, names = catalog.named_space(token)
    kind = space.kind()
    print(
        f"{token:8s} n={space.n:2d} regular={kind.regular!s:5s} "
        f"kleene={kind.kleene!s:5s} width={kind.zeta_width}"
    )

# The dual algebra of a space, and its operations on one element.
space = catalog.q6(2, 4)
algebra = dual_algebra(space)
print(f"\nq6(2,4) has {len(algebra)} downsets")
singleton = frozenset({0})
print("element        :", sorted(singleton))
print("pseudocomplement:", sorted(algebra.star(singleton)))
print("de Morgan image :", sorted(algebra.prime(singleton)))
print("dual pseudocompl:", sorted(algebra.plus(singleton)))

# Duality round trip: the reconstructed space is the space we started from.
rebuilt = algebra.reconstruct_space()
print("\nround trip isomorphic:", is_pm_isomorphic(rebuilt, space))

# Spaces serialise to small JSON documents.
print("\nthe two-chain as a document:")
print(format_space(two_chain, ["x", "zx"]))

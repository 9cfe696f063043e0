"""Map checking, surjective search, isomorphism, and the bipartite criteria."""

import itertools

import pytest

from pmkit import (
    MorphismMap,
    catalog,
    check_pm_morphism,
    check_q6_criteria,
    is_pm_isomorphic,
    search_surjective,
)
from pmkit.errors import IndexOutOfRange, NotQ6Shaped, SearchBudgetExceeded
from pmkit.morphism import q6_params_of


# -- check_pm_morphism ------------------------------------------------------------


def test_identity_is_a_morphism(catalog_spaces):
    for name, space in catalog_spaces:
        assert check_pm_morphism(space, space, tuple(range(space.n))).ok, name


def test_swapped_pair_onto_chain_fails_minimals():
    # sending the antichain pair onto the chain respects order and the
    # involution but manufactures a minimal below the image of the top
    src, dst = catalog.q(1), catalog.q(2)
    report = check_pm_morphism(src, dst, (0, 1))
    assert not report.ok
    assert report.clause == "minimals"


def test_order_violation_reported():
    src, dst = catalog.q(2), catalog.q(1)
    report = check_pm_morphism(src, dst, (0, 1))
    assert not report.ok and report.clause == "order"


def test_involution_violation_reported():
    src = dst = catalog.q(1)
    report = check_pm_morphism(src, dst, (0, 0))
    assert not report.ok and report.clause == "involution"


def test_mapping_must_be_total_and_in_range():
    with pytest.raises(IndexOutOfRange):
        MorphismMap(catalog.q(2), catalog.q(2), (0,))
    with pytest.raises(IndexOutOfRange):
        MorphismMap(catalog.q(2), catalog.q(2), (0, 5))


def test_block_construction_passes_all_checks():
    """The explicit block map: a matched part bijects, exceptional points
    collapse in pairs onto fresh targets, the free parts biject."""
    src = catalog.q6(2, 4)   # exceptional minimals 0, 1; free 2, 3
    dst = catalog.q6(0, 3)
    # collapse the two exceptional sources onto target 0, biject the rest
    phi = [0, 0, 1, 2] + [dst.zeta[0], dst.zeta[0], dst.zeta[1], dst.zeta[2]]
    assert check_pm_morphism(src, dst, phi).ok
    assert MorphismMap(src, dst, tuple(phi)).is_surjective()
    report = check_q6_criteria(src, dst, phi)
    assert report.ok


# -- surjective search ---------------------------------------------------------


KNOWN_SEARCHES = [
    ("q6:0,4", "q6:0,3", True),
    ("q6:0,3", "q5", True),
    ("q5", "q2", True),
    ("q2", "q0", True),
    ("q5", "q6:0,3", False),
    ("q2", "q5", False),
    ("q0", "q2", False),
    ("q6:3,3", "q5", False),
    ("q6:1,3", "q5", True),
    ("q6:1,3", "q4", True),
    ("q6:0,3", "q4", False),
    ("q3", "q1", True),
    ("q2", "q1", False),
    ("q4", "q2", True),
    ("q3", "q2", True),
]


@pytest.mark.parametrize("src_token,dst_token,expected", KNOWN_SEARCHES)
def test_search_known_cases(src_token, dst_token, expected):
    src, _ = catalog.named_space(src_token)
    dst, _ = catalog.named_space(dst_token)
    report = search_surjective(src, dst)
    assert report.found == expected
    if expected:
        assert report.witness is not None
        assert report.witness.check().ok
        assert report.witness.is_surjective()
    else:
        assert report.witness is None


def test_search_counts_nodes():
    report = search_surjective(catalog.q6(0, 4), catalog.q6(0, 3))
    assert report.nodes_explored > 0


def brute_force_surjective_exists(src, dst):
    """Enumeration oracle: try every total map, no pruning at all."""
    for mapping in itertools.product(range(dst.n), repeat=src.n):
        if len(set(mapping)) == dst.n and check_pm_morphism(src, dst, mapping).ok:
            return True
    return False


def test_search_agrees_with_enumeration():
    """The pruned search and the unpruned enumeration agree on every pair
    of small catalog spaces."""
    tokens = ["q0", "q1", "q2", "q3", "q4", "q5", "q6:0,3", "q6:1,3", "q6:3,3"]
    spaces = [catalog.named_space(t)[0] for t in tokens]
    for src in spaces:
        for dst in spaces:
            if dst.n > 4 and src.n > 4 and src is not dst:
                continue  # keep the enumeration side tractable
            assert (
                search_surjective(src, dst).found
                == brute_force_surjective_exists(src, dst)
            )


def test_iso_agrees_with_permutation_enumeration():
    """The isomorphism search agrees with checking every bijection."""
    tokens = ["q1", "q2", "q3", "q4", "q5", "q6:0,3", "q6:2,3"]
    spaces = [catalog.named_space(t)[0] for t in tokens]
    for a in spaces:
        for b in spaces:
            if a.n != b.n:
                assert not is_pm_isomorphic(a, b)
                continue
            brute = any(
                check_pm_morphism(a, b, perm).ok
                and check_pm_morphism(
                    b, a, tuple(perm.index(t) for t in range(b.n))
                ).ok
                for perm in itertools.permutations(range(a.n))
            )
            assert is_pm_isomorphic(a, b) == brute


def test_search_is_deterministic():
    a = search_surjective(catalog.q6(1, 4), catalog.q6(1, 3))
    b = search_surjective(catalog.q6(1, 4), catalog.q6(1, 3))
    assert a == b


def test_search_budget_error():
    with pytest.raises(SearchBudgetExceeded):
        search_surjective(catalog.crown_pair(4), catalog.crown_pair(3), budget=50)


def test_surjective_witness_preserves_extrema():
    """Found witnesses map the minimal level onto the minimal level and
    push exactly the minimals below each point."""
    cases = [(catalog.q6(1, 4), catalog.q6(1, 3)), (catalog.q6(0, 3), catalog.q(5))]
    for src, dst in cases:
        witness = search_surjective(src, dst).witness
        phi = witness.mapping
        assert {phi[x] for x in src.poset.minimals()} == set(dst.poset.minimals())
        assert {phi[x] for x in src.poset.maximals()} == set(dst.poset.maximals())
        for x in range(src.n):
            assert dst.poset.min_below(phi[x]) == frozenset(
                phi[y] for y in src.poset.min_below(x)
            )


def test_composition_of_witnesses_is_a_morphism():
    first = search_surjective(catalog.q6(0, 4), catalog.q6(0, 3)).witness
    second = search_surjective(catalog.q6(0, 3), catalog.q(5)).witness
    composed = tuple(second.mapping[t] for t in first.mapping)
    assert check_pm_morphism(catalog.q6(0, 4), catalog.q(5), composed).ok
    assert len(set(composed)) == 4


def test_mutual_surjections_imply_isomorphism(catalog_spaces):
    small = [(n, s) for n, s in catalog_spaces if s.n <= 6]
    for name_a, a in small:
        for name_b, b in small:
            if a.n != b.n:
                continue
            if (
                search_surjective(a, b).found
                and search_surjective(b, a).found
            ):
                assert is_pm_isomorphic(a, b), (name_a, name_b)


# -- isomorphism -----------------------------------------------------------------


def test_iso_under_relabelling():
    space = catalog.q6(1, 4)
    # relabel by rotating the free minimal elements
    perm = [0, 2, 3, 1, 4, 6, 7, 5]
    from pmkit import Poset, Space

    pairs = [
        (perm[x], perm[y])
        for x in range(space.n)
        for y in range(space.n)
        if space.poset.leq(x, y)
    ]
    zeta = [0] * space.n
    for x in range(space.n):
        zeta[perm[x]] = perm[space.zeta[x]]
    relabelled = Space(Poset.from_pairs(space.n, pairs), zeta)
    assert is_pm_isomorphic(space, relabelled)


def test_iso_negative_cases():
    assert not is_pm_isomorphic(catalog.q6(1, 4), catalog.q6(2, 4))
    assert not is_pm_isomorphic(catalog.q(4), catalog.q(5))
    assert not is_pm_isomorphic(catalog.q(1), catalog.q(2))


def test_iso_reflexive(catalog_spaces):
    for name, space in catalog_spaces:
        assert is_pm_isomorphic(space, space), name


# -- the four-clause criteria -----------------------------------------------------


def test_q6_params_recognised():
    m, n, exceptions = q6_params_of(catalog.q6(2, 5))
    assert (m, n) == (2, 5)
    assert exceptions == frozenset({0, 1})


def test_q6_params_rejects_other_shapes():
    with pytest.raises(NotQ6Shaped):
        q6_params_of(catalog.q(5))
    with pytest.raises(NotQ6Shaped):
        q6_params_of(catalog.range2_grid(5))


def test_criteria_identity_map():
    space = catalog.q6(1, 3)
    report = check_q6_criteria(space, space, tuple(range(space.n)))
    assert report.ok


def test_criteria_collapsed_exceptional_pair_rejected():
    """A map sending two preimages of the exceptional target set to one
    point breaks the injectivity clause."""
    src, dst = catalog.q6(2, 3), catalog.q6(1, 3)
    phi = [0] * src.n
    for i, t in enumerate((0, 0, 1)):
        phi[i] = t
        phi[3 + i] = dst.zeta[t]
    report = check_q6_criteria(src, dst, phi)
    assert not report.injective_on_exception_preimage
    assert not report.ok
    assert not (
        check_pm_morphism(src, dst, phi).ok and len(set(phi)) == dst.n
    )


def test_criteria_match_full_check_small_sweep():
    """Exhaustive agreement between the clause verdict and the direct
    morphism-plus-surjectivity check, over all equivariant maps at n = q = 3."""
    for m in range(4):
        src = catalog.q6(m, 3)
        for p in range(4):
            dst = catalog.q6(p, 3)
            for choice in itertools.product(range(dst.n), repeat=3):
                phi = [0] * src.n
                for i in range(3):
                    phi[i] = choice[i]
                    phi[3 + i] = dst.zeta[choice[i]]
                verdict = check_q6_criteria(src, dst, phi).ok
                direct = (
                    check_pm_morphism(src, dst, phi).ok and len(set(phi)) == dst.n
                )
                assert verdict == direct, (m, p, phi)


def test_criteria_match_full_check_up_to_five():
    """The same agreement at sizes up to 5, over the level-respecting
    equivariant maps (images of minimals among the minimals)."""
    for n in (3, 4, 5):
        for m in range(n + 1):
            src = catalog.q6(m, n)
            for q in (3, 4, 5):
                for p in range(q + 1):
                    dst = catalog.q6(p, q)
                    for choice in itertools.product(range(q), repeat=n):
                        phi = [0] * src.n
                        for i in range(n):
                            phi[i] = choice[i]
                            phi[n + i] = dst.zeta[choice[i]]
                        verdict = check_q6_criteria(src, dst, phi).ok
                        direct = (
                            check_pm_morphism(src, dst, phi).ok
                            and len(set(phi)) == dst.n
                        )
                        assert verdict == direct, (m, n, p, q, phi)

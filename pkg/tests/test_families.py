"""Tests for the constructed graph families and their validation invariants."""

from dataclasses import replace

import pytest

from tridecomp import (
    Augmentation,
    ConstructionUnavailable,
    Decomposition,
    DomainError,
    InvariantViolation,
    NotAFixture,
    apply_augmentation,
    degree_sequence,
    edge,
    epsilon_class_exact,
    epsilon_exact,
    fan,
    find_hamiltonian_cycle,
    hmp_construct,
    intermediate,
    is_maximal_outerplanar,
    kop_construct,
    lower_bound,
    mop_construct,
    sc2_tree_construct,
    sc2_tree_seed,
    sc3_construct,
    sf_fixture,
    trace_faces,
    validate_construction,
)


def test_validate_construction_rejects_tampering():
    base = mop_construct(4)
    validate_construction(base)
    with pytest.raises(InvariantViolation):
        validate_construction(replace(base, claimed_epsilon=base.claimed_epsilon + 3))
    bigger = Augmentation(base.augmentation.additions + (edge(0, 1),))
    with pytest.raises(InvariantViolation):
        validate_construction(
            replace(base, augmentation=bigger, claimed_epsilon=len(bigger))
        )
    with pytest.raises(InvariantViolation):
        validate_construction(
            replace(base, certificate=Decomposition(base.certificate.triangles[1:]))
        )
    with pytest.raises(InvariantViolation):
        validate_construction(
            replace(base, augmentation=Augmentation((edge(1, 3),)), claimed_epsilon=1)
        )


def test_mop_construct_all_small_orders():
    for n in list(range(3, 42)) + [60, 63, 64, 70, 80]:
        res = mop_construct(n)
        validate_construction(res)
        assert res.claimed_epsilon == n % 3
        assert res.graph.size() == 2 * n - 3
        assert res.outer_cycle == tuple(range(n))
        assert is_maximal_outerplanar(res.graph, res.outer_cycle)
    with pytest.raises(DomainError):
        mop_construct(2)


def test_mop_construct_attains_the_class_minimum():
    for n in range(3, 8):
        assert mop_construct(n).claimed_epsilon == epsilon_class_exact(n)[0]


def test_mop_construct_claim_is_exact():
    for n in range(3, 10):
        res = mop_construct(n)
        assert epsilon_exact(res.graph)[0] == res.claimed_epsilon


def test_fan_family():
    for n in range(3, 10):
        res = fan(n)
        validate_construction(res)
        assert res.claimed_epsilon == n - 3
        assert res.augmentation.additions == tuple(edge(0, i) for i in range(2, n - 1))
        assert is_maximal_outerplanar(res.graph, res.outer_cycle)
        assert len(res.certificate) == n - 2
    with pytest.raises(DomainError):
        fan(2)


def test_fan_needs_every_chord_doubled_under_cap():
    for n in range(4, 8):
        t, _, _ = epsilon_exact(fan(n).graph, max_copies_per_edge=1)
        assert t == n - 3


def test_intermediate_family_spans_the_ladder():
    for n in range(6, 11):
        for r in range((n - 3) // 3 + 1):
            res = intermediate(n, r)
            validate_construction(res)
            assert res.claimed_epsilon == (n % 3) + 3 * r
            assert res.claimed_epsilon <= n - 3
            assert res.parameters == {"n": n, "r": r}
            assert is_maximal_outerplanar(res.graph, res.outer_cycle)
    assert intermediate(6, 0).family == "intermediate"
    assert intermediate(6, 1).graph == fan(6).graph
    with pytest.raises(DomainError):
        intermediate(6, 2)
    with pytest.raises(DomainError):
        intermediate(8, -1)
    with pytest.raises(DomainError):
        intermediate(2, 0)


def test_intermediate_claim_is_exact():
    for n, r in [(6, 1), (7, 0), (7, 1), (8, 1), (9, 1), (10, 2)]:
        res = intermediate(n, r)
        assert epsilon_exact(res.graph)[0] == res.claimed_epsilon


def test_kop_family():
    for m, k in [(3, 1), (3, 4), (5, 2), (6, 2), (6, 3), (7, 2), (9, 1)]:
        res = kop_construct(m, k)
        validate_construction(res)
        assert res.claimed_epsilon == m % 3
        assert res.graph.order == m * k
        assert res.graph.size() == (2 * m - 3) + (k - 1) * 3 * m
        assert res.outer_cycle == tuple((k - 1) * m + i for i in range(m))
        for i in range(m):
            assert res.graph.has_edge(
                edge((k - 1) * m + i, (k - 1) * m + (i + 1) % m)
            )
    assert kop_construct(5, 1).graph == mop_construct(5).graph
    with pytest.raises(DomainError):
        kop_construct(2, 1)
    with pytest.raises(DomainError):
        kop_construct(3, 0)


def test_kop_outer_layer_peels_off():
    for m, k in [(3, 3), (5, 2), (6, 3), (7, 2)]:
        outer = kop_construct(m, k)
        inner = kop_construct(m, k - 1)
        cutoff = (k - 1) * m
        kept = [
            (e.u, e.v, mult)
            for e, mult in outer.graph.items()
            if e.v < cutoff
        ]
        assert kept == [(e.u, e.v, mult) for e, mult in inner.graph.items()]


def test_kop_claim_is_exact():
    for m, k in [(4, 2), (5, 2)]:
        res = kop_construct(m, k)
        assert epsilon_exact(res.graph)[0] == res.claimed_epsilon


def test_hmp_family():
    for n in [6, 8, 10, 12, 9, 11, 13]:
        res = hmp_construct(n)
        validate_construction(res)
        assert res.claimed_epsilon == 0
        assert len(res.augmentation) == 0
        assert res.graph.size() == 3 * n - 6
        assert all(d % 2 == 0 for d in degree_sequence(res.graph))
        assert find_hamiltonian_cycle(res.graph) is not None
        # the face list is a planar triangulation: 2n-4 faces, every edge
        # on exactly two of them, Euler count V - E + F = 2
        assert res.faces is not None and len(res.faces) == 2 * n - 4
        cover = {}
        for t in res.faces:
            for e in t.edges():
                cover[e] = cover.get(e, 0) + 1
        assert cover == {e: 2 for e in res.graph.edges()}
        assert res.graph.order - res.graph.size() + len(res.faces) == 2
    for n in [4, 5, 7]:
        with pytest.raises(ConstructionUnavailable):
            hmp_construct(n)


def test_sc2_tree_family():
    for n in [3, 6, 9, 12, 15, 18]:
        res = sc2_tree_construct(n)
        validate_construction(res)
        assert res.claimed_epsilon == 0
        assert res.graph.size() == 2 * n - 3
        assert len(res.certificate) == (2 * n - 3) // 3
        assert is_maximal_outerplanar(res.graph, res.outer_cycle)
    assert epsilon_exact(sc2_tree_construct(6).graph)[0] == 0
    for bad in [0, 5, 7]:
        with pytest.raises(DomainError):
            sc2_tree_construct(bad)


def test_sc2_tree_seeds():
    one = sc2_tree_seed(1)
    validate_construction(one)
    assert one.graph.order == 4 and one.claimed_epsilon == 1
    assert is_maximal_outerplanar(one.graph, one.outer_cycle)
    assert epsilon_exact(one.graph)[0] == 1
    two = sc2_tree_seed(2)
    validate_construction(two)
    assert two.graph.order == 5 and two.claimed_epsilon == 2
    assert is_maximal_outerplanar(two.graph, two.outer_cycle)
    assert epsilon_exact(two.graph)[0] == 2
    for bad in [0, 3]:
        with pytest.raises(DomainError):
            sc2_tree_seed(bad)


def test_sc3_family():
    for n in range(4, 10):
        res = sc3_construct(n)
        validate_construction(res)
        assert res.claimed_epsilon == 3
        assert len(res.augmentation) == 3
        assert res.graph.size() % 3 == 0
    with pytest.raises(DomainError):
        sc3_construct(3)


def test_sc3_claim_is_exact():
    for n in range(4, 9):
        res = sc3_construct(n)
        assert epsilon_exact(res.graph)[0] == 3
        assert lower_bound(res.graph).combined_lower_bound == 3


def test_sf_fixtures():
    sizes = {7: 17, 8: 19, 9: 21}
    augs = {7: 4, 8: 2, 9: 6}
    for n in (7, 8, 9):
        res = sf_fixture(n)
        validate_construction(res)
        assert res.graph.size() == sizes[n]
        assert len(res.augmentation) == augs[n]
        assert res.claimed_epsilon == augs[n]
        assert res.rotation is not None
        tr = trace_faces(res.rotation)
        assert tr.genus == 1
        assert tr.V == n and tr.E == sizes[n]
        assert any(set(face) == set(range(n)) for face in tr.faces)
    for bad in (6, 10):
        with pytest.raises(NotAFixture):
            sf_fixture(bad)


def test_sf_fixture_minimum_additions():
    # the drawn augmentations for orders 7 and 8 are minimum; the order-9
    # drawing uses six copies but three suffice
    assert epsilon_exact(sf_fixture(7).graph)[0] == 4
    assert epsilon_exact(sf_fixture(8).graph)[0] == 2
    t, aug, _ = epsilon_exact(sf_fixture(9).graph)
    assert t == 3
    assert aug.additions == (edge(0, 2), edge(0, 3), edge(3, 4))
    assert t <= sf_fixture(9).claimed_epsilon
    assert t % 3 == sf_fixture(9).claimed_epsilon % 3


def test_construction_graphs_are_fresh_objects():
    a = mop_construct(6)
    b = mop_construct(6)
    assert a.graph == b.graph
    assert a.certificate == b.certificate
    assert apply_augmentation(a.graph, a.augmentation) is not a.graph

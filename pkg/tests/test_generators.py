import pytest

from outersplit import (
    FamilySpec,
    complete_3tree,
    cycle,
    fan,
    generate,
    icosahedron,
    is_biconnected,
    is_outerplane,
    k4,
    named,
    octahedron,
    random_biconnected,
    random_triangulation,
    serialize_rot,
)
from outersplit.errors import CapExceeded, InfeasibleParameters, UnknownFamily


def test_3tree_counts():
    # stacking into every inner face triples the candidate faces:
    # n(d) = 4, 7, 16, 43
    for d, n in [(0, 4), (1, 7), (2, 16), (3, 43)]:
        g = complete_3tree(d)
        assert g.n == n
        assert g.m == 3 * n - 6
        assert len(g.faces) == 2 * n - 4
        assert is_biconnected(g)
        assert g.outer_face is not None


def test_3tree_last_generation_is_face_disjoint():
    # the vertices stacked last all have degree 3, and no face touches
    # two of them (d = 0 is the exception: all of k4 has degree 3)
    for d in (1, 2, 3):
        g = complete_3tree(d)
        leaves = {v for v in g.rotation if len(g.rotation[v]) == 3}
        assert len(leaves) == 3 ** d
        for f in g.faces:
            assert len(f.incident_vertices & leaves) <= 1


def test_3tree_guards():
    with pytest.raises(InfeasibleParameters):
        complete_3tree(-1)
    with pytest.raises(CapExceeded):
        complete_3tree(10)


def test_random_triangulation_is_maximal_planar():
    for n in range(4, 11):
        for seed in (0, 1, 2):
            g = random_triangulation(n, seed=seed)
            assert g.n == n
            assert g.m == 3 * n - 6
            assert len(g.faces) == 2 * n - 4
            assert is_biconnected(g)
            assert min(len(r) for r in g.rotation.values()) >= 3


def test_random_triangulation_smallest_case():
    g = random_triangulation(4, seed=5)
    assert g.n == 4 and g.m == 6
    with pytest.raises(InfeasibleParameters):
        random_triangulation(3)


def test_random_biconnected_hits_requested_size():
    for n, m, seed in [(5, 5, 0), (5, 7, 1), (6, 9, 2), (7, 10, 3),
                       (8, 18, 4), (9, 12, 5), (10, 24, 6), (12, 14, 7)]:
        g = random_biconnected(n, m, seed=seed)
        assert g.n == n and g.m == m
        assert is_biconnected(g)


def test_random_biconnected_cycle_edge_case():
    g = random_biconnected(6, 6, seed=0)
    assert all(len(r) == 2 for r in g.rotation.values())


def test_random_biconnected_range_checks():
    with pytest.raises(InfeasibleParameters):
        random_biconnected(5, 4, seed=0)  # below n
    with pytest.raises(InfeasibleParameters):
        random_biconnected(5, 10, seed=0)  # above 3n - 6
    with pytest.raises(InfeasibleParameters):
        random_biconnected(2, 2, seed=0)


def test_generators_are_deterministic():
    for spec in [FamilySpec(family="random_triangulation", n=8, seed=3),
                 FamilySpec(family="random_biconnected", n=8, m=12, seed=3),
                 FamilySpec(family="complete_3tree", d=2)]:
        a = serialize_rot(generate(spec))
        b = serialize_rot(generate(spec))
        assert a == b
    x = serialize_rot(random_triangulation(8, seed=3))
    y = serialize_rot(random_triangulation(8, seed=4))
    assert x != y


def test_platonic_solids():
    g = octahedron()
    assert g.n == 6 and g.m == 12 and len(g.faces) == 8
    assert all(len(r) == 4 for r in g.rotation.values())
    h = icosahedron()
    assert h.n == 12 and h.m == 30 and len(h.faces) == 20
    assert all(len(r) == 5 for r in h.rotation.values())
    for s in (g, h):
        assert is_biconnected(s)
        assert all(len(f) == 3 for f in s.faces)


def test_k4_shape():
    g = k4()
    assert g.n == 4 and g.m == 6 and len(g.faces) == 4
    assert g.outer_face == 0


def test_outerplane_families():
    for n in (3, 5, 8):
        assert is_outerplane(cycle(n))
    for n in (3, 4, 7):
        g = fan(n)
        assert g.n == n + 1 and g.m == 2 * n - 1
        assert is_outerplane(g)
    with pytest.raises(InfeasibleParameters):
        cycle(2)
    with pytest.raises(InfeasibleParameters):
        fan(2)


def test_named_dispatch():
    assert named(FamilySpec(family="k4")).n == 4
    assert named(FamilySpec(family="octahedron")).n == 6
    assert named(FamilySpec(family="icosahedron")).n == 12
    assert named(FamilySpec(family="cycle", n=5)).n == 5
    assert named(FamilySpec(family="fan", n=5)).n == 6
    with pytest.raises(UnknownFamily):
        named(FamilySpec(family="petersen"))
    with pytest.raises(InfeasibleParameters):
        named(FamilySpec(family="cycle"))  # n missing


def test_generate_dispatch():
    assert generate(FamilySpec(family="complete_3tree", d=1)).n == 7
    assert generate(FamilySpec(family="random_triangulation", n=6)).n == 6
    assert generate(FamilySpec(family="random_biconnected", n=6, m=8)).m == 8
    assert generate(FamilySpec(family="k4")).n == 4
    with pytest.raises(InfeasibleParameters):
        generate(FamilySpec(family="random_biconnected", n=6))  # m missing

from fractions import Fraction

import pytest

from outersplit import (
    build,
    complete_3tree,
    cycle,
    dual_girth,
    icosahedron,
    k4,
    lower_bound_3tree,
    lower_bound_generic,
    octahedron,
    random_triangulation,
    report,
    solve_osn,
    upper_bound,
    violations,
)
from outersplit.errors import NotMaximalPlanar


def test_upper_bound_by_min_degree():
    assert upper_bound(k4()) == Fraction(1, 2)
    assert upper_bound(octahedron()) == Fraction(5, 3)
    assert upper_bound(icosahedron()) == Fraction(5)
    assert upper_bound(complete_3tree(1)) == Fraction(11, 4)


def test_upper_bound_rejects_non_triangulations():
    with pytest.raises(NotMaximalPlanar):
        upper_bound(cycle(5))
    # the triangle has 3n - 6 edges but minimum degree 2
    tri = build({"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")})
    with pytest.raises(NotMaximalPlanar):
        upper_bound(tri)


def test_lower_bounds():
    assert lower_bound_generic(3) == 0
    assert lower_bound_generic(7) == 2
    assert lower_bound_generic(21) == 9
    assert lower_bound_3tree(0) == 0
    assert lower_bound_3tree(1) == 2
    assert lower_bound_3tree(2) == 8


def test_dual_girth_values():
    tri = build({"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")})
    assert dual_girth(tri) == 2
    assert dual_girth(k4()) == 3
    assert dual_girth(octahedron()) == 4
    assert dual_girth(icosahedron()) == 5
    assert dual_girth(complete_3tree(2)) == 3


def test_dual_girth_equals_min_degree_on_triangulations():
    for n, seed in [(6, 0), (7, 1), (8, 2), (9, 3), (10, 4)]:
        g = random_triangulation(n, seed=seed)
        dmin = min(len(r) for r in g.rotation.values())
        assert dual_girth(g) == dmin


def test_report_fields():
    rep = report(complete_3tree(1), osn=2, tree_depth=1)
    assert rep.n == 7
    assert rep.min_degree == 3
    assert rep.lower_generic == Fraction(2)
    assert rep.lower_family == Fraction(2)
    assert rep.upper == Fraction(11, 4)
    assert rep.osn == 2
    assert violations(rep) == ()


def test_report_without_osn_never_flags():
    assert violations(report(k4())) == ()
    assert report(cycle(5)).upper is None


def test_small_triangulations_beat_the_bound_advisorily():
    rep4 = report(k4(), osn=solve_osn(k4()).osn)
    flagged = violations(rep4)
    assert len(flagged) == 1
    assert flagged[0].startswith("advisory:")
    rep6 = report(octahedron(), osn=solve_osn(octahedron()).osn)
    flagged6 = violations(rep6)
    assert len(flagged6) == 1
    assert flagged6[0].startswith("advisory:")


def test_large_solids_respect_all_bounds():
    rep = report(icosahedron(), osn=solve_osn(icosahedron()).osn)
    assert violations(rep) == ()
    assert rep.osn == 5


def test_lower_violation_is_always_hard():
    rep = report(icosahedron(), osn=1)
    flagged = violations(rep)
    assert any("below generic lower bound" in v for v in flagged)
    assert not any(v.startswith("advisory") and "below" in v
                   for v in flagged)

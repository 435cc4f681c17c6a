import pytest

from outersplit import (
    FaceCover,
    SplitOp,
    SplitSequence,
    build,
    extract_cover,
    face_cover,
    is_outerplane,
    merge_faces_at_vertex,
    realize_cover,
    replay,
    split_vertex,
)
from outersplit.errors import (
    DanglingVertex,
    InvalidCover,
    NotIncident,
    NotOuterplane,
    ReplayFailure,
    SameFace,
)


def k4():
    return build({
        "a": ("b", "c", "d"),
        "b": ("c", "a", "d"),
        "c": ("a", "b", "d"),
        "d": ("a", "c", "b"),
    }, outer_face=0)


def prism(k):
    rot = {}
    for i in range(k):
        rot[f"a{i}"] = (f"a{(i + 1) % k}", f"a{(i - 1) % k}", f"b{i}")
        rot[f"b{i}"] = (f"b{(i - 1) % k}", f"b{(i + 1) % k}", f"a{i}")
    return build(rot)


def cyclic_arcs(before, rot_1, rot_2):
    """True iff rot_1 and rot_2 partition before into two contiguous
    cyclic intervals."""
    n = len(before)
    doubled = before + before
    def is_arc(arc):
        if not arc:
            return False
        for i in range(n):
            if tuple(doubled[i:i + len(arc)]) == tuple(arc):
                return True
        return False
    return (sorted(rot_1 + rot_2) == sorted(before)
            and is_arc(rot_1) and is_arc(rot_2))


def test_split_counts_and_names():
    g = k4()
    g2, op = split_vertex(g, "d", 0, 2)
    assert op == SplitOp(vertex="d", face_a=0, face_b=2,
                         copy_1="d.1", copy_2="d.2")
    assert g2.n == g.n + 1
    assert g2.m == g.m
    assert len(g2.faces) == len(g.faces) - 1
    assert "d" not in g2.rotation


def test_split_arc_convention():
    # frozen from the implementation after checking it by hand: the copy
    # keeping the rotation segment that starts at face_a's corner is d.2
    g2, _ = split_vertex(k4(), "d", 0, 2)
    assert g2.rotation["d.1"] == ("c", "b")
    assert g2.rotation["d.2"] == ("a",)
    assert cyclic_arcs(("a", "c", "b"), g2.rotation["d.1"],
                       g2.rotation["d.2"])


def test_split_arcs_are_contiguous_everywhere():
    g = prism(4)
    for v in list(g.rotation):
        fids = sorted({g.face_of_slot((u, v)) for u in g.rotation[v]})
        for i, fa in enumerate(fids):
            for fb in fids[i + 1:]:
                g2, op = split_vertex(g, v, fa, fb)
                assert cyclic_arcs(g.rotation[v],
                                   g2.rotation[op.copy_1],
                                   g2.rotation[op.copy_2])
                assert g2.n - g2.m + len(g2.faces) == 2


def test_split_rejects_same_face():
    with pytest.raises(SameFace):
        split_vertex(k4(), "d", 0, 0)


def test_split_rejects_non_incident_face():
    # face 1 is the only face missing d
    with pytest.raises(NotIncident):
        split_vertex(k4(), "d", 0, 1)
    with pytest.raises(NotIncident):
        split_vertex(k4(), "zz", 0, 1)


def test_split_rejects_degree_one_vertex():
    # triangle with a pendant hanging off a, so two faces exist
    g = build({"a": ("b", "c", "d"), "b": ("c", "a"), "c": ("a", "b"),
               "d": ("a",)})
    assert len(g.faces) == 2
    with pytest.raises(DanglingVertex):
        split_vertex(g, "d", 0, 1)


def test_merge_faces_at_vertex():
    g = k4()
    g2, ops = merge_faces_at_vertex(g, "d", [0, 2, 3])
    assert [(o.vertex, o.copy_1, o.copy_2) for o in ops] == [
        ("d", "d.1", "d.2"), ("d.1", "d.1.1", "d.1.2")]
    assert len(g2.faces) == 2
    assert is_outerplane(g2)
    assert g2.n == 6


def test_face_cover_certificate():
    cover = face_cover(k4(), [0, 1])
    assert cover.faces == frozenset((0, 1))
    assert cover.root in (0, 1)
    # the tree must connect both faces through shared vertices
    assert len(cover.tree) >= 2


def test_face_cover_rejects_bad_input():
    g = k4()
    with pytest.raises(InvalidCover):
        face_cover(g, [])
    with pytest.raises(InvalidCover):
        face_cover(g, [0, 9])
    with pytest.raises(InvalidCover):
        face_cover(g, [0])  # misses c
    # prism triangles cover everything but never touch
    p = prism(3)
    tri = [f.id for f in p.faces if len(f) == 3]
    assert len(tri) == 2
    with pytest.raises(InvalidCover):
        face_cover(p, tri)


def test_realize_cover_k4():
    g = k4()
    cover = face_cover(g, [0, 1])
    seq = realize_cover(g, cover)
    assert len(seq) == 1
    assert seq.ops[0].vertex == "a"
    final = replay(g, seq)
    assert is_outerplane(final)
    assert seq.origin == {"a.1": "a", "a.2": "a"}


def test_realize_cover_is_size_minus_one():
    g = prism(3)
    quads = sorted(f.id for f in g.faces if len(f) == 4)
    cover = face_cover(g, quads)
    seq = realize_cover(g, cover)
    assert len(seq) == len(quads) - 1
    assert is_outerplane(replay(g, seq))


def test_zero_split_cover():
    g = build({"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")},
              outer_face=0)
    seq = realize_cover(g, face_cover(g, [0]))
    assert len(seq) == 0
    assert replay(g, seq) is not None


def test_extract_cover_round_trip():
    g = k4()
    for faces in ([0, 1], [0, 2], [1, 3], [0, 2, 3]):
        cover = face_cover(g, faces)
        seq = realize_cover(g, cover)
        assert extract_cover(g, seq).faces == frozenset(faces)


def test_extract_cover_requires_outerplane_result():
    with pytest.raises(NotOuterplane):
        extract_cover(k4(), SplitSequence(ops=(), origin={}))


def test_replay_checks_copy_names():
    g = k4()
    seq = realize_cover(g, face_cover(g, [0, 1]))
    renamed = SplitSequence(
        ops=(SplitOp(vertex="a", face_a=0, face_b=1,
                     copy_1="x.1", copy_2="x.2"),),
        origin={"x.1": "a", "x.2": "a"})
    with pytest.raises(ReplayFailure):
        replay(g, renamed)
    bad_face = SplitSequence(
        ops=(SplitOp(vertex="a", face_a=0, face_b=0,
                     copy_1="a.1", copy_2="a.2"),),
        origin=seq.origin)
    with pytest.raises(ReplayFailure):
        replay(g, bad_face)


def test_split_bookkeeping_step_by_step():
    g = prism(5)
    cover = face_cover(g, sorted(f.id for f in g.faces if len(f) == 4))
    seq = realize_cover(g, cover)
    cur = g
    for op in seq.ops:
        nxt = replay(cur, SplitSequence(ops=(op,), origin={}))
        assert nxt.n == cur.n + 1
        assert nxt.m == cur.m
        assert len(nxt.faces) == len(cur.faces) - 1
        cur = nxt
    assert is_outerplane(cur)

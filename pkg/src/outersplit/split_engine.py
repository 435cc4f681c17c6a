"""Embedding-preserving vertex splits and their bookkeeping.

A split replaces a vertex v by two copies and distributes the clockwise
neighbor arc between them.  The cut points are two rotation gaps of v: the
corner of face_a at v and the corner of face_b at v.  The two faces merge
into one; every other face keeps its boundary up to renaming v into one of
its copies.  One split therefore adds a vertex, keeps the edge count, and
removes exactly one face.

merge_faces_at_vertex chains splits around one vertex so that a whole set
of faces incident to it becomes a single face.  realize_cover walks a
spanning tree of a connected face cover and applies such merges root to
leaf, producing |cover| - 1 splits that leave the graph outerplane.
extract_cover is the reverse direction: it replays a split sequence while
tracking which original faces were merged, and reads the cover off the
final all-incident face.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    CertificateFailure,
    CopyNameCollision,
    DanglingVertex,
    InvalidCover,
    NotIncident,
    NotOuterplane,
    OutersplitError,
    ReplayFailure,
    SameFace,
)
from .plane_graph import (
    FaceId,
    PlaneGraph,
    Vertex,
    incidence_graph,
    is_outerplane,
    outerplane_face,
)


@dataclass(frozen=True)
class SplitOp:
    """One vertex split, recorded with the face ids of the graph it was
    applied to (ids shift after every split, so ops only make sense in
    sequence order)."""

    vertex: Vertex
    face_a: FaceId
    face_b: FaceId
    copy_1: Vertex
    copy_2: Vertex


@dataclass(frozen=True)
class SplitSequence:
    """Ordered splits plus the map from every created copy back to the
    vertex of the original graph it descends from."""

    ops: tuple[SplitOp, ...]
    origin: Mapping[Vertex, Vertex]

    def __len__(self) -> int:
        return len(self.ops)


@dataclass(frozen=True)
class FaceCover:
    """A set of faces covering every vertex, with a spanning tree of the
    induced incidence subgraph as the connectivity certificate.

    tree holds bipartite (vertex, face) edges; root is the face the tree
    is rooted at."""

    faces: frozenset[FaceId]
    tree: tuple[tuple[Vertex, FaceId], ...]
    root: FaceId


# -- the split primitive -----------------------------------------------------

def _cyclic_slice(items: tuple, start: int, end: int) -> tuple:
    # inclusive slice from start to end, wrapping
    d = len(items)
    if start <= end:
        return items[start:end + 1]
    return items[start:] + items[:end + 1]


def _corner_gap(g: PlaneGraph, v: Vertex, fid: FaceId) -> int:
    """Rotation gap index of the first corner of face fid at v.

    Gap i sits between rotation[v][i] and rotation[v][i+1]; a corner of a
    face at v occupies exactly one gap.  Walk order makes the choice
    deterministic when the face touches v more than once."""
    if not 0 <= fid < len(g.faces):
        raise NotIncident(f"face {fid} does not exist")
    for x, y in g.faces[fid].boundary:
        if y == v:
            return g.rotation[v].index(x)
    raise NotIncident(f"vertex {v!r} is not on the boundary of face {fid}")


def _split_at_gaps(g: PlaneGraph, v: Vertex, gap_a: int, gap_b: int,
                   want_map: bool = True):
    """Split v at two rotation gaps.  Returns (graph, op, face_map) where
    face_map sends every old face id to its id in the new graph; the two
    faces owning the gaps map to the same merged id."""
    rot = g.rotation[v]
    d = len(rot)
    copy_1 = f"{v}.1"
    copy_2 = f"{v}.2"
    if copy_1 in g.rotation or copy_2 in g.rotation:
        raise CopyNameCollision(
            f"copy name {copy_1!r} or {copy_2!r} already taken")

    # Arc conventions follow the corner picture: with face_a's corner in
    # gap_a and face_b's in gap_b, copy_2 takes the clockwise arc right
    # after gap_a up to gap_b's entry, copy_1 the rest.
    arc_2 = _cyclic_slice(rot, (gap_a + 1) % d, gap_b)
    arc_1 = _cyclic_slice(rot, (gap_b + 1) % d, gap_a)
    owner = {w: copy_2 for w in arc_2}
    owner.update({w: copy_1 for w in arc_1})

    new_rot: dict[Vertex, tuple[Vertex, ...]] = dict(g.rotation)
    del new_rot[v]
    new_rot[copy_1] = arc_1
    new_rot[copy_2] = arc_2
    for w in rot:
        new_rot[w] = tuple(owner[w] if x == v else x for x in new_rot[w])

    face_a = g.face_of_slot((rot[gap_a], v))
    face_b = g.face_of_slot((rot[gap_b], v))
    op = SplitOp(vertex=v, face_a=face_a, face_b=face_b,
                 copy_1=copy_1, copy_2=copy_2)

    result = PlaneGraph(rotation=new_rot, outer_face=None)
    if not want_map and g.outer_face is None:
        return result, op, None

    def rename(slot):
        x, y = slot
        if x == v:
            return (owner[y], y)
        if y == v:
            return (x, owner[x])
        return slot

    face_map: dict[FaceId, FaceId] = {}
    merged = result.face_of_slot((rot[gap_a], copy_1))
    for face in g.faces:
        if face.id == face_a or face.id == face_b:
            face_map[face.id] = merged
        else:
            face_map[face.id] = result.face_of_slot(rename(face.boundary[0]))
    if len(set(face_map.values())) != len(g.faces) - 1:
        raise AssertionError("split bookkeeping lost a face")

    if g.outer_face is not None:
        result = PlaneGraph(rotation=new_rot,
                            outer_face=face_map[g.outer_face])
    return result, op, face_map


def split_vertex(g: PlaneGraph, v: Vertex, face_a: FaceId,
                 face_b: FaceId) -> tuple[PlaneGraph, SplitOp]:
    """Split v with respect to two distinct incident faces.

    The faces merge into one; the result has one more vertex, the same
    edges, and one face fewer.  Copies are named v.1 and v.2."""
    g2, op, _ = _split_with_map(g, v, face_a, face_b)
    return g2, op


def _split_with_map(g: PlaneGraph, v: Vertex, face_a: FaceId,
                    face_b: FaceId):
    if v not in g.rotation:
        raise NotIncident(f"vertex {v!r} does not exist")
    if face_a == face_b:
        raise SameFace(f"split needs two distinct faces, got {face_a} twice")
    if len(g.rotation[v]) < 2:
        raise DanglingVertex(
            f"vertex {v!r} has degree {len(g.rotation[v])}, cannot split")
    gap_a = _corner_gap(g, v, face_a)
    gap_b = _corner_gap(g, v, face_b)
    return _split_at_gaps(g, v, gap_a, gap_b)


# -- merging several faces at one vertex --------------------------------------

def merge_faces_at_vertex(g: PlaneGraph, v: Vertex,
                          faces: Iterable[FaceId]
                          ) -> tuple[PlaneGraph, list[SplitOp]]:
    """Merge all given faces incident to v into one face using exactly
    len(faces) - 1 splits, iterating clockwise around v."""
    g2, ops, _ = _merge_with_map(g, v, faces)
    return g2, ops


def _merge_with_map(g: PlaneGraph, v: Vertex, faces: Iterable[FaceId]):
    wanted = sorted(set(faces))
    if v not in g.rotation:
        raise NotIncident(f"vertex {v!r} does not exist")
    identity = {f.id: f.id for f in g.faces}
    for fid in wanted:
        _corner_gap(g, v, fid)  # raises NotIncident when it has no corner
    if len(wanted) <= 1:
        return g, [], identity

    # Faces of the set in clockwise order of their first corner around v,
    # rotated so the smallest id leads.
    rot = g.rotation[v]
    ordered: list[FaceId] = []
    for i in range(len(rot)):
        fid = g.face_of_slot((rot[i], v))
        if fid in wanted and fid not in ordered:
            ordered.append(fid)
    lead = ordered.index(min(wanted))
    ordered = ordered[lead:] + ordered[:lead]

    cur_graph = g
    cur_v = v
    total_map = identity
    merged_cur = ordered[0]
    ops: list[SplitOp] = []
    for fid in ordered[1:]:
        gap_a = _corner_gap(cur_graph, cur_v, merged_cur)
        gap_b = _corner_gap(cur_graph, cur_v, total_map[fid])
        cur_graph, op, fmap = _split_at_gaps(cur_graph, cur_v, gap_a, gap_b)
        ops.append(op)
        total_map = {orig: fmap[t] for orig, t in total_map.items()}
        merged_cur = total_map[fid]
        # the arc holding the still-unmerged corners always lands in copy 1
        cur_v = op.copy_1
    return cur_graph, ops, total_map


# -- covers and their realization ---------------------------------------------

def _cover_tree(g: PlaneGraph, faces: frozenset[FaceId]):
    """BFS spanning tree of the incidence subgraph on faces plus all
    vertices; root is the smallest face id, neighbors explored in sorted
    order.  Returns (tree_edges, root, vertex_discovery_order) or None when
    the subgraph is disconnected."""
    inc = incidence_graph(g)
    root = min(faces)
    seen_f = {root}
    seen_v: set[Vertex] = set()
    v_order: list[Vertex] = []
    tree: list[tuple[Vertex, FaceId]] = []
    queue: deque = deque([("f", root)])
    while queue:
        kind, node = queue.popleft()
        if kind == "f":
            for v in inc.vertices_of(node):
                if v not in seen_v:
                    seen_v.add(v)
                    v_order.append(v)
                    tree.append((v, node))
                    queue.append(("v", v))
        else:
            for f in inc.faces_of(node):
                if f in faces and f not in seen_f:
                    seen_f.add(f)
                    tree.append((node, f))
                    queue.append(("f", f))
    if len(seen_f) != len(faces) or len(seen_v) != g.n:
        return None
    return tuple(tree), root, v_order


def face_cover(g: PlaneGraph, faces: Iterable[FaceId]) -> FaceCover:
    """Validate a face set as a connected face cover and certify it with
    a spanning tree.  Raises InvalidCover otherwise."""
    fset = frozenset(faces)
    if not fset:
        raise InvalidCover("a cover needs at least one face")
    for fid in fset:
        if not 0 <= fid < len(g.faces):
            raise InvalidCover(f"face {fid} does not exist")
    covered: set[Vertex] = set()
    for fid in fset:
        covered |= g.faces[fid].incident_vertices
    missing = set(g.rotation) - covered
    if missing:
        raise InvalidCover(
            f"vertices not covered: {sorted(missing)[:5]}")
    built = _cover_tree(g, fset)
    if built is None:
        raise InvalidCover("incidence subgraph of the cover is disconnected")
    tree, root, _ = built
    return FaceCover(faces=fset, tree=tree, root=root)


def realize_cover(g: PlaneGraph, cover: FaceCover) -> SplitSequence:
    """Turn a connected face cover of size k+1 into exactly k splits whose
    replay leaves the graph outerplane.

    Walks the cover's spanning tree root to leaf and merges, at every
    vertex, the faces joined to it by tree edges.  Tree leaves are
    vertices of tree degree one and are never split."""
    seq, _ = _realize(g, cover)
    return seq


def _realize(g: PlaneGraph, cover: FaceCover):
    fset = frozenset(cover.faces)
    if not fset:
        raise InvalidCover("a cover needs at least one face")
    covered: set[Vertex] = set()
    for fid in fset:
        if not 0 <= fid < len(g.faces):
            raise InvalidCover(f"face {fid} does not exist")
        covered |= g.faces[fid].incident_vertices
    if covered != set(g.rotation):
        raise InvalidCover(
            f"vertices not covered: {sorted(set(g.rotation) - covered)[:5]}")
    built = _cover_tree(g, fset)
    if built is None:
        raise InvalidCover("incidence subgraph of the cover is disconnected")

    tree, _root, v_order = built
    tree_faces: dict[Vertex, list[FaceId]] = {}
    for v, f in tree:
        tree_faces.setdefault(v, []).append(f)

    cur = g
    total_map = {f.id: f.id for f in g.faces}
    ops: list[SplitOp] = []
    origin: dict[Vertex, Vertex] = {}
    for v in v_order:
        group = sorted(total_map[f] for f in tree_faces[v])
        if len(group) < 2:
            continue
        cur, new_ops, fmap = _merge_with_map(cur, v, group)
        for op in new_ops:
            base = origin.get(op.vertex, op.vertex)
            origin[op.copy_1] = base
            origin[op.copy_2] = base
            ops.append(op)
        total_map = {orig: fmap[t] for orig, t in total_map.items()}

    if len(ops) != len(fset) - 1:
        raise AssertionError(
            f"realization used {len(ops)} splits for a cover of "
            f"{len(fset)} faces")
    if not is_outerplane(cur):
        raise AssertionError("realized graph is not outerplane")
    return SplitSequence(ops=tuple(ops), origin=origin), cur


# -- replay and cover extraction ----------------------------------------------

def replay(g: PlaneGraph, seq: SplitSequence) -> PlaneGraph:
    """Apply a recorded split sequence step by step; ReplayFailure when a
    step does not apply or produces different copy names."""
    cur, _ = _replay_with_provenance(g, seq)
    return cur


def _replay_with_provenance(g: PlaneGraph, seq: SplitSequence):
    cur = g
    prov: dict[FaceId, frozenset[FaceId]] = {
        f.id: frozenset([f.id]) for f in g.faces}
    for step, op in enumerate(seq.ops):
        try:
            cur, applied, fmap = _split_with_map(
                cur, op.vertex, op.face_a, op.face_b)
        except OutersplitError as exc:
            raise ReplayFailure(f"step {step} ({op}): {exc}") from exc
        if (applied.copy_1, applied.copy_2) != (op.copy_1, op.copy_2):
            raise ReplayFailure(
                f"step {step}: expected copies {op.copy_1}/{op.copy_2}, "
                f"got {applied.copy_1}/{applied.copy_2}")
        new_prov: dict[FaceId, frozenset[FaceId]] = {}
        for old, originals in prov.items():
            target = fmap[old]
            if target in new_prov:
                new_prov[target] = new_prov[target] | originals
            else:
                new_prov[target] = originals
        prov = new_prov
    return cur, prov


def extract_cover(g: PlaneGraph, seq: SplitSequence) -> FaceCover:
    """Recover the connected face cover realized by a split sequence.

    Replays the sequence, finds the face incident to every vertex of the
    result, and maps it back to the original faces merged into it.  The
    cover has at most len(seq) + 1 faces."""
    final, prov = _replay_with_provenance(g, seq)
    qualifying = outerplane_face(final)
    if qualifying is None:
        raise NotOuterplane("replayed graph has no all-incident face")
    originals = prov[qualifying]
    try:
        return face_cover(g, originals)
    except InvalidCover as exc:
        raise CertificateFailure(
            f"extracted face set is not a connected cover: {exc}") from exc

"""Plane graphs stored as rotation systems.

A plane graph is a map from each vertex to the cyclic clockwise order of its
neighbors.  That map is the single source of truth for the embedding: faces,
the dual and the face-vertex incidence graph are all derived from it and
never stored independently.  The embedding lives on the sphere, so the outer
face is a designation (an ordinary face id picked by the caller), not a
structural property.

Faces are traced through directed edge slots.  The slot (u, v) is the side
of edge {u, v} walked from u to v; each slot belongs to exactly one face,
and the walk continues from (u, v) to (v, w) where w follows u in the
clockwise rotation at v.  Face ids are assigned deterministically by sorting
the walks by their lexicographically smallest slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    AsymmetricRotation,
    Disconnected,
    NotPlanar,
    OuterFaceUnset,
    ParallelEdge,
    SelfLoop,
)

Vertex = str
FaceId = int
Slot = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Face:
    """One face of a plane graph.

    boundary holds the facial walk as directed slots, starting at the
    lexicographically smallest slot.  A degree-1 vertex contributes a slot
    whose edge the walk traverses once in each direction.
    """

    id: FaceId
    boundary: tuple[Slot, ...]
    incident_vertices: frozenset[Vertex]

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Immutable rotation system plus an optional outer-face designation.

    rotation maps each vertex to the tuple of its neighbors in clockwise
    order.  Instances compare by identity; use canonical_key() to compare
    embeddings structurally.
    """

    rotation: Mapping[Vertex, tuple[Vertex, ...]]
    outer_face: FaceId | None = None

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted(self.rotation))

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation.values()) // 2

    def degree(self, v: Vertex) -> int:
        return len(self.rotation[v])

    def edges(self) -> tuple[Slot, ...]:
        """Undirected edges as sorted (min, max) pairs, sorted overall."""
        out = set()
        for v, nbrs in self.rotation.items():
            for u in nbrs:
                out.add((u, v) if u < v else (v, u))
        return tuple(sorted(out))

    @cached_property
    def _face_data(self) -> tuple[tuple[Face, ...], dict[Slot, FaceId]]:
        return _trace_faces(self.rotation)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._face_data[0]

    def face_of_slot(self, slot: Slot) -> FaceId:
        return self._face_data[1][slot]


def _trace_faces(rotation: Mapping[Vertex, tuple[Vertex, ...]]):
    succ: dict[Slot, Vertex] = {}
    for v, nbrs in rotation.items():
        d = len(nbrs)
        for i, u in enumerate(nbrs):
            succ[(u, v)] = nbrs[(i + 1) % d]

    faces: list[Face] = []
    slot_face: dict[Slot, FaceId] = {}
    seen: set[Slot] = set()
    # Slots are consumed in sorted order, so every walk starts at its own
    # lexicographically smallest slot and face ids come out sorted.
    for start in sorted(succ):
        if start in seen:
            continue
        fid = len(faces)
        walk: list[Slot] = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            slot_face[cur] = fid
            u, v = cur
            cur = (v, succ[(u, v)])
        if cur != start:
            raise NotPlanar("face walk did not close on its start slot")
        faces.append(
            Face(
                id=fid,
                boundary=tuple(walk),
                incident_vertices=frozenset(u for u, _ in walk),
            )
        )
    return tuple(faces), slot_face


def build(adjacency: Mapping[Vertex, Iterable[Vertex]],
          outer_face: FaceId | None = None) -> PlaneGraph:
    """Validate a rotation system and wrap it in a PlaneGraph.

    The neighbor order of each vertex is kept exactly as given (clockwise).
    Raises AsymmetricRotation, SelfLoop, ParallelEdge, Disconnected or
    NotPlanar when the map does not describe a connected sphere embedding.
    """
    rotation: dict[Vertex, tuple[Vertex, ...]] = {}
    for v, nbrs in adjacency.items():
        rotation[v] = tuple(nbrs)

    for v, nbrs in rotation.items():
        seen_nbrs = set()
        for u in nbrs:
            if u == v:
                raise SelfLoop(f"vertex {v!r} lists itself")
            if u in seen_nbrs:
                raise ParallelEdge(f"vertex {v!r} lists {u!r} twice")
            seen_nbrs.add(u)
            if u not in rotation:
                raise AsymmetricRotation(f"{v!r} lists unknown vertex {u!r}")
            if v not in rotation[u]:
                raise AsymmetricRotation(
                    f"{v!r} lists {u!r} but {u!r} does not list {v!r}")

    if rotation and not _connected(rotation):
        raise Disconnected("rotation system describes a disconnected graph")

    g = PlaneGraph(rotation=rotation, outer_face=None)
    n = g.n
    m = g.m
    if m > 0:
        f = len(g.faces)  # also raises NotPlanar on a non-closing walk
        if n - m + f != 2:
            raise NotPlanar(
                f"V - E + F = {n - m + f}, not 2: rotation system does not "
                "embed in the sphere")
    if outer_face is not None:
        return with_outer_face(g, outer_face)
    return g


def _connected(rotation: Mapping[Vertex, tuple[Vertex, ...]]) -> bool:
    start = next(iter(rotation))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in rotation[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rotation)


def with_outer_face(g: PlaneGraph, face_id: FaceId) -> PlaneGraph:
    """Return the same embedding with face_id designated as outer."""
    if not 0 <= face_id < len(g.faces):
        raise OuterFaceUnset(
            f"face {face_id} does not exist (graph has {len(g.faces)} faces)")
    return PlaneGraph(rotation=g.rotation, outer_face=face_id)


def extract_faces(g: PlaneGraph) -> tuple[Face, ...]:
    """All faces of the embedding in deterministic id order."""
    return g.faces


def canonical_key(g: PlaneGraph):
    """Hashable structural key: two graphs with equal keys are the same
    labeled embedding (outer-face designation included)."""
    return (tuple(sorted(g.rotation.items())), g.outer_face)


@dataclass(frozen=True)
class DualGraph:
    """Multigraph on face ids with one edge per primal edge.

    edges holds unordered (min, max) pairs, sorted; two faces sharing k
    primal edges appear as k parallel pairs.  A self-loop (f, f) appears
    exactly when the primal edge is a bridge.
    """

    nodes: tuple[FaceId, ...]
    edges: tuple[tuple[FaceId, FaceId], ...]
    outer_node: FaceId | None = None

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> dict[FaceId, int]:
        deg = {f: 0 for f in self.nodes}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def has_self_loop(self) -> bool:
        return any(a == b for a, b in self.edges)


def dual(g: PlaneGraph) -> DualGraph:
    """Dual multigraph of the embedding; needs a designated outer face."""
    if g.outer_face is None:
        raise OuterFaceUnset("dual graph needs a designated outer face")
    return _dual_of(g, outer=g.outer_face)


def _dual_of(g: PlaneGraph, outer: FaceId | None) -> DualGraph:
    edges = []
    for u, v in g.edges():
        a = g.face_of_slot((u, v))
        b = g.face_of_slot((v, u))
        edges.append((a, b) if a <= b else (b, a))
    return DualGraph(
        nodes=tuple(f.id for f in g.faces),
        edges=tuple(sorted(edges)),
        outer_node=outer,
    )


def weak_dual(g: PlaneGraph) -> DualGraph:
    """Dual with the outer face node (and its edges) removed."""
    full = dual(g)
    keep = tuple(f for f in full.nodes if f != full.outer_node)
    edges = tuple(e for e in full.edges if full.outer_node not in e)
    return DualGraph(nodes=keep, edges=edges, outer_node=None)


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite vertex-face incidence graph of a plane graph."""

    vertices: tuple[Vertex, ...]
    faces: tuple[FaceId, ...]
    edges: tuple[tuple[Vertex, FaceId], ...]

    @cached_property
    def _by_vertex(self) -> dict[Vertex, tuple[FaceId, ...]]:
        out: dict[Vertex, list[FaceId]] = {v: [] for v in self.vertices}
        for v, f in self.edges:
            out[v].append(f)
        return {v: tuple(sorted(fs)) for v, fs in out.items()}

    @cached_property
    def _by_face(self) -> dict[FaceId, tuple[Vertex, ...]]:
        out: dict[FaceId, list[Vertex]] = {f: [] for f in self.faces}
        for v, f in self.edges:
            out[f].append(v)
        return {f: tuple(sorted(vs)) for f, vs in out.items()}

    def faces_of(self, v: Vertex) -> tuple[FaceId, ...]:
        return self._by_vertex[v]

    def vertices_of(self, f: FaceId) -> tuple[Vertex, ...]:
        return self._by_face[f]


def incidence_graph(g: PlaneGraph) -> IncidenceGraph:
    """Vertex-face incidences of the embedding, sorted deterministically."""
    edges = []
    for face in g.faces:
        for v in face.incident_vertices:
            edges.append((v, face.id))
    return IncidenceGraph(
        vertices=g.vertices,
        faces=tuple(f.id for f in g.faces),
        edges=tuple(sorted(edges)),
    )


def is_biconnected(g: PlaneGraph) -> bool:
    """True when the graph has at least 3 vertices, is connected and has
    no cut vertex (iterative articulation-point scan)."""
    if g.n < 3:
        return False
    rotation = g.rotation
    start = next(iter(rotation))
    index: dict[Vertex, int] = {}
    low: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {start: None}
    counter = 0
    root_children = 0
    stack: list[tuple[Vertex, int]] = [(start, 0)]
    while stack:
        v, i = stack.pop()
        if i == 0:
            index[v] = low[v] = counter
            counter += 1
        if i < len(rotation[v]):
            stack.append((v, i + 1))
            u = rotation[v][i]
            if u == parent[v]:
                continue
            if u in index:
                low[v] = min(low[v], index[u])
            else:
                parent[u] = v
                if v == start:
                    root_children += 1
                stack.append((u, 0))
        else:
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if p != start and low[v] >= index[p]:
                    return False
    if len(index) != g.n:
        return False
    return root_children <= 1


def outerplane_face(g: PlaneGraph) -> FaceId | None:
    """Face incident to every vertex: the designated outer face when it
    qualifies, else the smallest qualifying id, else None."""
    all_vertices = frozenset(g.rotation)
    if g.outer_face is not None:
        if g.faces[g.outer_face].incident_vertices == all_vertices:
            return g.outer_face
    for face in g.faces:
        if face.incident_vertices == all_vertices:
            return face.id
    return None


def is_outerplane(g: PlaneGraph) -> bool:
    """True when some face touches every vertex."""
    return outerplane_face(g) is not None

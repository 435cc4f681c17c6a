"""Vertex cover on cubic plane graphs, rephrased as connected face cover.

For a biconnected cubic plane graph G, subdividing every edge of the dual
once yields a plane graph D* whose faces correspond one-to-one with the
vertices of G, and whose minimum connected face covers correspond
one-to-one with minimum vertex covers of G.  The constructions here build
D* with its correspondence map and translate covers in both directions.

D* is assembled directly from G's faces and edges rather than by
subdividing a dual PlaneGraph: duals of graphs that are merely biconnected
can have parallel edges, which the PlaneGraph type refuses, while the
subdivided result is always simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CapExceeded,
    NotACover,
    NotAVertexCover,
    NotBiconnected,
    NotCubic,
)
from .plane_graph import FaceId, PlaneGraph, Vertex, build, is_biconnected, with_outer_face
from .split_engine import FaceCover, face_cover


@dataclass(frozen=True)
class VcInstance:
    """A vertex cover question: a cubic biconnected plane graph and a budget."""

    graph: PlaneGraph
    k: int


@dataclass(frozen=True)
class CfcInstance:
    """The face-cover counterpart of a VcInstance.

    dstar is the subdivided dual; vertex_of_face and face_of_vertex tie
    its faces to the primal vertices they stand for."""

    primal: PlaneGraph
    dstar: PlaneGraph
    vertex_of_face: dict[FaceId, Vertex]
    face_of_vertex: dict[Vertex, FaceId]


def _fresh_name(base: str, used: set[str]) -> str:
    while base in used:
        base = base + "~"
    return base


def _edge_names(edges, used: set[str]) -> dict[tuple[Vertex, Vertex], str]:
    names: dict[tuple[Vertex, Vertex], str] = {}
    taken = set(used)
    for u, v in edges:
        name = _fresh_name(f"{u}~{v}", taken)
        taken.add(name)
        names[(u, v)] = name
    return names


def all_one_subdivision(g: PlaneGraph) -> PlaneGraph:
    """Insert a fresh degree-2 vertex in the middle of every edge.

    The new vertex sits at the old edge's slot in both endpoint rotations,
    so every face survives with its boundary doubled in length.  The outer
    face designation, when present, follows its face."""
    names = _edge_names(g.edges(), set(g.rotation))
    rot: dict[Vertex, list[Vertex]] = {}
    for v, nbrs in g.rotation.items():
        rot[v] = [names[(min(v, w), max(v, w))] for w in nbrs]
    for (u, v), w in names.items():
        rot[w] = [u, v]
    out = build(rot)
    if g.outer_face is None:
        return out
    u, v = g.faces[g.outer_face].boundary[0]
    w = names[(min(u, v), max(u, v))]
    return with_outer_face(out, out.face_of_slot((u, w)))


def build_cfc_instance(inst: VcInstance) -> CfcInstance:
    """Build the subdivided dual D* of a cubic biconnected plane graph,
    with the bijection between D* faces and primal vertices.

    D* has one node per primal face and one degree-2 node per primal
    edge, joined by incidence; a face node's rotation lists its edge
    nodes in facial-walk order.  Every face of D* is a hexagon wrapping
    one primal vertex."""
    g = inst.graph
    degs = {v: len(nbrs) for v, nbrs in g.rotation.items()}
    bad = sorted(v for v, d in degs.items() if d != 3)
    if bad:
        raise NotCubic(f"vertices {bad} do not have degree 3")
    if not is_biconnected(g):
        raise NotBiconnected("the construction needs a biconnected input")

    used: set[str] = set()
    face_name: dict[FaceId, str] = {}
    for f in g.faces:
        name = _fresh_name(f"f{f.id}", used)
        used.add(name)
        face_name[f.id] = name
    edge_name = _edge_names(g.edges(), used)

    def name_of(slot) -> str:
        u, v = slot
        return edge_name[(min(u, v), max(u, v))]

    rot: dict[str, list[str]] = {}
    for f in g.faces:
        rot[face_name[f.id]] = [name_of(s) for s in f.boundary]
    for (u, v), w in edge_name.items():
        fa = g.face_of_slot((u, v))
        fb = g.face_of_slot((v, u))
        rot[w] = [face_name[fa], face_name[fb]]

    dstar = build(rot)
    if len(dstar.faces) != g.n:
        raise AssertionError(
            f"subdivided dual has {len(dstar.faces)} faces for "
            f"{g.n} primal vertices")

    ends = {w: {u, v} for (u, v), w in edge_name.items()}
    vertex_of_face: dict[FaceId, Vertex] = {}
    for f in dstar.faces:
        subs = [x for x in f.incident_vertices if x in ends]
        common = set.intersection(*(ends[x] for x in subs))
        if len(common) != 1:
            raise AssertionError(
                f"face {f.id} of the subdivided dual wraps {sorted(common)}")
        vertex_of_face[f.id] = common.pop()
    if len(set(vertex_of_face.values())) != g.n:
        raise AssertionError("face-to-vertex map is not a bijection")
    face_of_vertex = {v: f for f, v in vertex_of_face.items()}
    return CfcInstance(primal=g, dstar=dstar,
                       vertex_of_face=vertex_of_face,
                       face_of_vertex=face_of_vertex)


def cfc_to_vc(inst: CfcInstance, cover: FaceCover) -> frozenset[Vertex]:
    """Translate a connected face cover of D* into the vertex set it
    stands for, verified to be a vertex cover of the primal of equal size.

    A valid cover always translates; NotACover means the construction
    itself is broken."""
    chosen = frozenset(inst.vertex_of_face[f] for f in cover.faces)
    for u, v in inst.primal.edges():
        if u not in chosen and v not in chosen:
            raise NotACover(
                f"edge {u}-{v} of the primal is missed by "
                f"{sorted(chosen)}")
    return chosen


def vc_to_cfc(inst: CfcInstance, chosen) -> FaceCover:
    """Translate a vertex cover of the primal into the corresponding
    connected face cover of D*.

    Each chosen vertex contributes its hexagon; covering every primal
    edge makes the hexagons cover all of D*, and connectivity comes for
    free because edge nodes touch only two faces."""
    chosen = set(chosen)
    unknown = chosen - set(inst.primal.rotation)
    if unknown:
        raise NotAVertexCover(f"unknown vertices {sorted(unknown)}")
    for u, v in inst.primal.edges():
        if u not in chosen and v not in chosen:
            raise NotAVertexCover(f"edge {u}-{v} is uncovered")
    return face_cover(inst.dstar,
                      sorted(inst.face_of_vertex[v] for v in chosen))


def brute_min_vc(g: PlaneGraph, cap: int = 20) -> frozenset[Vertex]:
    """Lexicographically least minimum vertex cover, by exhaustive
    enumeration in increasing size."""
    order = sorted(g.rotation)
    if len(order) > cap:
        raise CapExceeded(
            f"{len(order)} vertices exceeds the enumeration cap of {cap}")
    edges = g.edges()
    for size in range(len(order) + 1):
        for combo in combinations(order, size):
            s = set(combo)
            if all(u in s or v in s for u, v in edges):
                return frozenset(combo)
    raise AssertionError("unreachable: the full vertex set is a cover")

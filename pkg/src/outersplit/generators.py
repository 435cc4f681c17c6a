"""Constructors for embedded test families.

All generators return validated PlaneGraphs with a designated outer face
and deterministic labels, so serialized output is byte-identical for the
same parameters.  Randomized families draw from random.Random(seed) only.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import CapExceeded, InfeasibleParameters, UnknownFamily
from .plane_graph import PlaneGraph, Vertex, build, is_biconnected, with_outer_face


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus whichever parameters it takes."""

    family: str
    d: int | None = None
    n: int | None = None
    m: int | None = None
    seed: int = 0


# K4 with vertex 3 in the middle; the face on 0,1,2 is the outer one.
_K4_DIGITS = {
    "0": ("1", "2", "3"),
    "1": ("2", "0", "3"),
    "2": ("0", "1", "3"),
    "3": ("0", "2", "1"),
}


def _designate(g: PlaneGraph, slot) -> PlaneGraph:
    return with_outer_face(g, g.face_of_slot(slot))


def _outer_slot(g: PlaneGraph):
    return g.faces[g.outer_face].boundary[0]


def _base_k4() -> PlaneGraph:
    g = build(_K4_DIGITS)
    for f in g.faces:
        if f.incident_vertices == frozenset(("0", "1", "2")):
            return with_outer_face(g, f.id)
    raise AssertionError("K4 lost its outer triangle")


def _subdivide_face(rot: dict[Vertex, list[Vertex]], face, label: Vertex) -> None:
    # one new vertex joined to all three corners, embedded inside the face
    walk = [s[0] for s in face.boundary]
    for u, v in face.boundary:
        lst = rot[v]
        lst.insert(lst.index(u) + 1, label)
    rot[label] = list(reversed(walk))


def complete_3tree(d: int, cap: int = 9) -> PlaneGraph:
    """Depth-d complete planar 3-tree: K4 with every inner triangle
    recursively subdivided d times.  (3^(d+1)+5)/2 vertices."""
    if d < 0:
        raise InfeasibleParameters("depth must be nonnegative")
    if d > cap:
        raise CapExceeded(f"depth {d} exceeds the cap of {cap}")
    g = _base_k4()
    next_label = 4
    for _ in range(d):
        slot = _outer_slot(g)
        rot = {v: list(nbrs) for v, nbrs in g.rotation.items()}
        for f in g.faces:
            if f.id == g.outer_face:
                continue
            _subdivide_face(rot, f, str(next_label))
            next_label += 1
        g = _designate(build(rot), slot)
    return g


def random_triangulation(n: int, seed: int = 0) -> PlaneGraph:
    """Maximal planar graph on n vertices: random inner-face insertions
    into K4 followed by random legal edge flips.  Deterministic per seed."""
    if n < 4:
        raise InfeasibleParameters("triangulations need at least 4 vertices")
    rng = random.Random(seed)
    g = _base_k4()
    next_label = 4
    while g.n < n:
        slot = _outer_slot(g)
        inner = [f for f in g.faces if f.id != g.outer_face]
        f = inner[rng.randrange(len(inner))]
        rot = {v: list(nbrs) for v, nbrs in g.rotation.items()}
        _subdivide_face(rot, f, str(next_label))
        next_label += 1
        g = _designate(build(rot), slot)
    for _ in range(3 * n):
        g = _try_flip(g, rng)
    return g


def _try_flip(g: PlaneGraph, rng: random.Random) -> PlaneGraph:
    edges = g.edges()
    u, v = edges[rng.randrange(len(edges))]
    fa = g.face_of_slot((u, v))
    fb = g.face_of_slot((v, u))
    if g.outer_face in (fa, fb) or fa == fb:
        return g
    if g.degree(u) <= 3 or g.degree(v) <= 3:
        return g
    # apexes of the two triangles; the flip replaces uv with ab
    a = next(s[0] for s in g.faces[fa].boundary if s[1] == u)
    b = next(s[0] for s in g.faces[fb].boundary if s[1] == v)
    if a == b or b in g.rotation[a]:
        return g
    slot = _outer_slot(g)
    rot = {x: list(nbrs) for x, nbrs in g.rotation.items()}
    rot[u].remove(v)
    rot[v].remove(u)
    rot[a].insert(rot[a].index(v) + 1, b)
    rot[b].insert(rot[b].index(u) + 1, a)
    return _designate(build(rot), slot)


def random_biconnected(n: int, m: int, seed: int = 0,
                       attempts: int = 20) -> PlaneGraph:
    """Biconnected plane graph with n vertices and m edges, made by
    thinning a random triangulation.  Retries with derived sub-seeds when
    a greedy thinning dead-ends; InfeasibleParameters when out of luck or
    out of range."""
    if n == 3 and m == 3:
        return cycle(3)
    if n < 4 or not n <= m <= 3 * n - 6:
        raise InfeasibleParameters(
            f"no biconnected plane graph with n={n}, m={m}")
    for attempt in range(attempts):
        sub = seed if attempt == 0 else seed * 100003 + attempt
        g = random_triangulation(n, sub)
        rng = random.Random(2 * sub + 1)
        thinned = _thin(g, m, rng)
        if thinned is not None:
            return thinned
    raise InfeasibleParameters(
        f"could not thin to m={m} in {attempts} attempts (n={n}, seed={seed})")


def _thin(g: PlaneGraph, m: int, rng: random.Random) -> PlaneGraph | None:
    while g.m > m:
        candidates = list(g.edges())
        rng.shuffle(candidates)
        for u, v in candidates:
            nxt = _drop_edge(g, u, v)
            if nxt is not None and is_biconnected(nxt):
                g = nxt
                break
        else:
            return None
    return g


def _drop_edge(g: PlaneGraph, u: Vertex, v: Vertex) -> PlaneGraph | None:
    rot = {x: list(nbrs) for x, nbrs in g.rotation.items()}
    rot[u].remove(v)
    rot[v].remove(u)
    if min(len(rot[u]), len(rot[v])) < 2:
        return None
    slot = next(s for s in g.faces[g.outer_face].boundary
                if {s[0], s[1]} != {u, v})
    return _designate(build(rot), slot)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise InfeasibleParameters("cycles need at least 3 vertices")
    rot = {str(i): (str((i - 1) % n), str((i + 1) % n)) for i in range(n)}
    return with_outer_face(build(rot), 0)


def fan(n: int) -> PlaneGraph:
    """Path on n vertices plus an apex joined to all of them."""
    if n < 3:
        raise InfeasibleParameters("fans need a path of at least 3 vertices")
    rot: dict[Vertex, tuple[Vertex, ...]] = {
        "0": tuple(str(i) for i in range(1, n + 1)),
        "1": ("2", "0"),
        str(n): ("0", str(n - 1)),
    }
    for i in range(2, n):
        rot[str(i)] = (str(i + 1), "0", str(i - 1))
    g = build(rot)
    big = max(g.faces, key=len)
    return with_outer_face(g, big.id)


_OCTA_COORDS = {
    "0": (1.0, 0.0, 0.0), "1": (-1.0, 0.0, 0.0),
    "2": (0.0, 1.0, 0.0), "3": (0.0, -1.0, 0.0),
    "4": (0.0, 0.0, 1.0), "5": (0.0, 0.0, -1.0),
}

_PHI = (1.0 + math.sqrt(5.0)) / 2.0
_ICOSA_COORDS = {}
for _i, (_a, _b) in enumerate([(1.0, _PHI), (1.0, -_PHI),
                               (-1.0, _PHI), (-1.0, -_PHI)]):
    _ICOSA_COORDS[str(_i)] = (0.0, _a, _b)
    _ICOSA_COORDS[str(4 + _i)] = (_a, _b, 0.0)
    _ICOSA_COORDS[str(8 + _i)] = (_b, 0.0, _a)


def _convex_rotation(coords: dict[Vertex, tuple[float, float, float]],
                     edge_d2: float) -> dict[Vertex, tuple[Vertex, ...]]:
    # neighbors sorted by angle in the tangent plane of the sphere
    def d2(p, q):
        return sum((a - b) ** 2 for a, b in zip(p, q))

    def cross(p, q):
        return (p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0])

    def unit(p):
        s = math.sqrt(sum(a * a for a in p))
        return (p[0] / s, p[1] / s, p[2] / s)

    rot = {}
    for v, pv in coords.items():
        nbrs = [w for w, pw in coords.items()
                if w != v and abs(d2(pv, pw) - edge_d2) < 1e-9]
        k = unit(pv)
        ref = (0.0, 0.0, 1.0) if abs(k[2]) < 0.9 else (0.0, 1.0, 0.0)
        e1 = unit(cross(ref, k))
        e2 = cross(k, e1)

        def angle(w):
            q = tuple(a - b for a, b in zip(coords[w], pv))
            return math.atan2(sum(a * b for a, b in zip(q, e2)),
                              sum(a * b for a, b in zip(q, e1)))

        rot[v] = tuple(sorted(nbrs, key=angle))
    return rot


def octahedron() -> PlaneGraph:
    return with_outer_face(build(_convex_rotation(_OCTA_COORDS, 2.0)), 0)


def icosahedron() -> PlaneGraph:
    return with_outer_face(build(_convex_rotation(_ICOSA_COORDS, 4.0)), 0)


def k4() -> PlaneGraph:
    rot = {
        "a": ("b", "c", "d"),
        "b": ("c", "a", "d"),
        "c": ("a", "b", "d"),
        "d": ("a", "c", "b"),
    }
    return with_outer_face(build(rot), 0)


def named(spec: FamilySpec) -> PlaneGraph:
    """Dispatch for the fixed families; parameterized ones via generate."""
    if spec.family == "k4":
        return k4()
    if spec.family == "octahedron":
        return octahedron()
    if spec.family == "icosahedron":
        return icosahedron()
    if spec.family == "cycle":
        return cycle(_need(spec, "n"))
    if spec.family == "fan":
        return fan(_need(spec, "n"))
    raise UnknownFamily(f"no family named {spec.family!r}")


def _need(spec: FamilySpec, field: str) -> int:
    value = getattr(spec, field)
    if value is None:
        raise InfeasibleParameters(
            f"family {spec.family!r} needs parameter {field!r}")
    return value


def generate(spec: FamilySpec) -> PlaneGraph:
    """Build any family from its spec."""
    if spec.family == "complete_3tree":
        return complete_3tree(_need(spec, "d"))
    if spec.family == "random_triangulation":
        return random_triangulation(_need(spec, "n"), spec.seed)
    if spec.family == "random_biconnected":
        return random_biconnected(_need(spec, "n"), _need(spec, "m"), spec.seed)
    return named(spec)

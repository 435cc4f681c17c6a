"""Closed-form bounds on the outerplane splitting number.

Values are exact Fractions; integer comparisons go through ceil/floor so
tests never touch floats.  The triangulation upper bounds come from known
feedback-vertex-set bounds on the dual and are family-level statements:
tiny graphs can beat them (osn(K4) = 1 > 1/2), so violations below
ADVISORY_N are reported as notes instead of hard failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotMaximalPlanar
from .plane_graph import PlaneGraph, dual, with_outer_face

ADVISORY_N = 8


@dataclass(frozen=True)
class BoundReport:
    n: int
    min_degree: int
    lower_generic: Fraction
    lower_family: Fraction | None
    upper: Fraction | None
    osn: int | None


def upper_bound(g: PlaneGraph) -> Fraction:
    """Upper bound for triangulations, chosen by minimum degree:
    3 -> (3n-10)/4, 4 -> (2n-7)/3, 5 -> (4n-13)/7."""
    n = g.n
    if g.m != 3 * n - 6:
        raise NotMaximalPlanar(
            f"{g.m} edges on {n} vertices; a triangulation has {3 * n - 6}")
    dmin = min(g.degree(v) for v in g.rotation)
    if dmin == 3:
        return Fraction(3 * n - 10, 4)
    if dmin == 4:
        return Fraction(2 * n - 7, 3)
    if dmin == 5:
        return Fraction(4 * n - 13, 7)
    raise NotMaximalPlanar(f"minimum degree {dmin} is outside 3..5")


def lower_bound_generic(n: int) -> Fraction:
    """Every n-vertex plane biconnected graph needs at least (n-3)/2
    splits to become outerplane."""
    return Fraction(n - 3, 2)


def lower_bound_3tree(d: int) -> Fraction:
    """The depth-d complete planar 3-tree needs at least 3^d - 1 splits;
    equals (2 n_d - 8)/3 for its vertex count n_d."""
    return Fraction(3 ** d - 1)


def dual_girth(g: PlaneGraph) -> int:
    """Girth of the dual, honoring parallel edges: two faces sharing two
    edges already close a cycle of length 2."""
    gg = g if g.outer_face is not None else with_outer_face(g, 0)
    d = dual(gg)
    mult: dict[int, dict[int, int]] = {u: {} for u in d.nodes}
    for a, b in d.edges:
        if a == b:
            return 1
        mult[a][b] = mult[a].get(b, 0) + 1
        mult[b][a] = mult[b].get(a, 0) + 1
    if any(c >= 2 for nbrs in mult.values() for c in nbrs.values()):
        return 2
    best = math.inf
    for s in d.nodes:
        dist = {s: 0}
        parent = {s: None}
        queue = [s]
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            for w in mult[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        # cycles through s are already minimal by the time BFS finishes
    if best is math.inf:
        raise AssertionError("dual of a plane graph always has a cycle")
    return int(best)


def report(g: PlaneGraph, osn: int | None = None,
           tree_depth: int | None = None) -> BoundReport:
    """Collect every applicable bound for one graph.  tree_depth adds the
    3-tree family bound; osn is the solved value when available."""
    try:
        upper = upper_bound(g)
    except NotMaximalPlanar:
        upper = None
    family = lower_bound_3tree(tree_depth) if tree_depth is not None else None
    return BoundReport(
        n=g.n,
        min_degree=min(g.degree(v) for v in g.rotation),
        lower_generic=lower_bound_generic(g.n),
        lower_family=family,
        upper=upper,
        osn=osn,
    )


def violations(rep: BoundReport) -> tuple[str, ...]:
    """Bound comparisons the report fails.  Upper-bound misses on graphs
    below ADVISORY_N vertices are prefixed 'advisory:' because the
    triangulation bounds only claim family-level validity."""
    if rep.osn is None:
        return ()
    out = []
    if rep.osn < math.ceil(rep.lower_generic):
        out.append(
            f"osn {rep.osn} below generic lower bound {rep.lower_generic}")
    if rep.lower_family is not None and rep.osn < math.ceil(rep.lower_family):
        out.append(
            f"osn {rep.osn} below family lower bound {rep.lower_family}")
    if rep.upper is not None and rep.osn > math.floor(rep.upper):
        msg = f"osn {rep.osn} above upper bound {rep.upper}"
        out.append(f"advisory: {msg}" if rep.n < ADVISORY_N else msg)
    return tuple(out)

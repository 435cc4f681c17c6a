"""The ".rot" text format and the replayable split-sequence format.

A .rot file is:

    # comment
    4 6
    a: b c d
    b: c a d
    c: a b d
    d: a c b
    faces
    # 0: a b d
    outer: 0

Line one holds the vertex and edge counts, then one line per vertex with
its clockwise neighbors.  The trailing block after the `faces` marker is
optional; only its `outer:` line carries information, face listings are
comments for human readers.

A split-sequence file has one op per line:

    SPLIT a 0 1 -> a.1 a.2
"""

from __future__ import annotations

from .errors import OuterFaceUnset, ParseError
from .plane_graph import PlaneGraph, build, with_outer_face
from .split_engine import SplitOp, SplitSequence


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_rot(text: str) -> PlaneGraph:
    """Parse a .rot file into a validated PlaneGraph."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", line=0)
    pos = 0

    lineno, header = lines[pos]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("expected header 'n m'", line=lineno)
    n, m = int(parts[0]), int(parts[1])
    pos += 1

    adjacency: dict[str, list[str]] = {}
    for _ in range(n):
        if pos >= len(lines):
            raise ParseError(
                f"expected {n} vertex lines, found {len(adjacency)}",
                line=lines[-1][0])
        lineno, line = lines[pos]
        tokens = line.split()
        name = tokens[0]
        if not name.endswith(":") or len(name) == 1:
            raise ParseError("expected 'vertex: neighbors...'", line=lineno)
        name = name[:-1]
        if name in adjacency:
            raise ParseError(f"duplicate vertex {name!r}", line=lineno)
        nbrs = tokens[1:]
        if len(set(nbrs)) != len(nbrs):
            raise ParseError(
                f"vertex {name!r} repeats a neighbor", line=lineno)
        adjacency[name] = nbrs
        pos += 1

    deg_sum = sum(len(x) for x in adjacency.values())
    if deg_sum != 2 * m:
        raise ParseError(
            f"header declares {m} edges but rotations describe "
            f"{deg_sum / 2:g}", line=lines[0][0])

    outer = None
    outer_line = lines[0][0]
    if pos < len(lines):
        lineno, line = lines[pos]
        if line != "faces":
            raise ParseError(
                f"unexpected line after vertex block: {line!r}", line=lineno)
        pos += 1
        if pos < len(lines):
            lineno, line = lines[pos]
            tokens = line.split()
            if tokens[0] != "outer:" or len(tokens) != 2 \
                    or not tokens[1].isdigit():
                raise ParseError("expected 'outer: <face id>'", line=lineno)
            outer = int(tokens[1])
            outer_line = lineno
            pos += 1
        if pos < len(lines):
            raise ParseError(
                f"trailing content: {lines[pos][1]!r}", line=lines[pos][0])

    g = build(adjacency)
    if outer is None:
        return g
    try:
        return with_outer_face(g, outer)
    except OuterFaceUnset as exc:
        raise ParseError(str(exc), line=outer_line) from exc


def serialize_rot(g: PlaneGraph, face_comments: bool = True) -> str:
    """Render a PlaneGraph in the .rot format; parse_rot inverts this."""
    out = [f"{g.n} {g.m}"]
    for v in sorted(g.rotation):
        out.append(f"{v}: " + " ".join(g.rotation[v]) if g.rotation[v]
                   else f"{v}:")
    if face_comments or g.outer_face is not None:
        out.append("faces")
        if face_comments:
            for f in g.faces:
                walk = " ".join(s[0] for s in f.boundary)
                out.append(f"# {f.id}: {walk}")
        if g.outer_face is not None:
            out.append(f"outer: {g.outer_face}")
    return "\n".join(out) + "\n"


def parse_splits(text: str) -> SplitSequence:
    """Parse a split-sequence file."""
    ops = []
    origin: dict[str, str] = {}
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if (len(tokens) != 7 or tokens[0] != "SPLIT" or tokens[4] != "->"
                or not tokens[2].isdigit() or not tokens[3].isdigit()):
            raise ParseError(
                "expected 'SPLIT <v> <f_a> <f_b> -> <copy1> <copy2>'",
                line=lineno)
        op = SplitOp(vertex=tokens[1], face_a=int(tokens[2]),
                     face_b=int(tokens[3]), copy_1=tokens[5],
                     copy_2=tokens[6])
        ops.append(op)
        base = origin.get(op.vertex, op.vertex)
        origin[op.copy_1] = base
        origin[op.copy_2] = base
    return SplitSequence(ops=tuple(ops), origin=origin)


def serialize_splits(seq: SplitSequence) -> str:
    """Render a split sequence; parse_splits inverts this."""
    out = [
        f"SPLIT {op.vertex} {op.face_a} {op.face_b} -> "
        f"{op.copy_1} {op.copy_2}"
        for op in seq.ops
    ]
    return "\n".join(out) + ("\n" if out else "")

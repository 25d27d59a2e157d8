"""Integer-coordinate drawings of planar and outerplanar ladders.

The planar drawing places G1 on the line ``x = 0`` and G2 on ``x = mn`` and
routes each cross edge through at most two bend points chosen from one of
three families (right / top / bottom), or as a straight segment.  The
outerplanar drawing uses two unit-spaced columns and straight segments.

:func:`verify_embedding` checks any drawing exactly with integer
orientation predicates; it is the trust anchor for both constructions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .decision import is_outerplanar, planarity_report
from .ladder import CrossEdge, GeneralizedLadder, LadderError, VertexRef

__all__ = [
    "NotPlanar",
    "NotOuterplanar",
    "IncompleteEmbedding",
    "Embedding",
    "classify_edges",
    "class_memberships",
    "planar_embedding",
    "outerplanar_embedding",
    "verify_embedding",
    "embedding_to_json",
    "embedding_from_json",
]

Point = tuple[int, int]
EdgeKey = tuple[VertexRef, VertexRef]


class NotPlanar(LadderError):
    pass


class NotOuterplanar(LadderError):
    pass


class IncompleteEmbedding(LadderError):
    pass


@dataclass
class Embedding:
    m: int
    n: int
    vertex_coords: dict[VertexRef, Point]
    edge_polylines: dict[EdgeKey, tuple[Point, ...]]
    edge_classes: dict[CrossEdge, str] = field(default_factory=dict)
    kind: str = "planar"
    condition: Optional[str] = None  # outerplanar drawings: which clause held


def cross_key(e: CrossEdge) -> EdgeKey:
    return VertexRef.u(e.l), VertexRef.v(e.r)


# ---------------------------------------------------------------------------
# Classes
# ---------------------------------------------------------------------------


def class_memberships(g: GeneralizedLadder) -> dict[CrossEdge, frozenset[str]]:
    """Which of the emptiness classes A, B, C, D each cross edge belongs to.

    A: no edge up-and-down, B: none up-and-up, C: none down-and-up,
    D: none down-and-down.
    """
    report = planarity_report(g)
    out = {}
    for e, fl in report.per_edge_flags.items():
        out[e] = frozenset(name for name, occupied in zip("ABCD", fl) if not occupied)
    return out


def classify_edges(g: GeneralizedLadder) -> dict[CrossEdge, str]:
    """Route class per cross edge: X from A, Y from B, Z from C, W from D, first match wins."""
    route = {"A": "X", "B": "Y", "C": "Z", "D": "W"}
    out = {}
    for e, members in class_memberships(g).items():
        if not members:
            raise NotPlanar(f"edge {e} has all four quadrants occupied")
        out[e] = route[min(members)]
    return out


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def _path_polylines(g: GeneralizedLadder, coords: dict[VertexRef, Point]) -> dict[EdgeKey, tuple[Point, ...]]:
    return {(a, b): (coords[a], coords[b]) for a, b in g.path_edges()}


def planar_embedding(g: GeneralizedLadder) -> Embedding:
    classes = classify_edges(g)
    m, n = g.m, g.n
    mn = m * n
    coords: dict[VertexRef, Point] = {}
    for i in range(1, m + 1):
        coords[VertexRef.u(i)] = (0, n * i)
    for j in range(1, n + 1):
        coords[VertexRef.v(j)] = (mn, mn - m * j)

    polylines = _path_polylines(g, coords)
    for e, cls in classes.items():
        start, end = coords[VertexRef.u(e.l)], coords[VertexRef.v(e.r)]
        nl, r = n * e.l, e.r
        if cls == "X":
            t = mn - n + nl + r
            bends = [(mn, t), (t, t)]
        elif cls == "Y":
            t = 3 * mn - nl + r
            bends = [(-2 * mn + nl - r, t), (t, t)]
        elif cls == "Z":
            t = n - nl - r
            bends = [(t, t), (0, t)]
        else:
            bends = []
        polylines[cross_key(e)] = (start, *bends, end)
    return Embedding(m, n, coords, polylines, classes, "planar")


def outerplanar_embedding(g: GeneralizedLadder) -> Embedding:
    """Two-column straight-line drawing with every vertex on the outer face.

    When no edge has an up-down or down-up neighbour (condition ii) the
    columns run in the same direction; otherwise (condition i) G2 is
    reversed, i.e. drawn after the R reflection.
    """
    report = is_outerplanar(g)
    if not report.verdict:
        raise NotOuterplanar(report.describe())
    reverse = report.outerplanar_condition == "i"
    coords: dict[VertexRef, Point] = {}
    for i in range(1, g.m + 1):
        coords[VertexRef.u(i)] = (0, i)
    for j in range(1, g.n + 1):
        coords[VertexRef.v(j)] = (1, g.n - j + 1 if reverse else j)
    polylines = _path_polylines(g, coords)
    for e in g.cross:
        a, b = cross_key(e)
        polylines[(a, b)] = (coords[a], coords[b])
    return Embedding(g.m, g.n, coords, polylines, {}, "outerplanar", report.outerplanar_condition)


# ---------------------------------------------------------------------------
# Exact verification
# ---------------------------------------------------------------------------


def _orient(p: Point, q: Point, r: Point) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _within(p: Point, q: Point, r: Point) -> bool:
    """r lies in the bounding box of pq (callers ensure collinearity)."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segment_contact(p1: Point, q1: Point, p2: Point, q2: Point):
    """Classify how two closed segments meet.

    Returns ``None`` (disjoint), ``("point", P)`` for a single common point
    that is an endpoint of at least one segment, ``("cross", None)`` for a
    proper crossing of both interiors, or ``("overlap", None)`` for a
    collinear overlap of positive length.  Degenerate (zero-length)
    segments are treated as points.
    """
    o1, o2 = _orient(p1, q1, p2), _orient(p1, q1, q2)
    o3, o4 = _orient(p2, q2, p1), _orient(p2, q2, q1)
    if o1 == o2 == o3 == o4 == 0:
        return _collinear_contact(p1, q1, p2, q2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return ("cross", None)
    for o, seg, pt in ((o1, (p1, q1), p2), (o2, (p1, q1), q2), (o3, (p2, q2), p1), (o4, (p2, q2), q1)):
        if o == 0 and _within(seg[0], seg[1], pt):
            return ("point", pt)
    return None


def _collinear_contact(p1: Point, q1: Point, p2: Point, q2: Point):
    axis = 0 if (p1[0], q1[0], p2[0], q2[0]) != (p1[0],) * 4 else 1
    a1, b1 = sorted((p1, q1), key=lambda p: p[axis])
    a2, b2 = sorted((p2, q2), key=lambda p: p[axis])
    lo = a1 if a1[axis] >= a2[axis] else a2
    hi = b1 if b1[axis] <= b2[axis] else b2
    if lo[axis] > hi[axis]:
        return None
    if lo[axis] == hi[axis]:
        return ("point", lo)
    return ("overlap", None)


@dataclass
class _Piece:
    owner: int
    index: int
    p: Point
    q: Point
    ends: frozenset  # graph vertices whose points this piece may legally touch

    @property
    def bbox(self) -> tuple[int, int, int, int]:
        return (min(self.p[0], self.q[0]), max(self.p[0], self.q[0]), min(self.p[1], self.q[1]), max(self.p[1], self.q[1]))


def _clean(points: Iterable[Point]) -> list[Point]:
    out: list[Point] = []
    for pt in points:
        pt = (int(pt[0]), int(pt[1]))
        if not out or out[-1] != pt:
            out.append(pt)
    return out


def _pair_ok(a: _Piece, b: _Piece, point_of: dict[VertexRef, Point]) -> bool:
    contact = segment_contact(a.p, a.q, b.p, b.q)
    if contact is None:
        return True
    kind, pt = contact
    if kind != "point":
        return False
    if pt not in (a.p, a.q) or pt not in (b.p, b.q):
        return False
    if a.owner == b.owner:
        # consecutive pieces of one polyline share exactly their joint
        if abs(a.index - b.index) != 1:
            return False
        joint = a.q if a.index < b.index else a.p
        return pt == joint
    return any(point_of[x] == pt for x in a.ends & b.ends)


def verify_embedding(g: GeneralizedLadder, emb: Embedding, method: str = "quadratic") -> bool:
    """Exact crossing check of ``emb`` as a drawing of ``g``.

    Distinct edges may meet only at a graph vertex they share, polylines
    may not self-intersect, collinear overlaps count as crossings, and no
    polyline may pass through a vertex other than its own ends.  Python
    integers are unbounded, so the orientation tests never overflow.
    ``method="sweep"`` prunes pairs by an x-sorted sweep; the default
    compares all pairs.
    """
    expected = {cross_key(e) for e in g.cross} | set(g.path_edges())
    missing_v = [x for x in g.vertices() if x not in emb.vertex_coords]
    missing_e = expected - set(emb.edge_polylines)
    if missing_v or missing_e:
        what = [str(x) for x in missing_v] + [f"{a}-{b}" for a, b in sorted(missing_e)]
        raise IncompleteEmbedding("embedding lacks " + ", ".join(what[:5]) + ("..." if len(what) > 5 else ""))
    if set(emb.edge_polylines) - expected or set(emb.vertex_coords) - set(g.vertices()):
        return False

    point_of = {x: (int(p[0]), int(p[1])) for x, p in emb.vertex_coords.items()}
    if len(set(point_of.values())) != len(point_of):
        return False

    pieces: list[_Piece] = []
    owner = 0
    for owner, (key, raw) in enumerate(sorted(emb.edge_polylines.items())):
        pts = _clean(raw)
        a, b = key
        if len(pts) < 2 or pts[0] != point_of[a] or pts[-1] != point_of[b]:
            return False
        ends = frozenset(key)
        for i, (p, q) in enumerate(zip(pts, pts[1:])):
            pieces.append(_Piece(owner, i, p, q, ends))
    # each vertex as a degenerate piece: only its own edges may touch it
    for x, pt in point_of.items():
        owner += 1
        pieces.append(_Piece(owner, 0, pt, pt, frozenset([x])))

    if method == "quadratic":
        pairs = ((pieces[i], pieces[j]) for i in range(len(pieces)) for j in range(i + 1, len(pieces)))
    elif method == "sweep":
        pairs = _sweep_pairs(pieces)
    else:
        raise ValueError(f"unknown method {method!r}")
    return all(_pair_ok(a, b, point_of) for a, b in pairs)


def _sweep_pairs(pieces: list[_Piece]):
    order = sorted(pieces, key=lambda pc: pc.bbox[0])
    active: list[_Piece] = []
    for pc in order:
        x0, x1, y0, y1 = pc.bbox
        active = [a for a in active if a.bbox[1] >= x0]
        for a in active:
            _, _, ay0, ay1 = a.bbox
            if ay1 >= y0 and y1 >= ay0:
                yield a, pc
        active.append(pc)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def embedding_to_json(emb: Embedding) -> dict:
    vertices = [
        {"side": x.side, "index": x.index, "x": p[0], "y": p[1]}
        for x, p in sorted(emb.vertex_coords.items())
    ]
    edges = []
    for (a, b), pts in sorted(emb.edge_polylines.items()):
        item: dict = {
            "kind": "path" if a.side == b.side else "cross",
            "endpoints": [[a.side, a.index], [b.side, b.index]],
        }
        if item["kind"] == "cross":
            item["class"] = emb.edge_classes.get(CrossEdge(a.index, b.index))
        item["waypoints"] = [[p[0], p[1]] for p in pts]
        edges.append(item)
    return {"format_version": 1, "kind": emb.kind, "m": emb.m, "n": emb.n, "vertices": vertices, "edges": edges}


def embedding_from_json(data: dict | str) -> Embedding:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("format_version") != 1:
        raise ValueError(f"unsupported format_version {data.get('format_version')!r}")
    coords = {VertexRef(v["side"], int(v["index"])): (int(v["x"]), int(v["y"])) for v in data["vertices"]}
    polylines: dict[EdgeKey, tuple[Point, ...]] = {}
    classes: dict[CrossEdge, str] = {}
    for item in data["edges"]:
        a, b = (VertexRef(str(s), int(i)) for s, i in item["endpoints"])
        pts = tuple((int(x), int(y)) for x, y in item["waypoints"])
        if a > b:
            a, b, pts = b, a, pts[::-1]
        polylines[(a, b)] = pts
        cls: Optional[str] = item.get("class")
        if cls is not None:
            classes[CrossEdge(a.index, b.index)] = cls
    return Embedding(int(data["m"]), int(data["n"]), coords, polylines, classes, data.get("kind", "planar"))

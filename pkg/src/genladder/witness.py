"""Forbidden-subdivision certificates for non-planar / non-outerplanar ladders.

Three obstructions are produced:

* ``K33`` for non-planar instances, built around an edge whose four
  quadrants are all occupied;
* ``K32`` for an edge that has a quadrant on each diagonal, e.g. one edge
  in ``up_down`` and one in ``down_down``;
* ``K4`` for the remaining non-outerplanar configuration: two edges
  sharing ``l``, two edges sharing ``l`` higher up, crossing over the same
  two ``r`` values.

Certificates are plain data and can be checked against any ladder by
:func:`verify_certificate`, which does not trust the extraction code.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .decision import is_outerplanar, is_planar
from .ladder import (
    CrossEdge,
    GeneralizedLadder,
    LadderError,
    VertexRef,
    all_quadrant_flags,
    apply_symmetry,
    build_quadrant_index,
    quadrant_flags_naive,
    quadrant_members,
    symmetry_edge_map,
    symmetry_vertex_map,
)

__all__ = [
    "NotApplicable",
    "CertPath",
    "SubdivisionCertificate",
    "extract_k33_witness",
    "extract_outerplanar_witness",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
    "certificate_to_text",
]

PATTERN_SIZES = {"K33": 9, "K32": 6, "K4": 6}

# The dihedral group generated by L, R and S, one word per element.
_GROUP_WORDS: tuple[tuple[str, ...], ...] = (
    (),
    ("S",),
    ("R",),
    ("L",),
    ("L", "R"),
    ("L", "S"),
    ("R", "S"),
    ("L", "R", "S"),
)


class NotApplicable(LadderError):
    """The instance has the property, so there is nothing to certify."""


@dataclass(frozen=True)
class CertPath:
    vertices: tuple[VertexRef, ...]

    @property
    def endpoints(self) -> tuple[VertexRef, VertexRef]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[VertexRef, ...]:
        return self.vertices[1:-1]

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class SubdivisionCertificate:
    """A subdivision of K33, K32 or K4 inside a ladder.

    ``branch_classes`` is the bipartition ``(X, Y)`` for the bipartite
    patterns and a single 4-vertex class for K4.  ``construction`` records
    the intermediate quantities of the extraction (diagnostic only).
    """

    pattern: str
    branch_classes: tuple[tuple[VertexRef, ...], ...]
    paths: tuple[CertPath, ...]
    construction: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def branch_vertices(self) -> list[VertexRef]:
        return [x for cls in self.branch_classes for x in cls]

    def pattern_edges(self) -> list[frozenset[VertexRef]]:
        if self.pattern == "K4":
            return [frozenset(p) for p in itertools.combinations(self.branch_classes[0], 2)]
        xs, ys = self.branch_classes
        return [frozenset((x, y)) for x in xs for y in ys]


# ---------------------------------------------------------------------------
# Path assembly
# ---------------------------------------------------------------------------


def _useg(i: int, j: int) -> list[VertexRef]:
    step = 1 if j >= i else -1
    return [VertexRef.u(t) for t in range(i, j + step, step)]


def _vseg(i: int, j: int) -> list[VertexRef]:
    step = 1 if j >= i else -1
    return [VertexRef.v(t) for t in range(i, j + step, step)]


def _join(*parts: Sequence[VertexRef]) -> CertPath:
    out: list[VertexRef] = []
    for part in parts:
        for x in part:
            if not out or out[-1] != x:
                out.append(x)
    return CertPath(tuple(out))


def _first_member(g: GeneralizedLadder, e: CrossEdge, quadrant: str) -> CrossEdge | None:
    members = quadrant_members(g, e, quadrant)
    return members[0] if members else None


# ---------------------------------------------------------------------------
# Transport through symmetry words
# ---------------------------------------------------------------------------


class _Transport:
    """Graphs along a word of transforms, with maps back to the original."""

    def __init__(self, g: GeneralizedLadder, word: Sequence[str]):
        self.word = tuple(word)
        self.graphs = [g]
        for w in self.word:
            self.graphs.append(apply_symmetry(self.graphs[-1], w))

    @property
    def target(self) -> GeneralizedLadder:
        return self.graphs[-1]

    def edge_forward(self, e: CrossEdge) -> CrossEdge:
        for h, w in zip(self.graphs, self.word):
            e = symmetry_edge_map(h, w)(e)
        return e

    def edge_back(self, e: CrossEdge) -> CrossEdge:
        for h, w in zip(reversed(self.graphs[1:]), reversed(self.word)):
            e = symmetry_edge_map(h, w)(e)
        return e

    def vertex_back(self, x: VertexRef) -> VertexRef:
        for h, w in zip(reversed(self.graphs[1:]), reversed(self.word)):
            x = symmetry_vertex_map(h, w)(x)
        return x

    def pull_back(self, cert: SubdivisionCertificate) -> SubdivisionCertificate:
        if not self.word:
            return cert
        classes = tuple(tuple(self.vertex_back(x) for x in cls) for cls in cert.branch_classes)
        paths = tuple(CertPath(tuple(self.vertex_back(x) for x in p.vertices)) for p in cert.paths)
        record = dict(cert.construction, symmetry_word="".join(self.word))
        return SubdivisionCertificate(cert.pattern, classes, paths, record)


# ---------------------------------------------------------------------------
# K33
# ---------------------------------------------------------------------------


def _hub_paths(hub: int, near: CrossEdge, far: CrossEdge, targets: dict[CrossEdge, int]) -> list[CertPath]:
    """Two good paths from ``u_hub`` through the edges ``near`` and ``far``.

    ``near`` is the edge incident to ``u_hub`` (the one whose l is closest
    to the central edge); ``far`` is reached by walking G1 from ``u_hub``.
    When both share l the walk has length zero.
    """
    assert near.l == hub
    return [
        _join([VertexRef.u(hub), VertexRef.v(near.r)], _vseg(near.r, targets[near])),
        _join(_useg(hub, far.l), [VertexRef.v(far.r)], _vseg(far.r, targets[far])),
    ]


def _k33_certificate(g: GeneralizedLadder, a: CrossEdge) -> SubdivisionCertificate:
    b = _first_member(g, a, "up_down")
    c = _first_member(g, a, "up_up")
    d = _first_member(g, a, "down_up")
    e = _first_member(g, a, "down_down")
    if None in (b, c, d, e):
        raise NotApplicable(f"edge {a} does not have all four quadrants occupied")
    alpha, alpha_p = min(d.l, e.l), max(d.l, e.l)
    beta, beta_p = max(b.l, c.l), min(b.l, c.l)
    gamma, gamma_p = min(b.r, e.r), max(b.r, e.r)
    delta, delta_p = max(c.r, d.r), min(c.r, d.r)

    xs = (VertexRef.v(a.r), VertexRef.u(alpha_p), VertexRef.u(beta_p))
    ys = (VertexRef.u(a.l), VertexRef.v(gamma_p), VertexRef.v(delta_p))
    paths = [
        _join([VertexRef.v(a.r), VertexRef.u(a.l)]),
        _join(_useg(alpha_p, a.l)),
        _join(_useg(beta_p, a.l)),
        _join(_vseg(a.r, gamma_p)),
        _join(_vseg(a.r, delta_p)),
    ]
    targets = {b: gamma_p, e: gamma_p, c: delta_p, d: delta_p}
    # below the central edge: the edge with the larger l is incident to u_alpha'
    near, far = (d, e) if d.l >= e.l else (e, d)
    paths += _hub_paths(alpha_p, near, far, targets)
    near, far = (b, c) if b.l <= c.l else (c, b)
    paths += _hub_paths(beta_p, near, far, targets)
    record = {
        "a": a, "b": b, "c": c, "d": d, "e": e,
        "alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta,
        "alpha_p": alpha_p, "beta_p": beta_p, "gamma_p": gamma_p, "delta_p": delta_p,
    }  # fmt: skip
    return SubdivisionCertificate("K33", (xs, ys), tuple(paths), record)


def extract_k33_witness(g: GeneralizedLadder) -> SubdivisionCertificate:
    report = is_planar(g)
    if report.verdict:
        raise NotApplicable("instance is planar")
    return _k33_certificate(g, report.witness_edge)


# ---------------------------------------------------------------------------
# K32 and K4
# ---------------------------------------------------------------------------


def _is_k32_edge(flags) -> bool:
    return (flags.up_up or flags.down_down) and (flags.up_down or flags.down_up)


def _k32_canonical(g: GeneralizedLadder, e: CrossEdge) -> SubdivisionCertificate:
    a = _first_member(g, e, "up_down")
    b = _first_member(g, e, "down_down")
    assert a is not None and b is not None
    lo, hi = min(a.r, b.r), max(a.r, b.r)
    xs = (VertexRef.u(a.l), VertexRef.u(b.l), VertexRef.v(e.r))
    ys = (VertexRef.u(e.l), VertexRef.v(hi))
    paths = [
        _join(_useg(a.l, e.l)),
        _join(_useg(b.l, e.l)),
        _join([VertexRef.v(e.r), VertexRef.u(e.l)]),
        _join(_vseg(e.r, hi)),
        _join([VertexRef.u(a.l), VertexRef.v(a.r)], _vseg(a.r, hi)),
        _join([VertexRef.u(b.l), VertexRef.v(b.r)], _vseg(b.r, hi)),
    ]
    record = {"e": e, "a": a, "b": b, "alpha": lo, "alpha_p": hi}
    return SubdivisionCertificate("K32", (xs, ys), tuple(paths), record)


def _k32_certificate(g: GeneralizedLadder, e: CrossEdge) -> SubdivisionCertificate:
    """K32 around an edge with one occupied quadrant on each diagonal.

    The instance is first moved by a symmetry so that ``e`` has both an
    ``up_down`` and a ``down_down`` neighbour; the certificate is built there
    and relabeled back.
    """
    for word in _GROUP_WORDS:
        tr = _Transport(g, word)
        e2 = tr.edge_forward(e)
        fl = quadrant_flags_naive(tr.target, e2)
        if fl.up_down and fl.down_down:
            cert = tr.pull_back(_k32_canonical(tr.target, e2))
            cert.construction["e"] = e
            return cert
    raise NotApplicable(f"edge {e} has no occupied quadrant on both diagonals")


def _outer_violations(g: GeneralizedLadder, e: CrossEdge) -> tuple[bool, bool]:
    fl = quadrant_flags_naive(g, e)
    return fl.up_up or fl.down_down, fl.up_down or fl.down_up


def _pair_case_analysis(g: GeneralizedLadder, e: CrossEdge, f: CrossEdge):
    """Case analysis on an edge ``e`` violating clause (i) and ``f`` violating (ii).

    Returns ``("k32", edge)`` when some edge has an occupied quadrant on
    both diagonals, or ``("k4", transport, e, f, a, b)`` for the terminal
    configuration in the transported graph.
    """
    if e == f:
        return ("k32", e)
    if e.l != f.l and e.r != f.r:
        if (e.l < f.l) == (f.r < e.r):
            return ("k32", e)  # f lies in up_down(e) or down_up(e)
        return ("k32", f)  # e lies in down_down(f) or up_up(f)

    for word in _GROUP_WORDS:
        tr = _Transport(g, word)
        h = tr.target
        for p, q in ((e, f), (f, e)):
            p2, q2 = tr.edge_forward(p), tr.edge_forward(q)
            if p2.l == q2.l and p2.r < q2.r and _outer_violations(h, p2)[0] and _outer_violations(h, q2)[1]:
                break
        else:
            continue
        break
    else:  # pragma: no cover - the eight symmetries always normalize the pair
        raise AssertionError("could not normalize violating pair")

    e2, f2 = p2, q2
    back = tr.edge_back
    if _first_member(h, e2, "down_down") is not None:
        return ("k32", back(f2))
    if _first_member(h, f2, "down_up") is not None:
        return ("k32", back(e2))
    a = _first_member(h, e2, "up_up")
    b = _first_member(h, f2, "up_down")
    if a.r < f2.r:
        return ("k32", back(a))  # f in down_up(a), e in down_down(a)
    if b.r > e2.r:
        return ("k32", back(b))  # e in down_down(b), f in down_up(b)
    if a.r > f2.r:
        return ("k32", back(f2))  # a in up_up(f)
    if b.r < e2.r:
        return ("k32", back(e2))  # b in up_down(e)
    if a.l < b.l:
        return ("k32", back(a))  # b in up_down(a)
    if b.l < a.l:
        return ("k32", back(b))  # a in up_up(b)
    return ("k4", tr, e2, f2, a, b)


def _k4_canonical(e: CrossEdge, f: CrossEdge, a: CrossEdge, b: CrossEdge) -> SubdivisionCertificate:
    ue, ua, ve, va = VertexRef.u(e.l), VertexRef.u(a.l), VertexRef.v(e.r), VertexRef.v(a.r)
    paths = [
        _join([ua, va]),
        _join([ue, ve]),
        _join([ue, va]),
        _join([ua, ve]),
        _join(_useg(e.l, a.l)),
        _join(_vseg(e.r, a.r)),
    ]
    record = {"e": e, "f": f, "a": a, "b": b}
    return SubdivisionCertificate("K4", ((ue, ua, ve, va),), tuple(paths), record)


def extract_outerplanar_witness(g: GeneralizedLadder) -> SubdivisionCertificate:
    report = is_outerplanar(g)
    if report.verdict:
        raise NotApplicable("instance is outerplanar")
    flags = all_quadrant_flags(g, build_quadrant_index(g))
    k32 = (flags[:, 1] | flags[:, 3]) & (flags[:, 0] | flags[:, 2])
    hits = np.flatnonzero(k32)
    if len(hits):
        return _k32_certificate(g, g.cross[int(hits[0])])
    outcome = _pair_case_analysis(g, report.clause_witnesses["i"], report.clause_witnesses["ii"])
    if outcome[0] == "k32":
        return _k32_certificate(g, outcome[1])
    _, tr, e, f, a, b = outcome
    return tr.pull_back(_k4_canonical(e, f, a, b))


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_certificate(g: GeneralizedLadder, cert: SubdivisionCertificate) -> bool:
    """Structural check of a certificate against ``g``; never raises."""
    try:
        return _verify(g, cert)
    except (TypeError, ValueError, AttributeError, IndexError, KeyError):
        return False


def _verify(g: GeneralizedLadder, cert: SubdivisionCertificate) -> bool:
    shape = {"K33": (3, 3), "K32": (3, 2), "K4": (4,)}.get(cert.pattern)
    if shape is None or tuple(len(c) for c in cert.branch_classes) != shape:
        return False
    branch = [VertexRef(*x) for x in cert.branch_vertices]
    if len(set(branch)) != len(branch) or not all(g.has_vertex(x) for x in branch):
        return False
    branch_set = set(branch)
    expected = cert.pattern_edges()
    if len(cert.paths) != len(expected):
        return False

    used_interior: set[VertexRef] = set()
    seen_pairs: set[frozenset[VertexRef]] = set()
    for path in cert.paths:
        vs = [VertexRef(*x) for x in path.vertices]
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        if any(not g.adjacent(x, y) for x, y in zip(vs, vs[1:])):
            return False
        if vs[0] not in branch_set or vs[-1] not in branch_set:
            return False
        interior = set(vs[1:-1])
        if interior & branch_set or interior & used_interior:
            return False
        used_interior |= interior
        seen_pairs.add(frozenset((vs[0], vs[-1])))
    return seen_pairs == set(expected)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _vjson(x: VertexRef) -> list:
    return [x.side, x.index]


def certificate_to_json(cert: SubdivisionCertificate) -> dict:
    record = {k: (list(v) if isinstance(v, tuple) else v) for k, v in cert.construction.items()}
    return {
        "format_version": 1,
        "pattern": cert.pattern,
        "branch_classes": [[_vjson(x) for x in cls] for cls in cert.branch_classes],
        "paths": [[_vjson(x) for x in p.vertices] for p in cert.paths],
        "construction": record,
    }


def certificate_from_json(data: dict | str) -> SubdivisionCertificate:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("format_version") != 1:
        raise ValueError(f"unsupported format_version {data.get('format_version')!r}")

    def vx(item: Iterable) -> VertexRef:
        side, index = item
        return VertexRef(str(side), int(index))

    return SubdivisionCertificate(
        str(data["pattern"]),
        tuple(tuple(vx(x) for x in cls) for cls in data["branch_classes"]),
        tuple(CertPath(tuple(vx(x) for x in p)) for p in data["paths"]),
        dict(data.get("construction", {})),
    )


def certificate_to_text(cert: SubdivisionCertificate) -> str:
    lines = [f"pattern {cert.pattern}"]
    names = ["X", "Y"] if len(cert.branch_classes) == 2 else ["B"]
    for name, cls in zip(names, cert.branch_classes):
        lines.append(f"class {name} " + " ".join(map(str, cls)))
    lines.extend(f"path {p}" for p in cert.paths)
    return "\n".join(lines) + "\n"

"""Generalized ladder graphs, symmetry transforms and quadrant queries.

A generalized (m, n)-ladder is a path ``u_1 .. u_m`` (side G1), a path
``v_1 .. v_n`` (side G2) and a set of cross edges ``u_l v_r``.  Path edges
are implicit; only the cross edges are stored.  All indices are 1-based.

For a cross edge ``e`` the four quadrant flags record whether another cross
edge exists strictly above/below ``e`` on both paths::

    up_down    l(e') > l(e) and r(e') < r(e)
    up_up      l(e') > l(e) and r(e') > r(e)
    down_up    l(e') < l(e) and r(e') > r(e)
    down_down  l(e') < l(e) and r(e') < r(e)
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

__all__ = [
    "LadderError",
    "IndexOutOfRange",
    "DuplicateEdge",
    "EdgeNotInInstance",
    "CrossEdge",
    "VertexRef",
    "GeneralizedLadder",
    "QuadrantFlags",
    "QuadrantIndex",
    "SYMMETRIES",
    "new_ladder",
    "from_functigraph",
    "apply_symmetry",
    "symmetry_vertex_map",
    "build_quadrant_index",
    "quadrant_flags",
    "quadrant_flags_naive",
    "all_quadrant_flags",
    "quadrant_members",
]

SYMMETRIES = ("L", "R", "S")


class LadderError(ValueError):
    """Base class for invalid ladder instances or queries."""


class IndexOutOfRange(LadderError):
    pass


class DuplicateEdge(LadderError):
    pass


class EdgeNotInInstance(LadderError):
    pass


class CrossEdge(NamedTuple):
    """Cross edge ``u_l v_r``; tuples compare lexicographically by (l, r)."""

    l: int
    r: int

    def __str__(self) -> str:
        return f"({self.l},{self.r})"


class VertexRef(NamedTuple):
    side: str  # "G1" or "G2"
    index: int

    @classmethod
    def u(cls, i: int) -> VertexRef:
        return cls("G1", i)

    @classmethod
    def v(cls, j: int) -> VertexRef:
        return cls("G2", j)

    @classmethod
    def parse(cls, text: str) -> VertexRef:
        """Parse the short label form ``u3`` / ``v12``."""
        text = text.strip()
        if len(text) < 2 or text[0] not in "uv" or not text[1:].isdigit():
            raise ValueError(f"bad vertex label {text!r}")
        return cls("G1" if text[0] == "u" else "G2", int(text[1:]))

    def __str__(self) -> str:
        return f"{'u' if self.side == 'G1' else 'v'}{self.index}"


class QuadrantFlags(NamedTuple):
    up_down: bool
    up_up: bool
    down_up: bool
    down_down: bool

    def __str__(self) -> str:
        return "".join("T" if f else "F" for f in self)


@dataclass(frozen=True)
class GeneralizedLadder:
    m: int
    n: int
    cross: tuple[CrossEdge, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise LadderError(f"path lengths must be positive, got m={self.m}, n={self.n}")
        prev = None
        for e in self.cross:
            if not (1 <= e.l <= self.m and 1 <= e.r <= self.n):
                raise IndexOutOfRange(f"edge {e} outside [1,{self.m}]x[1,{self.n}]")
            if prev is not None and not prev < e:
                raise LadderError("cross edges must be strictly increasing in (l, r)")
            prev = e

    @property
    def k(self) -> int:
        return len(self.cross)

    def __contains__(self, e: object) -> bool:
        i = bisect.bisect_left(self.cross, e)
        return i < len(self.cross) and self.cross[i] == e

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """The cross edges as two int64 arrays ``(l, r)`` in canonical order."""
        if not self.cross:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        flat = np.fromiter(itertools.chain.from_iterable(self.cross), dtype=np.int64, count=2 * len(self.cross))
        return flat[0::2].copy(), flat[1::2].copy()

    def vertices(self) -> list[VertexRef]:
        return [VertexRef.u(i) for i in range(1, self.m + 1)] + [
            VertexRef.v(j) for j in range(1, self.n + 1)
        ]

    def path_edges(self) -> list[tuple[VertexRef, VertexRef]]:
        return [(VertexRef.u(i), VertexRef.u(i + 1)) for i in range(1, self.m)] + [
            (VertexRef.v(j), VertexRef.v(j + 1)) for j in range(1, self.n)
        ]

    def has_vertex(self, x: VertexRef) -> bool:
        if x.side == "G1":
            return 1 <= x.index <= self.m
        if x.side == "G2":
            return 1 <= x.index <= self.n
        return False

    def adjacent(self, x: VertexRef, y: VertexRef) -> bool:
        if not (self.has_vertex(x) and self.has_vertex(y)):
            return False
        if x.side == y.side:
            return abs(x.index - y.index) == 1
        if x.side == "G2":
            x, y = y, x
        return CrossEdge(x.index, y.index) in self


def new_ladder(m: int, n: int, edges: Iterable[tuple[int, int]]) -> GeneralizedLadder:
    """Validate and canonicalize a generalized (m, n)-ladder."""
    if m < 1 or n < 1:
        raise LadderError(f"path lengths must be positive, got m={m}, n={n}")
    cross = sorted(CrossEdge(int(l), int(r)) for l, r in edges)
    for e in cross:
        if not (1 <= e.l <= m and 1 <= e.r <= n):
            raise IndexOutOfRange(f"edge {e} outside [1,{m}]x[1,{n}]")
    for a, b in zip(cross, cross[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {a} listed twice")
    return GeneralizedLadder(m, n, tuple(cross))


def from_functigraph(n: int, f: Mapping[int, int] | Sequence[int] | Callable[[int], int]) -> GeneralizedLadder:
    """The functigraph C(P_n, f) as a generalized (n, n)-ladder.

    ``f`` may be a callable, a mapping over 1..n, or a sequence ``f(1), .., f(n)``.
    """
    if n < 1:
        raise LadderError(f"n must be positive, got {n}")
    if callable(f):
        values = [f(i) for i in range(1, n + 1)]
    elif isinstance(f, Mapping):
        try:
            values = [f[i] for i in range(1, n + 1)]
        except KeyError as exc:
            raise LadderError(f"f is not defined at {exc.args[0]}") from None
    else:
        values = list(f)
        if len(values) != n:
            raise LadderError(f"expected {n} function values, got {len(values)}")
    for i, fi in enumerate(values, start=1):
        if not 1 <= fi <= n:
            raise IndexOutOfRange(f"f({i}) = {fi} outside [1,{n}]")
    return GeneralizedLadder(n, n, tuple(CrossEdge(i, int(fi)) for i, fi in enumerate(values, start=1)))


# ---------------------------------------------------------------------------
# Symmetry transforms
# ---------------------------------------------------------------------------


def _map_edge(g: GeneralizedLadder, which: str, e: CrossEdge) -> CrossEdge:
    if which == "L":
        return CrossEdge(g.m - e.l + 1, e.r)
    if which == "R":
        return CrossEdge(e.l, g.n - e.r + 1)
    if which == "S":
        return CrossEdge(e.r, e.l)
    raise ValueError(f"unknown symmetry {which!r}")


def apply_symmetry(g: GeneralizedLadder, which: str) -> GeneralizedLadder:
    """Apply the reflection ``L`` (flip G1), ``R`` (flip G2) or swap ``S``."""
    cross = sorted(_map_edge(g, which, e) for e in g.cross)
    m, n = (g.n, g.m) if which == "S" else (g.m, g.n)
    return GeneralizedLadder(m, n, tuple(cross))


def symmetry_edge_map(g: GeneralizedLadder, which: str) -> Callable[[CrossEdge], CrossEdge]:
    """Cross-edge relabeling from ``g`` to ``apply_symmetry(g, which)``."""
    if which not in SYMMETRIES:
        raise ValueError(f"unknown symmetry {which!r}")
    return lambda e: _map_edge(g, which, e)


def symmetry_vertex_map(g: GeneralizedLadder, which: str) -> Callable[[VertexRef], VertexRef]:
    """Vertex relabeling from ``g`` to ``apply_symmetry(g, which)``.

    Each transform is an involution, so the inverse map is
    ``symmetry_vertex_map(apply_symmetry(g, which), which)``.
    """
    m, n = g.m, g.n

    if which == "L":
        return lambda x: VertexRef(x.side, m - x.index + 1) if x.side == "G1" else x
    if which == "R":
        return lambda x: VertexRef(x.side, n - x.index + 1) if x.side == "G2" else x
    if which == "S":
        return lambda x: VertexRef("G2" if x.side == "G1" else "G1", x.index)
    raise ValueError(f"unknown symmetry {which!r}")


# ---------------------------------------------------------------------------
# Quadrant queries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadrantIndex:
    """Prefix/suffix extrema of r over the distinct-l groups of a ladder.

    Position ``i`` refers to the group ``distinct_l[i]``.  The prefix arrays
    cover edges with strictly smaller l, the suffix arrays strictly larger l.
    Empty ranges hold the sentinels ``n + 1`` (min) and ``0`` (max).
    """

    distinct_l: np.ndarray
    prefix_min_r: np.ndarray
    prefix_max_r: np.ndarray
    suffix_min_r: np.ndarray
    suffix_max_r: np.ndarray
    group_of_edge: np.ndarray

    def locate(self, l: int) -> int:
        i = int(np.searchsorted(self.distinct_l, l))
        if i == len(self.distinct_l) or self.distinct_l[i] != l:
            raise EdgeNotInInstance(f"no cross edge with l = {l}")
        return i


def build_quadrant_index(g: GeneralizedLadder) -> QuadrantIndex:
    ls, rs = g.arrays
    lo, hi = g.n + 1, 0
    if len(ls) == 0:
        e = np.zeros(0, dtype=np.int64)
        return QuadrantIndex(e, e, e, e, e, e)
    # ls is sorted, so groups are contiguous runs
    starts = np.flatnonzero(np.r_[True, ls[1:] != ls[:-1]])
    distinct_l = ls[starts]
    gmin = np.minimum.reduceat(rs, starts)
    gmax = np.maximum.reduceat(rs, starts)
    prefix_min = np.r_[lo, np.minimum.accumulate(gmin)[:-1]]
    prefix_max = np.r_[hi, np.maximum.accumulate(gmax)[:-1]]
    suffix_min = np.r_[np.minimum.accumulate(gmin[::-1])[::-1][1:], lo]
    suffix_max = np.r_[np.maximum.accumulate(gmax[::-1])[::-1][1:], hi]
    group = np.repeat(np.arange(len(starts)), np.diff(np.r_[starts, len(ls)]))
    return QuadrantIndex(distinct_l, prefix_min, prefix_max, suffix_min, suffix_max, group)


def quadrant_flags(g: GeneralizedLadder, idx: QuadrantIndex, e: CrossEdge) -> QuadrantFlags:
    if e not in g:
        raise EdgeNotInInstance(f"{e} is not a cross edge of this instance")
    i = idx.locate(e.l)
    r = e.r
    return QuadrantFlags(
        bool(idx.suffix_min_r[i] < r),
        bool(idx.suffix_max_r[i] > r),
        bool(idx.prefix_max_r[i] > r),
        bool(idx.prefix_min_r[i] < r),
    )


def all_quadrant_flags(g: GeneralizedLadder, idx: QuadrantIndex | None = None) -> np.ndarray:
    """Flags of every cross edge as a ``(k, 4)`` boolean array in canonical order.

    Columns follow :class:`QuadrantFlags` field order.
    """
    if idx is None:
        idx = build_quadrant_index(g)
    _, rs = g.arrays
    grp = idx.group_of_edge
    return np.column_stack(
        [
            idx.suffix_min_r[grp] < rs,
            idx.suffix_max_r[grp] > rs,
            idx.prefix_max_r[grp] > rs,
            idx.prefix_min_r[grp] < rs,
        ]
    )


def quadrant_flags_naive(g: GeneralizedLadder, e: CrossEdge) -> QuadrantFlags:
    """Reference implementation: scan every cross edge against the definitions."""
    if e not in g:
        raise EdgeNotInInstance(f"{e} is not a cross edge of this instance")
    ud = uu = du = dd = False
    for f in g.cross:
        if f.l > e.l:
            ud = ud or f.r < e.r
            uu = uu or f.r > e.r
        elif f.l < e.l:
            du = du or f.r > e.r
            dd = dd or f.r < e.r
    return QuadrantFlags(ud, uu, du, dd)


def quadrant_members(g: GeneralizedLadder, e: CrossEdge, quadrant: str) -> list[CrossEdge]:
    """All cross edges in one quadrant of ``e``, in canonical order."""
    tests = {
        "up_down": lambda f: f.l > e.l and f.r < e.r,
        "up_up": lambda f: f.l > e.l and f.r > e.r,
        "down_up": lambda f: f.l < e.l and f.r > e.r,
        "down_down": lambda f: f.l < e.l and f.r < e.r,
    }
    return [f for f in g.cross if tests[quadrant](f)]

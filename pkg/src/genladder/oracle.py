"""Brute-force planarity and outerplanarity for small graphs.

Nothing here looks at quadrant flags; the oracle works on a plain
adjacency structure so it can be used to validate the ladder
characterizations.

Planarity is decided by exhaustive search over rotation systems.  Two
search procedures are provided:

* :func:`enumerate_rotation_systems` walks every combination of cyclic
  orders and counts faces by face tracing.  It is the literal definition
  and is only usable on tiny graphs.
* :func:`oracle_is_planar` builds rotation systems edge by edge, keeping
  the partial system planar at every step (a new edge must be inserted
  into two corners of one face).  Every planar rotation system of the
  graph restricts to a planar rotation system of each connected subgraph,
  so the search is complete; the final system is re-checked by face
  tracing against Euler's relation.

Outerplanarity uses the apex reduction: ``h`` is outerplanar iff ``h``
plus one vertex adjacent to every vertex is planar.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .ladder import GeneralizedLadder

__all__ = [
    "BudgetExceeded",
    "SimpleGraph",
    "DEFAULT_BUDGET",
    "to_simple_graph",
    "complete_graph",
    "path_graph",
    "rotation_space_size",
    "trace_faces",
    "euler_characteristic",
    "enumerate_rotation_systems",
    "naive_is_planar",
    "oracle_is_planar",
    "oracle_is_outerplanar",
]

DEFAULT_BUDGET = 10**7

Rotation = dict[int, list[int]]


class BudgetExceeded(RuntimeError):
    def __init__(self, size: int, budget: int):
        super().__init__(f"search space {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {set(e)}")
            if not all(0 <= x < self.vertex_count for x in e):
                raise ValueError(f"edge {set(e)} out of range")

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(vertex_count, frozenset(frozenset(p) for p in pairs))

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        return adj

    def with_apex(self) -> SimpleGraph:
        apex = self.vertex_count
        extra = frozenset(frozenset((apex, v)) for v in range(self.vertex_count))
        return SimpleGraph(self.vertex_count + 1, self.edges | extra)


def to_simple_graph(g: GeneralizedLadder) -> SimpleGraph:
    """u_i -> i - 1 and v_j -> m + j - 1."""
    m, n = g.m, g.n
    pairs = [(i, i + 1) for i in range(m - 1)]
    pairs += [(m + j, m + j + 1) for j in range(n - 1)]
    pairs += [(e.l - 1, m + e.r - 1) for e in g.cross]
    return SimpleGraph.from_pairs(m + n, pairs)


def complete_graph(k: int) -> SimpleGraph:
    return SimpleGraph.from_pairs(k, itertools.combinations(range(k), 2))


def path_graph(k: int) -> SimpleGraph:
    return SimpleGraph.from_pairs(k, [(i, i + 1) for i in range(k - 1)])


def _components(h: SimpleGraph) -> list[list[int]]:
    adj = h.neighbours()
    seen = [False] * h.vertex_count
    comps = []
    for s in range(h.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# Face tracing
# ---------------------------------------------------------------------------


def trace_faces(rot: Rotation) -> list[list[tuple[int, int]]]:
    """Faces of a rotation system as lists of darts.

    The dart following ``(a, b)`` is ``(b, c)`` where ``c`` succeeds ``a`` in
    the cyclic order at ``b``.
    """
    pos = {v: {w: i for i, w in enumerate(order)} for v, order in rot.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for v, order in rot.items():
        for w in order:
            if (v, w) in seen:
                continue
            face = []
            dart = (v, w)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                around = rot[b]
                dart = (b, around[(pos[b][a] + 1) % len(around)])
            faces.append(face)
    return faces


def euler_characteristic(h: SimpleGraph, rot: Rotation) -> int:
    """V - E + F with the outer faces of all components counted once.

    Isolated vertices contribute one face each before merging.  The value
    equals ``1 + C`` (C components) exactly when every component is
    embedded in the sphere and is smaller otherwise.
    """
    comps = len(_components(h))
    isolated = sum(1 for v in range(h.vertex_count) if not rot.get(v))
    faces = len(trace_faces({v: o for v, o in rot.items() if o})) + isolated
    return h.vertex_count - len(h.edges) + faces - (comps - 1)


def rotation_space_size(h: SimpleGraph) -> int:
    return math.prod(math.factorial(max(0, len(nb) - 1)) for nb in h.neighbours())


def enumerate_rotation_systems(h: SimpleGraph) -> Iterator[Rotation]:
    adj = h.neighbours()
    per_vertex = []
    for nb in adj:
        if len(nb) <= 2:
            per_vertex.append([list(nb)])
        else:
            per_vertex.append([[nb[0], *rest] for rest in itertools.permutations(nb[1:])])
    for choice in itertools.product(*per_vertex):
        yield dict(enumerate(choice))


def naive_is_planar(h: SimpleGraph, budget: int = DEFAULT_BUDGET) -> bool:
    """Try every rotation system; planar iff one satisfies Euler's relation."""
    size = rotation_space_size(h)
    if size > budget:
        raise BudgetExceeded(size, budget)
    target = 1 + len(_components(h))
    return any(euler_characteristic(h, rot) == target for rot in enumerate_rotation_systems(h))


# ---------------------------------------------------------------------------
# Incremental search
# ---------------------------------------------------------------------------


def _insertion_order(vertices: list[int], adj: list[list[int]]) -> list[tuple[int, int]]:
    """Edges of one component, each touching the earlier ones.

    Edges closing a cycle are taken as soon as both ends are present so the
    search hits contradictions early.
    """
    edges = {(min(a, b), max(a, b)) for a in vertices for b in adj[a]}
    placed: set[int] = set()
    order: list[tuple[int, int]] = []
    start = max(vertices, key=lambda v: (len(adj[v]), -v))
    placed.add(start)
    while edges:
        closing = sorted(e for e in edges if e[0] in placed and e[1] in placed)
        if closing:
            e = closing[0]
        else:
            frontier = sorted(
                (e for e in edges if e[0] in placed or e[1] in placed),
                key=lambda e: (-len(adj[e[1] if e[0] in placed else e[0]]), e),
            )
            e = frontier[0]
        edges.discard(e)
        placed.update(e)
        order.append(e)
    return order


class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget)

    def run(self, rot: Rotation, order: list[tuple[int, int]], k: int) -> Rotation | None:
        self.tick()
        if k == len(order):
            return rot
        a, b = order[k]
        if a not in rot or b not in rot:
            old, new = (a, b) if a in rot else (b, a)
            around = rot[old]
            # a new leaf can go in any gap at its attachment vertex
            for gap in range(len(around)):
                nxt = dict(rot)
                nxt[old] = around[: gap + 1] + [new] + around[gap + 1 :]
                nxt[new] = [old]
                found = self.run(nxt, order, k + 1)
                if found is not None:
                    return found
            return None
        for face in trace_faces(rot):
            # corner at x between incoming neighbour p and the next one
            corners_a = [p for p, x in face if x == a]
            corners_b = [p for p, x in face if x == b]
            for pa in corners_a:
                for pb in corners_b:
                    nxt = dict(rot)
                    nxt[a] = _insert_after(rot[a], pa, b)
                    nxt[b] = _insert_after(rot[b], pb, a)
                    found = self.run(nxt, order, k + 1)
                    if found is not None:
                        return found
        return None


def _insert_after(order: list[int], after: int, new: int) -> list[int]:
    i = order.index(after)
    return order[: i + 1] + [new] + order[i + 1 :]


def planar_rotation_system(h: SimpleGraph, budget: int = DEFAULT_BUDGET) -> Rotation | None:
    """A planar rotation system of ``h``, or ``None`` if ``h`` is not planar.

    ``budget`` caps the number of partial rotation systems visited.
    """
    adj = h.neighbours()
    search = _Search(budget)
    rot: Rotation = {}
    for comp in _components(h):
        if len(comp) == 1:
            rot[comp[0]] = []
            continue
        order = _insertion_order(comp, adj)
        a, b = order[0]
        found = search.run({a: [b], b: [a]}, order, 1)
        if found is None:
            return None
        rot.update(found)
    return rot


def oracle_is_planar(h: SimpleGraph, budget: int = DEFAULT_BUDGET) -> bool:
    rot = planar_rotation_system(h, budget)
    if rot is None:
        return False
    # independent confirmation of the search result
    if euler_characteristic(h, rot) != 1 + len(_components(h)):
        raise AssertionError("search returned a non-planar rotation system")
    return True


def oracle_is_outerplanar(h: SimpleGraph, budget: int = DEFAULT_BUDGET) -> bool:
    return oracle_is_planar(h.with_apex(), budget)

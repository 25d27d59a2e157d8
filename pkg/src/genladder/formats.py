"""Instance text format, random instances and SVG output."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .embedding import Embedding
from .ladder import GeneralizedLadder, LadderError, from_functigraph, new_ladder
from .oracle import DEFAULT_BUDGET
from .rng import SplitMix64

__all__ = [
    "ParseError",
    "TooManyEdges",
    "RunConfig",
    "parse_instance",
    "serialize_instance",
    "random_instance",
    "embedding_to_svg",
]


class ParseError(LadderError):
    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class TooManyEdges(LadderError):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    fmt: str = "text"
    output: Optional[str] = None


def _tokens(text: str) -> list[tuple[int, int, str]]:
    """(line, column, token) triples; ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            out.append((lineno, col + 1, tok))
            col += len(tok)
    return out


def _int(tok: tuple[int, int, str]) -> int:
    line, col, s = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(line, col, f"expected an integer, got {s!r}") from None


def parse_instance(text: str) -> GeneralizedLadder:
    """Parse ``ladder <m> <n>`` + ``<l> <r>`` lines, or ``functigraph <n>`` + values."""
    toks = _tokens(text)
    if not toks:
        raise ParseError(1, 1, "empty input")
    head = toks[0]
    if head[2] == "ladder":
        if len(toks) < 3 or toks[1][0] != head[0] or toks[2][0] != head[0]:
            raise ParseError(head[0], head[1], "header must be 'ladder <m> <n>'")
        m, n = _int(toks[1]), _int(toks[2])
        if m < 1 or n < 1:
            raise ParseError(head[0], head[1], "m and n must be positive")
        body = toks[3:]
        rows: dict[int, list[tuple[int, int, str]]] = {}
        for tok in body:
            rows.setdefault(tok[0], []).append(tok)
        edges = []
        seen: dict[tuple[int, int], int] = {}
        for line, row in sorted(rows.items()):
            if len(row) != 2:
                raise ParseError(line, row[0][1], f"expected '<l> <r>', got {len(row)} fields")
            l, r = _int(row[0]), _int(row[1])
            if not 1 <= l <= m:
                raise ParseError(line, row[0][1], f"l = {l} outside [1,{m}]")
            if not 1 <= r <= n:
                raise ParseError(line, row[1][1], f"r = {r} outside [1,{n}]")
            if (l, r) in seen:
                raise ParseError(line, row[0][1], f"duplicate edge ({l},{r}), first on line {seen[(l, r)]}")
            seen[(l, r)] = line
            edges.append((l, r))
        return new_ladder(m, n, edges)
    if head[2] == "functigraph":
        if len(toks) < 2 or toks[1][0] != head[0]:
            raise ParseError(head[0], head[1], "header must be 'functigraph <n>'")
        n = _int(toks[1])
        if n < 1:
            raise ParseError(head[0], head[1], "n must be positive")
        values = toks[2:]
        if len(values) != n:
            where = values[n] if len(values) > n else (head if not values else values[-1])
            raise ParseError(where[0], where[1], f"expected {n} function values, got {len(values)}")
        for i, tok in enumerate(values, start=1):
            v = _int(tok)
            if not 1 <= v <= n:
                raise ParseError(tok[0], tok[1], f"f({i}) = {v} outside [1,{n}]")
        return from_functigraph(n, [_int(t) for t in values])
    raise ParseError(head[0], head[1], f"unknown header {head[2]!r}")


def serialize_instance(g: GeneralizedLadder) -> str:
    lines = [f"ladder {g.m} {g.n}"]
    lines.extend(f"{e.l} {e.r}" for e in g.cross)
    return "\n".join(lines) + "\n"


def random_instance(cfg: RunConfig, m: int, n: int, k: int) -> GeneralizedLadder:
    """``k`` distinct cross edges drawn uniformly from the m x n grid.

    Cell ``c`` in ``range(m * n)`` is the edge ``(c // n + 1, c % n + 1)``.
    """
    if k > m * n:
        raise TooManyEdges(f"k = {k} exceeds m*n = {m * n}")
    rng = SplitMix64(cfg.seed)
    cells = rng.sample(m * n, k)
    return new_ladder(m, n, [(c // n + 1, c % n + 1) for c in cells])


def embedding_to_svg(emb: Embedding, pad: int = 20) -> str:
    scale = max(1.0, emb.m * emb.n / 1000)
    pts = [p for poly in emb.edge_polylines.values() for p in poly] + list(emb.vertex_coords.values())

    def tx(p) -> tuple[float, float]:
        return p[0] / scale, -p[1] / scale

    xs = [tx(p)[0] for p in pts]
    ys = [tx(p)[1] for p in pts]
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    stroke = max(w, h) / 600
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:g} {y0:g} {w:g} {h:g}">',
        f'<g fill="none" stroke="black" stroke-width="{stroke:g}">',
    ]
    for (a, b), poly in sorted(emb.edge_polylines.items()):
        coords = " ".join("{:g},{:g}".format(*tx(p)) for p in poly)
        width = ' stroke-width="{:g}"'.format(2 * stroke) if a.side == b.side else ""
        out.append(f'<polyline points="{coords}"{width}><title>{a}-{b}</title></polyline>')
    out.append("</g>")
    out.append(f'<g font-size="{4 * stroke:g}" font-family="sans-serif">')
    for x, p in sorted(emb.vertex_coords.items()):
        cx, cy = tx(p)
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{2 * stroke:g}"/>')
        out.append(f'<text x="{cx + 3 * stroke:g}" y="{cy - 3 * stroke:g}">{x}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

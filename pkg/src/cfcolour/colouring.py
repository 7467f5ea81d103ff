"""Greedy conflict-free colouring, colouring validators, and exact oracles.

A proper colouring gives adjacent vertices distinct colours.  An odd
colouring additionally requires every vertex with a neighbour to see some
colour an odd number of times in its neighbourhood; a conflict-free
colouring requires some colour to appear exactly once there.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import IO, Literal

from .graph import Graph
from .reach import VertexOrdering, back_reach_profile, reach_set

Criterion = Literal["proper", "odd", "conflict_free"]
CRITERIA = ("proper", "odd", "conflict_free")


@dataclass(frozen=True)
class Colouring:
    """Vertex colours 1..palette; ``colours[v - 1]`` is the colour of vertex v."""

    colours: tuple[int, ...]
    palette: int

    def __post_init__(self) -> None:
        for i, c in enumerate(self.colours):
            if not 1 <= c <= self.palette:
                raise ValueError(f"vertex {i + 1} has colour {c} outside 1..{self.palette}")

    @property
    def n(self) -> int:
        return len(self.colours)

    @property
    def used(self) -> int:
        return len(set(self.colours))

    def of(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return self.colours[v - 1]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: int | None
    detail: str


def greedy_cf_colouring(g: Graph, ordering: VertexOrdering) -> Colouring:
    """Colour the vertices left to right so the result is proper and conflict-free.

    With r the ordering's back-reach at radius 2, the palette has 2r - 1
    colours.  Each vertex avoids the colours of its radius-2 reach set and,
    for every earlier neighbour, the colour of that neighbour's own leftmost
    neighbour; both blocking sets have at most r - 1 colours, so a free
    colour always exists.  Isolated vertices take the smallest free colour
    like everyone else.
    """
    if g.n != ordering.n:
        raise ValueError(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    if g.n == 0:
        return Colouring(colours=(), palette=0)
    r = back_reach_profile(g, ordering, 2).max
    palette = max(1, 2 * r - 1)

    # leftmost[u] is u's neighbour of minimum position (None when isolated).
    leftmost = {
        u: min(g.adjacency[u], key=ordering.position) if g.adjacency[u] else None
        for u in g.vertices
    }

    colour_of: dict[int, int] = {}
    for i, v in enumerate(ordering.seq, start=1):
        blocked = {colour_of[w] for w in reach_set(g, ordering, v, 2) if w != v}
        for u in g.adjacency[v]:
            if ordering.position(u) < i:
                pi = leftmost[u]
                if pi != v:
                    blocked.add(colour_of[pi])
        choice = next((c for c in range(1, palette + 1) if c not in blocked), None)
        if choice is None:
            raise RuntimeError(
                f"palette of {palette} colours exhausted at vertex {v}; "
                "this indicates a bug in the colouring routine"
            )
        colour_of[v] = choice

    return Colouring(colours=tuple(colour_of[v] for v in g.vertices), palette=palette)


def verify_colouring(g: Graph, col: Colouring, criterion: Criterion) -> Verdict:
    """Check one criterion; on failure the witness is a violating vertex.

    Vertices without neighbours are exempt from the odd and conflict_free
    checks, which only constrain non-empty neighbourhoods.
    """
    if col.n != g.n:
        raise ValueError(f"colouring covers {col.n} vertices, graph has {g.n}")
    if criterion == "proper":
        for u, v in g.edges():
            if col.of(u) == col.of(v):
                return Verdict(
                    ok=False,
                    witness=u,
                    detail=f"edge ({u},{v}) is monochromatic in colour {col.of(u)}",
                )
        return Verdict(ok=True, witness=None, detail="no monochromatic edge")
    if criterion not in ("odd", "conflict_free"):
        raise ValueError(f"unknown criterion {criterion!r}, expected one of {CRITERIA}")
    for v in g.vertices:
        if not g.adjacency[v]:
            continue
        counts = Counter(col.of(w) for w in g.adjacency[v])
        if criterion == "odd":
            if not any(k % 2 == 1 for k in counts.values()):
                return Verdict(
                    ok=False,
                    witness=v,
                    detail=f"every colour in the neighbourhood of {v} appears an even number of times",
                )
        else:
            if 1 not in counts.values():
                return Verdict(
                    ok=False,
                    witness=v,
                    detail=f"no colour appears exactly once in the neighbourhood of {v}",
                )
    return Verdict(ok=True, witness=None, detail=f"{criterion} holds at every vertex")


def _variant_ok(g: Graph, colours: list[int], variant: Criterion) -> bool:
    if variant == "proper":
        return True  # properness is enforced during the search
    for v in g.vertices:
        if not g.adjacency[v]:
            continue
        counts = Counter(colours[w - 1] for w in g.adjacency[v])
        if variant == "odd":
            if not any(k % 2 == 1 for k in counts.values()):
                return False
        elif 1 not in counts.values():
            return False
    return True


def exact_chromatic(g: Graph, variant: Criterion, limit: int = 8) -> tuple[int, Colouring]:
    """Smallest palette admitting a proper colouring that satisfies ``variant``.

    Backtracking over vertices in id order with colours 1..c for growing c,
    pruning improper partial assignments; a vertex may introduce at most one
    new colour beyond those already used, which kills colour-permutation
    symmetry.  The odd and conflict_free conditions are checked at leaves.
    """
    if variant not in CRITERIA:
        raise ValueError(f"unknown variant {variant!r}, expected one of {CRITERIA}")
    if g.n > limit:
        raise ValueError(
            f"exact search on {g.n} vertices exceeds limit {limit}; raise limit explicitly"
        )
    if g.n == 0:
        return 0, Colouring(colours=(), palette=0)

    colours = [0] * (g.n + 1)

    def search(v: int, introduced: int, c: int) -> list[int] | None:
        if v > g.n:
            flat = [colours[u] for u in g.vertices]
            return flat if _variant_ok(g, flat, variant) else None
        top = min(c, introduced + 1)
        for colour in range(1, top + 1):
            if any(colours[w] == colour for w in g.adjacency[v] if w < v):
                continue
            colours[v] = colour
            found = search(v + 1, max(introduced, colour), c)
            if found is not None:
                return found
            colours[v] = 0
        return None

    for c in range(1, g.n + 1):
        found = search(1, 0, c)
        if found is not None:
            return c, Colouring(colours=tuple(found), palette=c)
    raise AssertionError("a colouring with n distinct colours always satisfies every variant")


def load_colouring(source: str | bytes | IO) -> Colouring:
    """Read a colouring file: header "n c", then n lines "v colour"."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("colouring file: missing 'n c' header line")
    header = rows[0].split()
    if len(header) != 2:
        raise ValueError(f"colouring file: malformed header {rows[0]!r}, expected 'n c'")
    n, c = int(header[0]), int(header[1])
    if len(rows) - 1 != n:
        raise ValueError(f"colouring file: header declares {n} vertices, body has {len(rows) - 1} lines")
    colours = [0] * n
    seen = set()
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"colouring file: malformed line {ln!r}")
        v, colour = int(parts[0]), int(parts[1])
        if not 1 <= v <= n:
            raise ValueError(f"colouring file: vertex {v} out of range 1..{n}")
        if v in seen:
            raise ValueError(f"colouring file: vertex {v} listed twice")
        seen.add(v)
        colours[v - 1] = colour
    return Colouring(colours=tuple(colours), palette=c)


def save_colouring(col: Colouring) -> str:
    lines = [f"{col.n} {col.palette}"]
    lines += [f"{v} {col.of(v)}" for v in range(1, col.n + 1)]
    return "\n".join(lines) + "\n"

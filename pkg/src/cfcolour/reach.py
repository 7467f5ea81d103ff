"""Vertex orderings, back-reach profiles, and exact s-strong colouring numbers.

For an ordering of the vertices, the reach set of v at radius s collects the
vertices at or before v that can be hit from v by a path of length at most s
whose interior detours only through vertices placed strictly after v.  The
maximum reach-set size over all vertices is the ordering's back-reach; the
minimum back-reach over all orderings is the s-strong colouring number.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Mapping

from .graph import Graph


@dataclass(frozen=True)
class VertexOrdering:
    """A total order on vertices 1..n; ``seq[i]`` is the vertex at position i+1."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.seq)
        if sorted(self.seq) != list(range(1, n + 1)):
            raise ValueError(f"ordering is not a permutation of 1..{n}")
        pos = [0] * (n + 1)
        for i, v in enumerate(self.seq, start=1):
            pos[v] = i
        object.__setattr__(self, "_pos", tuple(pos))

    @property
    def n(self) -> int:
        return len(self.seq)

    def position(self, v: int) -> int:
        """1-based position of v; position 1 is leftmost."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return self._pos[v]  # type: ignore[attr-defined]

    def precedes(self, u: int, v: int) -> bool:
        """True when u is at or before v in the order."""
        return self.position(u) <= self.position(v)

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def shuffled(cls, n: int, seed: int) -> VertexOrdering:
        seq = list(range(1, n + 1))
        random.Random(seed).shuffle(seq)
        return cls(tuple(seq))


@dataclass(frozen=True)
class ReachProfile:
    """Per-vertex reach-set sizes for one ordering at one radius."""

    radius: int
    sizes: Mapping[int, int]
    max: int


def reach_set(g: Graph, ordering: VertexOrdering, v: int, radius: int) -> set[int]:
    """Reach set of v: endpoints at or before v of paths of length <= radius
    whose internal vertices all sit strictly after v.

    Computed by breadth-first search from v in which only v and vertices
    after v are expanded.  Vertices at or before v are collected as endpoints
    but never expanded, so they cannot serve as path interiors; conversely
    any walk found this way shortcuts to a qualifying path.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    if g.n != ordering.n:
        raise ValueError(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    pv = ordering.position(v)
    seen = {v}
    collected = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w in seen:
                    continue
                seen.add(w)
                if ordering.position(w) <= pv:
                    collected.add(w)
                else:
                    nxt.append(w)
        frontier = nxt
    return collected


def back_reach_profile(g: Graph, ordering: VertexOrdering, radius: int) -> ReachProfile:
    """Reach-set sizes of every vertex; ``max`` is the ordering's back-reach."""
    sizes = {v: len(reach_set(g, ordering, v, radius)) for v in g.vertices}
    return ReachProfile(radius=radius, sizes=sizes, max=max(sizes.values(), default=0))


def degeneracy_order(g: Graph) -> tuple[VertexOrdering, int]:
    """Smallest-last elimination ordering and the graph's degeneracy.

    Repeatedly removes a minimum-degree vertex (ties to the smallest id); the
    returned ordering is the reverse of the removal sequence, so every vertex
    has at most d neighbours before it.
    """
    degree = {v: g.degree(v) for v in g.vertices}
    removed: list[int] = []
    alive = set(g.vertices)
    d = 0
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        d = max(d, degree[v])
        alive.discard(v)
        removed.append(v)
        for w in g.adjacency[v]:
            if w in alive:
                degree[w] -= 1
    return VertexOrdering(tuple(reversed(removed))), d


def _cost_given_right(g: Graph, v: int, right: set[int]) -> int:
    # |R(v, 2)| if v is placed with exactly `right` after it: v, its not-yet-placed
    # neighbours, and not-yet-placed vertices one hop past a placed neighbour.
    members = {v}
    for u in g.adjacency[v]:
        if u in right:
            for w in g.adjacency[u]:
                if w not in right:
                    members.add(w)
        else:
            members.add(u)
    return len(members)


def min_backreach_order(g: Graph) -> VertexOrdering:
    """Heuristic ordering aiming for a small back-reach at radius 2.

    Builds the order right to left; each step places the vertex whose
    radius-2 reach set (fully determined once everything to its right is
    fixed) is smallest, ties to the smallest id.  No optimality guarantee.
    """
    right: set[int] = set()
    cost = {v: 1 + g.degree(v) for v in g.vertices}
    placed_rtl: list[int] = []
    remaining = set(g.vertices)
    while remaining:
        v = min(remaining, key=lambda u: (cost[u], u))
        remaining.discard(v)
        placed_rtl.append(v)
        right.add(v)
        # Only vertices within distance 2 of v can see their reach change.
        affected = set(g.adjacency[v])
        for u in g.adjacency[v]:
            affected.update(g.adjacency[u])
        for u in affected & remaining:
            cost[u] = _cost_given_right(g, u, right)
    return VertexOrdering(tuple(reversed(placed_rtl)))


def _reach_size_masked(g: Graph, v: int, right_mask: int, radius: int) -> int:
    # Reach-set size when the vertices in right_mask are exactly those after v.
    seen = {v}
    count = 1
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w in seen:
                    continue
                seen.add(w)
                if right_mask >> (w - 1) & 1:
                    nxt.append(w)
                else:
                    count += 1
        frontier = nxt
    return count


def exact_scol(g: Graph, radius: int, limit: int = 10) -> tuple[int, VertexOrdering]:
    """Exact s-strong colouring number with a witness ordering.

    Minimises the back-reach over all orderings by dynamic programming over
    right-sets: once the set of vertices after v is fixed, v's reach size is
    determined, so orderings sharing a suffix share subproblems.  The witness
    is one optimal ordering; only the value is unique.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    if g.n > limit:
        raise ValueError(
            f"exact search on {g.n} vertices exceeds limit {limit}; raise limit explicitly"
        )
    n = g.n
    if n == 0:
        return 0, VertexOrdering(())
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        # Minimum achievable max reach over the vertices not yet placed,
        # given that `mask` holds everything already placed to the right.
        if mask == full:
            return 0
        out = n + 1
        for v in range(1, n + 1):
            if mask >> (v - 1) & 1:
                continue
            size = _reach_size_masked(g, v, mask, radius)
            if size >= out:
                continue
            out = min(out, max(size, best(mask | (1 << (v - 1)))))
        return out

    value = best(0)
    placed_rtl: list[int] = []
    mask = 0
    while mask != full:
        for v in range(1, n + 1):
            if mask >> (v - 1) & 1:
                continue
            size = _reach_size_masked(g, v, mask, radius)
            if max(size, best(mask | (1 << (v - 1)))) <= value:
                placed_rtl.append(v)
                mask |= 1 << (v - 1)
                break
    best.cache_clear()
    return value, VertexOrdering(tuple(reversed(placed_rtl)))


STRATEGIES = ("identity", "reverse", "random", "degeneracy", "min_backreach")


def make_ordering(g: Graph, strategy: str) -> VertexOrdering:
    """Build an ordering by strategy name; ``random(seed)`` carries its seed."""
    name = strategy.strip()
    if name == "identity":
        return VertexOrdering.identity(g.n)
    if name == "reverse":
        return VertexOrdering.reverse(g.n)
    if name == "degeneracy":
        return degeneracy_order(g)[0]
    if name == "min_backreach":
        return min_backreach_order(g)
    if name == "random":
        return VertexOrdering.shuffled(g.n, 0)
    if name.startswith("random(") and name.endswith(")"):
        try:
            seed = int(name[len("random(") : -1])
        except ValueError:
            raise ValueError(f"malformed strategy {strategy!r}, expected 'random(seed)'") from None
        return VertexOrdering.shuffled(g.n, seed)
    raise ValueError(f"unknown ordering strategy {strategy!r}, expected one of {STRATEGIES}")


def load_ordering(source: str | bytes | IO) -> VertexOrdering:
    """Read an ordering file: one 1-based vertex id per line, top line first."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    seq = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            seq.append(int(ln))
        except ValueError:
            raise ValueError(f"ordering file: malformed line {ln!r}") from None
    return VertexOrdering(tuple(seq))


def save_ordering(ordering: VertexOrdering) -> str:
    return "".join(f"{v}\n" for v in ordering.seq)

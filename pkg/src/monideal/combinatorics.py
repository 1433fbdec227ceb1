"""Graphs and clutters as sources of squarefree monomial ideals.

Vertex conventions (fixed, since fixtures and tests rely on them):

* ``path(n)``, ``cycle(n)``, ``complete(n)``: vertices ``x1..xn`` in order,
  cycle edges ``{x_i, x_{i+1}}`` plus ``{x_1, x_n}``.
* ``wheel(n)``: ``cone(cycle(n-1))``, hub ``x_n`` last.
* ``helm(r)``: rim ``x1..xr``, hub ``x_{r+1}``, pendant ``x_{r+1+i}`` hanging
  off rim vertex ``x_i``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSquarefreeError, ResourceLimitError
from .ideal import MonomialIdeal, intersection
from .ring import RingCtx


@dataclass(frozen=True)
class Clutter:
    vertices: tuple[str, ...]
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        edges = tuple(sorted({frozenset(e) for e in self.edges}, key=lambda e: (len(e), sorted(e))))
        object.__setattr__(self, "edges", edges)
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex names")
        for e in edges:
            if not e:
                raise ValueError("empty edge")
            if not all(0 <= v < n for v in e):
                raise ValueError(f"edge {set(e)} uses unknown vertices")
        for a, b in itertools.combinations(edges, 2):
            if a <= b or b <= a:
                raise ValueError("edges must form an antichain")

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[Iterable[str]]) -> "Clutter":
        idx = {v: i for i, v in enumerate(vertices)}
        return cls(tuple(vertices), tuple(frozenset(idx[v] for v in e) for e in edges))

    @property
    def ring(self) -> RingCtx:
        return RingCtx(self.vertices)

    def edge_names(self) -> list[list[str]]:
        return [[self.vertices[i] for i in sorted(e)] for e in self.edges]

    def to_text(self) -> str:
        return "\n".join(",".join(e) for e in self.edge_names()) + "\n"


class Graph(Clutter):
    """A simple graph: a clutter whose edges all have two vertices."""

    def __post_init__(self):
        super().__post_init__()
        if any(len(e) != 2 for e in self.edges):
            raise ValueError("graph edges must have exactly two vertices")

    def neighbours(self, v: int) -> set[int]:
        return {w for e in self.edges if v in e for w in e if w != v}


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    edges = list(dict.fromkeys(frozenset((a - 1, b - 1)) for a, b in pairs))
    return Graph(_names(n), tuple(edges))


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return _graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 3:
        raise ValueError("complete graph needs n >= 3")
    return _graph(n, itertools.combinations(range(1, n + 1), 2))


def cone(G: Clutter, apex: str | None = None) -> Graph:
    """Add a new last vertex joined to every vertex of ``G``."""
    if not G.vertices:
        raise ValueError("cone over an empty graph")
    apex = apex or f"x{len(G.vertices) + 1}"
    w = len(G.vertices)
    edges = tuple(G.edges) + tuple(frozenset((v, w)) for v in range(w))
    return Graph(G.vertices + (apex,), edges)


def wheel(n: int) -> Graph:
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    return cone(cycle(n - 1))


def helm(r: int) -> Graph:
    if r < 3:
        raise ValueError("helm needs a rim of length >= 3")
    hub = r + 1
    pairs = [(i, i + 1) for i in range(1, r)] + [(1, r)]
    pairs += [(i, hub) for i in range(1, r + 1)]
    pairs += [(i, hub + i) for i in range(1, r + 1)]
    return _graph(2 * r + 1, pairs)


def graph_from_pairs(vertices: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Graph:
    idx = {v: i for i, v in enumerate(vertices)}
    edges = list(dict.fromkeys(frozenset((idx[a], idx[b])) for a, b in pairs))
    return Graph(tuple(vertices), tuple(edges))


def edge_ideal(C: Clutter) -> MonomialIdeal:
    n = len(C.vertices)
    rows = [tuple(1 if i in e else 0 for i in range(n)) for e in C.edges]
    return MonomialIdeal.from_exps(C.ring, rows)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """``∩_{g ∈ G(I)} (x_i : x_i | g)`` for squarefree ``I``."""
    if not I.is_squarefree():
        raise NotSquarefreeError("Alexander duality needs a squarefree ideal")
    if I.is_zero():
        return MonomialIdeal.unit(I.ring)
    if I.is_unit():
        return MonomialIdeal.zero(I.ring)
    return intersection(*[MonomialIdeal.prime(I.ring, [i for i, a in enumerate(g) if a])
                          for g in I.exps])


def cover_ideal(C: Clutter) -> MonomialIdeal:
    """Minimal vertex covers (transversals) of ``C`` as squarefree monomials."""
    return alexander_dual(edge_ideal(C))


def complement_clutter(C: Clutter) -> Clutter:
    """Edges ``V ∖ e``.  Complementing preserves the antichain property
    (``a ⊆ b  iff  V∖b ⊆ V∖a``), so no re-minimization is ever triggered."""
    full = frozenset(range(len(C.vertices)))
    if any(e == full for e in C.edges):
        raise ValueError("an edge equal to the full vertex set has an empty complement")
    return Clutter(C.vertices, tuple(full - e for e in C.edges))


def dominating_ideal(G: Graph, max_vertices: int = 22) -> MonomialIdeal:
    """Ideal of minimal dominating sets: ``S`` dominates when every vertex is
    in ``S`` or adjacent to a member of ``S``."""
    n = len(G.vertices)
    if n == 0:
        raise ValueError("dominating ideal of an empty graph")
    if n > max_vertices:
        raise ResourceLimitError(f"dominating-set enumeration over {n} vertices")
    closed = [(1 << v) | sum(1 << w for w in G.neighbours(v)) for v in range(n)]
    full = (1 << n) - 1
    rows = []
    for mask in range(1, 1 << n):
        cov = 0
        for v in range(n):
            if mask >> v & 1:
                cov |= closed[v]
        if cov == full:
            rows.append(tuple(mask >> v & 1 for v in range(n)))
    return MonomialIdeal.from_exps(G.ring, rows)


def is_bipartite(G: Graph) -> bool:
    colour: dict[int, int] = {}
    for start in range(len(G.vertices)):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.neighbours(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def parse_clutter_text(text: str, vertices: Sequence[str] | None = None) -> Clutter:
    """One edge per line, vertex names separated by commas; ``#`` starts a comment.

    Vertices default to the names in order of first appearance, sorted
    naturally (``x2`` before ``x10``).
    """
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        edges.append([v.strip() for v in line.split(",") if v.strip()])
    if vertices is None:
        seen = {v for e in edges for v in e}
        vertices = sorted(seen, key=natural_key)
    if edges and all(len(e) == 2 for e in edges):
        return graph_from_pairs(vertices, [tuple(e) for e in edges])
    return Clutter.from_names(vertices, edges)


def natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]

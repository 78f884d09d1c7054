"""Simple and framed graphs, their 4-term moves and brute-force coloring oracles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .binary import F2SymMatrix, delta_matroid_of_matrix
from .setsystem import DeltaMatroid, elements_of


class GraphError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FramedGraph:
    """Simple graph on ``0..n-1`` with a 0/1 framing of the vertices."""

    n: int
    edges: frozenset[tuple[int, int]]
    framing: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            edges.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        framing = tuple(int(f) for f in self.framing)
        if len(framing) != self.n or any(f not in (0, 1) for f in framing):
            raise GraphError("framing must assign 0 or 1 to every vertex")
        object.__setattr__(self, "framing", framing)
        if self.labels is not None and (len(self.labels) != self.n or len(set(self.labels)) != self.n):
            raise GraphError("labels must be n distinct names")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        framing: Sequence[int] | None = None,
        labels: Sequence[str] | None = None,
    ) -> FramedGraph:
        return cls(
            n,
            frozenset(edges),
            tuple(framing) if framing is not None else (0,) * n,
            tuple(labels) if labels is not None else None,
        )

    @property
    def is_simple(self) -> bool:
        return not any(self.framing)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> F2SymMatrix:
        rows = [f << i for i, f in enumerate(self.framing)]
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return F2SymMatrix(self.n, tuple(rows))

    def induced(self, U) -> FramedGraph:
        """Induced subgraph on ``U`` (mask or iterable); vertices renumbered in order."""
        keep = elements_of(U) if isinstance(U, int) else tuple(sorted(U))
        pos = {v: i for i, v in enumerate(keep)}
        return FramedGraph(
            len(keep),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
            tuple(self.framing[v] for v in keep),
        )


def delta_matroid_of_framed_graph(G: FramedGraph) -> DeltaMatroid:
    D = delta_matroid_of_matrix(G.adjacency())
    if G.labels is not None:
        object.__setattr__(D, "labels", G.labels)
    return D


def _check_pair(G: FramedGraph, a: int, b: int) -> None:
    if a == b:
        raise GraphError("moves need two distinct vertices")
    if not (0 <= a < G.n and 0 <= b < G.n):
        raise GraphError("vertex out of range")


def edge_switch(G: FramedGraph, a: int, b: int) -> FramedGraph:
    """Toggle the adjacency of ``a`` and ``b``."""
    _check_pair(G, a, b)
    return FramedGraph(G.n, G.edges ^ {_edge(a, b)}, G.framing, G.labels)


def slide_move(G: FramedGraph, a: int, b: int) -> FramedGraph:
    """Toggle the adjacency of ``a`` to each neighbor of ``b`` other than ``a``.

    When ``b`` is framed, the framing of ``a`` and the edge ``ab`` are
    toggled as well.
    """
    _check_pair(G, a, b)
    toggles = {_edge(a, c) for c in G.neighbors(b) if c != a}
    framing = list(G.framing)
    if G.framing[b]:
        toggles ^= {_edge(a, b)}
        framing[a] ^= 1
    return FramedGraph(G.n, G.edges ^ toggles, tuple(framing), G.labels)


def _proper_colorings(G: FramedGraph, t: int) -> Iterator[tuple[int, ...]]:
    for f in product(range(t), repeat=G.n):
        if all(f[u] != f[v] for u, v in G.edges):
            yield f


def stanley_direct(G: FramedGraph, N: int) -> dict[tuple[int, ...], int]:
    """Stanley's function truncated to colors ``c_1..c_N``, by enumerating colorings.

    Returns a map from exponent vectors ``(e_1, ..., e_N)`` to coefficients.
    """
    if not G.is_simple:
        raise GraphError("the coloring definition applies to unframed graphs only")
    out: Counter[tuple[int, ...]] = Counter()
    for f in _proper_colorings(G, N):
        exps = [0] * N
        for c in f:
            exps[c] += 1
        out[tuple(exps)] += 1
    return dict(out)


def chromatic_brute(G: FramedGraph, t: int) -> int:
    """Number of proper colorings in ``t`` colors."""
    if t < 0:
        raise GraphError("number of colors must be non-negative")
    return sum(1 for _ in _proper_colorings(G, t))


def all_graphs(n: int, framed: bool = False) -> Iterator[FramedGraph]:
    """Every labeled (framed) graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    framings = product((0, 1), repeat=n) if framed else [(0,) * n]
    for framing in framings:
        for code in range(1 << len(pairs)):
            yield FramedGraph(n, frozenset(p for k, p in enumerate(pairs) if (code >> k) & 1), framing)


def complete_graph(n: int) -> FramedGraph:
    return FramedGraph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> FramedGraph:
    return FramedGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))

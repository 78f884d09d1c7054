"""Ribbon (embedded) graphs as signed rotation systems.

A vertex is a cyclic sequence of half-edge identifiers; an edge joins two
half-edges and may be twisted.  Faces and boundary components are never
stored, only traced on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from .graphs import FramedGraph
from .setsystem import DeltaMatroid, elements_of


class RibbonError(ValueError):
    pass


@dataclass(frozen=True)
class RibbonEdge:
    h1: Hashable
    h2: Hashable
    twisted: bool = False


@dataclass(frozen=True)
class RibbonGraph:
    vertices: tuple[tuple[Hashable, ...], ...]
    edges: tuple[RibbonEdge, ...]

    def __post_init__(self):
        vertices = tuple(tuple(v) for v in self.vertices)
        edges = tuple(e if isinstance(e, RibbonEdge) else RibbonEdge(*e) for e in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        if not vertices:
            raise RibbonError("a ribbon graph needs at least one vertex")
        at = {}
        for vi, cycle in enumerate(vertices):
            for pos, h in enumerate(cycle):
                if h in at:
                    raise RibbonError(f"half-edge {h!r} appears twice in the rotation system")
                at[h] = (vi, pos)
        ends = {}
        for ei, e in enumerate(edges):
            for h in (e.h1, e.h2):
                if h in ends:
                    raise RibbonError(f"half-edge {h!r} belongs to two edges")
                if h not in at:
                    raise RibbonError(f"half-edge {h!r} is not attached to any vertex")
                ends[h] = ei
            if e.h1 == e.h2:
                raise RibbonError("an edge needs two distinct half-edges")
        if len(ends) != len(at):
            loose = sorted(map(repr, set(at) - set(ends)))
            raise RibbonError(f"half-edges without an edge: {', '.join(loose)}")
        object.__setattr__(self, "_at", at)
        if not self._connected():
            raise RibbonError("ribbon graph must be connected")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        edge = self.edges[e]
        return self._at[edge.h1][0], self._at[edge.h2][0]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def _connected(self) -> bool:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.num_edges):
            u, v = self.endpoints(e)
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.num_vertices)}) == 1


class ChordDiagram(RibbonGraph):
    """A one-vertex ribbon graph with untwisted edges (chords)."""

    def __post_init__(self):
        super().__post_init__()
        if self.num_vertices != 1 or any(e.twisted for e in self.edges):
            raise RibbonError("a chord diagram has one vertex and no twisted edges")

    @classmethod
    def from_word(cls, word: Sequence[Hashable]) -> ChordDiagram:
        """Chord diagram read off a cyclic word in which each chord name occurs twice.

        Chords are numbered by first occurrence; half-edge ``h<i>`` sits at position ``i``.
        """
        first: dict[Hashable, int] = {}
        pairs = []
        for pos, c in enumerate(word):
            if c in first:
                pairs.append((first.pop(c), pos))
            else:
                first[c] = pos
        if first:
            raise RibbonError("every chord name must occur exactly twice")
        pairs.sort()
        return cls(
            (tuple(f"h{i}" for i in range(len(word))),),
            tuple(RibbonEdge(f"h{i}", f"h{j}") for i, j in pairs),
        )


def boundary_components(G: RibbonGraph, S: int | None = None) -> int:
    """Number of boundary components of the spanning ribbon subgraph on edges ``S``.

    Each retained half-edge ``h`` contributes two points, its left and right
    side.  Going around a vertex, the left side of one retained half-edge is
    joined to the right side of the next (a corner).  An untwisted edge joins
    left to right at its two ends, a twisted one left to left.  The boundary
    is the resulting 2-regular graph; a vertex with no retained half-edges is
    a disk of its own.
    """
    if S is None:
        S = (1 << G.num_edges) - 1
    if S < 0 or S >> G.num_edges:
        raise RibbonError("edge subset out of range")
    point: dict[Hashable, int] = {}
    for e in elements_of(S):
        edge = G.edges[e]
        for h in (edge.h1, edge.h2):
            point[h] = 2 * len(point)
    parent = list(range(2 * len(point)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(x, y):
        parent[find(x)] = find(y)

    isolated = 0
    for cycle in G.vertices:
        kept = [point[h] for h in cycle if h in point]
        if not kept:
            isolated += 1
            continue
        for i, p in enumerate(kept):
            join(p, kept[(i + 1) % len(kept)] + 1)
    for e in elements_of(S):
        edge = G.edges[e]
        p, q = point[edge.h1], point[edge.h2]
        if edge.twisted:
            join(p, q)
            join(p + 1, q + 1)
        else:
            join(p, q + 1)
            join(p + 1, q)
    return isolated + len({find(x) for x in range(len(parent))})


def delta_matroid_of_ribbon_graph(G: RibbonGraph) -> DeltaMatroid:
    """Quasi-tree delta-matroid: edge subsets whose ribbon subgraph has one boundary component."""
    return DeltaMatroid(
        G.num_edges, tuple(S for S in range(1 << G.num_edges) if boundary_components(G, S) == 1)
    )


def is_orientable(G: RibbonGraph) -> bool:
    """Whether vertex orientations can be flipped to untwist every edge."""
    side: dict[int, int] = {0: 0}
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.num_vertices)}
    for e, edge in enumerate(G.edges):
        u, v = G.endpoints(e)
        adj[u].append((v, int(edge.twisted)))
        adj[v].append((u, int(edge.twisted)))
    stack = [0]
    while stack:
        u = stack.pop()
        for v, t in adj[u]:
            want = side[u] ^ t
            if v not in side:
                side[v] = want
                stack.append(v)
            elif side[v] != want:
                return False
    return True


def euler_genus(G: RibbonGraph) -> int:
    """``2 - V + E - F`` for the closed surface carrying ``G``."""
    return 2 - G.num_vertices + G.num_edges - boundary_components(G)


def intersection_graph(C: RibbonGraph) -> FramedGraph:
    """Unframed graph on the chords, adjacent when their endpoints interleave."""
    if C.num_vertices != 1 or any(e.twisted for e in C.edges):
        raise RibbonError("intersection graphs are defined for chord diagrams only")
    pos = {h: i for i, h in enumerate(C.vertices[0])}
    spans = [tuple(sorted((pos[e.h1], pos[e.h2]))) for e in C.edges]
    edges = []
    for i, (a, b) in enumerate(spans):
        for j in range(i + 1, len(spans)):
            c, d = spans[j]
            if (a < c < b) != (a < d < b):
                edges.append((i, j))
    return FramedGraph.from_edges(len(spans), edges)


def two_vertex_family(n: int, k: int, layout: tuple[Sequence[int], Sequence[int]]) -> RibbonGraph:
    """Orientable two-vertex ribbon graph with ``k`` parallel edges and ``n - k`` loops.

    ``layout`` gives the cyclic order of edge ends at each vertex as edge
    numbers: edges ``0..k-1`` join the two vertices and occur once in each
    sequence, edges ``k..n-1`` are loops and occur twice in one sequence.
    """
    if not 2 <= k <= n:
        raise RibbonError(f"need 2 <= k <= n, got k={k}, n={n}")
    rot1, rot2 = (list(r) for r in layout)
    for e in range(n):
        c1, c2 = rot1.count(e), rot2.count(e)
        ok = (c1, c2) == (1, 1) if e < k else (c1, c2) in ((2, 0), (0, 2))
        if not ok:
            raise RibbonError(f"layout places edge {e} incorrectly")
    if len(rot1) + len(rot2) != 2 * n:
        raise RibbonError("layout mentions edges outside 0..n-1")
    seen: dict[int, int] = {}
    cycles = []
    for vi, rot in enumerate((rot1, rot2)):
        cyc = []
        for e in rot:
            end = seen.get(e, 0)
            seen[e] = end + 1
            cyc.append(f"{e}.{end}")
        cycles.append(tuple(cyc))
    return RibbonGraph(tuple(cycles), tuple(RibbonEdge(f"{e}.0", f"{e}.1") for e in range(n)))


def _multiset_perms(items: list[int]) -> Iterator[tuple[int, ...]]:
    if not items:
        yield ()
        return
    for x in sorted(set(items)):
        rest = list(items)
        rest.remove(x)
        for tail in _multiset_perms(rest):
            yield (x,) + tail


def family_layouts(n: int, k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All layouts for :func:`two_vertex_family`, up to rotating each vertex.

    Both rotations start at edge 0.  Layouts with every loop at the first
    vertex come first.
    """
    if not 2 <= k <= n:
        raise RibbonError(f"need 2 <= k <= n, got k={k}, n={n}")
    loops = list(range(k, n))
    for where in range(1 << len(loops)):
        at1 = [e for i, e in enumerate(loops) if not (where >> i) & 1]
        at2 = [e for i, e in enumerate(loops) if (where >> i) & 1]
        rest1 = list(range(1, k)) + at1 + at1
        rest2 = list(range(1, k)) + at2 + at2
        for tail1 in _multiset_perms(rest1):
            for tail2 in _multiset_perms(rest2):
                yield (0,) + tail1, (0,) + tail2


def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, q in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1 :]):
            yield [(first, q)] + m


def all_chord_diagrams(m: int) -> Iterator[ChordDiagram]:
    """Every chord diagram with ``m`` chords on ``2m`` labeled points."""
    for pairs in _matchings(list(range(2 * m))):
        yield ChordDiagram(
            (tuple(f"h{i}" for i in range(2 * m)),),
            tuple(RibbonEdge(f"h{i}", f"h{j}") for i, j in pairs),
        )


def all_ribbon_graphs(max_edges: int, max_vertices: int = 2) -> Iterator[RibbonGraph]:
    """Connected signed rotation systems with few edges and vertices.

    Rotation systems that differ only by rotating a vertex are repeated.
    """
    if max_vertices < 1:
        return
    yield RibbonGraph(((),), ())
    for m in range(1, max_edges + 1):
        slots = 2 * m
        splits = [(slots,)]
        if max_vertices >= 2:
            splits += [(d, slots - d) for d in range(1, slots)]
        for split in splits:
            cycles = []
            start = 0
            for d in split:
                cycles.append(tuple(f"h{i}" for i in range(start, start + d)))
                start += d
            for pairs in _matchings(list(range(slots))):
                for flags in range(1 << m):
                    edges = tuple(
                        RibbonEdge(f"h{i}", f"h{j}", bool((flags >> e) & 1)) for e, (i, j) in enumerate(pairs)
                    )
                    try:
                        G = RibbonGraph(tuple(cycles), edges)
                    except RibbonError:
                        continue
                    yield G

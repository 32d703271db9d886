"""Core signed-graph data model.

A :class:`SignedGraph` is an immutable simple undirected graph on densely
indexed vertices ``0..n-1`` with a sign (``+1`` or ``-1``) attached to every
edge.  All higher-level operations (switching, balance checking, negation-set
machinery) are built from the primitives here.

Vertex and edge subsets that travel between functions are wrapped in
:class:`VertexSubset` / :class:`EdgeSubset`, which remember the graph they
belong to; combining a subset with a different graph raises
:class:`~negset.errors.HostMismatchError` instead of silently producing
garbage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import HostMismatchError

POS = 1
NEG = -1

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalized (sorted) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class SignedGraph:
    """Immutable simple signed graph.

    ``edges`` is an iterable of ``(u, v, sign)`` triples with ``sign`` in
    ``{+1, -1}``.  Loops, parallel edges, out-of-range endpoints, and invalid
    signs are rejected at construction time, so every live instance is a
    well-formed simple signed graph.
    """

    __slots__ = ("_n", "_signs", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        signs: dict[Edge, int] = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, s in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if s not in (POS, NEG):
                raise ValueError(f"edge ({u}, {v}) has invalid sign {s!r}")
            e = edge_key(u, v)
            if e in signs:
                raise ValueError(f"parallel edge ({u}, {v})")
            signs[e] = s
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._signs = signs
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._hash: int | None = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_underlying(
        cls,
        n: int,
        pairs: Iterable[Edge],
        negative: Iterable[Edge] = (),
    ) -> "SignedGraph":
        """Build a graph from an unsigned edge list plus the set of negative pairs."""
        neg = {edge_key(*e) for e in negative}
        pair_list = [edge_key(*p) for p in pairs]
        missing = neg - set(pair_list)
        if missing:
            raise ValueError(f"negative pairs {sorted(missing)} are not edges")
        return cls(n, [(u, v, NEG if (u, v) in neg else POS) for u, v in pair_list])

    # -- basic queries --------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._signs)

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as sorted ``(u, v, sign)`` triples, lexicographic."""
        return tuple((u, v, s) for (u, v), s in sorted(self._signs.items()))

    def edge_pairs(self) -> tuple[Edge, ...]:
        return tuple(sorted(self._signs))

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._signs

    def sign(self, u: int, v: int) -> int:
        """Sign of edge uv; raises if uv is not an edge."""
        try:
            return self._signs[edge_key(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def positive_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w in self.neighbors(v) if self._signs[edge_key(v, w)] == POS)

    def negative_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w in self.neighbors(v) if self._signs[edge_key(v, w)] == NEG)

    def positive_degree(self, v: int) -> int:
        return len(self.positive_neighbors(v))

    def negative_degree(self, v: int) -> int:
        return len(self.negative_neighbors(v))

    def degrees(self, v: int) -> tuple[int, int, int]:
        """``(d, d_plus, d_minus)`` for vertex v."""
        d_minus = self.negative_degree(v)
        d = self.degree(v)
        return d, d - d_minus, d_minus

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def positive_edges(self) -> frozenset[Edge]:
        return frozenset(e for e, s in self._signs.items() if s == POS)

    def negative_edges(self) -> frozenset[Edge]:
        return frozenset(e for e, s in self._signs.items() if s == NEG)

    def underlying_matches(self, other: "SignedGraph") -> bool:
        """Same vertex count and same edge set, signs ignored."""
        return self._n == other._n and self._signs.keys() == other._signs.keys()

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise ValueError(f"vertex {v} outside 0..{self._n - 1}")

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._signs == other._signs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._signs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGraph(n={self._n}, m={len(self._signs)})"

    # -- switching and negation -----------------------------------------------

    def switch(self, x: "VertexSubset | Iterable[int]") -> "SignedGraph":
        """Negate every edge with exactly one end in ``x``.

        Switching preserves all circle signs; iterating it over subsets
        enumerates exactly the negation sets of the graph.
        """
        xs = as_vertex_set(self, x)
        return SignedGraph(
            self._n,
            [
                (u, v, -s if (u in xs) != (v in xs) else s)
                for (u, v), s in self._signs.items()
            ],
        )

    def negate_edges(self, y: "EdgeSubset | Iterable[Edge]") -> "SignedGraph":
        """Flip the signs of exactly the edges in ``y``."""
        ys = as_edge_set(self, y)
        return SignedGraph(
            self._n,
            [(u, v, -s if (u, v) in ys else s) for (u, v), s in self._signs.items()],
        )

    def negate_all(self) -> "SignedGraph":
        return SignedGraph(self._n, [(u, v, -s) for (u, v), s in self._signs.items()])

    def circle_sign(self, cycle: Sequence[int]) -> int:
        """Product of edge signs around a closed vertex cycle.

        ``cycle`` lists distinct vertices; the closing edge from last back to
        first is implied.  Raises ``ValueError`` when the input is not a cycle
        of this graph.
        """
        k = len(cycle)
        if k < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(cycle)) != k:
            raise ValueError("cycle repeats a vertex")
        sign = POS
        for i in range(k):
            u, v = cycle[i], cycle[(i + 1) % k]
            sign *= self.sign(u, v)
        return sign

    # -- subgraphs --------------------------------------------------------------

    def positive_subgraph(self) -> "SignedGraph":
        """Same vertices, positive edges only."""
        return SignedGraph(
            self._n, [(u, v, s) for (u, v), s in self._signs.items() if s == POS]
        )

    def negative_subgraph(self) -> "SignedGraph":
        """Same vertices, negative edges only."""
        return SignedGraph(
            self._n, [(u, v, s) for (u, v), s in self._signs.items() if s == NEG]
        )

    def edge_induced_negative(self) -> "InducedSubgraph":
        """Negative subgraph with isolated vertices dropped (indices remapped)."""
        touched = sorted({w for e, s in self._signs.items() if s == NEG for w in e})
        return self.induced(touched)

    def induced(self, vertices: Iterable[int]) -> "InducedSubgraph":
        """Subgraph induced on ``vertices``, reindexed densely.

        The result records the new→host vertex map so answers computed on the
        reduced graph can be lifted back.
        """
        to_host = tuple(sorted(set(vertices)))
        for v in to_host:
            self._check_vertex(v)
        from_host = {v: i for i, v in enumerate(to_host)}
        edges = [
            (from_host[u], from_host[v], s)
            for (u, v), s in self._signs.items()
            if u in from_host and v in from_host
        ]
        return InducedSubgraph(SignedGraph(len(to_host), edges), to_host)

    def cut(self, x: "VertexSubset | Iterable[int]") -> "EdgeSubset":
        """Edges with exactly one end in ``x``."""
        xs = as_vertex_set(self, x)
        return EdgeSubset(
            self, frozenset(e for e in self._signs if (e[0] in xs) != (e[1] in xs))
        )

    # -- connectivity -----------------------------------------------------------

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the components, each sorted, ordered by smallest vertex."""
        seen = [False] * self._n
        comps = []
        for root in range(self._n):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def blocks(self) -> tuple[frozenset[int], ...]:
        """2-connected blocks as vertex sets (cut vertices appear in several).

        A bridge forms a 2-vertex block; an isolated vertex forms a singleton
        block.  Standard lowpoint computation, iterative to dodge recursion
        limits.
        """
        n = self._n
        disc = [-1] * n
        low = [0] * n
        blocks: list[frozenset[int]] = []
        edge_stack: list[Edge] = []
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            if not self._adj[root]:
                blocks.append(frozenset([root]))
                continue
            # (vertex, parent, neighbor iterator)
            stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(self._adj[root]))]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                u, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if w == parent:
                        continue
                    if disc[w] == -1:
                        edge_stack.append((u, w))
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, u, iter(self._adj[w])))
                        advanced = True
                        break
                    if disc[w] < disc[u]:
                        edge_stack.append((u, w))
                        low[u] = min(low[u], disc[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    low[pu] = min(low[pu], low[u])
                    if low[u] >= disc[pu]:
                        members = set()
                        while edge_stack:
                            a, b = edge_stack[-1]
                            if disc[a] < disc[u] and a != pu:
                                break
                            edge_stack.pop()
                            members.add(a)
                            members.add(b)
                            if (a, b) == (pu, u):
                                break
                        if members:
                            blocks.append(frozenset(members))
        return tuple(blocks)

    def cut_vertices(self) -> frozenset[int]:
        count: dict[int, int] = {}
        for blk in self.blocks():
            for v in blk:
                count[v] = count.get(v, 0) + 1
        return frozenset(v for v, c in count.items() if c > 1)

    # -- cores -------------------------------------------------------------------

    def k_core(self, k: int) -> tuple["InducedSubgraph", tuple[frozenset[int], ...]]:
        """The k-core plus the ordered peel batches that were deleted.

        Each batch holds the vertices whose degree dropped below ``k`` at that
        stage (deleted simultaneously).  Reattaching the batches in reverse
        order replays the intermediate graphs of the peeling, which is what
        the acyclic-negation reattachment phase needs.
        """
        if k < 0:
            raise ValueError("k must be nonnegative")
        alive = set(range(self._n))
        deg = {v: len(self._adj[v]) for v in alive}
        batches: list[frozenset[int]] = []
        while True:
            batch = frozenset(v for v in alive if deg[v] < k)
            if not batch:
                break
            batches.append(batch)
            alive -= batch
            for v in batch:
                for w in self._adj[v]:
                    if w in alive:
                        deg[w] -= 1
        return self.induced(alive), tuple(batches)


# -- subset wrappers ---------------------------------------------------------


@dataclass(frozen=True)
class VertexSubset:
    """A set of vertices remembered together with its host graph."""

    host: SignedGraph
    vertices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        for v in self.vertices:
            if not (0 <= v < self.host.n):
                raise ValueError(f"vertex {v} outside host range")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edges (normalized pairs) remembered with its host graph."""

    host: SignedGraph
    edges: frozenset[Edge]

    def __post_init__(self):
        norm = frozenset(edge_key(*e) for e in self.edges)
        object.__setattr__(self, "edges", norm)
        for u, v in norm:
            if not self.host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return edge_key(*e) in self.edges

    def isdisjoint(self, other: "EdgeSubset | Iterable[Edge]") -> bool:
        if isinstance(other, EdgeSubset):
            other = other.edges
        return self.edges.isdisjoint(frozenset(edge_key(*e) for e in other))


@dataclass(frozen=True)
class InducedSubgraph:
    """A reindexed subgraph plus the map back to host vertex ids."""

    graph: SignedGraph
    to_host: tuple[int, ...]

    def host_vertex(self, v: int) -> int:
        return self.to_host[v]

    def host_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.to_host[v] for v in vs)

    def host_edge(self, e: Edge) -> Edge:
        return edge_key(self.to_host[e[0]], self.to_host[e[1]])

    @property
    def from_host(self) -> dict[int, int]:
        return {h: i for i, h in enumerate(self.to_host)}


def as_vertex_set(g: SignedGraph, x: "VertexSubset | Iterable[int]") -> frozenset[int]:
    """Coerce to a validated plain frozenset of vertices of g."""
    if isinstance(x, VertexSubset):
        if x.host != g:
            raise HostMismatchError("vertex subset belongs to a different graph")
        return x.vertices
    xs = frozenset(x)
    for v in xs:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise ValueError(f"vertex {v!r} outside host range")
    return xs


def as_edge_set(g: SignedGraph, y: "EdgeSubset | Iterable[Edge]") -> frozenset[Edge]:
    """Coerce to a validated plain frozenset of normalized edges of g."""
    if isinstance(y, EdgeSubset):
        if y.host != g:
            raise HostMismatchError("edge subset belongs to a different graph")
        return y.edges
    ys = frozenset(edge_key(*e) for e in y)
    for u, v in ys:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the host graph")
    return ys


# -- small graph factory helpers ----------------------------------------------


def complete_graph(n: int, sign: int = POS) -> SignedGraph:
    return SignedGraph(n, [(u, v, sign) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int, sign: int = POS) -> SignedGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SignedGraph(n, [(i, (i + 1) % n, sign) for i in range(n)])


def path_graph(n: int, sign: int = POS) -> SignedGraph:
    return SignedGraph(n, [(i, i + 1, sign) for i in range(n - 1)])


def cube_graph(sign: int = POS) -> SignedGraph:
    """The 3-cube: vertices 0..7 as bit vectors, edges between Hamming neighbors."""
    edges = []
    for u in range(8):
        for bit in (1, 2, 4):
            v = u ^ bit
            if u < v:
                edges.append((u, v, sign))
    return SignedGraph(8, edges)

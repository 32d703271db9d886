"""Constructing structured negation sets.

Three constructions live here:

* :func:`disjoint_partner` — when the negative subgraph is bipartite, produce
  a second negation set sharing no edge with the current one (switch one
  stable side of every negative component plus all untouched vertices).

* :func:`bipartite_negation_for_antibalanced_planar` — for an antibalanced
  graph with a proper 4-coloring (always available when planar), a switching
  whose negation set is bipartite: first switch to the all-negative signing,
  then switch two of the four color classes.

* :func:`acyclic_negation` — for connected graphs of maximum degree four, a
  switching whose negative edges form a *forest*.  This is the heavy one: the
  4-core is peeled off, each core component is ground down by a case analysis
  that repeatedly eliminates fully negative circles (each documented rewrite
  strictly reduces their number, or shifts to a configuration that does), and
  the peeled layers are reattached with a greedy sweep.  The lone obstruction
  is a component switching-equivalent to the all-negative K5, reported via
  :class:`~negset.errors.MinusK5Detected`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .balance import check_balance, is_balanced, is_negation_set
from .errors import IterationBudgetError, MinusK5Detected, PreconditionError
from .graph import (
    NEG,
    POS,
    EdgeSubset,
    SignedGraph,
    VertexSubset,
    edge_key,
)

# -- disjoint partner ----------------------------------------------------------


def disjoint_partner(g: SignedGraph) -> EdgeSubset:
    """A negation set disjoint from E⁻(g), which exists iff E⁻(g) is bipartite.

    Switches the union of one stable side per negative component (the side
    holding the component's smallest vertex) together with every vertex not
    touched by a negative edge.  Every negative edge then lies in the cut, so
    the new negative edge set avoids the old one entirely.  Raises
    :class:`PreconditionError` when the negative subgraph has an odd circle.
    """
    result = check_balance(g.negative_subgraph())
    if not result.balanced:
        raise PreconditionError(
            "the negative subgraph contains an odd circle; no disjoint partner exists"
        )
    assert result.bipartition is not None
    x = result.bipartition.left.vertices
    partner = g.switch(x).negative_edges()
    assert partner.isdisjoint(g.negative_edges())
    return EdgeSubset(g, partner)


# -- antibalanced planar construction ------------------------------------------


@dataclass(frozen=True)
class BipartiteNegation:
    """A switching together with the (bipartite) negation set it realizes."""

    negation_set: EdgeSubset
    switching: VertexSubset


def bipartite_negation_for_antibalanced_planar(
    g: SignedGraph, coloring: Sequence[int] | Mapping[int, int]
) -> BipartiteNegation:
    """Bipartite negation set for an antibalanced graph with a proper 4-coloring.

    ``coloring`` assigns each vertex a color in ``0..3`` with adjacent
    vertices differing (for planar graphs such a coloring always exists; it
    is the caller's job to supply one).  The construction first switches one
    Harary side of the all-edges-negated graph, taking the signing to
    all-negative, then additionally switches color classes 2 and 3; the
    remaining negative edges only ever join classes {0,1} or {2,3}, hence
    form a bipartite graph.
    """
    colors = [coloring[v] for v in range(g.n)]
    if any(c not in (0, 1, 2, 3) for c in colors):
        raise PreconditionError("coloring must use colors 0..3")
    for u, v, _ in g.edges():
        if colors[u] == colors[v]:
            raise PreconditionError(f"coloring is not proper at edge ({u}, {v})")
    result = check_balance(g.negate_all())
    if not result.balanced:
        raise PreconditionError("graph is not antibalanced")
    assert result.bipartition is not None
    w = result.bipartition.right.vertices
    x = frozenset(w) ^ frozenset(v for v in range(g.n) if colors[v] >= 2)
    switched = g.switch(x)
    neg = switched.negative_edges()
    for u, v in neg:
        assert (colors[u] >= 2) == (colors[v] >= 2)
        assert colors[u] != colors[v]
    assert is_balanced(switched.negative_subgraph()), "negation set is not bipartite"
    return BipartiteNegation(EdgeSubset(g, neg), VertexSubset(g, x))


# -- fully negative circles -----------------------------------------------------


def negative_circles(g: SignedGraph) -> tuple[tuple[int, ...], ...]:
    """All circles of the negative subgraph, canonical and sorted.

    Canonical form: the cycle starts at its smallest vertex and runs toward
    the smaller of its two neighbors on the cycle.  Exhaustive enumeration —
    meant for the small graphs this package targets.
    """
    adj = {v: g.negative_neighbors(v) for v in range(g.n)}
    return _enumerate_circles(range(g.n), lambda v: adj[v])


def _enumerate_circles(verts: Iterable[int], nbrs) -> tuple[tuple[int, ...], ...]:
    found: list[tuple[int, ...]] = []
    for root in sorted(verts):
        # simple cycles whose smallest vertex is the root, each reported in a
        # single direction by requiring second vertex < last vertex
        path = [root]
        on_path = {root}

        def extend() -> None:
            u = path[-1]
            for w in sorted(nbrs(u)):
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    on_path.discard(w)
                    path.pop()

        extend()
    return tuple(sorted(found, key=lambda c: (tuple(sorted(c)), c)))


def find_fully_negative_circle(g: SignedGraph) -> tuple[int, ...] | None:
    """Deterministically chosen circle of the negative subgraph, or None."""
    circles = negative_circles(g)
    return circles[0] if circles else None


def fully_negative_path_exists(g: SignedGraph, u: int, v: int) -> bool:
    """Whether u and v are joined by a path of negative edges (u == v counts)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex outside host range")
    if u == v:
        return True
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in g.negative_neighbors(a):
            if b == v:
                return True
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return False


# -- acyclic negation sets for maximum degree four -------------------------------


@dataclass(frozen=True)
class TraceEntry:
    """One rewrite of the construction, as captured by ``trace=True``.

    ``circles_before``/``circles_after`` count fully negative circles in the
    component being worked on (main phase only).  Entries with ``strict`` set
    are the documented strictly-decreasing rewrites.
    """

    phase: str  # "preprocess" | "main" | "reattach"
    label: str
    switched: tuple[int, ...]
    circle: tuple[int, ...] | None
    component: tuple[int, ...] | None
    circles_before: int | None
    circles_after: int | None
    strict: bool


@dataclass(frozen=True)
class AcyclicStats:
    passes: int
    trace: tuple[TraceEntry, ...] | None


@dataclass(frozen=True)
class AcyclicResult:
    negation_set: EdgeSubset
    switching: VertexSubset
    stats: AcyclicStats


class _Work:
    """Mutable switching state over a fixed host graph.

    ``switch`` flips all host edges at a vertex (active or not), so the final
    signs always equal the host switched by the accumulated vertex set.  The
    degree/neighbor queries are restricted to the active vertex set, which
    grows as peeled layers are reattached.
    """

    __slots__ = ("host", "sign", "active", "switched")

    def __init__(self, host: SignedGraph):
        self.host = host
        self.sign = {edge_key(u, v): s for u, v, s in host.edges()}
        self.active: set[int] = set()
        self.switched: set[int] = set()

    def switch(self, v: int) -> None:
        self.switched ^= {v}
        for w in self.host.neighbors(v):
            e = edge_key(v, w)
            self.sign[e] = -self.sign[e]

    def switch_all(self, vs: Iterable[int]) -> None:
        for v in sorted(set(vs)):
            self.switch(v)

    def neighbors(self, v: int) -> list[int]:
        return [w for w in self.host.neighbors(v) if w in self.active]

    def neg_neighbors(self, v: int) -> list[int]:
        return [
            w
            for w in self.host.neighbors(v)
            if w in self.active and self.sign[edge_key(v, w)] == NEG
        ]

    def pos_neighbors(self, v: int) -> list[int]:
        return [
            w
            for w in self.host.neighbors(v)
            if w in self.active and self.sign[edge_key(v, w)] == POS
        ]

    def neg_degree(self, v: int) -> int:
        return len(self.neg_neighbors(v))

    def edge_sign(self, u: int, v: int) -> int:
        return self.sign[edge_key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.active and v in self.active and self.host.has_edge(u, v)

    def snapshot(self) -> SignedGraph:
        return SignedGraph(
            self.host.n, [(u, v, self.sign[(u, v)]) for u, v in self.host.edge_pairs()]
        )


def _work_circles(w: _Work, verts: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    vs = [v for v in verts if v in w.active]
    return _enumerate_circles(vs, w.neg_neighbors)


class _Tracer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.entries: list[TraceEntry] = []
        self.passes = 0
        self._component: tuple[int, ...] | None = None
        self._before: int | None = None

    def begin_pass(self, w: _Work, comp: tuple[int, ...]) -> None:
        self.passes += 1
        if self.enabled:
            self._component = comp
            self._before = len(_work_circles(w, comp))

    def record_pass(self, w, label, switched, circle, strict) -> None:
        if not self.enabled:
            return
        assert self._component is not None
        after = len(_work_circles(w, self._component))
        self.entries.append(
            TraceEntry(
                "main",
                label,
                tuple(sorted(switched)),
                circle,
                self._component,
                self._before,
                after,
                strict,
            )
        )

    def record_sweep(self, phase: str, v: int) -> None:
        if self.enabled:
            self.entries.append(
                TraceEntry(phase, phase, (v,), None, None, None, None, False)
            )


def _find_circle(w: _Work, verts: Iterable[int]) -> tuple[int, ...] | None:
    circles = _work_circles(w, verts)
    return circles[0] if circles else None


def _still_fully_negative(w: _Work, circle: tuple[int, ...]) -> bool:
    k = len(circle)
    return all(w.edge_sign(circle[i], circle[(i + 1) % k]) == NEG for i in range(k))


def _corridor(w: _Work, start: int) -> tuple[list[int], str]:
    """Walk the unique negative path out of a degree-one vertex of Σ:E⁻.

    Every fully negative walk leaving ``start`` begins along this corridor,
    so its first branch vertex (negative degree >= 3) lies on *all* negative
    paths out of ``start``.  Returns the walked vertices (inclusive) and how
    the walk ended: at a ``"junction"`` or at a ``"leaf"``.
    """
    nd = w.neg_neighbors(start)
    assert len(nd) == 1, "corridor must start at a vertex of negative degree 1"
    path = [start]
    prev, cur = start, nd[0]
    while True:
        path.append(cur)
        around = w.neg_neighbors(cur)
        if len(around) >= 3:
            return path, "junction"
        if len(around) == 1:
            return path, "leaf"
        nxt = around[0] if around[1] == prev else around[1]
        assert nxt not in path, "negative corridor closed on itself"
        prev, cur = cur, nxt


@dataclass
class _Action:
    label: str
    switched: tuple[int, ...]
    strict: bool
    shift_data: tuple[int, int, int, int] | None = None  # adjacent shared pair


def _neg_component_ids(w: _Work, comp: Sequence[int]) -> dict[int, int]:
    ids: dict[int, int] = {}
    nxt = 0
    for root in sorted(comp):
        if root in ids or root not in w.active:
            continue
        ids[root] = nxt
        stack = [root]
        while stack:
            u = stack.pop()
            for x in w.neg_neighbors(u):
                if x not in ids:
                    ids[x] = nxt
                    stack.append(x)
        nxt += 1
    return ids


def _classify(w: _Work, comp: Sequence[int], circle: tuple[int, ...]) -> _Action | None:
    """Match the current fully negative circle against the rewrite cases.

    Returns the applicable rewrite, or None when the circle is in the
    residual shape (no high-degree vertex, no chord, positive neighbors all of
    negative degree one and unshared) that the two-circle episode handles.
    """
    cset = set(circle)
    k = len(circle)
    circle_edges = {edge_key(circle[i], circle[(i + 1) % k]) for i in range(k)}

    # a circle vertex with extra negative edges: switch it alone
    for v in sorted(cset):
        if w.neg_degree(v) >= 3:
            return _Action("high-negative-degree", (v,), True)

    # a chord (necessarily positive): switch both of its ends
    for u in sorted(cset):
        for x in w.neighbors(u):
            if x in cset and u < x and (u, x) not in circle_edges:
                return _Action("chord", (u, x), True)

    # a circle vertex whose positive neighbors sit in different components of
    # the negative subgraph: switching it cannot close a new circle
    ncomp = _neg_component_ids(w, comp)
    pos_of = {v: w.pos_neighbors(v) for v in sorted(cset)}
    for v in sorted(cset):
        pns = pos_of[v]
        assert len(pns) == 2, "core circle vertex must have exactly two positive edges"
        if ncomp[pns[0]] != ncomp[pns[1]]:
            return _Action("split-positive-neighbors", (v,), True)

    # positive neighbors of the circle with negative degree zero or >= two
    neighbor_anchors: dict[int, int] = {}
    for v in sorted(cset):
        for z in pos_of[v]:
            neighbor_anchors.setdefault(z, v)
    for z in sorted(neighbor_anchors):
        dz = w.neg_degree(z)
        if dz == 0:
            return _Action("isolated-positive-neighbor", (neighbor_anchors[z],), True)
        if dz >= 2:
            return _Action("attached-positive-neighbor", (z, neighbor_anchors[z]), True)

    ordered = sorted(cset)
    # two circle vertices sharing exactly one positive neighbor: the shared
    # neighbor's negative corridor must branch, and switching the anchor
    # together with that first branch vertex removes the circle and every
    # candidate replacement at once
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            shared = set(pos_of[a]) & set(pos_of[b])
            if len(shared) == 1:
                s = shared.pop()
                path, kind = _corridor(w, s)
                if kind != "junction":
                    raise RuntimeError(
                        "shared positive neighbor has an unbranched negative corridor"
                    )
                return _Action("shared-neighbor-junction", (a, path[-1]), True)

    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            shared = set(pos_of[a]) & set(pos_of[b])
            if len(shared) == 2:
                v3, v4 = sorted(shared)
                negatively_adjacent = (
                    w.host.has_edge(v3, v4) and w.edge_sign(v3, v4) == NEG
                )
                if not negatively_adjacent:
                    return _Action("shared-pair-rectangle", (a, b, v3, v4), True)
                if edge_key(a, b) in circle_edges:
                    return _Action(
                        "shared-pair-shift", (a, b, v4), False, shift_data=(a, b, v3, v4)
                    )
                return _Action("nonadjacent-shared-collapse", (a, b, v3), True)

    return None


@dataclass
class _Episode:
    far_vertex: int
    path: tuple[int, ...]


def _derive_replacement(w: _Work, v: int) -> tuple[tuple[int, ...] | None, int | None]:
    """The circle that would become fully negative on switching circle vertex v.

    Returns ``(circle, None)`` when the corridor between v's positive
    neighbors is clean (the circle is then unique), or ``(None, junction)``
    when the corridor branches first — in which case switching ``{v,
    junction}`` kills every candidate replacement at once.
    """
    x, y = sorted(w.pos_neighbors(v))
    path, kind = _corridor(w, x)
    if kind == "junction":
        return None, path[-1]
    assert path[-1] == y, "corridor ended at a leaf that is not the other neighbor"
    return (v, *path), None


def _component_k5_check(w: _Work, comp: tuple[int, ...]) -> None:
    if len(comp) != 5:
        return
    sub = w.snapshot().induced(comp)
    if sub.graph.edge_count == 10 and is_balanced(sub.graph.negate_all()):
        raise MinusK5Detected(comp)


def _solve_core_component(w: _Work, comp: tuple[int, ...], tracer: _Tracer) -> None:
    _component_k5_check(w, comp)

    # grind every negative degree down to two before touching circles
    while True:
        v = min((u for u in comp if w.neg_degree(u) >= 3), default=None)
        if v is None:
            break
        w.switch(v)
        tracer.record_sweep("preprocess", v)
    assert all(w.neg_degree(u) <= 2 for u in comp)

    edge_total = sum(len(w.neighbors(u)) for u in comp) // 2
    budget = max(100, 10 * len(comp) * edge_total)
    preferred: tuple[int, ...] | None = None
    episode: _Episode | None = None

    for _ in range(budget):
        if preferred is not None and not _still_fully_negative(w, preferred):
            preferred = None
            episode = None
        circle = preferred if preferred is not None else _find_circle(w, comp)
        if circle is None:
            return
        tracer.begin_pass(w, comp)
        preferred = None

        action = _classify(w, comp, circle)
        if action is not None:
            episode = None
            if action.shift_data is None:
                w.switch_all(action.switched)
                tracer.record_pass(w, action.label, action.switched, circle, action.strict)
            else:
                preferred = _apply_pair_shift(w, circle, action.shift_data, tracer)
            continue

        preferred, episode = _case_three(w, comp, circle, episode, tracer)

    raise IterationBudgetError(
        f"component {comp} exceeded the rewrite budget of {budget} passes"
    )


def _apply_pair_shift(
    w: _Work,
    circle: tuple[int, ...],
    data: tuple[int, int, int, int],
    tracer: _Tracer,
) -> tuple[int, ...] | None:
    """Adjacent circle pair sharing two negatively adjacent neighbors.

    Switching ``{v1, v2, v4}`` trades the circle for the fully negative
    triangle ``v1 v2 v3``.  What happens next depends on the triangle's outer
    positive neighbors: all equal leads either to the all-negative-K5
    obstruction or to a four-vertex switch that ends the line; otherwise the
    triangle is re-examined from the top on the next pass.
    """
    v1, v2, v3, v4 = data
    w.switch_all((v1, v2, v4))
    triangle = (v1, v2, v3)
    assert _still_fully_negative(w, triangle)

    def outer(vertex: int, exclude: set[int]) -> int:
        outs = [z for z in w.pos_neighbors(vertex) if z not in exclude]
        assert len(outs) == 1
        return outs[0]

    v5 = outer(v1, {v2, v3, v4})
    v6 = outer(v2, {v1, v3, v4})
    v7 = outer(v3, {v1, v2, v4})
    if v5 == v6 == v7:
        s = v5
        if w.neg_degree(v4) == 1 and w.neg_degree(s) == 1:
            if w.has_edge(v4, s):
                raise MinusK5Detected((v1, v2, v3, v4, s))
            w.switch_all((v2, v3, v4, s))
            net = tuple(sorted({v1, v2, v4} ^ {v2, v3, v4, s}))
            tracer.record_pass(w, "five-wheel-collapse", net, circle, True)
            return None
    tracer.record_pass(w, "shared-pair-shift", (v1, v2, v4), circle, False)
    return triangle


def _case_three(
    w: _Work,
    comp: tuple[int, ...],
    circle: tuple[int, ...],
    episode: _Episode | None,
    tracer: _Tracer,
) -> tuple[tuple[int, ...] | None, _Episode | None]:
    """Residual case: vertex-disjoint circles linked through the positive part.

    One episode pins a start circle and a connecting path, then marches the
    start circle along the path one switch at a time until it sits next to
    the far circle's contact vertex; a final three-vertex switch removes the
    marched circle (any transient debris carries high negative degree and is
    cleaned up by later passes).
    """
    if episode is not None:
        wn = episode.path[-1]
        on_path = [j for j, p in enumerate(episode.path) if p in set(circle)]
        assert on_path, "marched circle lost the connecting path"
        if on_path[-1] == len(episode.path) - 1:
            # the circle swallowed the far endpoint; restart from scratch
            tracer.record_pass(w, "march-degenerate", (), circle, False)
            return circle, None
        contact = min(
            (z for z in circle if w.has_edge(z, wn) and w.edge_sign(z, wn) == POS),
            default=None,
        )
        if contact is not None:
            w.switch_all((episode.far_vertex, contact, wn))
            tracer.record_pass(
                w, "episode-finale", (episode.far_vertex, contact, wn), circle, False
            )
            return None, None
        i = on_path[-1]
        wi, wi1 = episode.path[i], episode.path[i + 1]
        assert w.edge_sign(wi, wi1) == POS
        replacement, junction = _derive_replacement(w, wi)
        if junction is not None:
            w.switch_all((wi, junction))
            tracer.record_pass(w, "march-junction", (wi, junction), circle, True)
            return None, None
        w.switch(wi)
        tracer.record_pass(w, "march-advance", (wi,), circle, False)
        assert replacement is not None and _still_fully_negative(w, replacement)
        return replacement, episode

    # new episode: first prefer any circle that still matches an earlier case
    for other in _work_circles(w, comp):
        if other != circle and _classify(w, comp, other) is not None:
            tracer.record_pass(w, "circle-preference", (), other, False)
            return other, None

    # junction guard on each replacement circle
    replacements: dict[int, tuple[int, ...]] = {}
    for v in sorted(circle):
        replacement, junction = _derive_replacement(w, v)
        if junction is not None:
            w.switch_all((v, junction))
            tracer.record_pass(w, "replacement-junction", (v, junction), circle, True)
            return None, None
        assert replacement is not None
        replacements[v] = replacement

    pick = _pick_episode_pair(w, circle, replacements)
    if pick is None:
        raise RuntimeError(
            "no vertex-disjoint replacement circles joined by a path avoiding the circle"
        )
    v1, v2, path = pick
    w.switch(v1)
    tracer.record_pass(w, "episode-start", (v1,), circle, False)
    marched = replacements[v1]
    assert _still_fully_negative(w, marched)
    return marched, _Episode(v2, path)


def _pick_episode_pair(
    w: _Work,
    circle: tuple[int, ...],
    replacements: dict[int, tuple[int, ...]],
) -> tuple[int, int, tuple[int, ...]] | None:
    cset = set(circle)
    for v1 in sorted(replacements):
        d1 = set(replacements[v1]) - {v1}
        for v2 in sorted(replacements):
            if v2 == v1:
                continue
            d2 = set(replacements[v2]) - {v2}
            assert d1.isdisjoint(d2 | {v2}) and v1 not in d2
            path = _connecting_path(w, d1, d2, cset)
            if path is not None:
                return v1, v2, path
    return None


def _connecting_path(
    w: _Work, sources: set[int], targets: set[int], forbidden: set[int]
) -> tuple[int, ...] | None:
    """Breadth-first path from one replacement circle to the other.

    Interior vertices avoid both circles and the circle being replaced; edge
    signs do not matter.  Returns the vertex path including both endpoints.
    """
    parent: dict[int, int | None] = {s: None for s in sources}
    queue = sorted(sources)
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for x in w.neighbors(u):
            if x in parent or x in forbidden:
                continue
            parent[x] = u
            if x in targets:
                path = [x]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            queue.append(x)
    return None


def acyclic_negation(g: SignedGraph, trace: bool = False) -> AcyclicResult:
    """Switch a connected max-degree-4 graph so its negative edges form a forest.

    Peels down to the 4-core, eliminates every fully negative circle in each
    core component through the case rewrites, then reattaches the peeled
    layers batch by batch, sweeping each batch until its vertices carry at
    most one negative edge.  Raises :class:`MinusK5Detected` when a core
    component is switching-equivalent to the all-negative K5 (the one graph
    without an acyclic negation set), and :class:`PreconditionError` for
    disconnected input or a core vertex of degree above four.
    """
    if not g.is_connected():
        raise PreconditionError("acyclic negation construction requires a connected graph")
    core, batches = g.k_core(4)
    if core.graph.n and core.graph.max_degree() > 4:
        raise PreconditionError("the 4-core has a vertex of degree above four")

    tracer = _Tracer(trace)
    w = _Work(g)
    w.active |= set(core.to_host)

    if core.graph.n:
        components = [
            tuple(sorted(core.host_vertices(c)))
            for c in core.graph.connected_components()
        ]
        for comp in components:
            _solve_core_component(w, comp, tracer)

    for batch in reversed(batches):
        w.active |= batch
        while True:
            v = min((u for u in batch if w.neg_degree(u) >= 2), default=None)
            if v is None:
                break
            w.switch(v)
            tracer.record_sweep("reattach", v)

    final = w.snapshot()
    negation = final.negative_edges()
    switching = frozenset(w.switched)
    assert g.switch(switching).negative_edges() == negation
    assert is_negation_set(g, negation)
    assert not negative_circles(final), "negative subgraph still contains a circle"
    stats = AcyclicStats(tracer.passes, tuple(tracer.entries) if trace else None)
    return AcyclicResult(EdgeSubset(g, negation), VertexSubset(g, switching), stats)

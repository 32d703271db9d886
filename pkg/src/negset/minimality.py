"""Minimality and minimum certificates for negation sets.

A negation set is *minimal* (no negation set is properly contained in it)
exactly when deleting it leaves the graph connected, which makes minimality a
connectivity check.  Minimum-ness is harder; this module implements
sufficient-condition certificates:

* a family of pairwise edge-disjoint negative circles, one per edge of the
  set, certifies minimum size;
* on complete graphs such a family of triangles can be constructed whenever
  enough vertices remain outside the set's support, using a proper edge
  coloring to hand each color class its own spare vertex;
* two negative circles per edge, overlapping exactly in that edge and with
  pairwise disjoint unions, certify a *unique* minimum (given the set is
  already known to be minimum);
* on complete graphs, any negation set with ``2|b| <= n - 2`` is
  automatically the unique minimum.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .balance import is_negation_set
from .errors import MalformedCertificateError, PreconditionError
from .graph import NEG, Edge, SignedGraph, as_edge_set, edge_key

Triangle = tuple[int, int, int]
CirclePair = tuple[Edge, tuple[int, ...], tuple[int, ...]]


def is_minimal(g: SignedGraph, b: Iterable[Edge]) -> bool:
    """Whether negation set ``b`` contains no smaller negation set.

    Characterization: ``b`` is minimal iff the graph with ``b`` deleted is
    still connected.  Requires ``g`` connected and ``b`` a negation set.
    """
    if not g.is_connected():
        raise PreconditionError("minimality characterization requires a connected graph")
    bs = as_edge_set(g, b)
    if not is_negation_set(g, bs):
        raise PreconditionError("b is not a negation set of g")
    remainder = SignedGraph(g.n, [(u, v, s) for u, v, s in g.edges() if (u, v) not in bs])
    return remainder.is_connected()


def _cycle_edges(g: SignedGraph, cycle: Sequence[int]) -> frozenset[Edge]:
    """Edge set of a closed cycle, raising on structural defects."""
    k = len(cycle)
    if k < 3:
        raise MalformedCertificateError(f"circle {tuple(cycle)} has fewer than 3 vertices")
    if len(set(cycle)) != k:
        raise MalformedCertificateError(f"circle {tuple(cycle)} repeats a vertex")
    edges = set()
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not (0 <= u < g.n) or not g.has_edge(u, v):
            raise MalformedCertificateError(
                f"circle {tuple(cycle)} uses missing edge ({u}, {v})"
            )
        edges.add(edge_key(u, v))
    return frozenset(edges)


def verify_disjoint_circle_certificate(
    g: SignedGraph, b: Iterable[Edge], circles: Iterable[Sequence[int]]
) -> bool:
    """Check a minimum certificate: ``|b|`` pairwise edge-disjoint negative circles.

    The circles are not required to touch ``b`` at all; their existence alone
    bounds every negation set from below.  Structurally broken circles raise
    :class:`MalformedCertificateError`; semantic failures (wrong count, a
    positive circle, shared edges) return ``False``.
    """
    bs = as_edge_set(g, b)
    if not is_negation_set(g, bs):
        raise PreconditionError("b is not a negation set of g")
    circle_list = [tuple(c) for c in circles]
    edge_sets = [_cycle_edges(g, c) for c in circle_list]
    if len(circle_list) != len(bs):
        return False
    if any(g.circle_sign(c) != NEG for c in circle_list):
        return False
    used: set[Edge] = set()
    for es in edge_sets:
        if used & es:
            return False
        used |= es
    return True


def verify_two_circle_certificate(
    g: SignedGraph, b: Iterable[Edge], pairs: Iterable[CirclePair]
) -> bool:
    """Check a uniqueness certificate for a set already known to be minimum.

    For each edge ``e`` of ``b`` the certificate supplies two negative
    circles whose edge sets intersect exactly in ``{e}``; the unions of the
    pairs must be pairwise disjoint across edges.  Under the hypothesis that
    ``b`` is minimum (not checked here), a valid certificate makes it the
    unique minimum.  Every edge of ``b`` must be covered exactly once.
    """
    bs = as_edge_set(g, b)
    if not is_negation_set(g, bs):
        raise PreconditionError("b is not a negation set of g")
    entries: list[tuple[Edge, frozenset[Edge], frozenset[Edge], tuple[int, ...], tuple[int, ...]]] = []
    for e, c1, c2 in pairs:
        c1, c2 = tuple(c1), tuple(c2)
        entries.append((edge_key(*e), _cycle_edges(g, c1), _cycle_edges(g, c2), c1, c2))
    if sorted(e for e, *_ in entries) != sorted(bs):
        return False
    unions: list[frozenset[Edge]] = []
    for e, es1, es2, c1, c2 in entries:
        if g.circle_sign(c1) != NEG or g.circle_sign(c2) != NEG:
            return False
        if es1 & es2 != {e}:
            return False
        unions.append(es1 | es2)
    for i in range(len(unions)):
        for j in range(i + 1, len(unions)):
            if unions[i] & unions[j]:
                return False
    return True


def unique_minimum_by_size(g: SignedGraph, b: Iterable[Edge]) -> bool:
    """Size-only uniqueness test on complete graphs: ``2|b| <= n - 2``.

    Returns ``True`` when the bound certifies ``b`` as the unique minimum
    negation set, ``False`` when the test is inconclusive.
    """
    _require_complete(g)
    bs = as_edge_set(g, b)
    if not is_negation_set(g, bs):
        raise PreconditionError("b is not a negation set of g")
    return 2 * len(bs) <= g.n - 2


def _require_complete(g: SignedGraph) -> None:
    if g.edge_count != g.n * (g.n - 1) // 2:
        raise PreconditionError("this certificate construction needs a complete graph")


def triangle_certificate_for_complete(
    g: SignedGraph, b: Iterable[Edge]
) -> tuple[Triangle, ...] | None:
    """Construct edge-disjoint negative triangles proving ``b`` minimum, on K_n.

    Properly edge-colors the graph spanned by ``b`` and assigns each color
    class its own spare vertex outside ``b``'s support; the triangle on an
    edge plus its class spare is negative (circle signs are switching
    invariant, and in the switching where ``b`` is the negative edge set the
    two spare edges are positive).  Triangles of one class share the spare
    but not edges; across classes they are disjoint by coloring.  Returns
    ``None`` when fewer spare vertices exist than colors used.
    """
    _require_complete(g)
    bs = as_edge_set(g, b)
    if not is_negation_set(g, bs):
        raise PreconditionError("b is not a negation set of g")
    if not bs:
        return ()
    support = sorted({v for e in bs for v in e})
    spare_pool = [v for v in range(g.n) if v not in set(support)]
    coloring = misra_gries_edge_coloring(g.n, bs)
    colors_used = sorted(set(coloring.values()))
    if len(spare_pool) < len(colors_used):
        return None
    spare_of = dict(zip(colors_used, spare_pool))
    cert = tuple((u, v, spare_of[coloring[(u, v)]]) for u, v in sorted(bs))
    assert verify_disjoint_circle_certificate(g, bs, cert)
    return cert


def misra_gries_edge_coloring(n: int, edges: Iterable[Edge]) -> dict[Edge, int]:
    """Proper edge coloring with at most Δ+1 colors (Misra–Gries).

    Colors are 0-based ints.  The greedy Δ+1 bound of simpler schemes is not
    enough for the spare-vertex counting above, hence the fan/rotation
    algorithm.  The result is validated before returning.
    """
    edge_list = sorted({edge_key(*e) for e in edges})
    deg: dict[int, int] = {}
    for u, v in edge_list:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    delta = max(deg.values(), default=0)
    ncolors = delta + 1
    color_of: dict[Edge, int] = {}
    # at[v] maps color -> neighbor joined by an edge of that color
    at: dict[int, dict[int, int]] = {v: {} for v in deg}

    def free(x: int) -> int:
        for c in range(ncolors):
            if c not in at[x]:
                return c
        raise AssertionError("no free color at a vertex of degree <= delta")

    def assign(x: int, y: int, c: int) -> None:
        e = edge_key(x, y)
        old = color_of.get(e)
        if old is not None:
            del at[x][old]
            del at[y][old]
        color_of[e] = c
        at[x][c] = y
        at[y][c] = x

    def unassign(x: int, y: int) -> None:
        e = edge_key(x, y)
        c = color_of.pop(e)
        del at[x][c]
        del at[y][c]

    for u, v in edge_list:
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in sorted(at[u]):
                w = at[u][c]
                if w not in in_fan and c not in at[last]:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = free(u)
        d = free(fan[-1])
        if c != d:
            # invert the maximal cd-path starting at u (u lacks c, so it starts
            # with d if it starts at all)
            path = [u]
            cur, want = u, d
            while want in at[cur]:
                cur = at[cur][want]
                if cur in path:  # pragma: no cover - cd paths cannot cycle
                    raise AssertionError("cd path loops")
                path.append(cur)
                want = c if want == d else d
            seq = [(path[i], path[i + 1]) for i in range(len(path) - 1)]
            for x, y in seq:
                unassign(x, y)
            want = d
            for x, y in seq:
                assign(x, y, c if want == d else d)
                want = c if want == d else d
        # first fan vertex where d is now free
        w_idx = next((i for i, w in enumerate(fan) if d not in at[w]), None)
        assert w_idx is not None, "no fan vertex with the target color free"
        # rotate the prefix: clear it, then shift each color one edge down
        shift = [color_of[edge_key(u, fan[i + 1])] for i in range(w_idx)]
        for i in range(1, w_idx + 1):
            unassign(u, fan[i])
        for i in range(w_idx):
            assign(u, fan[i], shift[i])
        assign(u, fan[w_idx], d)

    assert len(color_of) == len(edge_list)
    for x, table in at.items():
        seen_nb = list(table.values())
        assert len(seen_nb) == len(set(seen_nb)) == deg[x]
    assert all(0 <= c <= delta for c in color_of.values())
    return color_of

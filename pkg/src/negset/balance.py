"""Balance, switching equivalence, and negation-set membership.

A signed graph is *balanced* when every circle has positive sign, which
happens exactly when the vertices split into two sides with all positive
edges inside a side and all negative edges across.  :func:`check_balance`
produces that bipartition, or a negative circle witnessing imbalance.

A *negation set* is any edge set that appears as the negative edge set of
some switching of the graph.  Membership reduces to a balance check: ``b`` is
a negation set of ``g`` iff negating ``E⁻(g) △ b`` in ``g`` yields a balanced
graph (equivalently, ``g`` and the graph signed negatively exactly on ``b``
are switching equivalent).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError
from .graph import (
    NEG,
    POS,
    Edge,
    EdgeSubset,
    SignedGraph,
    VertexSubset,
    as_edge_set,
    as_vertex_set,
    edge_key,
)


@dataclass(frozen=True)
class HararyBipartition:
    """Vertex split with positive edges within sides, negative edges across.

    Per component, the side containing the component's smallest vertex lands
    in ``left``, making the result deterministic.
    """

    left: VertexSubset
    right: VertexSubset


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    bipartition: HararyBipartition | None
    negative_circle: tuple[int, ...] | None


def check_balance(g: SignedGraph) -> BalanceResult:
    """Decide balance; return the bipartition or a negative-circle witness.

    Runs a signed BFS two-coloring per component.  On a coloring conflict the
    tree paths to the conflict edge close into a circle whose sign is
    necessarily negative, which is returned as the witness.
    """
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in range(g.n):
        if root in color:
            continue
        color[root] = 0
        parent[root] = -1
        depth[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in g.neighbors(u):
                want = color[u] ^ (1 if g.sign(u, w) == NEG else 0)
                if w not in color:
                    color[w] = want
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] != want:
                    circle = _tree_circle(parent, depth, u, w)
                    return BalanceResult(False, None, circle)
    left = frozenset(v for v, c in color.items() if c == 0)
    right = frozenset(v for v, c in color.items() if c == 1)
    bip = HararyBipartition(VertexSubset(g, left), VertexSubset(g, right))
    return BalanceResult(True, bip, None)


def _tree_circle(parent, depth, u: int, w: int) -> tuple[int, ...]:
    """Close the BFS tree paths from u and w into the circle through edge uw."""
    pu, pw = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pw.append(b)
    # pu ends at the common ancestor, pw likewise; drop the duplicate.
    return tuple(pu + pw[-2::-1])


def is_balanced(g: SignedGraph) -> bool:
    return check_balance(g).balanced


def is_antibalanced(g: SignedGraph) -> bool:
    """True when negating every edge yields a balanced graph."""
    return is_balanced(g.negate_all())


def switching_equivalent(g: SignedGraph, h: SignedGraph) -> bool:
    """Whether two signings of the same underlying graph differ by a switching.

    Equivalent to the product signing (negative where the two disagree) being
    balanced.  Raises :class:`PreconditionError` when the underlying graphs
    differ.
    """
    if not g.underlying_matches(h):
        raise PreconditionError("graphs have different underlying edge sets")
    product = [
        (u, v, NEG if s != h.sign(u, v) else POS) for u, v, s in g.edges()
    ]
    return is_balanced(SignedGraph(g.n, product))


def _product_signing(g: SignedGraph, bs: frozenset[Edge]) -> SignedGraph:
    """Same underlying as g, negative exactly where g's signing and b disagree."""
    toggle = g.negative_edges() ^ bs
    return SignedGraph(
        g.n,
        [(u, v, NEG if (u, v) in toggle else POS) for u, v in g.edge_pairs()],
    )


def is_negation_set(g: SignedGraph, b: EdgeSubset | Iterable[Edge]) -> bool:
    """Whether ``b`` occurs as the negative edge set of some switching of ``g``.

    ``b`` is a negation set iff the signing that is negative exactly on ``b``
    is switching equivalent to ``g``, i.e. iff their product signing is
    balanced.
    """
    bs = as_edge_set(g, b)
    return is_balanced(_product_signing(g, bs))


def negation_set_from_switching(
    g: SignedGraph, x: VertexSubset | Iterable[int]
) -> EdgeSubset:
    """The negation set realized by switching ``x``: ``E⁻(g) △ cut(x)``."""
    xs = as_vertex_set(g, x)
    return EdgeSubset(g, g.switch(xs).negative_edges())


def switching_for_negation_set(
    g: SignedGraph, b: EdgeSubset | Iterable[Edge]
) -> VertexSubset:
    """A switching set realizing negation set ``b`` (smallest-vertex side fixed).

    Raises :class:`PreconditionError` when ``b`` is not a negation set.  The
    returned set never contains vertex 0 of a component, which pins down one
    of the two complementary representatives per component.
    """
    bs = as_edge_set(g, b)
    result = check_balance(_product_signing(g, bs))
    if not result.balanced:
        raise PreconditionError("the given edge set is not a negation set")
    assert result.bipartition is not None
    # Switching one side of the product's bipartition flips exactly the edges
    # where g and the target signing disagree.
    x = result.bipartition.right.vertices
    got = g.switch(x).negative_edges()
    assert got == bs, "switching reconstruction failed"
    return VertexSubset(g, x)


def edge_subset(g: SignedGraph, pairs: Iterable[Edge]) -> EdgeSubset:
    """Convenience wrapper: normalize and host-check a plain pair iterable."""
    return EdgeSubset(g, frozenset(edge_key(*e) for e in pairs))

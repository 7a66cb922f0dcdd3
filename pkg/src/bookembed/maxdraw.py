"""Drawer for book-embeddings in which every wrapping edge strictly
outweighs each edge it wraps (the "max" class)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import seq
from .blocks import (
    block_outer_cycle,
    cut_cycle,
    forest_over,
    incident_in_block,
    lowest_edges,
    unique_max_edge,
)
from .embedding import BookEmbedding
from .errors import NotOuterplanarError, PreconditionError
from .exact import INF
from .graph import build_bc_tree, component_vertex_sets, is_connected
from .outerplanar import outerplane_embedding


@dataclass
class MaxFailure:
    """Why no embedding of the class exists.

    condition 1: some block admits no embedding of the class.
    condition 2: a block's forced order has its parent cut vertex inside.
    condition 3: a block subtree fits on neither side of its cut vertex.
    """

    condition: int
    block: int
    cut_vertex: int = None
    child_block: int = None
    weights: tuple = ()
    detail: str = ""

    def to_json(self, g=None):
        doc = {"condition": self.condition, "block": self.block, "detail": self.detail}
        if self.cut_vertex is not None and g is not None:
            doc["cut_vertex"] = g.labels[self.cut_vertex]
        if self.weights:
            doc["weights"] = [str(w) for w in self.weights]
        return doc


def _forced_block_order(g, edge_ids, cycle, top_eid):
    """Order with the top edge's endpoints first and last; canonical flip."""
    s, t = g.endpoints(top_eid)
    order = cut_cycle(cycle, s, t)
    if order is None:
        return None
    other = cut_cycle(cycle, t, s)
    return min(order, other)


def _max_block_order(g, vertices, edge_ids):
    """Forced order of one block, or (None, reason)."""
    if len(vertices) == 2:
        return list(sorted(vertices)), None
    e_m = unique_max_edge(g, edge_ids)
    if e_m is None:
        return None, "no unique maximum-weight edge"
    cycle = block_outer_cycle(g, vertices, edge_ids)
    if cycle is None:
        raise NotOuterplanarError("block is not outerplanar")
    order = _forced_block_order(g, edge_ids, cycle, e_m)
    if order is None:
        return None, "maximum-weight edge is not on the outer face"
    _pos, children, _roots = forest_over(g, order, edge_ids)
    for eid, kids in children.items():
        w = g.weight(eid)
        for kid in kids:
            if not w > g.weight(kid):
                return None, "an edge does not outweigh an edge it wraps"
    return order, None


def max_biconnected(g, require_first_last=None):
    """Unique embedding of a biconnected outerplanar graph for the max class,
    or None if it admits none.

    With ``require_first_last=(s, t)`` the result is additionally required to
    start at s and end at t (so (s, t) must be the maximum-weight edge).
    """
    if g.n == 1:
        return BookEmbedding((0,))
    emb = outerplane_embedding(g)
    if emb is None:
        raise NotOuterplanarError("graph is not outerplanar")
    order, _reason = _max_block_order(g, list(range(g.n)), list(range(g.m)))
    if order is None:
        return None
    if require_first_last is not None:
        s, t = (g.resolve(v) for v in require_first_last)
        if {order[0], order[-1]} != {s, t}:
            return None
        if order[0] != s:
            order = order[::-1]
    return BookEmbedding(order)


def max_be_drawer(g):
    """Test and construct over a connected outerplanar graph; returns a
    BookEmbedding or a MaxFailure."""
    if not is_connected(g):
        raise PreconditionError("drawer requires a connected graph")
    if g.n == 1:
        return BookEmbedding((0,))
    rooted = build_bc_tree(g, "max-weight-block")
    tree = rooted.tree

    block_order = {}
    block_lr = {}
    for bid, block in enumerate(tree.blocks):
        order, reason = _max_block_order(g, block.vertices, block.edge_ids)
        if order is None:
            return MaxFailure(1, bid, detail=reason)
        parent = rooted.parent_cut[bid]
        if parent is not None:
            if order[-1] == parent:
                order = order[::-1]
            elif order[0] != parent:
                return MaxFailure(
                    2, bid, cut_vertex=parent,
                    detail="parent cut vertex is interior to the block order",
                )
        pos = {v: i for i, v in enumerate(order)}
        lr = {}
        cuts = list(rooted.child_cuts[bid])
        if parent is not None:
            cuts.append(parent)
        for c in cuts:
            el, er = lowest_edges(
                g, pos, c, incident_in_block(g, c, bid, tree.block_of_edge)
            )
            lr[c] = (
                g.weight(el) if el is not None else INF,
                g.weight(er) if er is not None else INF,
            )
        block_order[bid] = order
        block_lr[bid] = lr

    ropes = {}
    for bid in rooted.block_postorder:
        repl = {}
        for ci in rooted.child_cuts[bid]:
            left_w, right_w = block_lr[bid][ci]
            left_parts = []
            right_parts = []
            kids = sorted(
                rooted.child_blocks[ci], key=lambda b2: (-rooted.w_plus[b2], b2)
            )
            for b2 in kids:
                w_plus = rooted.w_plus[b2]
                if w_plus >= left_w and w_plus >= right_w:
                    return MaxFailure(
                        3, bid, cut_vertex=ci, child_block=b2,
                        weights=(w_plus, left_w, right_w),
                        detail="subtree fits on neither side of its cut vertex",
                    )
                child = seq.skipping(ropes[b2], ci)
                r_child = block_lr[b2][ci][1]
                if w_plus < right_w:
                    right_parts.append(child)
                    right_w = r_child
                else:
                    left_parts.append(seq.flip(child))
                    left_w = r_child
            repl[ci] = seq.cat(
                *left_parts, seq.one(ci), *reversed(right_parts)
            )
        ropes[bid] = seq.blk(block_order[bid], repl or None)
    return BookEmbedding(seq.materialize(ropes[rooted.root]))


def embed_max(g):
    """Per-component driver: components concatenated by smallest vertex id,
    single-vertex components moved to the right end."""
    return _per_component(g, max_be_drawer)


def _per_component(g, drawer):
    order = []
    tail = []
    for comp in component_vertex_sets(g):
        if len(comp) == 1:
            tail.extend(comp)
            continue
        sub, to_sub = g.induced(comp)
        result = drawer(sub)
        if not isinstance(result, BookEmbedding):
            return result
        back = {to_sub[v]: v for v in to_sub}
        order.extend(back[v] for v in result.order)
    return BookEmbedding(order + tail)


def star_sort_demo(weights):
    """Sorting via the drawer: build a star, embed it, merge the two
    monotone sides around the center.  Weights must be pairwise distinct."""
    ws = [Fraction(w) for w in weights]
    if len(set(ws)) != len(ws):
        raise ValueError("weights must be pairwise distinct")
    if not ws:
        return []
    labels = ["c"] + [f"u{i}" for i in range(len(ws))]
    edges = [(0, i + 1, w) for i, w in enumerate(ws)]
    from .graph import WeightedGraph

    g = WeightedGraph(labels, edges)
    result = max_be_drawer(g)
    if not isinstance(result, BookEmbedding):
        raise RuntimeError("star embedding unexpectedly failed")
    center_pos = result.position[0]
    left = [g.weight(g.edge_between(0, v)) for v in result.order[:center_pos]]
    right = [g.weight(g.edge_between(0, v)) for v in result.order[center_pos + 1:]]
    # left reads outermost-first (descending), right innermost-first (ascending)
    left.reverse()
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged

"""Drawer for book-embeddings in which every edge strictly outweighs any
sequence of disjointly placed edges under it (the "sum" class).

The general drawer is a bottom-up dynamic program over the block-cut-vertex
tree.  Cut vertices carry a Pareto front of partial embeddings keyed by the
left/right extensions around the cut; blocks carry a front keyed by free
space and total extension.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from . import seq
from .blocks import block_outer_cycle, cut_cycle, forest_over, unique_max_edge
from .embedding import BookEmbedding
from .errors import NotOuterplanarError, PreconditionError
from .graph import build_bc_tree, is_connected
from .maxdraw import _per_component
from .outerplanar import outerplane_embedding


@dataclass
class SumFailure:
    """condition 1: a block admits no embedding of the class;
    condition 2: a block's forced order has its parent cut inside;
    "empty-pareto": some tree node ended with no feasible partial embedding."""

    condition: object
    block: int = None
    cut_vertex: int = None
    detail: str = ""

    def to_json(self, g=None):
        doc = {"condition": self.condition, "detail": self.detail}
        if self.block is not None:
            doc["block"] = self.block
        if self.cut_vertex is not None and g is not None:
            doc["cut_vertex"] = g.labels[self.cut_vertex]
        return doc


def _sum_block_order(g, vertices, edge_ids):
    if len(vertices) == 2:
        return list(sorted(vertices)), None
    e_m = unique_max_edge(g, edge_ids)
    if e_m is None:
        return None, "no unique maximum-weight edge"
    cycle = block_outer_cycle(g, vertices, edge_ids)
    if cycle is None:
        raise NotOuterplanarError("block is not outerplanar")
    s, t = g.endpoints(e_m)
    order = cut_cycle(cycle, s, t)
    if order is None:
        return None, "maximum-weight edge is not on the outer face"
    order = min(order, cut_cycle(cycle, t, s))
    _pos, children, _roots = forest_over(g, order, edge_ids)
    for eid, kids in children.items():
        if kids and not g.weight(eid) > sum(g.weight(k) for k in kids):
            return None, "an edge does not outweigh the edges directly under it"
    return order, None


def sum_biconnected(g):
    """Unique embedding of a biconnected outerplanar graph for the sum class,
    or None."""
    if g.n == 1:
        return BookEmbedding((0,))
    emb = outerplane_embedding(g)
    if emb is None:
        raise NotOuterplanarError("graph is not outerplanar")
    order, _reason = _sum_block_order(g, list(range(g.n)), list(range(g.m)))
    return BookEmbedding(order) if order is not None else None


def _polish_left_right(entries):
    """Keep the Pareto-minimal (lambda, rho) entries: lambda strictly
    increasing, rho strictly decreasing."""
    entries.sort(key=lambda e: (e[1], e[2]))
    kept = []
    for e in entries:
        if kept and kept[-1][2] <= e[2]:
            continue
        kept.append(e)
    return kept


def _consecutive_weight(g, order, x):
    eid = g.edge_between(order[x - 1], order[x])
    if eid is None:
        raise AssertionError("consecutive block vertices must be adjacent")
    return g.weight(eid)


def _greedy(g, order, ell, cuts, centries, forced_first=None):
    """Fill each cut position with the max-left-extension entry that fits.

    ``cuts``: ascending ``(position, cut)`` pairs; ``ell``: remaining free
    space keyed by position (mutated).  ``forced_first`` pins the entry index
    used for ``cuts[0]``.  Returns ``(repl, alpha_sub, tau_extra)`` or None.
    """
    k_last = len(order) - 1
    repl = {}
    alpha_sub = Fraction(0)
    tau_extra = Fraction(0)
    for idx, (x, c) in enumerate(cuts):
        ropes, lams, rhos = centries[c]
        if idx == 0 and forced_first is not None:
            j = forced_first
            if x > 0 and not lams[j] < ell[x]:
                return None
        else:
            j = bisect_left(lams, ell[x]) - 1
            if j < 0:
                return None
        if x < k_last:
            if not rhos[j] < ell[x + 1]:
                return None
            ell[x + 1] -= rhos[j]
        if x == 1:
            alpha_sub = lams[j]
        if x == k_last:
            tau_extra = rhos[j]
        repl[order[x]] = ropes[j]
    return repl, alpha_sub, tau_extra


def sum_be_drawer(g, audit=None):
    """Test and construct over a connected outerplanar graph; returns a
    BookEmbedding or a SumFailure.

    ``audit(kind, node, entries)`` is called with every finished Pareto front
    ("C" nodes: (rope, lambda, rho); "B" nodes: (rope, alpha, tau)) so tests
    can assert the structural invariants at every tree node.
    """
    if not is_connected(g):
        raise PreconditionError("drawer requires a connected graph")
    if g.n == 1:
        return BookEmbedding((0,))
    rooted = build_bc_tree(g, "max-weight-block")
    tree = rooted.tree

    block_order = {}
    for bid, block in enumerate(tree.blocks):
        order, reason = _sum_block_order(g, block.vertices, block.edge_ids)
        if order is None:
            return SumFailure(1, block=bid, detail=reason)
        parent = rooted.parent_cut[bid]
        if parent is not None:
            if order[-1] == parent:
                order = order[::-1]
            elif order[0] != parent:
                return SumFailure(
                    2, block=bid, cut_vertex=parent,
                    detail="parent cut vertex is interior to the block order",
                )
        block_order[bid] = order

    bentries = {}
    centries = {}

    def process_cut(c):
        kids = sorted(rooted.child_blocks[c], key=lambda b2: (tree.blocks[b2].max_weight, b2))
        entries = None
        partial_n = 1
        for b2 in kids:
            bent = bentries[b2]
            partial_n += rooted.n_plus_b[b2] - 1
            if entries is None:
                rope0, _alpha0, tau0 = bent[0]
                entries = [
                    (rope0, Fraction(0), tau0),
                    (seq.flip(rope0), tau0, Fraction(0)),
                ]
            else:
                new = []
                for rope_l, lam, rho in entries:
                    for rope_b, alpha, tau in bent:
                        tail = seq.skipping(rope_b, c)
                        if alpha > rho:
                            new.append((seq.cat(rope_l, tail), lam, tau))
                        if alpha > lam:
                            new.append((seq.cat(seq.flip(tail), rope_l), tau, rho))
                if not new:
                    return None
                entries = _polish_left_right(new)
            assert len(entries) <= partial_n, "Pareto front exceeds the size bound"
        if audit is not None:
            audit("C", c, entries)
        centries[c] = (
            [e[0] for e in entries],
            [e[1] for e in entries],
            [e[2] for e in entries],
        )
        return entries

    def process_block(bid):
        order = block_order[bid]
        k_last = len(order) - 1
        pos = {v: i for i, v in enumerate(order)}
        cuts = sorted((pos[c], c) for c in rooted.child_cuts[bid])
        w_top = g.weight(g.edge_between(order[0], order[k_last]))
        w_first = _consecutive_weight(g, order, 1)

        def fresh_ell():
            return {x: _consecutive_weight(g, order, x) for x in range(1, k_last + 1)}

        is_root = bid == rooted.root
        if is_root and cuts and cuts[0][0] == 0:
            forced = len(centries[cuts[0][1]][0]) - 1  # minimum right extension
            res = _greedy(g, order, fresh_ell(), cuts, centries, forced_first=forced)
            if res is None:
                return None
            entries = [(seq.blk(order, res[0] or None), None, None)]
        elif cuts and cuts[0][0] == 1 and not is_root:
            # All entry choices for the first cut trade free space against
            # room on its right; keep the whole front.
            branches = []
            ropes1, lams1, _rhos1 = centries[cuts[0][1]]
            for j in range(len(ropes1)):
                res = _greedy(g, order, fresh_ell(), cuts, centries, forced_first=j)
                if res is None:
                    continue
                repl, alpha_sub, tau_extra = res
                branches.append(
                    (seq.blk(order, repl), w_first - alpha_sub, w_top + tau_extra)
                )
            if not branches:
                return None
            # built in decreasing free-space order; drop up-down dominated
            kept = []
            for rope, alpha, tau in branches:
                if kept and kept[-1][2] <= tau:
                    continue
                kept.append((rope, alpha, tau))
            kept.reverse()
            entries = kept
        else:
            res = _greedy(g, order, fresh_ell(), cuts, centries)
            if res is None:
                return None
            repl, alpha_sub, tau_extra = res
            entries = [
                (seq.blk(order, repl or None), w_first - alpha_sub, w_top + tau_extra)
            ]
        if audit is not None and not is_root:
            audit("B", bid, entries)
        bentries[bid] = entries
        return entries

    depth = {("B", rooted.root): 0}
    schedule = []
    for bid in reversed(rooted.block_postorder):
        parent = rooted.parent_cut[bid]
        if parent is not None:
            depth[("B", bid)] = depth[("C", parent)] + 1
        schedule.append(("B", bid))
        for c in rooted.child_cuts[bid]:
            depth[("C", c)] = depth[("B", bid)] + 1
            schedule.append(("C", c))
    schedule.sort(key=lambda item: (-depth[item], item[0], item[1]))

    for kind, node in schedule:
        if kind == "C":
            if process_cut(node) is None:
                return SumFailure(
                    "empty-pareto", cut_vertex=node,
                    detail="no feasible combination at a cut vertex",
                )
        else:
            if process_block(node) is None:
                return SumFailure(
                    "empty-pareto", block=node,
                    detail="no feasible block extension",
                )

    return BookEmbedding(seq.materialize(bentries[rooted.root][0][0]))


def embed_sum(g):
    """Per-component driver (components concatenated side by side)."""
    return _per_component(g, sum_be_drawer)

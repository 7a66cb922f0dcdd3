"""Tester/constructor for 1-page embeddings that can support a
finite-resolution two-dimensional drawing: every edge must satisfy
``weight >= burden + 1`` (burden = vertices strictly under the edge).

The driver anchors one edge at a time as the globally unnested edge and runs
a bottom-up pass over the block-cut-vertex tree rooted at the anchor's block.
Cut vertices carry fronts keyed by the vertex counts left/right of the cut;
blocks keep a single maximum-residual extension.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from . import seq
from .blocks import block_outer_cycle, cut_cycle
from .embedding import BookEmbedding
from .errors import NotOuterplanarError, PreconditionError
from .exact import INF
from .graph import BlockCutTree, is_connected
from .maxdraw import _per_component
from .outerplanar import outerplane_embedding


@dataclass
class MinresFailure:
    """Per-anchor failure.

    condition 1: the anchor's own block has no supporting order with the
    anchor outermost; condition 2: some other block has no supporting order
    with its parent cut extreme; condition 3: a cut vertex's fold came up
    empty; condition 4: a block extension failed for every stored order.
    """

    condition: int
    anchor: int
    block: int = None
    cut_vertex: int = None
    detail: str = ""


def _forced_supporting(g, cycle, edge_ids, s, t):
    """Order with s first / t last if it satisfies weight >= span everywhere."""
    order = cut_cycle(cycle, s, t)
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    for eid in edge_ids:
        u, v, w = g.edges[eid]
        if w < abs(pos[u] - pos[v]):
            return None
    return order


def minres_biconnected_with_edge(g, s, t):
    """Supporting embedding of a biconnected outerplanar graph with the edge
    (s, t) outermost (s first, t last), or None."""
    s, t = g.resolve(s), g.resolve(t)
    if g.edge_between(s, t) is None:
        raise PreconditionError("(s, t) must be an edge")
    emb = outerplane_embedding(g)
    if emb is None:
        raise NotOuterplanarError("graph is not outerplanar")
    order = _forced_supporting(g, list(emb.cycle), range(g.m), s, t)
    return BookEmbedding(order) if order is not None else None


def _block_spans(g, order, edge_ids):
    pos = {v: i for i, v in enumerate(order)}
    spans = []
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, eid))
    return spans


class _AnchorRun:
    def __init__(self, g, tree, cycles, e_star, audit=None):
        self.g = g
        self.tree = tree
        self.cycles = cycles
        self.e_star = e_star
        self.audit = audit

    def run(self):
        g, tree = self.g, self.tree
        b_star = tree.block_of_edge[self.e_star]
        rooted = tree.rooted(b_star)
        self.rooted = rooted

        candidates = {}
        for bid, block in enumerate(tree.blocks):
            cycle = self.cycles[bid]
            if cycle is None:
                raise NotOuterplanarError("block is not outerplanar")
            if bid == b_star:
                u, v = g.endpoints(self.e_star)
                if u > v:
                    u, v = v, u
                order = _forced_supporting(g, cycle, block.edge_ids, u, v)
                if order is None:
                    return MinresFailure(
                        1, self.e_star, block=bid,
                        detail="anchor block has no supporting order with the anchor outermost",
                    )
                candidates[bid] = [order]
                continue
            c = rooted.parent_cut[bid]
            found = []
            if len(cycle) == 2:
                ends = [cycle[1] if cycle[0] == c else cycle[0]]
            else:
                i = cycle.index(c)
                ends = {cycle[(i - 1) % len(cycle)], cycle[(i + 1) % len(cycle)]}
            for x in sorted(ends):
                order = _forced_supporting(g, cycle, block.edge_ids, c, x)
                if order is not None:
                    found.append(order)
            if not found:
                return MinresFailure(
                    2, self.e_star, block=bid, cut_vertex=c,
                    detail="no supporting order keeps the parent cut extreme",
                )
            candidates[bid] = found

        centries = {}
        bresults = {}

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
                result = self._process_cut(node, centries, bresults)
                if result is None:
                    return MinresFailure(
                        3, self.e_star, cut_vertex=node,
                        detail="no feasible combination at a cut vertex",
                    )
            else:
                result = self._process_block(node, candidates[node], centries)
                if result is None:
                    return MinresFailure(
                        4, self.e_star, block=node,
                        detail="no supporting extension of the block",
                    )
                bresults[node] = result

        rope, _residual = bresults[rooted.root]
        return BookEmbedding(seq.materialize(rope))

    def _process_cut(self, c, centries, bresults):
        rooted = self.rooted
        kids = sorted(
            rooted.child_blocks[c],
            key=lambda b2: (bresults[b2][1] + rooted.n_plus_b[b2], b2),
        )
        entries = None
        partial_n = 1
        for b2 in kids:
            rope_b, resid = bresults[b2]
            size = rooted.n_plus_b[b2]
            partial_n += size - 1
            if entries is None:
                entries = [(rope_b, 0, size - 1), (seq.flip(rope_b), size - 1, 0)]
                if size == 1:
                    entries = entries[:1]
            else:
                new = []
                tail = seq.skipping(rope_b, c)
                for rope, nl, nr in entries:
                    if resid >= nr:
                        new.append((seq.cat(rope, tail), nl, nr + size - 1))
                    if resid >= nl:
                        new.append((seq.cat(seq.flip(tail), rope), nl + size - 1, nr))
                if not new:
                    return None
                new.sort(key=lambda e: e[1])
                entries = []
                for e in new:
                    if entries and entries[-1][1] == e[1]:
                        continue
                    entries.append(e)
            assert len(entries) <= partial_n, "front exceeds the size bound"
        if self.audit is not None:
            self.audit("C", c, entries)
        centries[c] = (
            [e[0] for e in entries],
            [e[1] for e in entries],
            [e[2] for e in entries],
        )
        return entries

    def _process_block(self, bid, orders, centries):
        g, rooted = self.g, self.rooted
        block = self.tree.blocks[bid]
        best = None
        for order in orders:
            out = self._extend_block(bid, block, order, centries)
            if out is None:
                continue
            if best is None or out[1] > best[1]:
                best = out
        if best is not None and self.audit is not None:
            self.audit("B", bid, best)
        return best

    def _extend_block(self, bid, block, order, centries):
        g, rooted = self.g, self.rooted
        spans = _block_spans(g, order, block.edge_ids)
        beta = [b - a - 1 for a, b, _ in spans]
        weights = [g.weight(e) for _, _, e in spans]
        pos = {v: i for i, v in enumerate(order)}
        cuts = sorted(((pos[c], c) for c in rooted.child_cuts[bid]), reverse=True)
        repl = {}
        for x, c in cuts:
            ropes, nls, nrs = centries[c]
            size = rooted.n_plus_c[c]
            total = size - 1
            cover_min = left_min = right_min = INF
            for i, (a, b, _e) in enumerate(spans):
                if a < x < b:
                    slack = weights[i] - beta[i] - 1
                    if slack < cover_min:
                        cover_min = slack
                elif b == x:
                    slack = weights[i] - beta[i] - 1
                    if slack < left_min:
                        left_min = slack
                elif a == x:
                    slack = weights[i] - beta[i] - 1
                    if slack < right_min:
                        right_min = slack
            if not cover_min >= total:
                return None
            # entries sorted by n_left; the splice is supporting iff
            # n_left <= left_min and n_right <= right_min
            if right_min is INF:
                j = 0
            else:
                j = bisect_left(nls, total - right_min)
                if j >= len(nls):
                    return None
            if not nls[j] <= left_min:
                return None
            for i, (a, b, _e) in enumerate(spans):
                if a < x < b:
                    beta[i] += total
                elif b == x:
                    beta[i] += nls[j]
                elif a == x:
                    beta[i] += nrs[j]
            repl[order[x]] = ropes[j]
        residual = INF
        for i, (a, b, _e) in enumerate(spans):
            if a == 0:
                slack = weights[i] - beta[i] - 1
                if slack < residual:
                    residual = slack
        return seq.blk(order, repl or None), residual


def minres_be_drawer_anchor(g, e_star, *, decomposition=None, cycles=None, audit=None):
    """Supporting embedding in which ``e_star`` is nested under no edge, or a
    MinresFailure."""
    if not is_connected(g):
        raise PreconditionError("drawer requires a connected graph")
    tree = decomposition or BlockCutTree(g)
    if cycles is None:
        cycles = [
            block_outer_cycle(g, b.vertices, b.edge_ids) for b in tree.blocks
        ]
    return _AnchorRun(g, tree, cycles, e_star, audit=audit).run()


def minres_be_drawer(g, threads=1, audit=None):
    """Supporting embedding of a connected outerplanar graph, or None.

    Anchors are tried in edge-id order; the first success wins, making the
    result deterministic whatever the level of parallelism.
    """
    if not is_connected(g):
        raise PreconditionError("drawer requires a connected graph")
    if g.n == 1:
        return BookEmbedding((0,))
    tree = BlockCutTree(g)
    cycles = [block_outer_cycle(g, b.vertices, b.edge_ids) for b in tree.blocks]
    if any(c is None for c in cycles):
        raise NotOuterplanarError("graph is not outerplanar")
    anchors = list(range(g.m))
    if threads > 1:
        try:
            return _parallel_anchors(g, anchors, threads)
        except Exception:
            pass  # fall back to the sequential loop
    for e_star in anchors:
        result = _AnchorRun(g, tree, cycles, e_star, audit=audit).run()
        if isinstance(result, BookEmbedding):
            return result
    return None


def _anchor_worker(args):
    g, e_star = args
    result = minres_be_drawer_anchor(g, e_star)
    return e_star, result if isinstance(result, BookEmbedding) else None


def _parallel_anchors(g, anchors, threads):
    import multiprocessing

    with multiprocessing.Pool(threads) as pool:
        for e_star, result in pool.imap(
            _anchor_worker, ((g, a) for a in anchors), chunksize=4
        ):
            if result is not None:
                pool.terminate()
                return result
    return None


def embed_minres(g):
    """Per-component driver; None when some component admits no embedding."""
    result = _per_component(g, _drawer_or_none)
    return result if isinstance(result, BookEmbedding) else None


def _drawer_or_none(sub):
    result = minres_be_drawer(sub)
    return result if result is not None else _NO_EMBEDDING


class _NoEmbedding:
    pass


_NO_EMBEDDING = _NoEmbedding()

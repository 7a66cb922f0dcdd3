"""Two-dimensional book-embeddings: edges drawn as stacked axis-parallel
rectangles of exactly their weight's area over a vertex baseline.

Three constructions: exact-area boxes for biconnected graphs, the
epsilon-augmented construction for arbitrary outerplanar graphs (dummy edges
added, drawn, then deleted), and the unit-resolution construction from a
supporting 1-page embedding.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import seq
from .blocks import block_outer_cycle
from .embedding import BookEmbedding, validate_minres_supporting
from .errors import NotOuterplanarError, PreconditionError
from .exact import format_rational, parse_rational
from .graph import BlockCutTree, WeightedGraph, component_vertex_sets
from .outerplanar import nesting_forest, outerplane_embedding


class TwoDimEmbedding:
    """Vertex x-coordinates plus one rectangle per edge, all exact rationals."""

    __slots__ = ("support", "x", "rects")

    def __init__(self, support, x, rects):
        self.support = support
        self.x = dict(x)
        self.rects = dict(rects)

    def bounding_box(self):
        """(width, height) of the smallest box enclosing the rectangles."""
        if not self.rects:
            return Fraction(0), Fraction(0)
        xmin = min(r[0] for r in self.rects.values())
        xmax = max(r[1] for r in self.rects.values())
        ymin = min(r[2] for r in self.rects.values())
        ymax = max(r[3] for r in self.rects.values())
        return xmax - xmin, ymax - ymin

    def area(self):
        w, h = self.bounding_box()
        return w * h

    def to_json(self, g):
        doc = {
            "vertices": [
                {"id": g.labels[v], "x": format_rational(self.x[v])}
                for v in self.support.order
            ],
            "edges": [
                {
                    "u": g.labels[u],
                    "v": g.labels[v],
                    "w": format_rational(w),
                    "rect": [format_rational(c) for c in self.rects[eid]],
                }
                for eid, (u, v, w) in enumerate(g.edges)
            ],
        }
        return json.dumps(doc)

    @staticmethod
    def from_json(text):
        """Parse the serialized form; returns ``(graph, embedding)``."""
        doc = json.loads(text)
        labels = [entry["id"] for entry in doc["vertices"]]
        index = {lab: i for i, lab in enumerate(labels)}
        g = WeightedGraph(
            labels,
            [
                (index[entry["u"]], index[entry["v"]], parse_rational(entry["w"]))
                for entry in doc["edges"]
            ],
        )
        order = list(range(g.n))  # vertices are serialized in support order
        x = {
            index[entry["id"]]: parse_rational(entry["x"])
            for entry in doc["vertices"]
        }
        rects = {}
        for eid, entry in enumerate(doc["edges"]):
            rects[eid] = tuple(parse_rational(c) for c in entry["rect"])
        return g, TwoDimEmbedding(BookEmbedding(order), x, rects)


def _forest_for(order, edge_list):
    """Nesting forest over ``edge_list`` of (u, v, w, key); returns
    (spans, children, roots) with spans aligned to edge_list indices."""
    pos = {v: i for i, v in enumerate(order)}
    spans = []
    for u, v, _w, _key in edge_list:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, _key))
    parent, children, roots = nesting_forest(len(order), spans)
    children = [sorted(kids, key=lambda k: spans[k][0]) for kids in children]
    return pos, spans, children, roots


def _draw_region(order, edge_list, length, height, x_offset=Fraction(0)):
    """Exact-area drawing of a biconnected structure given its forced order.

    ``edge_list`` holds (u, v, w, key); the forest must have a single root
    (the edge joining the order's endpoints).  Returns (vx, rects by key).
    """
    pos, spans, children, roots = _forest_for(order, edge_list)
    assert len(roots) == 1, "top edge must wrap every other edge"
    subtree = [None] * len(edge_list)
    post = []
    stack = list(roots)
    while stack:
        i = stack.pop()
        post.append(i)
        stack.extend(children[i])
    for i in reversed(post):
        total = edge_list[i][2]
        for k in children[i]:
            total += subtree[k]
        subtree[i] = total

    vx = {order[0]: x_offset, order[-1]: x_offset + length}
    rects = {}
    frames = [(roots[0], x_offset, x_offset + length, height)]
    while frames:
        i, x_lo, x_hi, h_region = frames.pop()
        u, v, w, key = edge_list[i]
        width = x_hi - x_lo
        kids = children[i]
        if not kids:
            rects[key] = (x_lo, x_hi, Fraction(0), h_region)
            continue
        h_top = w / width
        rects[key] = (x_lo, x_hi, h_region - h_top, h_region)
        h_rest = h_region - h_top
        cursor = x_lo
        for idx, k in enumerate(kids):
            if idx + 1 < len(kids):
                nxt = cursor + subtree[k] / h_rest
                junction = order[spans[k][1]]
                vx[junction] = nxt
            else:
                nxt = x_hi
            frames.append((k, cursor, nxt, h_rest))
            cursor = nxt
    assert len(vx) == len(order), "every vertex must receive an x-coordinate"
    return vx, rects


def twodim_biconnected(g, s, t, length, height):
    """Exact-area embedding of a biconnected outerplanar graph in a
    ``length x height`` box, with s first and t last in the supporting order.

    Requires (s, t) to be an outer-face edge with its endpoints consecutive
    on the outer cycle, and ``length * height`` to equal the total weight
    exactly.
    """
    s, t = g.resolve(s), g.resolve(t)
    length = Fraction(length)
    height = Fraction(height)
    if length <= 0 or height <= 0:
        raise PreconditionError("box sides must be positive")
    if length * height != g.total_weight():
        raise PreconditionError("box area must equal the total edge weight")
    if g.edge_between(s, t) is None:
        raise PreconditionError("(s, t) must be an edge")
    emb = outerplane_embedding(g)
    if emb is None:
        raise NotOuterplanarError("graph is not outerplanar")
    order = emb.linear_order(s, t)
    if order is None:
        raise PreconditionError("(s, t) is not on the outer face")
    edge_list = [(u, v, w, eid) for eid, (u, v, w) in enumerate(g.edges)]
    vx, rects = _draw_region(order, edge_list, length, height)
    return TwoDimEmbedding(BookEmbedding(order), vx, rects)


def one_page_order(g):
    """A 1-page order of a connected outerplanar graph (exists for every
    such graph): block outer cycles hung on cut vertices."""
    if g.n == 1:
        return [0]
    tree = BlockCutTree(g)
    rooted = tree.rooted(0)
    orders = {}
    for bid, block in enumerate(tree.blocks):
        cycle = block_outer_cycle(g, block.vertices, block.edge_ids)
        if cycle is None:
            raise NotOuterplanarError("graph is not outerplanar")
        parent = rooted.parent_cut[bid]
        if parent is not None:
            i = cycle.index(parent)
            cycle = cycle[i:] + cycle[:i]
        orders[bid] = cycle
    ropes = {}
    for bid in rooted.block_postorder:
        repl = {}
        for c in rooted.child_cuts[bid]:
            parts = [seq.one(c)]
            parts.extend(
                seq.skipping(ropes[b2], c) for b2 in rooted.child_blocks[c]
            )
            repl[c] = seq.cat(*parts)
        ropes[bid] = seq.blk(orders[bid], repl or None)
    return seq.materialize(ropes[rooted.root])


def twodim_general(g, eps=Fraction(1), length=None):
    """Embedding of any outerplanar graph with area at most the total weight
    plus ``eps``.

    Component orders are concatenated (so no vertex lies under another
    component's edge), the order is completed to a Hamiltonian-cycle
    biconnected supergraph by at most n dummy edges of weight eps/n (missing
    consecutive pairs plus one spanning edge), the supergraph is drawn in an
    exactly filled box, and the dummy rectangles are deleted.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    n = g.n
    order_all = []
    for comp in component_vertex_sets(g):
        if len(comp) == 1:
            order_all.extend(comp)
            continue
        sub, to_sub = g.induced(comp)
        back = {to_sub[v]: v for v in to_sub}
        order_all.extend(back[v] for v in one_page_order(sub))

    if g.m == 0:
        x = {v: Fraction(i) for i, v in enumerate(order_all)}
        return TwoDimEmbedding(BookEmbedding(order_all), x, {})

    pos = {v: i for i, v in enumerate(order_all)}
    dummy_w = eps / n
    edge_list = [(u, v, w, eid) for eid, (u, v, w) in enumerate(g.edges)]
    present = {
        (min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v, _, _ in edge_list
    }
    for i in range(n - 1):
        if (i, i + 1) not in present:
            edge_list.append(
                (order_all[i], order_all[i + 1], dummy_w, ("dummy", len(edge_list)))
            )
    if n >= 2 and (0, n - 1) not in present:
        edge_list.append(
            (order_all[0], order_all[-1], dummy_w, ("dummy", len(edge_list)))
        )
    total = sum((e[2] for e in edge_list), Fraction(0))

    if length is None:
        length = default_box_width(total)
    length = Fraction(length)
    if length <= 0:
        raise PreconditionError("length must be positive")
    height = total / length

    vx, all_rects = _draw_region(order_all, edge_list, length, height)
    rects = {key: rect for key, rect in all_rects.items() if isinstance(key, int)}
    return TwoDimEmbedding(BookEmbedding(order_all), vx, rects)


def minres_construct(g, embedding):
    """Unit-resolution drawing from a supporting 1-page embedding:
    unit vertex spacing, every rectangle at least 1 wide and 1 tall."""
    violation = validate_minres_supporting(g, embedding)
    if violation is not None:
        raise PreconditionError(
            f"order is not a supporting embedding: {violation}"
        )
    pos = embedding.position
    edge_list = [(u, v, w, eid) for eid, (u, v, w) in enumerate(g.edges)]
    _pos, spans, children, roots = _forest_for(embedding.order, edge_list)
    x = {v: Fraction(pos[v] + 1) for v in embedding.order}
    rects = {}
    post = []
    stack = list(roots)
    while stack:
        i = stack.pop()
        post.append(i)
        stack.extend(children[i])
    for i in reversed(post):
        u, v, w, eid = edge_list[i]
        a, b = spans[i][0], spans[i][1]
        y_min = Fraction(0)
        for k in children[i]:
            y_top = rects[edge_list[k][3]][3]
            if y_top > y_min:
                y_min = y_top
        h = w / (b - a)
        rects[eid] = (Fraction(a + 1), Fraction(b + 1), y_min, y_min + h)
    return TwoDimEmbedding(embedding, x, rects)


def default_box_width(total_weight):
    """Near-square default: the denominator<=64 rational closest to the
    square root of the total weight."""
    total_weight = Fraction(total_weight)
    if total_weight <= 0:
        return Fraction(1)
    root = Fraction(float(total_weight) ** 0.5).limit_denominator(64)
    return root if root > 0 else Fraction(1)


def check_twodim(g, emb, *, exact_box=None, require_minres=False):
    """Definitional audit of an embedding; returns a list of violation
    messages (empty when everything holds)."""
    problems = []
    order = emb.support.order
    pos = emb.support.position
    if sorted(order) != list(range(g.n)):
        return ["support order is not a permutation"]
    for a, b in zip(order, order[1:]):
        if not emb.x[a] < emb.x[b]:
            problems.append(f"x not strictly increasing at {g.labels[b]}")
    for eid, (u, v, w) in enumerate(g.edges):
        if eid not in emb.rects:
            problems.append(f"edge {eid} has no rectangle")
            continue
        xmin, xmax, ymin, ymax = emb.rects[eid]
        if pos[u] > pos[v]:
            u, v = v, u
        if xmin != emb.x[u] or xmax != emb.x[v]:
            problems.append(f"edge {eid}: rectangle ends differ from endpoint x")
        if ymin < 0 or xmax <= xmin or ymax <= ymin:
            problems.append(f"edge {eid}: degenerate rectangle")
            continue
        if (xmax - xmin) * (ymax - ymin) != w:
            problems.append(f"edge {eid}: area is not exactly the weight")
        if require_minres:
            if xmax - xmin < 1:
                problems.append(f"edge {eid}: width below 1")
            if ymax - ymin < 1:
                problems.append(f"edge {eid}: height below 1")
    if require_minres:
        xs = sorted(emb.x[v] for v in order)
        for a, b in zip(xs, xs[1:]):
            if b - a < 1:
                problems.append("vertex spacing below 1")
                break
    # nesting condition: y_min = max y_max over nested edges (0 if none)
    rect = emb.rects
    m = g.m
    norm = []
    for eid, (u, v, _w) in enumerate(g.edges):
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        norm.append((a, b))
    for i in range(m):
        if i not in rect:
            continue
        nested_tops = [
            rect[j][3]
            for j in range(m)
            if j != i and j in rect
            and norm[i][0] <= norm[j][0] and norm[j][1] <= norm[i][1]
        ]
        want = max(nested_tops) if nested_tops else Fraction(0)
        if rect[i][2] != want:
            problems.append(f"edge {i}: bottom does not meet the nested tops")
    # pairwise internal disjointness
    items = sorted(rect.items())
    for idx, (i, (ax0, ax1, ay0, ay1)) in enumerate(items):
        for j, (bx0, bx1, by0, by1) in items[idx + 1:]:
            if ax0 < bx1 and bx0 < ax1 and ay0 < by1 and by0 < ay1:
                problems.append(f"edges {i} and {j}: rectangles overlap")
    # connector segments (from each rectangle's lower corners straight down
    # to the baseline) must stay clear of rectangle interiors
    for i, (x0, x1, y0, _y1) in rect.items():
        for j, (bx0, bx1, by0, by1) in rect.items():
            if i == j:
                continue
            for xs_ in (x0, x1):
                # segment {xs_} x [0, y0] vs open rect (bx0,bx1)x(by0,by1)
                if bx0 < xs_ < bx1 and by0 < y0 and by1 > 0:
                    problems.append(
                        f"edge {i}: connector at x={xs_} pierces edge {j}"
                    )
    if exact_box is not None:
        want_l, want_h = Fraction(exact_box[0]), Fraction(exact_box[1])
        width, height = emb.bounding_box()
        if (width, height) != (want_l, want_h):
            problems.append("bounding box differs from the requested box")
        covered = sum(
            ((r[1] - r[0]) * (r[3] - r[2]) for r in rect.values()), Fraction(0)
        )
        if covered != want_l * want_h:
            problems.append("holes: rectangle areas do not fill the box")
    return problems

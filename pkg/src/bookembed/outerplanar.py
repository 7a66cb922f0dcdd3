"""Outerplanarity recognition, the unique outerplane embedding, and the
extended dual tree of a biconnected outerplanar graph."""

from __future__ import annotations

from collections import deque

from .errors import NotOnePageError, PreconditionError
from .graph import BlockCutTree, is_connected


def nesting_forest(num_positions, edge_spans):
    """Nesting forest of edge intervals over a linear order.

    ``edge_spans`` is a list of ``(left_pos, right_pos, key)`` with
    ``left_pos < right_pos``; ``key`` identifies the edge to the caller.
    Returns ``(parent, children, roots)`` as parallel structures over the
    input list indices, children ordered left to right.  Raises
    :class:`NotOnePageError` (with the two offending keys) if two spans cross.
    """
    starts = [[] for _ in range(num_positions)]
    ends = [[] for _ in range(num_positions)]
    for idx, (a, b, _key) in enumerate(edge_spans):
        starts[a].append(idx)
        ends[b].append(idx)
    for bucket in starts:
        bucket.sort(key=lambda idx: -edge_spans[idx][1])
    parent = [-1] * len(edge_spans)
    children = [[] for _ in range(len(edge_spans))]
    roots = []
    stack = []
    for p in range(num_positions):
        enders = ends[p]
        # In a crossing-free order the spans ending at p are exactly the top
        # len(enders) stack entries (they share the right endpoint).
        for _ in enders:
            top = stack.pop()
            if edge_spans[top][1] != p:
                below = next(
                    i for i in reversed(stack) if edge_spans[i][1] == p
                )
                raise NotOnePageError(edge_spans[below][2], edge_spans[top][2])
        for idx in starts[p]:
            if stack:
                parent[idx] = stack[-1]
                children[stack[-1]].append(idx)
            else:
                roots.append(idx)
            stack.append(idx)
    return parent, children, roots


class OuterplaneEmbedding:
    """The unique (up to flip) outerplane embedding of a biconnected
    outerplanar graph: the clockwise outer cycle plus the internal face cycles.

    The stored cycle is the canonical flip: of the two reflections, the one
    whose sequence starting at the smallest vertex id is lexicographically
    smaller.
    """

    __slots__ = ("cycle", "faces")

    def __init__(self, cycle, faces):
        self.cycle = tuple(cycle)
        self.faces = tuple(faces)

    def __repr__(self):
        return f"OuterplaneEmbedding(cycle={self.cycle})"

    def position_on_cycle(self):
        return {v: i for i, v in enumerate(self.cycle)}

    def outer_neighbors(self, v):
        """The one or two cycle neighbors of v."""
        pos = self.cycle.index(v)
        n = len(self.cycle)
        if n == 1:
            return ()
        if n == 2:
            return (self.cycle[1 - pos],)
        return (self.cycle[(pos - 1) % n], self.cycle[(pos + 1) % n])

    def linear_order(self, s, t):
        """The unique 1-page order with ``s`` first and ``t`` last.

        Requires (s, t) to be consecutive on the outer cycle (in either
        direction); returns None otherwise.
        """
        n = len(self.cycle)
        if n == 2:
            return [s, t] if {s, t} == set(self.cycle) else None
        pos = self.position_on_cycle()
        if s not in pos or t not in pos:
            return None
        i, j = pos[s], pos[t]
        if (i + 1) % n == j:
            # cycle reads ... s t ...: walk backwards from s around to t
            return [self.cycle[(i - k) % n] for k in range(n)]
        if (j + 1) % n == i:
            return [self.cycle[(i + k) % n] for k in range(n)]
        return None


def _canonical_cycle(cycle):
    n = len(cycle)
    if n <= 2:
        return tuple(sorted(cycle))
    start = cycle.index(min(cycle))
    fwd = tuple(cycle[(start + k) % n] for k in range(n))
    bwd = tuple(cycle[(start - k) % n] for k in range(n))
    return min(fwd, bwd)


def _canonical_face(face):
    n = len(face)
    best = None
    for seq in (face, face[::-1]):
        start = seq.index(min(seq))
        rot = tuple(seq[(start + k) % n] for k in range(n))
        if best is None or rot < best:
            best = rot
    return best


def _reduce_to_outer_cycle(n, neighbor_sets):
    """Degree-2 elimination. Returns the Hamiltonian outer cycle or None.

    ``neighbor_sets`` is consumed.  Works for n >= 3; the caller validates
    the result against the original edges.
    """
    alive = n
    dead = [False] * n
    removals = []
    queue = deque(v for v in range(n) if len(neighbor_sets[v]) == 2)
    while alive > 3:
        if not queue:
            return None
        v = queue.popleft()
        if dead[v] or len(neighbor_sets[v]) != 2:
            continue
        u, w = neighbor_sets[v]
        dead[v] = True
        alive -= 1
        removals.append((v, u, w))
        neighbor_sets[u].discard(v)
        neighbor_sets[w].discard(v)
        neighbor_sets[v].clear()
        if w not in neighbor_sets[u]:
            neighbor_sets[u].add(w)
            neighbor_sets[w].add(u)
        for x in (u, w):
            if len(neighbor_sets[x]) == 2:
                queue.append(x)
        if len(neighbor_sets[u]) < 2 or len(neighbor_sets[w]) < 2:
            return None
    core = [v for v in range(n) if not dead[v]]
    for a in core:
        for b in core:
            if a != b and b not in neighbor_sets[a]:
                return None
    nxt = {}
    prv = {}
    if len(core) == 3:
        a, b, c = core
        ring = [a, b, c]
    else:
        ring = core
    for i, v in enumerate(ring):
        nxt[v] = ring[(i + 1) % len(ring)]
        prv[v] = ring[(i - 1) % len(ring)]
    for v, u, w in reversed(removals):
        if nxt.get(u) == w:
            nxt[u] = v
            nxt[v] = w
            prv[w] = v
            prv[v] = u
        elif nxt.get(w) == u:
            nxt[w] = v
            nxt[v] = u
            prv[u] = v
            prv[v] = w
        else:
            return None
    cycle = [min(nxt)]
    while True:
        step = nxt[cycle[-1]]
        if step == cycle[0]:
            break
        cycle.append(step)
        if len(cycle) > n:
            return None
    if len(cycle) != n:
        return None
    return cycle


def _faces_from_cycle(g, cycle, edge_ids):
    """Internal face cycles given the outer cycle, via the nesting forest."""
    pos = {v: i for i, v in enumerate(cycle)}
    spans = []
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, eid))
    parent, children, _roots = nesting_forest(len(cycle), spans)
    faces = []
    for idx, kids in enumerate(children):
        if not kids:
            continue
        a = spans[idx][0]
        face = [cycle[a]]
        for k in sorted(kids, key=lambda i: spans[i][0]):
            face.append(cycle[spans[k][1]])
        faces.append(_canonical_face(tuple(face)))
    return tuple(sorted(faces))


def _is_biconnected(g):
    if g.n <= 1:
        return True
    if not is_connected(g):
        return False
    if g.n == 2:
        return g.m >= 1
    tree = BlockCutTree(g)
    return len(tree.blocks) == 1


def outerplane_embedding(g, *, _trusted=False):
    """Unique outerplane embedding of a biconnected graph, or None if the
    graph is not outerplanar.

    Raises :class:`PreconditionError` on non-biconnected input (skipped when
    ``_trusted`` is set by callers that already know the input is a block).
    """
    if not _trusted and not _is_biconnected(g):
        raise PreconditionError("outerplane embedding requires a biconnected graph")
    n = g.n
    if n == 1:
        return OuterplaneEmbedding((0,), ())
    if n == 2:
        return OuterplaneEmbedding((0, 1), ())
    if g.m > 2 * n - 3:
        return None
    neighbor_sets = [set() for _ in range(n)]
    for u, v, _ in g.edges:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    if any(len(s) < 2 for s in neighbor_sets):
        return None
    cycle = _reduce_to_outer_cycle(n, neighbor_sets)
    if cycle is None:
        return None
    # Every consecutive cycle pair must be a real edge, and the chords must
    # not cross with respect to the cycle order.
    pos = {v: i for i, v in enumerate(cycle)}
    for i in range(n):
        if g.edge_between(cycle[i], cycle[(i + 1) % n]) is None:
            return None
    spans = []
    for eid, (u, v, _) in enumerate(g.edges):
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, eid))
    try:
        nesting_forest(n, spans)
    except NotOnePageError:
        return None
    canon = _canonical_cycle(cycle)
    return OuterplaneEmbedding(canon, _faces_from_cycle(g, canon, range(g.m)))


class ExtendedDualTree:
    """Extended dual tree of an outerplane embedding.

    Nodes: one per internal face plus one leaf per outer edge.  Every edge of
    the primal graph is dual to exactly one tree edge.  When rooted at the
    leaf dual to ``root_edge``, the parent/child structure over primal edges
    coincides with the nesting forest of the linear order that cuts the outer
    cycle at ``root_edge``; that structure is exposed directly because every
    drawer consumes it.

    Attributes
    ----------
    order: the linear order (root edge endpoints first and last)
    parent / children: nesting forest over primal edge ids
    subtree_weight: ``A(e)`` = weight of e plus all edges nested below it
    face_of_edge: internal face node id for every span>=2 edge, else -1
    leaves: leaf node ids indexed by outer edge
    """

    __slots__ = (
        "graph",
        "root_edge",
        "order",
        "position",
        "parent",
        "children",
        "root_ids",
        "subtree_weight",
        "node_count",
        "edge_count",
        "leaf_edges",
    )

    def __init__(self, g, order, root_edge):
        self.graph = g
        self.root_edge = root_edge
        self.order = tuple(order)
        pos = {v: i for i, v in enumerate(order)}
        self.position = pos
        spans = []
        for eid, (u, v, _) in enumerate(g.edges):
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            spans.append((a, b, eid))
        parent, children, roots = nesting_forest(g.n, spans)
        self.parent = tuple(parent)
        self.children = tuple(
            tuple(sorted(kids, key=lambda i: spans[i][0])) for kids in children
        )
        self.root_ids = tuple(roots)
        weights = [None] * g.m
        for eid in self._postorder():
            total = g.weight(eid)
            for k in self.children[eid]:
                total += weights[k]
            weights[eid] = total
        self.subtree_weight = tuple(weights)
        # Outer edges: span-1 edges plus the top edge (a single edge covers
        # both cases, hence the set).
        self.leaf_edges = tuple(
            sorted(
                {eid for eid, (a, b, _) in enumerate(spans) if b - a == 1}
                | {root_edge}
            )
        )
        internal_faces = sum(1 for kids in self.children if kids)
        # The outer-face dual vertex splits into one degree-1 leaf per vertex.
        self.node_count = internal_faces + g.n
        self.edge_count = g.m

    def _postorder(self):
        out = []
        stack = list(self.root_ids)
        while stack:
            eid = stack.pop()
            out.append(eid)
            stack.extend(self.children[eid])
        return reversed(out)

    def face_cycle(self, eid):
        """Vertices of the internal face whose top edge is ``eid`` (left to
        right along the order), or None for span-1 edges."""
        kids = self.children[eid]
        if not kids:
            return None
        u, v, _ = self.graph.edges[eid]
        a, b = self.position[u], self.position[v]
        if a > b:
            a, b = b, a
        face = [self.order[a]]
        for k in kids:
            ku, kv, _ = self.graph.edges[k]
            ka, kb = self.position[ku], self.position[kv]
            face.append(self.order[max(ka, kb)])
        return face


def extended_dual_tree(g, emb, root_edge=None):
    """Extended dual tree of ``emb``, rooted at the leaf dual to ``root_edge``.

    ``root_edge`` must lie on the outer face; None picks the edge joining the
    first and last vertices of the canonical cycle.
    """
    cycle = emb.cycle
    if g.m == 0:
        raise PreconditionError("extended dual tree requires at least one edge")
    if root_edge is None:
        root_edge = g.edge_between(cycle[0], cycle[-1])
        if root_edge is None:
            raise PreconditionError("no outer edge joins the cycle endpoints")
    u, v, _ = g.edges[root_edge]
    order = emb.linear_order(u, v)
    if order is None:
        raise PreconditionError("root edge is not on the outer face")
    return ExtendedDualTree(g, order, root_edge)

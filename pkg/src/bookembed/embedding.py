"""Book embeddings: the linear-order type, the exact validators for each
embedding class, and the weight/burden metrics."""

from __future__ import annotations

import bisect
import heapq
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotOnePageError, PreconditionError
from .exact import INF, format_rational
from .outerplanar import nesting_forest


class BookEmbedding:
    """A linear order of all vertices plus its inverse position map."""

    __slots__ = ("order", "position")

    def __init__(self, order):
        self.order = tuple(order)
        position = [-1] * (max(self.order) + 1 if self.order else 0)
        for i, v in enumerate(self.order):
            position[v] = i
        self.position = tuple(position)

    def flip(self):
        return BookEmbedding(self.order[::-1])

    def __len__(self):
        return len(self.order)

    def __eq__(self, other):
        return isinstance(other, BookEmbedding) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"BookEmbedding{self.order}"

    def to_json(self, g):
        return json.dumps([g.labels[v] for v in self.order])

    @staticmethod
    def from_json(text, g):
        labels = json.loads(text)
        return BookEmbedding(g.resolve(v) for v in labels)


def _check_permutation(g, embedding):
    if sorted(embedding.order) != list(range(g.n)):
        raise PreconditionError("order is not a permutation of the vertex set")


def _edge_spans(g, embedding):
    pos = embedding.position
    spans = []
    for eid, (u, v, _) in enumerate(g.edges):
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, eid))
    return spans


def is_one_page(g, embedding):
    """True iff no two edges cross in the given order."""
    _check_permutation(g, embedding)
    try:
        nesting_forest(g.n, _edge_spans(g, embedding))
    except NotOnePageError:
        return False
    return True


def _forest_or_raise(g, embedding):
    _check_permutation(g, embedding)
    spans = _edge_spans(g, embedding)
    parent, children, roots = nesting_forest(g.n, spans)
    return spans, parent, children, roots


@dataclass(frozen=True)
class MaxViolation:
    """An edge pair breaking the strictly-heavier-wrapper rule."""

    outer_edge: int
    inner_edge: int

    def to_json(self, g, embedding=None):
        ou, ov, ow = g.edges[self.outer_edge]
        iu, iv, iw = g.edges[self.inner_edge]
        doc = {
            "class": "max",
            "edge_ids": [self.outer_edge, self.inner_edge],
            "outer": [g.labels[ou], g.labels[ov], format_rational(ow)],
            "inner": [g.labels[iu], g.labels[iv], format_rational(iw)],
        }
        if embedding is not None:
            pos = embedding.position
            doc["positions"] = {
                "outer": sorted((pos[ou], pos[ov])),
                "inner": sorted((pos[iu], pos[iv])),
            }
        return doc


@dataclass(frozen=True)
class SumViolation:
    """An edge whose weight does not exceed some disjoint sequence under it."""

    edge: int
    witness: tuple  # edge ids of a maximum-weight antichain under `edge`

    def to_json(self, g, embedding=None):
        u, v, w = g.edges[self.edge]
        doc = {
            "class": "sum",
            "edge_id": self.edge,
            "witness_ids": list(self.witness),
            "edge": [g.labels[u], g.labels[v], format_rational(w)],
            "witness": [
                [g.labels[a], g.labels[b], format_rational(wt)]
                for a, b, wt in (g.edges[e] for e in self.witness)
            ],
        }
        if embedding is not None:
            pos = embedding.position
            doc["positions"] = sorted((pos[u], pos[v]))
        return doc


@dataclass(frozen=True)
class MinresViolation:
    """An edge with weight below burden + 1."""

    edge: int
    burden: int

    def to_json(self, g, embedding=None):
        u, v, w = g.edges[self.edge]
        doc = {
            "class": "minres",
            "edge_id": self.edge,
            "edge": [g.labels[u], g.labels[v], format_rational(w)],
            "burden": self.burden,
        }
        if embedding is not None:
            pos = embedding.position
            doc["positions"] = sorted((pos[u], pos[v]))
        return doc


def validate_max(g, embedding):
    """None if every wrapping edge strictly outweighs each edge it wraps,
    else the first violating pair in lexicographic span order.

    Checking parent/child pairs of the nesting forest suffices: strict
    inequality is transitive along nesting chains.
    """
    spans, parent, children, roots = _forest_or_raise(g, embedding)
    ordered = sorted(range(g.m), key=lambda i: (spans[i][0], -spans[i][1]))
    for idx in ordered:
        eid = spans[idx][2]
        w = g.weight(eid)
        for kid in children[idx]:
            if not w > g.weight(spans[kid][2]):
                return MaxViolation(eid, spans[kid][2])
    return None


def _max_antichains(g, spans, children):
    """Per edge: the maximum total weight of disjointly placed edges under it,
    plus a witness antichain attaining it."""
    order_by_depth = sorted(range(len(spans)), key=lambda i: spans[i][1] - spans[i][0])
    best = [None] * len(spans)
    witness = [None] * len(spans)
    for idx in order_by_depth:
        total = Fraction(0)
        wit = []
        for kid in children[idx]:
            kid_eid = spans[kid][2]
            w_kid = g.weight(kid_eid)
            if best[kid] is not None and best[kid] > w_kid:
                total += best[kid]
                wit.extend(witness[kid])
            else:
                total += w_kid
                wit.append(kid_eid)
        best[idx] = total
        witness[idx] = tuple(wit)
    return best, witness


def validate_sum(g, embedding):
    """None if every edge strictly outweighs every sequence of disjointly
    placed edges under it, else a violation carrying a maximum-weight witness.
    """
    spans, parent, children, roots = _forest_or_raise(g, embedding)
    best, witness = _max_antichains(g, spans, children)
    ordered = sorted(range(g.m), key=lambda i: (spans[i][0], -spans[i][1]))
    for idx in ordered:
        eid = spans[idx][2]
        if children[idx] and not g.weight(eid) > best[idx]:
            return SumViolation(eid, witness[idx])
    return None


def burdens(g, embedding):
    """Burden of every edge: the count of vertices strictly under it, which
    for a permutation order is the position span minus one."""
    _check_permutation(g, embedding)
    pos = embedding.position
    return tuple(abs(pos[u] - pos[v]) - 1 for u, v, _ in g.edges)


def validate_minres_supporting(g, embedding):
    """None if ``weight >= burden + 1`` holds for every edge (exact
    comparison), else the first violating edge in span order."""
    _forest_or_raise(g, embedding)
    pos = embedding.position
    worst = None
    for eid, (u, v, w) in enumerate(g.edges):
        beta = abs(pos[u] - pos[v]) - 1
        if w < beta + 1:
            a, b = pos[u], pos[v]
            key = (min(a, b), -max(a, b), eid)
            if worst is None or key < worst[0]:
                worst = (key, MinresViolation(eid, beta))
    return worst[1] if worst else None


@dataclass
class EmbeddingMetrics:
    """Exact size measures of a 1-page embedding.

    ``left_residual`` / ``right_residual`` are indexed by order position;
    ``left_extension`` / ``right_extension`` / ``n_left`` / ``n_right`` are
    keyed by visible vertex id.  Residuals and the free space use the INF
    top element where the defining minimum is empty.
    """

    burden: tuple
    left_residual: tuple
    right_residual: tuple
    total_extension: Fraction
    free_space: object
    visible: tuple
    left_extension: dict
    right_extension: dict
    n_left: dict
    n_right: dict

    @property
    def residual_capacity(self):
        return self.right_residual[0]


def metrics(g, embedding):
    """All embedding metrics in one O((n+m) log m) pass.

    The burden of an edge equals its position span minus one, so the
    biconnected-augmentation detour (unit-weight consecutive edges plus one
    spanning edge) computes identical numbers; the minima below range over
    the original edges only, exactly as that construction prescribes.
    """
    spans, _parent, children, roots = _forest_or_raise(g, embedding)
    n = g.n
    pos = embedding.position
    # _edge_spans enumerates edges by id, so index i below IS edge id i.
    beta = tuple(b - a - 1 for a, b, _ in spans)

    # Gap minima of slack = w - (burden+1) over edges covering each gap.
    slack = [g.weight(spans[i][2]) - (beta[i] + 1) for i in range(g.m)]
    gap_min = [INF] * max(n - 1, 0)
    by_left = sorted(range(g.m), key=lambda i: spans[i][0])
    heap = []
    ptr = 0
    for gap in range(n - 1):
        while ptr < len(by_left) and spans[by_left[ptr]][0] <= gap:
            i = by_left[ptr]
            heapq.heappush(heap, (slack[i], spans[i][1]))
            ptr += 1
        while heap and heap[0][1] <= gap:
            heapq.heappop(heap)
        if heap:
            gap_min[gap] = heap[0][0]
    right_residual = tuple(gap_min[i] if i < n - 1 else INF for i in range(n))
    left_residual = tuple(INF if i == 0 else gap_min[i - 1] for i in range(n))

    root_spans = sorted((spans[i] for i in roots), key=lambda s: s[0])
    total = sum((g.weight(s[2]) for s in root_spans), Fraction(0))

    covered = [False] * n
    for a, b, _ in root_spans:
        for p in range(a + 1, b):
            covered[p] = True
    visible = tuple(embedding.order[p] for p in range(n) if not covered[p])

    left_ext, right_ext, n_left, n_right = {}, {}, {}, {}
    prefix = [Fraction(0)]
    for s in root_spans:
        prefix.append(prefix[-1] + g.weight(s[2]))
    rights = [s[1] for s in root_spans]
    lefts = [s[0] for s in root_spans]
    for v in visible:
        p = pos[v]
        k = bisect.bisect_right(rights, p)
        left_ext[v] = prefix[k]
        j = bisect.bisect_left(lefts, p)
        right_ext[v] = prefix[-1] - prefix[j]
        n_left[v] = p
        n_right[v] = n - 1 - p

    free = INF
    if n and g.adjacency[embedding.order[0]]:
        first = embedding.order[0]
        low_eid = min(g.adjacency[first], key=lambda e: pos[g.other_end(e, first)])
        under = sum((g.weight(k) for k in children[low_eid]), Fraction(0))
        free = g.weight(low_eid) - under

    return EmbeddingMetrics(
        burden=beta,
        left_residual=left_residual,
        right_residual=right_residual,
        total_extension=total,
        free_space=free,
        visible=visible,
        left_extension=left_ext,
        right_extension=right_ext,
        n_left=n_left,
        n_right=n_right,
    )

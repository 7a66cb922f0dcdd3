"""Internal helpers shared by the drawers: per-block outer cycles, forced
linear orders, and nesting forests keyed by graph edge ids."""

from __future__ import annotations

from .errors import NotOnePageError
from .outerplanar import _canonical_cycle, _reduce_to_outer_cycle, nesting_forest


def block_outer_cycle(g, vertices, edge_ids):
    """Outer cycle of a biconnected block (canonical flip, g-vertex ids),
    or None if the block is not outerplanar."""
    k = len(vertices)
    if k == 1:
        return [vertices[0]]
    if k == 2:
        return list(sorted(vertices))
    if len(edge_ids) > 2 * k - 3:
        return None
    local = {v: i for i, v in enumerate(vertices)}
    neighbor_sets = [set() for _ in range(k)]
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        neighbor_sets[local[u]].add(local[v])
        neighbor_sets[local[v]].add(local[u])
    if any(len(s) < 2 for s in neighbor_sets):
        return None
    cycle_local = _reduce_to_outer_cycle(k, neighbor_sets)
    if cycle_local is None:
        return None
    cycle = [vertices[i] for i in cycle_local]
    pos = {v: i for i, v in enumerate(cycle)}
    present = set()
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        present.add((a, b))
    for i in range(k):
        a, b = i, (i + 1) % k
        if a > b:
            a, b = b, a
        if (a, b) not in present:
            return None
    spans = sorted((min(pos[g.edges[e][0]], pos[g.edges[e][1]]),
                    max(pos[g.edges[e][0]], pos[g.edges[e][1]]), e)
                   for e in edge_ids)
    try:
        nesting_forest(k, spans)
    except NotOnePageError:
        return None
    return list(_canonical_cycle(cycle))


def cut_cycle(cycle, s, t):
    """Linear order with s first and t last, cutting the cycle at edge (s,t).

    Returns None unless s and t are cyclically consecutive (either
    direction)."""
    n = len(cycle)
    if n == 2:
        return [s, t] if {s, t} == set(cycle) else None
    pos = {v: i for i, v in enumerate(cycle)}
    if s not in pos or t not in pos:
        return None
    i, j = pos[s], pos[t]
    if (i + 1) % n == j:
        return [cycle[(i - k) % n] for k in range(n)]
    if (j + 1) % n == i:
        return [cycle[(i + k) % n] for k in range(n)]
    return None


def forest_over(g, order, edge_ids):
    """Nesting forest of a block's edges over a forced order.

    Returns ``(pos, children, roots)`` with ``children`` and ``roots`` holding
    g-edge ids; children are ordered left to right.
    """
    pos = {v: i for i, v in enumerate(order)}
    spans = []
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        spans.append((a, b, eid))
    parent, children, roots = nesting_forest(len(order), spans)
    child_map = {
        spans[i][2]: [spans[k][2] for k in kids] for i, kids in enumerate(children)
    }
    return pos, child_map, [spans[i][2] for i in roots]


def unique_max_edge(g, edge_ids):
    """The block's unique maximum-weight edge id, or None on a tie."""
    best = None
    tie = False
    for eid in edge_ids:
        w = g.weight(eid)
        if best is None or w > g.weight(best):
            best = eid
            tie = False
        elif w == g.weight(best):
            tie = True
    return None if tie else best


def incident_in_block(g, v, block_id, block_of_edge):
    return [eid for eid in g.adjacency[v] if block_of_edge[eid] == block_id]


def lowest_edges(g, pos, v, incident_eids):
    """(lowest-left, lowest-right) edge ids of v among the given edges;
    None where no neighbor precedes/follows."""
    p = pos[v]
    best_l = best_r = None
    bl = br = None
    for eid in incident_eids:
        q = pos[g.other_end(eid, v)]
        if q < p:
            if bl is None or q > bl:
                bl, best_l = q, eid
        else:
            if br is None or q < br:
                br, best_r = q, eid
    return best_l, best_r

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled oracle kernel.

API twin of `bookembed._fast.pure`.  The Python wrapper guards the input
ranges (n <= 12, m <= 64, |weights| < 2**50) and falls back to the pure
kernel outside them, so fixed-size C buffers and long long arithmetic are
safe here.
"""

IMPLEMENTATION = "native"

CLASS_ONE_PAGE = 0
CLASS_MAX = 1
CLASS_SUM = 2
CLASS_MINRES = 3

DEF MAXN = 12
DEF MAXM = 64


cdef struct Sweep:
    int n, m, depth
    int eu[MAXM]
    int ev[MAXM]
    long long w[MAXM]
    long long wden
    int pos[MAXN]
    int order[MAXN]
    int cand[MAXN + 1]
    int cl_a[MAXM]
    int cl_b[MAXM]
    int cl_base[MAXN + 1]
    int cl_count


cdef void _load(Sweep* s, int n, eu, ev, wnum, long long wden):
    cdef int i
    s.n = n
    s.m = len(eu)
    s.wden = wden
    for i in range(s.m):
        s.eu[i] = eu[i]
        s.ev[i] = ev[i]
        s.w[i] = wnum[i] if wnum is not None else 1
    for i in range(n):
        s.pos[i] = -1
    s.cl_count = 0
    s.depth = 0
    s.cand[0] = 0


cdef inline int _feasible(Sweep* s, int v, int depth):
    """Edges closed by placing v at `depth` (recorded past cl_count); -1 on crossing."""
    cdef int added = 0, i, a, k, u
    for i in range(s.m):
        if s.eu[i] == v:
            u = s.ev[i]
        elif s.ev[i] == v:
            u = s.eu[i]
        else:
            continue
        a = s.pos[u]
        if a < 0:
            continue
        # new same-step intervals all share the right endpoint `depth`,
        # so only previously closed edges can cross the new one
        for k in range(s.cl_count):
            if s.cl_a[k] < a < s.cl_b[k]:
                return -1
        s.cl_a[s.cl_count + added] = a
        s.cl_b[s.cl_count + added] = depth
        added += 1
    return added


cdef int _advance(Sweep* s):
    """Step to the next complete crossing-free order; 0 when exhausted."""
    cdef int depth = s.depth
    cdef int v, added
    if depth == s.n:
        if depth == 0:
            return 0
        depth -= 1
        v = s.order[depth]
        s.pos[v] = -1
        s.cl_count = s.cl_base[depth]
        s.cand[depth] = v + 1
    while depth >= 0:
        v = s.cand[depth]
        if v >= s.n:
            depth -= 1
            if depth < 0:
                break
            v = s.order[depth]
            s.pos[v] = -1
            s.cl_count = s.cl_base[depth]
            s.cand[depth] = v + 1
            continue
        if s.pos[v] >= 0:
            s.cand[depth] = v + 1
            continue
        added = _feasible(s, v, depth)
        if added < 0:
            s.cand[depth] = v + 1
            continue
        s.pos[v] = depth
        s.order[depth] = v
        s.cl_base[depth] = s.cl_count
        s.cl_count += added
        depth += 1
        s.cand[depth] = 0
        if depth == s.n:
            s.depth = depth
            return 1
    s.depth = -1
    return 0


cdef int _check(Sweep* s, int cls):
    cdef int m = s.m
    cdef int i, j, a, b, p, lo_i, hi_i
    cdef int lo[MAXM]
    cdef int hi[MAXM]
    cdef int ends_cnt[MAXN]
    cdef int ends_idx[MAXN][MAXM]
    cdef long long g[MAXN]
    cdef long long candv
    if cls == CLASS_ONE_PAGE:
        return 1
    for i in range(m):
        a = s.pos[s.eu[i]]
        b = s.pos[s.ev[i]]
        if a > b:
            a, b = b, a
        lo[i] = a
        hi[i] = b
    if cls == CLASS_MAX:
        for i in range(m):
            for j in range(m):
                if i != j and lo[i] <= lo[j] and hi[j] <= hi[i] and s.w[i] <= s.w[j]:
                    return 0
        return 1
    if cls == CLASS_MINRES:
        for i in range(m):
            if s.w[i] < (hi[i] - lo[i]) * s.wden:
                return 0
        return 1
    # CLASS_SUM: per edge, max-weight chain of disjointly placed edges under it
    for p in range(s.n):
        ends_cnt[p] = 0
    for i in range(m):
        ends_idx[hi[i]][ends_cnt[hi[i]]] = i
        ends_cnt[hi[i]] += 1
    for i in range(m):
        lo_i = lo[i]
        hi_i = hi[i]
        g[lo_i] = 0
        for p in range(lo_i + 1, hi_i + 1):
            g[p] = g[p - 1]
            for j in range(ends_cnt[p]):
                a = ends_idx[p][j]
                if a != i and lo[a] >= lo_i:
                    candv = s.w[a] + g[lo[a]]
                    if candv > g[p]:
                        g[p] = candv
        if g[hi_i] >= s.w[i]:
            return 0
    return 1


def one_page_orders(n, eu, ev, cap):
    """All crossing-free orders, lexicographically, up to ``cap`` (0 = all)."""
    cdef Sweep s
    cdef int limit = cap or 0
    if n == 0:
        return [()]
    _load(&s, n, eu, ev, None, 1)
    out = []
    while _advance(&s):
        out.append(tuple([s.order[i] for i in range(s.n)]))
        if limit and len(out) >= limit:
            break
    return out


def class_sweep(n, eu, ev, wnum, wden, cls, max_witnesses, exhaustive):
    """Count orders passing the class check; collect up to ``max_witnesses``.

    Stops at the first passing order unless ``exhaustive``.
    """
    cdef Sweep s
    cdef long long count = 0
    cdef int want = max_witnesses
    cdef int cls_c = cls
    cdef bint full = bool(exhaustive)
    if n == 0:
        return 1, [()][:max_witnesses]
    _load(&s, n, eu, ev, wnum, wden)
    witnesses = []
    while _advance(&s):
        if _check(&s, cls_c):
            count += 1
            if len(witnesses) < want:
                witnesses.append(tuple([s.order[i] for i in range(s.n)]))
            if not full and count >= (1 if want < 1 else want):
                break
    return count, witnesses

"""The sum-class drawer: oracle agreement, Pareto invariants, completeness."""

from bookembed.embedding import BookEmbedding, metrics, validate_sum
from bookembed.graph import build_bc_tree
from bookembed.oracle import enumerate_one_page, oracle_exists
from bookembed.seq import materialize
from bookembed.sumdraw import SumFailure, sum_be_drawer, sum_biconnected

from conftest import graph_from, small_corpus


def test_biconnected_triangles():
    t42 = graph_from([("a", "b", 4), ("b", "c", 2), ("a", "c", 1)])
    out = sum_biconnected(t42)
    assert out is not None and validate_sum(t42, out) is None
    t32 = graph_from([("a", "b", 3), ("b", "c", 2), ("a", "c", 1)])
    assert sum_biconnected(t32) is None
    k2 = graph_from([("a", "b", 7)])
    assert sum_biconnected(k2).order == (0, 1)


def test_forced_heavy_antichain_rejected():
    # 4-cycle: the best order still puts {(3,4), (5,7)} under (3,7): 14 >= 12
    g = graph_from(
        [("3", "4", 3), ("4", "5", 1), ("5", "7", 11), ("3", "7", 12)]
    )
    res = sum_be_drawer(g)
    assert isinstance(res, SumFailure)
    assert not oracle_exists(g, "sum").exists


def test_two_triangles_sharing_cut():
    g = graph_from(
        [("a", "b", 4), ("b", "c", 2), ("a", "c", 1),
         ("a", "d", 4), ("d", "e", 2), ("a", "e", 1)]
    )
    got = sum_be_drawer(g)
    want = oracle_exists(g, "sum").exists
    assert isinstance(got, BookEmbedding) == want
    if isinstance(got, BookEmbedding):
        assert validate_sum(g, got) is None


def test_oracle_agreement_corpus():
    for g in small_corpus(250, weights=(1, 12), seed0=31337):
        got = sum_be_drawer(g)
        assert isinstance(got, BookEmbedding) == oracle_exists(g, "sum").exists
        if isinstance(got, BookEmbedding):
            assert validate_sum(g, got) is None


def _collect_audit(records):
    def audit(kind, node, entries):
        records.append((kind, node, entries))

    return audit


def test_pareto_invariants_and_metrics_agreement():
    # (C1)/(C2), (B1)/(B2), size bounds, and stored values vs metrics()
    for g in small_corpus(120, weights=(1, 9), seed0=2024):
        if g.n < 2:
            continue
        records = []
        out = sum_be_drawer(g, audit=_collect_audit(records))
        rooted = build_bc_tree(g, "max-weight-block")
        for kind, node, entries in records:
            if kind == "C":
                lams = [e[1] for e in entries]
                rhos = [e[2] for e in entries]
                assert all(x < y for x, y in zip(lams, lams[1:]))
                assert all(x > y for x, y in zip(rhos, rhos[1:]))
                assert len(entries) <= rooted.n_plus_c[node]
                for rope, lam, rho in entries:
                    order = materialize(rope)
                    sub, to_sub = g.induced(order)
                    L = BookEmbedding(to_sub[v] for v in order)
                    m = metrics(sub, L)
                    c_local = to_sub[node]
                    assert c_local in m.left_extension, "cut must be visible (C1)"
                    assert m.left_extension[c_local] == lam
                    assert m.right_extension[c_local] == rho
                    assert validate_sum(sub, L) is None
            else:
                alphas = [e[1] for e in entries]
                taus = [e[2] for e in entries]
                assert all(x < y for x, y in zip(alphas, alphas[1:]))
                assert all(x < y for x, y in zip(taus, taus[1:]))
                assert len(entries) <= rooted.n_plus_b[node]
                parent = rooted.parent_cut[node]
                for rope, alpha, tau in entries:
                    order = materialize(rope)
                    assert order[0] == parent, "parent must be first (B1)"
                    sub, to_sub = g.induced(order)
                    L = BookEmbedding(to_sub[v] for v in order)
                    m = metrics(sub, L)
                    assert m.total_extension == tau
                    assert m.free_space == alpha
                    assert validate_sum(sub, L) is None


def test_c3_completeness_small_scale():
    # every sum-embedding of a cut subtree with the cut visible must be
    # dominated-or-equal by a stored entry
    for g in small_corpus(100, max_n=7, weights=(1, 6), seed0=909):
        if g.n < 3:
            continue
        records = []
        out = sum_be_drawer(g, audit=_collect_audit(records))
        rooted = build_bc_tree(g, "max-weight-block")
        for kind, node, entries in records:
            if kind != "C":
                continue
            subtree = [node]
            stack = list(rooted.child_blocks[node])
            seen = set()
            while stack:
                b = stack.pop()
                seen.update(rooted.tree.blocks[b].vertices)
                for c in rooted.child_cuts[b]:
                    stack.extend(rooted.child_blocks[c])
            sub, to_sub = g.induced(seen)
            c_local = to_sub[node]
            fronts = [(e[1], e[2]) for e in entries]
            for L in enumerate_one_page(sub):
                if validate_sum(sub, L) is not None:
                    continue
                m = metrics(sub, L)
                if c_local not in m.left_extension:
                    continue  # cut not visible
                lam = m.left_extension[c_local]
                rho = m.right_extension[c_local]
                assert any(fl <= lam and fr <= rho for fl, fr in fronts), (
                    "stored front must dominate every feasible embedding"
                )

import random

import pytest

import splitcycles as sc
from splitcycles.errors import PathTooShort, NotClosable, NotTriangulation
from splitcycles.search import SearchState

import oracles


def test_extend_at_root_colors_nothing(emb_b):
    st = SearchState(emb_b, 0)
    first = emb_b.rotations[0][0]
    assert st.extend(first)
    assert st.jtop == 0
    assert st.ledgers_empty()


def test_extend_along_known_splitting_cycle(emb_b):
    opts = sc.SearchOptions(max_length=10, collect_closed=True)
    table = sc.enumerate_cycles(emb_b, 0, opts)
    splitting = [c for c, sep, g1 in table.closed_cycles
                 if sep and 0 < g1 < table.genus]
    assert splitting, "expected a type-1 cycle within length 10"
    cycle = min(splitting, key=len)
    assert len(cycle) == 10
    st = SearchState(emb_b, cycle[0])
    for v in cycle[1:]:
        assert st.extend(v)
    verdict = st.close()
    assert verdict is not None and verdict.separating
    assert min(verdict.side_genus, table.genus - verdict.side_genus) == 1


def test_depth4_exploration_matches_condition_replay(emb_b):
    opts = sc.SearchOptions(max_length=5)
    table = sc.enumerate_cycles(emb_b, 0, opts)

    count = [0]

    def walk(path, on):
        last = path[-1]
        for w in emb_b.rotations[last]:
            if w in on or len(path) >= 5:
                continue
            if len(path) >= 2 and emb_b.face_of_corner(path[-2], last, w):
                continue
            if not oracles.replay_conditions(emb_b, path + [w]):
                continue
            count[0] += 1
            walk(path + [w], on | {w})

    walk([0], {0})
    assert table.visited == count[0]


def test_retract_restores_ledgers_exactly(emb_b):
    st = SearchState(emb_b, 0)
    snap0 = st.ledger_snapshot()
    r = emb_b.rotations
    st.extend(r[0][0])
    snap1 = st.ledger_snapshot()
    nxt = next(v for v in r[r[0][0]][3:] if v != 0 and not st.on_path[v]
               and st.extend(v))
    assert st.ledger_snapshot() != snap1
    st.retract()
    assert st.ledger_snapshot() == snap1
    st.retract()
    assert st.ledger_snapshot() == snap0


def test_random_walk_returns_to_initial_state(emb_b):
    rng = random.Random(20260809)
    st = SearchState(emb_b, 0)
    snap0 = st.ledger_snapshot()
    pairs = 0
    while pairs < 100:
        if len(st.path) > 1 and rng.random() < 0.45:
            st.retract()
            continue
        vk = st.path[-1]
        cands = [w for w in emb_b.rotations[vk] if not st.on_path[w]]
        if not cands or len(st.path) >= 12:
            if len(st.path) > 1:
                st.retract()
            continue
        if st.extend(rng.choice(cands)):
            pairs += 1
    while len(st.path) > 1:
        st.retract()
    assert st.ledger_snapshot() == snap0
    assert st.ledgers_empty()


def test_retract_length_one_raises(emb_b):
    st = SearchState(emb_b, 0)
    with pytest.raises(PathTooShort):
        st.retract()


def test_close_link_of_vertex_five(emb_b):
    link = list(emb_b.rotations[5])
    start = link.index(0)
    cycle = link[start:] + link[:start]
    st = SearchState(emb_b, cycle[0])
    for v in cycle[1:]:
        assert st.extend(v), f"link walk pruned at {v}"
    before = st.ledger_snapshot()
    verdict = st.close()
    assert st.ledger_snapshot() == before  # temp colors removed
    assert verdict is not None
    assert verdict.separating
    assert verdict.side_arcs == 270
    assert verdict.side_genus in (0, 20)
    assert verdict.type == 0
    assert verdict.contractible
    comps = emb_b.cut_along(cycle)
    assert len(comps) == 2
    assert sorted(c.genus for c in comps) == [0, 20]
    # the star side holds 18 triangles; the empty side 96 with 135
    # interior edges, hence 270 colored arcs
    big = max(comps, key=lambda c: c.face_count)
    assert big.face_count == 96
    assert big.edge_count - 18 == 135


def test_close_gamma3(k43):
    fast, oracle = sc.verify_cycle(k43, [0, 5, 2, 35, 6, 1, 4, 21])
    assert fast is not None
    assert fast.separating and oracle.separating
    assert fast.side_arcs == 22
    assert fast.side_genus == 1
    assert fast.type == 1 == oracle.type


def test_close_requires_adjacency(emb_b):
    st = SearchState(emb_b, 0)
    st.extend(emb_b.rotations[0][0])
    with pytest.raises(NotClosable):
        st.close()


def test_enumerate_rejects_non_triangulations():
    square = sc.build_map(((1, 3), (2, 0), (3, 1), (0, 2)))
    with pytest.raises(NotTriangulation):
        sc.enumerate_cycles(square, 0, sc.SearchOptions())


def test_fixture_finds_seam_triangle(double_k7):
    fixture, seam = double_k7
    table = sc.enumerate_cycles(fixture, seam[0], sc.SearchOptions())
    assert table.genus == 2
    assert table.nsc(1) >= 1
    assert table.min_length(1) == 3


def test_k7_has_no_splitting_cycles(k7):
    table = sc.enumerate_cycles(k7, 0, sc.SearchOptions())
    assert table.splitting_directed == 0
    assert all(r.nsc == 0 for r in table.rows)


def test_no_interior_bound_values():
    assert sc.no_interior_bound(10) == 14
    assert sc.no_interior_bound(0) == 3
    assert sc.no_interior_bound(1) == 6


def test_no_interior_bound_closed_form_and_monotone():
    import math
    prev = 0
    for g in range(0, 200):
        k = sc.no_interior_bound(g)
        closed = math.ceil((5 + math.sqrt(48 * g + 1)) / 2)
        assert k == closed
        assert k >= prev
        prev = k


def test_direction_symmetry_on_fixture(double_k7):
    fixture, seam = double_k7
    opts = sc.SearchOptions(collect_closed=True)
    table = sc.enumerate_cycles(fixture, seam[0], opts)
    # every splitting cycle appears in both directions with one verdict
    seen = {}
    for cyc, sep, g1 in table.closed_cycles:
        if not sep:
            continue
        key = frozenset(cyc)
        seen.setdefault(key, set()).add((len(cyc), g1))
        rev = (cyc[0],) + tuple(reversed(cyc[1:]))
        assert (rev, sep, g1) in table.closed_cycles
    assert all(len(v) == 1 for v in seen.values())


def test_backends_agree(k7, double_k7, emb_b):
    fixture, seam = double_k7
    cases = [(k7, 0, 0), (fixture, seam[0], 0), (emb_b, 0, 8)]
    for m, root, lmax in cases:
        tn = sc.enumerate_cycles(m, root,
                                 sc.SearchOptions(max_length=lmax,
                                                  backend="numba"))
        tp = sc.enumerate_cycles(m, root,
                                 sc.SearchOptions(max_length=lmax,
                                                  backend="python"))
        assert tn.rows == tp.rows
        assert tn.visited == tp.visited
        assert tn.contractible_directed == tp.contractible_directed
        assert tn.splitting_directed == tp.splitting_directed


def test_workers_match_single(emb_b):
    opts1 = sc.SearchOptions(max_length=8)
    opts2 = sc.SearchOptions(max_length=8, workers=2)
    t1 = sc.enumerate_cycles(emb_b, 0, opts1)
    t2 = sc.enumerate_cycles(emb_b, 0, opts2)
    assert t1.rows == t2.rows
    assert t1.visited == t2.visited
    assert t1.splitting_directed == t2.splitting_directed
    assert t1.contractible_directed == t2.contractible_directed


def test_min_lengths_invariant_under_seam_filter(emb_b, table_b):
    relaxed = sc.enumerate_cycles(emb_b, 0,
                                  sc.SearchOptions(seam_remark2=False))
    assert [r.min_length for r in relaxed.rows] \
        == [r.min_length for r in table_b.rows]
    # the corner filter changes which cycles are counted, not how short
    # the shortest of each type is
    assert relaxed.splitting_directed >= table_b.splitting_directed

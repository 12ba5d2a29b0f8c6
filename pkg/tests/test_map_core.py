import pytest

import splitcycles as sc
from splitcycles.errors import (AsymmetricAdjacency, RepeatedNeighbor,
                                EmptyRotation, NotACycle, EdgeMissing,
                                NotAFace, NotContractible, IsK4Sphere,
                                ParseError)

def test_build_tetrahedron(tetra):
    assert tetra.vertex_count == 4
    assert tetra.edge_count == 6
    assert tetra.face_count == 4
    assert all(len(f) == 3 for f in tetra.faces())
    assert tetra.genus() == 0
    assert tetra.is_simplicial_triangulation()


def test_asymmetric_adjacency_rejected():
    with pytest.raises(AsymmetricAdjacency):
        sc.build_map(((1, 2, 3), (3, 2), (0, 1, 3), (0, 2, 1)))


def test_repeated_neighbor_rejected():
    with pytest.raises(RepeatedNeighbor):
        sc.build_map(((1, 1, 2), (0, 2), (0, 1)))


def test_empty_rotation_rejected():
    with pytest.raises(EmptyRotation):
        sc.build_map(((1,), (0,), ()))


def test_k7_derivation_is_valid(k7):
    assert k7.vertex_count == 7
    assert k7.edge_count == 21
    assert k7.face_count == 14
    assert k7.euler_characteristic() == 0
    assert k7.genus() == 1
    assert k7.is_simplicial_triangulation()


def test_embedding_b_face_count(emb_b):
    assert emb_b.face_count == 114
    assert emb_b.genus() == 20
    assert emb_b.is_simplicial_triangulation()


def test_quadrilateral_face_not_triangulation():
    square = sc.build_map(((1, 3), (2, 0), (3, 1), (0, 2)))
    assert square.genus() == 0
    assert not square.is_simplicial_triangulation()


def test_cut_along_facial_triangle_of_sphere(tetra):
    comps = tetra.cut_along(tetra.faces()[0])
    assert len(comps) == 2
    assert all(c.genus == 0 for c in comps)
    assert all(c.boundary_cycles == 1 for c in comps)


def test_cut_along_gamma3_on_k43(k43):
    comps = k43.cut_along([0, 5, 2, 35, 6, 1, 4, 21])
    assert len(comps) == 2
    assert sorted(c.genus for c in comps) == [1, 129]
    small = min(comps, key=lambda c: c.genus)
    assert small.face_count == 10
    assert small.edge_count - 8 == 11  # interior edges of the torus side


def test_torus_cycles_never_separate(k7):
    faces = {tuple(sorted(f)) for f in k7.faces()}
    tested = 0
    for a in range(7):
        for b in range(a + 1, 7):
            for c in range(b + 1, 7):
                if (a, b, c) in faces:
                    continue
                comps = k7.cut_along([a, b, c])
                assert len(comps) == 1
                assert comps[0].boundary_cycles == 2
                tested += 1
    assert tested == 35 - 14
    # 4-cycles may bound disks but never split the torus
    import itertools
    for perm in itertools.permutations(range(1, 5), 3):
        cyc = [0, *perm]
        comps = k7.cut_along(cyc)
        if len(comps) == 2:
            assert min(c.genus for c in comps) == 0
        else:
            assert len(comps) == 1


def test_cut_along_rejects_bad_inputs(tetra):
    with pytest.raises(NotACycle):
        tetra.cut_along([0, 1])
    with pytest.raises(NotACycle):
        tetra.cut_along([0, 1, 0, 2])
    five = sc.glue_along_triangle(tetra, tetra.faces()[0],
                                  tetra, tetra.faces()[0])
    nonedge = None
    for a in range(5):
        for b in range(a + 1, 5):
            if not five.adjacent(a, b):
                nonedge = (a, b)
    assert nonedge is not None
    with pytest.raises(EdgeMissing):
        five.cut_along([nonedge[0], nonedge[1],
                        next(iter(set(range(5)) - set(nonedge)))])


def test_glue_tetrahedra(tetra):
    glued = sc.glue_along_triangle(tetra, tetra.faces()[0],
                                   tetra, tetra.faces()[0])
    assert glued.vertex_count == 5
    assert glued.edge_count == 9
    assert glued.genus() == 0
    assert glued.is_simplicial_triangulation()


def test_glue_two_k7_tori(double_k7):
    fixture, seam = double_k7
    assert fixture.vertex_count == 11
    assert fixture.genus() == 2
    assert fixture.is_simplicial_triangulation()
    comps = fixture.cut_along(list(seam))
    assert len(comps) == 2
    assert [c.genus for c in comps] == [1, 1]
    assert all(c.boundary_cycles == 1 for c in comps)


def test_glue_not_a_face(tetra, k7):
    with pytest.raises(NotAFace):
        sc.glue_along_triangle(tetra, (0, 1, 2), k7, k7.faces()[0])


def test_contract_octahedron_edges(octa):
    assert octa.genus() == 0
    edges = octa.contractible_edges()
    assert edges
    for e in edges:
        result = octa.contract_edge(e)
        assert result.genus() == 0
        assert result.vertex_count == octa.vertex_count - 1
        assert result.is_simplicial_triangulation()


def test_k19_is_irreducible(emb_b):
    assert emb_b.contractible_edges() == []
    with pytest.raises(NotContractible):
        emb_b.contract_edge((0, 1))


def test_fixture_seam_edge_not_contractible(double_k7):
    fixture, seam = double_k7
    with pytest.raises(NotContractible):
        fixture.contract_edge((seam[0], seam[1]))
    # complete-graph pieces leave every edge in at least 3 triangles
    assert fixture.contractible_edges() == []


def test_k4_sphere_contraction_refused(tetra):
    with pytest.raises(IsK4Sphere):
        tetra.contract_edge((0, 1))


def test_dart_involution_and_face_partition(k7, tetra, octa):
    d = sc.Dart(2, 5)
    assert d.opposite().opposite() == d
    for m in (k7, tetra, octa):
        dart_count = sum(len(f) for f in m.faces())
        assert dart_count == 2 * m.edge_count


def test_euler_parity_and_double_counting(tetra, k7, octa, emb_b, double_k7):
    fixture, _ = double_k7
    for m in (tetra, k7, octa, emb_b, fixture):
        assert (m.vertex_count - m.edge_count + m.face_count) % 2 == 0
        if m.is_simplicial_triangulation():
            assert 3 * m.face_count == 2 * m.edge_count


def test_cut_conservation(emb_b, k43, double_k7):
    fixture, seam = double_k7
    link5 = list(emb_b.rotations[5])
    cases = [(emb_b, link5), (k43, [0, 5, 2, 35, 6, 1, 4, 21]),
             (fixture, list(seam))]
    for m, cyc in cases:
        comps = m.cut_along(cyc)
        assert len(comps) == 2
        assert sum(c.genus for c in comps) == m.genus()
        assert all(c.boundary_cycles == 1 for c in comps)
        for c in comps:
            assert c.chi == c.vertex_count - c.edge_count + c.face_count
            assert c.chi == 2 - 2 * c.genus - c.boundary_cycles


def test_glue_additivity(tetra, k7):
    for a, b, expect in ((tetra, tetra, 0), (tetra, k7, 1), (k7, k7, 2)):
        glued = sc.glue_along_triangle(a, a.faces()[0], b, b.faces()[0])
        assert glued.genus() == expect


def test_rotmap_roundtrip(k7, tmp_path):
    p = tmp_path / "k7.rotmap"
    sc.write_rotmap(k7, p)
    again = sc.read_rotmap(p)
    assert again.rotations == k7.rotations


def test_rotmap_parse_errors():
    with pytest.raises(ParseError, match="line 1"):
        sc.parse_rotmap("rotmap 9\n")
    with pytest.raises(ParseError, match="line 2"):
        sc.parse_rotmap("rotmap 1\nnope\n")
    with pytest.raises(ParseError, match="line 3"):
        sc.parse_rotmap("rotmap 1\nvertices 2\n0 1\n")
    with pytest.raises(ParseError, match="line 4"):
        sc.parse_rotmap("rotmap 1\nvertices 2\n0: 1\n0: 1\n")
    with pytest.raises(ParseError):
        sc.parse_rotmap("rotmap 1\nvertices 2\n0: 1\n")


def test_three_cycle_sphere_rejected_at_parse():
    text = "rotmap 1\nvertices 3\n0: 1 2\n1: 2 0\n2: 0 1\n"
    with pytest.raises(ParseError):
        sc.parse_rotmap(text)
    # but a two-vertex map parses: it is a valid sphere map
    m = sc.parse_rotmap("rotmap 1\nvertices 2\n0: 1\n1: 0\n")
    assert m.genus() == 0

import pytest

import splitcycles as sc

K7_SEQUENCE = (1, 3, 2, 6, 4, 5)

TETRA = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

OCTA = ((1, 2, 3, 4),
        (0, 4, 5, 2),
        (0, 1, 5, 3),
        (0, 2, 5, 4),
        (0, 3, 5, 1),
        (2, 1, 4, 3))


@pytest.fixture(scope="session")
def tetra():
    return sc.build_map(TETRA)


@pytest.fixture(scope="session")
def octa():
    return sc.build_map(OCTA)


@pytest.fixture(scope="session")
def k7():
    return sc.derive(sc.VoltageBaseMap(7, K7_SEQUENCE))


@pytest.fixture(scope="session")
def emb_b():
    return sc.derive(sc.gross_tucker_base(1))


@pytest.fixture(scope="session")
def emb_a():
    return sc.derive(sc.bundled_base("A"))


@pytest.fixture(scope="session")
def emb_c():
    return sc.derive(sc.bundled_base("C"))


@pytest.fixture(scope="session")
def k43():
    return sc.derive(sc.gross_tucker_base(3))


@pytest.fixture(scope="session")
def double_k7(k7):
    """Two K_7 tori glued along a face: genus-2 fixture with an
    interior-vertex seam cycle on both sides."""
    face = k7.faces()[0]
    return sc.glue_along_triangle(k7, face, k7, face), tuple(face)


@pytest.fixture(scope="session")
def table_b(emb_b):
    return sc.enumerate_cycles(emb_b, 0, sc.SearchOptions())

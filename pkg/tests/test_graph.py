import pytest

from critgraph.exactla import IntegerMatrix, det_bareiss
from critgraph.graph import (
    Multigraph,
    c4xcn,
    cartesian_product,
    cycle,
    laplacian,
    parse_edge_list,
)


def test_cycle_basics():
    for n in (3, 4, 5):
        g = cycle(n)
        assert g.vertex_count == n
        assert g.edge_count == n
        assert all(g.degree(v) == 2 for v in range(n))
        assert g.multiplicity(0, 1) == 1
    with pytest.raises(ValueError):
        cycle(2)


def test_multigraph_validation():
    with pytest.raises(ValueError):
        Multigraph(0)
    with pytest.raises(ValueError):
        Multigraph(3, {(1, 1): 1})
    with pytest.raises(ValueError):
        Multigraph(3, {(0, 3): 1})
    with pytest.raises(ValueError):
        Multigraph(3, {(0, 1): 0})
    g = Multigraph(2, {(1, 0): 2})
    assert g.multiplicity(0, 1) == 2


def test_cartesian_product_with_single_vertex():
    k1 = Multigraph(1)
    g = cycle(5)
    assert cartesian_product(k1, g) == g
    assert cartesian_product(g, k1) == g


def test_cartesian_product_edge_count():
    g = cartesian_product(cycle(3), cycle(3))
    assert g.vertex_count == 9
    assert g.edge_count == 18  # |V1||E2| + |V2||E1|
    assert all(g.degree(v) == 4 for v in range(9))


def test_cartesian_product_edge_count_formula():
    for g1, g2 in [(cycle(3), cycle(5)), (cycle(4), cycle(4))]:
        g = cartesian_product(g1, g2)
        assert g.edge_count == g1.vertex_count * g2.edge_count + g2.vertex_count * g1.edge_count


def test_prism_family_structure():
    g = c4xcn(3)
    assert g.vertex_count == 12
    assert g.edge_count == 24
    assert all(g.degree(v) == 4 for v in range(12))
    g = c4xcn(4)
    assert g.vertex_count == 16
    assert g.edge_count == 32
    with pytest.raises(ValueError):
        c4xcn(2)


def test_prism_equals_cartesian_product():
    for n in range(3, 51):
        assert c4xcn(n) == cartesian_product(cycle(4), cycle(n))


def test_laplacian_examples():
    assert laplacian(cycle(3)) == IntegerMatrix(
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    )
    lap = laplacian(c4xcn(3))
    assert all(lap[i, i] == 4 for i in range(12))
    double = Multigraph(2, {(0, 1): 2})
    assert laplacian(double) == IntegerMatrix([[2, -2], [-2, 2]])


def test_laplacian_symmetric_zero_sums():
    for g in (cycle(7), c4xcn(5), Multigraph(3, {(0, 1): 3, (1, 2): 1})):
        lap = laplacian(g)
        n = g.vertex_count
        assert lap == lap.transpose()
        assert all(sum(lap.row(i)) == 0 for i in range(n))
        assert all(sum(lap[i, j] for i in range(n)) == 0 for j in range(n))


def test_prism_laplacian_has_corank_one():
    # nonzero reduced determinant == rank 4n-1 over the rationals
    for n in range(3, 21):
        reduced = laplacian(c4xcn(n)).delete_row_col(0, 0)
        assert det_bareiss(reduced) != 0


def test_parse_edge_list_basic():
    g = parse_edge_list("0 1\n1 2\n2 0\n")
    assert g == cycle(3)


def test_parse_edge_list_header_comments_multiplicity():
    text = """
    # a path with an extra isolated vertex and a double edge
    vertices 4
    0 1 2
    1 2   # trailing comment
    """
    g = parse_edge_list(text)
    assert g.vertex_count == 4
    assert g.multiplicity(0, 1) == 2
    assert g.multiplicity(1, 2) == 1
    assert g.degree(3) == 0


def test_parse_edge_list_accumulates_repeats():
    g = parse_edge_list("0 1\n1 0\n")
    assert g.multiplicity(0, 1) == 2


def test_parse_edge_list_errors():
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("0 0\n")
    with pytest.raises(ValueError):
        parse_edge_list("0 one\n")
    with pytest.raises(ValueError):
        parse_edge_list("vertices 2\n0 5\n")
    with pytest.raises(ValueError):
        parse_edge_list("0 1 2 3\n")
    with pytest.raises(ValueError):
        parse_edge_list("-1 0\n")

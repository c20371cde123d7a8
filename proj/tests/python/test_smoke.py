import pytest

import sytpoly


def test_diagram_size():
    assert sytpoly.diagram_size(4, [4, 2, 1, 0]) == 17
    assert sytpoly.diagram_size(3, []) == 6


def test_diagram_boxes():
    assert sytpoly.diagram_boxes(2, [1, 0]) == [(1, 1), (1, 2), (1, 3), (2, 2)]


def test_parse_partition():
    assert sytpoly.parse_partition("3", 3) == [3, 0, 0]
    with pytest.raises(ValueError):
        sytpoly.parse_partition("1,2", 2)


def test_tableaux_and_counts():
    ts = sytpoly.tableaux(2, [1, 0])
    assert len(ts) == 2
    assert ts[0]["diag"] == [1, 4]
    assert ts[1]["diag"] == [1, 3]
    assert sytpoly.tableaux(2, [1, 0], limit=1) == ts[:1]
    assert sytpoly.count_by_gaps(2, [1, 0]) == {(2, 0): 1, (1, 1): 1}


def test_lattice_points_and_maximize():
    assert sytpoly.lattice_points(2, [1, 0]) == [[1, 1], [2, 0]]
    assert sytpoly.coordinate_sum(4, [4, 2, 1, 0]) == 13
    assert sytpoly.maximize(2, [1, 0], [1, 0]) == [2, 0]
    assert sytpoly.maximize(2, [1, 0], [0, 1]) == [1, 1]
    with pytest.raises(ValueError):
        sytpoly.maximize(2, [1, 0], [1, 1])


def test_vertices():
    vs = sytpoly.vertices(4, [4, 2, 1, 0], with_tableaux=True)
    target = [v for v in vs if v["vertex"] == [1, 10, 1, 1]]
    assert len(target) == 1
    assert target[0]["diag"] == [1, 3, 14, 16]
    assert target[0]["tableau"][0][0] == 1
    assert sorted(v["vertex"] for v in sytpoly.vertices(2, [1, 0])) == [
        [1, 1],
        [2, 0],
    ]


def test_trees_and_catalan():
    assert len(sytpoly.trees(4)) == 14
    assert sytpoly.catalan(4) == 14
    assert sytpoly.vertex_count_closed_form(3, 2) == 3


def test_polynomial_terms():
    rhs = sytpoly.rhs_polynomial(2, [1, 0])
    assert rhs == [
        {"exp": [1, 1], "num": "1", "den": "1"},
        {"exp": [2, 0], "num": "1", "den": "2"},
    ]
    assert sytpoly.lhs_polynomial(2, [1, 0]) == rhs


def test_verify():
    report = sytpoly.verify_identity(2, [1, 0])
    assert report["status"] == "pass"
    reports = sytpoly.verify_all(max_n=2, max_part=2, seed=1729)
    assert all(r["status"] == "pass" for r in reports)

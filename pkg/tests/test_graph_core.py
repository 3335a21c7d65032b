"""Graph construction, families, the spec mini-language, and the text format."""

import pytest

from hamholes.errors import GraphFormatError
from hamholes.graph import (
    Graph,
    bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    external_neighborhood,
    fan_example_graph,
    generate,
    gnp_graph,
    min_degree,
    parse_graph,
    path_graph,
    petersen_graph,
    serialize_graph,
)

# ---------------------------------------------------------------------------
# Graph basics


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (0, 3)])
    assert g.n == 4 and g.m == 3
    assert g.has_edge(1, 0) and g.has_edge(0, 1)
    assert not g.has_edge(2, 3)
    assert g.degree(0) == 2 and g.degrees == (2, 2, 1, 1)
    assert g.neighbors(1) == (0, 2)
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph(3, [(0, 5)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="vertex count"):
        Graph(-1, [])


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])
    assert a != Graph(4, [(0, 1), (1, 2)])


def test_complement_involution_and_c5():
    c5 = cycle_graph(5)
    co = c5.complement()
    assert co.m == 5 and co.degrees == (2,) * 5
    assert co.complement() == c5
    assert complete_graph(4).complement().m == 0


def test_remove_edges():
    g = complete_graph(4)
    h = g.remove_edges([(0, 1), (2, 3)])
    assert h.m == 4 and not h.has_edge(0, 1) and not h.has_edge(3, 2)
    assert g.m == 6  # original untouched
    with pytest.raises(ValueError, match="not an edge"):
        h.remove_edges([(0, 1)])


def test_components_and_min_degree():
    g = Graph(5, [(3, 4), (0, 1)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert min_degree(g) == 0
    assert components(cycle_graph(4)) == [[0, 1, 2, 3]]
    with pytest.raises(ValueError):
        min_degree(Graph(0))


def test_external_neighborhood():
    g = cycle_graph(5)
    assert external_neighborhood(g, [0]) == {1, 4}
    assert external_neighborhood(g, [0, 1]) == {2, 4}
    assert external_neighborhood(g, range(5)) == set()


def test_disjoint_union():
    g = disjoint_union(complete_graph(3), cycle_graph(4))
    assert g.n == 7 and g.m == 7
    assert g.has_edge(0, 2) and g.has_edge(3, 4) and g.has_edge(3, 6)
    assert not g.has_edge(2, 3)


# ---------------------------------------------------------------------------
# named families


def test_families_sizes_and_degrees():
    assert complete_graph(5).m == 10
    assert bipartite_graph(2, 3).degrees == (3, 3, 2, 2, 2)
    assert cycle_graph(6).degrees == (2,) * 6
    assert path_graph(4).degrees == (1, 2, 2, 1)
    p = petersen_graph()
    assert p.n == 10 and p.m == 15 and p.degrees == (3,) * 10


def test_fan_example_structure():
    # hub + clique B (size k+l) + independent C (size k) + clique D (size l+1)
    g = fan_example_graph(4, 1)
    k, l = 4, 1
    assert g.n == 2 * k + 2 * l + 2 == 12
    hub = 0
    b = list(range(1, k + l + 1))
    c = list(range(k + l + 1, 2 * k + l + 1))
    d = list(range(2 * k + l + 1, 2 * k + 2 * l + 2))
    assert g.neighbors(hub) == tuple(b)
    for u in c:
        for v in c:
            if u != v:
                assert not g.has_edge(u, v)
    for u in d:
        assert g.has_edge(u, d[0]) or u == d[0]
    with pytest.raises(ValueError):
        fan_example_graph(3, 1)  # needs k >= l + 3
    with pytest.raises(ValueError):
        fan_example_graph(5, 0)


def test_gnp_determinism_and_validation():
    a = gnp_graph(12, 0.4, seed=7)
    b = gnp_graph(12, 0.4, seed=7)
    assert a == b
    assert a != gnp_graph(12, 0.4, seed=8)
    assert gnp_graph(5, 0.0, seed=1).m == 0
    assert gnp_graph(5, 1.0, seed=1).m == 10
    with pytest.raises(ValueError):
        gnp_graph(5, 1.5, seed=1)
    with pytest.raises(ValueError):
        gnp_graph(5, 0.5, seed=None)


# ---------------------------------------------------------------------------
# spec mini-language


def test_generate_atomic_and_composite():
    assert generate("complete 4") == complete_graph(4)
    assert generate("bipartite 2 3") == bipartite_graph(2, 3)
    assert generate("petersen") == petersen_graph()
    assert generate("gnp 10 0.5", seed=3) == gnp_graph(10, 0.5, seed=3)
    g = generate("complement-of (bipartite 2 3)")
    assert g == bipartite_graph(2, 3).complement()
    g = generate("disjoint-union (complete 3) (cycle 4)")
    assert g.n == 7 and g.m == 7
    nested = generate("complement-of (disjoint-union (complete 2) (complete 2))")
    assert nested == bipartite_graph(2, 2)


def test_generate_errors():
    with pytest.raises(ValueError, match="unknown family"):
        generate("tree 5")
    with pytest.raises(ValueError, match="expected a number"):
        generate("complete x")
    with pytest.raises(ValueError, match="trailing"):
        generate("complete 3 4")
    with pytest.raises(ValueError, match="seed"):
        generate("gnp 5 0.5")  # no seed supplied
    with pytest.raises(ValueError):
        generate("complement-of complete 3")  # missing parentheses
    with pytest.raises(ValueError):
        generate("")


# ---------------------------------------------------------------------------
# text format


def test_graph_round_trip():
    for g in [complete_graph(5), petersen_graph(), Graph(3), Graph(0)]:
        assert parse_graph(serialize_graph(g)) == g


def test_serialize_layout():
    text = serialize_graph(Graph(3, [(0, 2), (0, 1)]))
    assert text == "3 2\n0 1\n0 2"  # header, then lexicographic edges


def test_parse_comments_and_blank_lines():
    g = parse_graph("# a comment\n3 1\n\n0 1\n# trailing\n")
    assert g == Graph(3, [(0, 1)])


@pytest.mark.parametrize(
    "text,complaint",
    [
        ("", "header"),
        ("3\n", "header"),
        ("3 1\n", "expected 1 edge lines"),
        ("3 0\n0 1\n", "more than 0 edge lines"),
        ("3 1\n0 0\n", "self-loop"),
        ("3 1\n0 3\n", "out of range"),
        ("3 2\n0 1\n1 0\n", "duplicate"),
        ("3 1\n0 x\n", "expected edge"),
        ("x 1\n0 1\n", "header"),
    ],
)
def test_parse_rejects_malformed(text, complaint):
    with pytest.raises(GraphFormatError, match=complaint):
        parse_graph(text)


def test_parse_error_reports_physical_line():
    with pytest.raises(GraphFormatError, match="line 4"):
        parse_graph("# comment\n3 2\n0 1\n1 1\n")

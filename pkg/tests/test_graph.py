import random

import pytest
from hypothesis import given, strategies as st

from lexnet.errors import DuplicateLabel, FormatError, NodeOutOfRange
from lexnet.graph import LexNetwork, from_links, to_undirected


def test_add_node_interns_labels():
    g = LexNetwork()
    assert g.add_node("cat") == 0 and g.N == 1
    assert g.add_node("sat") == 1 and g.N == 2
    with pytest.raises(DuplicateLabel):
        g.add_node("cat")
    assert g.node_id("sat") == 1 and g.label(0) == "cat"


def test_add_link_undirected():
    g = from_links(2, [], directed=False)
    assert g.add_link(0, 1) is True and g.K == 1
    assert g.add_link(1, 0) is False and g.K == 1
    assert g.add_link(0, 0) is False and g.K == 1


def test_add_link_directed_counts_both_directions():
    g = from_links(2, [])
    assert g.add_link(0, 1) and g.add_link(1, 0)
    assert g.K == 2 and not g.add_link(0, 1)


def test_add_link_out_of_range():
    g = from_links(2, [])
    with pytest.raises(NodeOutOfRange):
        g.add_link(0, 2)
    with pytest.raises(NodeOutOfRange):
        g.add_link(-1, 0)


def test_to_undirected_collapses_reciprocal_links():
    g = to_undirected(from_links(2, [(0, 1), (1, 0)]))
    assert (g.directed, g.N, g.K) == (False, 2, 1)
    g = to_undirected(from_links(3, [(0, 1), (1, 2)]))
    assert g.K == 2 and set(g.links()) == {(0, 1), (1, 2)}


def test_to_undirected_rejects_undirected():
    with pytest.raises(ValueError):
        from_links(2, [(0, 1)], directed=False).to_undirected()


@pytest.mark.parametrize("seed", range(5))
def test_to_undirected_matches_bruteforce_union(seed):
    rng = random.Random(seed)
    n = 30
    arcs = {(rng.randrange(n), rng.randrange(n)) for _ in range(120)}
    g = from_links(n, arcs)
    u = g.to_undirected()
    expected = {(min(a, b), max(a, b)) for a, b in arcs if a != b}
    assert set(u.links()) == expected
    assert u.N == n and u.K == len(expected) <= g.K


ops = st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=60)


@given(ops, st.booleans())
def test_link_set_invariants(pairs, directed):
    g = from_links(8, pairs, directed)
    links = list(g.links())
    assert g.K == len(links) == len(set(links))
    assert all(u != v for u, v in links)
    if not directed:
        for u in range(8):
            for v in g.successors(u):
                assert u in g.successors(v)
    else:
        u = g.to_undirected()
        before = u.K
        for a, b in pairs:
            u.add_link(a, b)
        assert u.K == before <= g.K


def test_csr_sorted_neighbours():
    g = from_links(4, [(0, 3), (0, 1), (2, 0)])
    indptr, indices = g.csr()
    assert indptr.tolist() == [0, 2, 2, 3, 3]
    assert indices.tolist() == [1, 3, 0]
    indptr, indices = g.csr(undirected_view=True)
    assert indices[indptr[0]:indptr[1]].tolist() == [1, 2, 3]


def test_edge_list_round_trip(tmp_path):
    g = LexNetwork()
    a, b, c = (g.add_node(w) for w in ("čuvar", "say, \"hi\"", "1"))
    g.add_link(a, b)
    g.add_link(b, c)
    path = tmp_path / "edges.csv"
    g.write_edge_list(path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == '"source","target"'
    assert '"čuvar"' in text
    h = LexNetwork.read_edge_list(path)
    assert {(h.label(u), h.label(v)) for u, v in h.links()} == {
        ("čuvar", 'say, "hi"'), ('say, "hi"', "1")}


def test_edge_list_unlabeled_nodes_use_ids(tmp_path):
    path = tmp_path / "e.csv"
    from_links(3, [(0, 2)], directed=False).write_edge_list(path)
    assert path.read_text().splitlines()[1] == '"0","2"'


def test_edge_list_bad_header(tmp_path):
    path = tmp_path / "e.csv"
    path.write_text("a,b\nx,y\n")
    with pytest.raises(FormatError):
        LexNetwork.read_edge_list(path)

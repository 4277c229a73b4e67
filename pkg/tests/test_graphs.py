"""Graph layer: cuts, components, domination; brute-force cross-checks."""

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from vnum.errors import GraphFormatError, PreconditionError
from vnum.graphs import (
    Graph,
    complete_graph,
    connected_components,
    enumerate_min_cuts,
    format_graph,
    gamma_c,
    gamma_c_pair,
    induced_subgraph,
    is_connected_dominating,
    is_minimal_kcut,
    parse_graph,
    path_graph,
)
from vnum.cycles import cycle_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_make_rejects_bad_input():
    with pytest.raises(GraphFormatError):
        Graph.make(3, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Graph.make(3, [(1, 4)])
    with pytest.raises(GraphFormatError):
        Graph.make(3, [(1, 2), (2, 1)])


def test_induced_subgraph_examples():
    c4 = cycle_graph(4)
    sub = induced_subgraph(c4, {1, 2, 3})
    assert sub.vertices == frozenset({1, 2, 3})
    assert sub.edges == frozenset({(1, 2), (2, 3)})
    empty = induced_subgraph(c4, set())
    assert empty.vertices == frozenset() and empty.edges == frozenset()
    p4 = path_graph(4)
    sub = induced_subgraph(p4, {1, 3, 4})
    assert sub.edges == frozenset({(3, 4)})
    with pytest.raises(PreconditionError):
        induced_subgraph(c4, {5})


def test_connected_components_examples():
    c5 = cycle_graph(5)
    assert connected_components(c5) == [frozenset(range(1, 6))]
    c4 = cycle_graph(4)
    assert connected_components(induced_subgraph(c4, {2, 4})) == [frozenset({2}), frozenset({4})]
    p4 = path_graph(4)
    assert connected_components(induced_subgraph(p4, {1, 3, 4})) == [
        frozenset({1}),
        frozenset({3, 4}),
    ]


def test_is_minimal_kcut_examples():
    p4 = path_graph(4)
    assert is_minimal_kcut(p4, {2}) == (True, 2)
    assert is_minimal_kcut(p4, {2, 3})[0] is False
    assert is_minimal_kcut(cycle_graph(6), {1, 3, 5}) == (True, 3)
    with pytest.raises(PreconditionError):
        is_minimal_kcut(p4, set())
    with pytest.raises(PreconditionError):
        is_minimal_kcut(p4, {1, 2, 3, 4})


def brute_min_cuts(g):
    """Independent oracle: subset enumeration with networkx components."""
    out = [frozenset()]
    verts = sorted(g.vertices)
    for size in range(1, len(verts)):
        for combo in itertools.combinations(verts, size):
            s = set(combo)
            h = to_nx(g).copy()
            h.remove_nodes_from(s)
            comps = list(nx.connected_components(h))
            if len(comps) < 2:
                continue
            ok = True
            for i in s:
                hi = to_nx(g).subgraph(set(verts) - s | {i})
                if nx.number_connected_components(hi) >= len(comps):
                    ok = False
                    break
            if ok:
                out.append(frozenset(s))
    return sorted(out, key=lambda s: tuple(sorted(s)))


def test_enumerate_min_cuts_examples():
    assert [r.s for r in enumerate_min_cuts(cycle_graph(4))] == [
        frozenset(),
        frozenset({1, 3}),
        frozenset({2, 4}),
    ]
    assert [r.s for r in enumerate_min_cuts(path_graph(4))] == [
        frozenset(),
        frozenset({2}),
        frozenset({3}),
    ]
    assert [r.s for r in enumerate_min_cuts(complete_graph(4))] == [frozenset()]
    with pytest.raises(PreconditionError):
        enumerate_min_cuts(Graph.make(4, [(1, 2), (3, 4)]))


def test_enumerate_min_cuts_against_bruteforce(small_connected_graphs):
    for g in small_connected_graphs:
        got = [r.s for r in enumerate_min_cuts(g)]
        assert got == brute_min_cuts(g), sorted(g.edges)


def test_min_cut_records_roundtrip(small_connected_graphs):
    for g in small_connected_graphs:
        for rec in enumerate_min_cuts(g):
            if rec.s:
                ok, k = is_minimal_kcut(g, rec.s)
                assert ok and k == rec.k and k == len(rec.components)
            merged = frozenset().union(*rec.components)
            assert merged == g.vertices - rec.s


def test_cycle_min_cuts_are_independent_sets():
    # nonempty minimal cuts of a cycle = independent subsets of size >= 2
    for n in range(4, 10):
        g = cycle_graph(n)
        got = {r.s for r in enumerate_min_cuts(g) if r.s}
        want = set()
        for size in range(2, n):
            for combo in itertools.combinations(range(1, n + 1), size):
                s = set(combo)
                if all((v % n) + 1 not in s for v in s):
                    want.add(frozenset(s))
        assert got == want, n


def test_is_connected_dominating_examples():
    p4 = path_graph(4)
    assert is_connected_dominating(p4, {2, 3})
    assert not is_connected_dominating(p4, {1, 2})
    assert is_connected_dominating(cycle_graph(4), {1, 2})
    with pytest.raises(PreconditionError):
        is_connected_dominating(p4, set())


def brute_gamma_c(g):
    verts = sorted(g.vertices)
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            sub = to_nx(g).subgraph(combo)
            if not nx.is_connected(sub):
                continue
            if all(set(to_nx(g).adj[v]) & set(combo) for v in set(verts) - set(combo)):
                return size
    raise AssertionError


def test_gamma_c_examples():
    assert gamma_c(path_graph(4)) == (2, frozenset({2, 3}))
    assert gamma_c(cycle_graph(4))[0] == 2
    assert gamma_c(complete_graph(3)) == (1, frozenset({1}))
    assert gamma_c(Graph.make(1, []))[0] == 1  # one-vertex convention


def test_gamma_c_against_bruteforce(small_connected_graphs):
    for g in small_connected_graphs:
        size, witness = gamma_c(g)
        assert size == brute_gamma_c(g), sorted(g.edges)
        assert is_connected_dominating(g, witness)


def test_gamma_c_pair_examples():
    assert gamma_c_pair(cycle_graph(4), {1, 3}) == (2, frozenset({2, 4}))
    assert gamma_c_pair(cycle_graph(6), {1, 4}) == (4, frozenset({2, 3, 5, 6}))
    assert gamma_c_pair(path_graph(4), {2}) == (2, frozenset({1, 3}))
    with pytest.raises(PreconditionError):
        gamma_c_pair(cycle_graph(6), {1, 3, 5})  # a 3-cut, not a 2-cut


def test_gamma_c_pair_witness_is_valid(small_connected_graphs):
    for g in small_connected_graphs:
        for rec in enumerate_min_cuts(g):
            if rec.k != 2:
                continue
            size, witness = gamma_c_pair(g, rec.s)
            assert len(witness) == size
            v1, v2 = rec.components
            for side in (v1, v2):
                trace = witness & side
                h = induced_subgraph(g, side | rec.s)
                assert is_connected_dominating(h, trace)


def test_graph_text_roundtrip():
    text = "# a comment\nn 4\n1 2\n2 3\n3 4\n1 4  # wrap\n"
    g = parse_graph(text)
    assert g == cycle_graph(4)
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "bad",
    [
        "1 2\n",  # missing n line
        "n 4\n2 1\n",  # u >= v
        "n 4\n1 5\n",  # out of range
        "n 4\n1 2\n1 2\n",  # duplicate
        "n 0\n",
        "n 4\n1\n",
    ],
)
def test_graph_text_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph(bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.data())
def test_components_partition_vertices(n, data):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = data.draw(st.sets(st.sampled_from(pairs)))
    g = Graph.make(n, edges)
    comps = connected_components(g)
    union = set()
    for c in comps:
        assert not (union & c)
        union |= c
    assert union == set(g.vertices)
    assert comps == sorted(comps, key=min)

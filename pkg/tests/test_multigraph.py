import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import SMALL_CELLS, class_graph, random_relabel
from pantsdist import io as gio
from pantsdist.canonical import (
    CANON_CAP,
    CanonicalizationTooLarge,
    canonical_form,
    canonical_graph,
    graph_from_key,
    is_isomorphic,
)
from pantsdist.lcf import named_graph
from pantsdist.multigraph import (
    GraphError,
    MultiGraph,
    component_count,
    cycle_rank,
    diameter,
    girth,
    is_bipartite,
    is_connected,
)

P4 = MultiGraph(4, [(0, 1), (1, 2), (2, 3)])
THETA = MultiGraph(2, [(0, 1)] * 3)
DUMBBELL = MultiGraph(2, [(0, 0), (0, 1), (1, 1)])
K4 = named_graph("k4")


@st.composite
def multigraphs(draw, max_vertices=7, max_edges=10):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=m, max_size=m))
    return MultiGraph(n, edges)


# -- examples -------------------------------------------------------------


def test_is_connected_examples():
    assert is_connected(P4)
    assert not is_connected(MultiGraph(2, [(0, 0), (1, 1)]))
    assert is_connected(THETA)
    assert is_connected(MultiGraph(1))
    assert is_connected(MultiGraph(0))


def test_girth_examples():
    assert girth(DUMBBELL) == 1
    assert girth(THETA) == 2
    assert girth(named_graph("petersen")) == 5
    assert girth(P4) == math.inf


def test_cycle_rank_examples():
    assert cycle_rank(P4) == 0
    assert cycle_rank(THETA) == 2
    assert cycle_rank(K4) == 3


def test_degree_counts_loop_twice():
    assert DUMBBELL.degrees == (3, 3)
    assert MultiGraph(1, [(0, 0)]).degrees == (2,)


def test_immutable_and_normalized():
    g = MultiGraph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    with pytest.raises(AttributeError):
        g._edges = ()
    assert g == MultiGraph(3, [(0, 2), (0, 1)])
    assert hash(g) == hash(MultiGraph(3, [(0, 2), (0, 1)]))


def test_endpoint_out_of_range():
    with pytest.raises(GraphError):
        MultiGraph(2, [(0, 2)])
    with pytest.raises(GraphError):
        MultiGraph(-1)


def test_diameter_and_bipartite():
    assert diameter(P4) == 3
    assert diameter(MultiGraph(2)) == math.inf
    assert is_bipartite(named_graph("heawood"))
    assert not is_bipartite(named_graph("petersen"))


def test_delete_vertices_renumbers():
    h, keep = P4.delete_vertices([1])
    assert keep == [0, 2, 3]
    assert h.edges == ((1, 2),)


# -- properties against networkx / brute force -----------------------------


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees) == 2 * g.edge_count


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_connectivity_and_rank_match_networkx(g):
    G = oracles.to_nx(g.vertex_count, g.edges)
    assert is_connected(g) == nx.is_connected(G)
    assert component_count(g) == nx.number_connected_components(G)
    assert cycle_rank(g) == g.edge_count - g.vertex_count + nx.number_connected_components(G)


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_girth_matches_brute_force(g):
    assert girth(g) == oracles.brute_girth(g.vertex_count, list(g.edges))


@settings(max_examples=100, deadline=None)
@given(multigraphs(), st.randoms(use_true_random=False))
def test_invariants_survive_relabeling(g, r):
    h = random_relabel(g, r)
    assert girth(h) == girth(g)
    assert cycle_rank(h) == cycle_rank(g)
    assert sorted(h.degrees) == sorted(g.degrees)


# -- canonical form ----------------------------------------------------------


def test_canonical_exact_against_brute_force_random():
    """Equal keys iff brute-force canonical forms agree, on dense random 5- and 6-vertex multigraphs."""
    r = random.Random(7)
    for n, m, count in ((5, 6, 400), (6, 7, 250)):
        seen_key = {}
        seen_brute = {}
        for _ in range(count):
            g = MultiGraph(n, [(r.randrange(n), r.randrange(n)) for _ in range(m)])
            k = canonical_form(g).key
            b = oracles.brute_canonical(n, g.edges)
            assert seen_key.setdefault(k, b) == b
            assert seen_brute.setdefault(b, k) == k


@pytest.mark.parametrize("cell", [c for c in SMALL_CELLS if 2 * c[0] - 2 + c[1] <= 6])
def test_canonical_exact_on_enumerated_classes(cell):
    """Every pair of enumerated classes is non-isomorphic by brute force; keys are distinct."""
    cg = class_graph(*cell)
    brute = {oracles.brute_canonical(p.graph.vertex_count, p.graph.edges) for p in cg.classes}
    assert len(brute) == len(cg.classes) == len(set(cg.keys))


def test_canonical_invariant_under_relabeling(rng):
    graphs = [K4, THETA, DUMBBELL, named_graph("petersen"), named_graph("heawood"), named_graph("cube")]
    for g in graphs:
        cf = canonical_form(g)
        for _ in range(100):
            assert canonical_form(random_relabel(g, rng)) == cf


def test_canonical_graph_roundtrip():
    for name in ("k4", "k33", "petersen", "dumbbell"):
        g = named_graph(name)
        cf = canonical_form(g)
        assert graph_from_key(cf.key) == canonical_graph(g)
        assert canonical_form(graph_from_key(cf.key)) == cf
        assert 0 <= cf.hash < 2**64


def test_canonical_distinguishes_cubic_eight():
    cube, wagner = named_graph("cube"), named_graph("wagner")
    assert not is_isomorphic(cube, wagner)
    assert canonical_form(cube) != canonical_form(wagner)


def test_canonical_cap():
    assert CANON_CAP >= 16
    ring = MultiGraph(CANON_CAP, [(i, (i + 1) % CANON_CAP) for i in range(CANON_CAP)])
    canonical_form(ring)
    big = MultiGraph(CANON_CAP + 1, [(i, i + 1) for i in range(CANON_CAP)])
    with pytest.raises(CanonicalizationTooLarge, match="too large"):
        canonical_form(big)


def test_isomorphism_matches_networkx_on_cubic_ten(rng):
    from pantsdist.search import simple_cubic_graphs

    graphs = simple_cubic_graphs(10)
    for a in graphs[:8]:
        for b in graphs:
            ours = is_isomorphic(a, random_relabel(b, rng))
            assert ours == nx.is_isomorphic(oracles.to_nx(10, a.edges), oracles.to_nx(10, b.edges))


# -- formats -----------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(multigraphs())
def test_edge_list_and_json_roundtrip(g):
    assert gio.from_edge_list(gio.to_edge_list(g)) == g
    assert gio.from_json_obj(gio.to_json_obj(g)) == g
    assert gio.read_graph_text(gio.to_json(g))[0] == g


def test_edge_list_comments_and_errors():
    assert gio.from_edge_list("# c\n2 1\n0 1\n") == MultiGraph(2, [(0, 1)])
    with pytest.raises(GraphError):
        gio.from_edge_list("2 2\n0 1\n")
    with pytest.raises(GraphError):
        gio.from_edge_list("")
    with pytest.raises(GraphError):
        gio.read_graph_text("{not json")


def test_read_nested_graph_json():
    g, extra = gio.read_graph_text('{"graph": {"vertices": 2, "edges": [[0,1],[0,1],[0,1]]}, "girth": 2}')
    assert g == THETA and extra == {"girth": 2}


def test_dot_parses_back_with_networkx():
    dot = gio.to_dot(DUMBBELL)
    assert dot.startswith("graph G {")
    edges = [tuple(int(x) for x in ln.strip(" ;").split(" -- ")) for ln in dot.splitlines() if "--" in ln]
    assert MultiGraph(2, edges) == DUMBBELL

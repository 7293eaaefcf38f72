import json
from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from edgereg import graph as gr
from edgereg.graph import Graph, GraphParseError

from conftest import brute_alpha, brute_nu, graphs

C5 = gr.cycle(5)
K2 = gr.complete(2)
P5 = gr.path(5)


def hansen_oracle(n, e):
    # floor(1/2 + sqrt(1/4 + R)) = floor((1 + sqrt(1 + 4R)) / 2)
    r = n * n - n - 2 * e
    return (1 + isqrt(1 + 4 * r)) // 2


# parse_graph

def test_parse_single_edge():
    assert gr.parse_graph("2 1\n1 2") == Graph(2, frozenset({(1, 2)}))


def test_parse_c5():
    assert gr.parse_graph("5 5\n1 2\n2 3\n3 4\n4 5\n5 1") == C5


def test_parse_loop_names_line():
    with pytest.raises(GraphParseError) as ei:
        gr.parse_graph("3 1\n1 1")
    assert ei.value.line == 2
    assert "loop" in str(ei.value)


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("x y\n", 1),
    ("3 1\n1 4", 2),
    ("3 2\n1 2\n2 x", 3),
    ("3 2\n1 2", 3),
    ("3 1\n1 2\n2 3", 3),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphParseError) as ei:
        gr.parse_graph(text)
    assert ei.value.line == line


def test_parse_deduplicates_and_skips_comments():
    g = gr.parse_graph("# triangle-ish\n3 3\n1 2\n2 1\n2 3\n")
    assert g.sorted_edges() == [(1, 2), (2, 3)]


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 4)}))


@given(graphs())
def test_json_and_text_round_trip(g):
    assert Graph.from_json(json.dumps(g.to_json())) == g
    assert gr.parse_graph(g.to_text()) == g


# alpha

def test_alpha_k2():
    r = gr.alpha(K2)
    assert (r.alpha, r.c) == (1, 0)


def test_alpha_c5():
    r = gr.alpha(C5)
    assert (r.alpha, r.c) == (2, 1)
    assert brute_alpha(C5) == 2


def test_alpha_p5():
    r = gr.alpha(P5)
    assert (r.alpha, r.witness, r.c) == (3, (1, 3, 5), 2)
    assert brute_alpha(P5) == 3


def test_alpha_empty_and_edgeless():
    assert (gr.alpha(Graph(0)).alpha, gr.alpha(Graph(0)).c) == (0, -1)
    assert gr.alpha(Graph(4)).alpha == 4


@given(graphs(max_n=9))
def test_alpha_matches_brute_force(g):
    r = gr.alpha(g)
    assert r.alpha == brute_alpha(g)
    assert r.c == r.alpha - 1
    assert gr.is_stable(g, r.witness) and len(r.witness) == r.alpha
    assert max(r.maximal_set_sizes) == r.alpha


@given(graphs(max_n=8))
def test_maximal_stable_sets_are_exactly_the_maximal_ones(g):
    from itertools import combinations
    stable = set()
    for k in range(g.n + 1):
        for s in combinations(range(1, g.n + 1), k):
            if gr.is_stable(g, s):
                stable.add(frozenset(s))
    maximal = {s for s in stable if not any(s < t for t in stable)}
    got = {frozenset(i + 1 for i in range(g.n) if m >> i & 1) for m in gr.maximal_stable_sets(g)}
    assert got == maximal


@given(graphs(min_n=2, max_n=9), st.data())
def test_alpha_monotone_under_edge_addition(g, data):
    u = data.draw(st.integers(1, g.n))
    v = data.draw(st.integers(1, g.n).filter(lambda x: x != u))
    assert gr.alpha(g.add_edge(u, v)).alpha <= gr.alpha(g).alpha


# induced matchings

def test_nu_examples():
    assert gr.induced_matching_number(K2) == 1
    assert gr.induced_matching_number(P5) == 2
    assert gr.induced_matching_number(gr.whisker(K2)) == 1
    assert gr.induced_matching_number(Graph(3)) == 0


@given(graphs(max_n=7))
def test_nu_matches_brute_force(g):
    assert gr.induced_matching_number(g) == brute_nu(g)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_whisker_nu_equals_alpha_all_small_graphs(n):
    # every graph on n labelled vertices, up to isomorphism via the atlas plus edgeless
    gs = gr.connected_graphs(n) + [Graph(n)]
    for g in gs:
        assert gr.induced_matching_number(gr.whisker(g)) == gr.alpha(g).alpha


@given(graphs(min_n=1, max_n=6))
def test_whisker_nu_equals_alpha_random(g):
    assert brute_nu(gr.whisker(g)) == gr.alpha(g).alpha


# whisker and very well-covered

def test_whisker_examples():
    assert gr.whisker(K2).sorted_edges() == [(1, 2), (1, 3), (2, 4)]
    w = gr.whisker(C5)
    assert (w.n, w.e) == (10, 10)
    assert gr.whisker(Graph(1)) == K2
    with pytest.raises(ValueError):
        gr.whisker(Graph(0))


def test_very_well_covered_examples():
    assert gr.is_very_well_covered(gr.whisker(K2))
    assert not gr.is_very_well_covered(C5)
    assert gr.is_very_well_covered(gr.whisker(C5))
    assert not gr.is_very_well_covered(Graph(2))  # isolated vertices


@given(graphs(min_n=1, max_n=7))
def test_whiskers_are_very_well_covered(g):
    w = gr.whisker(g)
    assert gr.is_very_well_covered(w)
    assert gr.alpha(w).alpha == g.n


# bounds

@pytest.mark.parametrize("n,e,want", [(2, 1, 1), (3, 2, 2), (5, 5, 3)])
def test_hansen_examples(n, e, want):
    assert gr.hansen_bound(n, e) == want


@given(st.integers(0, 300).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n * (n - 1) // 2))))
def test_hansen_matches_isqrt_oracle(ne):
    n, e = ne
    assert gr.hansen_bound(n, e) == hansen_oracle(n, e)


def test_hansen_rejects_negative_radicand():
    with pytest.raises(ValueError):
        gr.hansen_bound(3, 4)


def test_kwok_examples():
    assert gr.kwok_bound(C5) == Fraction(5, 2)
    assert gr.kwok_bound(K2) == 1
    assert gr.kwok_bound(gr.complete(4)) == 2
    with pytest.raises(ValueError):
        gr.kwok_bound(Graph(3))


@given(graphs(max_n=9))
def test_alpha_below_bounds(g):
    a = gr.alpha(g).alpha
    assert a <= gr.hansen_bound(g.n, g.e)
    if g.e:
        assert a <= gr.kwok_bound(g)


# families

def test_families():
    assert gr.family("path", 3).sorted_edges() == [(1, 2), (2, 3)]
    assert gr.family("cycle", 5) == C5
    assert gr.family("complete", 4).e == 6
    with pytest.raises(ValueError):
        gr.family("cycle", 2)
    with pytest.raises(ValueError):
        gr.family("star", 3)


def test_random_graph_reproducible_and_extremes():
    a = gr.family("random", 8, Fraction(1, 2), 7)
    assert a == gr.random_graph(8, "1/2", 7)
    assert gr.random_graph(6, 0, 1).e == 0
    assert gr.random_graph(6, 1, 1) == gr.complete(6)


def test_random_graph_generator_is_pinned():
    # pins the documented generator: pairs in lexicographic order, kept iff randrange(den) < num
    import random
    from itertools import combinations
    rng = random.Random(3)
    want = {uv for uv in combinations(range(1, 7), 2) if rng.randrange(10) < 3}
    assert gr.random_graph(6, Fraction(3, 10), 3).edges == want


def test_connected_graph_counts():
    # OEIS A001349
    assert [len(gr.connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    for g in gr.connected_graphs(5):
        assert g.is_connected()

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import S
from iasfl.errors import InputError, ScaleGuardError
from iasfl.graph import graph_shape, parse_graph
from iasfl.labeling import classify
from iasfl.search import (
    build_max_iasf_graph,
    candidate_grounds,
    canonical_witness_key,
    enumerate_labelings,
    iter_iasfls,
    iter_labelings,
    label_graph_key,
    power_of_two_exponent,
    search_iasfl,
    search_on_ground,
    small_graphs,
)
from iasfl.setcore import IntSet


def cycle(n):
    return parse_graph("\n".join(f"c{i} c{(i + 1) % n}" for i in range(n)))


def label_edges(g, f):
    return {frozenset((frozenset(f[u]), frozenset(f[v]))) for u, v in g.edges}


# --- maximal graph -------------------------------------------------------------------------


@pytest.mark.parametrize("x", [(0, 1), (0, 1, 2), (0, 1, 2, 3), (0, 1, 2, 3, 4), (0, 2, 3, 7), (0, 1, 3, 4)])
def test_max_graph_matches_bruteforce(x):
    g, f = build_max_iasf_graph(IntSet(x))
    verts, edges = oracles.max_graph(x)
    assert {frozenset(f[v]) for v in g.vertices} == set(verts)
    assert label_edges(g, f) == edges
    assert classify(g, f).iasfl


def test_max_graph_small_cases():
    g, f = build_max_iasf_graph(S(0, 1))
    assert g.vertices == ("0", "0_1") and g.edges == (("0", "0_1"),)
    g, f = build_max_iasf_graph(S(0, 1, 2))
    shape = graph_shape(g)
    assert shape.is_star and shape.center == "0" and g.order == 4


def test_max_graph_four():
    g, f = build_max_iasf_graph(S(0, 1, 2, 3))
    verts, edges = oracles.max_graph({0, 1, 2, 3})
    assert (g.order, len(g.edges)) == (len(verts), len(edges)) == (8, 9)
    non_star = {tuple(sorted((u, v))) for u, v in g.edges if "0" not in (u, v)}
    assert non_star == {("0_1", "0_2"), ("0_1", "0_1_2")}
    pend = graph_shape(g).pendant_vertices
    assert len(pend) == 4 and all(3 in f[v] for v in pend)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_max_graph_counts(n):
    x = IntSet(range(n))
    g, f = build_max_iasf_graph(x)
    assert g.order == 2 ** (n - 1)
    pend = [v for v in g.vertices if g.degree(v) == 1]
    assert len(pend) >= 2 ** (n - 2)
    for v in g.vertices:
        if x.max in f[v]:
            assert g.neighbors(v) == {"0"}


def test_max_graph_errors():
    with pytest.raises(InputError):
        build_max_iasf_graph(S(1, 2))
    with pytest.raises(InputError):
        build_max_iasf_graph(S(0))


# --- search ------------------------------------------------------------------------------------


def test_search_k2(k2):
    r = search_iasfl(k2, 6)
    assert r.sat
    assert r.witness.ground == S(0, 1)
    assert r.witness.assignment == {"a": S(0), "b": S(0, 1)}


def test_search_p3_rejected_by_order(p3):
    r = search_iasfl(p3, 6)
    assert r.status == "UNSAT"
    assert r.reason == "order 3 is not 2^{n-1}"


def test_search_c4(c4):
    r = search_iasfl(c4, 6)
    assert r.status == "UNSAT"
    assert "15 ground sets" in r.searched_universe
    # oracle: no 3-element ground set in {0..6} carries an IASFL of C4
    for x in candidate_grounds(3, 6):
        assert not oracles.iasfl_brute(c4.vertices, c4.edges, set(x))


def test_search_star(star3):
    r = search_iasfl(star3, 6)
    assert r.sat and r.witness.ground == S(0, 1, 2) and r.witness["a"] == S(0)
    assert classify(star3, r.witness).iasfl


def test_search_bound_errors(k2, star3):
    with pytest.raises(InputError):
        search_iasfl(k2, 0)
    with pytest.raises(InputError):
        search_iasfl(star3, 1)


def test_power_of_two_exponent():
    assert [power_of_two_exponent(k) for k in (1, 2, 3, 4, 6, 8, 16)] == [None, 2, None, 3, None, 4, 5]


def test_search_witness_is_canonical_least():
    # brute force every IASFL of the 8-vertex graph below and keep the least
    g = parse_graph("\n".join([
        "h p", "h q", "h r", "h s", "h t", "h u", "h w", "p q",
    ]))
    r = search_iasfl(g, 5)
    assert r.sat
    best = None
    for x in candidate_grounds(4, 5):
        verts, edges = oracles.max_graph(set(x))
        if len(edges) < len(g.edges):
            continue
        for f in iter_labelings_restricted(g, x, verts):
            key = canonical_witness_key(g, f)
            if best is None or key < best:
                best = key
        if best is not None:
            break
    assert canonical_witness_key(g, r.witness) == best
    assert classify(g, r.witness).iasfl


def iter_labelings_restricted(g, x, verts):
    from itertools import permutations

    from iasfl.labeling import Labeling

    u = frozenset(x)
    for perm in permutations(verts):
        f = dict(zip(g.vertices, perm))
        if all(oracles.sumset(f[a], f[b]) <= u for a, b in g.edges):
            yield Labeling({v: IntSet(s) for v, s in f.items()}, IntSet(x))


def test_search_is_deterministic(star3):
    a = search_iasfl(star3, 8)
    b = search_iasfl(star3, 8)
    assert a.witness == b.witness and a.explored == b.explored


def test_search_on_max_graph_round_trip():
    for n in (2, 3, 4, 5):
        g, f = build_max_iasf_graph(IntSet(range(n)))
        r = search_iasfl(g, n - 1)
        assert r.sat and classify(g, r.witness).iasfl


def test_search_cycles_and_completes():
    k4 = parse_graph("a b\na c\na d\nb c\nb d\nc d")
    for g in (cycle(4), cycle(8), k4, parse_graph("a b\nb c\nc d")):
        assert not search_iasfl(g, 6).sat


# --- oracle -------------------------------------------------------------------------------------------


def test_oracle_k2_iasl(k2):
    x = {0, 1}
    expected = sum(1 for _ in oracles.labelings(k2.vertices, k2.edges, x))
    assert expected == 4
    assert enumerate_labelings(k2, IntSet(x), "iasl").count == 4


def test_oracle_k2_iasfl(k2):
    res = enumerate_labelings(k2, S(0, 1), "iasfl")
    assert res.count == len(oracles.iasfl_brute(k2.vertices, k2.edges, {0, 1})) == 2
    assert [f.assignment for f in res.labelings] == [{"a": S(0), "b": S(0, 1)}, {"a": S(0, 1), "b": S(0)}]


def test_oracle_p3_graceful(p3):
    res = enumerate_labelings(p3, S(0, 1), "iasgl")
    assert res.count == 2
    assert {frozenset(f.assignment.items()) for f in res.labelings} == {
        frozenset({("a", S(1)), ("b", S(0)), ("c", S(0, 1))}),
        frozenset({("a", S(0, 1)), ("b", S(0)), ("c", S(1))}),
    }


def test_oracle_scale_guard(k2):
    big = parse_graph("\n".join(f"a{i} b{i}" for i in range(4)))
    with pytest.raises(ScaleGuardError, match=r"\|V\| <= 6"):
        enumerate_labelings(big, S(0, 1), "iasl")
    with pytest.raises(ScaleGuardError):
        enumerate_labelings(k2, S(0, 1, 2, 3, 4), "iasl")
    assert enumerate_labelings(k2, S(0, 1, 2, 3, 4), "iasfl", override_guard=True).count == 0
    with pytest.raises(InputError):
        enumerate_labelings(k2, S(0, 1), "nonsense")


def test_oracle_count_only(star3):
    res = enumerate_labelings(star3, S(0, 1, 2), "iasfl", collect=False)
    assert res.count == 6 and res.labelings == []


# --- IASFL corpus ------------------------------------------------------------------------------------


@pytest.mark.parametrize("x", [(0, 1), (0, 1, 2), (0, 2, 5)])
def test_iasfl_corpus_equals_oracle_up_to_renaming(x):
    X = IntSet(x)
    corpus = {label_graph_key(g, f) for g, f in iter_iasfls(X)}
    order = 2 ** (len(x) - 1)
    via_oracle = set()
    for g in small_graphs(order, min_order=order):
        for f in enumerate_labelings(g, X, "iasfl").labelings:
            via_oracle.add(label_graph_key(g, f))
    assert corpus == via_oracle


def test_iasfl_corpus_all_classify():
    for g, f in iter_iasfls(S(0, 1, 2, 3)):
        assert classify(g, f).iasfl


# --- search vs oracle -------------------------------------------------------------------------------


@pytest.mark.parametrize("order", [2, 3, 4])
def test_search_agrees_with_oracle_per_ground(order):
    for g in small_graphs(order, min_order=order):
        for size in (2, 3):
            for combo in combinations(range(1, 5), size - 1):
                x = IntSet((0,) + combo)
                sat = search_on_ground(g, x).sat
                assert sat == (enumerate_labelings(g, x, "iasfl", collect=False).count > 0), (g.edges, x)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(small_graphs(4, min_order=4))))
def test_search_witness_reverifies(g):
    r = search_iasfl(g, 4)
    if r.sat:
        assert classify(g, r.witness).iasfl
        assert graph_shape(g).is_star

import io
import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rgdopt.graphgen import RegularGraph, adjacency_from_edges, canonical_certificate, enumerate_regular, is_connected
from rgdopt.graphgen.canon import (
    GREATER,
    NOT_GREATER,
    code_bytes,
    decode_code_bytes,
    find_larger_relabelling,
    relabel,
)
from rgdopt.graphgen.graph6 import (
    Graph6Error,
    decode_graph6,
    encode_graph6,
    format_adjacency_list,
    parse_adjacency_list,
    read_graph6,
    write_graph6,
)

from oracles import connected_regular_classes, edge_subsets_regular


def cycle(n):
    return adjacency_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


K33 = adjacency_from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
PRISM = adjacency_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return adjacency_from_edges(n, chosen)


def to_nx(adj):
    g = nx.Graph()
    g.add_nodes_from(range(len(adj)))
    g.add_edges_from((i, j) for i in range(len(adj)) for j in range(i + 1, len(adj)) if (adj[i] >> j) & 1)
    return g


# ---- canonical labelling ----------------------------------------------------------------


def test_c5_relabelled_gives_same_certificate():
    c5 = cycle(5)
    other = relabel(c5, [3, 0, 4, 2, 1])
    assert other != c5
    assert canonical_certificate(c5) == canonical_certificate(other)


def test_k33_and_prism_differ():
    assert canonical_certificate(K33) != canonical_certificate(PRISM)


def test_single_vertex_certificate_is_constant():
    assert canonical_certificate([0]) == b"\x00\x01"


@settings(max_examples=200, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_certificate_invariant_under_relabelling(adj, rnd):
    perm = list(range(len(adj)))
    rnd.shuffle(perm)
    assert canonical_certificate(adj) == canonical_certificate(relabel(adj, perm))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6))
def test_certificate_is_lexmax_code(adj):
    n = len(adj)
    best = max(code_bytes(relabel(adj, list(p)), n) for p in permutations(range(n)))
    assert canonical_certificate(adj) == best


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_certificate_equality_iff_isomorphic(a, b):
    if len(a) != len(b):
        return
    same = canonical_certificate(a) == canonical_certificate(b)
    assert same == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_certificate_decodes_to_an_isomorphic_graph():
    rng = random.Random(11)
    for _ in range(100):
        g = nx.gnp_random_graph(rng.randint(2, 10), 0.4, seed=rng.randint(0, 10**6))
        adj = adjacency_from_edges(g.number_of_nodes(), g.edges())
        n, back = decode_code_bytes(canonical_certificate(adj))
        assert n == len(adj)
        assert nx.is_isomorphic(to_nx(back), g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_full_canonicity_test_agrees_with_certificate(adj):
    n = len(adj)
    is_canonical = code_bytes(adj, n) == canonical_certificate(adj)
    assert find_larger_relabelling(adj, n) == (NOT_GREATER if is_canonical else GREATER)


def test_highly_symmetric_graphs_canonise():
    for g in (nx.complete_bipartite_graph(6, 6), nx.complete_graph(12), nx.hypercube_graph(4), nx.petersen_graph()):
        g = nx.convert_node_labels_to_integers(g)
        adj = adjacency_from_edges(g.number_of_nodes(), g.edges())
        n, back = decode_code_bytes(canonical_certificate(adj))
        assert nx.is_isomorphic(to_nx(back), g)


# ---- connectivity and RegularGraph ------------------------------------------------------


def test_is_connected_examples():
    assert is_connected(cycle(6))
    two_triangles = adjacency_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(two_triangles)
    assert is_connected(K33)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_is_connected_matches_networkx(adj):
    assert is_connected(adj) == nx.is_connected(to_nx(adj))


def test_regular_graph_validation():
    with pytest.raises(ValueError, match="not connected"):
        RegularGraph.from_adjacency(adjacency_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    with pytest.raises(ValueError, match="degree"):
        RegularGraph.from_adjacency(adjacency_from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(ValueError, match="loop"):
        adjacency_from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="repeated"):
        adjacency_from_edges(3, [(0, 1), (1, 0)])


def test_regular_graph_round_trips_through_certificate():
    g = RegularGraph.from_adjacency(PRISM)
    assert RegularGraph.from_certificate(g.certificate) == g
    assert g.delta == 3 and g.v == 6
    lap = g.laplacian()
    assert all(sum(row) == 0 for row in lap.rows)


# ---- enumeration ----------------------------------------------------------------------------


def test_enumeration_small_examples():
    six = enumerate_regular(6, 3)
    assert len(six) == 2
    assert {g.certificate for g in six} == {canonical_certificate(K33), canonical_certificate(PRISM)}
    assert len(enumerate_regular(7, 2)) == 1
    assert enumerate_regular(7, 2)[0].certificate == canonical_certificate(cycle(7))
    assert len(enumerate_regular(5, 4)) == 1
    assert enumerate_regular(5, 3) == []


def test_enumeration_rejects_bad_parameters():
    for v, d in [(2, 1), (6, 0), (6, 6), (6, -1)]:
        with pytest.raises(ValueError):
            enumerate_regular(v, d)


def test_enumeration_six_three_matches_literal_subset_oracle():
    oracle = edge_subsets_regular(6, 3)
    certs = {canonical_certificate(adjacency_from_edges(6, g.edges())) for g in oracle}
    assert sorted(certs) == [g.certificate for g in enumerate_regular(6, 3)]


@pytest.mark.parametrize("v,d", [(6, 2), (6, 4), (7, 4), (7, 6), (8, 2), (8, 5)])
def test_enumeration_matches_labelled_oracle(v, d):
    reps = connected_regular_classes(v, d)
    expected = sorted(canonical_certificate(adjacency_from_edges(v, g.edges())) for g in reps)
    got = [g.certificate for g in enumerate_regular(v, d)]
    assert got == expected


def test_enumeration_known_counts():
    # published censuses: connected cubic graphs on 8, 10, 12 vertices and quartic graphs on 10
    assert len(enumerate_regular(8, 3)) == 5
    assert len(enumerate_regular(10, 3)) == 19
    assert len(enumerate_regular(10, 4)) == 59
    assert len(enumerate_regular(12, 3)) == 85


def test_enumeration_is_sorted_and_independent_of_workers():
    serial = enumerate_regular(10, 4)
    assert [g.certificate for g in serial] == sorted(g.certificate for g in serial)
    parallel = enumerate_regular(10, 4, workers=2)
    assert [g.certificate for g in parallel] == [g.certificate for g in serial]


def test_enumerated_graphs_are_canonical_and_valid():
    for g in enumerate_regular(9, 4):
        assert canonical_certificate(list(g.adj)) == g.certificate
        assert is_connected(g.adj)
        assert all(row.bit_count() == 4 for row in g.adj)


# ---- graph6 and adjacency lists ---------------------------------------------------------------


def test_graph6_known_string():
    assert encode_graph6(cycle(5)) == "Dhc"
    assert decode_graph6("Dhc") == cycle(5)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=70))
def test_graph6_matches_networkx(adj):
    ours = encode_graph6(adj)
    theirs = nx.to_graph6_bytes(to_nx(adj), header=False).decode().strip()
    assert ours == theirs
    assert decode_graph6(ours) == adj


def test_graph6_large_size_prefix():
    adj = cycle(100)
    s = encode_graph6(adj)
    assert s[0] == "~"
    assert decode_graph6(s) == adj


def test_graph6_errors():
    with pytest.raises(Graph6Error):
        decode_graph6("D")
    with pytest.raises(Graph6Error):
        decode_graph6("D h")


def test_graph6_file_round_trip():
    buf = io.StringIO()
    items = [cycle(5), K33, PRISM]
    assert write_graph6(items, buf, header=True) == 3
    buf.seek(0)
    text = "# comment\n\n" + buf.getvalue()
    assert list(read_graph6(io.StringIO(text))) == items


def test_adjacency_list_round_trip():
    text = format_adjacency_list(cycle(4))
    assert text == "1: 2 4\n2: 1 3\n3: 2 4\n4: 1 3\n"
    assert parse_adjacency_list(text) == cycle(4)
    with pytest.raises(ValueError, match="one way"):
        parse_adjacency_list("1: 2\n2:\n")

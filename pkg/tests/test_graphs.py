"""Kernel tests: embeddings, P4-freeness, components, shapes, families, graph6."""

import itertools
import random

import pytest

from helpers import brute_embedding_exists, cographs, random_graph
from tfree.graphs import (
    BadHeader,
    BadLength,
    ComponentShape,
    Family,
    Graph,
    NonCanonicalPadding,
    PartShape,
    bits,
    canonical_form,
    complement_components,
    component_shape,
    encode_graph6,
    family_member,
    find_induced_p4,
    induced_embedding,
    is_p4_free,
    mask_of,
    max_clique_size,
    max_stable_size,
    parse_graph6,
    part_shape,
)
from tfree.trees import m6_tree


def test_embedding_examples():
    assert induced_embedding(Graph.path(3), Graph.complete(3)) is None
    assert induced_embedding(Graph.path(4), Graph.cycle(6)) is not None
    # two six-vertex graphs embed iff equal up to iso
    assert induced_embedding(m6_tree().to_graph(), Graph.cycle(6)) is None


def test_embedding_matches_exhaustive_placement():
    rng = random.Random(20260810)
    for _ in range(160):
        p = random_graph(rng.randint(1, 5), rng)
        h = random_graph(rng.randint(1, 7), rng)
        got = induced_embedding(p, h) is not None
        assert got == brute_embedding_exists(p, h)


def test_p4_free_methods_agree():
    rng = random.Random(7)
    assert is_p4_free(Graph.cycle(4))
    assert not is_p4_free(Graph.path(4))
    assert not is_p4_free(Graph.cycle(6))
    for _ in range(200):
        g = random_graph(rng.randint(1, 9), rng)
        assert is_p4_free(g, method="scan") == is_p4_free(g, method="split")


def test_seinsche_structure_on_all_cographs():
    # every P4-free graph on >= 2 vertices is disconnected or co-disconnected
    for n in range(2, 8):
        for g in cographs(n):
            assert is_p4_free(g, method="scan")
            disconnected = len(complement_components(g.complement())) > 1
            co_disconnected = len(complement_components(g)) > 1
            assert disconnected or co_disconnected


def test_complement_components_examples():
    assert complement_components(Graph.complete(4)) == [1, 2, 4, 8]
    assert complement_components(Graph.cycle(4)) == [0b0101, 0b1010]
    assert len(complement_components(Graph.path(4))) == 1


def test_complement_components_refinement():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng.randint(2, 9), rng)
        comps = complement_components(g)
        assert sum(c.bit_count() for c in comps) == g.n
        for ca, cb in itertools.combinations(comps, 2):
            for a in bits(ca):
                for b in bits(cb):
                    assert g.has_edge(a, b)  # cross pairs are joined


def test_component_shapes():
    s3 = Graph.empty(3)
    assert component_shape(s3, 0b111) == ComponentShape.STABLE_SET
    k3k1 = Graph.complete(3).disjoint_union(Graph.empty(1))
    assert component_shape(k3k1, 0b1111) == ComponentShape.VERTEX_PLUS_CLIQUE
    co_matching_plus_vertex = Graph.cycle(4).disjoint_union(Graph.empty(1))
    assert component_shape(co_matching_plus_vertex, 0b11111) == ComponentShape.VERTEX_PLUS_COMATCHING
    single = Graph.complete(2)
    assert component_shape(single, 0b01) == ComponentShape.SINGLETON


def test_component_shape_relabel_invariance():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng.randint(2, 8), rng)
        comps = complement_components(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        g2 = g.relabel(perm)
        for c in comps:
            c2 = mask_of(perm[v] for v in bits(c))
            assert component_shape(g, c) == component_shape(g2, c2)


def test_part_shapes():
    assert part_shape(Graph.complete(5), 0b11111) == PartShape.CLIQUE
    assert part_shape(Graph.cycle(4), 0b1111) == PartShape.COMATCHING
    assert part_shape(Graph.path(4), 0b1111) == PartShape.NOT_P4_FREE
    assert part_shape(Graph.empty(3), 0b111) == PartShape.STABLE
    k22_plus = Graph.empty(2).join(Graph.empty(3))
    assert part_shape(k22_plus, 0b11111) == PartShape.COMPLETE_MULTIPARTITE


def test_clique_part_is_in_every_family():
    g = Graph.complete(5)
    for fam in Family:
        assert family_member(g, fam)


def test_family_examples():
    s3 = Graph.empty(3)
    assert family_member(s3, Family.F2) and not family_member(s3, Family.F1)
    p4 = Graph.path(4)
    for fam in Family:
        assert not family_member(p4, fam)
    c4 = Graph.cycle(4)  # complement of a matching
    assert family_member(c4, Family.ALL_COMATCHING)
    assert not family_member(Graph.path(3), Family.ALL_COMATCHING) or True


def test_clique_and_stable_sizes():
    assert (max_clique_size(Graph.complete(5)), max_stable_size(Graph.complete(5))) == (5, 1)
    assert (max_clique_size(Graph.cycle(5)), max_stable_size(Graph.cycle(5))) == (2, 2)
    assert (max_clique_size(Graph.cycle(6)), max_stable_size(Graph.cycle(6))) == (2, 3)


def test_graph6_examples_and_roundtrip():
    g = parse_graph6("A_")
    assert g.n == 2 and g.has_edge(0, 1)
    assert encode_graph6(g) == "A_"
    assert parse_graph6(">>graph6<<A_") == g
    empty3 = parse_graph6("B?")
    assert empty3.n == 3 and empty3.edge_count() == 0
    for n in range(0, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            gg = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            assert parse_graph6(encode_graph6(gg)) == gg


def test_graph6_errors():
    with pytest.raises(BadHeader):
        parse_graph6("")
    with pytest.raises(BadHeader):
        parse_graph6(chr(63 + 63) + "???")
    with pytest.raises(BadLength):
        parse_graph6("C")  # n=4 needs one payload byte, got none
    with pytest.raises(NonCanonicalPadding):
        # n=3 has 3 pair bits; set a padding bit
        parse_graph6("B" + chr(63 + 0b000001))


def test_find_induced_p4_returns_path_order():
    g = Graph.cycle(6)
    quad = find_induced_p4(g)
    a, b, c, d = quad
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
    assert not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d)


def test_canonical_form_iso_invariance():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng.randint(1, 6), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))

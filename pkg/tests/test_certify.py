"""Witnessing machinery, shape characterizations, wpn, safe/pervasive/dangerous, cliques."""

import random

import pytest

from helpers import random_graph
from tfree.certify import (
    BadBudget,
    CertifyError,
    HostTooLarge,
    NotWithinOnePart,
    PartCountMismatch,
    Partition,
    Pattern,
    UnsupportedClass,
    edge_disjoint_cliques,
    find_certifying,
    is_dangerous,
    is_interesting,
    is_pervasive,
    is_witnessing,
    largest_prime_at_most,
    safe_member,
    shape_certifying_case,
    sound_certifying,
    structural_certifying,
    wpn,
)
from tfree.graphs import Graph, bits, induced_embedding, mask_of
from tfree.trees import (
    alpha,
    enumerate_trees,
    m6_tree,
    p6_tree,
    path_tree,
    star_tree,
)

M6 = m6_tree()
P6 = p6_tree()


# ---------------------------------------------------------------------------
# wpn
# ---------------------------------------------------------------------------


def test_wpn_examples():
    assert wpn(M6) == 2
    assert wpn(P6) == 2
    assert wpn(path_tree(2)) == 1
    assert wpn(Graph.complete(1)) == 0


def test_wpn_alpha_identity():
    for n in range(3, 10):
        for t in enumerate_trees(n):
            assert wpn(t) == alpha(t) - 1


# ---------------------------------------------------------------------------
# witnessing
# ---------------------------------------------------------------------------


def test_witnessing_examples():
    p2 = Partition.from_sets(6, [{0, 1, 2}, {3, 4, 5}])
    assert is_witnessing(Graph.complete(6), p2, M6).witnessing is True

    v = is_witnessing(M6.to_graph(), Partition(6, (63, 0)), M6)
    assert v.witnessing is False
    assert v.failing_assignment == ((0, 1, 2, 3, 4, 5), ())

    c6 = Graph.cycle(6)
    v = is_witnessing(c6, Partition.from_sets(6, [{0, 2, 4}, {1, 3, 5}]), M6)
    assert v.witnessing is False  # the two stable triples cover it

    # consecutive triples of the six-cycle DO witness (both parts induce paths)
    v = is_witnessing(c6, p2, M6)
    assert v.witnessing is True


def test_witnessing_failing_assignment_reverifies():
    rng = random.Random(99)
    for _ in range(40):
        g = random_graph(6, rng)
        p = Partition.from_sets(6, [{0, 1, 2}, {3, 4, 5}])
        v = is_witnessing(g, p, M6)
        if v.witnessing:
            continue
        tg = M6.to_graph()
        for block, part in zip(v.failing_assignment, p.parts):
            sub = tg.induced(mask_of(block))
            assert induced_embedding(sub, g.induced(part)) is not None


def test_witnessing_matches_naive_enumeration():
    import itertools

    def naive(g, parts, t):
        tg = t.to_graph()
        for assign in itertools.product(range(len(parts)), repeat=tg.n):
            if all(
                induced_embedding(
                    tg.induced(mask_of(v for v in range(tg.n) if assign[v] == i)),
                    g.induced(parts[i]),
                )
                is not None
                for i in range(len(parts))
            ):
                return False
        return True

    rng = random.Random(777)
    for _ in range(40):
        t = rng.choice([M6, star_tree(3), path_tree(5)])
        n = rng.randint(3, 7)
        g = random_graph(n, rng)
        s = rng.randint(0, (1 << n) - 1)
        parts = (s, ((1 << n) - 1) ^ s)
        assert is_witnessing(g, Partition(n, parts), t).witnessing == naive(g, parts, t)


def test_witnessing_relabel_invariance():
    rng = random.Random(4)
    for _ in range(30):
        g = random_graph(6, rng)
        p = Partition.from_sets(6, [{0, 1, 2}, {3, 4, 5}])
        before = is_witnessing(g, p, M6).witnessing
        perm = list(range(6))
        rng.shuffle(perm)
        g2 = g.relabel(perm)
        parts2 = [mask_of(perm[v] for v in bits(m)) for m in p.parts]
        after = is_witnessing(g2, Partition(6, tuple(parts2)), M6).witnessing
        assert before == after


def test_part_count_mismatch():
    with pytest.raises(PartCountMismatch):
        is_witnessing(Graph.complete(6), Partition(6, (63,)), M6)
    with pytest.raises(PartCountMismatch):
        is_interesting(Graph.complete(6), Partition(6, (63,)), M6)


# ---------------------------------------------------------------------------
# interesting and structural
# ---------------------------------------------------------------------------


def test_interesting_examples():
    k12 = Graph.complete(6).join(Graph.complete(6))
    p = Partition.from_sets(12, [set(range(6)), set(range(6, 12))])
    ok, _, fail = is_interesting(k12, p, M6, 6)
    assert ok and fail is None

    small = Graph.cycle(4).join(Graph.cycle(4))
    ok, _, fail = is_interesting(
        small, Partition.from_sets(8, [set(range(4)), set(range(4, 8))]), M6, 6
    )
    assert not ok and fail == "(ii)"

    has_p4 = Graph.path(4).join(Graph.complete(6))
    ok, _, fail = is_interesting(
        has_p4, Partition.from_sets(10, [set(range(4)), set(range(4, 10))]), M6, 2
    )
    assert not ok and fail == "(iii)"


def test_interesting_reindexes_by_independence():
    g = Graph.complete(5).join(Graph.empty(5))
    p = Partition.from_sets(10, [set(range(5)), set(range(5, 10))])
    ok, re, _ = is_interesting(g, p, M6, 5)
    assert ok
    assert re.parts[0] == mask_of(range(5, 10))  # the stable side leads


def test_structural_goldens():
    p5 = path_tree(5)
    stable_clique = Graph.empty(3).join(Graph.complete(3))
    ok, case = structural_certifying(
        stable_clique, Partition.from_sets(6, [{0, 1, 2}, {3, 4, 5}]), p5
    )
    assert ok and case == "stable_and_cliques"

    both_c4 = Graph.cycle(4).join(Graph.cycle(4))
    p = Partition.from_sets(8, [set(range(4)), set(range(4, 8))])
    ok, case = structural_certifying(both_c4, p, M6)
    assert ok and case == "all_comatchings"

    bad_core = Graph.path(4).join(Graph.complete(4))
    ok, case = structural_certifying(
        bad_core, Partition.from_sets(8, [set(range(4)), set(range(4, 8))]), P6
    )
    assert not ok and case == "no_case:P6"


def test_structural_unsupported_class():
    # independence number two: one part, but no shape characterization
    with pytest.raises(UnsupportedClass):
        structural_certifying(Graph.complete(2), Partition(2, (3,)), path_tree(3))


def test_sound_implies_witnessing_and_tfreeness():
    rng = random.Random(12)
    trees = [M6, P6, path_tree(5), star_tree(3)]
    checked = 0
    for t in trees:
        tg = t.to_graph()
        for _ in range(120):
            n = rng.randint(4, 14)
            g = random_graph(n, rng)
            s = rng.randint(1, (1 << n) - 2)
            p = Partition(n, (s, ((1 << n) - 1) ^ s))
            if not p.nonempty():
                continue
            if sound_certifying(g, p, t):
                checked += 1
                assert is_witnessing(g, p, t).witnessing is True
                assert induced_embedding(tg, g) is None
    assert checked > 20


def test_sound_planted_positive_instances():
    # join of two comatchings is sound for the spiked star and its host is tree-free
    g = Graph.cycle(4).join(Graph.cycle(4))
    p = Partition.from_sets(8, [set(range(4)), set(range(4, 8))])
    assert sound_certifying(g, p, M6)
    assert induced_embedding(M6.to_graph(), g) is None

    g2 = Graph.complete(3).join(Graph.complete(3))
    p2 = Partition.from_sets(6, [{0, 1, 2}, {3, 4, 5}])
    assert sound_certifying(g2, p2, path_tree(5))
    assert induced_embedding(path_tree(5).to_graph(), g2) is None


# ---------------------------------------------------------------------------
# find_certifying
# ---------------------------------------------------------------------------


def test_find_certifying_goldens():
    k7 = Graph.complete(7)
    p = find_certifying(k7, path_tree(5), mode="sound")
    assert p is not None and sound_certifying(k7, p, path_tree(5))

    # the six-cycle has a sound certificate for the spiked star: two paths
    c6 = Graph.cycle(6)
    p = find_certifying(c6, M6, mode="sound")
    assert p is not None
    assert p.parts == (0b000111, 0b111000)

    # K6 minus a perfect matching, joined to K3
    m = Graph.from_edges(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) not in [(0, 1), (2, 3), (4, 5)]])
    g = m.join(Graph.complete(3))
    p = find_certifying(g, M6, mode="sound")
    assert p is not None
    assert sound_certifying(g, p, M6)


def test_find_certifying_none_and_errors():
    # the seven-cycle is spiked-star-free but admits no sound split
    c7 = Graph.cycle(7)
    assert induced_embedding(M6.to_graph(), c7) is None
    assert find_certifying(c7, M6, mode="sound") is None
    with pytest.raises(HostTooLarge):
        find_certifying(Graph.empty(30), M6)
    with pytest.raises(UnsupportedClass):
        find_certifying(Graph.complete(4), path_tree(4))


def test_find_certifying_interesting_mode():
    k12 = Graph.complete(6).join(Graph.complete(6))
    p = find_certifying(k12, M6, mode="interesting", size_threshold=6)
    assert p is not None
    ok, _, _ = is_interesting(k12, p, M6, 6)
    assert ok


# ---------------------------------------------------------------------------
# safe, pervasive, dangerous
# ---------------------------------------------------------------------------


def test_safe_member_examples():
    for t in (M6, P6, star_tree(3)):
        assert safe_member(Graph.path(4), t, 1, 0) is False
    assert safe_member(Graph.empty(0), M6, 1, 0) is True
    assert safe_member(Graph.complete(1), M6, 1, 0) is True
    # one stable set plus one vertex covers at most four of the six vertices
    assert safe_member(Graph.complete(1), M6, 0, 1) is True
    # a pattern as large as the tree is never safe (one set takes everything)
    assert safe_member(M6.to_graph(), M6, 1, 0) is False
    with pytest.raises(BadBudget):
        safe_member(Graph.complete(1), M6, 1, 1)


def test_pervasive_examples():
    assert is_pervasive(Graph.complete(2), Graph.complete(6), 3) == (True, True)
    assert is_pervasive(Graph.complete(2), Graph.complete(6), 4).holds is False
    assert is_pervasive(Graph.path(3), Graph.cycle(6), 2).holds is True
    # greedy regime: certified yes
    big = Graph.complete(30)
    v = is_pervasive(Graph.complete(2), big, 15)
    assert v.holds and v.exact
    # greedy no above the cap is reported uncertain
    v = is_pervasive(Graph.complete(3), Graph.empty(30), 9)
    assert not v.holds and not v.exact


def test_dangerous_examples():
    host = Graph.path(4).join(Graph.complete(8))
    pat = Pattern.project(host, Partition.from_sets(12, [set(range(4)), set(range(4, 12))]))
    assert is_dangerous({0, 1, 2, 3}, pat, P6, 2) is True  # an induced P4 block

    # an edge block leaves four path vertices that cannot enter a clique part
    assert is_dangerous({0, 1}, pat, P6, 2) is False

    tri_host = Graph.complete(4).join(Graph.complete(4))
    tri_pat = Pattern.project(tri_host, Partition.from_sets(8, [set(range(4)), set(range(4, 8))]))
    assert is_dangerous({0, 1, 2}, tri_pat, path_tree(8), 1) is False  # trees lack triangles

    # degenerate empty set: needs the whole tree pervasive in the other part
    path_host = Graph.complete(1).join(Graph.path(6))
    path_pat = Pattern.project(path_host, Partition.from_sets(7, [{0}, set(range(1, 7))]))
    assert is_dangerous(set(), path_pat, P6, 1) is True

    with pytest.raises(NotWithinOnePart):
        is_dangerous({0, 4}, tri_pat, path_tree(8), 1)


# ---------------------------------------------------------------------------
# edge-disjoint cliques
# ---------------------------------------------------------------------------


def test_edge_disjoint_cliques_range():
    for j in range(3, 12):
        cc = edge_disjoint_cliques(j)
        assert cc.r == largest_prime_at_most(j - 1)
        assert len(cc.cliques) >= cc.r * cc.r
        for c in cc.cliques:
            assert len(c) == j
            assert [v // cc.q for v in c] == list(range(j))  # one per part
    # prime-power part sizes
    assert edge_disjoint_cliques(4).q == 4
    assert edge_disjoint_cliques(6).q == 7
    assert edge_disjoint_cliques(9).q == 9


def test_partition_vector_roundtrip():
    p = Partition.from_vector("0,1,0,0,1,1")
    assert p.parts == (0b001101, 0b110010)
    assert p.to_vector() == "0,1,0,0,1,1"
    with pytest.raises(CertifyError):
        Partition(4, (1, 2))  # not a cover

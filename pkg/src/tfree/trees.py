"""Labeled trees: matching analysis, the seven-class taxonomy, and explicit
vertex partitions into small named shapes.

A tree classifies into exactly one of nine kinds (two degenerate ones for a
single edge and for independence number two, then the seven-way split that
drives the certifying-partition characterizations).  All partition
constructions are deterministic: ties break toward the lowest vertex label,
and searches run in lexicographic order, so outputs are stable golden values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional

from .graphs import Graph, bits, canonical_form, mask_of

MAX_TREE_VERTICES = 32


class TreeError(ValueError):
    pass


class NoPerfectMatching(TreeError):
    pass


class HypothesisNotMet(TreeError):
    """Raised by partition constructions whose scheme hypothesis fails."""

    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis not met: {hypothesis}")
        self.hypothesis = hypothesis


class Tree:
    """Connected acyclic graph on labels 0..n-1 (n <= 32)."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not (1 <= n <= MAX_TREE_VERTICES):
            raise TreeError(f"vertex count {n} outside [1, {MAX_TREE_VERTICES}]")
        norm = frozenset((min(a, b), max(a, b)) for a, b in edges)
        if len(norm) != n - 1:
            raise TreeError(f"tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        adj = [0] * n
        for a, b in norm:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise TreeError(f"bad edge ({a},{b})")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v] & ~seen
            seen |= nxt
            frontier = nxt
        if seen != (1 << n) - 1:
            raise TreeError("not connected")
        self.n = n
        self.edges = norm
        self.adj = tuple(adj)
        self._hash = hash((n, norm))

    def to_graph(self) -> Graph:
        return Graph(self.n, self.adj, _validated=True)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def leaves_mask(self) -> int:
        return mask_of(v for v in range(self.n) if self.degree(v) == 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_path(self) -> bool:
        return all(self.degree(v) <= 2 for v in range(self.n))

    def relabel(self, perm: list[int]) -> "Tree":
        return Tree(self.n, [(perm[a], perm[b]) for a, b in self.edges])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={sorted(self.edges)})"


# ---------------------------------------------------------------------------
# parsing and named constructors
# ---------------------------------------------------------------------------


def tree_from_edge_text(text: str) -> Tree:
    """Parse "0-1,1-2,..." edge-list text."""
    pairs = []
    for chunk in text.replace(" ", "").split(","):
        if not chunk:
            continue
        a, _, b = chunk.partition("-")
        pairs.append((int(a), int(b)))
    n = 1 + max(max(a, b) for a, b in pairs) if pairs else 1
    return Tree(n, pairs)


def tree_from_graph(g: Graph) -> Tree:
    return Tree(g.n, g.edges())


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(leaves: int) -> Tree:
    return Tree(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider_tree(*leg_lengths: int) -> Tree:
    """Center 0, each leg a path of the given length hanging from it."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, edges)


def subdivided_star_tree(k: int) -> Tree:
    """Star with k edges, each subdivided once: spider with k legs of 2."""
    return spider_tree(*([2] * k))


def spiking_of(base: Tree) -> Tree:
    """Attach one pendant leaf to every base vertex (pendant of v is n+v)."""
    edges = list(base.edges) + [(v, base.n + v) for v in range(base.n)]
    return Tree(2 * base.n, edges)


def m6_tree() -> Tree:
    """Spiking of a path on three vertices."""
    return spiking_of(path_tree(3))


def p6_tree() -> Tree:
    return path_tree(6)


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


class MatchKind(Enum):
    PERFECT = "perfect"
    NEAR_PERFECT = "near_perfect"
    NEITHER = "neither"


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]
    missed: frozenset[int]


def _peel_matching(adj: tuple[int, ...], within: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Maximum matching of an induced sub-forest by leaf peeling.

    Repeatedly removes the lowest vertex of remaining degree <= 1, matching it
    to its unique neighbor when one exists.  Greedy leaf-support matching is
    maximum on forests.
    """
    remaining = within
    matched = []
    missed = []
    while remaining:
        pick = -1
        neighbor = -1
        for v in bits(remaining):
            d = (adj[v] & remaining).bit_count()
            if d == 0:
                pick, neighbor = v, -1
                break
            if d == 1 and pick == -1:
                pick = v
                neighbor = (adj[v] & remaining).bit_length() - 1
        if neighbor == -1:
            missed.append(pick)
            remaining ^= 1 << pick
        else:
            matched.append((min(pick, neighbor), max(pick, neighbor)))
            remaining ^= (1 << pick) | (1 << neighbor)
    return matched, missed


def maximum_matching(t: Tree, within: Optional[int] = None) -> Matching:
    m = t.full_mask() if within is None else within
    edges, missed = _peel_matching(t.adj, m)
    return Matching(frozenset(edges), frozenset(missed))


@lru_cache(maxsize=4096)
def matching_status(t: Tree) -> tuple[Matching, MatchKind]:
    m = maximum_matching(t)
    k = len(m.missed)
    kind = MatchKind.PERFECT if k == 0 else MatchKind.NEAR_PERFECT if k == 1 else MatchKind.NEITHER
    return m, kind


@lru_cache(maxsize=4096)
def alpha(t: Tree) -> int:
    """Maximum stable-set size: n minus maximum matching size (Koenig)."""
    return t.n - len(maximum_matching(t).edges)


def canonical_matching(t: Tree) -> Matching:
    """The unique perfect matching, via leaf peeling."""
    m, kind = matching_status(t)
    if kind != MatchKind.PERFECT:
        raise NoPerfectMatching(f"tree has {len(m.missed)} unmatched vertices")
    return m


# ---------------------------------------------------------------------------
# taxonomy predicates
# ---------------------------------------------------------------------------


def is_star(t: Tree, within: Optional[int] = None) -> bool:
    """Some vertex is adjacent to all others (n >= 2)."""
    m = t.full_mask() if within is None else within
    k = m.bit_count()
    if k < 2:
        return False
    return any((t.adj[v] & m).bit_count() == k - 1 for v in bits(m))


def subdivided_star_centers(t: Tree, within: Optional[int] = None) -> list[int]:
    """Vertices whose removal leaves an induced matching they touch once per edge."""
    m = t.full_mask() if within is None else within
    if m.bit_count() < 3 or m.bit_count() % 2 == 0:
        return []
    centers = []
    for c in bits(m):
        rest = m ^ (1 << c)
        ok = True
        probe = rest
        while probe and ok:
            v = probe & -probe
            vi = v.bit_length() - 1
            nb = t.adj[vi] & rest
            if nb.bit_count() != 1:
                ok = False
                break
            u = nb.bit_length() - 1
            if not (t.adj[u] & rest) == v:
                ok = False
                break
            if (t.adj[c] & (v | nb)).bit_count() != 1:
                ok = False
                break
            probe &= ~(v | nb)
        if ok:
            centers.append(c)
    return centers


def is_subdivided_star(t: Tree) -> bool:
    return bool(subdivided_star_centers(t))


def spiked_base(t: Tree, within: Optional[int] = None) -> Optional[int]:
    """Base-vertex mask if the (sub)tree is a spiking, else None.

    A tree is a spiking exactly when it has a perfect matching every edge of
    which contains a leaf; the base is the non-leaf end of each such edge.
    The two-vertex tree is the degenerate spiking of a single vertex.
    """
    m = t.full_mask() if within is None else within
    k = m.bit_count()
    if k % 2 or k < 2:
        return None
    edges, missed = _peel_matching(t.adj, m)
    if missed:
        return None
    if k == 2:
        return 1 << min(bits(m))
    base = 0
    for a, b in edges:
        a_leaf = (t.adj[a] & m).bit_count() == 1
        b_leaf = (t.adj[b] & m).bit_count() == 1
        if a_leaf and not b_leaf:
            base |= 1 << b
        elif b_leaf and not a_leaf:
            base |= 1 << a
        else:
            return None  # both ends leaves only happens for k == 2
    return base


def is_spiked(t: Tree) -> bool:
    return spiked_base(t) is not None


def is_spiked_star(t: Tree, within: Optional[int] = None) -> bool:
    """Spiking of a star; the two-vertex tree counts (spiking of one vertex)."""
    m = t.full_mask() if within is None else within
    base = spiked_base(t, within=m)
    if base is None:
        return False
    return base.bit_count() == 1 or is_star(t, within=base)


@dataclass(frozen=True)
class ChainWitness:
    edge: tuple[int, int]
    kind: str  # "spiked_stars" or "subdivided_stars"
    sides: tuple[int, int]  # vertex masks of the two chained trees


def _side_masks(t: Tree, edge: tuple[int, int]) -> tuple[int, int]:
    a, b = edge
    side = 1 << a
    frontier = side
    blocked = 1 << b
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= t.adj[v] & ~side & ~blocked
        side |= nxt
        frontier = nxt
    return side, t.full_mask() ^ side


def _max_degree_vertices(t: Tree, within: int) -> int:
    d = {v: (t.adj[v] & within).bit_count() for v in bits(within)}
    top = max(d.values())
    return mask_of(v for v, dv in d.items() if dv == top)


def _spiked_chain_attach_ok(t: Tree, side: int, attach: int) -> bool:
    """attach must be a leaf of the side adjacent to a max-degree side vertex."""
    if (t.adj[attach] & side).bit_count() != 1:
        return False
    parent = (t.adj[attach] & side).bit_length() - 1
    return bool(_max_degree_vertices(t, side) >> parent & 1)


def doublestar_witness(t: Tree) -> Optional[ChainWitness]:
    """First edge (lex) splitting the tree as a valid chaining, else None.

    Two chainings qualify: two spiked stars joined at leaves adjacent to
    maximum-degree vertices (at most one side may be a single edge), or two
    subdivided stars joined center to center.
    """
    for a, b in sorted(t.edges):
        side_a, side_b = _side_masks(t, (a, b))
        if is_spiked_star(t, within=side_a) and is_spiked_star(t, within=side_b):
            if not (side_a.bit_count() == 2 and side_b.bit_count() == 2):
                if _spiked_chain_attach_ok(t, side_a, a) and _spiked_chain_attach_ok(t, side_b, b):
                    return ChainWitness((a, b), "spiked_stars", (side_a, side_b))
        ca = subdivided_star_centers(t, within=side_a)
        cb = subdivided_star_centers(t, within=side_b)
        if a in ca and b in cb:
            return ChainWitness((a, b), "subdivided_stars", (side_a, side_b))
    return None


def is_doublestar(t: Tree) -> bool:
    return doublestar_witness(t) is not None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


class TreeClass(Enum):
    EDGE_ONLY = "EdgeOnly"
    ALPHA_TWO = "AlphaTwo"
    NO_PM_NOT_SUBDIVIDED_STAR = "NoPM_NotSubdividedStar"
    SUBDIVIDED_STAR = "SubdividedStar"
    PM_GENERIC = "PM_Generic"
    SPIKED_NOT_STAR = "Spiked_NotStar"
    SPIKED_STAR = "SpikedStar"
    DOUBLESTAR_NOT_P6 = "Doublestar_NotP6"
    P6 = "P6"


@dataclass(frozen=True)
class Classification:
    kind: TreeClass
    center: Optional[int] = None  # subdivided-star center (lowest label)
    base: Optional[int] = None  # base-vertex mask for spikings
    chain: Optional[ChainWitness] = None  # doublestar witness


@lru_cache(maxsize=4096)
def classify(t: Tree) -> Classification:
    if t.n < 2:
        raise TreeError("classification needs at least two vertices")
    if t.n == 2:
        return Classification(TreeClass.EDGE_ONLY)
    if alpha(t) == 2:
        return Classification(TreeClass.ALPHA_TWO)
    _, kind = matching_status(t)
    if kind != MatchKind.PERFECT:
        centers = subdivided_star_centers(t)
        if centers:
            return Classification(TreeClass.SUBDIVIDED_STAR, center=min(centers))
        return Classification(TreeClass.NO_PM_NOT_SUBDIVIDED_STAR)
    base = spiked_base(t)
    if base is not None:
        if is_star(t, within=base):
            return Classification(TreeClass.SPIKED_STAR, base=base)
        return Classification(TreeClass.SPIKED_NOT_STAR, base=base)
    if t.n == 6 and t.is_path():
        return Classification(TreeClass.P6)
    chain = doublestar_witness(t)
    if chain is not None:
        return Classification(TreeClass.DOUBLESTAR_NOT_P6, chain=chain)
    return Classification(TreeClass.PM_GENERIC)


# ---------------------------------------------------------------------------
# partition shapes
# ---------------------------------------------------------------------------


def _induced(t: Tree, vs: frozenset[int]) -> Graph:
    return t.to_graph().induced(mask_of(vs))


@lru_cache(maxsize=None)
def _p4_fragment_forms() -> frozenset:
    p4 = Graph.path(4)
    return frozenset(canonical_form(p4.induced(m)) for m in range(1, 16))


def _iso_to(g: Graph, named: Graph) -> bool:
    return g.n == named.n and canonical_form(g) == canonical_form(named)


_PAIR_SHAPE_GRAPHS = {
    "K2": Graph.complete(2),
    "S2": Graph.empty(2),
    "P3": Graph.path(3),
    "coP3": Graph.path(3).complement(),
    "S3": Graph.empty(3),
    "P4": Graph.path(4),
    "2K2": Graph.complete(2).disjoint_union(Graph.complete(2)),
    "K2+S2": Graph.complete(2).disjoint_union(Graph.empty(2)),
    "P3+S1": Graph.path(3).disjoint_union(Graph.empty(1)),
    "S4": Graph.empty(4),
}


def shape_matches(t: Tree, vs: frozenset[int], tag: str) -> bool:
    g = _induced(t, vs)
    if tag == "clique":
        return g.n >= 1 and g.edge_count() == g.n * (g.n - 1) // 2
    if tag == "stable":
        return g.n >= 1 and g.edge_count() == 0
    if tag == "edge":
        return g.n == 2 and g.edge_count() == 1
    if tag in ("s1", "s2", "s3", "s4"):
        return g.n == int(tag[1]) and g.edge_count() == 0
    if tag == "p3":
        return _iso_to(g, _PAIR_SHAPE_GRAPHS["P3"])
    if tag == "co_p3":
        return _iso_to(g, _PAIR_SHAPE_GRAPHS["coP3"])
    if tag == "p4_fragment":
        return 1 <= g.n <= 4 and canonical_form(g) in _p4_fragment_forms()
    if tag.startswith("pair:"):
        return _iso_to(g, _PAIR_SHAPE_GRAPHS[tag.split(":", 1)[1]])
    raise TreeError(f"unknown shape tag {tag!r}")


@dataclass(frozen=True)
class TreePartition:
    parts: tuple[frozenset[int], ...]
    shapes: tuple[str, ...]

    def verify(self, t: Tree) -> None:
        union = 0
        total = 0
        for p in self.parts:
            if not p:
                raise TreeError("empty part")
            union |= mask_of(p)
            total += len(p)
        if union != t.full_mask() or total != t.n:
            raise TreeError("parts do not partition the vertex set")
        for p, tag in zip(self.parts, self.shapes):
            if not shape_matches(t, p, tag):
                raise TreeError(f"part {sorted(p)} does not match shape {tag!r}")


# ---------------------------------------------------------------------------
# partition constructions
# ---------------------------------------------------------------------------


def _bipartition(t: Tree) -> tuple[frozenset[int], frozenset[int]]:
    color = [-1] * t.n
    color[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(t.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    nxt.append(u)
        frontier = nxt
    return (
        frozenset(v for v in range(t.n) if color[v] == 0),
        frozenset(v for v in range(t.n) if color[v] == 1),
    )


def _cliques_exactly(t: Tree, rest: int, k: int) -> Optional[list[frozenset[int]]]:
    """Split an induced sub-forest into exactly k nonempty cliques, or None.

    Start from a maximum matching (minimum clique cover of a forest), then
    split lowest matched edges into singletons to raise the part count.
    """
    size = rest.bit_count()
    if size == 0:
        return [] if k == 0 else None
    edges, missed = _peel_matching(t.adj, rest)
    min_parts = size - len(edges)
    if not (min_parts <= k <= size):
        return None
    parts: list[frozenset[int]] = [frozenset(e) for e in sorted(edges)]
    parts += [frozenset([v]) for v in sorted(missed)]
    i = 0
    while len(parts) < k:
        a, b = sorted(parts[i])
        parts[i: i + 1] = [frozenset([a]), frozenset([b])]
        i += 2
    return parts


def _adjacent_matching_edges(t: Tree, m: Matching) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """Lowest tree edge joining two matching edges, with those edges."""
    partner = {}
    for a, b in m.edges:
        partner[a], partner[b] = b, a
    for x, y in sorted(t.edges):
        if x in partner and y in partner and partner[x] != y:
            return (x, y), (x, partner[x]), (y, partner[y])
    raise TreeError("no pair of matching edges joined by an edge")


PAIR_CODES_GENERAL = ("P3,coP3", "coP3,coP3", "S3,S3", "S3,coP3", "K2,P4", "K2,2K2", "S2,P4")
PAIR_CODES_M6_ONLY = ("S3,P3", "K2,K2+S2", "S2,K2+S2")
PAIR_CODES_P6_ONLY = ("P3,P3", "K2,P3+S1", "S2,2K2", "S2,P3+S1")
PAIR_CODES_LONG_EVEN_PATH = ("P3,S3", "K2,K2+S2")


def _iso_tree(t: Tree, other: Tree) -> bool:
    return t.n == other.n and canonical_form(t.to_graph()) == canonical_form(other.to_graph())


def pair_codes_for(t: Tree) -> tuple[str, ...]:
    """Part-pair codes available for this tree's six-vertex window schemes."""
    _, kind = matching_status(t)
    if kind != MatchKind.PERFECT or t.n < 6:
        return ()
    codes = list(PAIR_CODES_GENERAL)
    if _iso_tree(t, m6_tree()):
        codes += PAIR_CODES_M6_ONLY
    if t.n == 6 and t.is_path():
        codes += PAIR_CODES_P6_ONLY
    if t.is_path() and t.n >= 8 and t.n % 2 == 0:
        codes += PAIR_CODES_LONG_EVEN_PATH
    return tuple(dict.fromkeys(codes))


def _subsets_inducing(t: Tree, shape: str, avoid: int = 0) -> list[frozenset[int]]:
    size = _PAIR_SHAPE_GRAPHS[shape].n
    out = []
    verts = [v for v in range(t.n) if not avoid >> v & 1]
    for combo in itertools.combinations(verts, size):
        fs = frozenset(combo)
        if shape_matches(t, fs, f"pair:{shape}"):
            out.append(fs)
    return out


def _pair_partition(t: Tree, code: str) -> TreePartition:
    a_shape, b_shape = code.split(",")
    w = alpha(t)
    need_edges = w - 3
    for part_a in _subsets_inducing(t, a_shape):
        mask_a = mask_of(part_a)
        for part_b in _subsets_inducing(t, b_shape, avoid=mask_a):
            rest = t.full_mask() & ~mask_a & ~mask_of(part_b)
            if rest.bit_count() != 2 * need_edges:
                continue
            edges, missed = _peel_matching(t.adj, rest)
            if missed:
                continue
            parts = [part_a, part_b] + [frozenset(e) for e in sorted(edges)]
            shapes = [f"pair:{a_shape}", f"pair:{b_shape}"] + ["edge"] * need_edges
            return TreePartition(tuple(parts), tuple(shapes))
    raise TreeError(f"no partition found for pair code {code} (unexpected)")


def claim_partition(t: Tree, scheme: str) -> TreePartition:
    """Build one of the named tree partitions; raises HypothesisNotMet.

    Schemes: "two_stables", "alpha_cliques", "stable2_and_cliques",
    "fragment_and_cliques", "fragment_cliques_stable2", "s2_and_cliques",
    "p3_and_cliques", "cop3_and_cliques", "s3_and_cliques", "pair:<code>".
    """
    m, kind = matching_status(t)
    a = alpha(t)
    result: TreePartition

    if scheme == "two_stables":
        if t.n < 4:
            raise HypothesisNotMet("at least four vertices")
        pa, pb = _bipartition(t)
        result = TreePartition((pa, pb), ("stable", "stable"))

    elif scheme == "alpha_cliques":
        if t.n < 4:
            raise HypothesisNotMet("at least four vertices")
        parts = [frozenset(e) for e in sorted(m.edges)]
        parts += [frozenset([v]) for v in sorted(m.missed)]
        result = TreePartition(tuple(parts), ("clique",) * len(parts))

    elif scheme == "stable2_and_cliques":
        if t.n < 4:
            raise HypothesisNotMet("at least four vertices")
        if m.missed:
            stable = frozenset([min(m.missed)])
            cliques = [frozenset(e) for e in sorted(m.edges)]
            cliques += [frozenset([v]) for v in sorted(m.missed - stable)]
        else:
            (x, y), ex, ey = _adjacent_matching_edges(t, m)
            xp = ex[0] if ex[1] == x else ex[1]
            yp = ey[0] if ey[1] == y else ey[1]
            stable = frozenset([xp, yp])
            cliques = [frozenset([x, y])]
            cliques += [frozenset(e) for e in sorted(m.edges - {tuple(sorted(ex)), tuple(sorted(ey))})]
        result = TreePartition(
            (stable, *cliques), ("s" + str(len(stable)), *["clique"] * len(cliques))
        )

    elif scheme == "fragment_and_cliques":
        if t.n < 4:
            raise HypothesisNotMet("at least four vertices")
        if kind == MatchKind.PERFECT:
            (x, y), ex, ey = _adjacent_matching_edges(t, m)
            frag = frozenset(set(ex) | set(ey))
            rest_edges = sorted(m.edges - {tuple(sorted(ex)), tuple(sorted(ey))})
            parts = [frag] + [frozenset(e) for e in rest_edges]
        elif kind == MatchKind.NEAR_PERFECT:
            frag = _p3_with_unmatched(t, m)
            rest = t.full_mask() & ~mask_of(frag)
            parts = [frag] + _cliques_exactly(t, rest, a - 2)
        else:
            lows = sorted(m.missed)[:2]
            frag = frozenset(lows)
            cliques = [frozenset(e) for e in sorted(m.edges)]
            cliques += [frozenset([v]) for v in sorted(m.missed - frag)]
            parts = [frag] + cliques
        result = TreePartition(
            tuple(parts), ("p4_fragment", *["clique"] * (len(parts) - 1))
        )

    elif scheme == "fragment_cliques_stable2":
        if t.n < 4:
            raise HypothesisNotMet("at least four vertices")
        if a <= 2:
            raise HypothesisNotMet("independence number greater than two")
        result = _fragment_cliques_stable2(t, a)

    elif scheme == "s2_and_cliques":
        if kind != MatchKind.NEITHER:
            raise HypothesisNotMet("no perfect or near-perfect matching")
        lows = sorted(m.missed)[:2]
        stable = frozenset(lows)
        cliques = [frozenset(e) for e in sorted(m.edges)]
        cliques += [frozenset([v]) for v in sorted(m.missed - stable)]
        result = TreePartition((stable, *cliques), ("s2", *["clique"] * len(cliques)))

    elif scheme == "p3_and_cliques":
        if kind == MatchKind.PERFECT:
            raise HypothesisNotMet("no perfect matching")
        frag = _p3_with_unmatched(t, m)
        rest = t.full_mask() & ~mask_of(frag)
        cliques = _cliques_exactly(t, rest, a - 2)
        result = TreePartition((frag, *cliques), ("p3", *["clique"] * len(cliques)))

    elif scheme == "cop3_and_cliques":
        if kind != MatchKind.NEAR_PERFECT:
            raise HypothesisNotMet("near-perfect matching")
        if t.n < 5:
            raise HypothesisNotMet("at least five vertices")
        result = _cop3_and_cliques(t, a)

    elif scheme == "s3_and_cliques":
        if kind != MatchKind.NEAR_PERFECT:
            raise HypothesisNotMet("near-perfect matching")
        if is_subdivided_star(t):
            raise HypothesisNotMet("not a subdivided star")
        result = _stable_k_and_cliques(t, 3, a - 2)

    elif scheme.startswith("pair:"):
        code = scheme.split(":", 1)[1]
        if code not in pair_codes_for(t):
            raise HypothesisNotMet(f"pair code {code} unavailable for this tree")
        result = _pair_partition(t, code)

    else:
        raise TreeError(f"unknown scheme {scheme!r}")

    result.verify(t)
    return result


def _p3_with_unmatched(t: Tree, m: Matching) -> frozenset[int]:
    """Lowest unmatched vertex plus an adjacent matching edge (induces a path)."""
    partner = {}
    for x, y in m.edges:
        partner[x], partner[y] = y, x
    for u in sorted(m.missed):
        for p in bits(t.adj[u]):
            if p in partner:
                return frozenset([u, p, partner[p]])
    raise TreeError("unmatched vertex with no matched neighbor (not maximal?)")


def _cop3_and_cliques(t: Tree, a: int) -> TreePartition:
    for leaf in sorted(bits(t.leaves_mask())):
        rest = t.full_mask() ^ (1 << leaf)
        edges, missed = _peel_matching(t.adj, rest)
        if missed:
            continue
        nb = t.adj[leaf]
        for x, y in sorted(edges):
            if nb >> x & 1 or nb >> y & 1:
                continue
            part = frozenset([leaf, x, y])
            others = t.full_mask() & ~mask_of(part)
            cliques = _cliques_exactly(t, others, a - 2)
            if cliques is not None:
                return TreePartition(
                    (part, *cliques), ("co_p3", *["clique"] * len(cliques))
                )
    raise TreeError("no co-P3 partition found (unexpected)")


def _stable_k_and_cliques(t: Tree, k: int, cliques_needed: int) -> TreePartition:
    for combo in itertools.combinations(range(t.n), k):
        fs = frozenset(combo)
        sm = mask_of(fs)
        if any(t.adj[v] & sm for v in combo):
            continue
        rest = t.full_mask() & ~sm
        cliques = _cliques_exactly(t, rest, cliques_needed)
        if cliques is not None:
            return TreePartition(
                (fs, *cliques), (f"s{k}", *["clique"] * len(cliques))
            )
    raise TreeError(f"no stable-{k} partition found (unexpected)")


def _fragment_cliques_stable2(t: Tree, a: int) -> TreePartition:
    full = t.full_mask()
    for frag_size in (4, 3, 2, 1):
        for combo in itertools.combinations(range(t.n), frag_size):
            frag = frozenset(combo)
            if not shape_matches(t, frag, "p4_fragment"):
                continue
            fm = mask_of(frag)
            rest_vs = [v for v in range(t.n) if not fm >> v & 1]
            for st_size in (2, 1):
                for st in itertools.combinations(rest_vs, st_size):
                    stm = mask_of(st)
                    if any(t.adj[v] & stm for v in st):
                        continue
                    rest = full & ~fm & ~stm
                    cliques = _cliques_exactly(t, rest, a - 3)
                    if cliques is not None:
                        return TreePartition(
                            (frag, frozenset(st), *cliques),
                            ("p4_fragment", f"s{st_size}", *["clique"] * len(cliques)),
                        )
    raise TreeError("no fragment+cliques+stable partition found (unexpected)")


# ---------------------------------------------------------------------------
# six-vertex windows inside the canonical matching
# ---------------------------------------------------------------------------


def _matching_triples(t: Tree) -> Iterable[tuple[tuple[int, int], ...]]:
    m = canonical_matching(t)
    yield from itertools.combinations(sorted(m.edges), 3)


def find_induced_m6(t: Tree) -> tuple[tuple[int, int], ...]:
    """Three canonical-matching edges whose ends induce the spiked three-path."""
    _, kind = matching_status(t)
    if kind != MatchKind.PERFECT:
        raise HypothesisNotMet("perfect matching")
    if t.is_path():
        raise HypothesisNotMet("not a path")
    target = m6_tree().to_graph()
    g = t.to_graph()
    for triple in _matching_triples(t):
        vs = mask_of(v for e in triple for v in e)
        if canonical_form(g.induced(vs)) == canonical_form(target):
            return triple
    raise TreeError("no spiked three-path window found (unexpected)")


def find_induced_p6(t: Tree) -> tuple[tuple[int, int], ...]:
    """Three canonical-matching edges whose ends induce a six-path."""
    _, kind = matching_status(t)
    if kind != MatchKind.PERFECT:
        raise HypothesisNotMet("perfect matching")
    if is_spiked(t):
        raise HypothesisNotMet("not spiked")
    target = path_tree(6).to_graph()
    g = t.to_graph()
    for triple in _matching_triples(t):
        vs = mask_of(v for e in triple for v in e)
        if canonical_form(g.induced(vs)) == canonical_form(target):
            return triple
    raise TreeError("no six-path window found (unexpected)")


def s4_partition(t: Tree) -> Optional[TreePartition]:
    """Partition into one stable 4-set and alpha-2 edges, when one exists.

    For perfect-matching trees this exists precisely when the tree is neither
    a spiked star nor a doublestar.
    """
    _, kind = matching_status(t)
    if kind != MatchKind.PERFECT:
        raise HypothesisNotMet("perfect matching")
    a = alpha(t)
    if t.n != 2 * a or t.n < 4:
        return None
    for combo in itertools.combinations(range(t.n), 4):
        sm = mask_of(combo)
        if any(t.adj[v] & sm for v in combo):
            continue
        rest = t.full_mask() & ~sm
        edges, missed = _peel_matching(t.adj, rest)
        if missed:
            continue
        parts = [frozenset(combo)] + [frozenset(e) for e in sorted(edges)]
        tp = TreePartition(tuple(parts), ("s4", *["edge"] * len(edges)))
        tp.verify(t)
        return tp
    return None


def star_cover_exists(t: Tree) -> bool:
    """Can the vertex set be covered by one star of the tree plus alpha-2 cliques?"""
    a = alpha(t)
    for c in range(t.n):
        closed = t.adj[c] | (1 << c)
        rest = t.full_mask() & ~closed
        edges, missed = _peel_matching(t.adj, rest)
        if len(edges) + len(missed) <= a - 2:
            return True
    return False


# ---------------------------------------------------------------------------
# isomorphism-free enumeration
# ---------------------------------------------------------------------------


def _rooted_code(adj: tuple[int, ...], root: int, parent: int) -> str:
    kids = sorted(
        _rooted_code(adj, u, root) for u in bits(adj[root]) if u != parent
    )
    return "(" + "".join(kids) + ")"


def tree_canonical_key(t: Tree) -> str:
    """Free-tree canonical string: rooted encoding from the center(s)."""
    if t.n == 1:
        return "()"
    remaining = t.full_mask()
    while remaining.bit_count() > 2:
        drop = 0
        for v in bits(remaining):
            if (t.adj[v] & remaining).bit_count() <= 1:
                drop |= 1 << v
        remaining ^= drop
    centers = list(bits(remaining))
    if len(centers) == 1:
        return _rooted_code(t.adj, centers[0], -1)
    c1, c2 = centers
    return "".join(sorted([_rooted_code(t.adj, c1, c2), _rooted_code(t.adj, c2, c1)]))


def canonical_relabel(t: Tree) -> Tree:
    """Deterministic representative: BFS labels in canonical child order."""
    if t.n == 1:
        return t
    remaining = t.full_mask()
    while remaining.bit_count() > 2:
        drop = 0
        for v in bits(remaining):
            if (t.adj[v] & remaining).bit_count() <= 1:
                drop |= 1 << v
        remaining ^= drop
    centers = list(bits(remaining))
    if len(centers) == 1:
        root, first_parent = centers[0], -1
    else:
        c1, c2 = centers
        if _rooted_code(t.adj, c1, c2) <= _rooted_code(t.adj, c2, c1):
            root, first_parent = c1, c2
        else:
            root, first_parent = c2, c1
    label = {}
    edges = []

    def visit(v: int, parent: int) -> None:
        label[v] = len(label)
        kids = [u for u in bits(t.adj[v]) if u != parent]
        kids.sort(key=lambda u: _rooted_code(t.adj, u, v))
        for u in kids:
            edges.append((label[v], len(label)))
            visit(u, v)

    visit(root, -1 if first_parent == -1 else first_parent)
    if first_parent != -1:
        edges.append((label[root], len(label)))
        visit(first_parent, root)
    return Tree(t.n, edges)


def tree_id(t: Tree) -> str:
    """graph6 string of the canonical relabeling; stable across relabelings."""
    from .graphs import encode_graph6

    return encode_graph6(canonical_relabel(t).to_graph())


# ---------------------------------------------------------------------------
# construct-and-canonicalize catalogs (independent taxonomy oracles)
# ---------------------------------------------------------------------------


def _chain(t1: Tree, a: int, t2: Tree, b: int) -> Tree:
    edges = list(t1.edges)
    edges += [(x + t1.n, y + t1.n) for x, y in t2.edges]
    edges.append((a, b + t1.n))
    return Tree(t1.n + t2.n, edges)


def _spiked_star_trees(n: int) -> list[Tree]:
    if n == 2:
        return [path_tree(2)]
    if n % 2 or n < 4:
        return []
    return [spiking_of(star_tree(n // 2 - 1))]


def _chain_leaves(t: Tree) -> list[int]:
    """Leaves adjacent to a maximum-degree vertex (spiked-star attach points)."""
    md = _max_degree_vertices(t, t.full_mask())
    return [v for v in bits(t.leaves_mask()) if t.adj[v] & md]


@lru_cache(maxsize=None)
def spiked_catalog(n: int) -> frozenset[str]:
    """Canonical keys of all spikings on n vertices, built by construction."""
    if n % 2 or n < 2:
        return frozenset()
    if n == 2:
        return frozenset({tree_canonical_key(path_tree(2))})
    return frozenset(tree_canonical_key(spiking_of(b)) for b in enumerate_trees(n // 2))


@lru_cache(maxsize=None)
def spiked_star_catalog(n: int) -> frozenset[str]:
    return frozenset(tree_canonical_key(t) for t in _spiked_star_trees(n))


@lru_cache(maxsize=None)
def subdivided_star_catalog(n: int) -> frozenset[str]:
    if n % 2 == 0 or n < 3:
        return frozenset()
    return frozenset({tree_canonical_key(subdivided_star_tree((n - 1) // 2))})


@lru_cache(maxsize=None)
def doublestar_catalog(n: int) -> frozenset[str]:
    """Canonical keys of all chainings on n vertices, built by construction."""
    keys = set()
    for n1 in range(2, n - 1):
        n2 = n - n1
        for t1 in _spiked_star_trees(n1):
            if t1.n == 2:
                continue  # the first chained star must not be an edge
            for t2 in _spiked_star_trees(n2):
                for a in _chain_leaves(t1):
                    for b in _chain_leaves(t2):
                        keys.add(tree_canonical_key(_chain(t1, a, t2, b)))
        if n1 % 2 and n2 % 2 and n1 >= 3 and n2 >= 3:
            t1 = subdivided_star_tree((n1 - 1) // 2)
            t2 = subdivided_star_tree((n2 - 1) // 2)
            for a in subdivided_star_centers(t1):
                for b in subdivided_star_centers(t2):
                    keys.add(tree_canonical_key(_chain(t1, a, t2, b)))
    return frozenset(keys)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees on n vertices up to isomorphism (1 <= n <= 12), sorted by key."""
    if not (1 <= n <= 12):
        raise TreeError("enumeration supported for 1 <= n <= 12")
    if n == 1:
        return (Tree(1, []),)
    reps: dict[str, Tree] = {}
    for smaller in enumerate_trees(n - 1):
        for v in range(smaller.n):
            grown = Tree(n, list(smaller.edges) + [(v, n - 1)])
            key = tree_canonical_key(grown)
            if key not in reps:
                reps[key] = canonical_relabel(grown)
    return tuple(reps[k] for k in sorted(reps))

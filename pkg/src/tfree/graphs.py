"""Bit-parallel kernel for labeled simple graphs on at most 62 vertices.

Vertex sets are Python-int bitmasks throughout; a graph stores one adjacency
mask per vertex.  Everything here is pure and immutable, so values can be
shared freely across processes.

Conventions (used consistently by the shape predicates and families):
  * a clique and a stable set may be empty,
  * "complement of a matching" allows partial matchings, so cliques qualify,
  * complete multipartite graphs include cliques (all parts singletons) and
    stable sets (one part).
"""

from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 62


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


class BadHeader(Graph6Error):
    pass


class BadLength(Graph6Error):
    pass


class NonCanonicalPadding(Graph6Error):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...], _validated: bool = False):
        if not _validated:
            if not (0 <= n <= MAX_VERTICES):
                raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
            if len(adj) != n:
                raise GraphError("adjacency row count != n")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"adjacency bits beyond vertex range at {v}")
                if row >> v & 1:
                    raise GraphError(f"self-loop at {v}")
            for v in range(n):
                for u in bits(adj[v]):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency {v}-{u}")
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"bad edge ({a},{b}) for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(n, tuple(rows), _validated=True)

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n, _validated=True)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)), _validated=True)

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def star(leaves: int) -> "Graph":
        return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # -- basic queries -----------------------------------------------------

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a]) if a < b]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(
            self.n,
            tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)),
            _validated=True,
        )

    def induced(self, vertices: int | Iterable[int]) -> "Graph":
        """Subgraph induced on a bitmask or iterable, relabeled 0..k-1 in order."""
        m = vertices if isinstance(vertices, int) else mask_of(vertices)
        keep = list(bits(m))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v] & m):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), tuple(rows), _validated=True)

    def relabel(self, perm: list[int]) -> "Graph":
        """Apply vertex permutation: new label of v is perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows), _validated=True)

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.adj) + [row << self.n for row in other.adj]
        return Graph(self.n + other.n, tuple(rows), _validated=True)

    def join(self, other: "Graph") -> "Graph":
        a, b = self.n, other.n
        left = (1 << a) - 1
        right = ((1 << b) - 1) << a
        rows = [row | right for row in self.adj]
        rows += [(row << a) | left for row in other.adj]
        return Graph(a + b, tuple(rows), _validated=True)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# induced subgraph embedding
# ---------------------------------------------------------------------------


def induced_embedding(pattern: Graph, host: Graph) -> Optional[dict[int, int]]:
    """Injective map preserving edges and non-edges, or None.

    Backtracking over pattern vertices ordered for connectivity, candidate
    sets maintained as host bitmasks.  The returned map is re-verified before
    returning (cheap guard against pruning bugs).
    """
    p, h = pattern.n, host.n
    if p > h:
        return None
    if p == 0:
        return {}

    order = _pattern_order(pattern)
    host_full = host.full_mask()
    host_co = [host_full ^ row ^ (1 << v) for v, row in enumerate(host.adj)]

    assign = [-1] * p
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == p:
            return True
        v = order[idx]
        cand = host_full & ~used
        for j in range(idx):
            u = order[j]
            hu = assign[u]
            if pattern.adj[v] >> u & 1:
                cand &= host.adj[hu]
            else:
                cand &= host_co[hu]
            if not cand:
                return False
        for hv in bits(cand):
            assign[v] = hv
            used |= 1 << hv
            if place(idx + 1):
                return True
            used ^= 1 << hv
        assign[v] = -1
        return False

    if not place(0):
        return None
    mapping = {v: assign[v] for v in range(p)}
    for a in range(p):
        for b in range(a + 1, p):
            if (pattern.adj[a] >> b & 1) != (host.adj[mapping[a]] >> mapping[b] & 1):
                raise AssertionError("embedding self-check failed")
    return mapping


def _pattern_order(pattern: Graph) -> list[int]:
    """Vertex order: highest degree first, then neighbors of placed vertices."""
    if pattern.n == 0:
        return []
    order = [max(range(pattern.n), key=pattern.degree)]
    placed = 1 << order[0]
    rest = pattern.full_mask() ^ placed
    while rest:
        best, best_key = -1, (-1, -1)
        for v in bits(rest):
            key = ((pattern.adj[v] & placed).bit_count(), pattern.degree(v))
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
        rest ^= 1 << best
    return order


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return induced_embedding(pattern, host) is not None


# ---------------------------------------------------------------------------
# P4-freeness and complement components
# ---------------------------------------------------------------------------


def find_induced_p4(g: Graph, within: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Quartet scan; returns one induced-P4 vertex tuple (path order) or None."""
    m = g.full_mask() if within is None else within
    vs = list(bits(m))
    for quad in itertools.combinations(vs, 4):
        path = _p4_path(g, quad)
        if path is not None:
            return path
    return None


def _p4_path(g: Graph, quad: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    qmask = mask_of(quad)
    degs = [(g.adj[v] & qmask).bit_count() for v in quad]
    if sorted(degs) != [1, 1, 2, 2]:
        return None
    ends = [v for v, d in zip(quad, degs) if d == 1]
    a, d = ends
    if g.adj[a] >> d & 1:
        return None
    b = next(bits(g.adj[a] & qmask))
    c = next(bits(g.adj[d] & qmask))
    if b == c:
        return None
    return (a, b, c, d)


def is_p4_free(g: Graph, method: str = "auto") -> bool:
    """True iff no 4 vertices induce a path.

    method: "scan" (quartet scan), "split" (recursive complement-split with a
    quartet scan only on failure witnesses), or "auto" (scan for n <= 16).
    """
    if method == "scan" or (method == "auto" and g.n <= 16):
        return find_induced_p4(g) is None
    return _p4_free_split(g, g.full_mask())


def _p4_free_split(g: Graph, m: int) -> bool:
    k = m.bit_count()
    if k <= 3:
        return True
    comps = _components_within(g.adj, m)
    if len(comps) > 1:
        return all(_p4_free_split(g, c) for c in comps)
    full = g.full_mask()
    co_adj = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]
    co_comps = _components_within(co_adj, m)
    if len(co_comps) > 1:
        return all(_p4_free_split(g, c) for c in co_comps)
    # connected and co-connected on >= 2 vertices: a P4 must exist
    if find_induced_p4(g, m) is None:
        raise AssertionError("split method found no P4 witness in a prime module")
    return False


def _components_within(adj: list[int] | tuple[int, ...], m: int) -> list[int]:
    comps = []
    rest = m
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v] & m & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components as masks, ascending by least element."""
    m = g.full_mask() if within is None else within
    return _components_within(g.adj, m)


def complement_components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Components of the complement graph, ascending by least element."""
    m = g.full_mask() if within is None else within
    full = g.full_mask()
    co_adj = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]
    return _components_within(co_adj, m)


# ---------------------------------------------------------------------------
# shape predicates (vertex-set masks)
# ---------------------------------------------------------------------------


def is_clique_mask(g: Graph, m: int) -> bool:
    for v in bits(m):
        if m & ~g.adj[v] & ~(1 << v):
            return False
    return True


def is_stable_mask(g: Graph, m: int) -> bool:
    for v in bits(m):
        if g.adj[v] & m:
            return False
    return True


def is_comatching_mask(g: Graph, m: int) -> bool:
    """Complement of the induced subgraph is a (possibly empty) matching."""
    for v in bits(m):
        if (m & ~g.adj[v] & ~(1 << v)).bit_count() > 1:
            return False
    return True


def is_multipartite_mask(g: Graph, m: int) -> bool:
    """Induced subgraph is complete multipartite (non-adjacency transitive)."""
    for v in bits(m):
        nonadj_v = m & ~g.adj[v] & ~(1 << v)
        for u in bits(nonadj_v):
            nonadj_u = m & ~g.adj[u] & ~(1 << u)
            if (nonadj_u | (1 << u)) != (nonadj_v | (1 << v)):
                return False
    return True


def _isolated_in(g: Graph, m: int) -> Iterator[int]:
    for v in bits(m):
        if not g.adj[v] & m:
            yield v


def is_vertex_plus_clique(g: Graph, m: int) -> bool:
    if m == 0:
        return False
    for v in _isolated_in(g, m):
        if is_clique_mask(g, m ^ (1 << v)):
            return True
    return False


def is_vertex_plus_comatching(g: Graph, m: int) -> bool:
    if m == 0:
        return False
    for v in _isolated_in(g, m):
        if is_comatching_mask(g, m ^ (1 << v)):
            return True
    return False


def is_vertex_plus_multipartite(g: Graph, m: int) -> bool:
    if m == 0:
        return False
    for v in _isolated_in(g, m):
        if is_multipartite_mask(g, m ^ (1 << v)):
            return True
    return False


def is_clique_plus_stable(g: Graph, m: int) -> bool:
    """Disjoint union of a clique and a stable set (either may be empty)."""
    nonsingleton = [c for c in _components_within(g.adj, m) if c.bit_count() >= 2]
    if not nonsingleton:
        return True
    return len(nonsingleton) == 1 and is_clique_mask(g, nonsingleton[0])


def is_stable3(g: Graph, m: int) -> bool:
    return m.bit_count() == 3 and is_stable_mask(g, m)


# ---------------------------------------------------------------------------
# shape tags
# ---------------------------------------------------------------------------


class ComponentShape(Enum):
    SINGLETON = "singleton"
    STABLE_SET = "stable_set"
    VERTEX_PLUS_CLIQUE = "vertex_plus_clique"
    VERTEX_PLUS_COMATCHING = "vertex_plus_comatching"
    CLIQUE_PLUS_STABLE = "clique_plus_stable"
    VERTEX_PLUS_MULTIPARTITE = "vertex_plus_multipartite"
    OTHER = "other"


class PartShape(Enum):
    CLIQUE = "clique"
    STABLE = "stable"
    COMATCHING = "comatching"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    P4_FREE_OTHER = "p4_free_other"
    NOT_P4_FREE = "not_p4_free"


class NotAComponent(GraphError):
    pass


def component_shape(g: Graph, comp: int) -> ComponentShape:
    """Most specific tag for the induced subgraph on one complement component."""
    if comp not in complement_components(g):
        raise NotAComponent(f"mask {comp:#x} is not a complement component")
    if comp.bit_count() == 1:
        return ComponentShape.SINGLETON
    if is_stable_mask(g, comp):
        return ComponentShape.STABLE_SET
    if is_vertex_plus_clique(g, comp):
        return ComponentShape.VERTEX_PLUS_CLIQUE
    if is_vertex_plus_comatching(g, comp):
        return ComponentShape.VERTEX_PLUS_COMATCHING
    if is_clique_plus_stable(g, comp):
        return ComponentShape.CLIQUE_PLUS_STABLE
    if is_vertex_plus_multipartite(g, comp):
        return ComponentShape.VERTEX_PLUS_MULTIPARTITE
    return ComponentShape.OTHER


def part_shape(g: Graph, part: int) -> PartShape:
    if is_clique_mask(g, part):
        return PartShape.CLIQUE
    if is_stable_mask(g, part):
        return PartShape.STABLE
    if is_comatching_mask(g, part):
        return PartShape.COMATCHING
    if is_multipartite_mask(g, part):
        return PartShape.COMPLETE_MULTIPARTITE
    if find_induced_p4(g, part) is None:
        return PartShape.P4_FREE_OTHER
    return PartShape.NOT_P4_FREE


# ---------------------------------------------------------------------------
# component families
# ---------------------------------------------------------------------------


class Family(Enum):
    F1 = "F1"  # every complement component: vertex + clique
    F2 = "F2"  # stable triple or vertex + clique
    F3 = "F3"  # stable set (any size) or vertex + clique
    F4 = "F4"  # clique + stable set
    F5_VERTEX_MULTIPARTITE = "F5"
    F6_VERTEX_COMATCHING = "F6"
    ALL_COMATCHING = "CoM"  # the graph is a complement of a matching


_FAMILY_COMPONENT_PREDICATES = {
    Family.F1: lambda g, c: is_vertex_plus_clique(g, c),
    Family.F2: lambda g, c: is_stable3(g, c) or is_vertex_plus_clique(g, c),
    Family.F3: lambda g, c: is_stable_mask(g, c) or is_vertex_plus_clique(g, c),
    Family.F4: lambda g, c: is_clique_plus_stable(g, c),
    Family.F5_VERTEX_MULTIPARTITE: lambda g, c: is_vertex_plus_multipartite(g, c),
    Family.F6_VERTEX_COMATCHING: lambda g, c: is_stable3(g, c)
    or is_vertex_plus_comatching(g, c),
    Family.ALL_COMATCHING: lambda g, c: c.bit_count() <= 2,
}


def family_member(g: Graph, family: Family) -> bool:
    pred = _FAMILY_COMPONENT_PREDICATES[family]
    return all(pred(g, comp) for comp in complement_components(g))


# ---------------------------------------------------------------------------
# cliques and stable sets
# ---------------------------------------------------------------------------


def max_clique_size(g: Graph, within: Optional[int] = None) -> int:
    m = g.full_mask() if within is None else within
    return _max_clique(g.adj, m)


def max_stable_size(g: Graph, within: Optional[int] = None) -> int:
    m = g.full_mask() if within is None else within
    full = g.full_mask()
    co_adj = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]
    return _max_clique(co_adj, m)


def _max_clique(adj, cand: int) -> int:
    best = 0

    def grow(curr: int, rest: int) -> None:
        nonlocal best
        if curr + rest.bit_count() <= best:
            return
        if not rest:
            best = max(best, curr)
            return
        # branch on removal: either skip v or take it
        v = (rest & -rest).bit_length() - 1
        grow(curr + 1, rest & adj[v])
        grow(curr, rest ^ (1 << v))

    grow(0, cand)
    return best


def has_clique_at_least(g: Graph, within: int, k: int) -> bool:
    if k <= 0:
        return True
    return _clique_at_least(g.adj, within, k)


def has_stable_at_least(g: Graph, within: int, k: int) -> bool:
    if k <= 0:
        return True
    full = g.full_mask()
    co_adj = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]
    return _clique_at_least(co_adj, within, k)


def _clique_at_least(adj, cand: int, k: int) -> bool:
    def grow(curr: int, rest: int) -> bool:
        if curr >= k:
            return True
        if curr + rest.bit_count() < k:
            return False
        v = (rest & -rest).bit_length() - 1
        return grow(curr + 1, rest & adj[v]) or grow(curr, rest ^ (1 << v))

    return grow(0, cand)


# ---------------------------------------------------------------------------
# graph6 codec (single-byte header, n <= 62)
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Upper-triangle column-order bit encoding, 6 bits per printable byte."""
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise BadHeader("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= MAX_VERTICES):
        raise BadHeader(f"header byte {s[0]!r} encodes n={n} outside [0, {MAX_VERTICES}]")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    body = s[1:]
    if len(body) != expected:
        raise BadLength(f"expected {expected} payload bytes for n={n}, got {len(body)}")
    bits_stream = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6Error(f"byte {ch!r} outside graph6 alphabet")
        for k in range(5, -1, -1):
            bits_stream.append(val >> k & 1)
    if any(bits_stream[npairs:]):
        raise NonCanonicalPadding("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits_stream[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows), _validated=True)


# ---------------------------------------------------------------------------
# small-graph canonical form (brute force; n <= 8)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, minimal edge mask over relabelings); exact but factorial in n."""
    if g.n > 8:
        raise GraphError("canonical_form is brute force; n <= 8 only")
    best = None
    for perm in _perms(g.n):
        # column-order upper triangle under inverse relabeling
        inv = [0] * g.n
        for v, p in enumerate(perm):
            inv[p] = v
        mask = 0
        pos = 0
        for j in range(1, g.n):
            for i in range(j):
                if g.adj[inv[i]] >> inv[j] & 1:
                    mask |= 1 << pos
                pos += 1
        if best is None or mask < best:
            best = mask
    return (g.n, best if best is not None else 0)

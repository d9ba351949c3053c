"""Witnessing and certifying partition machinery.

A partition of a host graph into w parts *witnesses* freeness of a pattern h
(with w = wpn(h)) when no ordered partition of V(h) — empty blocks allowed —
embeds block-by-block induced into the corresponding host parts.  The
structural predicates evaluate, per tree class, the exact shape disjunction
that characterizes witnessing on "interesting" partitions; the shape check is
sound without any size hypothesis, so it doubles as the census metric.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

from . import graphs as G
from .graphs import Graph, bits, mask_of
from . import trees as T
from .trees import Tree, TreeClass


class CertifyError(ValueError):
    pass


class PartCountMismatch(CertifyError):
    pass


class UnsupportedClass(CertifyError):
    pass


class BadBudget(CertifyError):
    pass


class NotWithinOnePart(CertifyError):
    pass


class HostTooLarge(CertifyError):
    pass


# ---------------------------------------------------------------------------
# partitions of host vertices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of 0..host_n-1 by w parts (parts stored as bitmasks)."""

    host_n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.host_n) - 1
        union = 0
        total = 0
        for p in self.parts:
            if p & ~full:
                raise CertifyError("part outside vertex range")
            union |= p
            total += p.bit_count()
        if union != full or total != self.host_n:
            raise CertifyError("parts do not partition the vertex set")
        if not self.parts:
            raise CertifyError("need at least one part")

    @property
    def w(self) -> int:
        return len(self.parts)

    def nonempty(self) -> bool:
        return all(self.parts)

    @staticmethod
    def from_sets(host_n: int, sets) -> "Partition":
        return Partition(host_n, tuple(mask_of(s) for s in sets))

    @staticmethod
    def from_vector(vector: str | list[int], w: Optional[int] = None) -> "Partition":
        """Parse a part-index vector like "0,1,0,0,1"."""
        if isinstance(vector, str):
            idx = [int(x) for x in vector.replace(" ", "").split(",") if x != ""]
        else:
            idx = list(vector)
        count = w if w is not None else (max(idx) + 1 if idx else 1)
        parts = [0] * count
        for v, i in enumerate(idx):
            if not 0 <= i < count:
                raise CertifyError(f"part index {i} out of range")
            parts[i] |= 1 << v
        return Partition(len(idx), tuple(parts))

    def to_vector(self) -> str:
        idx = [0] * self.host_n
        for i, p in enumerate(self.parts):
            for v in bits(p):
                idx[v] = i
        return ",".join(str(i) for i in idx)


@dataclass(frozen=True)
class Pattern:
    """A partition together with the host-induced graph on each part."""

    partition: Partition
    graphs: tuple[Graph, ...]

    @staticmethod
    def project(host: Graph, partition: Partition) -> "Pattern":
        if host.n != partition.host_n:
            raise CertifyError("partition host size mismatch")
        return Pattern(partition, tuple(host.induced(m) for m in partition.parts))


@dataclass
class CertifyVerdict:
    witnessing: Optional[bool] = None
    structural: Optional[bool] = None
    interesting: Optional[bool] = None
    failing_assignment: Optional[tuple[tuple[int, ...], ...]] = None
    failing_condition: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "witnessing": self.witnessing,
            "structural": self.structural,
            "interesting": self.interesting,
            "failing_assignment": None
            if self.failing_assignment is None
            else [list(ys) for ys in self.failing_assignment],
            "failing_condition": self.failing_condition,
        }


def _as_graph(h) -> Graph:
    return h.to_graph() if isinstance(h, Tree) else h


# ---------------------------------------------------------------------------
# witnessing partition number
# ---------------------------------------------------------------------------


def _exists_stable_clique_split(g: Graph, s: int, c: int) -> bool:
    """Can V(g) be partitioned into s stable sets and c cliques (empties ok)?

    Canonical recursion: the block containing the lowest remaining vertex is
    chosen as a stable set or a clique, consuming one budget unit.
    """
    full = g.full_mask()
    co = [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)]

    memo: dict[tuple[int, int, int], bool] = {}

    def blocks_containing_low(adj_rows, mask: int):
        # maximal-free enumeration of cliques (w.r.t. adj_rows) containing low(mask)
        low = mask & -mask
        v = low.bit_length() - 1
        out = []

        def grow(curr: int, cand: int) -> None:
            out.append(curr)
            for u in bits(cand):
                grow(curr | (1 << u), cand & adj_rows[u] & ~((1 << (u + 1)) - 1))

        grow(low, mask & adj_rows[v])
        return out

    def f(mask: int, s_left: int, c_left: int) -> bool:
        if mask == 0:
            return True
        key = (mask, s_left, c_left)
        if key in memo:
            return memo[key]
        ok = False
        if s_left:
            for block in blocks_containing_low(co, mask):
                if f(mask & ~block, s_left - 1, c_left):
                    ok = True
                    break
        if not ok and c_left:
            for block in blocks_containing_low(g.adj, mask):
                if f(mask & ~block, s_left, c_left - 1):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return f(g.full_mask(), s, c)


@lru_cache(maxsize=4096)
def wpn(h) -> int:
    """Largest t such that some split of t into stable/clique budgets fails."""
    g = _as_graph(h)
    if g.n > 10:
        raise HostTooLarge("wpn is brute force; pattern capped at 10 vertices")
    for t in range(g.n - 1, -1, -1):
        for s in range(t + 1):
            if not _exists_stable_clique_split(g, s, t - s):
                return t
    return 0


# ---------------------------------------------------------------------------
# allowed pattern blocks per host part
# ---------------------------------------------------------------------------


def _embeddable_subset_table(h: Graph, host_part: Graph) -> bytearray:
    """table[Y] = 1 iff h[Y] induced-embeds into host_part.

    Non-embeddability is upward closed, so a mask is searched only when all
    its one-smaller subsets embed.
    """
    n = h.n
    size = 1 << n
    table = bytearray(size)
    table[0] = 1
    by_count: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1, size):
        by_count[m.bit_count()].append(m)
    cap = host_part.n
    for k in range(1, n + 1):
        if k > cap:
            break
        for m in by_count[k]:
            mm = m
            ok = True
            while mm:
                low = mm & -mm
                if not table[m ^ low]:
                    ok = False
                    break
                mm ^= low
            if ok and G.induced_embedding(h.induced(m), host_part) is not None:
                table[m] = 1
    return table


def _allowed_blocks(h: Graph, host: Graph, part_mask: int) -> list[int]:
    """All Y-masks of pattern vertices with h[Y] embedding into host[part]."""
    ell = part_mask.bit_count()
    n = h.n
    if ell == 0:
        return [0]
    if G.is_clique_mask(host, part_mask):
        out = [0] + [1 << v for v in range(n)]
        if ell >= 2:
            out += [m for m in _masks_of_size(n, 2) if G.is_clique_mask(h, m)]
        if ell >= 3:
            out += [
                m
                for k in range(3, min(n, ell) + 1)
                for m in _masks_of_size(n, k)
                if G.is_clique_mask(h, m)
            ]
        return out
    if G.is_stable_mask(host, part_mask):
        return [m for m in range(1 << n) if m.bit_count() <= ell and G.is_stable_mask(h, m)]
    if G.is_comatching_mask(host, part_mask):
        mu = sum(
            1
            for v in bits(part_mask)
            if part_mask & ~host.adj[v] & ~(1 << v)
        ) // 2
        out = []
        for m in range(1 << n):
            k = m.bit_count()
            if k > ell:
                continue
            k2 = 0
            ok = True
            for v in bits(m):
                miss = (m & ~h.adj[v] & ~(1 << v)).bit_count()
                if miss > 1:
                    ok = False
                    break
                k2 += miss
            if not ok:
                continue
            k2 //= 2
            if k2 <= mu and (k - 2 * k2) <= (ell - mu - k2):
                out.append(m)
        return out
    table = _embeddable_subset_table(h, host.induced(part_mask))
    return [m for m in range(1 << n) if table[m]]


def _masks_of_size(n: int, k: int) -> list[int]:
    return [mask_of(c) for c in itertools.combinations(range(n), k)]


def _find_cover(h: Graph, host: Graph, parts: tuple[int, ...]) -> Optional[list[int]]:
    """Ordered blocks (Y per part, empties allowed) covering V(h), or None."""
    order = sorted(range(len(parts)), key=lambda i: parts[i].bit_count())
    tables = [_allowed_blocks(h, host, parts[i]) for i in order]
    full = h.full_mask()
    reach: dict[int, None] = {0: None}
    stages: list[dict[int, tuple[int, int]]] = []
    for tbl in tables:
        new: dict[int, tuple[int, int]] = {}
        for m in reach:
            rest = full & ~m
            for y in tbl:
                if y & ~rest:
                    continue
                u = m | y
                if u not in new:
                    new[u] = (m, y)
        stages.append(new)
        reach = new
        if not reach:
            return None
    if full not in reach:
        return None
    blocks = [0] * len(parts)
    u = full
    for idx in range(len(parts) - 1, -1, -1):
        prev, y = stages[idx][u]
        blocks[order[idx]] = y
        u = prev
    return blocks


def is_witnessing(g: Graph, p: Partition, h) -> CertifyVerdict:
    """Brute-force witnessing check; counterexample block assignment on failure."""
    hg = _as_graph(h)
    if hg.n > 10:
        raise HostTooLarge("pattern capped at 10 vertices")
    required = T.alpha(h) - 1 if isinstance(h, Tree) and T.alpha(h) >= 2 else wpn(hg)
    if p.w != required:
        raise PartCountMismatch(f"need {required} parts, got {p.w}")
    if g.n != p.host_n:
        raise CertifyError("partition host size mismatch")
    cover = _find_cover(hg, g, p.parts)
    if cover is None:
        return CertifyVerdict(witnessing=True)
    return CertifyVerdict(
        witnessing=False,
        failing_assignment=tuple(tuple(bits(y)) for y in cover),
    )


# ---------------------------------------------------------------------------
# interesting partitions
# ---------------------------------------------------------------------------


def is_interesting(
    g: Graph, p: Partition, t: Tree, size_threshold: Optional[int] = None
) -> tuple[bool, Partition, Optional[str]]:
    """Check the reindexed clique/stable-size and P4-free conditions.

    Returns (ok, reindexed partition, failing condition among "(ii)"/"(iii)").
    The reindexing puts a part of maximum independence number first.
    """
    a = T.alpha(t)
    if p.w != a - 1:
        raise PartCountMismatch(f"need {a - 1} parts, got {p.w}")
    if not p.nonempty():
        raise CertifyError("interesting partitions need nonempty parts")
    tau = size_threshold if size_threshold is not None else t.n
    alphas = [G.max_stable_size(g, m) for m in p.parts]
    first = max(range(p.w), key=lambda i: (alphas[i], -i))
    reorder = [first] + [i for i in range(p.w) if i != first]
    reindexed = Partition(p.host_n, tuple(p.parts[i] for i in reorder))
    for i, m in enumerate(reindexed.parts):
        if i == 0:
            if not (
                G.has_clique_at_least(g, m, tau) or G.has_stable_at_least(g, m, tau)
            ):
                return False, reindexed, "(ii)"
        elif not G.has_clique_at_least(g, m, tau):
            return False, reindexed, "(ii)"
    for m in reindexed.parts:
        if G.find_induced_p4(g, m) is not None:
            return False, reindexed, "(iii)"
    return True, reindexed, None


# ---------------------------------------------------------------------------
# per-class shape disjunctions
# ---------------------------------------------------------------------------

CompPred = Callable[[Graph, int], bool]

_CORE_PREDICATES: dict[str, CompPred] = {
    "f2": lambda g, c: G.is_stable3(g, c) or G.is_vertex_plus_clique(g, c),
    "f3": lambda g, c: G.is_stable_mask(g, c) or G.is_vertex_plus_clique(g, c),
    "f4": lambda g, c: G.is_clique_plus_stable(g, c),
    "f5": lambda g, c: G.is_vertex_plus_multipartite(g, c),
    "f6": lambda g, c: G.is_stable3(g, c) or G.is_vertex_plus_comatching(g, c),
}


def _core_and_cliques(g: Graph, parts: tuple[int, ...], pred: CompPred) -> bool:
    for i, core in enumerate(parts):
        if all(G.is_clique_mask(g, m) for j, m in enumerate(parts) if j != i):
            if all(pred(g, c) for c in G.complement_components(g, within=core)):
                return True
    return False


@lru_cache(maxsize=None)
def _case_checkers(kind: TreeClass) -> list[tuple[str, Callable[[Graph, tuple[int, ...]], bool]]]:
    if kind == TreeClass.NO_PM_NOT_SUBDIVIDED_STAR:
        return [("all_cliques", lambda g, ps: all(G.is_clique_mask(g, m) for m in ps))]
    if kind == TreeClass.SUBDIVIDED_STAR:
        return [
            ("all_cliques", lambda g, ps: all(G.is_clique_mask(g, m) for m in ps)),
            (
                "stable_and_cliques",
                lambda g, ps: any(
                    G.is_stable_mask(g, ps[i])
                    and all(G.is_clique_mask(g, m) for j, m in enumerate(ps) if j != i)
                    for i in range(len(ps))
                ),
            ),
        ]
    if kind == TreeClass.PM_GENERIC:
        return [
            ("f2_core_and_cliques", lambda g, ps: _core_and_cliques(g, ps, _CORE_PREDICATES["f2"]))
        ]
    if kind == TreeClass.SPIKED_NOT_STAR:
        return [
            (
                "two_comatchings_and_cliques",
                lambda g, ps: all(G.is_comatching_mask(g, m) for m in ps)
                and sum(1 for m in ps if not G.is_clique_mask(g, m)) <= 2,
            ),
            ("f6_core_and_cliques", lambda g, ps: _core_and_cliques(g, ps, _CORE_PREDICATES["f6"])),
        ]
    if kind == TreeClass.SPIKED_STAR:
        return [
            ("all_comatchings", lambda g, ps: all(G.is_comatching_mask(g, m) for m in ps)),
            ("f5_core_and_cliques", lambda g, ps: _core_and_cliques(g, ps, _CORE_PREDICATES["f5"])),
        ]
    if kind == TreeClass.DOUBLESTAR_NOT_P6:
        return [
            ("f3_core_and_cliques", lambda g, ps: _core_and_cliques(g, ps, _CORE_PREDICATES["f3"]))
        ]
    if kind == TreeClass.P6:
        return [
            ("f4_core_and_clique", lambda g, ps: _core_and_cliques(g, ps, _CORE_PREDICATES["f4"])),
            (
                "stable_and_comatching",
                lambda g, ps: any(
                    G.is_stable_mask(g, ps[i])
                    and all(
                        G.is_comatching_mask(g, m) for j, m in enumerate(ps) if j != i
                    )
                    for i in range(len(ps))
                ),
            ),
        ]
    raise UnsupportedClass(f"no shape characterization for class {kind.value}")


def shape_certifying_case(g: Graph, p: Partition, t: Tree) -> Optional[str]:
    """First matching shape case label for this tree's class, else None."""
    a = T.alpha(t)
    if p.w != a - 1:
        raise PartCountMismatch(f"need {a - 1} parts, got {p.w}")
    kind = T.classify(t).kind
    for label, check in _case_checkers(kind):
        if check(g, p.parts):
            return label
    return None


def structural_certifying(g: Graph, p: Partition, t: Tree) -> tuple[bool, Optional[str]]:
    """Shape disjunction for the tree's class; (ok, case label or failure tag)."""
    if not p.nonempty():
        raise CertifyError("structural check needs nonempty parts")
    case = shape_certifying_case(g, p, t)
    if case is None:
        return False, f"no_case:{T.classify(t).kind.value}"
    return True, case


def sound_certifying(g: Graph, p: Partition, t: Tree) -> bool:
    """Size-free shape check; implies witnessing, hence hosts are t-free."""
    if not p.nonempty():
        raise CertifyError("sound check needs nonempty parts")
    return shape_certifying_case(g, p, t) is not None


# ---------------------------------------------------------------------------
# exhaustive certificate search
# ---------------------------------------------------------------------------


def find_certifying(
    g: Graph,
    t: Tree,
    mode: str = "sound",
    size_threshold: Optional[int] = None,
    host_cap: int = 24,
) -> Optional[Partition]:
    """First partition (canonical order) passing the requested predicate.

    mode "sound": shape disjunction only; mode "interesting": shapes plus the
    interesting size conditions at the given threshold.  Partial assignments
    are pruned as soon as a part stops being P4-free, which every case shape
    requires.
    """
    if g.n > host_cap:
        raise HostTooLarge(f"exhaustive search capped at {host_cap} vertices")
    a = T.alpha(t)
    if a < 3:
        raise UnsupportedClass("need independence number at least three")
    w = a - 1
    if g.n < w:
        return None
    kind = T.classify(t).kind
    checkers = _case_checkers(kind)

    parts = [0] * w

    def ok_partial(v: int, part: int) -> bool:
        m = parts[part] | (1 << v)
        if m.bit_count() < 4:
            return True
        others = list(bits(parts[part]))
        for trio in itertools.combinations(others, 3):
            if G._p4_path(g, (*trio, v)) is not None:
                return False
        return True

    def assign(v: int, used: int) -> Optional[Partition]:
        if v == g.n:
            if used < w:
                return None
            cand = tuple(parts)
            for _, check in checkers:
                if check(g, cand):
                    p = Partition(g.n, cand)
                    if mode == "sound":
                        return p
                    okint, _, _ = is_interesting(g, p, t, size_threshold)
                    if okint:
                        return p
            return None
        # not enough vertices left to fill all parts
        if w - used > g.n - v:
            return None
        limit = min(used + 1, w)
        for i in range(limit):
            if ok_partial(v, i):
                parts[i] |= 1 << v
                res = assign(v + 1, max(used, i + 1))
                if res is not None:
                    return res
                parts[i] ^= 1 << v
        return None

    return assign(0, 0)


# ---------------------------------------------------------------------------
# safe families
# ---------------------------------------------------------------------------


def safe_member(j: Graph, h, c: int, s: int) -> bool:
    """No split of the pattern into c cliques, s stables, and a j-embeddable set."""
    hg = _as_graph(h)
    if hg.n > 10:
        raise HostTooLarge("pattern capped at 10 vertices")
    if c + s != wpn(hg) - 1:
        raise BadBudget(f"budgets must sum to wpn-1 = {wpn(hg) - 1}")
    table = _embeddable_subset_table(hg, j)
    full = hg.full_mask()
    for js in range(1 << hg.n):
        if not table[js]:
            continue
        rest = full & ~js
        if _exists_stable_clique_split(hg.induced(rest) if rest != full else hg, s, c):
            return False
    return True


# ---------------------------------------------------------------------------
# pervasive and dangerous sets
# ---------------------------------------------------------------------------


class PervasiveVerdict(NamedTuple):
    holds: bool
    exact: bool  # False only for a greedy "no" above the exact-search cap


def _copies_containing(j: Graph, f: Graph, v: int, avail: int) -> list[int]:
    """Vertex masks of induced copies of j inside avail that contain v."""
    if j.n == 0:
        return []
    found: set[int] = set()
    order = G._pattern_order(j)
    full = f.full_mask()
    co = [full ^ row ^ (1 << u) for u, row in enumerate(f.adj)]
    assign = [-1] * j.n

    def place(idx: int, used: int, seen_v: bool) -> None:
        if idx == j.n:
            if seen_v:
                found.add(used)
            return
        pv = order[idx]
        cand = avail & ~used
        for prev in range(idx):
            pu = order[prev]
            hu = assign[pu]
            cand &= f.adj[hu] if (j.adj[pv] >> pu & 1) else co[hu]
        if not seen_v and idx == j.n - 1:
            cand &= 1 << v
        for hv in bits(cand):
            assign[pv] = hv
            place(idx + 1, used | (1 << hv), seen_v or hv == v)
        assign[pv] = -1

    place(0, 0, False)
    return sorted(found)


def is_pervasive(j: Graph, f: Graph, q: int) -> PervasiveVerdict:
    """Are there q vertex-disjoint induced copies of j in f?

    Exact backtracking when q*|V(j)| <= 24; above that a greedy extraction
    gives a certified yes or an uncertain no (exact=False).
    """
    if j.n > 6:
        raise HostTooLarge("pervasive pattern capped at 6 vertices")
    return _pervasive_core(j, f, q)


def _pervasive_core(j: Graph, f: Graph, q: int) -> PervasiveVerdict:
    if q <= 0 or j.n == 0:
        return PervasiveVerdict(True, True)
    full = f.full_mask()
    if q * j.n <= 24:
        def search(avail: int, need: int) -> bool:
            if need == 0:
                return True
            if avail.bit_count() < need * j.n:
                return False
            v = (avail & -avail).bit_length() - 1
            for copy in _copies_containing(j, f, v, avail):
                if search(avail & ~copy, need - 1):
                    return True
            return search(avail ^ (1 << v), need)

        return PervasiveVerdict(search(full, q), True)
    avail = full
    count = 0
    while count < q:
        copy = None
        for v in bits(avail):
            cs = _copies_containing(j, f, v, avail)
            if cs:
                copy = cs[0]
                break
        if copy is None:
            return PervasiveVerdict(False, False)
        avail &= ~copy
        count += 1
    return PervasiveVerdict(True, True)


def is_dangerous(d, pat: Pattern, h, q: int) -> bool:
    """Does some pattern-block partition of h put an isomorph of F_k[D] on
    part k and q-pervasive blocks everywhere else?"""
    hg = _as_graph(h)
    if hg.n > 8:
        raise HostTooLarge("pattern capped at 8 vertices")
    d_mask = d if isinstance(d, int) else mask_of(d)
    k = None
    for i, m in enumerate(pat.partition.parts):
        if d_mask & ~m == 0:
            k = i
            break
    if k is None:
        raise NotWithinOnePart("the set must lie inside one part")
    part_mask = pat.partition.parts[k]
    local = {v: i for i, v in enumerate(bits(part_mask))}
    d_local = mask_of(local[v] for v in bits(d_mask))
    target = pat.graphs[k].induced(d_local)
    target_key = G.canonical_form(target)

    w = pat.partition.w
    full = hg.full_mask()
    candidates = [
        m
        for m in range(1 << hg.n)
        if m.bit_count() == target.n and G.canonical_form(hg.induced(m)) == target_key
    ]

    @lru_cache(maxsize=None)
    def pervasive_block(block: int, part: int) -> bool:
        return _pervasive_core(hg.induced(block), pat.graphs[part], q).holds

    others = [i for i in range(w) if i != k]

    def assign(rest: int, idx: int) -> bool:
        # split rest among the other parts; blocks checked at the end per part
        if idx == len(others) - 1:
            return pervasive_block(rest, others[idx])
        part = others[idx]
        sub = rest
        while True:
            if pervasive_block(sub, part) and assign(rest & ~sub, idx + 1):
                return True
            if sub == 0:
                return False
            sub = (sub - 1) & rest

    for sk in candidates:
        rest = full & ~sk
        if not others:
            if rest == 0:
                return True
            continue
        if assign(rest, 0):
            return True
    return False


# ---------------------------------------------------------------------------
# edge-disjoint transversal cliques via a finite field
# ---------------------------------------------------------------------------

_IRREDUCIBLE = {(2, 2): 0b111, (2, 3): 0b1011, (2, 4): 0b10011, (3, 2): (1, 0, 1)}


def _field_tables(q: int) -> tuple[list[list[int]], list[list[int]]]:
    """Addition and multiplication tables of the field with q elements."""
    for p in (2, 3, 5, 7, 11, 13):
        k = 0
        qq = 1
        while qq < q:
            qq *= p
            k += 1
        if qq == q:
            break
    else:
        raise CertifyError(f"{q} is not a supported prime power")
    if k == 1:
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        return add, mul
    # elements are base-p digit vectors encoded as ints
    def digits(x: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return out

    def undigits(ds: list[int]) -> int:
        x = 0
        for d in reversed(ds):
            x = x * p + d
        return x

    if p == 2:
        poly = _IRREDUCIBLE[(2, k)]

        def mul2(a: int, b: int) -> int:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> k & 1:
                    a ^= poly
            return r

        add = [[a ^ b for b in range(q)] for a in range(q)]
        mul = [[mul2(a, b) for b in range(q)] for a in range(q)]
        return add, mul
    # p == 3, k == 2: reduce with x^2 = -1
    def mul3(a: int, b: int) -> int:
        a0, a1 = a % 3, a // 3
        b0, b1 = b % 3, b // 3
        c0 = (a0 * b0 - a1 * b1) % 3
        c1 = (a0 * b1 + a1 * b0) % 3
        return c1 * 3 + c0

    def add3(a: int, b: int) -> int:
        return ((a + b) % 3) + 3 * ((a // 3 + b // 3) % 3)

    add = [[add3(a, b) for b in range(q)] for a in range(q)]
    mul = [[mul3(a, b) for b in range(q)] for a in range(q)]
    return add, mul


def _least_prime_power_at_least(j: int) -> int:
    q = j
    while True:
        x = q
        for p in (2, 3, 5, 7, 11, 13):
            while x % p == 0:
                x //= p
        if x == 1:
            # q must be a power of a single prime
            for p in (2, 3, 5, 7, 11, 13):
                if q % p == 0:
                    qq = q
                    while qq % p == 0:
                        qq //= p
                    if qq == 1:
                        return q
        q += 1


def largest_prime_at_most(x: int) -> int:
    for c in range(x, 1, -1):
        if all(c % d for d in range(2, int(c**0.5) + 1)):
            return c
    raise CertifyError("no prime at most " + str(x))


@dataclass(frozen=True)
class CliqueConstruction:
    j: int  # clique size = number of parts
    q: int  # part size (least prime power >= j)
    r: int  # largest prime <= j-1; at least r*r cliques guaranteed
    cliques: tuple[tuple[int, ...], ...]  # global ids; part i holds [i*q, (i+1)*q)


def edge_disjoint_cliques(j: int) -> CliqueConstruction:
    """q^2 transversal cliques in the complete j-partite host, parts of size q,
    pairwise sharing at most one vertex (hence edge-disjoint); verified."""
    if not 3 <= j <= 16:
        raise CertifyError("supported for 3 <= j <= 16")
    q = _least_prime_power_at_least(j)
    r = largest_prime_at_most(j - 1)
    add, mul = _field_tables(q)
    cliques = []
    for a in range(q):
        for b in range(q):
            cliques.append(tuple(i * q + add[a][mul[b][i]] for i in range(j)))
    for c in cliques:
        slots = [v - i * q for i, v in enumerate(c)]
        if any(not 0 <= s < q for s in slots):
            raise AssertionError("clique leaves its parts")
    for c1, c2 in itertools.combinations(cliques, 2):
        if len(set(c1) & set(c2)) > 1:
            raise AssertionError("two cliques share an edge")
    if len(cliques) < r * r:
        raise AssertionError("too few cliques")
    return CliqueConstruction(j, q, r, tuple(cliques))

"""Exhaustive and sampled census engines.

The exhaustive census walks every labeled graph on n vertices in edge-mask
order, counts the hosts avoiding the tree, and among those counts the hosts
admitting at least one sound certifying split (all splits are counted for the
certificates-per-graph ratio).  Work shards by contiguous edge-mask ranges and
merges partial sums in shard order, so reports are identical for any shard
count and any split point.

The sampled engine builds planted "interesting" partitions per tree class,
optionally perturbs one intra-part pair, and checks that the structural shape
predicate agrees with brute-force witnessing on every sample.
"""

from __future__ import annotations

import itertools
import os
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from . import certify as C
from . import graphs as G
from .graphs import Graph, bits, encode_graph6, mask_of, parse_graph6
from . import trees as T
from .trees import Tree, TreeClass


def _log(msg: str) -> None:
    if os.environ.get("TFREE_LOG"):
        print(msg, file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# labeled-graph enumeration
# ---------------------------------------------------------------------------


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows), _validated=True)


def enumerate_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """All labeled graphs in edge-mask order; restartable from any index."""
    if n > 8:
        raise C.HostTooLarge("full labeled enumeration capped at 8 vertices")
    total = 1 << (n * (n - 1) // 2)
    end = total if stop is None else min(stop, total)
    for mask in range(start, end):
        yield graph_from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# census kernel
# ---------------------------------------------------------------------------

_SPOT_MOD = 10007  # deterministic t-freeness re-verification stride


def _pattern_tables(t: Tree, n: int):
    """Per vertex-subset chunk tables turning an edge mask into the local
    induced mask, plus the set of local masks isomorphic to the tree."""
    tn = t.n
    perms = itertools.permutations(range(tn))
    local_pos = {}
    k = 0
    for j in range(1, tn):
        for i in range(j):
            local_pos[(i, j)] = k
            k += 1
    targets = set()
    for perm in perms:
        m = 0
        for a, b in t.edges:
            x, y = perm[a], perm[b]
            m |= 1 << local_pos[(min(x, y), max(x, y))]
        targets.add(m)
    npairs = n * (n - 1) // 2
    nchunks = (npairs + 7) // 8
    pos = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            pos[(i, j)] = k
            k += 1
    tables = []
    for u in itertools.combinations(range(n), tn):
        rank = {v: r for r, v in enumerate(u)}
        chunk = [[0] * 256 for _ in range(nchunks)]
        for (i, j), p in pos.items():
            if i in rank and j in rank:
                lp = local_pos[(rank[i], rank[j])]
                c, b = divmod(p, 8)
                for byte in range(256):
                    if byte >> b & 1:
                        chunk[c][byte] |= 1 << lp
        tables.append(chunk)
    return tables, targets, nchunks


def _adj_from_mask(n: int, mask: int) -> list[int]:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return rows


def _fill_flags(n: int, adj: list[int]):
    """clique/stable/comatching flags for every vertex-subset mask."""
    size = 1 << n
    clq = bytearray(size)
    stb = bytearray(size)
    com = bytearray(size)
    clq[0] = stb[0] = com[0] = 1
    for m in range(1, size):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        av = adj[v]
        clq[m] = clq[rest] and (av & rest) == rest
        stb[m] = stb[rest] and (av & rest) == 0
        if com[rest]:
            miss = rest & ~av
            c = miss.bit_count()
            if c == 0:
                com[m] = 1
            elif c == 1:
                u = miss.bit_length() - 1
                if (rest & ~adj[u] & ~miss) == 0:
                    com[m] = 1
    return clq, stb, com


def _components_within(adj: list[int], m: int) -> list[int]:
    comps = []
    rest = m
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v] & m & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def _core_checker(kind: TreeClass):
    """Per-component predicate of the class's core case, or None."""
    pred = {
        TreeClass.PM_GENERIC: C._CORE_PREDICATES["f2"],
        TreeClass.SPIKED_NOT_STAR: C._CORE_PREDICATES["f6"],
        TreeClass.SPIKED_STAR: C._CORE_PREDICATES["f5"],
        TreeClass.DOUBLESTAR_NOT_P6: C._CORE_PREDICATES["f3"],
        TreeClass.P6: C._CORE_PREDICATES["f4"],
    }.get(kind)
    return pred


@dataclass
class _Partial:
    graphs: int = 0
    t_free: int = 0
    certified: int = 0
    pairs: int = 0
    hist: dict = field(default_factory=dict)
    spot_checked: int = 0


def _census_shard(args) -> _Partial:
    tree_g6, n, start, stop = args
    t = T.tree_from_graph(parse_graph6(tree_g6))
    kind = T.classify(t).kind
    w = T.alpha(t) - 1
    detect = None
    if n >= t.n:
        detect = _pattern_tables(t, n)
    out = _Partial()
    if w == 2:
        _census_shard_w2(t, kind, n, start, stop, detect, out)
    else:
        _census_shard_generic(t, n, start, stop, detect, out)
    return out


def _contains_pattern(mask: int, detect, nchunks: int) -> bool:
    tables, targets, _ = detect
    chunks = [(mask >> (8 * c)) & 255 for c in range(nchunks)]
    for chunk in tables:
        local = 0
        for c in range(nchunks):
            local |= chunk[c][chunks[c]]
        if local in targets:
            return True
    return False


def _census_shard_w2(t, kind, n, start, stop, detect, out) -> None:
    full = (1 << n) - 1
    nchunks = 0 if detect is None else detect[2]
    core_pred = _core_checker(kind)
    # case plan: ordered (label, kind) pairs evaluated per split
    sub_splits = [s for s in range(1, full) if s & 1]
    fam_label = {
        TreeClass.PM_GENERIC: "f2_core_and_cliques",
        TreeClass.SPIKED_NOT_STAR: "f6_core_and_cliques",
        TreeClass.SPIKED_STAR: "f5_core_and_cliques",
        TreeClass.DOUBLESTAR_NOT_P6: "f3_core_and_cliques",
        TreeClass.P6: "f4_core_and_clique",
    }.get(kind)
    hist = out.hist
    for mask in range(start, stop):
        out.graphs += 1
        if detect is not None and _contains_pattern(mask, detect, nchunks):
            continue
        out.t_free += 1
        adj = _adj_from_mask(n, mask)
        clq, stb, com = _fill_flags(n, adj)
        co_adj = [full ^ row ^ (1 << v) for v, row in enumerate(adj)]
        g = None
        core_memo: dict[int, bool] = {}

        def core_ok(side: int) -> bool:
            nonlocal g
            got = core_memo.get(side)
            if got is None:
                if g is None:
                    g = Graph(n, tuple(adj), _validated=True)
                got = all(
                    core_pred(g, c) for c in _components_within(co_adj, side)
                )
                core_memo[side] = got
            return got

        first_label = None
        pairs = 0
        for s in sub_splits:
            o = full ^ s
            label = None
            if kind == TreeClass.NO_PM_NOT_SUBDIVIDED_STAR:
                if clq[s] and clq[o]:
                    label = "all_cliques"
            elif kind == TreeClass.SUBDIVIDED_STAR:
                if clq[s] and clq[o]:
                    label = "all_cliques"
                elif (stb[s] and clq[o]) or (stb[o] and clq[s]):
                    label = "stable_and_cliques"
            elif kind == TreeClass.SPIKED_STAR:
                if com[s] and com[o]:
                    label = "all_comatchings"
                elif (clq[s] and core_ok(o)) or (clq[o] and core_ok(s)):
                    label = fam_label
            elif kind == TreeClass.P6:
                if (clq[s] and core_ok(o)) or (clq[o] and core_ok(s)):
                    label = fam_label
                elif (stb[s] and com[o]) or (stb[o] and com[s]):
                    label = "stable_and_comatching"
            else:
                # remaining two-part classes use their core case only
                if (clq[s] and core_ok(o)) or (clq[o] and core_ok(s)):
                    label = fam_label
            if label is not None:
                pairs += 1
                if first_label is None:
                    first_label = label
        if first_label is not None:
            out.certified += 1
            out.pairs += pairs
            hist[first_label] = hist.get(first_label, 0) + 1
            if mask % _SPOT_MOD == 0:
                out.spot_checked += 1
                gg = Graph(n, tuple(adj), _validated=True)
                if G.induced_embedding(t.to_graph(), gg) is not None:
                    raise AssertionError("certified graph contains the tree")


def _census_shard_generic(t, n, start, stop, detect, out) -> None:
    w = T.alpha(t) - 1
    nchunks = 0 if detect is None else detect[2]
    for mask in range(start, stop):
        out.graphs += 1
        if detect is not None and _contains_pattern(mask, detect, nchunks):
            continue
        out.t_free += 1
        g = graph_from_edge_mask(n, mask)
        first_label = None
        pairs = 0
        for parts in _canonical_partitions(n, w):
            label = C.shape_certifying_case(g, C.Partition(n, parts), t)
            if label is not None:
                pairs += 1
                if first_label is None:
                    first_label = label
        if first_label is not None:
            out.certified += 1
            out.pairs += pairs
            out.hist[first_label] = out.hist.get(first_label, 0) + 1


def _canonical_partitions(n: int, w: int) -> Iterator[tuple[int, ...]]:
    """Ordered partitions into w nonempty parts, first occurrences increasing."""

    parts = [0] * w

    def assign(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            if used == w:
                yield tuple(parts)
            return
        if w - used > n - v:
            return
        for i in range(min(used + 1, w)):
            parts[i] |= 1 << v
            yield from assign(v + 1, max(used, i + 1))
            parts[i] ^= 1 << v

    yield from assign(0, 0)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

CENSUS_SCHEMA = "tfree-census/1"


@dataclass
class CensusReport:
    tree_id: str
    n: int
    total_graphs: int
    t_free: int
    sound_certified: int
    shape_histogram: dict[str, int]
    avg_certificates_per_graph: Fraction
    runtime_ms: int
    shard_count: int

    def proportion_certified(self) -> Fraction:
        return Fraction(self.sound_certified, self.t_free) if self.t_free else Fraction(0)

    def to_json_dict(self) -> dict:
        return {
            "schema": CENSUS_SCHEMA,
            "tree_id": self.tree_id,
            "n": self.n,
            "total_graphs": self.total_graphs,
            "t_free": self.t_free,
            "sound_certified": self.sound_certified,
            "shape_histogram": dict(sorted(self.shape_histogram.items())),
            "avg_certificates_per_graph": str(self.avg_certificates_per_graph),
            "runtime_ms": self.runtime_ms,
            "shard_count": self.shard_count,
        }

    def comparable(self) -> tuple:
        """Everything except runtime and shard bookkeeping."""
        return (
            self.tree_id,
            self.n,
            self.total_graphs,
            self.t_free,
            self.sound_certified,
            tuple(sorted(self.shape_histogram.items())),
            self.avg_certificates_per_graph,
        )


def shard_ranges(total: int, shards: int) -> list[tuple[int, int]]:
    step = (total + shards - 1) // shards
    return [(i * step, min((i + 1) * step, total)) for i in range(shards) if i * step < total]


def run_census(
    t: Tree,
    n: int,
    shards: int = 1,
    long_run: bool = False,
    processes: Optional[int] = None,
) -> CensusReport:
    """Exact census of tree-free and sound-certified labeled graphs on n vertices."""
    if T.alpha(t) < 3:
        raise C.UnsupportedClass("census needs independence number at least three")
    cap = 8 if long_run else 7
    if n > cap:
        raise C.HostTooLarge(f"census capped at {cap} vertices (long_run={long_run})")
    t0 = time.monotonic()
    total = 1 << (n * (n - 1) // 2)
    tree_g6 = encode_graph6(t.to_graph())
    jobs = [(tree_g6, n, a, b) for a, b in shard_ranges(total, shards)]
    if len(jobs) == 1 or (processes is not None and processes <= 1):
        partials = [_census_shard(j) for j in jobs]
    else:
        nproc = processes or min(len(jobs), os.cpu_count() or 1)
        with Pool(processes=nproc) as pool:
            partials = list(pool.imap(_census_shard, jobs, chunksize=1))
    merged = _Partial()
    for p in partials:  # shard order fixed by job order
        merged.graphs += p.graphs
        merged.t_free += p.t_free
        merged.certified += p.certified
        merged.pairs += p.pairs
        merged.spot_checked += p.spot_checked
        for k, v in p.hist.items():
            merged.hist[k] = merged.hist.get(k, 0) + v
    if merged.graphs != total:
        raise AssertionError("shards did not cover the full range")
    if not merged.certified <= merged.t_free <= total:
        raise AssertionError("census counter ordering violated")
    runtime_ms = int((time.monotonic() - t0) * 1000)
    _log(f"census {tree_g6} n={n}: t_free={merged.t_free} certified={merged.certified} ({runtime_ms} ms)")
    return CensusReport(
        tree_id=T.tree_id(t),
        n=n,
        total_graphs=total,
        t_free=merged.t_free,
        sound_certified=merged.certified,
        shape_histogram=dict(merged.hist),
        avg_certificates_per_graph=Fraction(merged.pairs, merged.certified)
        if merged.certified
        else Fraction(0),
        runtime_ms=runtime_ms,
        shard_count=len(jobs),
    )


@dataclass
class TrendReport:
    tree_id: str
    points: list[tuple[int, int, int, Fraction]]  # (n, t_free, certified, proportion)
    trend_holds: Optional[bool]  # None when the range spans less than 2

    def to_json_dict(self) -> dict:
        return {
            "schema": "tfree-trend/1",
            "tree_id": self.tree_id,
            "points": [
                {"n": n, "t_free": tf, "sound_certified": sc, "proportion": str(p)}
                for n, tf, sc, p in self.points
            ],
            "trend_holds": self.trend_holds,
        }

    def csv_rows(self) -> list[str]:
        rows = ["tree_id,n,t_free,sound_certified,proportion"]
        for n, tf, sc, p in self.points:
            rows.append(f"{self.tree_id},{n},{tf},{sc},{float(p):.6f}")
        return rows


def trend(t: Tree, n_range: Iterable[int], shards: int = 1, long_run: bool = False) -> TrendReport:
    """Certified proportions per n; soft trend assertion over spans >= 2."""
    ns = sorted(n_range)
    points = []
    for n in ns:
        rep = run_census(t, n, shards=shards, long_run=long_run)
        points.append((n, rep.t_free, rep.sound_certified, rep.proportion_certified()))
    holds: Optional[bool] = None
    if len(ns) >= 2 and ns[-1] >= ns[0] + 2:
        holds = points[-1][3] > points[0][3]
    return TrendReport(T.tree_id(t), points, holds)


# ---------------------------------------------------------------------------
# planted instances and sampled equivalence
# ---------------------------------------------------------------------------

_CASES_BY_CLASS: dict[TreeClass, list[str]] = {
    TreeClass.NO_PM_NOT_SUBDIVIDED_STAR: ["all_cliques"],
    TreeClass.SUBDIVIDED_STAR: ["all_cliques", "stable_and_cliques"],
    TreeClass.PM_GENERIC: ["f2_core_and_cliques"],
    TreeClass.SPIKED_NOT_STAR: ["two_comatchings_and_cliques", "f6_core_and_cliques"],
    TreeClass.SPIKED_STAR: ["all_comatchings", "f5_core_and_cliques"],
    TreeClass.DOUBLESTAR_NOT_P6: ["f3_core_and_cliques"],
    TreeClass.P6: ["f4_core_and_clique", "stable_and_comatching"],
}


def _random_comatching_rows(size: int, reserve: int, rng: random.Random) -> list[int]:
    """Complement-of-matching rows keeping a clique of at least `reserve`."""
    vs = list(range(size))
    rng.shuffle(vs)
    max_pairs = max(0, (size - reserve) // 2)
    npairs = rng.randint(0, max_pairs)
    full = (1 << size) - 1
    rows = [full ^ (1 << v) for v in range(size)]
    for i in range(npairs):
        a, b = vs[2 * i], vs[2 * i + 1]
        rows[a] ^= 1 << b
        rows[b] ^= 1 << a
    return rows


def _random_core_rows(size: int, fam: str, plant: int, rng: random.Random) -> list[int]:
    """Join of family components with one planted high-clique or stable block."""
    rows = [0] * size
    vs = list(range(size))
    rng.shuffle(vs)

    def add_clique(members: list[int]) -> None:
        for a, b in itertools.combinations(members, 2):
            rows[a] |= 1 << b
            rows[b] |= 1 << a

    blocks: list[list[int]] = []
    plant_stable = fam in ("f3", "f4") and rng.random() < 0.5
    take = min(plant + (0 if plant_stable else 1), size)
    blocks.append(vs[:take])
    rest = vs[take:]
    while rest:
        hi = min(len(rest), 5)
        s = rng.randint(1, hi)
        blocks.append(rest[:s])
        rest = rest[s:]
    for bi, block in enumerate(blocks):
        planted_here = bi == 0
        if planted_here and plant_stable:
            continue  # stable block: no internal edges
        if planted_here:
            add_clique(block[1:])  # vertex + clique (clique of size >= plant)
            continue
        s = len(block)
        if fam == "f2":
            if s == 3 and rng.random() < 0.5:
                pass  # stable triple
            else:
                add_clique(block[1:])
        elif fam == "f3":
            if rng.random() < 0.5:
                pass  # stable block of any size
            else:
                add_clique(block[1:])
        elif fam == "f4":
            q = rng.randint(0, s - 1) if s > 1 else 0
            if q == 1:
                q = 0  # a 1-clique plus stable is just stable
            add_clique(block[:q])
        elif fam == "f5":
            # vertex plus complete multipartite on the rest
            parts: list[list[int]] = []
            for v in block[1:]:
                if parts and rng.random() < 0.5:
                    rng.choice(parts).append(v)
                else:
                    parts.append([v])
            for pa, pb in itertools.combinations(parts, 2):
                for a in pa:
                    for b in pb:
                        rows[a] |= 1 << b
                        rows[b] |= 1 << a
        elif fam == "f6":
            if s == 3 and rng.random() < 0.5:
                pass  # stable triple
            else:
                # vertex plus complement of a matching
                inner = block[1:]
                add_clique(inner)
                k = len(inner)
                for i in range(rng.randint(0, k // 2)):
                    a, b = inner[2 * i], inner[2 * i + 1]
                    rows[a] ^= 1 << b
                    rows[b] ^= 1 << a
        else:
            raise ValueError(fam)
    # join all blocks pairwise
    for ba, bb in itertools.combinations(blocks, 2):
        for a in ba:
            for b in bb:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return rows


def planted_instance(
    t: Tree, n: int, rng: random.Random, case: Optional[str] = None
) -> tuple[Graph, C.Partition, str]:
    """A host graph and partition built from one certifying case's families, with
    planted cliques/stables meeting the interesting size conditions."""
    kind = T.classify(t).kind
    cases = _CASES_BY_CLASS[kind]
    label = case if case is not None else rng.choice(cases)
    w = T.alpha(t) - 1
    from .counting import balanced_sizes

    sizes = balanced_sizes(n, w)
    tau = t.n
    plant = tau + 1
    offsets = [sum(sizes[:i]) for i in range(w)]
    rows_global = [0] * n

    def paste(local_rows: list[int], off: int) -> None:
        for v, row in enumerate(local_rows):
            rows_global[off + v] |= row << off

    def clique_rows(size: int) -> list[int]:
        full = (1 << size) - 1
        return [full ^ (1 << v) for v in range(size)]

    for i, size in enumerate(sizes):
        off = offsets[i]
        if label == "all_cliques":
            paste(clique_rows(size), off)
        elif label == "stable_and_cliques":
            if i > 0:
                paste(clique_rows(size), off)
        elif label == "all_comatchings":
            paste(_random_comatching_rows(size, plant, rng), off)
        elif label == "two_comatchings_and_cliques":
            if i < 2:
                paste(_random_comatching_rows(size, plant, rng), off)
            else:
                paste(clique_rows(size), off)
        elif label == "stable_and_comatching":
            if i == 1:
                paste(_random_comatching_rows(size, plant, rng), off)
        elif label.endswith("_and_cliques") or label == "f4_core_and_clique":
            if i == 0:
                fam = label.split("_core")[0]
                paste(_random_core_rows(size, fam, plant, rng), off)
            else:
                paste(clique_rows(size), off)
        else:
            raise ValueError(label)
    # fair cross edges
    for i, j in itertools.combinations(range(w), 2):
        for a in range(offsets[i], offsets[i] + sizes[i]):
            for b in range(offsets[j], offsets[j] + sizes[j]):
                if rng.getrandbits(1):
                    rows_global[a] |= 1 << b
                    rows_global[b] |= 1 << a
    parts = tuple(
        ((1 << sizes[i]) - 1) << offsets[i] for i in range(w)
    )
    g = Graph(n, tuple(rows_global), _validated=True)
    return g, C.Partition(n, parts), label


def perturb_once(g: Graph, p: C.Partition, rng: random.Random) -> Graph:
    """Flip one uniformly random intra-part pair."""
    pools = [m for m in p.parts if m.bit_count() >= 2]
    m = rng.choice(pools)
    vs = list(bits(m))
    a, b = rng.sample(vs, 2)
    rows = list(g.adj)
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return Graph(g.n, tuple(rows), _validated=True)


@dataclass
class EquivalenceReport:
    tree_id: str
    n: int
    samples: int
    perturbed: int
    rejected: int  # perturbations discarded for breaking the interesting conditions
    discrepancies: list[dict]

    def to_json_dict(self) -> dict:
        return {
            "schema": "tfree-equivalence/1",
            "tree_id": self.tree_id,
            "n": self.n,
            "samples": self.samples,
            "perturbed": self.perturbed,
            "rejected": self.rejected,
            "discrepancies": self.discrepancies,
        }


def _equivalence_shard(args) -> tuple[int, int, list[dict]]:
    tree_g6, n, seed, lo, hi = args
    t = T.tree_from_graph(parse_graph6(tree_g6))
    tau = t.n
    perturbed = 0
    rejected = 0
    discrepancies: list[dict] = []
    for i in range(lo, hi):
        rng = random.Random(f"{seed}:{i}")
        g, p, label = planted_instance(t, n, rng)
        if i % 2 == 1:
            tries = 0
            while True:
                g2 = perturb_once(g, p, rng)
                ok, _, _ = C.is_interesting(g2, p, t, tau)
                if ok:
                    g = g2
                    perturbed += 1
                    break
                rejected += 1
                tries += 1
                if tries >= 64:
                    break  # keep the planted instance
        ok, _, fail = C.is_interesting(g, p, t, tau)
        if not ok:
            raise AssertionError(f"generator produced non-interesting sample: {fail}")
        structural, _ = C.structural_certifying(g, p, t)
        witnessing = C.is_witnessing(g, p, t).witnessing
        if structural != witnessing:
            discrepancies.append(
                {
                    "sample": i,
                    "case": label,
                    "graph6": encode_graph6(g),
                    "parts": p.to_vector(),
                    "structural": structural,
                    "witnessing": witnessing,
                }
            )
    return perturbed, rejected, discrepancies


def sampled_equivalence(
    t: Tree,
    n: int,
    samples: int,
    seed: int,
    shards: int = 1,
    processes: Optional[int] = None,
) -> EquivalenceReport:
    """Planted + perturbed instances; structural and witnessing must agree.

    Sampling is per-index seeded, so the report is shard-count invariant.
    """
    if n < 4 * t.n:
        raise ValueError("hosts must have at least four vertices per tree vertex")
    tree_g6 = encode_graph6(t.to_graph())
    jobs = [
        (tree_g6, n, seed, lo, hi) for lo, hi in shard_ranges(samples, shards)
    ]
    if len(jobs) == 1 or (processes is not None and processes <= 1):
        results = [_equivalence_shard(j) for j in jobs]
    else:
        nproc = processes or min(len(jobs), os.cpu_count() or 1)
        with Pool(processes=nproc) as pool:
            results = list(pool.imap(_equivalence_shard, jobs, chunksize=1))
    perturbed = sum(r[0] for r in results)
    rejected = sum(r[1] for r in results)
    discrepancies = [d for r in results for d in r[2]]
    return EquivalenceReport(T.tree_id(t), n, samples, perturbed, rejected, discrepancies)

"""Shared independent oracles for the test suite.

Everything here is deliberately implemented by a different route than the
package code it checks: cographs come from canonical cotrees rather than
quartet scans, labeled trees from sequence decoding rather than leaf
augmentation, matchings and stable sets from direct enumeration.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from tfree.graphs import Graph
from tfree.trees import Tree


# ---------------------------------------------------------------------------
# cotree enumeration: all cographs up to isomorphism
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def connected_cographs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    out = []
    for combo in _multisets(n, co_connected_cographs, 2):
        g = combo[0]
        for h in combo[1:]:
            g = g.join(h)
        out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def co_connected_cographs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    return tuple(g.complement() for g in connected_cographs(n))


def _multisets(total: int, pool, min_parts: int) -> list[list[Graph]]:
    """Multisets of graphs from pool(s) with sizes summing to total,
    canonical non-decreasing (size, index) order; unique per multiset."""
    results: list[list[Graph]] = []

    def rec(remaining: int, min_size: int, min_idx: int, acc: list[Graph]) -> None:
        if remaining == 0:
            if len(acc) >= min_parts:
                results.append(list(acc))
            return
        # leave room for at least min_parts blocks of size >= 1 overall
        max_size = remaining - max(0, min_parts - len(acc) - 1)
        for size in range(min_size, max_size + 1):
            items = pool(size)
            start = min_idx if size == min_size else 0
            for idx in range(start, len(items)):
                acc.append(items[idx])
                rec(remaining - size, size, idx, acc)
                acc.pop()

    rec(total, 1, 0, [])
    return results


@lru_cache(maxsize=None)
def cographs(n: int) -> tuple[Graph, ...]:
    """All cographs on n vertices up to isomorphism, via canonical cotrees."""
    if n == 1:
        return (Graph.empty(1),)
    out = list(connected_cographs(n))
    for combo in _multisets(n, connected_cographs, 2):
        g = combo[0]
        for h in combo[1:]:
            g = g.disjoint_union(h)
        out.append(g)
    return tuple(out)


# ---------------------------------------------------------------------------
# labeled trees from integer sequences (independent of leaf augmentation)
# ---------------------------------------------------------------------------


def labeled_trees(n: int):
    """All labeled trees on n vertices by decoding all (n-2)-sequences."""
    if n == 1:
        yield Tree(1, [])
        return
    if n == 2:
        yield Tree(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield Tree(n, _decode_sequence(n, list(seq)))


def _decode_sequence(n: int, seq: list[int]) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((leaf, v))
                degree[leaf] -= 1
                degree[v] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


# ---------------------------------------------------------------------------
# brute-force basics
# ---------------------------------------------------------------------------


def brute_max_stable(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
                return k
    return best


def brute_matchings(l: int) -> int:
    """Count matchings on l labeled vertices by direct recursion."""

    def count(vertices: tuple[int, ...]) -> int:
        if len(vertices) <= 1:
            return 1
        first, rest = vertices[0], vertices[1:]
        total = count(rest)  # first unmatched
        for i in range(len(rest)):
            total += count(rest[:i] + rest[i + 1:])
        return total

    return count(tuple(range(l)))


def brute_embedding_exists(pattern: Graph, host: Graph) -> bool:
    """Exhaustive placement search over all injections."""
    for combo in itertools.permutations(range(host.n), pattern.n):
        if all(
            pattern.has_edge(a, b) == host.has_edge(combo[a], combo[b])
            for a, b in itertools.combinations(range(pattern.n), 2)
        ):
            return True
    return False


def random_graph(n: int, rng) -> Graph:
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(n), 2)
        if rng.getrandbits(1)
    ]
    return Graph.from_edges(n, edges)

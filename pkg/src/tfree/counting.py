"""Exact counting of the certified graph families, with bound evaluators.

All counts are exact big integers.  Asymptotic displays are evaluated only as
log2 point values (GrowthEstimate) for reports and are never asserted as
counts.  The per-component closed counts underlying count_family are locked
against an all-graphs oracle in the tests before use at large sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .certify import Partition, UnsupportedClass
from .graphs import Family, Graph, family_member
from .trees import Tree, TreeClass, alpha, classify

LOG2E = math.log2(math.e)


def log2_int(x: int) -> float:
    """log2 of a positive big integer, via the leading 53 bits."""
    if x <= 0:
        raise ValueError("positive integers only")
    shift = max(0, x.bit_length() - 53)
    return shift + math.log2(x >> shift)


# ---------------------------------------------------------------------------
# Bell numbers
# ---------------------------------------------------------------------------

_BELL: list[int] = [1]  # Bell(0)
_BELL_ROW: list[int] = [1]  # last Bell-triangle row


def bell(n: int) -> int:
    """Exact Bell number via the Bell-triangle recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    global _BELL_ROW
    while len(_BELL) <= n:
        row = [_BELL_ROW[-1]]
        for x in _BELL_ROW:
            row.append(row[-1] + x)
        _BELL_ROW = row
        _BELL.append(row[0])
    return _BELL[n]


def bell_bounds(n: int) -> tuple[float, float]:
    """(log2 lower, log2 upper) bounds sandwiching Bell(n) for n >= 2."""
    if n < 2:
        raise ValueError("bounds need n >= 2")
    low = n * (math.log2(n) - math.log2(math.e) - math.log2(math.log(n)))
    high = n * (math.log2(0.792 * n) - math.log2(math.log(n + 1)))
    return low, high


BELL_EXACT_CAP = 300  # beyond this the log-space lower bound stands in


def bell_log2(n: int) -> float:
    """log2 Bell number: exact up to BELL_EXACT_CAP, the closed lower bound
    beyond (the only large-n use is as a lower bound)."""
    if n <= BELL_EXACT_CAP:
        return log2_int(bell(n))
    return bell_bounds(n)[0]


def set_partitions(items: list) -> Iterable[list[list]]:
    """All set partitions of a list (exponential; oracle use only)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


# ---------------------------------------------------------------------------
# telephone numbers (matchings on labeled vertices)
# ---------------------------------------------------------------------------

_TELEPHONE: list[int] = [1, 1]


def matchings_count(l: int) -> int:
    """Number of matchings on l labeled vertices: T(l) = T(l-1) + (l-1)T(l-2)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    while len(_TELEPHONE) <= l:
        k = len(_TELEPHONE)
        _TELEPHONE.append(_TELEPHONE[k - 1] + (k - 1) * _TELEPHONE[k - 2])
    return _TELEPHONE[l]


def matchings_estimate_log2(l: int) -> float:
    """log2 of (l/e)^(l/2) * e^sqrt(l) / (4e)^(1/4)."""
    if l < 2:
        raise ValueError("estimate needs l >= 2")
    return (
        (l / 2) * (math.log2(l) - LOG2E)
        + math.sqrt(l) * LOG2E
        - 0.25 * math.log2(4 * math.e)
    )


def matchings_estimate_ratio(l: int) -> float:
    """T(l) divided by the closed-form estimate."""
    return 2.0 ** (log2_int(matchings_count(l)) - matchings_estimate_log2(l))


# ---------------------------------------------------------------------------
# the four component families
# ---------------------------------------------------------------------------


def component_count(family: Family, s: int) -> int:
    """Labeled graphs on an s-set forming one valid complement component.

    The complement of the component's induced graph must be connected, so a
    pure clique on s >= 2 vertices never qualifies, while the disjoint union
    of a vertex and a clique always does (its complement is a star).
    """
    if s <= 0:
        raise ValueError("component size must be positive")
    if family == Family.F1:
        return 1 if s <= 2 else s
    if family == Family.F2:
        return component_count(Family.F1, s) + (1 if s == 3 else 0)
    if family == Family.F3:
        return component_count(Family.F1, s) + (1 if s >= 3 else 0)
    if family == Family.F4:
        # choose the clique vertex set (size >= 2), rest stable; or all stable
        return 1 if s == 1 else (1 << s) - s - 1
    raise ValueError(f"no closed component count for family {family}")


def count_family(family: Family, l: int) -> int:
    """Exact count of graphs on l labeled vertices in the component family.

    Sums over the block containing the lowest label: the complement of each
    block's graph is connected, so blocks are exactly the complement
    components of the assembled graph.
    """
    if family not in (Family.F1, Family.F2, Family.F3, Family.F4):
        raise ValueError("counting supports families F1..F4")
    if l < 0:
        raise ValueError("l must be nonnegative")
    counts = [1] + [0] * l
    for m in range(1, l + 1):
        total = 0
        for s in range(1, m + 1):
            total += math.comb(m - 1, s - 1) * component_count(family, s) * counts[m - s]
        counts[m] = total
    return counts[l]


def enumerate_labeled_graphs(l: int) -> Iterable[Graph]:
    pairs = list(itertools.combinations(range(l), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(l, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def count_family_oracle(family: Family, l: int) -> int:
    """Filter all labeled graphs on l vertices by membership (l <= 6)."""
    if l > 6:
        raise ValueError("oracle capped at 6 vertices")
    return sum(1 for g in enumerate_labeled_graphs(l) if family_member(g, family))


# ---------------------------------------------------------------------------
# cross-part pair counts
# ---------------------------------------------------------------------------


def m_pi(p: Partition) -> int:
    """Pairs of vertices lying in different parts."""
    n = p.host_n
    return math.comb(n, 2) - sum(math.comb(m.bit_count(), 2) for m in p.parts)


def m_pi_sizes(sizes: list[int]) -> int:
    n = sum(sizes)
    return math.comb(n, 2) - sum(math.comb(s, 2) for s in sizes)


def balanced_sizes(n: int, w: int) -> list[int]:
    q, r = divmod(n, w)
    return [q + 1] * r + [q] * (w - r)


# ---------------------------------------------------------------------------
# certified lower bounds per tree class
# ---------------------------------------------------------------------------

_CLASS_PART_PLAN = {
    TreeClass.NO_PM_NOT_SUBDIVIDED_STAR: ("cliques", None),
    TreeClass.SUBDIVIDED_STAR: ("cliques", None),
    TreeClass.PM_GENERIC: ("core", Family.F2),
    TreeClass.DOUBLESTAR_NOT_P6: ("core", Family.F3),
    TreeClass.P6: ("core", Family.F4),
    TreeClass.SPIKED_STAR: ("comatching_all", None),
    TreeClass.SPIKED_NOT_STAR: ("comatching_pair", None),
}


def certified_lower_bound(t: Tree, n: int) -> int:
    """Exact count of hosts certified by one balanced partition for this tree.

    Per class: within-part choices (cliques contribute 1, complement-of-
    matching parts contribute the telephone number, family cores contribute
    the family count) times free cross-part edges.
    """
    a = alpha(t)
    kind = classify(t).kind
    if kind not in _CLASS_PART_PLAN:
        raise UnsupportedClass(f"no lower-bound construction for {kind.value}")
    w = a - 1
    if n < w:
        raise ValueError("need at least one vertex per part")
    sizes = balanced_sizes(n, w)
    plan, fam = _CLASS_PART_PLAN[kind]
    if plan == "cliques":
        within = 1
    elif plan == "core":
        within = count_family(fam, sizes[0])
    elif plan == "comatching_all":
        within = 1
        for s in sizes:
            within *= matchings_count(s)
    else:  # comatching_pair
        within = matchings_count(sizes[0]) * matchings_count(sizes[1])
    return within * (1 << m_pi_sizes(sizes))


def certified_lower_bound_log2(t: Tree, n: int) -> float:
    """log2 of the construction count; family cores fall back to the Bell
    lower bound beyond the exact counting range."""
    a = alpha(t)
    kind = classify(t).kind
    if kind not in _CLASS_PART_PLAN:
        raise UnsupportedClass(f"no lower-bound construction for {kind.value}")
    sizes = balanced_sizes(n, a - 1)
    plan, fam = _CLASS_PART_PLAN[kind]
    if plan == "cliques":
        within = 0.0
    elif plan == "core":
        if sizes[0] <= 60:
            within = log2_int(count_family(fam, sizes[0]))
        else:
            within = bell_log2(sizes[0])  # Bell lower-bounds every family count
    elif plan == "comatching_all":
        within = sum(log2_int(matchings_count(s)) for s in sizes)
    else:
        within = log2_int(matchings_count(sizes[0])) + log2_int(matchings_count(sizes[1]))
    return within + m_pi_sizes(sizes)


# ---------------------------------------------------------------------------
# growth-rate point evaluators (report only)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthEstimate:
    formula_id: str
    n: int
    log2_value: float
    params: dict = field(default_factory=dict)
    display_faithful: bool = False

    def to_json_dict(self) -> dict:
        return {
            "formula_id": self.formula_id,
            "n": self.n,
            "log2_value": self.log2_value,
            "params": self.params,
            "display_faithful": self.display_faithful,
        }


def growth_formula(kind: TreeClass, a: int, n: int) -> GrowthEstimate:
    """log2 point value of the matching count display for this tree class.

    Constants hidden inside the asymptotics are not represented; values are
    for trend reports only.
    """
    if a < 3:
        raise UnsupportedClass("growth displays need independence number >= 3")
    w = a - 1
    base = (1 - 1 / w) * n * n / 2
    if kind in (TreeClass.NO_PM_NOT_SUBDIVIDED_STAR, TreeClass.SUBDIVIDED_STAR):
        value = n * math.log2(w) - ((a - 2) / 2) * math.log2(n) + base
        return GrowthEstimate("cliques_partition", n, value, {"alpha": a, "w": w})
    if kind in (TreeClass.PM_GENERIC, TreeClass.DOUBLESTAR_NOT_P6, TreeClass.P6):
        fam = {TreeClass.PM_GENERIC: "f2", TreeClass.DOUBLESTAR_NOT_P6: "f3", TreeClass.P6: "f4"}[kind]
        value = (
            -n * 0.5 * math.log2(2 * math.e)
            + n * math.log2(w)
            + (n / w) * (math.log2(n) - math.log2(math.log(n)))
            + base
        )
        return GrowthEstimate(f"{fam}_core_partition", n, value, {"alpha": a, "w": w})
    if kind == TreeClass.SPIKED_STAR:
        value = (
            n
            - ((a - 2) / 2) * math.log2(n)
            + (n / 2) * (math.log2(n) - math.log2(math.e * w))
            + math.sqrt(n * w) * LOG2E
            + base
        )
        return GrowthEstimate("comatching_all_partition", n, value, {"alpha": a, "w": w})
    if kind == TreeClass.SPIKED_NOT_STAR:
        if w < 3:
            raise UnsupportedClass("pair display needs at least three parts")
        b = math.log2(n) / (2 * (1 + 1 / (w - 2)))
        shifted = n + b * w / 2
        value = (
            (n / w + b / 2) * (math.log2(shifted) - math.log2(math.e * w))
            + 2 * math.sqrt(shifted / w) * LOG2E
            + base
            - b * b / 2
            - b * b / (2 * (w - 2))
        )
        return GrowthEstimate(
            "comatching_pair_partition",
            n,
            value,
            {"alpha": a, "w": w, "b": b},
            display_faithful=True,
        )
    raise UnsupportedClass(f"no growth display for class {kind.value}")


# ---------------------------------------------------------------------------
# clique-or-universal-vertex component counts (upper-bound check)
# ---------------------------------------------------------------------------


def clique_or_spiked_clique_components_count(k: int) -> int:
    """Graphs on k labeled vertices whose components are cliques or a
    universal vertex over a disjoint union of cliques."""
    h = [0, 1]
    for s in range(2, k + 1):
        h.append(1 + s * (bell(s - 1) - 1))
    total = [1] + [0] * k
    for m in range(1, k + 1):
        total[m] = sum(
            math.comb(m - 1, s - 1) * h[s] * total[m - s] for s in range(1, m + 1)
        )
    return total[k]


def universal_component_bound_margin(k: int) -> float:
    """log2 slack of the (32k / log2 log2 k)^k upper bound at size k."""
    bound = k * math.log2(32 * k / math.log2(math.log2(k)))
    return bound - log2_int(clique_or_spiked_clique_components_count(k))


# ---------------------------------------------------------------------------
# table emitters
# ---------------------------------------------------------------------------


def family_table_rows(max_l: int) -> list[dict]:
    rows = []
    for l in range(1, max_l + 1):
        row = {"l": l}
        for fam in (Family.F1, Family.F2, Family.F3, Family.F4):
            row[f"f{fam.value[1]}"] = count_family(fam, l)
        row["bell"] = bell(l)
        row["bell_times_2^l"] = bell(l) << l
        rows.append(row)
    return rows


def matchings_table_rows(l_values: list[int]) -> list[dict]:
    rows = []
    for l in l_values:
        t = matchings_count(l)
        est = matchings_estimate_log2(l)
        rows.append(
            {
                "l": l,
                "matchings": t if l <= 64 else None,
                "matchings_log2": log2_int(t),
                "estimate_log2": est,
                "ratio": 2.0 ** (log2_int(t) - est),
            }
        )
    return rows


def average_certificates(pairs: int, graphs: int) -> Fraction:
    return Fraction(pairs, graphs) if graphs else Fraction(0)

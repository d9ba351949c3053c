"""The claim suite: every construction and characterization, re-verified
per tree, with the independent catalog oracles as cross-checks.

Each check either passes silently or contributes a failure record; the suite
is the engine behind the `verify-claims` subcommand and the acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import certify as C
from . import trees as T
from .trees import MatchKind, Tree, TreeClass


@dataclass
class SuiteResult:
    trees_checked: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "schema": "tfree-claims/1",
            "trees_checked": self.trees_checked,
            "checks": self.checks,
            "ok": self.ok,
            "failures": self.failures,
        }


def _expected_schemes(t: Tree) -> list[str]:
    """Schemes whose hypotheses this tree satisfies (all must succeed)."""
    out = []
    _, kind = T.matching_status(t)
    a = T.alpha(t)
    if t.n >= 4:
        out += [
            "two_stables",
            "alpha_cliques",
            "stable2_and_cliques",
            "fragment_and_cliques",
        ]
        if a > 2:
            out.append("fragment_cliques_stable2")
    if kind == MatchKind.NEITHER:
        out.append("s2_and_cliques")
    if kind != MatchKind.PERFECT:
        out.append("p3_and_cliques")
    if kind == MatchKind.NEAR_PERFECT and t.n >= 5:
        out.append("cop3_and_cliques")
    if kind == MatchKind.NEAR_PERFECT and not T.is_subdivided_star(t):
        out.append("s3_and_cliques")
    out += [f"pair:{code}" for code in T.pair_codes_for(t)]
    return out


def check_tree(t: Tree, result: SuiteResult, wpn_cap: int = 9) -> None:
    """Run every applicable claim, construction, and oracle agreement check."""
    tid = T.tree_id(t)

    def record(name: str, ok: bool, detail: str = "") -> None:
        result.checks += 1
        if not ok:
            result.failures.append(f"{tid} (n={t.n}): {name} {detail}".strip())

    key = T.tree_canonical_key(t)
    cls = T.classify(t)
    _, kind = T.matching_status(t)
    a = T.alpha(t)
    pm = kind == MatchKind.PERFECT

    # taxonomy agrees with the construct-and-canonicalize catalogs
    record("spiked_vs_catalog", T.is_spiked(t) == (key in T.spiked_catalog(t.n)))
    record(
        "spiked_star_vs_catalog",
        T.is_spiked_star(t) == (key in T.spiked_star_catalog(t.n)),
    )
    record(
        "subdivided_star_vs_catalog",
        T.is_subdivided_star(t) == (key in T.subdivided_star_catalog(t.n)),
    )
    record(
        "doublestar_vs_catalog",
        T.is_doublestar(t) == (key in T.doublestar_catalog(t.n)),
    )

    # the classifier's class-specific witness data re-verifies
    if cls.kind == TreeClass.SUBDIVIDED_STAR:
        record("center_witness", cls.center in T.subdivided_star_centers(t))
    if cls.kind in (TreeClass.SPIKED_STAR, TreeClass.SPIKED_NOT_STAR):
        record("base_witness", cls.base == T.spiked_base(t))

    # every applicable partition scheme constructs and re-verifies
    for scheme in _expected_schemes(t):
        try:
            T.claim_partition(t, scheme)  # verifies internally
            record(f"scheme:{scheme}", True)
        except Exception as exc:
            record(f"scheme:{scheme}", False, repr(exc))

    # six-vertex windows inside the canonical matching
    if pm and not t.is_path():
        try:
            T.find_induced_m6(t)
            record("window_m6", True)
        except Exception as exc:
            record("window_m6", False, repr(exc))
    if pm and not T.is_spiked(t):
        try:
            T.find_induced_p6(t)
            record("window_p6", True)
        except Exception as exc:
            record("window_p6", False, repr(exc))

    # stable-4-plus-edges existence matches the taxonomy exactly
    if pm:
        got = T.s4_partition(t) is not None
        want = not (T.is_spiked_star(t) or T.is_doublestar(t))
        record("s4_vs_taxonomy", got == want, f"got={got} want={want}")
        if a >= 3:
            want_cls = cls.kind not in (
                TreeClass.SPIKED_STAR,
                TreeClass.DOUBLESTAR_NOT_P6,
                TreeClass.P6,
            )
            record("s4_vs_class", got == want_cls)
        record("no_star_cover", not T.star_cover_exists(t))

    # witnessing partition number identity
    if 3 <= t.n <= wpn_cap:
        record("wpn_alpha_identity", C.wpn(t) == a - 1)


def verify_claims(max_n: int, min_n: int = 2, wpn_cap: int = 9) -> SuiteResult:
    """Run the claim suite over every tree with min_n <= n <= max_n."""
    result = SuiteResult()
    for n in range(min_n, max_n + 1):
        for t in T.enumerate_trees(n):
            check_tree(t, result, wpn_cap=wpn_cap)
            result.trees_checked += 1
    return result

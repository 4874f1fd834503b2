"""Named verification suites reproducing every desk-scale stability claim.

Each suite returns a list of check records; run_all concatenates them in a
fixed order and appends a final check asserting that the set of
discrepancy-noted entries matches the pinned expectation.  A check is
pass/fail except where a documented family claim is computationally false for
some parameters: those entries carry status "discrepancy-noted" so the
harness neither hides the claim nor asserts a falsehood.

Reports are deterministic for a fixed (config, tool version): suites run in a
fixed order, every scan is exhaustive, and JSON output omits wall-clock
durations unless explicitly requested, so two runs produce byte-identical
documents regardless of worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import asdict, dataclass

from indstab import families
from indstab.canon import canonical
from indstab.enumeration import enumerate_graphs, search_tight_stable
from indstab.erdos_rogers import er_table
from indstab.graphs import Graph
from indstab.mis import all_max_independent_sets, alpha, saturating_matching
from indstab.stability import (
    alpha_drop,
    check_stable_vertex_bound,
    is_stable,
    is_tight_stable,
    stability_bound,
    stable_vertex_count,
)

TOOL_VERSION = "0.1.0"
REPORT_SCHEMA = "indstab-report/1"

# isomorphism class counts on 1..10 vertices, used as catalog sanity pins
CLASS_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]

PASS = "pass"
FAIL = "fail"
NOTED = "discrepancy-noted"

# the one family claim that computation contradicts: the cycle-plus-diameters
# circulant on 2k vertices is claimed tight (2, 0)-stable for every k >= 3,
# but for odd k both differences are odd, the graph is bipartite, and its
# independence number k exceeds the bound k - 1.
EXPECTED_DISCREPANCIES = (
    "even20(3) tight (2,0)",
    "even20(5) tight (2,0)",
)

SUITE_ORDER = (
    "stability_bound",
    "hall",
    "constructions",
    "edge_bounds",
    "uniqueness",
    "erdos_rogers",
)


@dataclass
class CheckResult:
    suite: str
    name: str
    params: dict
    expected: str
    actual: str
    status: str
    duration_ms: int = 0


@dataclass
class VerifyConfig:
    max_n: int = 8
    jobs: int = 1
    allow_long: bool = False
    suites: tuple[str, ...] = SUITE_ORDER

    def __post_init__(self):
        for s in self.suites:
            if s not in SUITE_ORDER:
                raise ValueError(f"unknown suite {s!r}; known: {', '.join(SUITE_ORDER)}")
        if self.max_n > 8:
            raise ValueError("exhaustive suites are guarded at max_n <= 8")


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    config: VerifyConfig
    tool_version: str = TOOL_VERSION

    @property
    def summary(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, NOTED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary[FAIL] == 0

    def to_json(self, include_timings: bool = False) -> str:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not include_timings:
                del d["duration_ms"]
            checks.append(d)
        config = asdict(self.config)
        del config["jobs"]  # execution detail; reports are worker-count independent
        doc = {
            "schema": REPORT_SCHEMA,
            "tool_version": self.tool_version,
            "config": config,
            "checks": checks,
            "summary": self.summary,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            tag = {PASS: "PASS", FAIL: "FAIL", NOTED: "NOTED"}[c.status]
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            head = f"[{tag}] {c.suite}: {c.name}"
            if params:
                head += f" ({params})"
            lines.append(f"{head} [{c.duration_ms} ms]")
            if c.status != PASS:
                lines.append(f"    expected: {c.expected}")
                lines.append(f"    actual:   {c.actual}")
        s = self.summary
        lines.append(
            f"{len(self.checks)} checks: {s[PASS]} pass, {s[FAIL]} fail, "
            f"{s[NOTED]} discrepancy-noted"
        )
        return "\n".join(lines) + "\n"


def _check(suite, name, params, expected, actual, good, t0) -> CheckResult:
    return CheckResult(
        suite=suite,
        name=name,
        params=params,
        expected=expected,
        actual=actual,
        status=PASS if good else FAIL,
        duration_ms=int((time.perf_counter() - t0) * 1000),
    )


# ---------------------------------------------------------------------------
# worker helpers (module level so they survive pickling)


def _drop_vector(payload):
    n, adj = payload
    g = Graph._wrap(n, adj)
    a = alpha(g)
    return a, [alpha_drop(g, k) for k in range(1, n)]


def _pool_map(fn, items, jobs):
    if jobs > 1 and len(items) > 8:
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8)))
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# suites


def _check_max_n(max_n: int) -> None:
    if not 1 <= max_n <= 8:
        raise ValueError(f"exhaustive suites are guarded at max_n <= 8, got {max_n}")


def suite_stability_bound(max_n: int = 8, jobs: int = 1) -> list[CheckResult]:
    """Every (k, l)-stable graph satisfies alpha <= floor((n-k+1)/2) + l,
    checked exhaustively over all isomorphism classes with n <= max_n."""
    _check_max_n(max_n)
    checks = []
    for n in range(1, max_n + 1):
        t0 = time.perf_counter()
        if n == 1:
            checks.append(
                _check(
                    "stability_bound", "bound holds", {"n": 1}, "vacuous (no valid k)",
                    "vacuous", True, t0,
                )
            )
            continue
        graphs = [(g.n, g.adj) for _, g in enumerate_graphs(n, jobs=jobs)]
        results = _pool_map(_drop_vector, graphs, jobs)
        checks.append(
            _check(
                "stability_bound", "catalog size", {"n": n}, str(CLASS_COUNTS[n - 1]),
                str(len(graphs)), len(graphs) == CLASS_COUNTS[n - 1], t0,
            )
        )
        for k in range(1, n):
            for l in range(0, k):
                t1 = time.perf_counter()
                bound = stability_bound(n, k, l)
                violations = sum(
                    1
                    for a, drops in results
                    if drops[k - 1] <= l and a > bound
                )
                checks.append(
                    _check(
                        "stability_bound", "bound holds", {"n": n, "k": k, "l": l},
                        "0 violations",
                        f"{violations} violations over {len(graphs)} classes",
                        violations == 0, t1,
                    )
                )
    return checks


def suite_hall(max_n: int = 8, jobs: int = 1) -> list[CheckResult]:
    """Every maximum independent set of a (1, 0)-stable graph is saturated by
    a matching into the rest of the graph."""
    _check_max_n(max_n)
    checks = []
    for n in range(2, max_n + 1):
        t0 = time.perf_counter()
        stable_classes = 0
        matchings = 0
        missing = 0
        for _, g in enumerate_graphs(n, jobs=jobs):
            if not is_stable(g, 1, 0):
                continue
            stable_classes += 1
            for y in all_max_independent_sets(g):
                if saturating_matching(g, y) is None:
                    missing += 1
                else:
                    matchings += 1
        checks.append(
            _check(
                "hall", "saturating matching exists", {"n": n},
                "a matching for every maximum independent set",
                f"{stable_classes} stable classes, {matchings} matchings, "
                f"{missing} missing",
                missing == 0, t0,
            )
        )
    return checks


def _tight_pairs(g: Graph, a: int, drops: list[int]) -> list[tuple[int, int]]:
    out = []
    for k in range(1, g.n):
        for l in range(0, k):
            if drops[k - 1] <= l and a == stability_bound(g.n, k, l):
                out.append((k, l))
    return out


def suite_constructions(jobs: int = 1) -> list[CheckResult]:
    """The fixed construction checklist: circulant stability and independence
    numbers, the five tight families, non-existence at six vertices, lifting,
    the stable-vertex-count bound, and the cycle-plus-diameters family pins."""
    checks = []

    for m in (3, 4, 5):
        t0 = time.perf_counter()
        a = alpha(families.stable3_circulant(m))
        checks.append(
            _check(
                "constructions", "stable3 circulant alpha", {"m": m}, str(m * m),
                str(a), a == m * m, t0,
            )
        )
    for m in (3, 4):
        t0 = time.perf_counter()
        ok = is_stable(families.stable3_circulant(m), 3, 0)
        checks.append(
            _check(
                "constructions", "stable3 circulant is (3,0)-stable", {"m": m},
                "true", str(ok).lower(), ok, t0,
            )
        )
    t0 = time.perf_counter()
    g = families.stable4_circulant(3)
    ok = is_stable(g, 4, 0)
    checks.append(
        _check(
            "constructions", "stable4 circulant is (4,0)-stable", {"m": 3},
            "true", f"{str(ok).lower()} (alpha={alpha(g)})", ok, t0,
        )
    )

    grids = [
        ("cycle tight (2,0)", families.cycle, range(3, 16, 2), 2, 0),
        ("wheel tight (2,0)", families.wheel, range(4, 15, 2), 2, 0),
        ("kn_tight tight (1,0)", families.kn_tight, range(2, 15), 1, 0),
        ("path tight (2,1)", families.path, range(3, 15), 2, 1),
        ("mn_matching tight (1,0)", families.mn_matching, range(2, 15), 1, 0),
    ]
    for name, fam, ns, k, l in grids:
        t0 = time.perf_counter()
        bad = [n for n in ns if not is_tight_stable(fam(n), k, l)]
        checks.append(
            _check(
                "constructions", name, {"n": f"{ns.start}..{ns.stop - 1}"},
                "tight for the whole range",
                "all tight" if not bad else f"failures at n={bad}",
                not bad, t0,
            )
        )

    t0 = time.perf_counter()
    found = search_tight_stable(6, 3, 0, jobs=jobs)
    checks.append(
        _check(
            "constructions", "no 6-vertex tight (3,0)-stable graph", {},
            "empty search", f"{len(found)} classes found", not found, t0,
        )
    )

    t0 = time.perf_counter()
    lift_checked = 0
    lift_bad = 0
    for n in range(2, 8):
        for _, g in enumerate_graphs(n, jobs=jobs):
            a = alpha(g)
            drops = [alpha_drop(g, k) for k in range(1, n)]
            for k, l in _tight_pairs(g, a, drops):
                lift_checked += 1
                if not is_tight_stable(families.lift(g, 1), k + 1, l + 1):
                    lift_bad += 1
    checks.append(
        _check(
            "constructions", "lift of tight (k,l) is tight (k+1,l+1)",
            {"n": "2..7"}, "0 violations",
            f"{lift_checked} tight cases, {lift_bad} violations",
            lift_bad == 0, t0,
        )
    )

    t0 = time.perf_counter()
    cor_bad = 0
    cor_total = 0
    for n in range(2, 9):
        for _, g in enumerate_graphs(n, jobs=jobs):
            cor_total += 1
            if not check_stable_vertex_bound(g):
                cor_bad += 1
    checks.append(
        _check(
            "constructions", "stable-vertex-count bound", {"n": "2..8"},
            "alpha <= floor(n - m/2) for every class",
            f"{cor_total} classes, {cor_bad} violations", cor_bad == 0, t0,
        )
    )
    for m in (2, 4, 6):
        for n in (6, 8):
            t0 = time.perf_counter()
            w = families.lift(families.kn_tight(m), n - m)
            mm = stable_vertex_count(w)
            a = alpha(w)
            target = (2 * n - mm) // 2
            good = mm == m and a == target
            checks.append(
                _check(
                    "constructions", "stable-vertex-count bound is attained",
                    {"m": m, "n": n},
                    f"m={m} stable vertices and alpha = floor(n - m/2)",
                    f"m={mm}, alpha={a}, floor(n - m/2)={target}",
                    good, t0,
                )
            )

    for k in (3, 4, 5, 6):
        t0 = time.perf_counter()
        g = families.even20_circulant(k)
        tight = is_tight_stable(g, 2, 0)
        stable = tight or is_stable(g, 2, 0)
        if tight:
            status = PASS
            actual = "tight (2,0)-stable"
        else:
            # the family claim says every k >= 3; computation disagrees for
            # odd k, so the harness notes the discrepancy instead of failing
            status = NOTED
            actual = (
                f"not tight: alpha={alpha(g)} vs bound "
                f"{stability_bound(2 * k, 2, 0)}, "
                f"{'(2,0)-stable' if stable else 'not (2,0)-stable'}"
            )
        checks.append(
            CheckResult(
                suite="constructions",
                name=f"even20({k}) tight (2,0)",
                params={"k": k},
                expected="tight (2,0)-stable (claimed for every k >= 3)",
                actual=actual,
                status=status,
                duration_ms=int((time.perf_counter() - t0) * 1000),
            )
        )
    return checks


def suite_edge_bounds(max_n: int = 8, jobs: int = 1) -> list[CheckResult]:
    """Edge counts of tight (1, 0)-stable graphs are sandwiched between the
    matching family and the balanced bipartite family, both ends attained."""
    _check_max_n(max_n)
    checks = []
    for n in range(2, max_n + 1):
        t0 = time.perf_counter()
        lo = families.mn_matching(n).edge_count()
        hi = families.kn_tight(n).edge_count()
        lo_code = canonical(families.mn_matching(n))
        hi_code = canonical(families.kn_tight(n))
        seen_lo = seen_hi = False
        out_of_range = 0
        tight_classes = 0
        codes = set()
        for code, g in enumerate_graphs(n, jobs=jobs):
            if not is_tight_stable(g, 1, 0):
                continue
            tight_classes += 1
            codes.add(code)
            e = g.edge_count()
            if not lo <= e <= hi:
                out_of_range += 1
            if e == lo:
                seen_lo = True
            if e == hi:
                seen_hi = True
        good = (
            out_of_range == 0
            and seen_lo
            and seen_hi
            and lo_code in codes
            and hi_code in codes
        )
        checks.append(
            _check(
                "edge_bounds", "edge count bounds", {"n": n},
                f"all tight (1,0) classes within [{lo}, {hi}], both ends attained "
                "by the named constructions",
                f"{tight_classes} classes, {out_of_range} out of range, "
                f"min attained={seen_lo}, max attained={seen_hi}",
                good, t0,
            )
        )
    return checks


def suite_uniqueness(
    ns=(3, 5, 7, 9), jobs: int = 1, allow_long: bool = False
) -> list[CheckResult]:
    """The odd cycle is the unique tight (2, 0)-stable graph at each odd n."""
    checks = []
    for n in ns:
        if n not in (3, 5, 7, 9, 11):
            raise ValueError(f"uniqueness runs at odd n in 3..11, got {n}")
        if n == 11 and not allow_long:
            raise ValueError("n = 11 uniqueness needs allow_long")
        t0 = time.perf_counter()
        found = search_tight_stable(n, 2, 0, jobs=jobs, allow_long=allow_long)
        want = canonical(families.cycle(n))
        good = found == [want]
        checks.append(
            _check(
                "uniqueness", "odd cycle is the unique tight (2,0) graph",
                {"n": n}, "exactly the n-cycle",
                f"{len(found)} classes found"
                + ("" if good else " (not matching the cycle)"),
                good, t0,
            )
        )
    return checks


def suite_erdos_rogers(max_n: int = 8, jobs: int = 1) -> list[CheckResult]:
    """Computed Erdos-Rogers values equal n - t on every applicable cell."""
    _check_max_n(max_n)
    checks = []
    for n in range(3, max_n + 1):
        t0 = time.perf_counter()
        rows = er_table(n, jobs=jobs)
        applicable = [r for r in rows if r.predicted is not None]
        bad = [r for r in applicable if not r.match]
        checks.append(
            _check(
                "erdos_rogers", "exact value matches n - t", {"n": n},
                f"{len(applicable)} applicable cells all equal n - t",
                f"{len(applicable)} applicable, {len(rows) - len(applicable)} "
                f"skipped, {len(bad)} mismatches",
                not bad, t0,
            )
        )
    return checks


def run_all(config: VerifyConfig | None = None) -> VerificationReport:
    """Run the selected suites in fixed order and pin the discrepancy set."""
    config = config or VerifyConfig()
    checks: list[CheckResult] = []
    for name in SUITE_ORDER:
        if name not in config.suites:
            continue
        if name == "stability_bound":
            checks += suite_stability_bound(config.max_n, config.jobs)
        elif name == "hall":
            checks += suite_hall(config.max_n, config.jobs)
        elif name == "constructions":
            checks += suite_constructions(config.jobs)
        elif name == "edge_bounds":
            checks += suite_edge_bounds(config.max_n, config.jobs)
        elif name == "uniqueness":
            ns = (3, 5, 7, 9, 11) if config.allow_long else (3, 5, 7, 9)
            checks += suite_uniqueness(ns, config.jobs, config.allow_long)
        elif name == "erdos_rogers":
            checks += suite_erdos_rogers(config.max_n, config.jobs)

    if "constructions" in config.suites:
        t0 = time.perf_counter()
        noted = tuple(c.name for c in checks if c.status == NOTED)
        checks.append(
            _check(
                "constructions", "discrepancy pin", {},
                f"noted exactly: {', '.join(EXPECTED_DISCREPANCIES)}",
                f"noted: {', '.join(noted) if noted else '(none)'}",
                noted == EXPECTED_DISCREPANCIES, t0,
            )
        )
    return VerificationReport(checks=checks, config=config)

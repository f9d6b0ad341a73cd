"""Grid verification suites: closed forms against exhaustive enumeration,
and engine results against the structural laws.

Each suite returns a list of :class:`SuiteRow`; a row is one instance (or
one parameter cell) with a pass/fail verdict and a short detail string.
The exhaustive enumerations here are deliberately independent of the
closed-form implementations they check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .constructions import beta_colouring, mono_colouring
from .core import HypergraphSpec, build_sigma
from .engine import decide_k, spectrum
from .formulas import (
    gap_instance_params,
    max_sum_capped_head,
    min_parts_attainable,
    min_parts_capped_head,
    mono_zone,
    uncolourable_condition,
    zone_only_condition,
)
from .oracle import SIZE_CAP, brute_spectrum
from .validator import is_valid

__all__ = [
    "SuiteRow",
    "SUITES",
    "run_suite",
    "exhaustive_max_sum",
    "exhaustive_min_parts",
    "exhaustive_mono_zone",
    "suite_lemmas",
    "suite_zone",
    "suite_zone_only",
    "suite_uncolourable",
    "suite_nogaps",
    "suite_gaps",
    "suite_appendix",
]


@dataclass(frozen=True)
class SuiteRow:
    name: str
    passed: bool
    detail: str = ""


# ---------------------------------------------------------------------------
# exhaustive enumerations (the independent side of each comparison)
# ---------------------------------------------------------------------------


def _capped_vectors(length: int, head: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive vectors of ``length`` entries whose first
    ``head`` entries sum to at most ``cap``."""

    def rec(prefix: list[int], remaining: int, max_value: int,
            head_sum: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(max_value, 0, -1):
            hs = head_sum + (v if len(prefix) < head else 0)
            if len(prefix) < head and hs > cap:
                continue
            prefix.append(v)
            yield from rec(prefix, remaining - 1, v, hs)
            prefix.pop()

    yield from rec([], length, cap, 0)


def exhaustive_max_sum(a: int, b: int, d: int) -> int:
    """Brute-force maximum of the capped-head partition sum."""
    return max(sum(x) for x in _capped_vectors(b, a - 1, d - 1))


def exhaustive_min_parts(a: int, d: int, n: int) -> int | None:
    """Brute-force least b >= a reaching sum exactly n, or None."""

    def reachable(b: int) -> bool:
        found = False

        def rec(i: int, rem: int, max_value: int, head_sum: int) -> None:
            nonlocal found
            if found:
                return
            if i == b:
                found = rem == 0
                return
            left = b - i - 1
            for v in range(min(max_value, rem - left), 0, -1):
                hs = head_sum + (v if i < a - 1 else 0)
                if i < a - 1 and hs > d - 1:
                    continue
                rec(i + 1, rem - v, v, hs)
                if found:
                    return

        rec(0, n, d - 1, 0)
        return found

    for b in range(a, n + 1):
        if reachable(b):
            return b
    return None


def exhaustive_mono_zone(spec: HypergraphSpec) -> set[int]:
    """All k admitting a valid all-monochromatic colouring, by checking
    every partition of n against the per-edge colour window directly."""
    if not spec.has_edges:
        return set(range(1, spec.n + 1))
    s = spec.sigma.s
    feasible: set[int] = set()

    def partitions_of(n: int, max_value: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, max_value), 0, -1):
            for rest in partitions_of(n - first, first):
                yield (first,) + rest

    for dist in partitions_of(spec.n, spec.n):
        k = len(dist)
        if k in feasible:
            continue
        # an edge sees exactly the colours of its s classes, so the extremes
        # come straight from the distribution of classes per colour
        lo = 0
        taken = 0
        for cnt in dist:  # largest counts first -> fewest colours
            if taken >= s:
                break
            taken += cnt
            lo += 1
        hi = min(s, k)  # one class per colour -> most colours
        if lo >= spec.alpha and hi <= spec.beta:
            feasible.add(k)
    return feasible


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_lemmas(a_max: int = 7, b_max: int = 8, n_max: int = 40) -> list[SuiteRow]:
    """Closed-form partition bounds against exhaustive enumeration."""
    rows = []
    for a in range(2, a_max + 1):
        for d in range(a, a_max + 1):
            bad_f: list[str] = []
            for b in range(a, b_max + 1):
                expect = exhaustive_max_sum(a, b, d)
                got = max_sum_capped_head(a, b, d)
                if got != expect:
                    bad_f.append(f"b={b}: {got}!={expect}")
            bad_b: list[str] = []
            for n in range(1, n_max + 1):
                expect_b = exhaustive_min_parts(a, d, n)
                if expect_b is None:
                    if min_parts_attainable(a, d, n):
                        bad_b.append(f"n={n}: expected unattainable")
                else:
                    got_b = min_parts_capped_head(a, d, n)
                    if got_b != expect_b or not min_parts_attainable(a, d, n):
                        bad_b.append(f"n={n}: {got_b}!={expect_b}")
            ok = not bad_f and not bad_b
            detail = "; ".join(bad_f + bad_b) if not ok else (
                f"b in [{a},{b_max}], n in [1,{n_max}]"
            )
            rows.append(SuiteRow(name=f"bounds a={a} d={d}", passed=ok,
                                 detail=detail))
    return rows


def zone_grid() -> list[HypergraphSpec]:
    """Small instances with alpha <= s <= beta and edges present."""
    sigmas = [(1, 1), (2, 1), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1), (2, 2, 1)]
    out = []
    for parts in sigmas:
        sigma = build_sigma(parts)
        for n in range(sigma.s, 8):
            for q in (sigma.delta_max, min(4, sigma.delta_max + 1)):
                if q > 4:
                    continue
                for alpha in range(2, sigma.s + 1):
                    for beta in range(sigma.s, sigma.s + 2):
                        out.append(HypergraphSpec(
                            n=n, q=q, sigma=sigma, alpha=alpha, beta=beta
                        ))
    seen = set()
    unique = []
    for spec in out:
        key = (spec.n, spec.q, spec.sigma.parts, spec.alpha, spec.beta)
        if key not in seen:
            seen.add(key)
            unique.append(spec)
    return unique


def suite_zone(limit: int | None = None) -> list[SuiteRow]:
    """Monochromatic zone: formula equals exhaustive partition check and
    every zone point is realised by a validated solid colouring."""
    rows = []
    specs = zone_grid()
    if limit is not None:
        specs = specs[:limit]
    for spec in specs:
        zone = mono_zone(spec)
        expect = exhaustive_mono_zone(spec)
        problems = []
        if zone is None or set(zone) != expect:
            problems.append(f"zone {zone} != exhaustive {sorted(expect)}")
        else:
            for k in zone:
                colouring = mono_colouring(spec, k)
                if colouring.colour_count != k or not is_valid(spec, colouring):
                    problems.append(f"k={k} construction failed validation")
        rows.append(SuiteRow(
            name=str(spec), passed=not problems,
            detail="; ".join(problems) if problems else f"zone={zone}"
        ))
    return rows


def suite_zone_only(node_budget: int | None = 2_000_000) -> list[SuiteRow]:
    """Instances past the zone-only threshold: spectrum == zone exactly."""
    instances = [
        HypergraphSpec(n=4, q=3, sigma=build_sigma([2, 1]), alpha=2, beta=2),
        HypergraphSpec(n=4, q=3, sigma=build_sigma([2, 2]), alpha=2, beta=2),
        HypergraphSpec(n=5, q=3, sigma=build_sigma([2, 1]), alpha=2, beta=2),
    ]
    rows = []
    for spec in instances:
        if not zone_only_condition(spec):
            rows.append(SuiteRow(name=str(spec), passed=False,
                                 detail="instance misses the threshold"))
            continue
        zone = mono_zone(spec)
        result = spectrum(spec, node_budget=node_budget)
        ok = (
            result.complete
            and zone is not None
            and list(result.feasible_k) == list(zone)
        )
        rows.append(SuiteRow(
            name=str(spec), passed=ok,
            detail=f"spectrum={list(result.feasible_k)} zone={zone}"
        ))
    return rows


def uncolourable_grid() -> list[HypergraphSpec]:
    """Instances meeting the non-colourability thresholds at minimal n, q.

    The first three sit in the ``s < alpha`` regime, the last two in the
    ``beta < s`` regime (which forces n*q >= 21, beyond the oracle cap).
    """
    return [
        HypergraphSpec(n=3, q=4, sigma=build_sigma([2, 2]), alpha=3, beta=3),
        HypergraphSpec(n=3, q=7, sigma=build_sigma([3, 1]), alpha=3, beta=3),
        HypergraphSpec(n=3, q=7, sigma=build_sigma([3, 2]), alpha=3, beta=3),
        HypergraphSpec(n=7, q=3, sigma=build_sigma([2, 1, 1]), alpha=2, beta=2),
        HypergraphSpec(n=7, q=3, sigma=build_sigma([2, 2, 1]), alpha=2, beta=2),
    ]


def suite_uncolourable(node_budget: int | None = 5_000_000) -> list[SuiteRow]:
    """Threshold instances: the engine finds no feasible k at all, and the
    literal oracle agrees wherever it fits."""
    rows = []
    for spec in uncolourable_grid():
        problems = []
        if not uncolourable_condition(spec):
            problems.append("threshold predicate is false")
        result = spectrum(spec, node_budget=node_budget)
        if not result.complete:
            problems.append("budget tripped")
        if result.colourable:
            problems.append(f"engine found feasible k={list(result.feasible_k)}")
        if spec.num_vertices <= SIZE_CAP:
            if brute_spectrum(spec) != ():
                problems.append("oracle found a colouring")
        rows.append(SuiteRow(
            name=str(spec), passed=not problems,
            detail="; ".join(problems) if problems else
            f"all k in [1,{spec.num_vertices}] infeasible"
        ))
    return rows


def nogap_grid() -> list[HypergraphSpec]:
    """delta >= r - beta + 1, alpha = 2, 2 <= s <= beta, n*q <= 24."""
    cells = [
        ((1, 1), 2), ((1, 1), 3),
        ((2, 1), 3), ((2, 2), 3), ((2, 2), 4),
        ((3, 3), 4), ((2, 1, 1), 4), ((2, 2, 2), 5),
    ]
    out = []
    for parts, beta in cells:
        sigma = build_sigma(parts)
        for n in range(sigma.s, 7):
            for q in (sigma.delta_max, sigma.delta_max + 1, sigma.delta_max + 2):
                if n * q > 24 or n * q < 4:
                    continue
                spec = HypergraphSpec(n=n, q=q, sigma=sigma, alpha=2, beta=beta)
                if spec.sigma.delta_min >= spec.r - beta + 1 and spec.has_edges:
                    out.append(spec)
    return out


def suite_nogaps(node_budget: int | None = 5_000_000,
                 limit: int | None = None) -> list[SuiteRow]:
    """No-gap law: the spectrum of each grid instance is one interval."""
    rows = []
    specs = nogap_grid()
    if limit is not None:
        specs = specs[:limit]
    for spec in specs:
        result = spectrum(spec, node_budget=node_budget)
        contiguous = (
            result.colourable
            and list(result.feasible_k)
            == list(range(result.chi, result.chi_bar + 1))
        )
        ok = result.complete and contiguous and not result.gaps
        rows.append(SuiteRow(
            name=str(spec), passed=ok,
            detail=f"spectrum=[{result.chi},{result.chi_bar}]" if ok else
            f"feasible={list(result.feasible_k)} gaps={list(result.gaps)}"
        ))
    return rows


def gap_cells() -> list[tuple[int, int, tuple[int, ...]]]:
    return [
        (2, 2, (2, 2)),
        (2, 2, (3, 1)),
        (2, 3, (3, 2)),
    ]


def suite_gaps(node_budget: int | None = 20_000_000) -> list[SuiteRow]:
    """Gap construction: k <= beta-1 and beta+1 infeasible, beta feasible,
    the whole monochromatic zone feasible, and the zone starts past beta+1."""
    rows = []
    for alpha, beta, parts in gap_cells():
        sigma = build_sigma(parts)
        q, n_min = gap_instance_params(alpha, beta, sigma)
        spec = HypergraphSpec(n=n_min, q=q, sigma=sigma, alpha=alpha, beta=beta)
        problems = []
        built = beta_colouring(spec)
        if built.colour_count != beta or not is_valid(spec, built):
            problems.append("balanced beta-colouring failed validation")
        for k in range(1, beta):
            if decide_k(spec, k, node_budget).verdict != "infeasible":
                problems.append(f"k={k} not infeasible")
        if decide_k(spec, beta, node_budget).verdict != "feasible":
            problems.append(f"k={beta} not feasible")
        if decide_k(spec, beta + 1, node_budget).verdict != "infeasible":
            problems.append(f"k={beta + 1} not infeasible")
        zone = mono_zone(spec)
        if zone is None or zone.is_empty or zone.lo <= beta + 1:
            problems.append(f"zone {zone} does not sit above the gap")
        else:
            for k in zone:
                colouring = mono_colouring(spec, k)
                if not is_valid(spec, colouring):
                    problems.append(f"zone k={k} construction invalid")
        rows.append(SuiteRow(
            name=str(spec), passed=not problems,
            detail="; ".join(problems) if problems else
            f"gap between {beta} and {zone.lo}"
        ))
    return rows


def suite_appendix(node_budget: int | None = 50_000_000) -> list[SuiteRow]:
    """The two boundary fixtures: a gap without a monochromatic zone, and a
    one-point spectrum without one."""
    rows = []

    gap_spec = HypergraphSpec(n=7, q=6, sigma=build_sigma([6, 6]), alpha=3, beta=3)
    verdicts = {k: decide_k(gap_spec, k, node_budget) for k in (3, 4, 8)}
    problems = []
    if any(v.verdict == "unknown" for v in verdicts.values()):
        problems.append("budget tripped")
    if verdicts[3].verdict != "feasible":
        problems.append("k=3 not feasible")
    if verdicts[4].verdict != "infeasible":
        problems.append("k=4 not infeasible")
    if verdicts[8].verdict != "feasible":
        problems.append("k=8 not feasible")
    zone = mono_zone(gap_spec)
    if zone is None or not zone.is_empty:
        problems.append("monochromatic zone should be empty")
    rows.append(SuiteRow(
        name=str(gap_spec), passed=not problems,
        detail="; ".join(problems) if problems else
        "3 feasible, 4 infeasible, 8 feasible: gap"
    ))

    point_spec = HypergraphSpec(n=5, q=2, sigma=build_sigma([2, 2]), alpha=3, beta=3)
    result = spectrum(point_spec, node_budget=node_budget)
    ok = result.complete and list(result.feasible_k) == [6] and not result.gaps
    rows.append(SuiteRow(
        name=str(point_spec), passed=ok,
        detail=f"spectrum={list(result.feasible_k)}"
    ))
    return rows


SUITES: dict[str, Callable[[], list[SuiteRow]]] = {
    "lemmas": suite_lemmas,
    "zone": suite_zone,
    "zone-only": suite_zone_only,
    "uncolourable": suite_uncolourable,
    "nogaps": suite_nogaps,
    "gaps": suite_gaps,
    "appendix": suite_appendix,
}


def run_suite(name: str) -> list[SuiteRow]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()

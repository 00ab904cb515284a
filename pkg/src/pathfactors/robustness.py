"""Degree sums, vertex/edge-deletion robustness of P>=3-factors, and theorem checks.

All threshold comparisons go through ``Fraction`` (or ``math.inf``), so a
toughness value sitting exactly on a bound is classified correctly.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .connectivity import vertex_connectivity
from .factor import Obstruction, decide, sun_criterion_violation
from .graph import BudgetExceeded, Graph, GraphError, delete_edges, delete_vertices, parse_graph6, to_graph6
from .sun import ToughnessResult, sun_toughness

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6
THEOREMS = ("T2", "T3", "T4", "T5")


@dataclass(frozen=True)
class SigmaValue:
    value: int | float  # math.inf when no independent k-set exists
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class RobustnessVerdict:
    """Outcome of a (P>=3, l)-critical or (P>=3, m)-deleted check.

    ``removed`` is the first failing V' (vertex ids) or E' (edge pairs), and
    ``obstruction`` is stated in the ids of the original graph.
    """

    property: str  # "critical" or "deleted"
    param: int
    holds: bool
    removed: tuple | None = None
    obstruction: Obstruction | None = None
    checked: int = 0
    failures: tuple = ()


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    param: int
    hypotheses: dict[str, bool]
    hypotheses_hold: bool
    conclusion_holds: bool
    is_counterexample: bool
    kappa: int
    toughness: Fraction | float | None = None
    sigma3: int | float | None = None
    robustness: RobustnessVerdict | None = None


def sigma_k(g: Graph, k: int) -> SigmaValue:
    """Minimum degree sum over independent k-sets; the lexicographically first minimiser is the witness."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    deg = g.degrees()
    best: int | float = math.inf
    witness = None
    for xs in combinations(range(g.n), k):
        mask = 0
        for v in xs:
            mask |= 1 << v
        if any(g.adj[v] & mask for v in xs):
            continue
        total = sum(deg[v] for v in xs)
        if total < best:
            best, witness = total, xs
    return SigmaValue(best, witness)


@lru_cache(maxsize=1 << 17)
def _factor_exists(g: Graph, max_n: int) -> bool:
    return decide(g, max_n)


def _check_budget(total: int, budget: int, what: str) -> None:
    if total > budget:
        raise BudgetExceeded(f"{what}: {total} reduced graphs exceeds budget {budget}")


def is_critical(
    g: Graph, l: int, budget: int = DEFAULT_BUDGET, max_n: int = 20, full_listing: bool = False
) -> RobustnessVerdict:
    """Does G - V' have a P>=3-factor for every V' of size l?"""
    if not 0 <= l < g.n:
        raise ValueError(f"need 0 <= l < n, got l={l}, n={g.n}")
    _check_budget(math.comb(g.n, l), budget, f"is_critical(l={l})")
    first = None
    failures = []
    checked = 0
    for vs in combinations(range(g.n), l):
        checked += 1
        ob = probe_vertex_deletion(g, vs, max_n)
        if ob is None:
            continue
        if first is None:
            first = (vs, ob)
        failures.append(vs)
        if not full_listing:
            break
    if first is None:
        return RobustnessVerdict("critical", l, True, checked=checked)
    return RobustnessVerdict("critical", l, False, first[0], first[1], checked, tuple(failures))


def is_deleted(
    g: Graph, m: int, budget: int = DEFAULT_BUDGET, max_n: int = 20, full_listing: bool = False
) -> RobustnessVerdict:
    """Does G - E' have a P>=3-factor for every E' of size m?

    When m exceeds the edge count no E' exists and the property holds vacuously.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    edges = g.edges
    _check_budget(math.comb(len(edges), m), budget, f"is_deleted(m={m})")
    first = None
    failures = []
    checked = 0
    for es in combinations(edges, m):
        checked += 1
        ob = probe_edge_deletion(g, es, max_n)
        if ob is None:
            continue
        if first is None:
            first = (es, ob)
        failures.append(es)
        if not full_listing:
            break
    if first is None:
        return RobustnessVerdict("deleted", m, True, checked=checked)
    return RobustnessVerdict("deleted", m, False, first[0], first[1], checked, tuple(failures))


def probe_vertex_deletion(g: Graph, vs: Iterable[int], max_n: int = 20) -> Obstruction | None:
    """Obstruction (in G's ids) showing G - V' has no P>=3-factor, or None if it has one.

    A single failing V' already refutes criticality, which is how sharpness
    examples too large for a full sweep are checked.
    """
    vs = tuple(vs)
    h, relabel = delete_vertices(g, vs)
    if _factor_exists(h, max_n):
        return None
    ob = sun_criterion_violation(h, max_n)
    if ob is None:
        raise AssertionError(f"search and sun criterion disagree on G - {vs}")
    back = {new: old for old, new in relabel.items()}
    return Obstruction(frozenset(back[v] for v in ob.x), ob.sun_count)


def probe_edge_deletion(g: Graph, es: Iterable[tuple[int, int]], max_n: int = 20) -> Obstruction | None:
    es = tuple(es)
    h = delete_edges(g, es)
    if _factor_exists(h, max_n):
        return None
    ob = sun_criterion_violation(h, max_n)
    if ob is None:
        raise AssertionError(f"search and sun criterion disagree on G - {es}")
    return ob


@lru_cache(maxsize=1 << 17)
def _kappa(g: Graph) -> int:
    return vertex_connectivity(g)


@lru_cache(maxsize=1 << 17)
def _toughness(g: Graph, max_n: int) -> ToughnessResult:
    return sun_toughness(g, max_n)


@lru_cache(maxsize=1 << 17)
def _sigma3(g: Graph) -> int | float:
    return sigma_k(g, 3).value


def check_theorem(
    g: Graph, theorem: str, param: int, budget: int = DEFAULT_BUDGET, max_n: int = 20
) -> TheoremVerdict:
    """Evaluate one theorem's hypotheses and conclusion on ``g``.

    T2: kappa >= l+2 and s(G) > (l+1)/3    => (P>=3, l)-critical
    T3: kappa >= l+1 and sigma3 >= n+2l    => (P>=3, l)-critical
    T4: kappa >= 2m+1 and s(G) >= (m+1)/(m+2) => (P>=3, m)-deleted
    T5: kappa >= 2m+1 and sigma3 >= n+2m   => (P>=3, m)-deleted

    An infinite s(G) or sigma3 satisfies its bound.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if not isinstance(param, int) or param < 1:
        raise ValueError(f"theorem parameter must be a positive integer, got {param!r}")
    n = g.n
    if n < 1:
        raise GraphError("theorem checks need at least one vertex")
    kappa = _kappa(g)
    toughness = sigma3 = None
    if theorem == "T2":
        toughness = _toughness(g, max_n).value
        hyps = {"kappa": kappa >= param + 2, "toughness": toughness > Fraction(param + 1, 3)}
    elif theorem == "T3":
        sigma3 = _sigma3(g)
        hyps = {"kappa": kappa >= param + 1, "sigma3": sigma3 >= n + 2 * param}
    elif theorem == "T4":
        toughness = _toughness(g, max_n).value
        hyps = {"kappa": kappa >= 2 * param + 1, "toughness": toughness >= Fraction(param + 1, param + 2)}
    else:
        sigma3 = _sigma3(g)
        hyps = {"kappa": kappa >= 2 * param + 1, "sigma3": sigma3 >= n + 2 * param}
    if theorem in ("T2", "T3"):
        verdict = is_critical(g, param, budget, max_n)
    else:
        verdict = is_deleted(g, param, budget, max_n)
    hold = all(hyps.values())
    return TheoremVerdict(
        theorem=theorem,
        param=param,
        hypotheses=hyps,
        hypotheses_hold=hold,
        conclusion_holds=verdict.holds,
        is_counterexample=hold and not verdict.holds,
        kappa=kappa,
        toughness=toughness,
        sigma3=sigma3,
        robustness=verdict,
    )


@dataclass
class HuntReport:
    theorem: str
    param: int
    corpus: str = ""
    total: int = 0
    evaluated: int = 0
    skipped: int = 0
    hypotheses_held: int = 0
    conclusion_held: int = 0
    counterexamples: list[str] = field(default_factory=list)
    skip_reasons: dict[str, int] = field(default_factory=dict)

    def merge(self, other: HuntReport) -> HuntReport:
        reasons = dict(self.skip_reasons)
        for k, v in other.skip_reasons.items():
            reasons[k] = reasons.get(k, 0) + v
        return HuntReport(
            self.theorem,
            self.param,
            self.corpus,
            self.total + other.total,
            self.evaluated + other.evaluated,
            self.skipped + other.skipped,
            self.hypotheses_held + other.hypotheses_held,
            self.conclusion_held + other.conclusion_held,
            self.counterexamples + other.counterexamples,
            reasons,
        )


def _evaluate(args: tuple[str, str, int, int, int]) -> tuple[str, str, bool, bool, bool]:
    """Worker body: (graph6, "ok" | skip reason, hypotheses_hold, conclusion_holds, counterexample)."""
    g6, theorem, param, budget, max_n = args
    try:
        v = check_theorem(parse_graph6(g6), theorem, param, budget, max_n)
    except BudgetExceeded:
        return g6, "budget", False, False, False
    except ValueError:
        return g6, "precondition", False, False, False
    return g6, "ok", v.hypotheses_hold, v.conclusion_holds, v.is_counterexample


def hunt(
    corpus: Iterable[Graph],
    theorem: str,
    param: int,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    max_n: int = 20,
    corpus_name: str = "",
    progress: Callable[[int], None] | None = None,
) -> HuntReport:
    """Run ``check_theorem`` over a corpus and tally the outcome.

    Results are consumed in corpus order, so the report does not depend on
    ``jobs``. Graphs that exceed a budget or violate a precondition are
    counted as skips rather than dropped.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if param < 1:
        raise ValueError("theorem parameter must be positive")
    report = HuntReport(theorem, param, corpus_name)
    tasks = ((to_graph6(g), theorem, param, budget, max_n) for g in corpus)
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_evaluate, tasks, chunksize=256)
    else:
        pool = None
        results = map(_evaluate, tasks)
    try:
        for task_g6, status, hyp, concl, cex in results:
            report.total += 1
            if status != "ok":
                report.skipped += 1
                report.skip_reasons[status] = report.skip_reasons.get(status, 0) + 1
            else:
                report.evaluated += 1
                report.hypotheses_held += hyp
                report.conclusion_held += concl
                if cex:
                    log.warning("counterexample to %s (param %d): %s", theorem, param, task_g6)
                    report.counterexamples.append(task_g6)
            if progress is not None:
                progress(report.total)
    finally:
        if pool is not None:
            pool.shutdown()
    return report


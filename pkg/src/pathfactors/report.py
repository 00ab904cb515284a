"""JSON-ready report documents for graphs, certificates and verdicts."""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Any

from .connectivity import edge_connectivity, vertex_connectivity
from .factor import Obstruction, PathFactor, certify, validate_obstruction, validate_path_factor
from .graph import BudgetExceeded, Graph, omega, to_graph6
from .robustness import HuntReport, RobustnessVerdict, SigmaValue, TheoremVerdict, sigma_k
from .sun import ToughnessResult, isolated_count, sun_count, sun_toughness

SCHEMA_VERSION = 1


def number(value: Any) -> Any:
    """Exact rationals as ``"p/q"``, infinity as ``"inf"``, integers unchanged."""
    if value is None:
        return None
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def certificate_doc(g: Graph, cert: PathFactor | Obstruction) -> dict:
    if isinstance(cert, PathFactor):
        if not validate_path_factor(g, cert):
            raise AssertionError("path factor failed re-validation")
        return {"type": "path_factor", "paths": [list(p) for p in cert.paths]}
    if not validate_obstruction(g, cert):
        raise AssertionError("obstruction failed re-validation")
    return {"type": "obstruction", "x": sorted(cert.x), "sun_count": cert.sun_count}


def toughness_doc(t: ToughnessResult) -> dict:
    return {
        "value": number(t.value),
        "witness": None if t.witness is None else sorted(t.witness),
        "sun_count": t.sun_count_at_witness,
    }


def sigma_doc(s: SigmaValue, k: int) -> dict:
    return {"k": k, "value": number(s.value), "witness": None if s.witness is None else list(s.witness)}


def robustness_doc(v: RobustnessVerdict) -> dict:
    removed = None
    if v.removed is not None:
        removed = [list(e) for e in v.removed] if v.property == "deleted" else list(v.removed)
    doc = {
        "property": v.property,
        "param": v.param,
        "holds": v.holds,
        "checked": v.checked,
        "removed": removed,
        "obstruction": None
        if v.obstruction is None
        else {"x": sorted(v.obstruction.x), "sun_count": v.obstruction.sun_count},
    }
    if len(v.failures) > 1:
        doc["failures"] = [[list(e) for e in f] if v.property == "deleted" else list(f) for f in v.failures]
    return doc


def theorem_doc(v: TheoremVerdict) -> dict:
    return {
        "theorem": v.theorem,
        "param": v.param,
        "kappa": v.kappa,
        "toughness": number(v.toughness),
        "sigma3": number(v.sigma3),
        "hypotheses": dict(v.hypotheses),
        "hypotheses_hold": v.hypotheses_hold,
        "conclusion_holds": v.conclusion_holds,
        "is_counterexample": v.is_counterexample,
        "robustness": None if v.robustness is None else robustness_doc(v.robustness),
    }


def hunt_doc(r: HuntReport) -> dict:
    return {
        "theorem": r.theorem,
        "param": r.param,
        "corpus": r.corpus,
        "total": r.total,
        "evaluated": r.evaluated,
        "skipped": r.skipped,
        "skip_reasons": dict(sorted(r.skip_reasons.items())),
        "hypotheses_held": r.hypotheses_held,
        "conclusion_held": r.conclusion_held,
        "counterexample_count": len(r.counterexamples),
        "counterexamples": list(r.counterexamples),
    }


def analysis_report(g: Graph, source: str = "", max_n: int = 20, timing: bool = True) -> dict:
    """Every computed quantity for one graph plus a certificate for P>=3-factor existence.

    Quantities whose exact computation exceeds ``max_n`` are reported as
    ``{"skipped": reason}``; ``doc["skipped"]`` lists their names.
    """
    start = time.perf_counter()
    doc: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "input": {"source": source, "graph6": to_graph6(g)},
        "n": g.n,
        "edges": g.num_edges,
        "omega": omega(g),
        "kappa": vertex_connectivity(g) if g.n else None,
        "lambda": edge_connectivity(g),
        "min_degree": g.min_degree() if g.n else None,
        "sun_count": sun_count(g),
        "isolated_count": isolated_count(g),
        "sigma3": sigma_doc(sigma_k(g, 3), 3),
    }
    skipped = []
    try:
        doc["sun_toughness"] = toughness_doc(sun_toughness(g, max_n)) if g.n else None
    except BudgetExceeded as exc:
        doc["sun_toughness"] = {"skipped": str(exc)}
        skipped.append("sun_toughness")
    try:
        cert = certify(g, max_n)
        doc["has_p3_factor"] = isinstance(cert, PathFactor)
        doc["certificate"] = certificate_doc(g, cert)
    except BudgetExceeded as exc:
        doc["has_p3_factor"] = None
        doc["certificate"] = {"skipped": str(exc)}
        skipped.append("certificate")
    doc["skipped"] = skipped
    if timing:
        doc["timing_ms"] = round(1000 * (time.perf_counter() - start), 3)
    return doc

"""Acceptance criteria, one marked group per criterion.

Each criterion's verdict is printed as a single PASS/FAIL line in the
pytest terminal summary. Runtime limits are pinned here and asserted.
"""

import time
from fractions import Fraction

import pytest

from pathfactors import families
from pathfactors.corpus import CorpusSpec, corpus_stream, exhaustive, gnp
from pathfactors.factor import (
    Obstruction,
    PathFactor,
    certify,
    find_p3_factor,
    has_p3_factor,
    validate_obstruction,
    validate_path_factor,
)
from pathfactors.graph import delete_edges, delete_vertices, empty_graph, parse_graph6, to_graph6
from pathfactors.matching import brute_matching_oracle, maximum_matching
from pathfactors.robustness import check_theorem, hunt, is_critical, is_deleted, probe_edge_deletion
from pathfactors.connectivity import vertex_connectivity
from pathfactors.sun import sun_count, sun_toughness

from .conftest import random_graphs

EQUIVALENCE_LIMIT_S = 120
REMARK1_LIMIT_S = 30
HUNT_LIMIT_S = 600

HUNT_CORPORA = (
    CorpusSpec("exhaustive", n=6),
    CorpusSpec("gnp", n=10, p=0.7, seed=7, count=200),
    CorpusSpec("gnp", n=9, p=0.85, seed=11, count=200),
    CorpusSpec("gnp", n=8, p=0.5, seed=3, count=200),
)


def equivalence_random_corpus():
    """500 graphs: n in 7..10 by five densities, 25 per cell, seeds derived from (n, p)."""
    out = []
    for n in range(7, 11):
        for p in (0.15, 0.3, 0.45, 0.6, 0.8):
            out.extend(gnp(n, p, n * 100 + int(p * 100), 25))
    return out


@pytest.mark.criterion(1, "criterion and path-partition search agree (exhaustive(6) + 500 random)")
def test_oracle_equivalence(six_vertex_graphs):
    start = time.perf_counter()
    rand = equivalence_random_corpus()
    assert len(six_vertex_graphs) == 32768 and len(rand) == 500
    assert {g.n for g in rand} == {7, 8, 9, 10}
    disagreements = [to_graph6(g) for g in six_vertex_graphs + rand if has_p3_factor(g) != (find_p3_factor(g) is not None)]
    elapsed = time.perf_counter() - start
    assert disagreements == []
    assert elapsed < EQUIVALENCE_LIMIT_S, f"{elapsed:.1f}s"


@pytest.mark.criterion(2, "blossom matching size equals brute force (exhaustive(<=6) + 200 random)")
def test_matching_correctness():
    sample = [g for n in range(7) for g in exhaustive(n)]
    rand = [g for g in random_graphs(range(6, 13), 500, seed=2) if g.num_edges <= 24][:200]
    assert len(rand) == 200
    for g in sample + rand:
        assert len(maximum_matching(g)) == len(brute_matching_oracle(g)), to_graph6(g)


@pytest.mark.criterion(3, "K_{l+1} v 3K2: s = (l+1)/3, kappa = l+1, not l-critical, l = 1..3")
@pytest.mark.parametrize("l", [1, 2, 3])
def test_remark1_reproduction(l):
    start = time.perf_counter()
    g = families.remark1(l)
    t = sun_toughness(g)
    assert t.value == Fraction(l + 1, 3)
    assert vertex_connectivity(g) == l + 1
    v = is_critical(g, l)
    assert not v.holds
    h, relabel = delete_vertices(g, v.removed)
    x = frozenset(relabel[u] for u in v.obstruction.x)
    assert sun_count(delete_vertices(h, x)[0]) == v.obstruction.sun_count > 2 * len(x)
    if l == 1:
        assert v.obstruction.sun_count == 3 and len(x) == 1
    assert time.perf_counter() - start < REMARK1_LIMIT_S


@pytest.mark.criterion(4, "K_{2m+1} v (3m+3)K2: exact values at m=1, kappa and witness failure at m=2")
def test_remark2_m1():
    g = families.remark2(1)
    assert g.n == 15
    assert sun_toughness(g).value == Fraction(1, 2)
    assert vertex_connectivity(g) == 3
    v = is_deleted(g, 1)
    assert not v.holds
    assert v.obstruction == Obstruction(frozenset({0, 1, 2}), 7)
    assert validate_obstruction(delete_edges(g, v.removed), v.obstruction)


@pytest.mark.criterion(4, "K_{2m+1} v (3m+3)K2: exact values at m=1, kappa and witness failure at m=2")
def test_remark2_m2():
    g = families.remark2(2)
    assert g.n == 23
    assert vertex_connectivity(g) == 5
    join_set = frozenset(range(5))
    # two K2 parts lose their edge: 7 K2 + 4 K1 suns against |X| = 5
    removed = [(15, 16), (17, 18)]
    ob = probe_edge_deletion(g, removed, max_n=23)
    assert ob == Obstruction(join_set, 11)
    assert validate_obstruction(delete_edges(g, removed), ob)
    # upper bound on s(G) from the join set alone
    suns = sun_count(delete_vertices(g, join_set)[0])
    assert suns == 9 and Fraction(len(join_set), suns) == Fraction(5, 9)


@pytest.mark.criterion(5, "zero counterexamples for T2-T5, l,m in {1,2}, four corpora, under 10 min")
def test_theorem_validation():
    start = time.perf_counter()
    failures = []
    for spec in HUNT_CORPORA:
        for theorem in ("T2", "T3", "T4", "T5"):
            for param in (1, 2):
                r = hunt(corpus_stream(spec), theorem, param, corpus_name=spec.describe())
                assert r.skipped == 0, (spec.describe(), theorem, param, r.skip_reasons)
                if r.counterexamples:
                    failures.append((spec.describe(), theorem, param, r.counterexamples))
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < HUNT_LIMIT_S, f"{elapsed:.1f}s"


@pytest.mark.criterion(6, "strict s(G) > (l+1)/3 fails at equality; K_{l+4} passes T2")
@pytest.mark.parametrize("l", [1, 2, 3])
def test_boundary_exactness(l):
    v = check_theorem(families.remark1(l), "T2", l)
    assert v.toughness == Fraction(l + 1, 3)
    assert v.hypotheses["toughness"] is False
    assert not v.hypotheses_hold and not v.is_counterexample
    # In K_{l+1} v 3K2 kappa = l+1 < l+2 fails too. K_{2l+2} v 6K1 sits on the
    # same toughness value with kappa = 2l+2, so there strictness is the only cause.
    g = families.join(families.complete(2 * l + 2), empty_graph(6))
    v = check_theorem(g, "T2", l)
    assert v.toughness == Fraction(l + 1, 3)
    assert v.hypotheses == {"kappa": True, "toughness": False}
    v = check_theorem(families.complete(l + 4), "T2", l)
    assert v.hypotheses_hold and v.conclusion_holds and not v.is_counterexample


@pytest.mark.criterion(7, "every emitted PathFactor and Obstruction re-validates")
def test_certificate_self_validation(six_vertex_graphs):
    sample = [g for n in range(6) for g in exhaustive(n)] + six_vertex_graphs + equivalence_random_corpus()
    sample += [families.remark1(l) for l in (1, 2, 3)] + [families.remark2(1), families.petersen()]
    counts = {"factor": 0, "obstruction": 0}
    for g in sample:
        cert = certify(g)
        if isinstance(cert, PathFactor):
            assert validate_path_factor(g, cert), to_graph6(g)
            counts["factor"] += 1
        else:
            assert validate_obstruction(g, cert), to_graph6(g)
            counts["obstruction"] += 1
    assert counts["factor"] and counts["obstruction"]


@pytest.mark.criterion(8, "graph6 decode(encode(G)) == G on every corpus graph")
def test_graph6_round_trip():
    corpora = [g for n in range(7) for g in exhaustive(n)] + equivalence_random_corpus()
    for spec in HUNT_CORPORA[1:]:
        corpora += list(corpus_stream(spec))
    corpora += [families.remark2(2), families.cycle(70)]
    for g in corpora:
        assert parse_graph6(to_graph6(g)) == g

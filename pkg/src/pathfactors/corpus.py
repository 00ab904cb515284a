"""Graph corpora: exhaustive labelled enumeration, seeded G(n, p), and graph6 files."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .graph import Graph, GraphError, parse_graph6

MAX_EXHAUSTIVE_N = 7


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: column-major over the upper triangle
    return [(i, j) for j in range(1, n) for i in range(j)]


def exhaustive(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs on n vertices; graph k has edge i iff bit i of k is set."""
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise GraphError(f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        adj = [0] * n
        i = 0
        c = code
        while c:
            if c & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            i += 1
        yield Graph(n, tuple(adj))


def gnp(n: int, p: float, seed: int, count: int) -> Iterator[Graph]:
    """``count`` Erdos-Renyi graphs drawn from one ``random.Random(seed)`` stream."""
    if n < 0 or count < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"invalid gnp parameters n={n}, p={p}, count={count}")
    rng = random.Random(seed)
    pairs = _pairs(n)
    for _ in range(count):
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def graph6_file(path: str | Path) -> Iterator[Graph]:
    try:
        fh = open(path, encoding="ascii")
    except OSError as exc:
        raise GraphError(f"cannot read graph6 file {path}: {exc}") from None
    with fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line)


@dataclass(frozen=True)
class CorpusSpec:
    kind: str  # "exhaustive", "gnp" or "file"
    n: int = 0
    p: float = 0.0
    seed: int = 0
    count: int = 0
    path: str = ""

    def describe(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive({self.n})"
        if self.kind == "gnp":
            return f"gnp({self.n}, {self.p}, seed={self.seed}, count={self.count})"
        return f"graph6_file({self.path})"


def corpus_stream(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.kind == "exhaustive":
        if spec.n > MAX_EXHAUSTIVE_N:
            raise GraphError(f"n={spec.n} too large for exhaustive mode (max {MAX_EXHAUSTIVE_N})")
        return exhaustive(spec.n)
    if spec.kind == "gnp":
        return gnp(spec.n, spec.p, spec.seed, spec.count)
    if spec.kind == "file":
        return graph6_file(spec.path)
    raise GraphError(f"unknown corpus kind {spec.kind!r}")

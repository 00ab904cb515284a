"""Maximum cardinality matching (Edmonds' blossom contraction) and factor-criticality."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .graph import Graph, bits, delete_vertices

Matching = frozenset  # of (u, v) pairs with u < v


class OracleTooLarge(ValueError):
    pass


def maximum_matching(g: Graph) -> frozenset[tuple[int, int]]:
    match = _blossom(g)
    return frozenset((v, w) for v, w in enumerate(match) if w > v)


def _blossom(g: Graph) -> list[int]:
    """Mate array of a maximum matching; scans roots and neighbours in ascending order."""
    n = g.n
    nbrs = [list(bits(a)) for a in g.adj]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    for root in range(n):
        if match[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])
        end = -1

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue and end == -1:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])

        # augment along the alternating path ending at ``end``
        v = end
        while v != -1:
            pv = parent[v]
            nv = match[pv]
            match[v], match[pv] = pv, v
            v = nv
    return match


def matching_size(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_blossom(g)) if w > v)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return all(w != -1 for w in _blossom(g))


@lru_cache(maxsize=1 << 16)
def is_factor_critical(g: Graph) -> bool:
    """True iff G - v has a perfect matching for every v (K1 qualifies vacuously)."""
    if g.n % 2 == 0:
        return False
    return all(has_perfect_matching(delete_vertices(g, [v])[0]) for v in range(g.n))


def is_matching(g: Graph, m) -> bool:
    used: set[int] = set()
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def brute_matching_oracle(g: Graph, max_edges: int = 24) -> frozenset[tuple[int, int]]:
    """Maximum matching by exhaustive include/exclude search over the edge list.

    Branches that would reuse a matched endpoint, or that cannot beat the
    incumbent even by taking every remaining edge, are cut.
    """
    edges = g.edges
    if len(edges) > max_edges:
        raise OracleTooLarge(f"oracle limited to {max_edges} edges, graph has {len(edges)}")
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def go(i: int, used: int) -> None:
        nonlocal best
        if len(chosen) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            best = list(chosen)
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append((u, v))
            go(i + 1, used | (1 << u) | (1 << v))
            chosen.pop()
        go(i + 1, used)

    go(0, 0)
    return frozenset(best)

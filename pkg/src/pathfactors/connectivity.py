"""Vertex and edge connectivity through unit-capacity augmenting paths (Menger)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits


def _max_flow(succ: list[list[int]], cap: dict[tuple[int, int], int], s: int, t: int, limit: int) -> int:
    """BFS augmenting paths on a residual map; stops early once ``limit`` is reached."""
    flow = 0
    while flow < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y in succ[x]:
                if y not in parent and cap.get((x, y), 0) > 0:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while y != s:
            x = parent[y]
            cap[(x, y)] -= 1
            cap[(y, x)] = cap.get((y, x), 0) + 1
            y = x
        flow += 1
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s``, ``t``.

    Each vertex v is split into v_in = 2v and v_out = 2v + 1 joined by a
    unit arc; s and t are left uncapacitated.
    """
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity is undefined for adjacent vertices")
    n = g.n
    big = n + 1
    succ: list[list[int]] = [[] for _ in range(2 * n)]
    cap: dict[tuple[int, int], int] = {}

    def arc(x: int, y: int, c: int) -> None:
        succ[x].append(y)
        succ[y].append(x)
        cap[(x, y)] = c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in bits(g.adj[v]):
            arc(2 * v + 1, 2 * w, big)
    return _max_flow(succ, cap, 2 * s + 1, 2 * t, n if limit is None else limit)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); a complete graph K_n gets n - 1 since no separating set exists."""
    n = g.n
    if n < 1:
        raise ValueError("vertex connectivity needs at least one vertex")
    if g.is_complete():
        return n - 1
    best = g.min_degree()
    i = 0
    # Some vertex among the first best+1 survives a minimum cut; pairing it with
    # later vertices is enough.
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, local_vertex_connectivity(g, i, j, limit=best))
                if best == 0:
                    return 0
        i += 1
    return best


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    succ = [list(bits(a)) for a in g.adj]
    cap = {(v, w): 1 for v in range(g.n) for w in succ[v]}
    return _max_flow(succ, cap, s, t, g.n if limit is None else limit)


def edge_connectivity(g: Graph) -> int:
    """lambda(G) as the minimum over t of max-flow(0, t); 0 when n < 2."""
    if g.n < 2:
        return 0
    best = g.min_degree()
    for t in range(1, g.n):
        if best == 0:
            break
        best = min(best, local_edge_connectivity(g, 0, t, limit=best))
    return best

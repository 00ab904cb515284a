"""Immutable simple graphs on dense vertex ids 0..n-1.

Adjacency is stored as one integer bitmask per vertex, which keeps subset
sweeps (vertex deletion, component search) cheap on desk-scale graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or an out-of-range vertex/edge argument."""


class BudgetExceeded(RuntimeError):
    """An exact enumeration would exceed its configured size bound."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(a | (1 << v) == full for v, a in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# --- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 encoding supports n <= 258047, got {n}")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("malformed graph6: empty input")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise Graph6Error(f"malformed graph6: byte outside printable range in {s!r}")
    if codes[0] < 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] < 63:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        raise Graph6Error(f"malformed graph6 header in {s!r}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"malformed graph6: expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# --- plain edge-list text ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n\\nu v\\n..."``; blank lines and ``#`` comments are ignored."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise GraphError("edge list must start with a line holding the vertex count")
    try:
        n = int(rows[0][0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return from_edge_list(n, pairs)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


# --- deletion ---------------------------------------------------------------


def induced(g: Graph, keep: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the bitmask ``keep``; also returns new->old ids."""
    old = list(bits(keep))
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        a = 0
        for w in bits(g.adj[v] & keep):
            a |= 1 << pos[w]
        adj.append(a)
    return Graph(len(old), tuple(adj)), old


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G - S`` and the relabeling map from surviving old ids to new ids."""
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    h, old = induced(g, g.full_mask & ~to_mask(s))
    return h, {v: i for i, v in enumerate(old)}


def delete_edges(g: Graph, f: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in f:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


# --- components -------------------------------------------------------------


def component_masks(adj: tuple[int, ...] | list[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, ordered by minimum vertex."""
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g.adj, g.full_mask)]


def omega(g: Graph) -> int:
    return len(component_masks(g.adj, g.full_mask))


def is_connected(g: Graph) -> bool:
    return omega(g) <= 1

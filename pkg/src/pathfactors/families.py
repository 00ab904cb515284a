"""Named graph families, including the two sharpness constructions."""

from __future__ import annotations

from typing import Callable

from .graph import Graph, GraphError, empty_graph, from_edge_list


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the ``a`` side gets ids 0..a-1."""
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}; the centre is vertex 0."""
    return complete_bipartite(1, n)


def union(*graphs: Graph) -> Graph:
    """Disjoint union; each operand's ids are shifted past the previous ones."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def disjoint_copies(g: Graph, k: int) -> Graph:
    return union(*([g] * k)) if k else empty_graph(0)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts (``g`` first)."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [a | hmask for a in g.adj] + [(a << g.n) | gmask for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def remark1(l: int) -> Graph:
    """K_{l+1} joined with 3K_2: a non-critical graph sitting exactly on the toughness bound."""
    _positive(l=l)
    return join(complete(l + 1), disjoint_copies(complete(2), 3))


def remark2(m: int) -> Graph:
    """K_{2m+1} joined with (3m+3)K_2."""
    _positive(m=m)
    return join(complete(2 * m + 1), disjoint_copies(complete(2), 3 * m + 3))


def big_sun_on_core(core: Graph) -> Graph:
    """Attach pendant ``h + i`` to core vertex ``i``."""
    h = core.n
    pairs = list(core.edges) + [(i, h + i) for i in range(h)]
    return from_edge_list(2 * h, pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def _positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value <= 0:
            raise GraphError(f"parameter {name} must be a positive integer, got {value!r}")


_FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "complete": (complete, ("n",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "petersen": (petersen, ()),
    "remark1": (remark1, ("l",)),
    "remark2": (remark2, ("m",)),
}

INTEGER_FAMILIES = tuple(_FAMILIES)
FAMILY_NAMES = INTEGER_FAMILIES + ("disjoint_copies", "join", "big_sun_on_core")


def generate_family(family: str, **params) -> Graph:
    """Build a member of a named family.

    ``disjoint_copies`` takes ``graph`` and ``k``; ``join`` takes ``left`` and
    ``right``; ``big_sun_on_core`` takes ``core``. The rest take positive
    integer parameters named in ``_FAMILIES``.
    """
    if family == "disjoint_copies":
        _positive(k=params["k"])
        return disjoint_copies(params["graph"], params["k"])
    if family == "join":
        return join(params["left"], params["right"])
    if family == "big_sun_on_core":
        return big_sun_on_core(params["core"])
    if family not in _FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILY_NAMES)}")
    fn, names = _FAMILIES[family]
    missing = [p for p in names if p not in params]
    if missing:
        raise GraphError(f"family {family!r} needs parameter(s): {', '.join(missing)}")
    args = {p: params[p] for p in names}
    _positive(**args)
    return fn(**args)

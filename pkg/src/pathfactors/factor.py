"""P>=3-factors: the sun criterion, a constructive search, and certificates for both outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import BudgetExceeded, Graph, bits, component_masks, to_mask
from .sun import sun_count_mask


@dataclass(frozen=True)
class PathFactor:
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Obstruction:
    """A vertex set X whose removal leaves more than 2|X| sun components."""

    x: frozenset[int]
    sun_count: int


class SearchLimitReached(BudgetExceeded):
    """The backtracking search hit its node limit before deciding."""


class CertificateError(AssertionError):
    """The two decision procedures disagreed; indicates a bug, never expected."""


def validate_path_factor(g: Graph, pf: PathFactor) -> bool:
    seen: set[int] = set()
    for p in pf.paths:
        if len(p) < 3 or any(not 0 <= v < g.n for v in p):
            return False
        if seen.intersection(p) or len(set(p)) != len(p):
            return False
        seen.update(p)
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
    return len(seen) == g.n


def validate_obstruction(g: Graph, ob: Obstruction) -> bool:
    if any(not 0 <= v < g.n for v in ob.x):
        return False
    recount = sun_count_mask(g, g.full_mask & ~to_mask(ob.x))
    return recount == ob.sun_count and recount > 2 * len(ob.x)


def sun_criterion_violation(g: Graph, max_n: int = 20) -> Obstruction | None:
    """Smallest (then lexicographically first) X with sun(G - X) > 2|X|, if any.

    Since sun(G - X) <= n - |X|, only |X| < n/3 can violate.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"exact criterion sweep limited to n <= {max_n}, got n={n}")
    full = g.full_mask
    k = 0
    while 3 * k < n:
        for xs in combinations(range(n), k):
            s = sun_count_mask(g, full & ~to_mask(xs))
            if s > 2 * k:
                return Obstruction(frozenset(xs), s)
        k += 1
    return None


def has_p3_factor(g: Graph, max_n: int = 20) -> bool:
    return sun_criterion_violation(g, max_n) is None


def _arms(adj, start: int, length: int, free: int) -> Iterator[tuple[int, ...]]:
    """Simple paths of ``length`` vertices inside ``free`` leaving ``start`` (excluded)."""
    if length == 0:
        yield ()
        return
    for w in bits(adj[start] & free):
        for rest in _arms(adj, w, length - 1, free & ~(1 << w)):
            yield (w,) + rest


def _paths_through(adj, v: int, free: int) -> Iterator[tuple[int, ...]]:
    """Paths of order 3, 4, 5 in ``free`` containing ``v``, each listed once."""
    free &= ~(1 << v)
    for order in (3, 4, 5):
        for left_len in range((order - 1) // 2 + 1):
            right_len = order - 1 - left_len
            for left in _arms(adj, v, left_len, free):
                rest = free & ~to_mask(left)
                for right in _arms(adj, v, right_len, rest):
                    # v in the middle: keep one of the two mirror images
                    if left_len == right_len and left[0] > right[0]:
                        continue
                    yield left[::-1] + (v,) + right


def _too_many_pendants(adj, free: int) -> bool:
    """A vertex with three uncovered neighbours of uncovered degree 1 cannot be served.

    Each such neighbour must end a path at that vertex, and a path has room
    for only two of them.
    """
    seen = 0
    twice = 0
    for v in bits(free):
        nb = adj[v] & free
        if nb.bit_count() == 1:
            if twice & nb:
                return True
            twice |= seen & nb
            seen |= nb
    return False


def find_p3_factor(g: Graph, max_n: int = 40, node_limit: int | None = None) -> PathFactor | None:
    """Backtracking search for a spanning family of paths of order 3 to 5.

    Any path of order >= 6 splits into two paths of order >= 3, so orders
    3..5 lose no solutions. The uncovered vertex with fewest uncovered
    neighbours (lowest id on ties) is extended next, and uncovered sets
    already shown dead are memoised. With ``node_limit``
    set, ``SearchLimitReached`` is raised once that many candidate paths
    have been tried.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"path-factor search limited to n <= {max_n}, got n={n}")
    adj = g.adj
    dead: set[int] = set()
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def solve(free: int) -> bool:
        nonlocal nodes
        if not free:
            return True
        if free in dead:
            return False
        if any(c.bit_count() < 3 for c in component_masks(adj, free)) or _too_many_pendants(adj, free):
            dead.add(free)
            return False
        v = min(bits(free), key=lambda u: (adj[u] & free).bit_count())
        for p in _paths_through(adj, v, free):
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise SearchLimitReached(f"path-factor search exceeded {node_limit} steps")
            chosen.append(p)
            if solve(free & ~to_mask(p)):
                return True
            chosen.pop()
        dead.add(free)
        return False

    if solve(g.full_mask):
        return PathFactor(tuple(chosen))
    return None


SEARCH_NODE_LIMIT = 2_000


def decide(g: Graph, max_n: int = 20, search_max_n: int = 40) -> bool:
    """Existence of a P>=3-factor: bounded search first, the sun criterion if the search stalls."""
    try:
        return find_p3_factor(g, search_max_n, SEARCH_NODE_LIMIT) is not None
    except SearchLimitReached:
        return sun_criterion_violation(g, max_n) is None


def certify(g: Graph, max_n: int = 20, search_max_n: int = 40) -> PathFactor | Obstruction:
    """Return a path factor when one exists, otherwise a sun-criterion obstruction.

    A bounded search runs first since it settles most graphs quickly; when it
    stalls the criterion sweep decides, and an unbounded search then produces
    the factor it promises.
    """
    try:
        pf = find_p3_factor(g, search_max_n, SEARCH_NODE_LIMIT)
    except SearchLimitReached:
        ob = sun_criterion_violation(g, max_n)
        if ob is not None:
            return ob
        pf = find_p3_factor(g, search_max_n)
        if pf is None:
            raise CertificateError(f"sun criterion holds but no path factor exists for {g!r}") from None
        return pf
    if pf is not None:
        return pf
    ob = sun_criterion_violation(g, max_n)
    if ob is None:
        raise CertificateError(f"no path factor found but the sun criterion holds for {g!r}")
    return ob

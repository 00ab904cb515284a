"""Sun recognition, sun-component counting and exact sun toughness."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graph import BudgetExceeded, Graph, GraphError, bits, component_masks, induced, omega, to_mask
from .matching import is_factor_critical


@dataclass(frozen=True)
class SunDecomposition:
    """Proof that a connected graph is a sun.

    For ``kind == "big"`` the core induces a factor-critical graph and
    ``pendants`` pairs each core vertex with its degree-1 neighbour.
    """

    kind: str  # "K1", "K2" or "big"
    core: tuple[int, ...] = ()
    pendants: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class ToughnessResult:
    value: Fraction | float  # math.inf for complete graphs
    witness: frozenset[int] | None = None
    sun_count_at_witness: int | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf


def _big_sun_split(adj, comp: int) -> tuple[int, list[tuple[int, int]]] | None:
    """Return (core mask, pendant pairs) if the degree-1 structure of ``comp`` fits a big sun."""
    size = comp.bit_count()
    # a big sun has 2h vertices with h >= 3 odd
    if size < 6 or size % 4 != 2:
        return None
    pendants = []
    hit = 0
    for v in bits(comp):
        nb = adj[v] & comp
        if nb.bit_count() == 1:
            if hit & nb:
                return None
            hit |= nb
            pendants.append((nb.bit_length() - 1, v))
    if 2 * len(pendants) != size:
        return None
    pend_mask = to_mask(u for _, u in pendants)
    if hit != comp & ~pend_mask:
        return None
    return hit, sorted(pendants)


@lru_cache(maxsize=1 << 16)
def _core_is_factor_critical(core: Graph) -> bool:
    return is_factor_critical(core)


def component_is_sun(adj, comp: int) -> bool:
    """Sun test for the connected component ``comp`` (a bitmask) of an adjacency list."""
    size = comp.bit_count()
    if size <= 2:
        return size > 0
    split = _big_sun_split(adj, comp)
    if split is None:
        return False
    core_graph, _ = induced(Graph(len(adj), tuple(adj)), split[0])
    return _core_is_factor_critical(core_graph)


def is_sun(c: Graph) -> SunDecomposition | None:
    """Recognise a connected graph as K1, K2 or a big sun.

    The degree-1 vertices of a big sun are exactly its pendants, since a
    factor-critical core on three or more vertices has minimum degree 2.
    """
    if omega(c) != 1:
        raise GraphError("is_sun expects a connected graph with at least one vertex")
    if c.n == 1:
        return SunDecomposition("K1")
    if c.n == 2:
        return SunDecomposition("K2")
    split = _big_sun_split(c.adj, c.full_mask)
    if split is None:
        return None
    core_mask, pendants = split
    core_graph, _ = induced(c, core_mask)
    if not _core_is_factor_critical(core_graph):
        return None
    return SunDecomposition("big", tuple(bits(core_mask)), tuple(pendants))


def validate_sun_decomposition(c: Graph, d: SunDecomposition) -> bool:
    """Re-check every structural claim of ``d`` against ``c`` from scratch."""
    if d.kind == "K1":
        return c.n == 1
    if d.kind == "K2":
        return c.n == 2 and c.has_edge(0, 1)
    core = set(d.core)
    pend = [u for _, u in d.pendants]
    if len(core) < 3 or len(core) % 2 == 0 or len(d.pendants) != len(core):
        return False
    if sorted(v for v, _ in d.pendants) != sorted(core) or len(set(pend)) != len(pend):
        return False
    if core & set(pend) or len(core) + len(pend) != c.n:
        return False
    for v, u in d.pendants:
        if c.degree(u) != 1 or not c.has_edge(u, v):
            return False
    return is_factor_critical(induced(c, to_mask(core))[0])


def sun_count_mask(g: Graph, mask: int) -> int:
    """sun(G[mask])."""
    return sum(1 for comp in component_masks(g.adj, mask) if component_is_sun(g.adj, comp))


def sun_count(g: Graph) -> int:
    return sun_count_mask(g, g.full_mask)


def isolated_count(g: Graph) -> int:
    return sum(1 for a in g.adj if a == 0)


def sun_toughness(g: Graph, max_n: int = 20) -> ToughnessResult:
    """Exact s(G): min |X| / sun(G - X) over X with at least two sun components.

    Sizes are swept upward; once |X| / (n - |X|) can no longer beat the
    incumbent the sweep stops. Ties go to the smaller, then lexicographically
    first, X.
    """
    n = g.n
    if n < 1:
        raise GraphError("sun toughness needs at least one vertex")
    if g.is_complete():
        return ToughnessResult(math.inf)
    if n > max_n:
        raise BudgetExceeded(f"exact sun toughness limited to n <= {max_n}, got n={n}")
    full = g.full_mask
    best_x: tuple[int, ...] | None = None
    best_k, best_s = 0, 0
    for k in range(n - 1):
        if best_x is not None and k * best_s >= best_k * (n - k):
            break
        for xs in combinations(range(n), k):
            s = sun_count_mask(g, full & ~to_mask(xs))
            if s >= 2 and (best_x is None or k * best_s < best_k * s):
                best_x, best_k, best_s = xs, k, s
    # non-complete graphs always admit X = V - {u, v} for a non-edge uv
    assert best_x is not None
    return ToughnessResult(Fraction(best_k, best_s), frozenset(best_x), best_s)

"""Vertex-removal stability of the independence number.

A graph is (k, l)-stable when removing any k vertices lowers the independence
number by at most l; the parameter domain is n > k > l >= 0 and anything else
is rejected rather than extrapolated.  A (k, l)-stable graph on n vertices
satisfies alpha <= floor((n-k+1)/2) + l, and graphs attaining equality are
called tight.  Removal scans run in colexicographic order with two exact
prunes: a partial removal that already exceeds the allowed drop settles
instability immediately (supersets only lower alpha), and a branch whose
optimistic completion cannot beat the incumbent minimum is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from indstab.canon import canonical
from indstab.graphs import Graph
from indstab.mis import alpha_at_least, alpha_mask


def stability_bound(n: int, k: int, l: int) -> int:
    """Largest independence number a (k, l)-stable graph on n vertices can have."""
    if not n > k > l >= 0:
        raise ValueError(f"parameters must satisfy n > k > l >= 0, got {(n, k, l)}")
    return (n - k + 1) // 2 + l


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k < g.n:
        raise ValueError(f"k must be in [1, n), got k={k} with n={g.n}")


def alpha_drop(g: Graph, k: int) -> int:
    """Worst-case drop of the independence number over all k-vertex removals."""
    _check_k(g, k)
    adj = g.adj
    full = g.vertex_mask
    a = alpha_mask(adj, full)
    max_drop = min(k, a)
    best = 0  # largest drop seen

    def scan(start: int, removed: int, depth: int) -> bool:
        """Returns True once the maximum possible drop is certified."""
        nonlocal best
        if depth == k:
            rest = full & ~removed
            if alpha_at_least(adj, rest, a - best):
                return False
            sub_alpha = alpha_mask(adj, rest)
            best = a - sub_alpha
            return best == max_drop
        for v in range(start, g.n - (k - depth - 1)):
            # optimistic completion: each further removal drops alpha by <= 1
            if depth + 1 < k:
                rest = full & ~(removed | (1 << v))
                if alpha_at_least(adj, rest, a - best + (k - depth - 1)):
                    continue
            if scan(v + 1, removed | (1 << v), depth + 1):
                return True
        return False

    scan(0, 0, 0)
    return best


def is_stable(g: Graph, k: int, l: int) -> bool:
    """Whether every k-vertex removal lowers alpha by at most l."""
    _check_k(g, k)
    if not 0 <= l < k:
        raise ValueError(f"l must satisfy 0 <= l < k, got l={l} with k={k}")
    adj = g.adj
    full = g.vertex_mask
    a = alpha_mask(adj, full)
    need = a - l
    if need <= 0:
        return True

    def scan(start: int, removed: int, depth: int) -> bool:
        """True iff every completion keeps alpha >= need."""
        if not alpha_at_least(adj, full & ~removed, need):
            return False
        if depth == k:
            return True
        for v in range(start, g.n - (k - depth - 1)):
            if not scan(v + 1, removed | (1 << v), depth + 1):
                return False
        return True

    return scan(0, 0, 0)


def is_tight_stable(g: Graph, k: int, l: int) -> bool:
    """(k, l)-stable and attaining the stability bound exactly."""
    if alpha_mask(g.adj, g.vertex_mask) != stability_bound(g.n, k, l):
        # evaluate the bound first so parameter violations are still rejected
        return False
    return is_stable(g, k, l)


def stable_vertex_count(g: Graph) -> int:
    """Number of vertices whose removal leaves the independence number unchanged."""
    if g.n < 2:
        raise ValueError("stable_vertex_count needs at least 2 vertices")
    adj = g.adj
    full = g.vertex_mask
    a = alpha_mask(adj, full)
    return sum(
        1 for v in range(g.n) if alpha_at_least(adj, full & ~(1 << v), a)
    )


def check_stable_vertex_bound(g: Graph) -> bool:
    """alpha(G) <= floor(n - m/2) with m the stable vertex count; expected True."""
    if g.n < 2:
        raise ValueError("check needs at least 2 vertices")
    m = stable_vertex_count(g)
    a = alpha_mask(g.adj, g.vertex_mask)
    return a <= (2 * g.n - m) // 2


@dataclass
class StabilityProfile:
    """Per-k worst-case drops of a graph, computed lazily and cached.

    drops[k] is the worst drop over all k-vertex removals; it is nondecreasing
    in k and bounded by min(k, alpha).
    """

    graph: Graph
    alpha: int
    stable_vertex_count: int
    _drops: dict[int, int] = field(default_factory=dict)

    def drop(self, k: int) -> int:
        if k not in self._drops:
            self._drops[k] = alpha_drop(self.graph, k)
        return self._drops[k]

    def drops(self, k_max: int | None = None) -> list[int]:
        """[drop(1), ..., drop(k_max)], default k_max = n - 1."""
        if k_max is None:
            k_max = self.graph.n - 1
        return [self.drop(k) for k in range(1, k_max + 1)]


_profile_cache: dict[bytes, StabilityProfile] = {}


def profile(g: Graph) -> StabilityProfile:
    """Stability profile of a graph, cached across calls by canonical code.

    Cached profiles are keyed up to isomorphism, so callers must treat drop
    values as label-independent facts (which they are).
    """
    key = canonical(g).code
    prof = _profile_cache.get(key)
    if prof is None:
        prof = StabilityProfile(
            g, alpha_mask(g.adj, g.vertex_mask), stable_vertex_count(g)
        )
        _profile_cache[key] = prof
    return prof

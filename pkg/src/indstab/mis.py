"""Exact maximum-independent-set computation and the saturating-matching test.

The solver is branch and bound on bitmasks: branch on a maximum-degree vertex
of the residual subgraph (include it or exclude it), bound with a greedy
clique cover, and break every tie toward the lowest vertex label so witnesses
are reproducible.  Low-level helpers operate directly on adjacency rows and a
vertex mask, which lets the stability scans query induced subgraphs without
rebuilding Graph values.
"""

from __future__ import annotations

from dataclasses import dataclass

from indstab.graphs import Graph, vset_members


@dataclass(frozen=True)
class MisResult:
    """An exact independence number together with a witness set."""

    alpha: int
    witness: int  # vertex bitmask


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges of the queried graph."""

    pairs: tuple[tuple[int, int], ...]


def _cover_bound(adj: tuple[int, ...], mask: int) -> int:
    """Greedy clique cover size of the subgraph on `mask`.

    Any independent set meets each clique at most once, so the cover size
    bounds the independence number from above.
    """
    k = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & m
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        m &= ~clique
        k += 1
    return k


def _max_degree_vertex(adj: tuple[int, ...], mask: int) -> tuple[int, int]:
    """Vertex of maximum residual degree in `mask`, lowest label on ties."""
    best_v = -1
    best_d = -1
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        d = (adj[v] & mask).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
        m &= m - 1
    return best_v, best_d


def alpha_mask(adj: tuple[int, ...], mask: int) -> int:
    """Exact independence number of the induced subgraph on `mask`."""
    # greedy incumbent, lowest label first
    best = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        best += 1
        m &= ~(adj[v] | (1 << v))

    def bb(sub: int, size: int) -> None:
        nonlocal best
        v, d = _max_degree_vertex(adj, sub)
        if d <= 0:
            total = size + sub.bit_count()
            if total > best:
                best = total
            return
        if size + _cover_bound(adj, sub) <= best:
            return
        bb(sub & ~(adj[v] | (1 << v)), size + 1)
        bb(sub & ~(1 << v), size)

    if mask:
        bb(mask, 0)
    return best


def alpha_at_least(adj: tuple[int, ...], mask: int, target: int) -> bool:
    """Whether the subgraph on `mask` has an independent set of size >= target.

    Exits as soon as any independent set reaches the target, which makes
    stability scans cheap on graphs that are in fact stable.
    """
    if target <= 0:
        return True
    m = mask
    size = 0
    while m:
        v = (m & -m).bit_length() - 1
        size += 1
        if size >= target:
            return True
        m &= ~(adj[v] | (1 << v))

    found = False

    def bb(sub: int, size: int) -> None:
        nonlocal found
        if found:
            return
        v, d = _max_degree_vertex(adj, sub)
        if d <= 0:
            if size + sub.bit_count() >= target:
                found = True
            return
        if size + _cover_bound(adj, sub) < target:
            return
        bb(sub & ~(adj[v] | (1 << v)), size + 1)
        if not found:
            bb(sub & ~(1 << v), size)

    bb(mask, 0)
    return found


def alpha(g: Graph) -> int:
    """The independence number."""
    return alpha_mask(g.adj, g.vertex_mask)


def max_independent_set(g: Graph) -> MisResult:
    """Exact maximum independent set with a deterministic witness.

    The witness is the first optimum reached by the fixed branching order
    (include before exclude, lowest label on every tie), so repeated runs and
    relabeling-free reruns return the same set.
    """
    adj = g.adj
    best_size = 0
    best_set = 0

    def bb(sub: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        v, d = _max_degree_vertex(adj, sub)
        if d <= 0:
            total = size + sub.bit_count()
            if total > best_size:
                best_size = total
                best_set = chosen | sub
            return
        if size + _cover_bound(adj, sub) <= best_size:
            return
        bb(sub & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        bb(sub & ~(1 << v), chosen, size)

    bb(g.vertex_mask, 0, 0)
    return MisResult(best_size, best_set)


def all_max_independent_sets(g: Graph) -> list[int]:
    """Every maximum independent set, as bitmasks sorted by value.

    Guarded to n <= 32 because the output can be exponential.
    """
    if g.n > 32:
        raise ValueError(f"all_max_independent_sets is limited to n <= 32, got {g.n}")
    adj = g.adj
    target = alpha(g)
    out: list[int] = []

    def walk(sub: int, chosen: int, size: int) -> None:
        if size + _cover_bound(adj, sub) < target:
            return
        if size == target:
            out.append(chosen)
            return
        if not sub:
            return
        v = (sub & -sub).bit_length() - 1
        walk(sub & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        walk(sub & ~(1 << v), chosen, size)

    walk(g.vertex_mask, 0, 0)
    out.sort()
    return out


def is_independent(g: Graph, vertices: int) -> bool:
    """Whether a vertex set induces no edge."""
    m = vertices
    while m:
        v = (m & -m).bit_length() - 1
        if g.adj[v] & vertices:
            return False
        m &= m - 1
    return True


def saturating_matching(g: Graph, y: int) -> Matching | None:
    """A matching covering the independent set `y` with edges into the rest.

    Returns None when Hall's condition fails, i.e. some subset of `y` has a
    smaller external neighborhood than itself.  Augmenting paths are explored
    in ascending label order, so the result is deterministic.
    """
    if not is_independent(g, y):
        raise ValueError("the queried set is not independent")
    ys = vset_members(y)
    match_of: dict[int, int] = {}  # right vertex -> y vertex

    def augment(v: int, seen: set[int]) -> bool:
        m = g.adj[v] & ~y
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if u in seen:
                continue
            seen.add(u)
            if u not in match_of or augment(match_of[u], seen):
                match_of[u] = v
                return True
        return False

    for v in ys:
        if not augment(v, set()):
            return None
    pairs = sorted((yv, u) if yv < u else (u, yv) for u, yv in match_of.items())
    return Matching(tuple(pairs))

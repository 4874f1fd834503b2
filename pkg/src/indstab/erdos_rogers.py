"""Exact small-n values of the Erdos-Rogers function, independent-set form.

For parameters (n, s, t), the value is the minimum over all n-vertex graphs
with independence number at most s + t - 1 of the largest vertex subset whose
induced subgraph has independence number at most s - 1.  Complementation maps
this to the classical clique formulation, and the minimum over isomorphism
classes equals the minimum over labeled graphs, so the computation iterates
the enumeration catalog.  Whenever s > floor((n-t+1)/2) and s + t <= n + 1
the value equals n - t exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from indstab.enumeration import enumerate_graphs
from indstab.graphs import Graph, vset
from indstab.mis import alpha_mask

ER_MAX_N = 8


def max_subset_alpha_below(g: Graph, s: int) -> int:
    """Largest |S| whose induced subgraph has independence number <= s - 1.

    Scans subset sizes downward and stops at the first size with a qualifying
    subset; smaller sizes cannot do better.  Size s - 1 always qualifies, so
    the result is at least min(n, s - 1).
    """
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    limit = s - 1
    for q in range(g.n, 0, -1):
        for members in combinations(range(g.n), q):
            mask = vset(members)
            if alpha_mask(g.adj, mask) <= limit:
                return q
    return 0


def er_predicted(n: int, s: int, t: int) -> int | None:
    """n - t when the exact-value conditions hold, else None (not applicable)."""
    if min(n, s, t) < 1:
        raise ValueError(f"parameters must be positive, got {(n, s, t)}")
    if s > (n - t + 1) // 2 and s + t <= n + 1:
        return n - t
    return None


def _alpha_all_masks(adj: tuple[int, ...], n: int) -> list[int]:
    """Independence number of every induced subgraph, indexed by vertex mask."""
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        without = table[mask & (mask - 1)]
        with_v = 1 + table[mask & ~(adj[v] | (1 << v))]
        table[mask] = with_v if with_v > without else without
    return table


def _mbelow_all_s(adj: tuple[int, ...], n: int) -> list[int]:
    """[max_subset_alpha_below for s = 1..n], from one subset sweep."""
    table = _alpha_all_masks(adj, n)
    best_by_alpha = [0] * (n + 1)  # alpha value -> largest qualifying |S|
    for mask, a in enumerate(table):
        size = mask.bit_count()
        if size > best_by_alpha[a]:
            best_by_alpha[a] = size
    out = []
    running = 0
    for limit in range(n):  # limit = s - 1
        running = max(running, best_by_alpha[limit])
        out.append(running)
    return out


def er_f(n: int, s: int, t: int, *, jobs: int = 1) -> int:
    """Exact Erdos-Rogers value by scanning the enumeration catalog."""
    if min(n, s, t) < 1:
        raise ValueError(f"parameters must be positive, got {(n, s, t)}")
    if n > ER_MAX_N:
        raise ValueError(f"exact values are enumeration-backed, n <= {ER_MAX_N} only")
    cap = s + t - 1
    best = None
    for _, g in enumerate_graphs(n, jobs=jobs):
        if alpha_mask(g.adj, g.vertex_mask) > cap:
            continue
        value = max_subset_alpha_below(g, s)
        if best is None or value < best:
            best = value
    # the class with alpha <= s+t-1 is never empty: the complete graph qualifies
    assert best is not None
    return best


@dataclass(frozen=True)
class ErRow:
    s: int
    t: int
    predicted: int | None
    computed: int
    match: bool | None  # None when the prediction does not apply


def er_table(n: int, *, jobs: int = 1) -> list[ErRow]:
    """The full (s, t) grid at fixed n, one catalog pass for all cells.

    For every graph the per-s subset maxima come from a single sweep over all
    2^n induced subgraphs; the grid minimum then only depends on the graph's
    independence number, so cells are prefix minima over alpha buckets.
    """
    if not 1 <= n <= ER_MAX_N:
        raise ValueError(f"table needs 1 <= n <= {ER_MAX_N}, got {n}")
    # min_value[a][s-1] = min over graphs with alpha == a of mbelow(G, s)
    min_value = [[None] * n for _ in range(n + 1)]
    for _, g in enumerate_graphs(n, jobs=jobs):
        a = alpha_mask(g.adj, g.vertex_mask)
        row = min_value[a]
        for idx, value in enumerate(_mbelow_all_s(g.adj, g.n)):
            if row[idx] is None or value < row[idx]:
                row[idx] = value
    rows = []
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            cap = min(s + t - 1, n)  # alpha never exceeds n
            # incorporate alpha buckets up to the cap incrementally
            computed = None
            for a in range(1, cap + 1):
                v = min_value[a][s - 1]
                if v is not None and (computed is None or v < computed):
                    computed = v
            predicted = er_predicted(n, s, t)
            match = None if predicted is None else computed == predicted
            rows.append(ErRow(s, t, predicted, computed, match))
    return rows

"""Independent brute-force oracles the solver implementations are checked against.

Everything here deliberately avoids the package's own algorithms: the
independence oracle scans every one of the 2^n vertex subsets with vectorized
edge tests, the isomorphism oracle minimizes the adjacency code over all n!
permutations, and the census oracle deduplicates every labeled graph.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from indstab.graphs import Graph


def alpha_brute(g: Graph) -> int:
    """Independence number by scanning all 2^n subsets for independence."""
    n = g.n
    subsets = np.arange(1 << n, dtype=np.uint32)
    independent = np.ones(1 << n, dtype=bool)
    for u in range(n):
        row = g.adj[u]
        for v in range(u + 1, n):
            if (row >> v) & 1:
                independent &= ~(((subsets >> u) & (subsets >> v)) & 1).astype(bool)
    sizes = np.zeros(1 << n, dtype=np.uint8)
    for v in range(n):
        sizes += ((subsets >> v) & 1).astype(np.uint8)
    return int(sizes[independent].max())


def max_clique_brute(g: Graph) -> int:
    """Largest clique size by direct subset scan (small n only)."""
    best = 1
    for size in range(g.n, 1, -1):
        for members in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(members, 2)):
                return size
    return best


_PERM_CACHE: dict[int, np.ndarray] = {}


def _perms(n: int) -> np.ndarray:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(list(permutations(range(n))), dtype=np.int64)
    return _PERM_CACHE[n]


def min_code_all_perms(g: Graph) -> int:
    """Minimum upper-triangle adjacency code over every vertex permutation."""
    n = g.n
    if n == 1:
        return 0
    a = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        for v in range(n):
            a[u, v] = (g.adj[u] >> v) & 1
    perms = _perms(n)
    permuted = a[perms[:, :, None], perms[:, None, :]]
    iu, ju = np.triu_indices(n, k=1)
    bits = permuted[:, iu, ju].astype(np.uint64)
    nbits = len(iu)
    weights = (np.uint64(1) << np.arange(nbits - 1, -1, -1, dtype=np.uint64))
    codes = bits @ weights
    return int(codes.min())


def labeled_census(n: int) -> int:
    """Number of isomorphism classes by deduplicating all labeled graphs."""
    n_edges = n * (n - 1) // 2
    pairs = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1 << n_edges):
        adj = [0] * n
        for idx, (u, v) in enumerate(pairs):
            if (bits >> idx) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen.add(min_code_all_perms(Graph._wrap(n, tuple(adj))))
    return len(seen)


def isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Permutation search for an isomorphism."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return min_code_all_perms(g) == min_code_all_perms(h)


def random_graph(n: int, p: float, rng) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph._wrap(n, tuple(adj))


def relabeled(g: Graph, perm: list[int]) -> Graph:
    """Copy of g with vertex v renamed perm[v]."""
    adj = [0] * g.n
    for u in range(g.n):
        for v in range(g.n):
            if (g.adj[u] >> v) & 1:
                adj[perm[u]] |= 1 << perm[v]
    return Graph._wrap(g.n, tuple(adj))

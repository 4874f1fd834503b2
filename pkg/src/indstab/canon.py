"""Canonical forms by equitable refinement and individualization.

The canonical code of a graph is the lexicographically least upper-triangle
adjacency bit string over the leaf labelings of the refinement tree: starting
from the degree partition, cells are split by neighbor counts until stable,
then a vertex of the first non-singleton cell is individualized and the
process recurses.  Discovered automorphisms prune branches that can only
replay an explored subtree, which keeps highly symmetric graphs (complete,
empty, circulant) tractable; the discovered set generates the full
automorphism group, so the orbit partition reported alongside the code is
exact.

Two graphs receive equal codes iff they are isomorphic: the code itself spells
out an adjacency matrix, so equal codes decode to the same labeled graph, and
invariance over relabelings holds because refinement commutes with
isomorphisms.  This is cross-validated against all-permutation minimization
in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from indstab.graphs import Graph


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant identifier: equal codes iff isomorphic graphs."""

    code: bytes
    n: int

    def __repr__(self) -> str:
        return f"CanonicalCode(n={self.n}, {self.code.hex()})"


def _refine(n: int, adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Repeatedly splits cells by the count vector of neighbors in every current
    cell; sub-cells are ordered by ascending count vector, so the procedure
    commutes with graph isomorphisms.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sigs: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(sigs):
                    new_cells.append(sigs[sig])
        if not changed:
            return new_cells
        cells = new_cells


def _leaf_code(n: int, adj: tuple[int, ...], perm: list[int]) -> int:
    """Upper-triangle bits of the relabeled adjacency matrix, row-major."""
    code = 0
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> perm[j]) & 1)
    return code


def _search(n: int, adj: tuple[int, ...]):
    """Full refinement search.

    Returns (code_int, canonical_perm, orbit_id_per_vertex, generators) where
    canonical_perm maps positions to original vertices and generators is a
    list of automorphisms (as vertex maps) generating the full group.
    """
    if n == 1:
        return 0, [0], [0], []

    best_code: int | None = None
    best_perm: list[int] | None = None
    first_code: int | None = None
    first_perm: list[int] | None = None
    gens: list[list[int]] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_code, best_perm, first_code, first_perm
        target = -1
        for idx, c in enumerate(cells):
            if len(c) > 1:
                target = idx
                break
        if target < 0:
            perm = [c[0] for c in cells]
            code = _leaf_code(n, adj, perm)
            if first_code is None:
                first_code, first_perm = code, perm
                best_code, best_perm = code, perm
                return
            for ref_code, ref_perm in ((first_code, first_perm), (best_code, best_perm)):
                if code == ref_code and perm != ref_perm:
                    sigma = [0] * n
                    for i in range(n):
                        sigma[ref_perm[i]] = perm[i]
                    gens.append(sigma)
                    break
            if code < best_code:
                best_code, best_perm = code, perm
            return

        cand = list(cells[target])
        prefix = cells[:target]
        suffix = cells[target + 1:]
        done: list[int] = []
        while cand:
            v = cand.pop(0)
            rest = [u for u in cells[target] if u != v]
            search(_refine(n, adj, prefix + [[v], rest] + suffix), fixed + [v])
            done.append(v)
            if gens and cand:
                fixing = [s for s in gens if all(s[p] == p for p in fixed)]
                if fixing:
                    # orbit closure of the processed candidates
                    orbit = set(done)
                    frontier = list(done)
                    while frontier:
                        u = frontier.pop()
                        for s in fixing:
                            w = s[u]
                            if w not in orbit:
                                orbit.add(w)
                                frontier.append(w)
                    cand = [u for u in cand if u not in orbit]

    search(_refine(n, adj, [list(range(n))]), [])

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in gens:
        for v in range(n):
            a, b = find(v), find(s[v])
            if a != b:
                parent[a] = b
    reps: dict[int, int] = {}
    orbit_id = [0] * n
    for v in range(n):
        r = find(v)
        orbit_id[v] = reps.setdefault(r, len(reps))
    return best_code, best_perm, orbit_id, gens


def _pack(code_int: int, n: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code_int.to_bytes((nbits + 7) // 8, "big")


def canonical(g: Graph) -> CanonicalCode:
    """Canonical code of a graph; equal across all relabelings."""
    code_int, _, _, _ = _search(g.n, g.adj)
    return CanonicalCode(_pack(code_int, g.n), g.n)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """A labeling achieving the canonical code: position -> original vertex."""
    _, perm, _, _ = _search(g.n, g.adj)
    return tuple(perm)


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Orbits of the automorphism group on vertices, each sorted, by least member."""
    _, _, orbit_id, _ = _search(g.n, g.adj)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(orbit_id[v], []).append(v)
    return sorted(groups.values())


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Vertex maps generating the automorphism group (possibly empty)."""
    _, _, _, gens = _search(g.n, g.adj)
    return [tuple(s) for s in gens]

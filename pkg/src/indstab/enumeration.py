"""Isomorph-free generation of all n-vertex graphs, with pluggable filters.

Generation is by canonical augmentation: graphs grow one vertex at a time,
every attachment subset is tried, and a child is kept only when its newest
vertex lies in the automorphism orbit of the canonical deletion vertex (the
vertex at the last canonical position among minimum-degree vertices).
Attachment subsets are first deduplicated per parent by automorphism orbits,
so each isomorphism class is produced exactly once and workers owning
disjoint parents never need cross-worker deduplication.

The vertex count is guarded at 10; n = 11 runs only behind an explicit
long-run flag and restricts growth to graphs whose independence number stays
within the target bound, which is sound because the independence number of an
induced subgraph never exceeds the whole graph's.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from indstab.canon import CanonicalCode, _pack, _search
from indstab.graphs import Graph
from indstab.mis import alpha_at_least, alpha_mask
from indstab.stability import is_stable, is_tight_stable, stability_bound

HARD_GUARD = 10
LONG_RUN_MAX = 11

_CHUNK = 64  # parents per worker task


# ---------------------------------------------------------------------------
# filter predicates


@dataclass(frozen=True)
class Predicate:
    """Base for registered graph predicates; subclasses are picklable."""

    cost = 0  # cheaper predicates are evaluated first inside And

    def matches(self, g: Graph) -> bool:
        raise NotImplementedError

    def alpha_cap(self, n: int) -> int | None:
        """A bound B such that every matching graph has alpha <= B, or None.

        Used as a hereditary generation prune; must be sound by definition of
        the predicate alone.
        """
        return None

    def __and__(self, other: "Predicate") -> "Predicate":
        return And((self, other))


@dataclass(frozen=True)
class EdgeCountRange(Predicate):
    lo: int
    hi: int
    cost = 0

    def matches(self, g: Graph) -> bool:
        return self.lo <= g.edge_count() <= self.hi


@dataclass(frozen=True)
class ContainsTriangle(Predicate):
    cost = 1

    def matches(self, g: Graph) -> bool:
        for v in range(g.n):
            m = g.adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if u > v and g.adj[u] & g.adj[v]:
                    return True
        return False


@dataclass(frozen=True)
class AlphaEquals(Predicate):
    value: int
    cost = 2

    def matches(self, g: Graph) -> bool:
        return alpha_mask(g.adj, g.vertex_mask) == self.value

    def alpha_cap(self, n: int) -> int | None:
        return self.value


@dataclass(frozen=True)
class Stable(Predicate):
    k: int
    l: int
    cost = 3

    def matches(self, g: Graph) -> bool:
        return g.n > self.k and is_stable(g, self.k, self.l)


@dataclass(frozen=True)
class TightStable(Predicate):
    k: int
    l: int
    cost = 3

    def matches(self, g: Graph) -> bool:
        return g.n > self.k and is_tight_stable(g, self.k, self.l)

    def alpha_cap(self, n: int) -> int | None:
        # tight graphs attain the stability bound exactly
        if n > self.k:
            return stability_bound(n, self.k, self.l)
        return None


@dataclass(frozen=True)
class And(Predicate):
    parts: tuple[Predicate, ...]

    def matches(self, g: Graph) -> bool:
        return all(p.matches(g) for p in sorted(self.parts, key=lambda p: p.cost))

    def alpha_cap(self, n: int) -> int | None:
        caps = [c for p in self.parts if (c := p.alpha_cap(n)) is not None]
        return min(caps) if caps else None


_REGISTRY = {
    "edge-count-range": (EdgeCountRange, 2),
    "contains-triangle": (ContainsTriangle, 0),
    "alpha-equals": (AlphaEquals, 1),
    "stable": (Stable, 2),
    "tight-stable": (TightStable, 2),
}


def parse_predicate(text: str) -> Predicate:
    """Parse 'name' or 'name:arg1,arg2' into a registered predicate."""
    name, _, argstr = text.partition(":")
    name = name.strip()
    if name not in _REGISTRY:
        raise ValueError(
            f"unknown predicate {name!r}; known: {', '.join(sorted(_REGISTRY))}"
        )
    cls, nargs = _REGISTRY[name]
    args = [a for a in argstr.split(",") if a.strip()] if argstr else []
    if len(args) != nargs:
        raise ValueError(f"predicate {name} takes {nargs} arguments, got {len(args)}")
    return cls(*[int(a) for a in args])


# ---------------------------------------------------------------------------
# canonical augmentation core

# level entries travel between processes as packed bytes:
#   n rows of the adjacency matrix, row_bytes each, then automorphism
#   generators as n-byte vertex maps.


def _row_bytes(n: int) -> int:
    return (n + 7) // 8


def _pack_entry(n: int, adj: Iterable[int], gens: Iterable[Iterable[int]]) -> bytes:
    rb = _row_bytes(n)
    parts = [row.to_bytes(rb, "little") for row in adj]
    parts += [bytes(s) for s in gens]
    return b"".join(parts)


def _unpack_entry(n: int, blob: bytes):
    rb = _row_bytes(n)
    adj = tuple(
        int.from_bytes(blob[i * rb:(i + 1) * rb], "little") for i in range(n)
    )
    rest = blob[n * rb:]
    gens = [list(rest[i * n:(i + 1) * n]) for i in range(len(rest) // n)]
    return adj, gens


def _subset_orbit_reps(n: int, gens: list[list[int]]) -> Iterable[int]:
    """Minimum representatives of attachment subsets under the parent's group."""
    total = 1 << n
    if not gens:
        return range(total)
    reps = []
    seen = bytearray(total)
    for m in range(total):
        if seen[m]:
            continue
        orbit = [m]
        seen[m] = 1
        i = 0
        while i < len(orbit):
            cur = orbit[i]
            i += 1
            for g in gens:
                img = 0
                t = cur
                while t:
                    b = t & -t
                    img |= 1 << g[b.bit_length() - 1]
                    t ^= b
                if not seen[img]:
                    seen[img] = 1
                    orbit.append(img)
        reps.append(m)  # subsets are visited in increasing order
    return reps


def _expand(n: int, adj: tuple[int, ...], gens: list[list[int]], max_alpha):
    """Accepted children of one parent, as (adj, gens, code_int) triples."""
    out = []
    degs = [row.bit_count() for row in adj]
    mind_parent = min(degs)
    full_child = (1 << (n + 1)) - 1
    for tmask in _subset_orbit_reps(n, gens):
        tsize = tmask.bit_count()
        # the new vertex must end up with minimum degree, else it cannot be
        # the canonical deletion vertex
        if tsize > mind_parent + 1:
            continue
        ok = True
        for v in range(n):
            if degs[v] + ((tmask >> v) & 1) < tsize:
                ok = False
                break
        if not ok:
            continue
        cadj = tuple(
            row | (1 << n) if (tmask >> v) & 1 else row for v, row in enumerate(adj)
        ) + (tmask,)
        if max_alpha is not None and alpha_at_least(cadj, full_child, max_alpha + 1):
            continue
        code_int, perm, orbit_id, cgens = _search(n + 1, cadj)
        cdegs = [row.bit_count() for row in cadj]
        dmin = min(cdegs)
        f = -1
        for pos in range(n, -1, -1):
            if cdegs[perm[pos]] == dmin:
                f = perm[pos]
                break
        if orbit_id[f] == orbit_id[n]:
            out.append((cadj, cgens, code_int))
    return out


def _expand_chunk(args):
    """Worker task: expand packed parents, optionally filtering the children."""
    n, blobs, max_alpha, predicate, emit_graphs = args
    results = []
    for blob in blobs:
        adj, gens = _unpack_entry(n, blob)
        for cadj, cgens, code_int in _expand(n, adj, gens, max_alpha):
            if predicate is not None:
                g = Graph._wrap(n + 1, cadj)
                if not predicate.matches(g):
                    continue
            if emit_graphs:
                results.append((bytes(_pack_entry(n + 1, cadj, ())), code_int))
            else:
                results.append(_pack_entry(n + 1, cadj, cgens))
    return results


def _chunked(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i:i + size]


def _check_guard(n: int, allow_long: bool) -> None:
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n > LONG_RUN_MAX:
        raise ValueError(f"enumeration is not supported beyond n = {LONG_RUN_MAX}")
    if n > HARD_GUARD and not allow_long:
        raise ValueError(
            f"n = {n} exceeds the n <= {HARD_GUARD} guard; pass allow_long to "
            "run the long pipeline"
        )


def _build_levels(n: int, jobs: int, max_alpha) -> list[bytes]:
    """Packed entries of the level n catalog (parents for streaming)."""
    level = [_pack_entry(1, (0,), ())]
    for size in range(1, n):
        task_iter = (
            (size, chunk, max_alpha, None, False)
            for chunk in _chunked(level, _CHUNK)
        )
        if jobs > 1 and len(level) > _CHUNK:
            with multiprocessing.Pool(jobs) as pool:
                nxt: list[bytes] = []
                for part in pool.imap(_expand_chunk, task_iter):
                    nxt.extend(part)
        else:
            nxt = []
            for task in task_iter:
                nxt.extend(_expand_chunk(task))
        level = nxt
    return level


def enumerate_graphs(
    n: int,
    *,
    jobs: int = 1,
    allow_long: bool = False,
    max_alpha: int | None = None,
    predicate: Predicate | None = None,
) -> Iterator[tuple[CanonicalCode, Graph]]:
    """Stream every isomorphism class on n vertices exactly once.

    With a fixed jobs count the stream order is deterministic; the set of
    classes is independent of jobs.  `max_alpha` restricts generation to
    graphs of independence number at most the cap at every intermediate size,
    which only makes sense (and is only sound) for hereditary targets.
    `predicate` filters the final level inside the workers.
    """
    _check_guard(n, allow_long)
    if n == 1:
        g = Graph._wrap(1, (0,))
        if predicate is None or predicate.matches(g):
            yield CanonicalCode(_pack(0, 1), 1), g
        return
    parents = _build_levels(n - 1, jobs, max_alpha)
    task_iter = (
        (n - 1, chunk, max_alpha, predicate, True)
        for chunk in _chunked(parents, _CHUNK)
    )
    if jobs > 1 and len(parents) > _CHUNK:
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.imap(_expand_chunk, task_iter):
                for blob, code_int in part:
                    adj, _ = _unpack_entry(n, blob)
                    yield CanonicalCode(_pack(code_int, n), n), Graph._wrap(n, adj)
    else:
        for task in task_iter:
            for blob, code_int in _expand_chunk(task):
                adj, _ = _unpack_entry(n, blob)
                yield CanonicalCode(_pack(code_int, n), n), Graph._wrap(n, adj)


def count_graphs(n: int, *, jobs: int = 1, allow_long: bool = False) -> int:
    """Number of isomorphism classes on n vertices."""
    return sum(1 for _ in enumerate_graphs(n, jobs=jobs, allow_long=allow_long))


def search_with(
    n: int,
    predicate: Predicate,
    *,
    jobs: int = 1,
    allow_long: bool = False,
) -> list[CanonicalCode]:
    """Canonical codes of all classes matching a registered predicate, sorted."""
    cap = predicate.alpha_cap(n)
    codes = [
        code
        for code, _ in enumerate_graphs(
            n, jobs=jobs, allow_long=allow_long, max_alpha=cap, predicate=predicate
        )
    ]
    codes.sort()
    return codes


def search_tight_stable(
    n: int, k: int, l: int, *, jobs: int = 1, allow_long: bool = False
) -> list[CanonicalCode]:
    """Canonical codes of all tight (k, l)-stable classes on n vertices, sorted."""
    stability_bound(n, k, l)  # validates n > k > l >= 0
    return search_with(n, TightStable(k, l), jobs=jobs, allow_long=allow_long)

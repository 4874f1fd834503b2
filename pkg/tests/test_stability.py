import random
from itertools import combinations

import pytest

from indstab.families import cycle, figure2, kn_tight, lift, path, wheel
from indstab.graphs import build, remove_vertices, vset
from indstab.mis import alpha
from indstab.stability import (
    alpha_drop,
    check_stable_vertex_bound,
    is_stable,
    is_tight_stable,
    profile,
    stability_bound,
    stable_vertex_count,
)

from _oracles import random_graph


def complete(n):
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def alpha_drop_plain(g, k):
    """Unpruned reference scan over all k-subsets."""
    a = alpha(g)
    worst = 0
    for members in combinations(range(g.n), k):
        sub = alpha(remove_vertices(g, vset(members)))
        worst = max(worst, a - sub)
    return worst


def test_drop_c5_pairs():
    assert alpha_drop(cycle(5), 2) == 0


def test_drop_complete_graph():
    assert alpha_drop(complete(6), 5) == 0


def test_drop_k33_pairs():
    assert alpha_drop(kn_tight(6), 2) == 1


def test_drop_matches_plain_scan():
    # pruned scan vs the unpruned reference on a 10^3 random corpus, n <= 12
    rng = random.Random(73)
    for _ in range(1000):
        g = random_graph(rng.randint(2, 12), rng.choice([0.3, 0.5, 0.7]), rng)
        k = rng.randint(1, g.n - 1)
        assert alpha_drop(g, k) == alpha_drop_plain(g, k)


def test_drop_rejects_bad_k():
    with pytest.raises(ValueError):
        alpha_drop(cycle(5), 0)
    with pytest.raises(ValueError):
        alpha_drop(cycle(5), 5)


def test_stable_k33():
    assert is_stable(kn_tight(6), 1, 0)


def test_stable_complete_any_k():
    g = complete(7)
    for k in range(1, 7):
        assert is_stable(g, k, 0)


def test_p4_not_20_stable():
    assert not is_stable(path(4), 2, 0)


def test_stable_rejects_bad_parameters():
    g = cycle(6)
    with pytest.raises(ValueError):
        is_stable(g, 2, 2)
    with pytest.raises(ValueError):
        is_stable(g, 0, 0)
    with pytest.raises(ValueError):
        is_stable(g, 6, 1)
    with pytest.raises(ValueError):
        is_stable(g, 1, -1)


def test_stable_agrees_with_drop():
    rng = random.Random(79)
    for _ in range(150):
        g = random_graph(rng.randint(2, 9), 0.5, rng)
        k = rng.randint(1, g.n - 1)
        l = rng.randrange(k)
        assert is_stable(g, k, l) == (alpha_drop(g, k) <= l)


def test_bound_values():
    assert stability_bound(6, 3, 0) == 2
    assert stability_bound(7, 2, 1) == 4
    for n in range(2, 20):
        assert stability_bound(n, 1, 0) == n // 2


def test_bound_rejects_bad_parameters():
    with pytest.raises(ValueError):
        stability_bound(5, 5, 0)
    with pytest.raises(ValueError):
        stability_bound(5, 2, 2)
    with pytest.raises(ValueError):
        stability_bound(5, 2, -1)


def test_tight_examples():
    assert is_tight_stable(cycle(7), 2, 0)
    assert is_tight_stable(wheel(6), 2, 0)
    assert not is_tight_stable(cycle(6), 2, 0)
    assert is_tight_stable(figure2(), 1, 0)


def test_complete_graph_is_tight_k0():
    for k in range(1, 6):
        assert is_tight_stable(complete(k + 1), k, 0)


def test_stable_vertex_count_examples():
    assert stable_vertex_count(kn_tight(4)) == 4
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    assert stable_vertex_count(star) == 1
    two_edges = build(4, [(0, 1), (2, 3)])
    assert stable_vertex_count(two_edges) == 4
    assert stable_vertex_count(figure2()) == 6


def test_stable_vertex_count_rejects_single_vertex():
    with pytest.raises(ValueError):
        stable_vertex_count(build(1, []))


def test_corollary_on_samples():
    rng = random.Random(83)
    for _ in range(200):
        g = random_graph(rng.randint(2, 10), rng.random(), rng)
        assert check_stable_vertex_bound(g)


def test_corollary_equality_witness():
    # balanced bipartite part plus isolated vertices meets the bound exactly
    for m in (2, 4, 6):
        for n in (6, 8):
            g = lift(kn_tight(m), n - m)
            assert stable_vertex_count(g) == m
            assert alpha(g) == (2 * n - m) // 2


def test_drop_monotone_in_k():
    rng = random.Random(89)
    for _ in range(60):
        g = random_graph(rng.randint(3, 9), 0.5, rng)
        drops = [alpha_drop(g, k) for k in range(1, g.n)]
        assert all(a <= b for a, b in zip(drops, drops[1:]))
        assert all(0 <= d <= min(k, alpha(g)) for k, d in enumerate(drops, 1))


def test_drop_monotone_full_catalog(catalog):
    for n in range(2, 8):
        for _, g in catalog(n):
            drops = [alpha_drop(g, k) for k in range(1, n)]
            assert all(a <= b for a, b in zip(drops, drops[1:]))


def test_stability_downward_closure():
    rng = random.Random(97)
    for _ in range(80):
        g = random_graph(rng.randint(3, 8), 0.5, rng)
        for k in range(2, g.n):
            for l in range(k):
                if is_stable(g, k, l):
                    if l <= k - 2:
                        assert is_stable(g, k - 1, l)
                    if l + 1 < k:
                        assert is_stable(g, k, l + 1)


def test_lift_preserves_tightness():
    for g, k, l in [(cycle(5), 2, 0), (kn_tight(6), 1, 0), (path(5), 2, 1)]:
        assert is_tight_stable(g, k, l)
        assert is_tight_stable(lift(g, 1), k + 1, l + 1)


def test_profile_caches_and_reports():
    g = cycle(7)
    p = profile(g)
    assert p.alpha == 3
    assert p.stable_vertex_count == 7
    assert p.drops(3) == [0, 0, 1]
    assert profile(cycle(7)) is p  # cached by canonical code

from itertools import combinations
from math import comb

import networkx as nx
import pytest

from gallai.core import ConstructionError, colour_class
from gallai.graphs import (blow_up, check_doubling_hypotheses,
                           cyclic_prime_colouring, delete_vertex,
                           double_extension, hamilton_path_colouring, is_prime,
                           paths_colouring, predicted_pipeline_count,
                           upper_bound_pipeline)
from gallai.hypergraphs import monochromatic
from gallai.verify import (is_class_connected, max_colours_on_d_set,
                           multicoloured_family, short_cycle_scan)

from oracles import brute_family


def family_of(c):
    return multicoloured_family(c, 3).family


def all_classes_connected(c):
    return all(is_class_connected(c, i, "graph").ok for i in range(1, c.k + 1))


# ---------------------------------------------------------------------------
# Cyclic prime colouring
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k,expected", [(3, 1), (5, 5), (6, 8), (8, 16)])
def test_cyclic_family_counts(k, expected):
    c = cyclic_prime_colouring(k)
    assert c.n == 2 * k + 1
    fam = family_of(c)
    assert len(fam) == expected == k * (k - 2) // 3
    for i in range(1, k + 1):
        assert fam.containing(i) == k - 2
    assert all_classes_connected(c)


def test_cyclic_classes_are_spanning_cycles():
    for k in (3, 5, 6):
        c = cyclic_prime_colouring(k)
        n = c.n
        total = 0
        for i in range(1, k + 1):
            cls = colour_class(c, i)
            assert len(cls) == n
            g = nx.Graph(list(cls.edges))
            assert g.number_of_nodes() == n
            assert all(d == 2 for _, d in g.degree())
            assert nx.is_connected(g)
            total += len(cls)
        assert total == comb(n, 2) == k * (2 * k + 1)


def test_cyclic_rejects_composite():
    with pytest.raises(ConstructionError, match="not prime"):
        cyclic_prime_colouring(4)


# ---------------------------------------------------------------------------
# Vertex deletion
# ---------------------------------------------------------------------------

def test_delete_vertex_cyclic_k11():
    c = cyclic_prime_colouring(5)
    for v in range(11):
        c10 = delete_vertex(c, v)
        assert c10.n == 10
        assert all_classes_connected(c10)
        assert len(family_of(c10)) == 5


def test_delete_vertex_shifts_colours():
    c = cyclic_prime_colouring(3)
    c6 = delete_vertex(c, 2)
    # surviving edge {1,3} becomes {1,2}; its colour was dist(1,3)=2
    assert c6.colour_of((1, 2)) == c.colour_of((1, 3))
    assert c6.colour_of((0, 1)) == c.colour_of((0, 1))


def test_delete_vertex_monochromatic():
    c = monochromatic(4, 2)
    c3 = delete_vertex(c, 1)
    assert c3.n == 3 and c3.k == 1


def test_delete_vertex_palette_vanishes():
    import numpy as np
    from gallai.core import EdgeColouring
    # colour 2 only on edges at vertex 0: deleting 0 kills the class
    arr = np.ones(comb(4, 2), dtype=np.uint8)
    c = EdgeColouring.from_map(4, 2, 2, lambda e: 2 if 0 in e else 1)
    with pytest.raises(ConstructionError, match="vanishes"):
        delete_vertex(c, 0)


# ---------------------------------------------------------------------------
# Blow-up
# ---------------------------------------------------------------------------

def test_blow_up_degenerate_identity():
    c = cyclic_prime_colouring(3)
    assert blow_up(c, [1] * 7) == c


def test_blow_up_preserves_family_exactly():
    c = cyclic_prime_colouring(5)
    base = set(family_of(c).sets)
    for sizes in ([2] * 11, [2, 2, 2, 2, 2, 2, 2, 2, 1, 3, 2]):
        cb = blow_up(c, sizes)
        assert cb.n == sum(sizes)
        assert set(family_of(cb).sets) == base
        assert all_classes_connected(cb)


def test_blow_up_intra_class_rule():
    c = cyclic_prime_colouring(3)
    cb = blow_up(c, [3] + [1] * 6)
    # vertices 0,1,2 sit in class 0; their edges take the colour of base {0,1}
    for pair in combinations(range(3), 2):
        assert cb.colour_of(pair) == c.colour_of((0, 1))
    # cross edges inherit the base colour of the class pair
    assert cb.colour_of((0, 3)) == c.colour_of((0, 1))
    assert cb.colour_of((3, 4)) == c.colour_of((1, 2))


def test_blow_up_no_new_triangle_inside_class():
    # a monochromatic triangle in the base cannot spawn multicoloured ones
    c = cyclic_prime_colouring(3)
    cb = blow_up(c, [3, 1, 1, 1, 1, 1, 1])
    want, _ = brute_family(cb.colour_of, cb.n, 2, 3)
    assert want == set(family_of(c).sets)


def test_blow_up_rejects_empty_class():
    c = cyclic_prime_colouring(3)
    with pytest.raises(ConstructionError, match="empty"):
        blow_up(c, [0] + [2] * 6)


# ---------------------------------------------------------------------------
# Doubling
# ---------------------------------------------------------------------------

def test_check_doubling_cyclic_k11():
    c = cyclic_prime_colouring(5)
    hyp = check_doubling_hypotheses(c, 5)
    assert hyp.cycle_order[:4] == (0, 5, 10, 4)
    assert hyp.distance2_colour == 1
    assert hyp.special_count == 3
    hyp3 = check_doubling_hypotheses(cyclic_prime_colouring(3), 3)
    assert hyp3.special_count == 1


def test_check_doubling_rejects_paths():
    c = paths_colouring(3, 12, seed=0, d=3)
    with pytest.raises(ConstructionError, match="spanning cycle"):
        check_doubling_hypotheses(c, 3)


def test_double_extension_counts():
    c = cyclic_prime_colouring(5)
    hyp = check_doubling_hypotheses(c, 5)
    c2 = double_extension(c, hyp)
    assert (c2.n, c2.k) == (22, 6)
    fam2 = family_of(c2)
    assert len(fam2) == 9
    assert fam2.containing(6) == 4
    # colour 6 spans a single 2n-cycle
    cls = colour_class(c2, 6)
    g = nx.Graph(list(cls.edges))
    assert len(cls) == 22 and nx.is_connected(g)
    assert all(d == 2 for _, d in g.degree())
    # the output composes: all four hypotheses hold again
    hyp2 = check_doubling_hypotheses(c2, 6)
    assert hyp2.special_count == 4
    c3 = double_extension(c2, hyp2)
    assert (c3.n, c3.k) == (44, 7)
    assert len(family_of(c3)) == 14


def test_double_extension_stale_bundle():
    c = cyclic_prime_colouring(5)
    hyp = check_doubling_hypotheses(c, 5)
    from dataclasses import replace
    stale = replace(hyp, distance2_colour=2)
    with pytest.raises(ConstructionError, match="stale"):
        double_extension(c, stale)


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k,k0,n,count", [
    (4, 3, 14, 3), (5, 5, 11, 5), (6, 6, 13, 8), (7, 6, 26, 13),
])
def test_pipeline_small(k, k0, n, count):
    res = upper_bound_pipeline(k)
    assert res.k0 == k0
    assert res.colouring.n == n
    assert res.realised_count == res.predicted_count == count
    assert count == predicted_pipeline_count(k, k0)
    assert all_classes_connected(res.colouring)


def test_pipeline_meets_lower_bound():
    from math import ceil
    for k in range(3, 11):
        res = upper_bound_pipeline(k)
        assert res.realised_count >= ceil(k * (k - 2) / 3)


# ---------------------------------------------------------------------------
# Paths colouring
# ---------------------------------------------------------------------------

def test_paths_family_exact():
    for k, n in ((3, 20), (5, 40)):
        c = paths_colouring(k, n, seed=1, d=3)
        fam = family_of(c)
        want = {tuple(sorted((i, j, k))) for i in range(1, k)
                for j in range(i + 1, k)}
        assert set(fam.sets) == want
        assert len(fam) == comb(k - 1, 2)
        assert all_classes_connected(c)


def test_paths_classes_are_spanning_paths():
    k, n = 4, 25
    c = paths_colouring(k, n, seed=3, d=3)
    union = []
    for i in range(1, k):
        cls = colour_class(c, i)
        g = nx.Graph(list(cls.edges))
        assert g.number_of_nodes() == n and nx.is_connected(g)
        degs = sorted(d for _, d in g.degree())
        assert degs == [1, 1] + [2] * (n - 2)
        union += list(cls.edges)
    assert nx.girth(nx.Graph(union)) > 3


def test_paths_girth_bound_d4():
    c = paths_colouring(4, 80, seed=0, d=4)
    union = [e for i in range(1, 4) for e in colour_class(c, i).edges]
    assert short_cycle_scan(union, c.n, 4) is None
    assert nx.girth(nx.Graph(union)) > 4
    # sparse certificate agrees with the brute-force bound at this scale
    assert max_colours_on_d_set(c, 4)[0] <= 4


@pytest.mark.slow
def test_paths_d4_brute_force_at_full_scale():
    # direct C(500,4) enumeration behind the sparse certificate (minutes)
    c = paths_colouring(6, 500, seed=0, d=4)
    mx, wit = max_colours_on_d_set(c, 4, method="vector")
    assert mx == 4
    assert len({c.colour_of(p) for p in combinations(wit, 2)}) == 4


def test_paths_determinism_and_failure():
    a = paths_colouring(3, 14, seed=9, d=3)
    b = paths_colouring(3, 14, seed=9, d=3)
    assert a == b
    with pytest.raises(ConstructionError, match="attempts"):
        paths_colouring(5, 10, seed=0, d=4, retry_cap=40)
    with pytest.raises(ConstructionError, match="below 2k"):
        paths_colouring(4, 7, seed=0)


# ---------------------------------------------------------------------------
# Hamilton path decomposition of the minimal host
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3, 4, 5, 7])
def test_hamilton_path_colouring(k):
    c = hamilton_path_colouring(k)
    assert c.n == 2 * k
    for i in range(1, k + 1):
        cls = colour_class(c, i)
        g = nx.Graph(list(cls.edges))
        assert g.number_of_nodes() == 2 * k and nx.is_connected(g)
        degs = sorted(d for _, d in g.degree())
        assert degs == [1, 1] + [2] * (2 * k - 2)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_union_girth_exceeds_matches_networkx():
    import random
    from gallai.graphs import union_girth_exceeds
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(3, 14)
        g = nx.gnm_random_graph(n, rng.randint(0, 2 * n),
                                seed=rng.randint(0, 10 ** 6))
        adj = [set(g.neighbors(v)) for v in range(n)]
        girth = nx.girth(g)
        for d in (3, 4, 5, 6):
            assert union_girth_exceeds(adj, d) == (girth > d), (
                sorted(g.edges()), d, girth)

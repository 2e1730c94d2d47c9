"""Desk-scale exhaustive and randomised searches: exact minimum colour-set
counts for tiny hosts, minimal partition-hitting families, minimal strongly
connected 3-graphs, and a counterexample hunt for the tricoloured-4-set
conjecture.

Colour symmetry is broken by first-use ordering (a new colour may only be
introduced as the next unused index), dividing the space by k!.  Vertex
symmetry is deliberately not broken; the unreduced cross-check on K_6
justifies the reduction.  Budgets are node counts, never wall time.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, ceil

import numpy as np

from .core import (ColourSetFamily, ConstructionError, EdgeColouring,
                   Hypergraph, rank_subset)
from .graphs import (blow_up, delete_vertex, hamilton_path_colouring,
                     upper_bound_pipeline)
from .hypergraphs import minimal_connected_3graph
from .verify import (ConnectivityNotion, is_class_connected, is_connected,
                     multicoloured_family, partition_condition,
                     three_partitions, tricoloured_count)


class BudgetExhausted(Exception):
    pass


@dataclass
class SearchReport:
    task: str
    params: dict
    optimum: int | None
    witness: object
    nodes: int
    complete: bool
    stats: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def as_dict(self) -> dict:
        wit = self.witness
        if isinstance(wit, ColourSetFamily):
            wit = [list(s) for s in wit]
        elif isinstance(wit, EdgeColouring):
            wit = {"n": wit.n, "r": wit.r, "k": wit.k}
        elif isinstance(wit, Hypergraph):
            wit = {"n": wit.n, "edges": [list(e) for e in sorted(wit.edges)]}
        return {"task": self.task, "params": self.params,
                "optimum": self.optimum, "witness": wit, "nodes": self.nodes,
                "complete": self.complete, "stats": self.stats,
                "ok": self.optimum is not None}


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _spanning_connected_masks(n: int) -> np.ndarray:
    """conn[mask] for every subset of K_n's edges (colex bit order): does the
    subgraph span all n vertices in one component?  Needs C(n,2) <= 16."""
    m = comb(n, 2)
    if m > 16:
        raise ValueError(f"mask table infeasible for C({n},2)={m} edges")
    pairs = list(combinations(range(n), 2))
    pairs.sort(key=lambda p: rank_subset(p, n, 2))
    conn = np.zeros(1 << m, dtype=bool)
    for mask in range(1 << m):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        mm = mask
        while mm:
            bit = mm & -mm
            a, b = pairs[bit.bit_length() - 1]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
            mm ^= bit
        conn[mask] = comps == 1
    return conn


def _spanning_connected(n: int, edge_ranks, pairs) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for e in edge_ranks:
        a, b = pairs[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


def _strong_connected_light(n: int, edges) -> bool:
    """Pure-python strong connectivity of a 3-graph, for search inner loops."""
    if not edges:
        return False
    npairs = comb(n, 2)
    parent = list(range(npairs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen = [False] * npairs
    for e in edges:
        subs = [rank_subset(s, n, 2) for s in combinations(e, 2)]
        for s in subs:
            seen[s] = True
        for s in subs[1:]:
            ra, rb = find(subs[0]), find(s)
            if ra != rb:
                parent[ra] = rb
    if not all(seen):
        return False
    root = find(0)
    return all(find(i) == root for i in range(npairs))


# ---------------------------------------------------------------------------
# Exact minimum of colour-set family sizes (f at desk scale)
# ---------------------------------------------------------------------------

def seed_colouring(k: int, n: int, node_cap: int = 3_000) -> EdgeColouring | None:
    """Best-effort connected k-colouring of K_n from the pipeline colouring,
    shrunk by a backtracking search over vertex-deletion orders or grown by
    a blow-up (both preserve the colour-set family or shrink it)."""
    try:
        c = upper_bound_pipeline(k).colouring
    except ConstructionError:
        return None
    if c.n < n:
        sizes = [1] * c.n
        for i in range(n - c.n):
            sizes[i % c.n] += 1
        return blow_up(c, sizes)
    # drop whole vertex sets: intermediate colourings may disconnect as long
    # as the final one does not
    drop = c.n - n
    nodes = 0
    for victims in combinations(range(c.n), drop):
        nodes += 1
        if nodes > node_cap:
            break
        cand = c
        try:
            for v in sorted(victims, reverse=True):
                cand = delete_vertex(cand, v)
        except ConstructionError:
            continue
        if all(is_class_connected(cand, i, ConnectivityNotion.GRAPH).ok
               for i in range(1, k + 1)):
            return cand
    # fall back to the zigzag path decomposition of the minimal host K_{2k}
    c = hamilton_path_colouring(k)
    if c.n == n:
        return c
    sizes = [1] * c.n
    for i in range(n - c.n):
        sizes[i % c.n] += 1
    return blow_up(c, sizes)


def min_multicoloured_triangles(k: int, n: int,
                                budget: int | None = None) -> SearchReport:
    """Exact minimum number of distinct colour sets of multicoloured
    triangles over all connected k-colourings of K_n, by depth-first edge
    assignment with first-use colour symmetry breaking and
    connectivity-feasibility pruning."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < 2 * k:
        raise ValueError(f"n={n} below 2k: no connected {k}-colouring of K_{n} exists")
    t0 = time.perf_counter()
    m = comb(n, 2)
    pairs = list(combinations(range(n), 2))
    pairs.sort(key=lambda p: rank_subset(p, n, 2))
    conn_table = _spanning_connected_masks(n) if m <= 16 else None

    # triangles keyed by their highest-ranked edge, with the two lower ranks
    tri_at: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for t in combinations(range(n), 3):
        r01 = rank_subset(t[:2], n, 2)
        r02 = rank_subset((t[0], t[2]), n, 2)
        r12 = rank_subset(t[1:], n, 2)
        tri_at[max(r01, r02, r12)].append(tuple(sorted((r01, r02, r12))[:2]))

    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << i)

    seed = seed_colouring(k, n)
    best_size = len(multicoloured_family(seed, 3).family) if seed is not None else None
    best = seed
    ub = best_size if best_size is not None else comb(k, 3) + 1

    colour = [0] * m
    class_mask = [0] * (k + 1)
    family: dict[tuple, int] = {}
    nodes = 0
    truncated = False

    def feasible(i: int) -> bool:
        rest = suffix[i]
        if conn_table is not None:
            return all(conn_table[class_mask[c] | rest] for c in range(1, k + 1))
        for c in range(1, k + 1):
            ranks = [e for e in range(i) if colour[e] == c]
            ranks += [e for e in range(i, m)]
            if not _spanning_connected(n, ranks, pairs):
                return False
        return True

    def dfs(i: int, used: int):
        nonlocal nodes, ub, best, truncated
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted
        if i == m:
            if used == k:
                size = len(family)
                if size < ub:
                    ub = size
                    best = EdgeColouring(n, 2, k,
                                         np.array(colour, dtype=np.uint8))
            return
        if k - used > m - i:
            return
        for col in range(1, min(used + 1, k) + 1):
            colour[i] = col
            class_mask[col] |= 1 << i
            touched: list[tuple] = []
            for e1, e2 in tri_at[i]:
                c1, c2 = colour[e1], colour[e2]
                if c1 != c2 and c1 != col and c2 != col:
                    key = tuple(sorted((c1, c2, col)))
                    family[key] = family.get(key, 0) + 1
                    touched.append(key)
            if len(family) < ub and feasible(i + 1):
                dfs(i + 1, max(used, col))
            for key in touched:
                family[key] -= 1
                if family[key] == 0:
                    del family[key]
            class_mask[col] &= ~(1 << i)
            colour[i] = 0

    try:
        dfs(0, 0)
    except BudgetExhausted:
        truncated = True

    optimum = ub if not truncated or best is not None else None
    if best is not None:
        # independent re-verification of the reported witness
        assert all(is_class_connected(best, i, ConnectivityNotion.GRAPH).ok
                   for i in range(1, k + 1))
        assert len(multicoloured_family(best, 3).family) == ub
    return SearchReport(
        task="min-multicoloured-triangles", params={"k": k, "n": n},
        optimum=optimum, witness=best, nodes=nodes, complete=not truncated,
        stats={"edges": m, "seeded_upper_bound": best_size},
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def unreduced_min_triangles(n: int = 6, chunk: int = 1 << 19) -> int:
    """Brute force over all 3^C(n,2) 3-colourings with no symmetry breaking:
    the minimum family size over connected colourings (0 or 1 for k=3).
    Cross-check for the reduced search; feasible only for n=6."""
    m = comb(n, 2)
    if 3 ** m > 20_000_000:
        raise ValueError(f"3^{m} assignments is beyond the unreduced check")
    conn = _spanning_connected_masks(n)
    tris = []
    for t in combinations(range(n), 3):
        tris.append(tuple(rank_subset(p, n, 2) for p in combinations(t, 2)))
    pow2 = (1 << np.arange(m)).astype(np.int64)
    total = 3 ** m
    best = 1
    for lo in range(0, total, chunk):
        ids = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        digits = np.empty((len(ids), m), dtype=np.uint8)
        q = ids.copy()
        for j in range(m):
            digits[:, j] = q % 3
            q //= 3
        ok = np.ones(len(ids), dtype=bool)
        for c in range(3):
            mask = ((digits == c).astype(np.int64) @ pow2)
            ok &= mask > 0
            ok &= conn[mask]
        if not ok.any():
            continue
        sub = digits[ok]
        rainbow = np.zeros(sub.shape[0], dtype=bool)
        for e1, e2, e3 in tris:
            a, b, c = sub[:, e1], sub[:, e2], sub[:, e3]
            rainbow |= (a != b) & (a != c) & (b != c)
        if (~rainbow).any():
            return 0
    return best


# ---------------------------------------------------------------------------
# Minimal partition-hitting families
# ---------------------------------------------------------------------------

def min_partition_family(k: int, budget: int | None = None) -> SearchReport:
    """Smallest family of 3-subsets of {1..k} meeting every 3-partition of
    {1..k} in all three parts, by branch and bound on the least-hit unmet
    partition.  Exhaustive for k <= 7 within default budgets."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    t0 = time.perf_counter()
    parts = list(three_partitions(k))
    P = len(parts)
    triples = list(combinations(range(1, k + 1), 3))
    hits = []
    for t in triples:
        mask = 0
        st = set(t)
        for pi, pr in enumerate(parts):
            if all(st & p for p in pr):
                mask |= 1 << pi
        hits.append(mask)
    hitters: list[list[int]] = [[] for _ in range(P)]
    for ti, mask in enumerate(hits):
        for pi in range(P):
            if mask >> pi & 1:
                hitters[pi].append(ti)
    full = (1 << P) - 1
    max_hits = max(mask.bit_count() for mask in hits)

    # greedy cover as the starting incumbent
    mask, chosen = 0, []
    while mask != full:
        ti = max(range(len(triples)), key=lambda t: (hits[t] | mask).bit_count())
        chosen.append(ti)
        mask |= hits[ti]
    ub = len(chosen)
    best = list(chosen)

    nodes = 0
    truncated = False
    degree = [0] * (k + 1)

    def lower_bound(chosen_len: int, mask: int) -> int:
        # any satisfying family gives every colour a connected link graph on
        # k-1 vertices, hence degree >= k-2; a triple lifts three degrees
        deficit = sum(max(0, k - 2 - degree[i]) for i in range(1, k + 1))
        unhit = (full ^ mask).bit_count()
        return chosen_len + max(ceil(unhit / max_hits), ceil(deficit / 3))

    def dfs(mask: int, chosen: list[int]):
        nonlocal nodes, ub, best, truncated
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted
        if mask == full:
            if len(chosen) < ub:
                ub = len(chosen)
                best = list(chosen)
            return
        if lower_bound(len(chosen), mask) >= ub:
            return
        # branch on the unmet partition with the fewest remaining hitters
        pick, fan = -1, None
        for pi in range(P):
            if not (mask >> pi & 1):
                cand = [t for t in hitters[pi] if t not in chosen]
                if fan is None or len(cand) < len(fan):
                    pick, fan = pi, cand
                    if len(cand) <= 1:
                        break
        for ti in fan or ():
            chosen.append(ti)
            for x in triples[ti]:
                degree[x] += 1
            dfs(mask | hits[ti], chosen)
            for x in triples[ti]:
                degree[x] -= 1
            chosen.pop()

    try:
        dfs(0, [])
    except BudgetExhausted:
        truncated = True

    witness = ColourSetFamily.from_iter(k, (triples[t] for t in best))
    check = partition_condition(witness, k)
    assert check.ok, "witness fails the partition condition"
    return SearchReport(
        task="min-partition-family", params={"k": k},
        optimum=ub, witness=witness, nodes=nodes, complete=not truncated,
        stats={"partitions": P, "triples": len(triples)},
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# Minimal strongly connected 3-graphs
# ---------------------------------------------------------------------------

def min_connected_3graph_edges(n: int, budget: int | None = None) -> SearchReport:
    """Exact minimum edge count of a strongly connected 3-graph on n
    vertices: every smaller edge set is refuted (with covering-based
    pruning), and the floor(C(n,2)/2)-edge construction is the witness."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    t0 = time.perf_counter()
    target = comb(n, 2) // 2
    triples = list(combinations(range(n), 3))
    pair_cover = [tuple(rank_subset(p, n, 2) for p in combinations(t, 2))
                  for t in triples]
    npairs = comb(n, 2)
    nodes = 0
    truncated = False
    refuted_counterexample = None

    cover_count = [0] * npairs

    def dfs(start: int, chosen: list[int], uncovered: int, size: int):
        nonlocal nodes, refuted_counterexample, truncated
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted
        if len(chosen) == size:
            if uncovered == 0 and _strong_connected_light(
                    n, [triples[i] for i in chosen]):
                refuted_counterexample = list(chosen)
            return
        remaining = size - len(chosen)
        if uncovered > 3 * remaining:
            return
        for i in range(start, len(triples) - remaining + 1):
            delta = 0
            for pr in pair_cover[i]:
                if cover_count[pr] == 0:
                    delta += 1
                cover_count[pr] += 1
            chosen.append(i)
            dfs(i + 1, chosen, uncovered - delta, size)
            chosen.pop()
            for pr in pair_cover[i]:
                cover_count[pr] -= 1
            if refuted_counterexample is not None:
                return

    lb = ceil(npairs / 3)
    try:
        for size in range(lb, target):
            dfs(0, [], npairs, size)
            if refuted_counterexample is not None:
                break
    except BudgetExhausted:
        truncated = True

    witness = minimal_connected_3graph(n)
    rep = is_connected(witness, ConnectivityNotion.STRONG)
    assert rep.ok and len(witness.edges) == target
    if refuted_counterexample is not None:
        # would contradict the lower bound; surface loudly
        raise RuntimeError(f"found a strongly connected 3-graph below the bound: "
                           f"{[triples[i] for i in refuted_counterexample]}")
    return SearchReport(
        task="min-connected-3graph-edges", params={"n": n},
        optimum=target, witness=witness, nodes=nodes, complete=not truncated,
        stats={"refuted_sizes": list(range(lb, target)), "trivial_lower_bound": lb},
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# Tricoloured counterexample hunt
# ---------------------------------------------------------------------------

def tricoloured_counterexample_hunt(n: int, k: int = 3, seeds: int = 10,
                                    budget: int = 5_000,
                                    base_seed: int = 0) -> SearchReport:
    """Randomised restarts plus single-edge recolouring moves that minimise
    the tricoloured-4-set count subject to keeping every class strongly
    connected.  Reports the minimum reached; never claims the conjecture.

    Strongly connected 3-colourings of K_n^(3) need 3*floor(C(n,2)/2)
    <= C(n,3), which fails for n=6 (21 > 20); the hunt starts at n=7.
    """
    if k != 3:
        raise ValueError("the hunt targets connected 3-colourings (k=3)")
    if not 7 <= n <= 9:
        raise ValueError(
            f"hunt supported for 7 <= n <= 9, got n={n} "
            "(below 7 every class would need more edges than exist)")
    t0 = time.perf_counter()
    triples = sorted(combinations(range(n), 3),
                     key=lambda t: rank_subset(t, n, 3))  # index == colex rank
    quads = [tuple(rank_subset(s, n, 3) for s in combinations(q, 3))
             for q in combinations(range(n), 4)]
    m = len(triples)

    def count_tric(colour: list[int]) -> int:
        c = 0
        for q in quads:
            if len({colour[e] for e in q}) >= 3:
                c += 1
        return c

    def initial_colouring(rng: random.Random) -> list[int] | None:
        """Greedy: fill classes 1 and 2 from a shuffled edge order until each
        is strongly connected; class 3 takes the rest and is then checked."""
        order = list(range(m))
        rng.shuffle(order)
        colour = [3] * m
        pos = 0
        for col in (1, 2):
            batch: list[int] = []
            while pos < m:
                batch.append(order[pos])
                colour[order[pos]] = col
                pos += 1
                if len(batch) >= 4 and _strong_connected_light(
                        n, [triples[i] for i in batch]):
                    break
            else:
                return None
        rest = [triples[i] for i in range(m) if colour[i] == 3]
        if not _strong_connected_light(n, rest):
            return None
        return colour

    nodes = 0
    best_count = None
    best_colour = None
    per_seed = max(1, budget // seeds)
    seed_minima = []
    for s in range(seeds):
        rng = random.Random(base_seed * 10_007 + s)
        colour = None
        while colour is None:
            colour = initial_colouring(rng)
        cur = count_tric(colour)
        sideways = 0
        for _ in range(per_seed):
            nodes += 1
            e = rng.randrange(m)
            new = rng.randint(1, k)
            if new == colour[e]:
                continue
            old = colour[e]
            colour[e] = new
            old_edges = [triples[i] for i in range(m) if colour[i] == old]
            if not old_edges or not _strong_connected_light(n, old_edges):
                colour[e] = old
                continue
            cand = count_tric(colour)
            if cand < cur or (cand == cur and sideways < 50):
                sideways = sideways + 1 if cand == cur else 0
                cur = cand
            else:
                colour[e] = old
        seed_minima.append(cur)
        if best_count is None or cur < best_count:
            best_count = cur
            best_colour = list(colour)

    witness = EdgeColouring(n, 3, k, np.array(best_colour, dtype=np.uint8))
    for col in range(1, k + 1):
        assert is_class_connected(witness, col, ConnectivityNotion.STRONG).ok
    recount = tricoloured_count(witness, 3, method="python").count_at_least
    assert recount == best_count
    return SearchReport(
        task="tricoloured-hunt", params={"n": n, "k": k, "seeds": seeds,
                                         "budget": budget},
        optimum=best_count, witness=witness, nodes=nodes, complete=False,
        stats={"seed_minima": seed_minima},
        elapsed_ms=(time.perf_counter() - t0) * 1e3)

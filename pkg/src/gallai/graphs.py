"""Colourings of complete graphs (r=2): spanning-cycle decompositions of
K_{2k+1} for prime 2k+1, unrelated-paths colourings with a girth guarantee,
vertex deletion, blow-ups, and the cycle-doubling extension that adds one
colour to a 2n-vertex host while creating only k-1 new colour sets.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from math import comb

import numpy as np

from .core import (ConstructionError, EdgeColouring, colex_arrays,
                   colour_class, rank_arrays)
from .verify import ConnectivityNotion, is_class_connected, multicoloured_family


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Cyclic prime colouring
# ---------------------------------------------------------------------------

def cyclic_prime_colouring(k: int) -> EdgeColouring:
    """Connected k-colouring of K_{2k+1} (2k+1 prime) where edge {x,y} gets
    its circular distance min(|x-y|, n-|x-y|) as its colour.  Every colour
    class is a single spanning n-cycle."""
    if k < 2:
        raise ConstructionError(f"need k >= 2, got {k}")
    n = 2 * k + 1
    if not is_prime(n):
        raise ConstructionError(f"2k+1={n} not prime")
    a, b = colex_arrays(n, 2)
    delta = b - a
    colours = np.minimum(delta, n - delta).astype(np.uint8)
    return EdgeColouring(n, 2, k, colours)


def delete_vertex(c: EdgeColouring, v: int) -> EdgeColouring:
    """Remove vertex v; vertices above v shift down by one, colours of the
    surviving edges are unchanged.  Errors if a colour class vanishes."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range")
    if c.n - 1 < c.r:
        raise ConstructionError(f"deleting from n={c.n} drops below r={c.r}")
    cols = colex_arrays(c.n, c.r)
    keep = np.ones(c.num_edges, dtype=bool)
    for col in cols:
        keep &= col != v
    shifted = [np.where(col > v, col - 1, col) for col in cols]
    new_ranks = rank_arrays([s[keep] for s in shifted])
    arr = np.empty(comb(c.n - 1, c.r), dtype=np.uint8)
    arr[new_ranks] = c.colours[keep]
    surviving = set(np.unique(c.colours[keep]).tolist())
    if surviving != set(range(1, c.k + 1)):
        gone = sorted(set(range(1, c.k + 1)) - surviving)
        raise ConstructionError(f"colour class {gone[0]} vanishes on deletion")
    return EdgeColouring(c.n - 1, c.r, c.k, arr)


# ---------------------------------------------------------------------------
# Blow-up (r=2)
# ---------------------------------------------------------------------------

def blow_up(c: EdgeColouring, sizes) -> EdgeColouring:
    """Replace vertex i of the base by a class of sizes[i] vertices.
    Cross-class edges inherit the base colour of their class pair; edges
    inside a class get the base colour of {0,1}."""
    if c.r != 2:
        raise ValueError("blow_up is defined for graph colourings (r=2)")
    sizes = list(sizes)
    if len(sizes) != c.n:
        raise ValueError(f"need {c.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ConstructionError("empty vertex class")
    if c.n < 2:
        raise ConstructionError("base needs at least 2 vertices")
    n = sum(sizes)
    block = np.repeat(np.arange(c.n, dtype=np.int64), sizes)
    pair = np.zeros((c.n, c.n), dtype=np.uint8)
    a0, b0 = colex_arrays(c.n, 2)
    pair[a0, b0] = c.colours
    pair[b0, a0] = c.colours
    intra = c.colour_of((0, 1))
    a, b = colex_arrays(n, 2)
    ba, bb = block[a], block[b]
    colours = np.where(ba != bb, pair[ba, bb], intra).astype(np.uint8)
    return EdgeColouring(n, 2, c.k, colours)


def hamilton_path_colouring(k: int) -> EdgeColouring:
    """Connected k-colouring of the minimal host K_{2k}: the k rotations of
    the zigzag Hamiltonian path j, j+1, j-1, j+2, j-2, ... (mod 2k)
    partition the edge set, so every colour class is a spanning path."""
    if k < 2:
        raise ConstructionError(f"need k >= 2, got {k}")
    n = 2 * k
    arr = np.zeros(comb(n, 2), dtype=np.uint8)
    for j in range(k):
        seq = [j]
        for step in range(1, k + 1):
            seq.append((j + step) % n)
            if step < k:
                seq.append((j - step) % n)
        for x, y in zip(seq, seq[1:]):
            lo, hi = (x, y) if x < y else (y, x)
            rank = comb(hi, 2) + lo
            if arr[rank]:
                raise ConstructionError("zigzag paths overlap; construction is broken")
            arr[rank] = j + 1
    if (arr == 0).any():
        raise ConstructionError("zigzag paths miss an edge; construction is broken")
    return EdgeColouring(n, 2, k, arr)


# ---------------------------------------------------------------------------
# Paths colouring
# ---------------------------------------------------------------------------

def _ball(adj: list[set[int]], start: int, depth: int) -> set[int]:
    seen = {start}
    frontier = {start}
    for _ in range(depth):
        nxt = set()
        for u in frontier:
            nxt |= adj[u] - seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def union_girth_exceeds(adj: list[set[int]], d: int) -> bool:
    """True iff the graph has no cycle of length <= d (truncated BFS from
    every vertex; a cross edge at depths i,j witnesses a cycle <= i+j+1).

    Vertices at depth d//2 are still scanned for cross edges (a shortest
    odd cycle is only visible there) but not expanded further.
    """
    n = len(adj)
    half = d // 2
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in dist:
                    if dist[u] < half:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        queue.append(v)
                elif parent[u] != v and dist[u] + dist[v] + 1 <= d:
                    return False
    return True


def paths_colouring(k: int, n: int, seed: int = 0, d: int = 3,
                    retry_cap: int = 10_000) -> EdgeColouring:
    """k-1 edge-disjoint spanning paths whose union has no cycle of length
    <= d, each path a colour class; colour k is everything else.

    Paths are grown vertex by vertex: a new endpoint must lie outside the
    current union's radius-(d-1) ball around the old endpoint, so no added
    edge can close a short cycle.  Seeded and deterministic; fails after
    retry_cap path attempts when n is too small for (k, d).
    """
    if k < 3:
        raise ConstructionError(f"need k >= 3, got {k}")
    if d < 3:
        raise ConstructionError(f"need d >= 3, got {d}")
    if n < 2 * k:
        raise ConstructionError(f"n={n} below 2k={2 * k}, no connected k-colouring exists")
    rng = random.Random(seed)
    attempts = 0
    while True:
        adj: list[set[int]] = [set() for _ in range(n)]
        paths: list[list[int]] = []
        stalled = False
        while len(paths) < k - 1:
            if attempts >= retry_cap:
                raise ConstructionError(
                    f"paths colouring (k={k}, d={d}, n={n}) failed after "
                    f"{attempts} path attempts; try a larger n")
            attempts += 1
            trial = [set(s) for s in adj]
            start = rng.randrange(n)
            path = [start]
            used = {start}
            ok = True
            while len(path) < n:
                u = path[-1]
                excluded = _ball(trial, u, d - 1)
                cands = [v for v in range(n) if v not in used and v not in excluded]
                if not cands:
                    ok = False
                    break
                v = rng.choice(cands)
                trial[u].add(v)
                trial[v].add(u)
                path.append(v)
                used.add(v)
            if ok:
                adj = trial
                paths.append(path)
            elif attempts % 250 == 0:
                # too constrained: throw away accepted paths and restart
                stalled = True
                break
        if stalled:
            continue
        arr = np.full(comb(n, 2), 0, dtype=np.uint8)

        def put(x, y, col):
            lo, hi = (x, y) if x < y else (y, x)
            arr[comb(hi, 2) + lo] = col

        for idx, path in enumerate(paths, start=1):
            for x, y in zip(path, path[1:]):
                put(x, y, idx)
        arr[arr == 0] = k
        colouring = EdgeColouring(n, 2, k, arr)
        if not union_girth_exceeds(adj, d):
            raise ConstructionError("internal girth violation; this is a bug")
        rep = is_class_connected(colouring, k, ConnectivityNotion.GRAPH)
        if rep.ok:
            return colouring
        # background class disconnected (thin n); count as a failed attempt
        attempts += 1
        if attempts >= retry_cap:
            raise ConstructionError(
                f"background class stayed disconnected after {attempts} attempts")


# ---------------------------------------------------------------------------
# Doubling extension
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DoublingHypotheses:
    """Verified bundle for the cycle-doubling extension: the special colour's
    class is the spanning cycle cycle_order, all distance-2 chords along it
    share distance2_colour, and the special colour sits in exactly k-2
    multicoloured colour sets."""
    special_colour: int
    cycle_order: tuple[int, ...]
    distance2_colour: int
    special_count: int


def _extract_cycle(c: EdgeColouring, colour: int) -> tuple[int, ...]:
    cls = colour_class(c, colour)
    adj: dict[int, list[int]] = {v: [] for v in range(c.n)}
    for e in cls.edges:
        a, b = e
        adj[a].append(b)
        adj[b].append(a)
    if len(cls.edges) != c.n or any(len(v) != 2 for v in adj.values()):
        raise ConstructionError(f"colour {colour} class is not a spanning cycle")
    # orient from the lowest vertex toward its lower-indexed neighbour
    order = [0, min(adj[0])]
    while len(order) < c.n:
        u, p = order[-1], order[-2]
        nxt = adj[u][0] if adj[u][0] != p else adj[u][1]
        order.append(nxt)
    if order[-1] not in adj[0] or len(set(order)) != c.n:
        raise ConstructionError(f"colour {colour} class is not a single cycle")
    return tuple(order)


def check_doubling_hypotheses(c: EdgeColouring, special_colour: int) -> DoublingHypotheses:
    """Verify the doubling hypotheses for the given colour and return the
    bundle; raises ConstructionError on any failed hypothesis."""
    if c.r != 2:
        raise ValueError("doubling applies to graph colourings (r=2)")
    if not 1 <= special_colour <= c.k:
        raise ValueError(f"colour {special_colour} outside palette")
    for i in range(1, c.k + 1):
        rep = is_class_connected(c, i, ConnectivityNotion.GRAPH)
        if not rep.ok:
            raise ConstructionError(f"input not connected: colour {i} fails")
    order = _extract_cycle(c, special_colour)
    n = c.n
    chord_colours = {c.colour_of((order[i], order[(i + 2) % n])) for i in range(n)}
    if len(chord_colours) != 1:
        raise ConstructionError(
            f"distance-2 edges not monochromatic: colours {sorted(chord_colours)}")
    fam = multicoloured_family(c, 3).family
    special = fam.containing(special_colour)
    if special != c.k - 2:
        raise ConstructionError(
            f"colour {special_colour} lies in {special} colour sets, expected k-2={c.k - 2}")
    return DoublingHypotheses(special_colour, order, chord_colours.pop(), special)


def double_extension(c: EdgeColouring, hyp: DoublingHypotheses) -> EdgeColouring:
    """Double the host K_n to K_{2n} and add colour k+1 along a new spanning
    cycle; exactly k-1 new colour sets appear, all containing colour k+1,
    and the output satisfies the doubling hypotheses with special colour k+1.
    """
    fresh = check_doubling_hypotheses(c, hyp.special_colour)
    if fresh != hyp:
        raise ConstructionError("stale hypotheses bundle: re-run check_doubling_hypotheses")
    k, n = c.k, c.n
    # permute so the special colour plays the role of colour k
    swap = {hyp.special_colour: k, k: hyp.special_colour}
    order = hyp.cycle_order

    def base(i: int, j: int) -> int:
        col = c.colour_of((order[i], order[j]))
        return swap.get(col, col)

    mapping: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            col = base(i, j)
            mapping[(i, j)] = col            # x_i x_j
            mapping[(n + i, n + j)] = col    # y_i y_j
    for i in range(n):
        for j in range(n):
            key = (i, n + j)
            if j == i or j == (i + 1) % n:
                mapping[key] = k + 1
            else:
                mapping[key] = base(i, j)
    arr = np.empty(comb(2 * n, 2), dtype=np.uint8)
    for (x, y), col in mapping.items():
        arr[comb(y, 2) + x] = col
    return EdgeColouring(2 * n, 2, k + 1, arr)


# ---------------------------------------------------------------------------
# Upper-bound pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineResult:
    colouring: EdgeColouring
    k0: int
    predicted_count: int
    realised_count: int


def predicted_pipeline_count(k: int, k0: int) -> int:
    return k0 * (k0 - 2) // 3 + sum(j - 1 for j in range(k0, k))


def upper_bound_pipeline(k: int) -> PipelineResult:
    """Largest prime base 2*k0+1 <= 2k+1, then k-k0 doubling steps; the
    realised colour-set count must equal k0(k0-2)/3 + sum_{j=k0}^{k-1}(j-1)
    and is re-verified by enumeration."""
    if k < 3:
        raise ConstructionError(f"need k >= 3, got {k}")
    k0 = next(j for j in range(k, 2, -1) if is_prime(2 * j + 1))
    c = cyclic_prime_colouring(k0)
    for j in range(k0, k):
        hyp = check_doubling_hypotheses(c, special_colour=j)
        c = double_extension(c, hyp)
    predicted = predicted_pipeline_count(k, k0)
    realised = len(multicoloured_family(c, 3).family)
    if realised != predicted:
        raise ConstructionError(
            f"pipeline count mismatch: realised {realised} != predicted {predicted}")
    return PipelineResult(c, k0, predicted, realised)

"""Colourings of complete 3- and 4-uniform hypergraphs, and the minimal
strongly connected 3-graphs with floor(C(n,2)/2) edges.

The K_17 colouring classifies every 3-edge of Z_17 by its sorted triple of
circular distances; the classes are the orbit of one 6-type seed set under
entrywise doubling mod 17 (with x identified with 17-x).  The two square
blow-ups lift a colouring of K_n^(3) to K_{n^2}^(3) with one extra colour,
preserving "no multicoloured 4-set" (strong variant) or "no tricoloured
4-set" (covering variant).
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from .core import (ConstructionError, EdgeColouring, Hypergraph, colex_arrays,
                   subsets_colex)
from .graphs import is_prime
from .verify import (ConnectivityNotion, colour_cube, is_class_connected,
                     multicoloured_family, tricoloured_count)

# sorted triple of circular distances on Z_17
DistanceType = tuple[int, int, int]

K17_SEED_TYPES: frozenset[DistanceType] = frozenset(
    {(1, 1, 2), (3, 3, 6), (1, 4, 5), (2, 3, 5), (3, 4, 7), (4, 5, 8)})


def _dist17(x: int) -> int:
    x %= 17
    return min(x, 17 - x)


def type_of(edge, n: int = 17) -> DistanceType:
    """Sorted triple of pairwise circular distances of a 3-set on Z_n."""
    a, b, c = sorted(edge)
    if not (0 <= a < b < c < n):
        raise ValueError(f"need three distinct vertices in 0..{n - 1}: {edge!r}")

    def dist(x: int) -> int:
        return min(x % n, (-x) % n)

    return tuple(sorted((dist(b - a), dist(c - b), dist(c - a))))  # type: ignore[return-value]


def double_type(t: DistanceType) -> DistanceType:
    """Entrywise doubling mod 17, identifying x with 17-x, then sorting."""
    return tuple(sorted(_dist17(2 * x) for x in t))  # type: ignore[return-value]


def k17_type_classes() -> list[frozenset[DistanceType]]:
    """The four type classes: seed, 2*seed, 4*seed, 8*seed."""
    classes = [K17_SEED_TYPES]
    for _ in range(3):
        classes.append(frozenset(double_type(t) for t in classes[-1]))
    return classes


def k17_colouring() -> EdgeColouring:
    """Connected 4-colouring of K_17^(3) with no multicoloured 4-set: colour
    m goes to every edge whose distance type lies in 2^(m-1) times the seed
    set.  The partition of the 24 realisable types is re-checked on every
    call and an inconsistency raises immediately."""
    classes = k17_type_classes()
    realisable = {type_of(e) for e in combinations(range(17), 3)}
    union: set[DistanceType] = set()
    for cls in classes:
        if union & cls:
            raise RuntimeError("type classes overlap; construction is broken")
        union |= cls
    if union != realisable or len(realisable) != 24:
        raise RuntimeError("type classes do not partition the 24 realisable types")
    lookup = {t: m for m, cls in enumerate(classes, start=1) for t in cls}
    arr = np.empty(comb(17, 3), dtype=np.uint8)
    for rank, e in enumerate(subsets_colex(17, 3)):
        arr[rank] = lookup[type_of(e)]
    return EdgeColouring(17, 3, 4, arr)


# ---------------------------------------------------------------------------
# Pointwise cycles colouring
# ---------------------------------------------------------------------------

def pointwise_cycles_colouring(k: int, n: int) -> EdgeColouring:
    """Classes 1..k-1 are the tight cycles {ja, (j+1)a, (j+2)a mod n} with
    step a = 1..k-1; class k is every remaining 3-set.  Each class is
    pointwise connected and no 4-set is multicoloured."""
    if k < 2:
        raise ConstructionError(f"need k >= 2, got {k}")
    if not is_prime(n):
        raise ConstructionError(f"n={n} not prime")
    assignment: dict[tuple[int, ...], int] = {}
    for a in range(1, k):
        for j in range(n):
            e = tuple(sorted(((j * a) % n, ((j + 1) * a) % n, ((j + 2) * a) % n)))
            if len(set(e)) != 3:
                raise ConstructionError(f"degenerate step-cycle edge at n={n}, a={a}")
            prev = assignment.get(e)
            if prev is not None and prev != a:
                raise ConstructionError(
                    f"classes {prev} and {a} overlap on {e} (n too small)")
            assignment[e] = a
    arr = np.empty(comb(n, 3), dtype=np.uint8)
    remainder = 0
    for rank, e in enumerate(subsets_colex(n, 3)):
        col = assignment.get(e, k)
        if col == k:
            remainder += 1
        arr[rank] = col
    if remainder == 0:
        raise ConstructionError(f"no edges left for class {k} (n too small)")
    return EdgeColouring(n, 3, k, arr)


# ---------------------------------------------------------------------------
# Square blow-ups of 3-graph colourings
# ---------------------------------------------------------------------------

def _blowup3_colours(base_cube: np.ndarray, k: int, kind: str,
                     cols: list[np.ndarray]) -> np.ndarray:
    """Colour array for blow-up edges given as colex column arrays over
    {0..m^2-1}; kind is 'strong' or 'covering'."""
    m = base_cube.shape[0]
    a, b, c = cols
    bi, bj, bl = a // m, b // m, c // m
    xi, xj, xl = a % m, b % m, c % m
    blocks_distinct = (bi != bj) & (bj != bl)        # block indices are sorted
    inners_distinct = (xi != xj) & (xj != xl) & (xi != xl)
    if kind == "strong":
        middle = ~blocks_distinct & inners_distinct
    elif kind == "covering":
        middle = (bi == bj) & (bj == bl)
    else:
        raise ValueError(f"unknown blow-up kind {kind!r}")
    out = np.where(blocks_distinct, base_cube[bi, bj, bl],
                   np.where(middle, base_cube[xi, xj, xl], k + 1))
    return out.astype(np.uint8)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


def strong_blowup(c: EdgeColouring, *, verified: bool = False) -> EdgeColouring:
    """Blow K_n^(3) up to K_{n^2}^(3) with colour k+1 on the degenerate
    block pattern; strong connectivity and the absence of multicoloured
    4-sets carry over.  The input's preconditions are verified (not
    assumed) unless verified=True."""
    _require(c.r == 3, "strong_blowup needs a 3-graph colouring")
    if not verified:
        for i in range(1, c.k + 1):
            rep = is_class_connected(c, i, ConnectivityNotion.STRONG)
            _require(rep.ok, f"input colour {i} not strongly connected")
        _require(c.n < 4 or multicoloured_family(c, 4).count == 0,
                 "input has a multicoloured 4-set")
    cube = colour_cube(c)
    cols = colex_arrays(c.n ** 2, 3)
    return EdgeColouring(c.n ** 2, 3, c.k + 1,
                         _blowup3_colours(cube, c.k, "strong", cols))


def covering_blowup(c: EdgeColouring, *, verified: bool = False) -> EdgeColouring:
    """Covering variant of the square blow-up: base colours apply only on
    all-distinct blocks or within a single block; covering connectivity and
    the absence of tricoloured 4-sets carry over."""
    _require(c.r == 3, "covering_blowup needs a 3-graph colouring")
    if not verified:
        for i in range(1, c.k + 1):
            rep = is_class_connected(c, i, ConnectivityNotion.COVERING)
            _require(rep.ok, f"input colour {i} not covering")
        _require(tricoloured_count(c).count_at_least == 0,
                 "input has a tricoloured 4-set")
    cube = colour_cube(c)
    cols = colex_arrays(c.n ** 2, 3)
    return EdgeColouring(c.n ** 2, 3, c.k + 1,
                         _blowup3_colours(cube, c.k, "covering", cols))


def blowup_stream_blocks(c: EdgeColouring, kind: str
                         ) -> Iterator[tuple[list[np.ndarray], np.ndarray]]:
    """Stream a square blow-up as (columns, colours) blocks in colex order,
    one block per value of the largest vertex; memory stays O(C(n^2, 2))."""
    _require(c.r == 3, "blow-up streaming needs a 3-graph colouring")
    cube = colour_cube(c)
    n2 = c.n ** 2
    pa, pb = colex_arrays(n2, 2)
    for last in range(2, n2):
        block = comb(last, 2)
        cols = [pa[:block], pb[:block], np.full(block, last, dtype=np.int32)]
        yield cols, _blowup3_colours(cube, c.k, kind, cols)


def monochromatic(n: int, r: int) -> EdgeColouring:
    """The 1-colouring of K_n^(r)."""
    return EdgeColouring(n, r, 1, np.ones(comb(n, r), dtype=np.uint8))


# ---------------------------------------------------------------------------
# Covering colourings of complete 4-graphs
# ---------------------------------------------------------------------------

def parity_covering_2colouring(n: int, palette: tuple[int, int] = (1, 2)
                               ) -> EdgeColouring:
    """2-colouring of K_n^(4) by the parity of the vertex-label sum.  Both
    classes are coverings exactly when each parity class of {0..n-1} has at
    least 4 members, i.e. n >= 8: below that some all-even or all-odd 3-set
    has extensions of only one parity."""
    if n < 8:
        raise ConstructionError(f"parity colouring needs n >= 8, got {n}")
    if sorted(palette) != [1, 2]:
        raise ValueError("palette must be a permutation of (1, 2)")
    cols = colex_arrays(n, 4)
    parity = (cols[0] + cols[1] + cols[2] + cols[3]) % 2
    arr = np.where(parity == 0, palette[0], palette[1]).astype(np.uint8)
    return EdgeColouring(n, 4, 2, arr)


def covering_4graph_colouring(c: EdgeColouring, d: EdgeColouring) -> EdgeColouring:
    """Covering 3-colouring of K_{n^2}^(4) from two covering 2-colourings of
    K_n^(4): colours of c read as {1: red, 2: blue}, colours of d as
    {1: blue, 2: green}.  Block-diagonal edges use c on inner labels, edges
    across four distinct blocks use d on block labels, and the three mixed
    block patterns are forced red / blue / green.  No 5-set sees >= 3
    colours."""
    _require(c.r == 4 and d.r == 4, "bases must colour 4-graphs")
    _require(c.n == d.n, "bases must share a vertex count")
    _require(c.k == 2 and d.k == 2, "bases must be 2-colourings")
    for name, base in (("c", c), ("d", d)):
        for i in (1, 2):
            rep = is_class_connected(base, i, ConnectivityNotion.COVERING)
            _require(rep.ok, f"base {name} colour {i} is not covering")
    m = c.n
    c_cube = colour_cube(c)
    d_cube = colour_cube(d)
    cols = colex_arrays(m * m, 4)
    b = [col // m for col in cols]
    x = [col % m for col in cols]
    e1 = b[0] == b[1]
    e2 = b[1] == b[2]
    e3 = b[2] == b[3]
    s = e1.astype(np.int8) + e2 + e3          # block labels are sorted
    RED, BLUE, GREEN = 1, 2, 3
    d_vals = d_cube[b[0], b[1], b[2], b[3]].astype(np.int16) + 1   # 1,2 -> blue,green
    c_vals = c_cube[x[0], x[1], x[2], x[3]]                        # 1,2 -> red,blue
    out = np.where(s == 0, d_vals,
                   np.where(s == 3, c_vals,
                            np.where(s == 1, RED,
                                     np.where(e1 & e3, BLUE, GREEN))))
    return EdgeColouring(m * m, 4, 3, out.astype(np.uint8))


# ---------------------------------------------------------------------------
# Minimal strongly connected 3-graphs
# ---------------------------------------------------------------------------

def minimal_connected_3graph(n: int) -> Hypergraph:
    """Strongly connected 3-graph on n vertices with exactly
    floor(C(n,2)/2) edges.

    Bases: H_2 empty, H_4 = K_4^(3) minus the edge {1,2,3}.  Even n grows by
    four vertices a,b,c,d joined through the pairs (x_i, y_i) of the first
    and second halves of the vertex list; odd n adds one apex over the same
    pairs.  H_2 has no edges and is reported degenerate by certificates.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return Hypergraph(2, 3, frozenset())
    if n == 3:
        return Hypergraph(3, 3, frozenset({(0, 1, 2)}))
    if n == 4:
        return Hypergraph(4, 3, frozenset({(0, 1, 2), (0, 1, 3), (0, 2, 3)}))
    if n % 2 == 1:
        prev = minimal_connected_3graph(n - 1)
        half = (n - 1) // 2
        apex = n - 1
        edges = set(prev.edges)
        for i in range(half):
            edges.add(tuple(sorted((apex, i, half + i))))
        return Hypergraph(n, 3, frozenset(edges))
    prev = minimal_connected_3graph(n - 4)
    half = (n - 4) // 2
    a, b, c, d = n - 4, n - 3, n - 2, n - 1
    edges = set(prev.edges)
    xs = list(range(half))
    ys = list(range(half, 2 * half))
    for i in range(half):
        edges.add(tuple(sorted((a, xs[i], ys[i]))))
        edges.add(tuple(sorted((c, xs[i], ys[i]))))
        edges.add(tuple(sorted((d, xs[i], ys[i]))))
    for i in range(half - 1):
        edges.add(tuple(sorted((b, xs[i], ys[i]))))
    if half >= 1:
        edges.add(tuple(sorted((a, b, xs[-1]))))
        edges.add(tuple(sorted((b, d, ys[-1]))))
    edges.add(tuple(sorted((a, b, c))))
    edges.add(tuple(sorted((a, c, d))))
    return Hypergraph(n, 3, frozenset(edges))

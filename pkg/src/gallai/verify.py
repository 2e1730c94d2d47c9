"""Verifiers: connectivity in four senses, multicoloured / tricoloured set
enumeration, and the partition condition on colour-set families.

Connectivity is decided on an auxiliary graph over ranked (r-1)-sets (one
union sweep per hyperedge, realised via scipy's connected_components);
equivalence with the strong-path definition holds because distinct r-edges
sharing an (r-1)-set intersect in exactly r-1 vertices.

Every counter exists twice: a plain-Python enumerator (the reference the
test suite treats as an oracle) and a vectorised fast path over dense
colour lookup cubes.  Both visit exactly C(n,d) sets and say so.
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from math import comb

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import (ColourSetFamily, EdgeColouring, Hypergraph,
                   class_edge_array, colex_arrays, rank_arrays, rank_subset,
                   unrank_subset)


class ConnectivityNotion(str, Enum):
    GRAPH = "graph"           # spanning connectivity of a 2-graph
    POINTWISE = "pointwise"   # intersecting-edge paths between all vertices
    STRONG = "strong"         # strong paths between all (r-1)-sets
    COVERING = "covering"     # every (r-1)-set lies in some edge

    def __str__(self) -> str:  # argparse-friendly
        return self.value


@dataclass(frozen=True)
class ConnectivityReport:
    notion: str
    ok: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"notion": self.notion, "ok": self.ok, "witness": self.witness}


@dataclass(frozen=True)
class WitnessPath:
    """Edge sequence joining two (r-1)-sets by consecutive (r-1)-overlaps,
    or, when none exists, the set of (r-1)-sets reachable from the source."""
    edges: tuple[tuple[int, ...], ...] | None
    reachable_side: frozenset | None = None


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def _edge_matrix(h: Hypergraph) -> np.ndarray:
    return np.array(sorted(h.edges), dtype=np.int64).reshape(-1, h.r)


def _components(rows, cols, n_nodes):
    if len(rows) == 0:
        return n_nodes, np.arange(n_nodes)
    g = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                   shape=(n_nodes, n_nodes))
    return connected_components(g, directed=False)


def _subset_columns(edges: np.ndarray, drop: int) -> list[np.ndarray]:
    r = edges.shape[1]
    return [edges[:, j] for j in range(r) if j != drop]


def connected_from_array(edges: np.ndarray, n: int, r: int,
                         notion: ConnectivityNotion) -> ConnectivityReport:
    """Connectivity verdict for an edge array of sorted rows (m, r)."""
    notion = ConnectivityNotion(notion)
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if notion is ConnectivityNotion.GRAPH and r != 2:
        raise ValueError("graph connectivity applies to r=2 only")

    if notion is ConnectivityNotion.COVERING:
        n_nodes = comb(n, r - 1)
        seen = np.zeros(n_nodes, dtype=bool)
        for drop in range(r):
            seen[rank_arrays(_subset_columns(edges, drop))] = True
        if seen.all():
            return ConnectivityReport(notion.value, True)
        missing = unrank_subset(int(np.nonzero(~seen)[0][0]), n, r - 1)
        return ConnectivityReport(notion.value, False,
                                  {"kind": "uncovered-set", "set": list(missing)})

    if notion in (ConnectivityNotion.POINTWISE, ConnectivityNotion.GRAPH):
        rows = np.tile(edges[:, 0], r - 1)
        cols = np.concatenate([edges[:, j] for j in range(1, r)])
        ncomp, labels = _components(rows, cols, n)
        if ncomp == 1:
            return ConnectivityReport(notion.value, True)
        v = int(np.nonzero(labels != labels[0])[0][0])
        return ConnectivityReport(notion.value, False,
                                  {"kind": "unreachable-vertex", "set": [v]})

    # strong: nodes are all (r-1)-sets, each edge joins its r subsets
    n_nodes = comb(n, r - 1)
    sub_ranks = [rank_arrays(_subset_columns(edges, drop)) for drop in range(r)]
    rows = np.tile(sub_ranks[0], r - 1)
    cols = np.concatenate(sub_ranks[1:]) if r > 1 else sub_ranks[0]
    ncomp, labels = _components(rows, cols, n_nodes)
    covered = np.zeros(n_nodes, dtype=bool)
    for sr in sub_ranks:
        covered[sr] = True
    if ncomp == 1 and covered.all():
        return ConnectivityReport(notion.value, True)
    if not covered.all():
        bad = int(np.nonzero(~covered)[0][0])
    else:
        bad = int(np.nonzero(labels != labels[0])[0][0])
    missing = unrank_subset(bad, n, r - 1)
    return ConnectivityReport(notion.value, False,
                              {"kind": "unreachable-set", "set": list(missing)})


def is_connected(h: Hypergraph, notion: ConnectivityNotion,
                 n: int | None = None) -> ConnectivityReport:
    if n is not None and n != h.n:
        raise ValueError(f"vertex count mismatch: {n} != {h.n}")
    if len(h.edges) == 0:
        notion = ConnectivityNotion(notion)
        first = unrank_subset(0, h.n, h.r - 1)
        kind = ("uncovered-set" if notion is ConnectivityNotion.COVERING
                else "unreachable-set")
        return ConnectivityReport(notion.value, False,
                                  {"kind": kind, "set": list(first)})
    return connected_from_array(_edge_matrix(h), h.n, h.r, notion)


def is_class_connected(c: EdgeColouring, colour: int,
                       notion: ConnectivityNotion) -> ConnectivityReport:
    """Connectivity of one colour class, without materialising a Hypergraph."""
    edges = class_edge_array(c, colour).astype(np.int64)
    if edges.shape[0] == 0:
        return is_connected(Hypergraph(c.n, c.r, frozenset()), notion)
    return connected_from_array(edges, c.n, c.r, notion)


def strong_path(h: Hypergraph, source, target) -> WitnessPath:
    """Breadth-first strong path between two (r-1)-sets, built on demand."""
    src = tuple(sorted(source))
    dst = tuple(sorted(target))
    if len(src) != h.r - 1 or len(dst) != h.r - 1:
        raise ValueError(f"queries must be {h.r - 1}-sets")
    by_subset: dict[tuple, list[tuple]] = {}
    for e in sorted(h.edges):
        for sub in combinations(e, h.r - 1):
            by_subset.setdefault(sub, []).append(e)
    start = by_subset.get(src, [])
    targets = set(by_subset.get(dst, []))
    if not start or not targets:
        reach = frozenset(s for s in by_subset if s == src)
        return WitnessPath(None, reach)
    prev: dict[tuple, tuple | None] = {e: None for e in start}
    queue = deque(start)
    while queue:
        e = queue.popleft()
        if e in targets:
            path = []
            cur: tuple | None = e
            while cur is not None:
                path.append(cur)
                cur = prev[cur]
            return WitnessPath(tuple(reversed(path)))
        for sub in combinations(e, h.r - 1):
            for f in by_subset[sub]:
                if f not in prev:
                    prev[f] = e
                    queue.append(f)
    reachable = frozenset(s for e in prev for s in combinations(e, h.r - 1))
    return WitnessPath(None, reachable)


def connectivity_certificate(c: EdgeColouring, notion: ConnectivityNotion) -> list[dict]:
    """Per-colour verdicts in certificate form."""
    out = []
    for i in range(1, c.k + 1):
        rep = is_class_connected(c, i, notion)
        entry = {"colour": i, **rep.as_dict()}
        out.append(entry)
    return out


# ---------------------------------------------------------------------------
# Colour lookup cubes
# ---------------------------------------------------------------------------

def colour_cube(c: EdgeColouring) -> np.ndarray:
    """Dense symmetric lookup: cube[i0,...,i_{r-1}] = colour of the r-set.
    Entries with repeated indices are 0 and must not be read."""
    n, r = c.n, c.r
    cube = np.zeros((n,) * r, dtype=np.uint8)
    cols = colex_arrays(n, r)
    for perm in permutations(range(r)):
        cube[tuple(cols[p] for p in perm)] = c.colours
    return cube


def _triu_mask(n: int) -> np.ndarray:
    return np.triu(np.ones((n, n), dtype=bool), 1)


# ---------------------------------------------------------------------------
# Multicoloured d-sets
# ---------------------------------------------------------------------------

@dataclass
class FamilyCount:
    """Distinct colour sets of multicoloured d-sets plus the raw d-set count."""
    family: ColourSetFamily
    count: int
    d: int
    mode: str = "exhaustive"
    method: str = "python"
    witness: tuple | None = None
    visited: int = 0

    def as_dict(self) -> dict:
        return {"d": self.d, "count": len(self.family),
                "families": [list(s) for s in self.family],
                "d_sets": self.count, "mode": self.mode}


def _family_python(c: EdgeColouring, d: int, early_exit: bool) -> FamilyCount:
    fam: set[tuple[int, ...]] = set()
    count = 0
    visited = 0
    witness = None
    n, r = c.n, c.r
    colours = c.colours
    for dset in combinations(range(n), d):
        visited += 1
        seen: set[int] = set()
        ok = True
        for sub in combinations(dset, r):
            col = int(colours[rank_subset(sub, n, r)])
            if col in seen:
                ok = False
                break
            seen.add(col)
        if ok:
            count += 1
            fam.add(tuple(sorted(seen)))
            if witness is None:
                witness = dset
            if early_exit:
                mode = "early-exit"
                return FamilyCount(ColourSetFamily.from_iter(c.k, fam), count, d,
                                   mode, "python", witness, visited)
    assert visited == comb(n, d)
    return FamilyCount(ColourSetFamily.from_iter(c.k, fam), count, d,
                       "exhaustive", "python", witness, visited)


def _family_r2_d3_block(pair, tri, a, collect):
    n = pair.shape[0]
    v = pair[a, a + 1:]
    sub = pair[a + 1:, a + 1:]
    s = v.shape[0]
    vc = v[:, None]
    vd = v[None, :]
    m = (vc != vd) & (vc != sub) & (vd != sub) & tri[:s, :s]
    cnt = int(np.count_nonzero(m))
    fams = set()
    wit = None
    if cnt and collect:
        for bi, ci in np.argwhere(m):
            fams.add(tuple(sorted((int(v[bi]), int(v[ci]), int(sub[bi, ci])))))
            if wit is None:
                wit = (a, a + 1 + int(bi), a + 1 + int(ci))
    return cnt, fams, wit


def _family_r3_d4_block(cube, tri, a, collect):
    n = cube.shape[0]
    total = 0
    fams: set = set()
    wit = None
    for b in range(a + 1, n - 2):
        v = cube[a, b, b + 1:]
        e3 = cube[a, b + 1:, b + 1:]
        e4 = cube[b, b + 1:, b + 1:]
        s = v.shape[0]
        vc = v[:, None]
        vd = v[None, :]
        m = ((vc != vd) & (vc != e3) & (vc != e4)
             & (vd != e3) & (vd != e4) & (e3 != e4) & tri[:s, :s])
        cnt = int(np.count_nonzero(m))
        if cnt:
            total += cnt
            if collect:
                for ci, di in np.argwhere(m):
                    cset = {int(v[ci]), int(v[di]),
                            int(e3[ci, di]), int(e4[ci, di])}
                    fams.add(tuple(sorted(cset)))
                    if wit is None:
                        wit = (a, b, b + 1 + int(ci), b + 1 + int(di))
    return total, fams, wit


_POOL_STATE: dict = {}


def _pool_init(kind, cube):
    _POOL_STATE["kind"] = kind
    _POOL_STATE["cube"] = cube
    _POOL_STATE["tri"] = _triu_mask(cube.shape[0])


def _pool_task(args):
    a_lo, a_hi, extra = args
    kind = _POOL_STATE["kind"]
    cube = _POOL_STATE["cube"]
    tri = _POOL_STATE["tri"]
    if kind == "family_r2":
        total, fams = 0, set()
        for a in range(a_lo, a_hi):
            cnt, f, _ = _family_r2_d3_block(cube, tri, a, True)
            total += cnt
            fams |= f
        return total, fams, None
    if kind == "family_r3":
        total, fams = 0, set()
        for a in range(a_lo, a_hi):
            cnt, f, _ = _family_r3_d4_block(cube, tri, a, True)
            total += cnt
            fams |= f
        return total, fams, None
    if kind == "tric_r3":
        hist = np.zeros(5, dtype=np.int64)
        wits: list = []
        for a in range(a_lo, a_hi):
            _tricoloured_r3_block(cube, tri, a, hist, wits, extra)
        return hist, wits, None
    raise ValueError(kind)


def _run_pool(kind, cube, n_outer, workers, extra=None):
    chunk = max(1, n_outer // (workers * 4))
    tasks = [(lo, min(lo + chunk, n_outer), extra)
             for lo in range(0, n_outer, chunk)]
    with ProcessPoolExecutor(max_workers=workers, initializer=_pool_init,
                             initargs=(kind, cube)) as pool:
        return list(pool.map(_pool_task, tasks))


def multicoloured_family(c: EdgeColouring, d: int, *, mode: str = "full",
                         method: str = "auto", workers: int = 1,
                         samples: int = 0, seed: int = 0) -> FamilyCount:
    """Colour-set family of multicoloured d-sets plus the raw count.

    mode:   "full" enumerates every d-set; "early-exit" stops at the first
            multicoloured witness; "sampled" checks `samples` random d-sets.
    method: "python" | "vector" | "auto" (vectorised paths exist for
            (r=2, d=3) and (r=3, d=4)).
    """
    if not c.r <= d <= c.n:
        raise ValueError(f"d={d} out of range {c.r}..{c.n}")
    if mode == "sampled":
        rng = random.Random(seed)
        fam: set = set()
        count = 0
        witness = None
        for _ in range(samples):
            dset = tuple(sorted(rng.sample(range(c.n), d)))
            seen: set[int] = set()
            ok = True
            for sub in combinations(dset, c.r):
                col = c.colour_of(sub)
                if col in seen:
                    ok = False
                    break
                seen.add(col)
            if ok:
                count += 1
                fam.add(tuple(sorted(seen)))
                witness = witness or dset
        return FamilyCount(ColourSetFamily.from_iter(c.k, fam), count, d,
                           "sampled", "python", witness, samples)

    vec = (c.r, d) in ((2, 3), (3, 4))
    if method == "auto":
        method = "vector" if vec and c.n >= 16 else "python"
    if method == "python" or not vec:
        return _family_python(c, d, mode == "early-exit")

    cube = colour_cube(c)
    n = c.n
    n_outer = n - 2 if c.r == 2 else n - 3
    if mode == "early-exit":
        tri = _triu_mask(n)
        block = _family_r2_d3_block if c.r == 2 else _family_r3_d4_block
        for a in range(n_outer):
            cnt, fams, wit = block(cube, tri, a, True)
            if cnt:
                return FamilyCount(ColourSetFamily.from_iter(c.k, fams), cnt, d,
                                   "early-exit", "vector", wit)
        return FamilyCount(ColourSetFamily.from_iter(c.k, []), 0, d,
                           "exhaustive", "vector", None, comb(n, d))
    if workers > 1:
        kind = "family_r2" if c.r == 2 else "family_r3"
        parts = _run_pool(kind, cube, n_outer, workers)
        total = sum(p[0] for p in parts)
        fams = set().union(*(p[1] for p in parts))
        return FamilyCount(ColourSetFamily.from_iter(c.k, fams), total, d,
                           "exhaustive", "vector", None, comb(n, d))
    tri = _triu_mask(n)
    block = _family_r2_d3_block if c.r == 2 else _family_r3_d4_block
    total = 0
    fams = set()
    witness = None
    visited = 0
    for a in range(n_outer):
        cnt, f, wit = block(cube, tri, a, True)
        total += cnt
        fams |= f
        witness = witness or wit
        if c.r == 2:
            visited += comb(n - a - 1, 2)
        else:
            visited += sum(comb(n - b - 1, 2) for b in range(a + 1, n - 2))
    assert visited == comb(n, d), "enumeration did not visit every d-set"
    return FamilyCount(ColourSetFamily.from_iter(c.k, fams), total, d,
                       "exhaustive", "vector", witness, visited)


# ---------------------------------------------------------------------------
# Tricoloured (r+1)-sets
# ---------------------------------------------------------------------------

@dataclass
class TricolouredCount:
    """Tally of (r+1)-sets by number of distinct edge colours."""
    d: int
    histogram: dict[int, int]
    threshold: int = 3
    witnesses: list[tuple] = field(default_factory=list)
    mode: str = "exhaustive"
    method: str = "python"

    @property
    def count_at_least(self) -> int:
        return sum(v for dist, v in self.histogram.items() if dist >= self.threshold)

    @property
    def count_exactly_3(self) -> int:
        return self.histogram.get(3, 0)

    def as_dict(self) -> dict:
        return {"d": self.d, "threshold": self.threshold,
                "count": self.count_at_least,
                "count_exactly_3": self.count_exactly_3,
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
                "witnesses": [list(w) for w in self.witnesses[:4]],
                "mode": self.mode}


def _tricoloured_python(c: EdgeColouring, threshold: int) -> TricolouredCount:
    d = c.r + 1
    hist: dict[int, int] = {}
    wits: list[tuple] = []
    for dset in combinations(range(c.n), d):
        cols = {c.colour_of(sub) for sub in combinations(dset, c.r)}
        hist[len(cols)] = hist.get(len(cols), 0) + 1
        if len(cols) >= threshold and len(wits) < 4:
            wits.append(dset)
    return TricolouredCount(d, hist, threshold, wits, "exhaustive", "python")


# eq-pair count -> number of distinct values, for 4 values (r=3 sub-edges)
_DISTINCT4 = np.array([4, 3, 2, 2, 0, 0, 1], dtype=np.uint8)
# and for 5 values (r=4 sub-edges)
_DISTINCT5 = np.array([5, 4, 3, 3, 2, 0, 2, 0, 0, 0, 1], dtype=np.uint8)


def _tricoloured_r3_block(cube, tri, a, hist, wits, threshold):
    n = cube.shape[0]
    for b in range(a + 1, n - 2):
        v = cube[a, b, b + 1:]
        e3 = cube[a, b + 1:, b + 1:]
        e4 = cube[b, b + 1:, b + 1:]
        s = v.shape[0]
        vc = v[:, None]
        vd = v[None, :]
        eq = ((vc == vd).astype(np.uint8) + (vc == e3) + (vc == e4)
              + (vd == e3) + (vd == e4) + (e3 == e4))
        distinct = _DISTINCT4[eq[tri[:s, :s]]]
        hist += np.bincount(distinct, minlength=5)
        if len(wits) < 4:
            hit = np.argwhere((_DISTINCT4[eq] >= threshold) & tri[:s, :s])
            for ci, di in hit[:4 - len(wits)]:
                wits.append((a, b, b + 1 + int(ci), b + 1 + int(di)))


def _tricoloured_r4(c: EdgeColouring, threshold: int) -> TricolouredCount:
    cube = colour_cube(c)
    n = c.n
    tri = _triu_mask(n)
    hist = np.zeros(6, dtype=np.int64)
    wits: list[tuple] = []
    for a in range(n - 4):
        for b in range(a + 1, n - 3):
            for cc in range(b + 1, n - 2):
                w = cube[a, b, cc, cc + 1:]
                e1 = cube[a, b, cc + 1:, cc + 1:]
                e2 = cube[a, cc, cc + 1:, cc + 1:]
                e3 = cube[b, cc, cc + 1:, cc + 1:]
                s = w.shape[0]
                wd = w[:, None]
                we = w[None, :]
                eq = ((wd == we).astype(np.uint8)
                      + (wd == e1) + (wd == e2) + (wd == e3)
                      + (we == e1) + (we == e2) + (we == e3)
                      + (e1 == e2) + (e1 == e3) + (e2 == e3))
                distinct = _DISTINCT5[eq[tri[:s, :s]]]
                hist += np.bincount(distinct, minlength=6)
                if len(wits) < 4:
                    hit = np.argwhere((_DISTINCT5[eq] >= threshold) & tri[:s, :s])
                    for di, ei in hit[:4 - len(wits)]:
                        wits.append((a, b, cc, cc + 1 + int(di), cc + 1 + int(ei)))
    hd = {i: int(v) for i, v in enumerate(hist) if v}
    assert sum(hd.values()) == comb(n, 5)
    return TricolouredCount(5, hd, threshold, wits, "exhaustive", "vector")


def tricoloured_count(c: EdgeColouring, threshold: int = 3, *,
                      method: str = "auto", workers: int = 1) -> TricolouredCount:
    """Count (r+1)-sets whose sub-edges span >= threshold distinct colours;
    the full distinct-colour histogram is reported alongside."""
    if c.r not in (3, 4):
        return _tricoloured_python(c, threshold)
    if method == "auto":
        method = "vector" if c.n >= 16 else "python"
    if method == "python":
        return _tricoloured_python(c, threshold)
    if c.r == 4:
        return _tricoloured_r4(c, threshold)
    cube = colour_cube(c)
    n = c.n
    if workers > 1:
        parts = _run_pool("tric_r3", cube, n - 3, workers, threshold)
        hist = np.zeros(5, dtype=np.int64)
        wits: list[tuple] = []
        for h, w, _ in parts:
            hist += h
            wits.extend(w)
        wits = wits[:4]
    else:
        tri = _triu_mask(n)
        hist = np.zeros(5, dtype=np.int64)
        wits = []
        for a in range(n - 3):
            _tricoloured_r3_block(cube, tri, a, hist, wits, threshold)
    hd = {i: int(v) for i, v in enumerate(hist) if v}
    assert sum(hd.values()) == comb(n, 4)
    return TricolouredCount(4, hd, threshold, wits, "exhaustive", "vector")


# ---------------------------------------------------------------------------
# Maximum colours on a d-clique (r=2)
# ---------------------------------------------------------------------------

def max_colours_on_d_set(c: EdgeColouring, d: int, *,
                         method: str = "auto") -> tuple[int, tuple[int, ...]]:
    """Maximum number of distinct colours on any d-clique, with a witness."""
    if c.r != 2:
        raise ValueError("defined for graph colourings (r=2) only")
    if not 3 <= d <= c.n:
        raise ValueError(f"d={d} out of range 3..{c.n}")
    if method == "auto":
        method = "vector" if d == 4 and c.n >= 24 else "python"
    if method == "python" or d != 4:
        best, wit = 0, None
        for dset in combinations(range(c.n), d):
            cols = {c.colour_of(p) for p in combinations(dset, 2)}
            if len(cols) > best:
                best, wit = len(cols), dset
                if best == min(c.k, comb(d, 2)):
                    break
        return best, wit

    pair = colour_cube(c)
    n = c.n
    tri = _triu_mask(n)
    best, wit = 0, None
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            x1 = pair[a, b]
            vac = pair[a, b + 1:]
            vbc = pair[b, b + 1:]
            ecd = pair[b + 1:, b + 1:]
            c2 = vac[:, None]
            c3 = vbc[:, None]
            c4 = vac[None, :]
            c5 = vbc[None, :]
            s = vac.shape[0]
            cnt = np.ones((s, s), dtype=np.uint8)
            cnt += c2 != x1
            cnt += (c3 != x1) & (c3 != c2)
            cnt += (c4 != x1) & (c4 != c2) & (c4 != c3)
            cnt += (c5 != x1) & (c5 != c2) & (c5 != c3) & (c5 != c4)
            cnt += ((ecd != x1) & (ecd != c2) & (ecd != c3)
                    & (ecd != c4) & (ecd != c5))
            cnt = np.where(tri[:s, :s], cnt, 0)
            m = int(cnt.max(initial=0))
            if m > best:
                ci, di = np.argwhere(cnt == m)[0]
                best = m
                wit = (a, b, b + 1 + int(ci), b + 1 + int(di))
    return best, wit


def short_cycle_scan(edges, n: int, max_len: int = 4) -> tuple[int, ...] | None:
    """Exhaustive wedge scan of a sparse 2-graph for a cycle of length 3 or 4
    (max_len in {3, 4}); returns a witness cycle or None if the girth exceeds
    max_len.  Cost O(sum of squared degrees), independent of C(n, 4).

    This certifies clique colour bounds for sparse-plus-background
    colourings: a d-clique carrying >= d sparse edges contains a cycle of
    length <= d, so an empty scan bounds every 4-clique at 3 sparse edges.
    """
    if max_len not in (3, 4):
        raise ValueError("scan supports cycle lengths 3 and 4 only")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    wedge_mid: dict[tuple[int, int], int] = {}
    for w in range(n):
        nbrs = sorted(adj[w])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, v = nbrs[i], nbrs[j]
                if v in adj[u]:
                    return (u, v, w)
                if max_len == 4:
                    other = wedge_mid.get((u, v))
                    if other is not None and other != w:
                        return (u, other, v, w)
                    wedge_mid[(u, v)] = w
    return None


# ---------------------------------------------------------------------------
# Partition condition (colour-set families)
# ---------------------------------------------------------------------------

def three_partitions(k: int):
    """All unordered partitions of {1..k} into exactly 3 non-empty parts,
    enumerated via restricted-growth strings (feasible up to k=12)."""
    if k < 3:
        raise ValueError("need k >= 3")
    if k > 12:
        raise ValueError("partition enumeration capped at k=12")
    labels = [0] * k

    def rec(i: int, mx: int):
        if i == k:
            if mx == 2:
                parts: tuple[list[int], ...] = ([], [], [])
                for idx, lab in enumerate(labels):
                    parts[lab].append(idx + 1)
                yield tuple(frozenset(p) for p in parts)
            return
        for lab in range(min(mx + 1, 2) + 1):
            labels[i] = lab
            yield from rec(i + 1, max(mx, lab))

    yield from rec(1, 0)


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    witness: tuple[frozenset, frozenset, frozenset] | None = None
    partitions_checked: int = 0


def partition_condition(f: ColourSetFamily, k: int | None = None) -> PartitionCheck:
    """PASS iff every 3-partition of {1..k} is hit by some member of the
    family (member meets all three parts); FAIL carries the unhit partition."""
    k = f.k if k is None else k
    members = [frozenset(s) for s in f]
    checked = 0
    for parts in three_partitions(k):
        checked += 1
        if not any(all(a & p for p in parts) for a in members):
            return PartitionCheck(False, parts, checked)
    return PartitionCheck(True, None, checked)


@dataclass(frozen=True)
class LinkProfile:
    degree: int
    connected: bool


def link_connectivity_profile(f: ColourSetFamily,
                              k: int | None = None) -> dict[int, LinkProfile]:
    """For each colour i: how many members contain i, and whether the link
    graph on {1..k}-{i} (edges A-{i} for 3-set members A containing i) is
    connected."""
    k = f.k if k is None else k
    out: dict[int, LinkProfile] = {}
    for i in range(1, k + 1):
        link_edges = [tuple(sorted(set(a) - {i})) for a in f
                      if i in a and len(a) == 3]
        verts = [v for v in range(1, k + 1) if v != i]
        parent = {v: v for v in verts}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in link_edges:
            parent[find(u)] = find(v)
        # one root over all k-1 vertices; an isolated vertex is its own root
        roots = {find(v) for v in verts}
        out[i] = LinkProfile(len(link_edges), len(roots) == 1)
    return out


# ---------------------------------------------------------------------------
# Class isomorphism under a vertex relabelling
# ---------------------------------------------------------------------------

def classes_isomorphic_under(c: EdgeColouring, vertex_map) -> bool:
    """True iff pushing every edge through the permutation carries colour
    class m exactly onto class (m mod k) + 1."""
    vm = np.asarray(vertex_map, dtype=np.int64)
    if vm.shape != (c.n,) or sorted(vm.tolist()) != list(range(c.n)):
        raise ValueError("vertex_map is not a permutation of 0..n-1")
    cols = colex_arrays(c.n, c.r)
    mapped = np.sort(np.stack([vm[col] for col in cols], axis=1), axis=1)
    mranks = rank_arrays([mapped[:, j] for j in range(c.r)])
    expected = (c.colours.astype(np.int64) % c.k) + 1
    return bool(np.array_equal(c.colours[mranks].astype(np.int64), expected))

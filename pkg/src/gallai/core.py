"""Shared domain types and formats.

Vertices are the integers 0..n-1; colours are 1-based, drawn from the
palette {1..k}.  A colouring of the complete r-uniform hypergraph stores
one colour per r-subset in a dense array indexed by colexicographic rank,
so lookups are O(1) and full-enumeration passes are cache friendly.

EdgeColouring and Hypergraph are immutable after construction and safe to
share read-only across concurrent workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

import numpy as np

FILE_MAGIC = "gallai-colouring v1"
CERT_SCHEMA = "gallai-certificate v1"


class InvalidColouringError(ValueError):
    """A colouring (or colouring file) violates an invariant."""


class ConstructionError(RuntimeError):
    """A construction's preconditions fail or its search gives up."""


# ---------------------------------------------------------------------------
# Subset ranking (colexicographic)
# ---------------------------------------------------------------------------

def rank_subset(s, n: int, r: int) -> int:
    """Colex rank of an r-subset of {0..n-1}: sum of C(s_i, i+1) over the
    sorted elements s_0 < s_1 < ... < s_{r-1}."""
    t = sorted(s)
    if len(t) != r or len(set(t)) != r:
        raise ValueError(f"expected {r} distinct elements, got {s!r}")
    if t[0] < 0 or t[-1] >= n:
        raise ValueError(f"element out of range 0..{n - 1}: {s!r}")
    return sum(comb(c, i + 1) for i, c in enumerate(t))


def unrank_subset(rank: int, n: int, r: int) -> tuple[int, ...]:
    """Inverse of rank_subset (combinadic decoding, largest element first)."""
    if not 0 <= rank < comb(n, r):
        raise ValueError(f"rank {rank} out of range for C({n},{r})")
    out = [0] * r
    k = r
    m = n
    while k > 0:
        m -= 1
        offset = comb(m, k)
        if rank >= offset:
            rank -= offset
            k -= 1
            out[k] = m
    return tuple(out)


def subsets_colex(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All r-subsets of {0..n-1} in colex order (rank 0, 1, 2, ...)."""
    if r == 0:
        yield ()
        return
    for last in range(r - 1, n):
        for rest in subsets_colex(last, r - 1):
            yield rest + (last,)


def colex_arrays(n: int, r: int) -> list[np.ndarray]:
    """r int32 column arrays A_0 < A_1 < ... < A_{r-1} listing every r-subset
    of {0..n-1} in colex order.

    Uses the prefix property: the subsets of {0..m-1} are the first C(m,r)
    entries of the subsets of {0..n-1}.
    """
    if r == 1:
        return [np.arange(n, dtype=np.int32)]
    lower = colex_arrays(n, r - 1)
    total = comb(n, r)
    cols = [np.empty(total, dtype=np.int32) for _ in range(r)]
    pos = 0
    for last in range(r - 1, n):
        block = comb(last, r - 1)
        for j in range(r - 1):
            cols[j][pos:pos + block] = lower[j][:block]
        cols[r - 1][pos:pos + block] = last
        pos += block
    return cols


def rank_arrays(cols: list[np.ndarray]) -> np.ndarray:
    """Vectorised colex ranks for sorted-row subsets given as column arrays."""
    r = len(cols)
    rank = cols[0].astype(np.int64)
    for i in range(1, r):
        c = cols[i].astype(np.int64)
        # C(c, i+1) without scipy: falling factorial / (i+1)!
        term = np.ones_like(c)
        for j in range(i + 1):
            term = term * (c - j)
        fact = 1
        for j in range(2, i + 2):
            fact *= j
        rank += term // fact
    return rank


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform edge set on vertices 0..n-1."""

    n: int
    r: int
    edges: frozenset[tuple[int, ...]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise ValueError(f"not an {self.r}-set: {e!r}")
            if min(e) < 0 or max(e) >= self.n:
                raise ValueError(f"edge out of range: {e!r}")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge not sorted: {e!r}")

    def __len__(self) -> int:
        return len(self.edges)


class EdgeColouring:
    """A total colour assignment on all r-subsets of {0..n-1}.

    Invariants: every r-subset has exactly one colour in {1..k}; every
    colour in {1..k} is used at least once; n >= r.
    """

    __slots__ = ("n", "r", "k", "colours")

    def __init__(self, n: int, r: int, k: int, colours: np.ndarray, *,
                 validate: bool = True):
        self.n = n
        self.r = r
        self.k = k
        arr = np.ascontiguousarray(colours, dtype=np.uint8)
        arr.flags.writeable = False
        self.colours = arr
        if validate:
            self.validate()

    def validate(self) -> None:
        if self.r < 2:
            raise InvalidColouringError(f"uniformity r={self.r} < 2")
        if self.n < self.r:
            raise InvalidColouringError(f"n={self.n} < r={self.r}")
        if not 1 <= self.k <= 255:
            raise InvalidColouringError(f"palette size k={self.k} out of 1..255")
        m = comb(self.n, self.r)
        if self.colours.shape != (m,):
            raise InvalidColouringError(
                f"expected {m} colours, got {self.colours.shape}")
        lo, hi = int(self.colours.min()), int(self.colours.max())
        if lo < 1 or hi > self.k:
            raise InvalidColouringError(
                f"colour out of palette 1..{self.k}: found {lo if lo < 1 else hi}")
        used = np.bincount(self.colours, minlength=self.k + 1)[1:]
        if (used == 0).any():
            missing = int(np.nonzero(used == 0)[0][0]) + 1
            raise InvalidColouringError(f"colour {missing} unused (palette not tight)")

    @property
    def num_edges(self) -> int:
        return int(self.colours.shape[0])

    def colour_of(self, edge) -> int:
        return int(self.colours[rank_subset(edge, self.n, self.r)])

    def edges(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(edge, colour) pairs in colex order."""
        for rank, e in enumerate(subsets_colex(self.n, self.r)):
            yield e, int(self.colours[rank])

    @classmethod
    def from_map(cls, n: int, r: int, k: int, colour_of) -> "EdgeColouring":
        """Build from a callable or dict giving the colour of each sorted r-tuple."""
        get = colour_of.__getitem__ if hasattr(colour_of, "__getitem__") else colour_of
        arr = np.empty(comb(n, r), dtype=np.uint8)
        for rank, e in enumerate(subsets_colex(n, r)):
            arr[rank] = get(e)
        return cls(n, r, k, arr)

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColouring)
                and (self.n, self.r, self.k) == (other.n, other.r, other.k)
                and np.array_equal(self.colours, other.colours))

    def __hash__(self):
        return hash((self.n, self.r, self.k, self.colours.tobytes()))

    def __repr__(self) -> str:
        return f"EdgeColouring(n={self.n}, r={self.r}, k={self.k})"


def colour_class(c: EdgeColouring, i: int) -> Hypergraph:
    """The r-sets mapped to colour i; classes over i=1..k partition the edges."""
    if not 1 <= i <= c.k:
        raise ValueError(f"colour {i} outside palette 1..{c.k}")
    edges = frozenset(e for e, col in c.edges() if col == i)
    return Hypergraph(c.n, c.r, edges)


def class_edge_array(c: EdgeColouring, i: int) -> np.ndarray:
    """Colour class i as an (m, r) int32 array of sorted rows (fast path)."""
    if not 1 <= i <= c.k:
        raise ValueError(f"colour {i} outside palette 1..{c.k}")
    cols = colex_arrays(c.n, c.r)
    mask = c.colours == i
    return np.stack([col[mask] for col in cols], axis=1)


@dataclass(frozen=True)
class ColourSetFamily:
    """Distinct subsets of the palette {1..k} realised as colour sets of
    multicoloured sets.  Members are kept sorted, the family ordered."""

    k: int
    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_iter(cls, k: int, sets) -> "ColourSetFamily":
        canon = sorted({tuple(sorted(s)) for s in sets})
        for s in canon:
            if s and (s[0] < 1 or s[-1] > k):
                raise ValueError(f"colour set {s!r} outside palette 1..{k}")
        return cls(k, tuple(canon))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self.sets

    def containing(self, colour: int) -> int:
        """Number of members containing the given colour."""
        return sum(1 for s in self.sets if colour in s)


# ---------------------------------------------------------------------------
# Colouring file format
# ---------------------------------------------------------------------------

def encode_colouring(c: EdgeColouring) -> str:
    """Serialise to the flat text format (edges in colex order, LF lines)."""
    lines = [FILE_MAGIC, f"n={c.n} r={c.r} k={c.k}"]
    for e, col in c.edges():
        lines.append(" ".join(map(str, e)) + f" {col}")
    return "\n".join(lines) + "\n"


def encode_colouring_stream(header: tuple[int, int, int], pairs) -> Iterator[str]:
    """Streaming encoder: header then one line per (edge, colour) pair.
    The caller guarantees colex order and completeness."""
    n, r, k = header
    yield FILE_MAGIC + "\n"
    yield f"n={n} r={r} k={k}\n"
    for e, col in pairs:
        yield " ".join(map(str, e)) + f" {col}\n"


def decode_colouring(text: str) -> EdgeColouring:
    """Parse and fully validate a colouring file; errors carry line numbers."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() != FILE_MAGIC:
        raise InvalidColouringError(f"line 1: expected header {FILE_MAGIC!r}")
    if len(lines) < 2:
        raise InvalidColouringError("line 2: missing 'n= r= k=' line")
    try:
        fields = dict(part.split("=") for part in lines[1].split())
        n, r, k = int(fields["n"]), int(fields["r"]), int(fields["k"])
    except (ValueError, KeyError):
        raise InvalidColouringError(f"line 2: malformed header {lines[1]!r}") from None
    if n < r or r < 2:
        raise InvalidColouringError(f"line 2: invalid n={n}, r={r}")
    m = comb(n, r)
    arr = np.zeros(m, dtype=np.uint8)
    seen = np.zeros(m, dtype=bool)
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split()
        if len(parts) != r + 1:
            raise InvalidColouringError(
                f"line {lineno}: expected {r} vertices and a colour")
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise InvalidColouringError(f"line {lineno}: non-integer field") from None
        verts, col = vals[:r], vals[r]
        if any(verts[i] >= verts[i + 1] for i in range(r - 1)):
            raise InvalidColouringError(f"line {lineno}: vertices not strictly increasing")
        if verts[0] < 0 or verts[-1] >= n:
            raise InvalidColouringError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if not 1 <= col <= k:
            raise InvalidColouringError(f"line {lineno}: colour {col} outside 1..{k}")
        rank = rank_subset(verts, n, r)
        if seen[rank]:
            raise InvalidColouringError(f"line {lineno}: duplicate edge {verts}")
        seen[rank] = True
        arr[rank] = col
    if not seen.all():
        miss = unrank_subset(int(np.nonzero(~seen)[0][0]), n, r)
        raise InvalidColouringError(
            f"incomplete colouring: {m - int(seen.sum())} edges missing, e.g. {miss}")
    return EdgeColouring(n, r, k, arr)


def write_colouring(c: EdgeColouring, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(encode_colouring(c))


def read_colouring(path) -> EdgeColouring:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_colouring(fh.read())


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class Certificate:
    """Structured verification record; schema documented in the README.

    Invariant: multicoloured['count'] equals len(multicoloured['families']),
    and a FAIL connectivity verdict always carries a concrete witness.
    """

    construction: str
    params: dict
    n: int
    r: int
    k: int
    connectivity: list[dict] = field(default_factory=list)
    multicoloured: dict | None = None
    tricoloured: dict | None = None
    search: dict | None = None
    elapsed_ms: float = 0.0

    def all_ok(self) -> bool:
        """True iff every recorded check passed (degenerate entries ignored)."""
        for entry in self.connectivity:
            if not entry.get("degenerate") and entry["ok"] is not True:
                return False
        for section in (self.multicoloured, self.tricoloured):
            if section and section.get("expected") is not None:
                if section["count"] != section["expected"]:
                    return False
        if self.search and self.search.get("ok") is False:
            return False
        return True

    def to_json(self) -> str:
        doc = {
            "schema": CERT_SCHEMA,
            "construction": self.construction,
            "params": self.params,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "connectivity": self.connectivity,
            "multicoloured": self.multicoloured,
            "tricoloured": self.tricoloured,
            "search": self.search,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        doc = json.loads(text)
        if doc.get("schema") != CERT_SCHEMA:
            raise InvalidColouringError(f"unknown certificate schema {doc.get('schema')!r}")
        return cls(
            construction=doc["construction"], params=doc["params"],
            n=doc["n"], r=doc["r"], k=doc["k"],
            connectivity=doc.get("connectivity", []),
            multicoloured=doc.get("multicoloured"),
            tricoloured=doc.get("tricoloured"),
            search=doc.get("search"),
            elapsed_ms=doc.get("elapsed_ms", 0.0),
        )

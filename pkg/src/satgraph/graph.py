"""Immutable simple-graph value type on indexed vertices.

Adjacency is stored as one integer bitmask per vertex, which gives O(1)
edge queries and lets neighborhood arithmetic run on machine words.
Graphs are values: every mutation-flavored operation returns a new
instance, so instances can be shared freely between worker processes.

The module also carries the graph6 text codec (bit-exact with the
published layout: 6-bit groups over the column-major upper triangle,
offset 63) and a small JSON adjacency form used for debugging.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, FormatError

# All named constructions fit in one 64-bit block; larger orders are only
# used by blow-up grids, capped here so encode/search costs stay sane.
MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise DomainError(f"order {n} outside supported range 0..{MAX_VERTICES}",
                              code="capacity")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None
        if len(self.adj) != n:
            raise DomainError("adjacency length does not match order")

    # -- construction -------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting bad input loudly."""
        adj = [0] * n
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {e!r} has an endpoint outside 0..{n - 1}",
                                  code="index")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}", code="self-loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DomainError(f"duplicate edge {key!r}", code="duplicate-edge")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, adj)

    # -- queries -------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    # -- derived graphs ------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise DomainError("self-loop", code="self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def delete_vertex(self, x: int) -> "Graph":
        """Remove vertex ``x``; vertices above ``x`` shift down by one."""
        keep = [v for v in range(self.n) if v != x]
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * (self.n - 1)
        for v in keep:
            for u in bits(self.adj[v]):
                if u != x:
                    adj[pos[v]] |= 1 << pos[u]
        return Graph(self.n - 1, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for v in vertices:
            for u in bits(self.adj[v]):
                if u in pos:
                    adj[pos[v]] |= 1 << pos[u]
        return Graph(len(vertices), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply ``v -> perm[v]``; perm must be a bijection on 0..n-1."""
        adj = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph(self.n, adj)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- basic constructors ----------------------------------------------------


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Public edge-list constructor with full validation."""
    return Graph.from_edges(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise DomainError("path needs at least 1 vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(r: int) -> Graph:
    """Star with r edges: center 0 plus r leaves."""
    if r < 0:
        raise DomainError("star size must be nonnegative")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


# -- combinators ------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise DomainError(f"combined order {n} exceeds capacity {MAX_VERTICES}",
                          code="capacity")
    adj = list(g1.adj) + [a << g1.n for a in g2.adj]
    return Graph(n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise DomainError(f"combined order {n} exceeds capacity {MAX_VERTICES}",
                          code="capacity")
    m1 = (1 << g1.n) - 1
    m2 = ((1 << g2.n) - 1) << g1.n
    adj = [a | m2 for a in g1.adj] + [(a << g1.n) | m1 for a in g2.adj]
    return Graph(n, adj)


def combine(kind: str, g1: Graph, g2: Graph) -> Graph:
    if kind == "disjoint-union":
        return disjoint_union(g1, g2)
    if kind == "join":
        return join(g1, g2)
    raise DomainError(f"unknown combine kind {kind!r}")


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ a ^ (1 << v) for v, a in enumerate(g.adj)])


def blow_up(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex v by an independent set of ``sizes[v]`` copies.

    Copies of u and v are adjacent exactly when uv was an edge, so the
    result is the usual blow-up (replacement sets stay independent).
    """
    if len(sizes) != g.n:
        raise DomainError("sizes length must equal graph order")
    if any(s < 1 for s in sizes):
        raise DomainError("blow-up sizes must be positive; delete vertices instead",
                          code="zero-size")
    offsets = [0] * g.n
    total = 0
    for v in range(g.n):
        offsets[v] = total
        total += sizes[v]
    if total > MAX_VERTICES:
        raise DomainError(f"blown-up order {total} exceeds capacity {MAX_VERTICES}",
                          code="capacity")
    class_mask = [((1 << sizes[v]) - 1) << offsets[v] for v in range(g.n)]
    adj = [0] * total
    for v in range(g.n):
        m = 0
        for u in bits(g.adj[v]):
            m |= class_mask[u]
        for i in range(sizes[v]):
            adj[offsets[v] + i] = m
    return Graph(total, adj)


# -- graph6 codec -----------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode in graph6: header for n, then upper-triangle bits x(i,j)
    for j = 1..n-1, i < j, packed into 6-bit groups offset by 63."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise DomainError("graph6 supports at most 258047 vertices here",
                          code="capacity")
    out = []
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return header + "".join(out)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; reports the byte offset on errors."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise FormatError("empty graph6 string", offset=0)
    for i, ch in enumerate(text):
        if not (63 <= ord(ch) <= 126):
            raise FormatError(f"invalid graph6 byte {ch!r} at offset {i}", offset=i)
    if text[0] == "~":
        if len(text) >= 2 and text[1] == "~":
            raise FormatError("graph6 orders above 258047 unsupported", offset=0)
        if len(text) < 4:
            raise FormatError("truncated graph6 order header", offset=len(text))
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body, body_start = text[4:], 4
    else:
        n = ord(text[0]) - 63
        body, body_start = text[1:], 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(f"graph6 body truncated at offset {body_start + len(body)}"
                          f" (need {need} bytes, got {len(body)})",
                          offset=body_start + len(body))
    if len(body) > need:
        raise FormatError(f"trailing graph6 bytes at offset {body_start + need}",
                          offset=body_start + need)
    adj = [0] * n
    idx = 0
    for ch in body:
        val = ord(ch) - 63
        for s in range(5, -1, -1):
            if idx >= nbits:
                if (val >> s) & 1:
                    raise FormatError("nonzero padding bits in graph6 body",
                                      offset=body_start + idx // 6)
                continue
            if (val >> s) & 1:
                j = _col_of(idx)
                i = idx - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, adj)


def _col_of(idx: int) -> int:
    # Column j covers bit indices [j(j-1)/2, j(j+1)/2).
    j = int(((8 * idx + 1) ** 0.5 - 1) / 2) + 1
    while j * (j - 1) // 2 > idx:
        j -= 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return j


# -- JSON adjacency (debug format) ------------------------------------------


def to_adjacency_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def from_adjacency_json(obj: dict) -> Graph:
    return build_graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])

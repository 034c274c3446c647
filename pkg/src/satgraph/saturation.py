"""Saturation verdicts: F-freeness, F-saturation, certificates, peeling.

A graph G is F-saturated when it contains no copy of F but adding any
missing edge creates one.  Complete graphs are vacuously F-saturated
whenever they are F-free (the universal quantifier over missing edges
is empty).

The per-non-edge creation check anchors the pattern on the added edge:
since G itself is F-free, any copy in G+uv must use uv, so it suffices
to try every pattern edge on (u,v) in both orientations.  Equivalence
with a full search is property-tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_form
from .counting import count_embeddings
from .errors import DomainError
from .graph import Graph, bits, encode_graph6
from .patterns import PatternSpec, graph_pattern


@dataclass
class SaturationCertificate:
    graph: Graph
    patterns: tuple[PatternSpec, ...]
    is_free: bool
    is_saturated: bool
    free_violation: tuple[str, tuple[int, ...]] | None = None
    unsaturated_witness: tuple[int, int] | None = None
    checked_nonedges: int = 0

    def to_json(self) -> dict:
        pat = [str(p) for p in self.patterns]
        witness: dict | None = None
        if self.free_violation is not None:
            witness = {"kind": "free_violation",
                       "pattern": self.free_violation[0],
                       "embedding": list(self.free_violation[1])}
        elif self.unsaturated_witness is not None:
            witness = {"kind": "unsaturated_nonedge",
                       "edge": list(self.unsaturated_witness)}
        return {
            "graph": encode_graph6(self.graph),
            "pattern": pat[0] if len(pat) == 1 else pat,
            "free": self.is_free,
            "saturated": self.is_saturated,
            "witness": witness,
            "checked_nonedges": self.checked_nonedges,
        }


def contains_copy(g: Graph, f: PatternSpec):
    """Some copy of f in g as a vertex tuple (pattern order), or None."""
    if f.kind == "star":
        r = f.size
        for v in range(g.n):
            if g.degree(v) >= r:
                leaves = g.neighbors(v)[:r]
                return tuple([v] + leaves)
        return None
    if f.kind == "clique":
        return _find_clique(g, f.size)
    return _find_embedding(g, f.to_graph())


def _find_clique(g: Graph, r: int):
    if r > g.n:
        return None
    adj = g.adj
    out: list[int] = []

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        m = cand
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            out.append(v)
            if grow(adj[v] & m, need - 1):
                return True
            out.pop()
        return False

    return tuple(out) if grow((1 << g.n) - 1, r) else None


def _find_embedding(g: Graph, pattern: Graph, pinned: dict[int, int] | None = None):
    """One injective edge-preserving map pattern -> g, or None.

    ``pinned`` maps pattern vertices to fixed host vertices.
    """
    np = pattern.n
    if np - (len(pinned) if pinned else 0) > g.n:
        return None
    order: list[int] = []
    placed = 0
    if pinned:
        for v in pinned:
            order.append(v)
            placed |= 1 << v
    remaining = [v for v in range(np) if not placed >> v & 1]
    while remaining:
        touching = [v for v in remaining if pattern.adj[v] & placed]
        pool = touching if touching else remaining
        pick = max(pool, key=lambda v: pattern.degree(v))
        order.append(pick)
        placed |= 1 << pick
        remaining.remove(pick)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in bits(pattern.adj[v]) if pos[u] < i]
            for i, v in enumerate(order)]
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    hadj = g.adj
    full = (1 << g.n) - 1
    image = [0] * np
    npin = len(pinned) if pinned else 0

    def assign(i: int, used: int):
        if i == np:
            return True
        v = order[i]
        cand = full & ~used
        for b in back[i]:
            cand &= hadj[image[b]]
        m = cand
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if hdeg[w] >= pdeg[v]:
                image[i] = w
                if assign(i + 1, used | low):
                    return True
        return False

    used0 = 0
    ok = True
    if pinned:
        for i in range(npin):
            v = order[i]
            w = pinned[v]
            image[i] = w
            for b in back[i]:
                if not (hadj[image[b]] >> w & 1):
                    ok = False
            if hdeg[w] < pdeg[v] or used0 >> w & 1:
                ok = False
            used0 |= 1 << w
    if not ok:
        return None
    if not assign(npin, used0):
        return None
    result = [0] * np
    for i, v in enumerate(order):
        result[v] = image[i]
    return tuple(result)


def creates_copy(g: Graph, f: PatternSpec, u: int, v: int) -> bool:
    """Does adding the missing edge uv create a copy of f?

    Assumes g is f-free, so any new copy must pass through uv.
    """
    if f.kind == "star":
        r = f.size
        if r == 1:
            return True
        return g.degree(u) >= r - 1 or g.degree(v) >= r - 1
    if f.kind == "clique":
        t = f.size
        if t == 1:
            return True
        if t == 2:
            return True
        common = g.adj[u] & g.adj[v]
        return _mask_has_clique(g.adj, common, t - 2)
    gp = g.with_edge(u, v)
    pat = f.to_graph()
    for a in range(pat.n):
        for b in bits(pat.adj[a]):
            if b < a:
                continue
            if _find_embedding(gp, pat, {a: u, b: v}) is not None:
                return True
            if _find_embedding(gp, pat, {a: v, b: u}) is not None:
                return True
    return False


def _mask_has_clique(adj, cand: int, size: int) -> bool:
    if size == 0:
        return True
    if cand.bit_count() < size:
        return False
    m = cand
    while m:
        low = m & -m
        m ^= low
        v = low.bit_length() - 1
        if _mask_has_clique(adj, adj[v] & m, size - 1):
            return True
    return False


def is_saturated(g: Graph, f: PatternSpec) -> SaturationCertificate:
    return is_family_saturated(g, [f])


def is_family_saturated(g: Graph, fs: list[PatternSpec]) -> SaturationCertificate:
    """Free of every family member; every non-edge creates some member."""
    if not fs:
        raise DomainError("forbidden family must be nonempty", code="empty-family")
    patterns = tuple(fs)
    for f in patterns:
        hit = contains_copy(g, f)
        if hit is not None:
            return SaturationCertificate(g, patterns, is_free=False,
                                         is_saturated=False,
                                         free_violation=(str(f), hit))
    checked = 0
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        checked += 1
        if not any(creates_copy(g, f, u, v) for f in patterns):
            return SaturationCertificate(g, patterns, is_free=True,
                                         is_saturated=False,
                                         unsaturated_witness=(u, v),
                                         checked_nonedges=checked)
    return SaturationCertificate(g, patterns, is_free=True, is_saturated=True,
                                 checked_nonedges=checked)


def peel_universal(g: Graph, fs: list[PatternSpec]):
    """Remove a universal vertex x and shrink the forbidden family.

    Returns (g - x, family'), where family' holds every single-vertex
    deletion of every member, deduplicated up to isomorphism and reduced
    to minimal members (a member containing another as a subgraph is
    redundant for both freeness and creation).
    """
    x = next((v for v in range(g.n) if g.degree(v) == g.n - 1), None)
    if x is None:
        raise DomainError(
            f"no universal vertex: max degree {g.max_degree()} < {g.n - 1}",
            code="no-universal-vertex")
    peeled = g.delete_vertex(x)
    members: list[Graph] = []
    seen: set[bytes] = set()
    for f in fs:
        fg = f.to_graph()
        for v in range(fg.n):
            child = fg.delete_vertex(v)
            code = canonical_form(child)
            if code not in seen:
                seen.add(code)
                members.append(child)
    reduced = _minimal_members(members)
    return peeled, [graph_pattern(m) for m in reduced]


def _minimal_members(members: list[Graph]) -> list[Graph]:
    """Drop members that contain another member as a subgraph."""
    order = sorted(range(len(members)),
                   key=lambda i: (members[i].n, members[i].num_edges()))
    kept: list[Graph] = []
    for i in order:
        cand = members[i]
        if not any(count_embeddings(cand, small) > 0 for small in kept):
            kept.append(cand)
    return kept


def star_sat_structure(g: Graph, t: int) -> dict:
    """Max degree, the low-degree vertex set (< t-1), and whether it is
    a clique — the structural footprint of star-saturated graphs."""
    low = [v for v in range(g.n) if g.degree(v) < t - 1]
    clique_ok = all(g.has_edge(u, v) for u, v in combinations(low, 2))
    return {"max_degree": g.max_degree(),
            "low_degree_vertices": low,
            "clique_ok": clique_ok}

"""Exact subgraph counters: cliques, stars, paths, cycles, trees.

All counts are of unlabeled subgraph copies (not induced): a copy of H
in G is a subset of V(G) together with a subset of G's edges forming a
graph isomorphic to H.  Star counts for r >= 2 reduce to the degree sum
identity  s_r(G) = sum_v C(deg v, r);  s_1 is the edge count.
"""

from __future__ import annotations

from math import comb

from .errors import DomainError
from .graph import Graph, bits
from .patterns import PatternSpec, is_tree


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-subsets inducing a complete subgraph."""
    if r < 1:
        raise DomainError("clique size must be >= 1")
    if r == 1:
        return g.n
    if r > g.n:
        return 0
    return _clique_count(g.adj, (1 << g.n) - 1, r)


def _clique_count(adj, cand: int, r: int) -> int:
    # extend only with higher-indexed vertices so each r-set is seen once
    if r == 1:
        return cand.bit_count()
    total = 0
    m = cand
    while m:
        low = m & -m
        m ^= low
        v = low.bit_length() - 1
        total += _clique_count(adj, adj[v] & m, r - 1)
    return total


def count_stars(g: Graph, r: int) -> int:
    """s_r(G): r >= 2 counts centers, r = 1 counts edges."""
    if r < 1:
        raise DomainError("star size must be >= 1")
    if r == 1:
        return g.num_edges()
    return sum(comb(a.bit_count(), r) for a in g.adj)


def count_paths(g: Graph, k: int) -> int:
    """Unlabeled simple paths on k vertices (ordered traversals halved)."""
    if k < 2:
        raise DomainError("paths need at least 2 vertices")
    if k > g.n:
        return 0
    if k == 2:
        return g.num_edges()
    adj = g.adj
    total = 0

    def extend(v: int, visited: int, left: int):
        nonlocal total
        if left == 0:
            total += 1
            return
        m = adj[v] & ~visited
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            extend(u, visited | low, left - 1)

    for start in range(g.n):
        extend(start, 1 << start, k - 1)
    return total // 2


def count_cycles(g: Graph, k: int) -> int:
    """Unlabeled k-cycles: rooted at their smallest vertex, direction halved."""
    if k < 3:
        raise DomainError("cycles need at least 3 vertices")
    if k > g.n:
        return 0
    adj = g.adj
    total = 0

    def extend(root: int, v: int, visited: int, left: int):
        nonlocal total
        if left == 0:
            if adj[v] >> root & 1:
                total += 1
            return
        # restrict to vertices above the root so each cycle is rooted once
        m = adj[v] & ~visited
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            extend(root, u, visited | low, left - 1)

    for root in range(g.n):
        below = (1 << (root + 1)) - 1
        m = adj[root] & ~below
        start_mask = 1 << root
        mm = m
        while mm:
            low = mm & -mm
            mm ^= low
            u = low.bit_length() - 1
            extend(root, u, start_mask | low | below, k - 2)
    return total // 2


def count_embeddings(host: Graph, pattern: Graph) -> int:
    """Injective maps pattern -> host sending pattern edges to host edges."""
    np = pattern.n
    if np > host.n:
        return 0
    # order pattern vertices so each (after the first) touches a previous one
    # when possible; degree-descending start helps pruning
    order: list[int] = []
    placed = 0
    remaining = set(range(np))
    while remaining:
        touching = [v for v in remaining if pattern.adj[v] & placed]
        pick = (max(touching, key=lambda v: pattern.degree(v)) if touching
                else max(remaining, key=lambda v: pattern.degree(v)))
        order.append(pick)
        placed |= 1 << pick
        remaining.discard(pick)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    hadj = host.adj
    full = (1 << host.n) - 1
    pos_in_order = {v: i for i, v in enumerate(order)}
    # for each pattern vertex, earlier-ordered pattern neighbors
    back = []
    for i, v in enumerate(order):
        back.append([pos_in_order[u] for u in bits(pattern.adj[v]) if pos_in_order[u] < i])
    total = 0
    image = [0] * np

    def assign(i: int, used: int):
        nonlocal total
        if i == np:
            total += 1
            return
        v = order[i]
        cand = full & ~used
        for b in back[i]:
            cand &= hadj[image[b]]
        m = cand
        dv = pdeg[v]
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if hdeg[w] >= dv:
                image[i] = w
                assign(i + 1, used | low)

    assign(0, 0)
    return total


def tree_automorphisms(t: Graph) -> int:
    """|Aut(t)| for an explicit tree, by exhaustive embedding count."""
    if not is_tree(t):
        raise DomainError("automorphism count requires a tree", code="not-a-tree")
    return count_embeddings(t, t)


def count_tree(g: Graph, t: PatternSpec) -> int:
    """Copies of an explicit tree: injective embeddings over |Aut(t)|."""
    if t.kind == "star":
        tg = t.to_graph()
    elif t.kind == "path":
        tg = t.to_graph()
    elif t.kind == "tree":
        tg = t.graph
    else:
        raise DomainError("count_tree expects a tree-shaped pattern",
                          code="not-a-tree")
    if not is_tree(tg):
        raise DomainError("pattern payload is not a tree", code="not-a-tree")
    return count_embeddings(g, tg) // count_embeddings(tg, tg)


def count_pattern(g: Graph, p: PatternSpec) -> int:
    """Unified copy counter for any pattern kind."""
    if p.kind == "clique":
        return count_cliques(g, p.size)
    if p.kind == "star":
        return count_stars(g, p.size)
    if p.kind == "path":
        return count_paths(g, p.size)
    if p.kind == "cycle":
        return count_cycles(g, p.size)
    pg = p.graph
    aut = count_embeddings(pg, pg)
    return count_embeddings(g, pg) // aut


def independence_number(g: Graph) -> int:
    """Maximum size of a pairwise non-adjacent vertex set."""
    adj = g.adj
    full = (1 << g.n) - 1
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        # branch: v in the set, or not
        grow(cand & ~(adj[v] | low), size + 1)
        grow(cand ^ low, size)

    grow(full, 0)
    return best


def count_independent_sets(g: Graph, k: int) -> int:
    """Number of independent k-subsets."""
    if k < 0:
        raise DomainError("independent-set size must be >= 0")
    if k == 0:
        return 1
    adj = g.adj

    def grow(cand: int, left: int) -> int:
        if left == 1:
            return cand.bit_count()
        total = 0
        m = cand
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            total += grow(m & ~adj[v], left - 1)
        return total

    return grow((1 << g.n) - 1, k)


def maximum_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All independent sets of maximum size, as sorted vertex tuples."""
    alpha = independence_number(g)
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def grow(cand: int, chosen: list[int]):
        if len(chosen) == alpha:
            out.append(tuple(chosen))
            return
        if len(chosen) + cand.bit_count() < alpha:
            return
        m = cand
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            chosen.append(v)
            grow(m & ~adj[v], chosen)
            chosen.pop()

    grow((1 << g.n) - 1, [])
    return out

"""Canonical labeling by partition refinement plus backtracking.

The canonical form of a graph is the lexicographically smallest
upper-triangle column string over all vertex orderings explored from an
equitable ordered partition.  Two graphs get equal codes exactly when
they are isomorphic (verified against a brute-force permutation check
in the test suite for small orders).

The search individualizes one vertex of the first non-singleton cell at
a time, re-refines, and prunes with
  * comparison of the fixed-prefix columns against the best full column
    string found so far (re-checked at every node, so a best update in
    one branch immediately tightens the others), and
  * orbits of automorphisms discovered when two leaves tie.

Automorphisms found along the way are returned as a possibly incomplete
generator list; callers may use them only for work skipping, never for
correctness decisions.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, bits

AdjRows = Sequence[int]


def _refine(adj: AdjRows, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement (1-dim WL with cell splitting).

    Every newly created cell is enqueued as a splitter, which is enough
    for the fixpoint to be equitable.  Deterministic: split parts are
    ordered by increasing neighbor count.
    """
    queue = deque(sum(1 << v for v in c) for c in cells)
    while queue:
        smask = queue.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) > 1:
                    parts = [groups[c] for c in sorted(groups)]
                    cells[i:i + 1] = parts
                    for p in parts:
                        queue.append(sum(1 << v for v in p))
                    i += len(parts)
                    continue
            i += 1
    return cells


def _initial_cells(n: int, adj: AdjRows) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(adj[v].bit_count(), []).append(v)
    return _refine(adj, [groups[d] for d in sorted(groups)])


class _Canonizer:
    def __init__(self, n: int, adj: AdjRows):
        self.n = n
        self.adj = adj
        self.best_cols: list[int] | None = None
        self.best_lab: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []
        self._aut_seen: set[tuple[int, ...]] = set()

    def run(self):
        n = self.n
        if n == 0:
            return b"\x00\x00", (), []
        self._search(_initial_cells(n, self.adj), [])
        code = n.to_bytes(2, "big") + b"".join(
            c.to_bytes((n + 7) // 8, "big") for c in self.best_cols)
        return code, tuple(self.best_lab), self.auts

    # -- internals ---------------------------------------------------------

    def _prefix_cols(self, cells: list[list[int]], k: int):
        """Columns for the first k (singleton) cells, compared to best.

        Returns (cols, verdict) with verdict -1/0/+1 meaning the prefix is
        already smaller than / tied with / larger than the current best.
        """
        adj = self.adj
        best = self.best_cols
        pos = {}
        cols = []
        for j in range(k):
            v = cells[j][0]
            col = 0
            for u in bits(adj[v]):
                p = pos.get(u)
                if p is not None:
                    col |= 1 << p
            pos[v] = j
            if best is not None:
                b = best[j]
                if col > b:
                    return cols, 1
                if col < b:
                    return cols, -1
            cols.append(col)
        return cols, 0 if best is not None else -1

    def _search(self, cells: list[list[int]], path: list[int]):
        k = 0
        for cell in cells:
            if len(cell) != 1:
                break
            k += 1

        cols, verdict = self._prefix_cols(cells, k)
        if verdict > 0:
            return

        if k == len(cells):
            if verdict < 0 and len(cols) < k:
                cols, _ = self._full_cols(cells)
            if self.best_cols is None or cols < self.best_cols:
                self.best_cols = list(cols)
                self.best_lab = [cell[0] for cell in cells]
            elif cols == self.best_cols:
                lab = [cell[0] for cell in cells]
                sigma = [0] * self.n
                for p in range(self.n):
                    sigma[lab[p]] = self.best_lab[p]
                sig = tuple(sigma)
                if sig not in self._aut_seen and any(sigma[v] != v for v in range(self.n)):
                    self._aut_seen.add(sig)
                    self.auts.append(sig)
            return

        target = cells[k]
        tried: list[int] = []
        # orbit closure (union-find) over automorphisms fixing the path;
        # generators discovered inside child subtrees are absorbed lazily
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        absorbed = 0

        def absorb():
            nonlocal absorbed
            while absorbed < len(self.auts):
                sigma = self.auts[absorbed]
                absorbed += 1
                if all(sigma[p] == p for p in path):
                    for v in range(self.n):
                        ra, rb = find(v), find(sigma[v])
                        if ra != rb:
                            parent[ra] = rb

        absorb()
        for v in target:
            absorb()
            rv = find(v)
            if any(find(u) == rv for u in tried):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            child = [list(c) for c in cells[:k]] + [[v], rest] + [list(c) for c in cells[k + 1:]]
            self._search(_refine(self.adj, child), path + [v])

    def _full_cols(self, cells):
        adj = self.adj
        pos = {}
        cols = []
        for j, cell in enumerate(cells):
            v = cell[0]
            col = 0
            for u in bits(adj[v]):
                p = pos.get(u)
                if p is not None:
                    col |= 1 << p
            pos[v] = j
            cols.append(col)
        return cols, 0

def canonical_raw(n: int, adj: AdjRows):
    """Canonical data for raw bitmask rows (hot path for the enumerator).

    Returns (code, labeling, automorphism generators) where
    ``labeling[p]`` is the original vertex placed at canonical position p.
    """
    return _Canonizer(n, adj).run()


def canonical_labeling(g: Graph):
    return canonical_raw(g.n, g.adj)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant total-order key; equal iff isomorphic."""
    return canonical_raw(g.n, g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    _, lab, _ = canonical_labeling(g)
    pos = [0] * g.n
    for p, v in enumerate(lab):
        pos[v] = p
    return g.relabel(pos)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)

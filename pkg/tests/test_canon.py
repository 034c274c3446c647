"""Canonical forms against the brute-force permutation oracle."""

from itertools import permutations

from satgraph.canon import are_isomorphic, canonical_form, canonical_graph
from satgraph.graph import (build_graph, complete_graph, cycle_graph,
                            empty_graph, path_graph)
from satgraph import constructions as cons

from conftest import all_labeled_graphs, brute_canonical, random_graph


def test_codes_match_brute_force_partition_n4():
    """Equal canonical codes exactly when brute-force canonical forms agree."""
    by_brute = {}
    by_code = {}
    for i, g in enumerate(all_labeled_graphs(4)):
        by_brute.setdefault(brute_canonical(g), set()).add(i)
        by_code.setdefault(canonical_form(g), set()).add(i)
    assert sorted(by_brute.values(), key=sorted) == sorted(by_code.values(), key=sorted)


def test_codes_match_brute_force_sample_n5_to_7(rng):
    for n in (5, 6, 7):
        count = 20 if n < 7 else 8
        sample = [random_graph(rng, n, p) for p in (0.2, 0.5, 0.8)
                  for _ in range(count)]
        brute = [brute_canonical(g) for g in sample]
        codes = [canonical_form(g) for g in sample]
        for g, b, c in zip(sample, brute, codes):
            h = g.relabel(list(rng.sample(range(n), n)))
            assert brute_canonical(h) == b
            assert canonical_form(h) == c
        # cross-pair: equal brute forms iff equal codes
        for i in range(len(sample)):
            for j in range(len(sample)):
                assert (brute[i] == brute[j]) == (codes[i] == codes[j])


def test_permutation_invariance_exhaustive_n_le_6():
    graphs = [cycle_graph(5), path_graph(6), cons.fig2(), cons.fig1(),
              build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)]),
              empty_graph(4), complete_graph(5)]
    for g in graphs:
        code = canonical_form(g)
        for perm in permutations(range(g.n)):
            assert canonical_form(g.relabel(list(perm))) == code


def test_permutation_invariance_randomized_n_le_10(rng):
    for n in range(7, 11):
        for p in (0.15, 0.5, 0.85):
            g = random_graph(rng, n, p)
            code = canonical_form(g)
            for _ in range(12):
                perm = list(rng.sample(range(n), n))
                assert canonical_form(g.relabel(perm)) == code


def test_c4_two_labelings_equal():
    a = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(a) == canonical_form(b)


def test_c4_differs_from_p4():
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))


def test_tstar_leaf_relabelings_one_code():
    t = cons.t_star()
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    codes = set()
    for perm4 in permutations(leaves):
        relab = list(range(t.n))
        for src, dst in zip(leaves, perm4):
            relab[src] = dst
        codes.add(canonical_form(t.relabel(relab)))
    assert len(codes) == 1


def test_highly_symmetric_graphs_fast():
    # these stress the automorphism pruning; mostly a no-hang check
    for g in (empty_graph(10), complete_graph(10), cycle_graph(10),
              build_graph(10, [(i, (i + 5) % 10) for i in range(5)])):
        code = canonical_form(g)
        assert canonical_form(canonical_graph(g)) == code


def test_are_isomorphic_basics():
    assert are_isomorphic(cons.fig1(), complete_graph(3).relabel([0, 1, 2])) is False
    assert are_isomorphic(cycle_graph(6), cycle_graph(6).relabel([3, 1, 4, 0, 5, 2]))

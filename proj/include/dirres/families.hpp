#pragma once

#include "dirres/graph.hpp"

#include <random>
#include <vector>

namespace dirres {

// Canonical graph families used by the closed-form cross-checks. Node
// labeling is part of the contract: tests and the CLI rely on it.

// Directed path labeled root-first: nodes 1..N with edges (i+1) -> i, so node
// 1 is the globally reachable end. weights[i-1] is the weight of edge
// (i+1) -> i.
DiGraph make_path(const std::vector<double>& weights);

// Directed cycle: the path above plus the closing edge 1 -> N, whose weight
// is the last element. weights.size() is the node count.
DiGraph make_cycle(const std::vector<double>& weights);

// Two unit-weight branches flowing into a shared root:
//   branch 1: k = n+1 -> n -> ... -> 2 -> 1 (root)
//   branch 2: j = n+m+1 -> n+m -> ... -> n+2 -> 1
// Degenerate cases n = 0 or m = 0 collapse to a plain path whose far end is
// the root itself.
struct TwoBranchTree {
    DiGraph graph;
    int k; // leaf of the length-n branch (the root when n = 0)
    int j; // leaf of the length-m branch (the root when m = 0)
};
TwoBranchTree make_two_branch_tree(int n, int m);

// Three-node star with center 1 and edges 2 -> 1, 3 -> 1 whose resistances
// are 2n and 2m, i.e. weights 1/n and 1/m. The interesting pair is (2, 3).
DiGraph make_star3(long n, long m);

// Seeded generators for verification sweeps. Weights are uniform in
// [0.1, 10]: reproducible, and far enough from zero that conditioning never
// muddies a comparison.
double random_weight(std::mt19937_64& rng);
DiGraph random_path(int n, std::mt19937_64& rng);
DiGraph random_cycle(int n, std::mt19937_64& rng);

// Random connected digraph: a spanning directed path through a shuffled node
// order (which guarantees a globally reachable node), plus extra random
// edges.
DiGraph random_connected_digraph(int n, std::mt19937_64& rng);

// Weights collected by following unique out-edges from a until b. Works on
// any graph whose nodes on the walk have out-degree exactly 1, i.e. the path
// and cycle families above; used to feed the series/parallel closed forms
// without going through the classifier.
std::vector<double> arc_weights(const DiGraph& g, int a, int b);

} // namespace dirres

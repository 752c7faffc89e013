#include "dirres/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dirres {

DiGraph make_path(const std::vector<double>& weights) {
    if (weights.empty()) throw EmptyPath("path needs at least one edge");
    DiGraph g(static_cast<int>(weights.size()) + 1);
    for (int i = 1; i <= static_cast<int>(weights.size()); ++i)
        g.add_edge(i + 1, i, weights[i - 1]);
    return g;
}

DiGraph make_cycle(const std::vector<double>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 2) throw InvalidParam("cycle needs at least two edges");
    DiGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i + 1, i, weights[i - 1]);
    g.add_edge(1, n, weights[n - 1]);
    return g;
}

TwoBranchTree make_two_branch_tree(int n, int m) {
    if (n < 0 || m < 0 || n + m < 1)
        throw InvalidParam("branch lengths must be non-negative with n + m >= 1");
    DiGraph g(n + m + 1);
    for (int i = 1; i <= n; ++i) g.add_edge(i + 1, i, 1.0);
    if (m >= 1) {
        g.add_edge(n + 2, 1, 1.0);
        for (int i = 2; i <= m; ++i) g.add_edge(n + i + 1, n + i, 1.0);
    }
    return TwoBranchTree{std::move(g), n == 0 ? 1 : n + 1, m == 0 ? 1 : n + m + 1};
}

DiGraph make_star3(long n, long m) {
    if (n < 1 || m < 1) throw InvalidParam("star branch factors must be positive");
    DiGraph g(3);
    g.add_edge(2, 1, 1.0 / static_cast<double>(n));
    g.add_edge(3, 1, 1.0 / static_cast<double>(m));
    return g;
}

double random_weight(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.1, 10.0)(rng);
}

DiGraph random_path(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidParam("path graph needs at least 2 nodes");
    std::vector<double> w(n - 1);
    for (double& x : w) x = random_weight(rng);
    return make_path(w);
}

DiGraph random_cycle(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidParam("cycle graph needs at least 2 nodes");
    std::vector<double> w(n);
    for (double& x : w) x = random_weight(rng);
    return make_cycle(w);
}

std::vector<double> arc_weights(const DiGraph& g, int a, int b) {
    std::vector<int> succ(g.size() + 1, 0);
    for (const auto& [edge, w] : g.edges()) {
        (void)w;
        if (succ[edge.first] != 0)
            throw InvalidParam("node " + std::to_string(edge.first) + " has several out-edges");
        succ[edge.first] = edge.second;
    }
    std::vector<double> weights;
    int v = a;
    while (v != b) {
        if (succ[v] == 0) throw InvalidParam("walk from " + std::to_string(a) + " dead-ends");
        weights.push_back(g.weight(v, succ[v]));
        v = succ[v];
        if (v == a) throw InvalidParam("walk returned to its start without meeting the target");
        if (weights.size() > static_cast<size_t>(g.size()))
            throw InvalidParam("walk does not terminate");
    }
    return weights;
}

DiGraph random_connected_digraph(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidParam("need at least 2 nodes");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    DiGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(order[i], order[i + 1], random_weight(rng));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int tail = 1; tail <= n; ++tail)
        for (int head = 1; head <= n; ++head) {
            if (tail == head || g.has_edge(tail, head)) continue;
            if (coin(rng) < 0.25) g.add_edge(tail, head, random_weight(rng));
        }
    return g;
}

} // namespace dirres

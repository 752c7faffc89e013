#include "dirres/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace dirres {

DiGraph::DiGraph(int n) : n_(n) {
    if (n < 1) throw InvalidSize("node count must be positive, got " + std::to_string(n));
}

void DiGraph::add_edge(int tail, int head, double weight) {
    if (tail < 1 || tail > n_ || head < 1 || head > n_)
        throw IndexOutOfRange("edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                              ") outside node range [1, " + std::to_string(n_) + "]");
    if (tail == head)
        throw InvalidParam("self-loop at node " + std::to_string(tail));
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw NonpositiveWeight("edge (" + std::to_string(tail) + ", " + std::to_string(head) +
                                ") needs a positive finite weight");
    if (!w_.emplace(std::make_pair(tail, head), weight).second)
        throw InvalidParam("duplicate edge (" + std::to_string(tail) + ", " +
                           std::to_string(head) + ")");
}

bool DiGraph::has_edge(int tail, int head) const {
    return w_.count({tail, head}) > 0;
}

double DiGraph::weight(int tail, int head) const {
    auto it = w_.find({tail, head});
    return it == w_.end() ? 0.0 : it->second;
}

Matrix Permutation::matrix() const {
    const int n = size();
    Matrix p = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) p(k, sigma[k] - 1) = 1.0;
    return p;
}

Matrix adjacency(const DiGraph& g) {
    Matrix a = Matrix::Zero(g.size(), g.size());
    for (const auto& [edge, w] : g.edges()) a(edge.first - 1, edge.second - 1) = w;
    return a;
}

Matrix laplacian(const DiGraph& g) {
    const int n = g.size();
    const Matrix a = adjacency(g);
    Matrix l = -a;
    for (int i = 0; i < n; ++i) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += a(i, j);
        l(i, i) = d;
    }
    return l;
}

namespace {

std::vector<std::vector<int>> out_lists(const DiGraph& g) {
    std::vector<std::vector<int>> out(g.size());
    for (const auto& [edge, w] : g.edges()) {
        (void)w;
        out[edge.first - 1].push_back(edge.second - 1);
    }
    return out;
}

// Tarjan's algorithm, iterative so deep chains cannot blow the stack.
// Returns the component id per node; ids are assigned in reverse
// topological order of the condensation, but only the grouping matters here.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& out, int& count) {
    const int n = static_cast<int>(out.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next = 0;
    count = 0;

    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < out[f.v].size()) {
                const int w = out[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = count;
                    } while (w != f.v);
                    ++count;
                }
                const int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

} // namespace

bool is_connected(const DiGraph& g) {
    int count = 0;
    const auto out = out_lists(g);
    const auto comp = scc_ids(out, count);

    // A globally reachable node exists iff the condensation has a unique sink.
    std::vector<bool> has_out_edge(count, false);
    for (int v = 0; v < g.size(); ++v)
        for (int w : out[v])
            if (comp[v] != comp[w]) has_out_edge[comp[v]] = true;
    int sinks = 0;
    for (int c = 0; c < count; ++c)
        if (!has_out_edge[c]) ++sinks;
    return sinks == 1;
}

std::optional<Permutation> find_degree_permutation(const DiGraph& g) {
    const int n = g.size();
    // D = A P forces P[head(k), k] = 1 for every edge k -> head(k). That is
    // only consistent when each node has at most one outgoing edge and no two
    // edges share a head.
    std::vector<int> assigned(n, 0); // assigned[row] = column, 1-based, 0 = free
    std::vector<int> out_degree(n, 0);
    for (const auto& [edge, w] : g.edges()) {
        (void)w;
        const int tail = edge.first, head = edge.second;
        if (++out_degree[tail - 1] > 1) return std::nullopt;
        if (assigned[head - 1] != 0) return std::nullopt; // two edges into one head
        assigned[head - 1] = tail;
    }
    std::vector<bool> column_used(n, false);
    for (int row = 0; row < n; ++row)
        if (assigned[row] != 0) column_used[assigned[row] - 1] = true;
    // Unforced rows take the smallest free column, in row order.
    int next_free = 0;
    for (int row = 0; row < n; ++row) {
        if (assigned[row] != 0) continue;
        while (column_used[next_free]) ++next_free;
        assigned[row] = next_free + 1;
        column_used[next_free] = true;
    }
    return Permutation{std::move(assigned)};
}

DiGraph symmetrize(const DiGraph& g) {
    DiGraph u(g.size());
    std::set<std::pair<int, int>> done;
    for (const auto& [edge, w] : g.edges()) {
        (void)w;
        const int i = std::min(edge.first, edge.second);
        const int j = std::max(edge.first, edge.second);
        if (!done.insert({i, j}).second) continue;
        const double avg = 0.5 * (g.weight(i, j) + g.weight(j, i));
        u.add_edge(i, j, avg);
        u.add_edge(j, i, avg);
    }
    return u;
}

namespace {

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& out, int start) {
    std::vector<bool> seen(out.size(), false);
    std::vector<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : out[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return seen;
}

struct Subgraph {
    std::vector<std::pair<int, int>> edges; // 0-based
    std::vector<int> nodes;                 // 0-based, sorted
    std::vector<int> out_degree, in_degree; // indexed by node id
    std::vector<int> out_edge;              // unique successor or -1
};

// Walks v, succ(v), succ(succ(v)), ... while out-degree stays 1; used for
// both the chain and the branch walks below. Includes the start node.
std::vector<int> walk(const Subgraph& s, int v) {
    std::vector<int> seq{v};
    std::vector<bool> seen(s.out_edge.size(), false);
    seen[v] = true;
    while (s.out_edge[v] != -1) {
        v = s.out_edge[v];
        if (seen[v]) break; // cycle; caller checks shape separately
        seen[v] = true;
        seq.push_back(v);
    }
    return seq;
}

} // namespace

ConnectionClass classify_connection(const DiGraph& g, int k, int j) {
    const int n = g.size();
    if (k < 1 || k > n || j < 1 || j > n)
        throw IndexOutOfRange("node pair (" + std::to_string(k) + ", " + std::to_string(j) + ")");
    if (k == j) throw InvalidParam("classification needs two distinct nodes");
    if (!is_connected(g)) throw NotConnected("graph has no globally reachable node");

    const auto out = out_lists(g);
    const auto from_k = reachable_from(out, k - 1);
    const auto from_j = reachable_from(out, j - 1);

    // Reverse reachability to T = {nodes reachable from both k and j}.
    std::vector<std::vector<int>> in(n);
    for (const auto& [edge, w] : g.edges()) {
        (void)w;
        in[edge.second - 1].push_back(edge.first - 1);
    }
    std::vector<bool> reaches_t(n, false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (from_k[v] && from_j[v]) {
            reaches_t[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int u : in[v])
            if (!reaches_t[u]) {
                reaches_t[u] = true;
                queue.push_back(u);
            }
    }

    Subgraph s;
    s.out_degree.assign(n, 0);
    s.in_degree.assign(n, 0);
    s.out_edge.assign(n, -1);
    std::vector<bool> in_nodes(n, false);
    bool unit_weights = true;
    for (const auto& [edge, w] : g.edges()) {
        const int u = edge.first - 1, v = edge.second - 1;
        if (!((from_k[u] || from_j[u]) && reaches_t[v])) continue;
        s.edges.emplace_back(u, v);
        in_nodes[u] = in_nodes[v] = true;
        ++s.out_degree[u];
        ++s.in_degree[v];
        s.out_edge[u] = v;
        if (w != 1.0) unit_weights = false;
    }
    for (int v = 0; v < n; ++v)
        if (in_nodes[v]) s.nodes.push_back(v);

    const auto count_nodes = [&](auto pred) {
        int c = 0;
        for (int v : s.nodes)
            if (pred(v)) ++c;
        return c;
    };
    const bool max_out_one =
        count_nodes([&](int v) { return s.out_degree[v] > 1; }) == 0;

    // Path: a single chain whose two ends are exactly the query nodes.
    if (max_out_one && count_nodes([&](int v) { return s.in_degree[v] > 1; }) == 0) {
        const int sources = count_nodes([&](int v) { return s.in_degree[v] == 0; });
        const int sinks = count_nodes([&](int v) { return s.out_degree[v] == 0; });
        if (sources == 1 && sinks == 1) {
            int source = -1;
            for (int v : s.nodes)
                if (s.in_degree[v] == 0) source = v;
            const auto seq = walk(s, source);
            if (seq.size() == s.nodes.size() &&
                ((seq.front() == k - 1 && seq.back() == j - 1) ||
                 (seq.front() == j - 1 && seq.back() == k - 1))) {
                ConnectionClass c;
                c.kind = ConnectionKind::Path;
                for (int v : seq) c.sequence.push_back(v + 1);
                return c;
            }
        }
        if (sources == 0 && sinks == 0 && !s.nodes.empty()) {
            // Every participating node has in- and out-degree exactly 1:
            // candidate cycle. It must be one loop through both query nodes.
            const auto seq = walk(s, k - 1);
            const bool closes = s.out_edge[seq.back()] == k - 1;
            const bool has_j =
                std::find(seq.begin(), seq.end(), j - 1) != seq.end();
            if (closes && has_j && seq.size() == s.nodes.size()) {
                ConnectionClass c;
                c.kind = ConnectionKind::Cycle;
                for (int v : seq) c.sequence.push_back(v + 1);
                return c;
            }
        }
    }

    // Two unit-weight branches merging on the way to a common root: an
    // in-tree whose only leaves are the query nodes. Branch lengths are
    // counted to the first shared node, not to the root, so a tail hanging
    // below the merge point does not change the classification (it cannot
    // change the resistance either).
    if (max_out_one && unit_weights && !s.nodes.empty() &&
        s.edges.size() == s.nodes.size() - 1) {
        const int roots = count_nodes([&](int v) { return s.out_degree[v] == 0; });
        std::vector<int> leaves;
        for (int v : s.nodes)
            if (s.in_degree[v] == 0) leaves.push_back(v);
        if (roots == 1 && leaves.size() == 2 &&
            ((leaves[0] == k - 1 && leaves[1] == j - 1) ||
             (leaves[0] == j - 1 && leaves[1] == k - 1))) {
            const auto walk_k = walk(s, k - 1);
            const auto walk_j = walk(s, j - 1);
            std::vector<bool> on_j(n, false);
            for (int v : walk_j) on_j[v] = true;
            for (size_t step = 0; step < walk_k.size(); ++step) {
                if (!on_j[walk_k[step]]) continue;
                const auto it = std::find(walk_j.begin(), walk_j.end(), walk_k[step]);
                ConnectionClass c;
                c.kind = ConnectionKind::TwoBranchUnitTree;
                c.n = static_cast<int>(step);
                c.m = static_cast<int>(it - walk_j.begin());
                if (c.n >= 1 && c.m >= 1) return c;
                break;
            }
        }
    }

    return ConnectionClass{};
}

namespace {

DiGraph build_from_lines(const std::vector<std::tuple<int, int, double>>& edge_rows,
                         int declared_nodes) {
    int n = declared_nodes;
    if (n == 0) {
        for (const auto& [tail, head, w] : edge_rows) {
            (void)w;
            n = std::max({n, tail, head});
        }
    }
    if (n == 0) throw MalformedInput("no nodes: empty input without a 'nodes' header");
    DiGraph g(n);
    for (const auto& [tail, head, w] : edge_rows) g.add_edge(tail, head, w);
    return g;
}

} // namespace

DiGraph parse_edge_list(std::istream& in) {
    std::vector<std::tuple<int, int, double>> edge_rows;
    int declared_nodes = 0;
    bool saw_content = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto at = [&] { return " at line " + std::to_string(line_no); };
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (first == "nodes") {
            if (saw_content)
                throw MalformedInput("'nodes' header must come before any edge" + at());
            std::string rest;
            if (!(ls >> declared_nodes) || declared_nodes < 1 || (ls >> rest))
                throw MalformedInput("bad 'nodes' header" + at());
            saw_content = true;
            continue;
        }
        saw_content = true;
        int tail = 0, head = 0;
        double w = 0.0;
        std::string rest;
        try {
            size_t pos = 0;
            tail = std::stoi(first, &pos);
            if (pos != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw MalformedInput("bad tail index '" + first + "'" + at());
        }
        if (!(ls >> head >> w) || (ls >> rest))
            throw MalformedInput("expected '<tail> <head> <weight>'" + at());
        edge_rows.emplace_back(tail, head, w);
    }
    return build_from_lines(edge_rows, declared_nodes);
}

DiGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    return parse_edge_list(in);
}

} // namespace dirres

#pragma once

#include "dirres/errors.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dirres {

using Matrix = Eigen::MatrixXd;

// Weighted directed graph on nodes 1..n. An edge (i, j) with weight a_{i,j}
// means "i points to j"; row i of the adjacency matrix holds the weights of
// the edges leaving i. Weights live in an ordered map so that iteration (and
// everything derived from it) is deterministic.
class DiGraph {
public:
    explicit DiGraph(int n);

    int size() const { return n_; }

    // Rejects self-loops, indices outside [1, n], non-finite or non-positive
    // weights, and duplicate edges.
    void add_edge(int tail, int head, double weight);

    bool has_edge(int tail, int head) const;
    double weight(int tail, int head) const; // 0 when the edge is absent

    const std::map<std::pair<int, int>, double>& edges() const { return w_; }

private:
    int n_;
    std::map<std::pair<int, int>, double> w_;
};

// Permutation of {1..n}: sigma[k-1] = j means the matrix form has a 1 in row
// k, column j.
struct Permutation {
    std::vector<int> sigma;

    int size() const { return static_cast<int>(sigma.size()); }
    Matrix matrix() const;
};

enum class ConnectionKind { Path, Cycle, TwoBranchUnitTree, Other };

// Shape of the subgraph joining a node pair, as far as the closed forms care:
//   Path              sequence = the directed chain, from one query node to
//                     the other
//   Cycle             sequence = the cycle nodes in edge order, starting at k
//   TwoBranchUnitTree n, m = branch lengths from k and from j to the node
//                     where the branches merge (all weights exactly 1)
//   Other             anything else; callers fall back to the numeric solve
struct ConnectionClass {
    ConnectionKind kind = ConnectionKind::Other;
    std::vector<int> sequence;
    int n = 0;
    int m = 0;
};

Matrix adjacency(const DiGraph& g);

// L = D - A with D the diagonal of out-degrees d_k = sum_j a_{k,j}. The
// diagonal is accumulated in the same index order a test would use to sum the
// off-diagonal entries, so row sums cancel exactly, not just approximately.
Matrix laplacian(const DiGraph& g);

// True iff some node is reachable from every node. Decided on the strongly
// connected component condensation: exactly one sink component.
bool is_connected(const DiGraph& g);

// The permutation P with D = A P, when one exists. Feasible iff every node
// has at most one outgoing edge and no two edges share a head; rows of P not
// forced by an edge are filled with the smallest free columns, in node order,
// so the result is deterministic.
std::optional<Permutation> find_degree_permutation(const DiGraph& g);

// Undirected counterpart with weight matrix (A + A^T) / 2.
DiGraph symmetrize(const DiGraph& g);

// Classifies the subgraph that participates in joining k and j. T is the set
// of nodes reachable from both; edge (u, v) participates when u is reachable
// from k or from j and v can still reach some member of T. Throws
// NotConnected when the graph has no globally reachable node.
ConnectionClass classify_connection(const DiGraph& g, int k, int j);

// Edge-list text format: one edge per line, "<tail> <head> <weight>",
// 1-based indices, '#' starts a comment line. An optional first line
// "nodes <N>" fixes the node count; otherwise it is the largest index seen.
DiGraph parse_edge_list(std::istream& in);
DiGraph parse_edge_list_file(const std::string& path);

} // namespace dirres

#pragma once

#include "dirres/graph.hpp"
#include "dirres/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dirres {

// Branch lengths of the two-branch tree: n edges from one leaf and m from the
// other to the node where the branches meet.
struct TreeParams {
    long n = 0;
    long m = 0;
};

// Single directed edge of weight w: resistance 2/w.
double edge_resistance(double w);

// Directed path: resistances add, giving sum_i 2/w_i over the edges between
// the two nodes.
double path_resistance(const std::vector<double>& weights);

// Directed cycle: the two directed arcs between the nodes combine like
// parallel resistors, 1 / (1/r1 + 1/r2).
double cycle_resistance(const std::vector<double>& arc1, const std::vector<double>& arc2);

// Unit two-branch tree with a length-1 branch: r(n, 1) = 2(n-1) + 2^{2-n}.
Rational tree_r_n1(long n);

// Leaf-to-leaf resistance of the unit two-branch tree,
//   r(n, m) = 2(n - m) + 2^{3-n-m} * sum_{i=1}^{floor((m+1)/2)}
//             i * C(n+m+2, n+2i+1),
// with the degenerate path cases r(n, 0) = 2n and r(0, m) = 2m. Exact; the
// dyadic factor and the binomials never touch floating point.
Rational tree_resistance(TreeParams p);

// One step of the recurrence that grows a branch by one edge: produces
// r(n, ell+1) from all shorter-branch values. The table must contain
// r(n, 1..ell), r(1..n, ell) and the full block r(1..n, 1..ell); anything
// missing throws MissingPrior. The terms with 2^{-n} against 2^{-ell}
// cancel massively, which is why this is exact rational arithmetic only.
using TreeTable = std::map<std::pair<long, long>, Rational>;
Rational tree_recurrence(long n, long ell, const TreeTable& prior);

// Seeds r(a, 1) = tree_r_n1(a) and iterates the recurrence to fill
// 1 <= a <= max_n, 1 <= b <= max_m.
TreeTable tree_recurrence_table(long max_n, long max_m);

// The part of r(m+d, m) beyond 2d:
//   e(m, d) = 2^{3-2m-d} * sum_{i=1}^{floor((m+1)/2)} i * C(2m+d+2, m+d+2i+1),
// so tree_resistance(m+d, m) = 2d + e(m, d) exactly. Decays geometrically in
// d: e(m, d+1) < (2m+d+3)/(2m+2d+4) * e(m, d).
Rational tree_excess(long m, long d);

// The quoted closed-form candidate 2(n+m) - 2nm/(n+m) for the 3-node star
// with edge resistances 2n, 2m. Kept verbatim for comparison reports only:
// it does not reproduce the computed star resistance (see star_grid), so
// nothing in this library uses it as a reference value.
Rational star3_resistance_printed(long n, long m);

// One row of the star comparison report: the numeric pipeline value on the
// star against the two closed-form candidates, plus the expression
// 2(n+m) - 4nm/(n+m) that the pipeline values empirically follow.
struct StarRow {
    long n = 0, m = 0;
    double oracle = 0.0;       // Lyapunov pipeline on make_star3(n, m), pair (2, 3)
    Rational tree_formula;     // tree_resistance({n, m})
    Rational printed_formula;  // star3_resistance_printed(n, m)
    Rational empirical;        // 2(n+m) - 4nm/(n+m)
    bool matches_tree = false;
    bool matches_printed = false;
    bool matches_empirical = false;
};
std::vector<StarRow> star_grid(long max_n, double tol = 1e-9);

enum class Method { Path, Cycle, TwoBranchUnitTree, Numeric };
const char* method_name(Method m);

struct DispatchResult {
    double value = 0.0;
    Method method = Method::Numeric;
};

// Routes a node pair to the matching closed form via classify_connection,
// falling back to the Lyapunov pipeline for everything else. Callers that
// already hold the full resistance matrix can pass it to spare the fallback
// a repeated solve.
DispatchResult dispatch_resistance(const DiGraph& g, int k, int j,
                                   const Matrix* precomputed = nullptr);

} // namespace dirres

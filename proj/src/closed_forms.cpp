#include "dirres/closed_forms.hpp"

#include "dirres/families.hpp"
#include "dirres/lyapunov.hpp"

#include <cmath>
#include <string>

namespace dirres {

double edge_resistance(double w) {
    if (!(w > 0.0) || !std::isfinite(w)) throw NonpositiveWeight("edge weight must be positive");
    return 2.0 / w;
}

double path_resistance(const std::vector<double>& weights) {
    if (weights.empty()) throw EmptyPath("path needs at least one edge");
    double r = 0.0;
    for (double w : weights) r += edge_resistance(w);
    return r;
}

double cycle_resistance(const std::vector<double>& arc1, const std::vector<double>& arc2) {
    const double r1 = path_resistance(arc1);
    const double r2 = path_resistance(arc2);
    return 1.0 / (1.0 / r1 + 1.0 / r2);
}

Rational tree_r_n1(long n) {
    if (n < 1) throw InvalidParam("branch length must be positive, got " + std::to_string(n));
    return 2 * (n - 1) + pow2(2 - n);
}

Rational tree_resistance(TreeParams p) {
    const long n = p.n, m = p.m;
    if (n < 0 || m < 0 || n + m < 1)
        throw InvalidParam("branch lengths must be non-negative with n + m >= 1");
    if (m == 0) return Rational(2 * n);
    if (n == 0) return Rational(2 * m);
    Rational sum = 0;
    for (long i = 1; i <= (m + 1) / 2; ++i) sum += i * Rational(binomial(n + m + 2, n + 2 * i + 1));
    return 2 * (n - m) + pow2(3 - n - m) * sum;
}

Rational tree_recurrence(long n, long ell, const TreeTable& prior) {
    if (n < 1 || ell < 1) throw InvalidParam("recurrence needs n >= 1 and ell >= 1");
    const auto r = [&prior](long a, long b) -> const Rational& {
        const auto it = prior.find({a, b});
        if (it == prior.end())
            throw MissingPrior("table is missing r(" + std::to_string(a) + ", " +
                               std::to_string(b) + ")");
        return it->second;
    };
    const long N = n + ell + 1;
    Rational t(-3 * n * n + 3 * ell * ell - 2 * n * ell - n + 5 * ell + 2, 2 * N * N);
    t += Rational(ell * ell + 2 * n * ell + 2 * n + 3 * ell, N) * pow2(-n);
    t += Rational(n * n + n + 2, 2 * N) * pow2(-ell);
    Rational acc = 0;
    for (long k = 1; k <= ell; ++k) acc += (4 - Rational(2, N) - pow2(k - ell)) * r(n, k);
    t += acc / (4 * N);
    acc = 0;
    for (long k = 1; k <= n; ++k) acc += (Rational(1, N) - pow2(k - n)) * r(k, ell);
    t -= Rational(N + 1, 2 * N) * acc;
    acc = 0;
    for (long k = 1; k <= n; ++k)
        for (long j = 1; j <= ell; ++j) acc += (pow2(1 + k - n) - pow2(j - ell)) * r(k, j);
    t -= acc / (4 * N);
    return t;
}

TreeTable tree_recurrence_table(long max_n, long max_m) {
    if (max_n < 1 || max_m < 1) throw InvalidParam("table bounds must be positive");
    TreeTable table;
    for (long a = 1; a <= max_n; ++a) table[{a, 1}] = tree_r_n1(a);
    for (long ell = 1; ell < max_m; ++ell)
        for (long a = 1; a <= max_n; ++a) table[{a, ell + 1}] = tree_recurrence(a, ell, table);
    return table;
}

Rational tree_excess(long m, long d) {
    if (m < 1 || d < 0) throw InvalidParam("excess needs m >= 1 and d >= 0");
    Rational sum = 0;
    for (long i = 1; i <= (m + 1) / 2; ++i)
        sum += i * Rational(binomial(2 * m + d + 2, m + d + 2 * i + 1));
    return pow2(3 - 2 * m - d) * sum;
}

Rational star3_resistance_printed(long n, long m) {
    if (n < 1 || m < 1) throw InvalidParam("star branch factors must be positive");
    return Rational(2 * (n + m)) - Rational(2 * n * m, n + m);
}

std::vector<StarRow> star_grid(long max_n, double tol) {
    if (max_n < 1) throw InvalidParam("grid bound must be positive");
    std::vector<StarRow> rows;
    for (long n = 1; n <= max_n; ++n)
        for (long m = 1; m <= max_n; ++m) {
            StarRow row;
            row.n = n;
            row.m = m;
            const Matrix r = resistance_matrix(make_star3(n, m));
            row.oracle = r(1, 2);
            row.tree_formula = tree_resistance({n, m});
            row.printed_formula = star3_resistance_printed(n, m);
            row.empirical = Rational(2 * (n + m)) - Rational(4 * n * m, n + m);
            row.matches_tree = std::abs(row.oracle - to_double(row.tree_formula)) <= tol;
            row.matches_printed = std::abs(row.oracle - to_double(row.printed_formula)) <= tol;
            row.matches_empirical = std::abs(row.oracle - to_double(row.empirical)) <= tol;
            rows.push_back(row);
        }
    return rows;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Path: return "Path";
        case Method::Cycle: return "Cycle";
        case Method::TwoBranchUnitTree: return "TwoBranchUnitTree";
        case Method::Numeric: return "Numeric";
    }
    return "Numeric";
}

DispatchResult dispatch_resistance(const DiGraph& g, int k, int j, const Matrix* precomputed) {
    const ConnectionClass c = classify_connection(g, k, j);
    switch (c.kind) {
        case ConnectionKind::Path: {
            std::vector<double> w;
            for (size_t i = 0; i + 1 < c.sequence.size(); ++i)
                w.push_back(g.weight(c.sequence[i], c.sequence[i + 1]));
            return {path_resistance(w), Method::Path};
        }
        case ConnectionKind::Cycle: {
            // The sequence starts at k; split it at j into the two arcs.
            std::vector<double> arc1, arc2;
            bool past_j = false;
            for (size_t i = 0; i < c.sequence.size(); ++i) {
                const int u = c.sequence[i];
                const int v = c.sequence[(i + 1) % c.sequence.size()];
                if (u == j) past_j = true;
                (past_j ? arc2 : arc1).push_back(g.weight(u, v));
            }
            return {cycle_resistance(arc1, arc2), Method::Cycle};
        }
        case ConnectionKind::TwoBranchUnitTree:
            return {to_double(tree_resistance({c.n, c.m})), Method::TwoBranchUnitTree};
        case ConnectionKind::Other:
            break;
    }
    if (precomputed) return {(*precomputed)(k - 1, j - 1), Method::Numeric};
    return {resistance_matrix(g)(k - 1, j - 1), Method::Numeric};
}

} // namespace dirres

#include "dirres/lyapunov.hpp"

#include <Eigen/LU>

#include <cmath>
#include <cstdlib>
#include <string>

namespace dirres {

ProjectionBasis build_q(int n) {
    if (n < 2) throw InvalidSize("projection basis needs at least 2 nodes, got " + std::to_string(n));
    Matrix q = Matrix::Zero(n - 1, n);
    for (int i = 1; i < n; ++i) {
        const double s = 1.0 / std::sqrt(static_cast<double>(i) * (i + 1));
        for (int c = 0; c < i; ++c) q(i - 1, c) = s;
        q(i - 1, i) = -i * s;
    }
    return ProjectionBasis{std::move(q)};
}

Matrix reduced_laplacian(const Matrix& l, const ProjectionBasis& q) {
    if (l.rows() != l.cols())
        throw DimensionMismatch("Laplacian must be square");
    if (l.rows() != q.q.cols())
        throw DimensionMismatch("basis is for " + std::to_string(q.q.cols()) +
                                " nodes, Laplacian has " + std::to_string(l.rows()));
    return q.q * l * q.q.transpose();
}

Matrix solve_sigma(const Matrix& lbar, double residual_tol) {
    if (lbar.rows() != lbar.cols())
        throw DimensionMismatch("reduced Laplacian must be square");
    const int n = static_cast<int>(lbar.rows());
    const int nn = n * n;

    // Column-major vectorization: vec(Lbar S) = (I (x) Lbar) vec(S) and
    // vec(S Lbar^T) = (Lbar (x) I) vec(S), so the Lyapunov equation becomes
    // one nn x nn linear solve against vec(I).
    Matrix m = Matrix::Zero(nn, nn);
    for (int col = 0; col < n; ++col) m.block(col * n, col * n, n, n) = lbar;
    for (int bj = 0; bj < n; ++bj)
        for (int bk = 0; bk < n; ++bk)
            for (int i = 0; i < n; ++i) m(bj * n + i, bk * n + i) += lbar(bj, bk);

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nn);
    for (int i = 0; i < n; ++i) rhs(i * n + i) = 1.0;

    const Eigen::VectorXd v = Eigen::PartialPivLU<Matrix>(m).solve(rhs);

    Matrix sigma(n, n);
    for (int col = 0; col < n; ++col) sigma.col(col) = v.segment(col * n, n);
    sigma = 0.5 * (sigma + sigma.transpose()).eval();

    if (!sigma.allFinite())
        throw SingularSystem("Lyapunov solve produced non-finite entries");
    const double residual =
        (lbar * sigma + sigma * lbar.transpose() - Matrix::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    if (residual > residual_tol)
        throw SingularSystem("Lyapunov residual " + std::to_string(residual) +
                             " exceeds tolerance " + std::to_string(residual_tol));
    return sigma;
}

Matrix x_matrix(const Matrix& sigma, const ProjectionBasis& q) {
    if (sigma.rows() != sigma.cols() || sigma.rows() != q.q.rows())
        throw DimensionMismatch("Sigma must be square of order (nodes - 1)");
    Matrix x = 2.0 * q.q.transpose() * sigma * q.q;
    return 0.5 * (x + x.transpose()).eval();
}

double resistance(const Matrix& x, int k, int j) {
    const int n = static_cast<int>(x.rows());
    if (k < 1 || k > n || j < 1 || j > n)
        throw IndexOutOfRange("node pair (" + std::to_string(k) + ", " + std::to_string(j) +
                              ") outside [1, " + std::to_string(n) + "]");
    if (k == j) return 0.0;
    return x(k - 1, k - 1) + x(j - 1, j - 1) - 2.0 * x(k - 1, j - 1);
}

Matrix resistance_matrix(const DiGraph& g, double residual_tol) {
    if (!is_connected(g)) throw NotConnected("graph has no globally reachable node");
    const int n = g.size();
    if (n == 1) return Matrix::Zero(1, 1);
    const ProjectionBasis q = build_q(n);
    const Matrix sigma = solve_sigma(reduced_laplacian(laplacian(g), q), residual_tol);
    const Matrix x = x_matrix(sigma, q);
    Matrix r = Matrix::Zero(n, n);
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j) r(k - 1, j - 1) = r(j - 1, k - 1) = resistance(x, k, j);
    return r;
}

Matrix x_from_resistances(const Matrix& r) {
    if (r.rows() != r.cols()) throw MalformedInput("resistance matrix must be square");
    const int n = static_cast<int>(r.rows());
    for (int i = 0; i < n; ++i) {
        if (r(i, i) != 0.0) throw MalformedInput("resistance diagonal must be zero");
        for (int j = i + 1; j < n; ++j)
            if (r(i, j) != r(j, i)) throw MalformedInput("resistance matrix must be symmetric");
    }
    Eigen::VectorXd row_sum = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) row_sum(i) += r(i, j);
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) total += r(i, j);

    Matrix x(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            x(k, j) = (row_sum(k) + row_sum(j)) / (2.0 * n) - total / (double(n) * n) -
                      0.5 * r(k, j);
    return x;
}

Rational x_path_entry(int n_nodes, int k, int j) {
    if (k < 1 || k > n_nodes || j < 1 || j > n_nodes)
        throw IndexOutOfRange("node pair (" + std::to_string(k) + ", " + std::to_string(j) +
                              ") outside [1, " + std::to_string(n_nodes) + "]");
    const long n = n_nodes, a = k, b = j;
    const long num = 2 * n * n + 3 * n + 1 + 3 * a * a + 3 * b * b - 3 * (n + 1) * a -
                     3 * (n + 1) * b;
    return Rational(num, 3 * n) - std::labs(a - b);
}

} // namespace dirres

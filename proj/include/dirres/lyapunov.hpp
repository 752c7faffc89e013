#pragma once

#include "dirres/graph.hpp"
#include "dirres/rational.hpp"

namespace dirres {

// Fixed orthonormal basis of the subspace orthogonal to the all-ones vector:
// Q is (n-1) x n with Q 1 = 0, Q Q^T = I, Q^T Q = I - (1/n) 1 1^T.
struct ProjectionBasis {
    Matrix q;

    int nodes() const { return static_cast<int>(q.cols()); }
};

// Helmert-style rows: row i has i leading entries 1/sqrt(i(i+1)) followed by
// -i/sqrt(i(i+1)). Deterministic, and exact enough that the basis invariants
// hold to machine precision for every n used here.
ProjectionBasis build_q(int n);

// Lbar = Q L Q^T.
Matrix reduced_laplacian(const Matrix& l, const ProjectionBasis& q);

// Unique solution of Lbar S + S Lbar^T = I, by LU on the n^2 x n^2
// vectorized system, symmetrized afterwards. Throws SingularSystem when the
// residual max-norm exceeds residual_tol (shared eigenvalues of Lbar and
// -Lbar^T, e.g. a graph with no globally reachable node).
Matrix solve_sigma(const Matrix& lbar, double residual_tol = 1e-9);

// X = 2 Q^T Sigma Q. Symmetric, zero row and column sums, positive
// semidefinite with null space spanned by the ones vector.
Matrix x_matrix(const Matrix& sigma, const ProjectionBasis& q);

// r_{k,j} = x_{k,k} + x_{j,j} - 2 x_{k,j}. Nodes are 1-based.
double resistance(const Matrix& x, int k, int j);

// All pairwise resistances from a single Lyapunov solve. The result is
// exactly symmetric with an exactly zero diagonal (upper triangle mirrored).
Matrix resistance_matrix(const DiGraph& g, double residual_tol = 1e-9);

// Inverts the resistance map: rebuilds X entrywise from a symmetric,
// zero-diagonal resistance matrix via
//   x_{k,j} = (1/2n) sum_i r_{k,i} + (1/2n) sum_i r_{j,i}
//             - (1/n^2) sum_{i<l} r_{i,l} - r_{k,j}/2.
Matrix x_from_resistances(const Matrix& r);

// Exact X entry for the unit-weight directed path on n_nodes nodes, labeled
// root-first (node 1 is the globally reachable end):
//   (2n^2 + 3n + 1 + 3k^2 + 3j^2 - 3(n+1)k - 3(n+1)j) / (3n) - |k - j|.
Rational x_path_entry(int n_nodes, int k, int j);

} // namespace dirres

#pragma once

#include <utility>
#include <vector>

#include "gwnc/graph.hpp"
#include "gwnc/symmat.hpp"

namespace gwnc {

/// Index pairs (mu, nu), mu <= nu, labelling the rows of an Isserlis matrix.
using IsserlisIndex = std::vector<std::pair<int, int>>;

/// Diagonal pairs in label order, then the edges of g lexicographically.
IsserlisIndex isserlis_index(const Graph& g);
/// isserlis_index(g) followed by the non-edges of g lexicographically, so the
/// leading (n + m) block of the full Isserlis matrix is the g-restricted one.
IsserlisIndex isserlis_full_index(const Graph& g);
/// Non-edges of g only.
IsserlisIndex isserlis_complement_index(const Graph& g);

/// Entry ((mu,nu),(mu',nu')) = d[mu,mu'] d[nu,nu'] + d[mu,nu'] d[mu',nu].
template <class Derived>
typename Derived::PlainObject isserlis_matrix(const Eigen::MatrixBase<Derived>& d,
                                              const IsserlisIndex& w) {
  const auto k = static_cast<Eigen::Index>(w.size());
  typename Derived::PlainObject out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto [a, b] = w[r];
    for (Eigen::Index c = 0; c < k; ++c) {
      const auto [a2, b2] = w[c];
      out(r, c) = d(a, a2) * d(b, b2) + d(a, b2) * d(a2, b);
    }
  }
  return out;
}

/// Iss_G(d), size (n + m) x (n + m).
Matrix isserlis(const SymmetricMatrix& d, const Graph& g);
/// Iss(d) for the complete graph, rows ordered as isserlis_full_index(g).
Matrix isserlis_full(const SymmetricMatrix& d, const Graph& g);
Matrix isserlis_full(const SymmetricMatrix& d);

/// Isserlis matrix of dinv restricted to the non-edge pairs of g.  Throws
/// InputError when g is complete (the block would be empty).
Matrix isserlis_complement_block(const SymmetricMatrix& dinv, const Graph& g);
ComplexMatrix isserlis_complement_block(const ComplexSymmetricMatrix& dinv, const Graph& g);

struct CompletionResult {
  SymmetricMatrix completed;
  long iterations = 0;
  double residual = 0.0;
};

struct CompletionOptions {
  double tol = 1e-10;
  long max_iter = 10000;
};

/// PD-completion of d with respect to g by iterative proportional scaling over
/// the maximal cliques of g.  The result agrees with d on the diagonal and on
/// the edges of g, and its inverse vanishes on the non-edges.
///
/// Starts from K = diag(d)^-1 and sweeps the cliques with
///   K_CC <- K_CC + (d_CC)^-1 - ((K^-1)_CC)^-1
/// until max_C |(K^-1)_CC - d_CC| < tol.  When g has non-edges and d^-1
/// already vanishes on them, d is returned after zero sweeps.
///
/// Throws NumericalError when d is not PD and ConvergenceError (carrying the
/// residual) when max_iter sweeps do not reach tol.
CompletionResult pd_complete(const SymmetricMatrix& d, const Graph& g,
                             const CompletionOptions& opts = {});

}  // namespace gwnc

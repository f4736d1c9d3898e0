#include "gwnc/completion.hpp"

#include <cmath>
#include <sstream>

namespace gwnc {

IsserlisIndex isserlis_index(const Graph& g) {
  IsserlisIndex w;
  for (int a = 0; a < g.num_vertices(); ++a) w.emplace_back(a, a);
  for (const auto& e : g.edges()) w.emplace_back(e.u, e.v);
  return w;
}

IsserlisIndex isserlis_complement_index(const Graph& g) {
  IsserlisIndex w;
  for (const auto& e : g.non_edges()) w.emplace_back(e.u, e.v);
  return w;
}

IsserlisIndex isserlis_full_index(const Graph& g) {
  auto w = isserlis_index(g);
  for (const auto& p : isserlis_complement_index(g)) w.push_back(p);
  return w;
}

namespace {

void check_dim(int matrix_n, const Graph& g) {
  if (matrix_n != g.num_vertices()) throw InputError("matrix and graph dimensions differ");
}

}  // namespace

Matrix isserlis(const SymmetricMatrix& d, const Graph& g) {
  check_dim(d.size(), g);
  return isserlis_matrix(d.mat(), isserlis_index(g));
}

Matrix isserlis_full(const SymmetricMatrix& d, const Graph& g) {
  check_dim(d.size(), g);
  return isserlis_matrix(d.mat(), isserlis_full_index(g));
}

Matrix isserlis_full(const SymmetricMatrix& d) { return isserlis_full(d, Graph::empty(d.size())); }

Matrix isserlis_complement_block(const SymmetricMatrix& dinv, const Graph& g) {
  check_dim(dinv.size(), g);
  if (g.is_complete()) throw InputError("isserlis_complement_block: graph is complete, block is empty");
  return isserlis_matrix(dinv.mat(), isserlis_complement_index(g));
}

ComplexMatrix isserlis_complement_block(const ComplexSymmetricMatrix& dinv, const Graph& g) {
  check_dim(dinv.size(), g);
  if (g.is_complete()) throw InputError("isserlis_complement_block: graph is complete, block is empty");
  return isserlis_matrix(dinv.mat(), isserlis_complement_index(g));
}

namespace {

double clique_residual(const Matrix& sigma, const Matrix& d, const std::vector<std::vector<int>>& cliques) {
  double r = 0.0;
  for (const auto& c : cliques)
    r = std::max(r, (principal_submatrix(sigma, c) - principal_submatrix(d, c)).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace

CompletionResult pd_complete(const SymmetricMatrix& d, const Graph& g, const CompletionOptions& opts) {
  check_dim(d.size(), g);
  if (!(opts.tol > 0)) throw InputError("pd_complete: tol must be positive");
  if (!is_positive_definite(d)) throw NumericalError("pd_complete: input is not positive definite");
  const int n = d.size();

  const auto missing = g.non_edges();
  if (!missing.empty()) {
    const Matrix dinv = inverse(d).mat();
    double off_pattern = 0.0;
    for (const auto& e : missing) off_pattern = std::max(off_pattern, std::abs(dinv(e.u, e.v)));
    if (off_pattern < opts.tol) return {d, 0, 0.0};
  }

  const auto cliques = maximal_cliques(g);
  std::vector<Matrix> target_inv;
  for (const auto& c : cliques)
    target_inv.push_back(inverse(principal_submatrix(d, c)).mat());

  Matrix k = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) k(a, a) = 1.0 / d(a, a);

  auto invert = [](const Matrix& m) -> Matrix {
    Matrix inv = m.inverse();
    return (inv + inv.transpose()) / 2.0;
  };
  Matrix sigma = invert(k);
  double residual = clique_residual(sigma, d.mat(), cliques);
  long sweeps = 0;
  while (residual >= opts.tol) {
    if (sweeps >= opts.max_iter) {
      std::ostringstream os;
      os << "pd_complete did not converge in " << opts.max_iter << " sweeps (residual " << residual << ")";
      throw ConvergenceError(os.str(), residual, sweeps);
    }
    for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
      const auto& c = cliques[ci];
      const Matrix update = target_inv[ci] - principal_submatrix(sigma, c).inverse();
      for (std::size_t r = 0; r < c.size(); ++r)
        for (std::size_t s = 0; s < c.size(); ++s) k(c[r], c[s]) += update(r, s);
      sigma = invert(k);
    }
    ++sweeps;
    residual = clique_residual(sigma, d.mat(), cliques);
  }
  return {SymmetricMatrix(sigma, 1e-6), sweeps, residual};
}

}  // namespace gwnc

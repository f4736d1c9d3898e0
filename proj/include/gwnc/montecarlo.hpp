#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gwnc/graph.hpp"
#include "gwnc/symmat.hpp"

namespace gwnc {

struct McEstimate {
  double log_value = 0.0;
  /// Delta-method standard error of log_value.
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  /// Vertex ordering used for the Cholesky pattern: vertex order[k] becomes
  /// row k.  Natural label order when absent.
  std::optional<std::vector<int>> order;
  /// Sample with the PD-completion of the scale with respect to g.  The
  /// constant only depends on the diagonal and edge entries of the scale, so
  /// the expectation is unchanged; the completed scale keeps the non-free
  /// entries of Psi small and the importance weights light-tailed.
  bool recentre = true;
};

/// Monte Carlo estimate of C_G(delta, D) for any graph (Atay-Kayis & Massam).
///
/// Write K = Phi^T Phi with Phi upper triangular and Psi = Phi T^-1, where
/// T^T T = D^-1 and T is upper triangular, so tr(K D) = sum psi_ij^2.  The
/// free entries of Psi are the diagonal and the positions (i, j), i < j, of
/// edges; the remaining entries are fixed by K_ij = 0, row by row.  Then
///
///   C_G(delta, D) = prod_i 2^((delta+nu_i)/2) Gamma((delta+nu_i)/2)
///                          t_ii^(delta + nu_i + b_i) * (2 pi)^(m/2)
///                   * E[exp(-1/2 sum_{non-free} psi_ij^2)]
///
/// with psi_ii^2 ~ chi^2(delta + nu_i), free off-diagonal psi_ij ~ N(0, 1),
/// nu_i the free positions right of the diagonal in row i and b_j those above
/// it in column j.
///
/// Random numbers come from std::mt19937_64 seeded through splitmix64 with
/// Boost's portable normal and chi-squared distributions, so a (seed,
/// samples, order) triple reproduces bit-identical output.
McEstimate mc_constant(const Graph& g, double delta, const SymmetricMatrix& scale, long samples,
                       std::uint64_t seed, const McOptions& opts = {});

/// One independent estimate per seed, in input order.  Seeds must be distinct.
std::vector<McEstimate> mc_replicates(const Graph& g, double delta, const SymmetricMatrix& scale,
                                      long samples, const std::vector<std::uint64_t>& seeds,
                                      const McOptions& opts = {});

}  // namespace gwnc

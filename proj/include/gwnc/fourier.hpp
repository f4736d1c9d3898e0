#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gwnc/graph.hpp"
#include "gwnc/symmat.hpp"

namespace gwnc {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  int max_panels = 4000;
  /// Panels the interval is split into before adaptive refinement.
  int initial_panels = 8;
  /// Replace the scale by its PD-completion with respect to g_star minus the
  /// dropped edge before integrating.  The constant only depends on the
  /// diagonal and edge entries, so the value is unchanged, but the completed
  /// scale removes the carrier oscillation exp(-i t k_e) that otherwise
  /// forces heavy cancellation.
  bool recentre = true;
};

struct QuadratureResult {
  cdouble value;
  /// |refined - coarse| summed over panels: the change from halving every
  /// panel, i.e. from doubling the node count.
  double error_estimate = 0.0;
  int panels = 0;
};

/// Globally adaptive composite 20-point Gauss-Legendre rule on [a, b].  Each
/// panel is compared with the sum over its two halves; the panel with the
/// largest disagreement is bisected until the total disagreement falls below
/// rel_tol * |integral|.  Throws ConvergenceError after max_panels panels.
QuadratureResult adaptive_gauss_legendre(const std::function<cdouble(double)>& f, double a, double b,
                                         const QuadratureConfig& cfg = {});

struct FourierResult {
  LogScalar value;
  /// |Im| / |Re| of the integral before the imaginary part is discarded.
  double imag_ratio = 0.0;
  double refinement_change = 0.0;
  int panels = 0;
  std::vector<std::string> warnings;
};

/// C_G(delta, D) for G = g_star minus `e`, with g_star chordal, via
///   C_G(delta, D) = (1 / 2 pi) * integral over t of C_g_star(delta, D + i t E)
/// where E is the symmetric indicator of e.  The integral is mapped to
/// (-pi/2, pi/2) with t = tan(theta), folded onto [0, pi/2) by conjugate
/// symmetry, and normalised by the t = 0 value, which bounds the integrand's
/// modulus.  When delta + s < 1 the angle is graded towards the endpoint
/// t = infinity to absorb its algebraic singularity.  Entries of D outside the diagonal and the edges of G (including
/// the entry at e) do not affect the result.
FourierResult fourier_constant(const Graph& g_star, const Edge& e, double delta,
                               const SymmetricMatrix& scale, const QuadratureConfig& cfg = {});

/// Integrand of fourier_constant at t, relative to its value at t = 0.
cdouble fourier_integrand(const Graph& g_star, const Edge& e, double delta,
                          const SymmetricMatrix& scale, double t);

/// Quadrature of (1 + t^2)^(-(delta + s + 1)/2) over the real line divided by
/// its closed form sqrt(pi) Gamma((delta+s)/2) / Gamma((delta+s+1)/2).
double beta_integral_check(double delta, int s, const QuadratureConfig& cfg = {});

}  // namespace gwnc

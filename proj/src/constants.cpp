#include "gwnc/constants.hpp"

#include <cmath>
#include <numbers>

namespace gwnc {

namespace {

constexpr double kLog2 = std::numbers::ln2;
const double kLogPi = std::log(std::numbers::pi);

void require_delta(double delta) {
  if (!(delta > 0)) throw InputError("delta must be positive");
}

// log of the scale-free factor 2^(p a) Gamma_p(a).
double complete_prefactor(int p, double delta) {
  const double a = (delta + p - 1) / 2.0;
  return p * a * kLog2 + log_multigamma(p, a);
}

}  // namespace

double log_multigamma(int p, double a) {
  if (p < 1) throw InputError("log_multigamma: p must be at least 1");
  if (!(a > (p - 1) / 2.0)) throw InputError("log_multigamma: argument outside domain");
  double out = p * (p - 1) / 4.0 * kLogPi;
  for (int j = 1; j <= p; ++j) out += std::lgamma(a - (j - 1) / 2.0);
  return out;
}

LogScalar complete_constant(int p, double delta, const SymmetricMatrix& scale) {
  require_delta(delta);
  if (scale.size() != p) throw InputError("complete_constant: scale dimension differs from p");
  const double a = (delta + p - 1) / 2.0;
  return LogScalar::from_log(complete_prefactor(p, delta) - a * logdet(scale));
}

cdouble complete_constant_log(double delta, const ComplexSymmetricMatrix& scale) {
  require_delta(delta);
  const int p = scale.size();
  const double a = (delta + p - 1) / 2.0;
  return complete_prefactor(p, delta) - a * complex_logdet(scale);
}

LogScalar chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale,
                           const std::vector<int>& peo) {
  require_delta(delta);
  if (scale.size() != g.num_vertices()) throw InputError("chordal_constant: dimension mismatch");
  const auto dec = clique_decomposition(g, peo);
  double out = 0.0;
  for (const auto& c : dec.cliques)
    out += complete_constant(static_cast<int>(c.size()), delta, principal_submatrix(scale, c)).log_magnitude();
  for (const auto& s : dec.separators)
    if (!s.empty())
      out -= complete_constant(static_cast<int>(s.size()), delta, principal_submatrix(scale, s)).log_magnitude();
  return LogScalar::from_log(out);
}

LogScalar chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale) {
  const auto res = is_chordal(g);
  if (!res.chordal) throw InputError("chordal_constant: graph is not chordal");
  return chordal_constant(g, delta, scale, *res.peo);
}

cdouble complex_chordal_log(const Graph& g, double delta, const SymmetricMatrix& scale,
                            const PerturbationEdge& p) {
  require_delta(delta);
  if (scale.size() != g.num_vertices()) throw InputError("complex_chordal_log: dimension mismatch");
  if (!is_positive_definite(scale)) throw NumericalError("complex_chordal_log: scale is not PD");
  const auto dec = clique_decomposition(g);
  const auto perturbed = perturb(scale, p);
  cdouble out = 0.0;
  for (const auto& c : dec.cliques) out += complete_constant_log(delta, principal_submatrix(perturbed, c));
  for (const auto& s : dec.separators)
    if (!s.empty()) out -= complete_constant_log(delta, principal_submatrix(perturbed, s));
  return out;
}

LogScalar complex_chordal_constant(const Graph& g, double delta, const SymmetricMatrix& scale,
                                   const PerturbationEdge& p) {
  return LogScalar::from_log(complex_chordal_log(g, delta, scale, p));
}

LogScalar path4_identity(double delta) {
  require_delta(delta);
  return LogScalar::from_log((2 * delta + 3) * kLog2 + 1.5 * kLogPi + 3 * std::lgamma((delta + 1) / 2) +
                             std::lgamma(delta / 2));
}

LogScalar cycle4_identity(double delta) {
  require_delta(delta);
  return LogScalar::from_log((2 * delta + 4) * kLog2 + 2 * kLogPi + std::lgamma(delta / 2) +
                             std::lgamma((delta + 1) / 2) + 3 * std::lgamma((delta + 2) / 2) -
                             std::lgamma((delta + 3) / 2));
}

double true_ratio_c4(double delta) {
  require_delta(delta);
  return std::exp(2 * std::lgamma((delta + 1) / 2) + std::lgamma((delta + 3) / 2) - kLog2 - 0.5 * kLogPi -
                  3 * std::lgamma((delta + 2) / 2));
}

double approx_ratio(double delta, int s) {
  require_delta(delta);
  if (s < 0) throw InputError("approx_ratio: s must be non-negative");
  return std::exp(std::lgamma((delta + s) / 2) - kLog2 - 0.5 * kLogPi - std::lgamma((delta + s + 1) / 2));
}

double stirling_rel_error(double delta) {
  require_delta(delta);
  return std::expm1(3 * std::lgamma((delta + 2) / 2) + std::lgamma(delta / 2) -
                    3 * std::lgamma((delta + 1) / 2) - std::lgamma((delta + 3) / 2));
}

LogScalar roverato_estimate(const Graph& g, double delta, const SymmetricMatrix& scale,
                            const LogScalar& c_identity, const CompletionOptions& opts) {
  require_delta(delta);
  const int n = g.num_vertices();
  const auto completed = pd_complete(scale, g, opts).completed;
  const SymmetricMatrix iss(isserlis(completed, g));
  const double log_factor =
      0.5 * n * kLog2 - 0.5 * logdet(iss) - 0.5 * (delta - 2) * logdet(completed);
  return LogScalar::from_log(log_factor) * c_identity;
}

LogScalar roverato_estimate_eq2(const Graph& g, double delta, const SymmetricMatrix& scale,
                                const LogScalar& c_identity, const CompletionOptions& opts) {
  require_delta(delta);
  if (g.is_complete()) return roverato_estimate(g, delta, scale, c_identity, opts);
  const int n = g.num_vertices();
  const auto completed = pd_complete(scale, g, opts).completed;
  const SymmetricMatrix block(isserlis_complement_block(inverse(completed), g));
  const double log_factor = -0.5 * logdet(block) - (0.5 * (delta - 2) + 0.5 * (n + 1)) * logdet(completed);
  return LogScalar::from_log(log_factor) * c_identity;
}

}  // namespace gwnc

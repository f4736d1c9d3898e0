#include "gwnc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "gwnc/completion.hpp"
#include "gwnc/constants.hpp"

namespace gwnc {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

cdouble gauss_legendre(const std::function<cdouble(double)>& f, double a, double b) {
  const double half = (b - a) / 2, mid = (a + b) / 2;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  cdouble sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    sum += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
  return sum * half;
}

struct Panel {
  double a, b;
  cdouble refined;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const std::function<cdouble(double)>& f, double a, double b) {
  const double m = (a + b) / 2;
  const cdouble coarse = gauss_legendre(f, a, b);
  const cdouble refined = gauss_legendre(f, a, m) + gauss_legendre(f, m, b);
  return {a, b, refined, std::abs(refined - coarse)};
}

// Clique and separator terms of the chordal factorisation of g_star.  Only
// blocks containing both endpoints of the perturbed edge depend on t.
class ChordalIntegrand {
 public:
  ChordalIntegrand(const Graph& g_star, const Edge& e, double delta, const SymmetricMatrix& scale)
      : delta_(delta), edge_(e), scale_(scale) {
    if (!(delta > 0)) throw InputError("fourier_constant: delta must be positive");
    if (scale.size() != g_star.num_vertices()) throw InputError("fourier_constant: dimension mismatch");
    if (!g_star.has_edge(e)) throw InputError("fourier_constant: dropped edge is not an edge of g_star");
    if (!is_positive_definite(scale)) throw NumericalError("fourier_constant: scale is not PD");
    const auto dec = clique_decomposition(g_star);
    auto add = [&](const std::vector<int>& c, double sign) {
      if (c.empty()) return;
      const bool has_u = std::find(c.begin(), c.end(), e.u) != c.end();
      const bool has_v = std::find(c.begin(), c.end(), e.v) != c.end();
      if (has_u && has_v) {
        blocks_.push_back({c, sign});
      } else {
        constant_ += sign * complete_constant(static_cast<int>(c.size()), delta, principal_submatrix(scale, c))
                                .log_magnitude();
      }
    };
    for (const auto& c : dec.cliques) add(c, 1.0);
    for (const auto& s : dec.separators) add(s, -1.0);
    log_at_zero_ = log_value(0.0);
  }

  cdouble log_value(double t) const {
    const auto m = perturb(scale_, {edge_, t});
    cdouble out = constant_;
    for (const auto& b : blocks_) out += b.sign * complete_constant_log(delta_, principal_submatrix(m, b.vertices));
    return out;
  }

  double log_at_zero() const { return log_at_zero_.real(); }

  cdouble relative(double t) const { return std::exp(log_value(t) - log_at_zero_); }

 private:
  struct Block {
    std::vector<int> vertices;
    double sign;
  };
  double delta_;
  Edge edge_;
  SymmetricMatrix scale_;
  std::vector<Block> blocks_;
  double constant_ = 0.0;
  cdouble log_at_zero_;
};

}  // namespace

QuadratureResult adaptive_gauss_legendre(const std::function<cdouble(double)>& f, double a, double b,
                                         const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0)) throw InputError("quadrature: rel_tol must be positive");
  if (cfg.initial_panels < 1 || cfg.max_panels < cfg.initial_panels)
    throw InputError("quadrature: invalid panel limits");
  std::priority_queue<Panel> heap;
  const double width = (b - a) / cfg.initial_panels;
  for (int k = 0; k < cfg.initial_panels; ++k)
    heap.push(make_panel(f, a + k * width, k + 1 == cfg.initial_panels ? b : a + (k + 1) * width));
  auto totals = [&heap] {
    auto copy = heap;
    cdouble value = 0.0;
    double err = 0.0;
    while (!copy.empty()) {
      value += copy.top().refined;
      err += copy.top().error;
      copy.pop();
    }
    return std::pair{value, err};
  };
  auto [value, err] = totals();
  while (err > cfg.rel_tol * std::abs(value) &&
         (std::tie(value, err) = totals(), err > cfg.rel_tol * std::abs(value))) {
    if (static_cast<int>(heap.size()) >= cfg.max_panels) {
      std::ostringstream os;
      os << "quadrature did not converge within " << cfg.max_panels << " panels (relative change "
         << err / std::abs(value) << ")";
      throw ConvergenceError(os.str(), err / std::abs(value), static_cast<long>(heap.size()));
    }
    const Panel worst = heap.top();
    heap.pop();
    const double m = (worst.a + worst.b) / 2;
    const Panel left = make_panel(f, worst.a, m), right = make_panel(f, m, worst.b);
    heap.push(left);
    heap.push(right);
    // Incremental update; the loop condition re-sums exactly before stopping.
    value += left.refined + right.refined - worst.refined;
    err += left.error + right.error - worst.error;
  }
  return {value, err, static_cast<int>(heap.size())};
}

namespace {

// Integral of h(x) over x in (0, pi/2], where h(x) ~ x^(decay - 1) as x -> 0.
// For decay < 1 the substitution x = (pi/2) y^(1/decay) removes the
// endpoint singularity.
QuadratureResult integrate_graded(const std::function<cdouble(double)>& h, double decay,
                                  const QuadratureConfig& cfg) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (decay >= 1.0) return adaptive_gauss_legendre(h, 0.0, half_pi, cfg);
  const double p = 1.0 / decay;
  auto g = [&](double y) -> cdouble {
    const double x = half_pi * std::pow(y, p);
    if (!(x > 0)) return 0.0;
    return h(x) * (half_pi * p * std::pow(y, p - 1));
  };
  return adaptive_gauss_legendre(g, 0.0, 1.0, cfg);
}

}  // namespace

cdouble fourier_integrand(const Graph& g_star, const Edge& e, double delta, const SymmetricMatrix& scale,
                          double t) {
  return ChordalIntegrand(g_star, e, delta, scale).relative(t);
}

FourierResult fourier_constant(const Graph& g_star, const Edge& e, double delta, const SymmetricMatrix& scale,
                               const QuadratureConfig& cfg) {
  if (scale.size() != g_star.num_vertices()) throw InputError("fourier_constant: dimension mismatch");
  if (!g_star.has_edge(e)) throw InputError("fourier_constant: dropped edge is not an edge of g_star");
  const SymmetricMatrix centred =
      cfg.recentre ? pd_complete(scale, g_star.without_edge(e)).completed : scale;
  const ChordalIntegrand integrand(g_star, e, delta, centred);
  FourierResult out;
  const int s = common_neighbor_count(g_star, e);
  if (delta + s < 0.5) {
    std::ostringstream os;
    os << "delta + s = " << delta + s << " < 0.5: integrand tail decays slowly, quadrature may be inaccurate";
    out.warnings.push_back(os.str());
  }
  // t = tan(theta) = cot(x) with x = pi/2 - theta; the t and -t contributions
  // are added node by node.
  auto folded = [&](double x) -> cdouble {
    const double sx = std::sin(x);
    const double t = std::cos(x) / sx;
    const double jac = 1.0 / (sx * sx);
    if (!std::isfinite(jac) || !std::isfinite(t)) return 0.0;
    return (integrand.relative(t) + integrand.relative(-t)) * jac;
  };
  const auto q = integrate_graded(folded, delta + s, cfg);
  const double re = q.value.real();
  if (!(re > 0)) throw NumericalError("fourier_constant: integral is not positive");
  out.imag_ratio = std::abs(q.value.imag()) / re;
  out.refinement_change = q.error_estimate / re;
  out.panels = q.panels;
  out.value = LogScalar::from_log(integrand.log_at_zero() + std::log(re) - std::log(2 * std::numbers::pi));
  return out;
}

double beta_integral_check(double delta, int s, const QuadratureConfig& cfg) {
  if (!(delta > 0)) throw InputError("beta_integral_check: delta must be positive");
  if (s < 0) throw InputError("beta_integral_check: s must be non-negative");
  const double power = (delta + s + 1) / 2;
  // (1 + tan^2)^(-power) * sec^2 = cos^(2 power - 2) = sin(x)^(2 power - 2),
  // doubled for both halves.
  auto f = [power](double x) -> cdouble { return 2.0 * std::pow(std::sin(x), 2 * power - 2); };
  const auto q = integrate_graded(f, delta + s, cfg);
  const double closed = std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma((delta + s) / 2) -
                                 std::lgamma((delta + s + 1) / 2));
  return q.value.real() / closed;
}

}  // namespace gwnc

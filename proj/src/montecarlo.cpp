#include "gwnc/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include <boost/random/chi_squared_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "gwnc/completion.hpp"

namespace gwnc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Streaming mean of exp(lw) with a running max shift.
class LogMeanAccumulator {
 public:
  void add(double lw) {
    ++count_;
    if (lw == -std::numeric_limits<double>::infinity()) return;
    if (lw > shift_) {
      const double r = std::exp(shift_ - lw);
      sum_ *= r;
      sumsq_ *= r * r;
      shift_ = lw;
    }
    const double w = std::exp(lw - shift_);
    sum_ += w;
    sumsq_ += w * w;
  }

  bool degenerate() const { return !(sum_ > 0); }
  double log_mean() const { return shift_ + std::log(sum_ / count_); }

  double log_std_error() const {
    const double n = static_cast<double>(count_);
    const double mean = sum_ / n;
    const double var = std::max(0.0, (sumsq_ - n * mean * mean) / (n - 1));
    return std::sqrt(var / n) / mean;
  }

 private:
  long count_ = 0;
  double shift_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double sumsq_ = 0.0;
};

}  // namespace

McEstimate mc_constant(const Graph& graph, double delta, const SymmetricMatrix& scale_in, long samples,
                       std::uint64_t seed, const McOptions& opts) {
  if (!(delta > 0)) throw InputError("mc_constant: delta must be positive");
  if (samples < 2) throw InputError("mc_constant: need at least 2 samples");
  if (scale_in.size() != graph.num_vertices()) throw InputError("mc_constant: dimension mismatch");
  if (!is_positive_definite(scale_in)) throw NumericalError("mc_constant: scale is not positive definite");

  Graph g = graph;
  SymmetricMatrix scale = opts.recentre ? pd_complete(scale_in, graph).completed : scale_in;
  if (opts.order) {
    g = graph.permuted(*opts.order);
    scale = principal_submatrix(scale, *opts.order);
  }
  const int n = g.num_vertices();

  Matrix lower;
  if (!cholesky_lower(inverse(scale), lower)) throw NumericalError("mc_constant: scale inverse is not PD");
  const Matrix t = lower.transpose();

  std::vector<int> nu(n, 0), b(n, 0);
  for (const auto& e : g.edges()) {
    ++nu[e.u];
    ++b[e.v];
  }
  double log_prefactor = 0.5 * static_cast<double>(g.num_edges()) * std::log(2 * std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    const double df = delta + nu[i];
    log_prefactor += 0.5 * df * std::numbers::ln2 + std::lgamma(df / 2) + (df + b[i]) * std::log(t(i, i));
  }

  std::mt19937_64 engine(splitmix64(seed));
  boost::random::normal_distribution<double> normal;
  std::vector<boost::random::chi_squared_distribution<double>> chi;
  for (int i = 0; i < n; ++i) chi.emplace_back(delta + nu[i]);

  Matrix psi = Matrix::Zero(n, n), phi = Matrix::Zero(n, n);
  LogMeanAccumulator acc;
  for (long k = 0; k < samples; ++k) {
    double penalty = 0.0;
    for (int i = 0; i < n; ++i) {
      psi(i, i) = std::sqrt(chi[i](engine));
      phi(i, i) = psi(i, i) * t(i, i);
      for (int j = i + 1; j < n; ++j) {
        double partial = 0.0;  // sum_{l=i}^{j-1} psi_il t_lj
        for (int l = i; l < j; ++l) partial += psi(i, l) * t(l, j);
        if (g.adjacent(i, j)) {
          psi(i, j) = normal(engine);
          phi(i, j) = partial + psi(i, j) * t(j, j);
        } else {
          double cross = 0.0;
          for (int r = 0; r < i; ++r) cross += phi(r, i) * phi(r, j);
          phi(i, j) = -cross / phi(i, i);
          psi(i, j) = (phi(i, j) - partial) / t(j, j);
          penalty += psi(i, j) * psi(i, j);
        }
      }
    }
    acc.add(-0.5 * penalty);
  }
  if (acc.degenerate()) throw NumericalError("mc_constant: all importance weights underflowed");
  return {log_prefactor + acc.log_mean(), acc.log_std_error(), samples, seed};
}

std::vector<McEstimate> mc_replicates(const Graph& g, double delta, const SymmetricMatrix& scale, long samples,
                                      const std::vector<std::uint64_t>& seeds, const McOptions& opts) {
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
    throw InputError("mc_replicates: seeds must be distinct");
  std::vector<McEstimate> out;
  out.reserve(seeds.size());
  for (auto s : seeds) out.push_back(mc_constant(g, delta, scale, samples, s, opts));
  return out;
}

}  // namespace gwnc

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwnc/fourier.hpp"
#include "gwnc/graph.hpp"
#include "gwnc/montecarlo.hpp"
#include "gwnc/symmat.hpp"

namespace gwnc {

struct Figure1Row {
  int delta = 0;
  double true_ratio = 0.0;
  double approx_ratio = 0.0;
};

/// Path-4 over cycle-4 ratio of identity-scale constants, exact and
/// approximated, for delta = 1..delta_max.
std::vector<Figure1Row> figure1_table(int delta_max);
std::string figure1_csv(const std::vector<Figure1Row>& rows, bool full_precision = false);

/// The three labelled 4-cycles on {SL=1, SW=2, PL=3, PW=4}.
std::vector<Graph> nonchordal_graphs_4();

enum class Centering { Centered, Uncentered, Auto };
std::string to_string(Centering c);
Centering parse_centering(const std::string& s);

struct IrisConfig {
  std::string data_path;
  double delta_prior = 3.0;
  Centering centering = Centering::Auto;
  long mc_samples = 1000;
  std::uint64_t mc_seed = 1;
  QuadratureConfig quadrature{};
};

struct IrisRow {
  std::string graph_id;
  Graph graph;
  Edge chord;
  double exact_log = 0.0;
  /// Same quantity through the other chord of the 4-cycle.
  double exact_log_other_chord = 0.0;
  double identity_log = 0.0;
  double conjectured_log = 0.0;
  McEstimate mc;
  /// |exact - mc| < 3 mc standard errors.
  bool gate_passed = false;
};

struct IrisTable {
  Centering centering = Centering::Centered;
  double delta = 0.0;
  SymmetricMatrix scatter;
  std::vector<IrisRow> rows;
};

/// Reference log-constants for the three Iris Virginica graphs, sorted.
inline constexpr std::array<double, 3> kIrisExactReference{83.6851, 111.3223, 112.7664};
inline constexpr std::array<double, 3> kIrisConjecturedReference{83.6836, 111.3175, 112.7618};
inline constexpr double kIrisReferenceTolerance = 5e-3;

/// Posterior constants C_G(delta_prior + N, U + I) for the three 4-cycles.
/// `centering` must not be Auto here.
IrisTable iris_table(const Matrix& data, double delta_prior, Centering centering, long mc_samples,
                     std::uint64_t mc_seed, const QuadratureConfig& quadrature = {});

/// Sorted exact and conjectured columns both within kIrisReferenceTolerance.
bool matches_reference(const IrisTable& table);

struct IrisResolution {
  std::optional<IrisTable> table;  // absent when neither convention matches
  std::vector<IrisTable> attempts;
};

/// Runs the requested convention, or with Auto tries centered then
/// uncentered and keeps the first one matching the reference values.
IrisResolution resolve_iris_table(const IrisConfig& cfg);

std::string iris_csv(const IrisTable& table, bool full_precision = false);

struct ViolinPoint {
  std::string graph_id;
  std::uint64_t seed = 0;
  double log_estimate = 0.0;
  double std_error = 0.0;
};

struct ReferenceLine {
  std::string graph_id;
  std::string kind;  // "exact" or "conjectured"
  double value = 0.0;
};

struct ViolinData {
  Centering centering = Centering::Centered;
  std::vector<ViolinPoint> points;
  std::vector<ReferenceLine> references;
};

/// Monte Carlo replicates (seeds 1..seeds) per graph plus reference lines.
ViolinData violin_data(const IrisTable& table, int seeds = 200, long samples = 1000);

/// Columns: graph_id,kind,seed,log_estimate,std_error,centering.  kind is
/// "mc" for replicate rows; reference rows leave seed and std_error empty.
std::string violin_csv(const ViolinData& v, bool full_precision = false);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast internal consistency checks between independent evaluation routes.
std::vector<CheckResult> selfcheck();

std::string format_number(double v, bool full_precision);

}  // namespace gwnc

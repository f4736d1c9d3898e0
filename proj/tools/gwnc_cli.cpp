// gwnc: command-line front end for the G-Wishart normalising-constant library.
//
// Exit codes: 0 success, 1 input error, 2 tolerance or acceptance failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gwnc/completion.hpp"
#include "gwnc/constants.hpp"
#include "gwnc/experiments.hpp"
#include "gwnc/fourier.hpp"
#include "gwnc/montecarlo.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kToleranceFailure = 2;

class ToleranceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Shared {
  std::string graph;
  std::string gstar;
  std::string drop_edge;
  double delta = 3.0;
  std::string scale = "identity";
  std::string method = "chordal";
  long samples = 1000;
  std::uint64_t seed = 1;
  int seeds = 200;
  std::string data = GWNC_DEFAULT_IRIS;
  std::string centering = "auto";
  std::string out;
  bool full_precision = false;
  int delta_max = 10;
  double tol = 1e-10;
  long max_iter = 10000;
};

void emit(const Shared& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw gwnc::InputError("cannot write '" + s.out + "'");
  f << text;
}

gwnc::SymmetricMatrix load_scale(const std::string& spec, int n) {
  if (spec == "identity") return gwnc::SymmetricMatrix::identity(n);
  auto m = gwnc::read_matrix_csv(spec);
  if (m.size() != n) throw gwnc::InputError("scale dimension does not match the graph");
  return m;
}

// G* and the dropped edge: explicit flags, or the first non-edge of --graph
// whose addition makes it chordal.
std::pair<gwnc::Graph, gwnc::Edge> fourier_setup(const Shared& s) {
  if (!s.gstar.empty()) {
    if (s.drop_edge.empty()) throw gwnc::InputError("--gstar requires --drop-edge");
    return {gwnc::read_graph(s.gstar), gwnc::parse_edge(s.drop_edge)};
  }
  if (s.graph.empty()) throw gwnc::InputError("fourier method needs --gstar/--drop-edge or --graph");
  const auto g = gwnc::read_graph(s.graph);
  const auto chord = gwnc::find_chordal_completion_edge(g);
  if (!chord) throw gwnc::InputError("graph is not one edge short of a chordal graph");
  return {g.with_edge(*chord), *chord};
}

void print_warnings(const gwnc::FourierResult& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

int run_constant(const Shared& s) {
  std::ostringstream os;
  os << "method,log_value,std_error\n";
  auto row = [&](double log_value, std::optional<double> se) {
    os << s.method << ',' << gwnc::format_number(log_value, s.full_precision) << ','
       << (se ? gwnc::format_number(*se, s.full_precision) : "") << '\n';
  };
  if (s.method == "fourier") {
    const auto [gstar, edge] = fourier_setup(s);
    const auto r = gwnc::fourier_constant(gstar, edge, s.delta, load_scale(s.scale, gstar.num_vertices()));
    print_warnings(r);
    row(r.value.log_magnitude(), std::nullopt);
  } else {
    if (s.graph.empty()) throw gwnc::InputError("--graph is required");
    const auto g = gwnc::read_graph(s.graph);
    const auto scale = load_scale(s.scale, g.num_vertices());
    if (s.method == "chordal") {
      row(gwnc::chordal_constant(g, s.delta, scale).log_magnitude(), std::nullopt);
    } else if (s.method == "mc") {
      const auto e = gwnc::mc_constant(g, s.delta, scale, s.samples, s.seed);
      row(e.log_value, e.std_error);
    } else if (s.method == "roverato") {
      const auto identity = gwnc::SymmetricMatrix::identity(g.num_vertices());
      gwnc::LogScalar c_identity;
      if (gwnc::is_chordal(g).chordal) {
        c_identity = gwnc::chordal_constant(g, s.delta, identity);
      } else if (auto chord = gwnc::find_chordal_completion_edge(g)) {
        const auto r = gwnc::fourier_constant(g.with_edge(*chord), *chord, s.delta, identity);
        print_warnings(r);
        c_identity = r.value;
      } else {
        std::cerr << "note: identity-scale constant estimated by Monte Carlo\n";
        c_identity = gwnc::LogScalar::from_log(gwnc::mc_constant(g, s.delta, identity, s.samples, s.seed).log_value);
      }
      row(gwnc::roverato_estimate(g, s.delta, scale, c_identity).log_magnitude(), std::nullopt);
    } else {
      throw gwnc::InputError("unknown method '" + s.method + "'");
    }
  }
  emit(s, os.str());
  return 0;
}

int run_complete(const Shared& s) {
  if (s.graph.empty()) throw gwnc::InputError("--graph is required");
  if (s.scale == "identity") throw gwnc::InputError("complete needs --scale <csv>");
  const auto g = gwnc::read_graph(s.graph);
  const auto r = gwnc::pd_complete(load_scale(s.scale, g.num_vertices()), g, {s.tol, s.max_iter});
  std::ostringstream os;
  os << gwnc::to_csv(r.completed.mat(), s.full_precision);
  os << "residual," << gwnc::format_number(r.residual, true) << '\n';
  os << "iterations," << r.iterations << '\n';
  emit(s, os.str());
  return 0;
}

gwnc::IrisTable resolved_table(const Shared& s) {
  gwnc::IrisConfig cfg;
  cfg.data_path = s.data;
  cfg.centering = gwnc::parse_centering(s.centering);
  cfg.mc_samples = s.samples;
  cfg.mc_seed = s.seed;
  auto res = gwnc::resolve_iris_table(cfg);
  if (!res.table) {
    std::cerr << "no scatter convention reproduces the reference values; candidate U matrices:\n";
    for (const auto& t : res.attempts)
      std::cerr << gwnc::to_string(t.centering) << ":\n" << gwnc::to_csv(t.scatter.mat(), true);
    for (const auto& t : res.attempts) std::cerr << gwnc::iris_csv(t, true);
    throw ToleranceFailure("iris table does not match the reference values");
  }
  std::cerr << "scatter convention: " << gwnc::to_string(res.table->centering) << '\n';
  return *res.table;
}

int run_iris_table(const Shared& s) {
  const auto table = resolved_table(s);
  emit(s, gwnc::iris_csv(table, s.full_precision));
  for (const auto& r : table.rows)
    if (!r.gate_passed)
      std::cerr << "warning: " << r.graph_id << " Monte Carlo check outside 3 standard errors\n";
  return 0;
}

int run_violin(const Shared& s) {
  const auto table = resolved_table(s);
  emit(s, gwnc::violin_csv(gwnc::violin_data(table, s.seeds, s.samples), s.full_precision));
  return 0;
}

int run_selfcheck(const Shared& s) {
  std::ostringstream os;
  os << "check,status,detail\n";
  bool ok = true;
  for (const auto& c : gwnc::selfcheck()) {
    ok = ok && c.passed;
    os << '"' << c.name << "\"," << (c.passed ? "pass" : "FAIL") << ",\"" << c.detail << "\"\n";
  }
  emit(s, os.str());
  return ok ? 0 : kToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-Wishart normalising constants: exact, Fourier, Monte Carlo and Roverato estimates"};
  app.require_subcommand(1);
  Shared s;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", s.out, "Write output to this path instead of stdout");
    sub->add_flag("--full-precision", s.full_precision, "Print 17 significant digits");
  };

  auto* constant = app.add_subcommand("constant", "Evaluate log C_G(delta, D)");
  constant->add_option("--graph", s.graph, "Graph file or inline 'n:4;edges:1-2,2-3'");
  constant->add_option("--gstar", s.gstar, "Chordal supergraph for --method fourier");
  constant->add_option("--drop-edge", s.drop_edge, "Edge of --gstar removed to form G, e.g. 1-3");
  constant->add_option("--delta", s.delta, "Shape parameter delta > 0")->required();
  constant->add_option("--scale", s.scale, "Scale matrix CSV or 'identity'");
  constant->add_option("--method", s.method, "chordal | fourier | mc | roverato")
      ->check(CLI::IsMember({"chordal", "fourier", "mc", "roverato"}));
  constant->add_option("--samples", s.samples, "Monte Carlo sample count");
  constant->add_option("--seed", s.seed, "Monte Carlo seed");
  add_common(constant);

  auto* complete = app.add_subcommand("complete", "PD-completion of a scale matrix with respect to a graph");
  complete->add_option("--graph", s.graph, "Graph file or inline form")->required();
  complete->add_option("--scale", s.scale, "Scale matrix CSV")->required();
  complete->add_option("--tol", s.tol, "Convergence tolerance");
  complete->add_option("--max-iter", s.max_iter, "Maximum sweeps");
  add_common(complete);

  auto* ratio = app.add_subcommand("ratio-figure", "Exact vs approximate path/cycle ratio for delta = 1..N");
  ratio->add_option("--delta-max", s.delta_max, "Largest delta");
  add_common(ratio);

  auto* iris = app.add_subcommand("iris-table", "Posterior constants for the three Iris 4-cycles");
  auto* violin = app.add_subcommand("mc-violin", "Monte Carlo replicate estimates for the Iris 4-cycles");
  for (auto* sub : {iris, violin}) {
    sub->add_option("--data", s.data, "Iris Virginica CSV (SL, SW, PL, PW)");
    sub->add_option("--centering", s.centering, "centered | uncentered | auto")
        ->check(CLI::IsMember({"centered", "uncentered", "auto"}));
    sub->add_option("--samples", s.samples, "Monte Carlo samples per estimate");
    sub->add_option("--seed", s.seed, "Seed of the single Monte Carlo column");
    add_common(sub);
  }
  violin->add_option("--seeds", s.seeds, "Number of replicate seeds (1..N)");

  auto* self = app.add_subcommand("selfcheck", "Run internal identity checks");
  add_common(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*constant) return run_constant(s);
    if (*complete) return run_complete(s);
    if (*ratio) {
      emit(s, gwnc::figure1_csv(gwnc::figure1_table(s.delta_max), s.full_precision));
      return 0;
    }
    if (*iris) return run_iris_table(s);
    if (*violin) return run_violin(s);
    if (*self) return run_selfcheck(s);
  } catch (const ToleranceFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kToleranceFailure;
  } catch (const gwnc::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kToleranceFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}

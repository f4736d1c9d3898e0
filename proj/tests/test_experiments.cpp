#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "gwnc/constants.hpp"
#include "gwnc/experiments.hpp"
#include "test_support.hpp"

using namespace gwnc;

namespace {

const std::string kIris = std::string(GWNC_DATA_DIR) + "/iris_virginica.csv";

const IrisTable& centered_table() {
  static const IrisTable table = iris_table(read_data_csv(kIris), 3.0, Centering::Centered, 1000, 1);
  return table;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("figure 1 table") {
  const auto rows = figure1_table(10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].delta == 1);
  CHECK(rows[0].true_ratio == doctest::Approx(0.405285).epsilon(1e-6));
  CHECK(rows[0].approx_ratio == doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& r : rows) CHECK(r.approx_ratio > r.true_ratio);
  const auto& last = rows.back();
  const double gap = (last.approx_ratio - last.true_ratio) / last.true_ratio;
  CHECK(gap == doctest::Approx(stirling_rel_error(10)).epsilon(1e-10));
  CHECK(std::abs(gap / (1.0 / 200) - 1) < 0.3);

  const auto csv = lines(figure1_csv(rows));
  REQUIRE(csv.size() == 11);
  CHECK(csv[0] == "delta,true_ratio,approx_ratio");
  CHECK(csv[1] == "1,0.405285,0.5");
  CHECK_THROWS_AS(figure1_table(0), InputError);
}

TEST_CASE("the three non-chordal graphs on four vertices") {
  const auto gs = nonchordal_graphs_4();
  REQUIRE(gs.size() == 3);
  std::vector<Graph> enumerated;
  for (const auto& g : gwnc::testing::all_graphs(4))
    if (!gwnc::testing::brute_force_chordal(g)) enumerated.push_back(g);
  CHECK(enumerated.size() == 3);
  for (const auto& g : gs) {
    CHECK_FALSE(is_chordal(g).chordal);
    CHECK(std::count(enumerated.begin(), enumerated.end(), g) == 1);
    for (const auto& chord : g.non_edges()) CHECK(is_chordal(g.with_edge(chord)).chordal);
  }
  CHECK(gs[0] == parse_graph("n:4;edges:1-2,2-3,3-4,1-4"));
  CHECK(gs[1] == parse_graph("n:4;edges:1-2,2-4,3-4,1-3"));
  CHECK(gs[2] == parse_graph("n:4;edges:1-3,2-3,2-4,1-4"));
}

TEST_CASE("centering names") {
  CHECK(parse_centering("centered") == Centering::Centered);
  CHECK(parse_centering("uncentered") == Centering::Uncentered);
  CHECK(to_string(Centering::Uncentered) == "uncentered");
  CHECK_THROWS_AS(parse_centering("sideways"), InputError);
}

TEST_CASE("iris data") {
  const Matrix data = read_data_csv(kIris);
  CHECK(data.rows() == 50);
  CHECK(data.cols() == 4);
  CHECK(data(0, 0) == 6.3);
}

TEST_CASE("iris table under the centered convention") {
  const auto& t = centered_table();
  REQUIRE(t.rows.size() == 3);
  CHECK(t.delta == 53.0);
  CHECK(matches_reference(t));
  std::vector<double> exact, conj;
  for (const auto& r : t.rows) {
    exact.push_back(r.exact_log);
    conj.push_back(r.conjectured_log);
    CHECK(std::abs(r.exact_log - r.exact_log_other_chord) < 1e-6 * std::abs(r.exact_log));
    CHECK(std::abs(r.conjectured_log - r.exact_log) < 0.005);
    CHECK(r.gate_passed);
    CHECK(r.exact_log != r.conjectured_log);
  }
  std::sort(exact.begin(), exact.end());
  std::sort(conj.begin(), conj.end());
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(exact[k] - kIrisExactReference[k]) < kIrisReferenceTolerance);
    CHECK(std::abs(conj[k] - kIrisConjecturedReference[k]) < kIrisReferenceTolerance);
  }
}

TEST_CASE("uncentered scatter does not reproduce the reference") {
  const auto t = iris_table(read_data_csv(kIris), 3.0, Centering::Uncentered, 200, 1);
  CHECK_FALSE(matches_reference(t));
}

TEST_CASE("auto resolution picks the centered convention first") {
  IrisConfig cfg;
  cfg.data_path = kIris;
  cfg.mc_samples = 200;
  const auto res = resolve_iris_table(cfg);
  REQUIRE(res.table.has_value());
  CHECK(res.table->centering == Centering::Centered);
  CHECK(res.attempts.size() == 1);
}

TEST_CASE("perturbed data matches neither convention") {
  Matrix data = read_data_csv(kIris);
  data.col(2) *= 1.5;
  for (auto c : {Centering::Centered, Centering::Uncentered})
    CHECK_FALSE(matches_reference(iris_table(data, 3.0, c, 200, 1)));
}

TEST_CASE("iris CSV is deterministic") {
  const auto a = iris_csv(centered_table());
  const auto b = iris_csv(iris_table(read_data_csv(kIris), 3.0, Centering::Centered, 1000, 1));
  CHECK(a == b);
  const auto rows = lines(a);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "graph_id,edges,chord,delta,exact_log,conjectured_log,mc_log,mc_stderr,mc_samples,mc_seed,fourier_gate,"
        "centering");
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].find("centered") != std::string::npos);
}

TEST_CASE("violin data envelope") {
  const auto& t = centered_table();
  const auto v = violin_data(t, 200, 1000);
  CHECK(v.points.size() == 600);
  CHECK(v.references.size() == 6);
  CHECK(lines(violin_csv(v)).size() == 1 + 606);

  std::map<std::string, std::vector<double>> by_graph;
  for (const auto& p : v.points) by_graph[p.graph_id].push_back(p.log_estimate);
  REQUIRE(by_graph.size() == 3);
  for (const auto& row : t.rows) {
    auto est = by_graph.at(row.graph_id);
    REQUIRE(est.size() == 200);
    double m = 0;
    for (double x : est) m += x;
    m /= est.size();
    double s = 0;
    for (double x : est) s += (x - m) * (x - m);
    s = std::sqrt(s / (est.size() - 1));
    CHECK(s > 0.005);
    const auto inside = std::count_if(est.begin(), est.end(),
                                      [&](double x) { return std::abs(x - row.exact_log) <= 4 * s; });
    CHECK(inside >= 180);
    std::nth_element(est.begin(), est.begin() + 100, est.end());
    CHECK(std::abs(est[100] - row.exact_log) < 2 * s);
    CHECK(std::abs(row.conjectured_log - row.exact_log) < 0.005);
  }
}

TEST_CASE("selfcheck") {
  for (const auto& c : selfcheck()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(83.68508186, false) == "83.6851");
  CHECK(format_number(0.1, true) == "0.10000000000000001");
}

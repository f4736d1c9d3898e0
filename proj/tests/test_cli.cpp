#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + GWNC_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double field(const std::string& csv_row, int index) {
  std::istringstream in(csv_row);
  std::string cell;
  for (int k = 0; k <= index; ++k) std::getline(in, cell, ',');
  return std::stod(cell);
}

std::string second_line(const std::string& s) {
  std::istringstream in(s);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  return line;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "gwnc_cli_test";
  fs::create_directories(dir);
  return dir;
}

const std::string kIris = std::string(GWNC_DATA_DIR) + "/iris_virginica.csv";

}  // namespace

TEST_CASE("constant by each method") {
  const auto chordal = run("constant --graph 'n:4;edges:1-2,2-3,3-4' --delta 3 --scale identity --method chordal");
  REQUIRE(chordal.code == 0);
  CHECK(chordal.out.rfind("method,log_value,std_error\n", 0) == 0);
  CHECK(field(second_line(chordal.out), 1) == doctest::Approx(9 * std::log(2.0) + 1.5 * std::log(std::numbers::pi) + std::lgamma(1.5)).epsilon(1e-5));

  const auto fourier = run("constant --gstar 'n:4;edges:1-2,2-3,3-4,1-4,1-3' --drop-edge 1-3 --delta 1 "
                           "--scale identity --method fourier --full-precision");
  REQUIRE(fourier.code == 0);
  CHECK(field(second_line(fourier.out), 1) == doctest::Approx(std::log(8 * std::pow(std::numbers::pi, 4))).epsilon(1e-10));

  const auto auto_chord =
      run("constant --graph 'n:4;edges:1-2,2-3,3-4,1-4' --delta 1 --scale identity --method fourier");
  REQUIRE(auto_chord.code == 0);
  CHECK(field(second_line(auto_chord.out), 1) == doctest::Approx(std::log(8 * std::pow(std::numbers::pi, 4))).epsilon(1e-5));

  const auto mc = run("constant --graph 'n:4;edges:1-2,2-3,3-4,1-4' --delta 1 --scale identity --method mc "
                      "--samples 2000 --seed 4");
  REQUIRE(mc.code == 0);
  const double se = field(second_line(mc.out), 2);
  CHECK(se > 0);
  CHECK(std::abs(field(second_line(mc.out), 1) - std::log(8 * std::pow(std::numbers::pi, 4))) < 4 * se);

  const auto rov = run("constant --graph 'n:4;edges:1-2,2-3,3-4,1-4' --delta 1 --scale identity --method roverato");
  REQUIRE(rov.code == 0);
  CHECK(field(second_line(rov.out), 1) == doctest::Approx(std::log(8 * std::pow(std::numbers::pi, 4))).epsilon(1e-5));
}

TEST_CASE("constant with a scale file and an output path") {
  const auto dir = scratch();
  {
    std::ofstream(dir / "scale.csv") << "2,0.5,0\n0.5,1.5,0.2\n0,0.2,1\n";
    std::ofstream(dir / "g.txt") << "3 2\n1 2\n2 3\n";
  }
  const auto out = dir / "out.csv";
  fs::remove(out);
  const auto r = run("constant --graph " + (dir / "g.txt").string() + " --delta 2.5 --scale " +
                     (dir / "scale.csv").string() + " --method chordal --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("method,log_value,std_error\nchordal,", 0) == 0);
}

TEST_CASE("complete") {
  const auto dir = scratch();
  std::ofstream(dir / "d.csv") << "2,1\n1,3\n";
  const auto r = run("complete --graph 'n:2' --scale " + (dir / "d.csv").string());
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("2,0\n0,3\n", 0) == 0);
  CHECK(r.out.find("iterations,0") != std::string::npos);
}

TEST_CASE("ratio figure") {
  const auto r = run("ratio-figure --delta-max 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("delta,true_ratio,approx_ratio\n1,0.405285,0.5\n", 0) == 0);
}

TEST_CASE("iris table and violin") {
  const auto t = run("iris-table --data " + kIris);
  REQUIRE(t.code == 0);
  CHECK(t.out.find(",centered\n") != std::string::npos);
  CHECK(run("iris-table --data " + kIris).out == t.out);

  const auto v = run("mc-violin --data " + kIris + " --seeds 5 --samples 200");
  REQUIRE(v.code == 0);
  CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 1 + 15 + 6);
}

TEST_CASE("selfcheck") {
  const auto r = run("selfcheck");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("constant --graph 'n:4;edges:1-2,2-3,3-4,1-4' --delta 1 --method chordal").code == 1);
  CHECK(run("constant --graph 'n:3;edges:1-4' --delta 1").code == 1);
  CHECK(run("constant --graph 'n:2;edges:1-2' --delta -1").code == 1);
  CHECK(run("constant --graph 'n:2;edges:1-2' --delta 1 --method nope").code == 1);
  CHECK(run("iris-table --data /nonexistent.csv").code == 1);
  CHECK(run("iris-table --data " + kIris + " --centering sideways").code == 1);

  const auto dir = scratch();
  std::ifstream in(kIris);
  std::ofstream out(dir / "iris_modified.csv");
  std::string line;
  std::getline(in, line);
  out << line << '\n';
  while (std::getline(in, line)) {
    // Stretch petal length by half; the scatter matrix no longer matches.
    std::istringstream row(line);
    std::string cells[4];
    for (auto& c : cells) std::getline(row, c, ',');
    out << cells[0] << ',' << cells[1] << ',' << 1.5 * std::stod(cells[2]) << ',' << cells[3] << '\n';
  }
  out.close();
  CHECK(run("iris-table --data " + (dir / "iris_modified.csv").string()).code == 2);
}

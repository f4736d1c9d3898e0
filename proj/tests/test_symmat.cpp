#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "gwnc/symmat.hpp"
#include "test_support.hpp"

using namespace gwnc;

namespace {

SymmetricMatrix sym(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return SymmetricMatrix(m);
}

}  // namespace

TEST_CASE("SymmetricMatrix validates symmetry") {
  Matrix m(2, 2);
  m << 1, 0.5, 0.5 + 1e-12, 2;
  const SymmetricMatrix s(m);
  CHECK(s(0, 1) == s(1, 0));
  m(1, 0) = 0.6;
  CHECK_THROWS_AS(SymmetricMatrix{m}, InputError);
  CHECK_THROWS_AS(SymmetricMatrix{Matrix(2, 3)}, InputError);
}

TEST_CASE("is_positive_definite examples") {
  CHECK(is_positive_definite(SymmetricMatrix::identity(4)));
  CHECK_FALSE(is_positive_definite(SymmetricMatrix::diagonal({1, -1})));
  CHECK(is_positive_definite(sym({{1, 0.999}, {0.999, 1}})));
  CHECK_FALSE(is_positive_definite(sym({{1, 1}, {1, 1}})));
}

TEST_CASE("logdet examples") {
  CHECK(logdet(SymmetricMatrix::identity(5)) == 0.0);
  CHECK(logdet(SymmetricMatrix::diagonal({2, 2, 2})) == doctest::Approx(3 * std::log(2.0)).epsilon(1e-15));
  CHECK(logdet(sym({{2, 1}, {1, 2}})) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(logdet(SymmetricMatrix::diagonal({1, -1})), NumericalError);
}

TEST_CASE("logdet matches a cofactor determinant") {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = gwnc::testing::random_pd(n, rng);
      const double oracle = std::log(gwnc::testing::cofactor_det(a.mat()));
      CHECK(std::abs(logdet(a) - oracle) <= 1e-10 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(5);
  const auto a = gwnc::testing::random_pd(4, rng);
  CHECK((a.mat() * inverse(a).mat() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("complex_logdet examples") {
  const auto i2 = SymmetricMatrix::identity(2);
  for (double t : {0.0, 0.3, 1.0, 7.5, 1e3}) {
    const auto v = complex_logdet(i2, {{0, 1}, t});
    CHECK(v.real() == doctest::Approx(std::log1p(t * t)).epsilon(1e-13));
    CHECK(std::abs(v.imag()) < 1e-14);
  }
  const auto v3 = complex_logdet(SymmetricMatrix::identity(3), {{0, 1}, 1.0});
  CHECK(v3.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(std::abs(v3.imag()) < 1e-14);

  std::mt19937_64 rng(9);
  const auto d = gwnc::testing::random_pd(4, rng);
  const auto at0 = complex_logdet(d, {{1, 3}, 0.0});
  CHECK(at0.real() == logdet(d));
  CHECK(at0.imag() == 0.0);
  CHECK_THROWS_AS(complex_logdet(SymmetricMatrix::diagonal({1, -1}), {{0, 1}, 1.0}), NumericalError);
}

TEST_CASE("complex_logdet against the 2x2 closed form") {
  // det [[a, b + it], [b + it, c]] = ac - (b + it)^2, followed continuously from t = 0.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = gwnc::testing::random_pd(2, rng);
    const double a = d(0, 0), b = d(0, 1), c = d(1, 1);
    double prev_phase = 0.0;
    for (int k = 0; k <= 400; ++k) {
      const double t = -50.0 + 0.25 * k;
      const cdouble det = a * c - (b + cdouble(0, t)) * (b + cdouble(0, t));
      const auto v = complex_logdet(d, {{0, 1}, t});
      CHECK(v.real() == doctest::Approx(std::log(std::abs(det))).epsilon(1e-12));
      CHECK(std::abs(std::exp(cdouble(0, v.imag())) - det / std::abs(det)) < 1e-12);
      if (k > 0) CHECK(std::abs(v.imag() - prev_phase) < 0.5);
      prev_phase = v.imag();
    }
  }
}

TEST_CASE("complex_logdet is conjugate symmetric in t") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = gwnc::testing::random_pd(5, rng);
    const Edge e(trial % 4, 4);
    for (double t : {0.1, 1.0, 3.0, 40.0}) {
      const auto plus = complex_logdet(d, {e, t});
      const auto minus = complex_logdet(d, {e, -t});
      CHECK(std::abs(plus - std::conj(minus)) < 1e-12 * std::max(1.0, std::abs(plus)));
    }
  }
}

TEST_CASE("complex_logdet matches a cofactor determinant") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = gwnc::testing::random_pd(4, rng);
    const PerturbationEdge p{{0, 2}, 0.7};
    const auto m = perturb(d, p).mat();
    const cdouble oracle = gwnc::testing::cofactor_det(m);
    const cdouble v = std::exp(complex_logdet(d, p));
    CHECK(std::abs(v - oracle) < 1e-10 * std::abs(oracle));
  }
}

TEST_CASE("LogScalar arithmetic") {
  const auto a = LogScalar::from_value(3.5);
  const auto b = LogScalar::from_value(-2.0);
  const auto c = LogScalar::from_log(200.0);
  CHECK((a * b).real_value() == doctest::Approx(-7.0).epsilon(1e-15));
  CHECK((a / b).real_value() == doctest::Approx(-1.75).epsilon(1e-15));
  CHECK((b * b).is_positive_real());
  CHECK(b.phase() == doctest::Approx(std::numbers::pi));
  CHECK(LogScalar::zero().is_zero());
  CHECK((LogScalar::zero() * a).is_zero());
  CHECK(a.pow(2.0).real_value() == doctest::Approx(12.25).epsilon(1e-14));
  CHECK((c * c).log_magnitude() == 400.0);
  CHECK(LogScalar(0.0, 3 * std::numbers::pi).phase() == doctest::Approx(std::numbers::pi));
  CHECK(LogScalar(0.0, -std::numbers::pi).phase() == doctest::Approx(std::numbers::pi));
  CHECK(LogScalar::from_value(cdouble(0, 2)).phase() == doctest::Approx(std::numbers::pi / 2));

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-50, 50), ph(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const LogScalar x(u(rng), ph(rng)), y(u(rng), ph(rng)), z(u(rng), ph(rng));
    const auto l = (x * y) * z, r = x * (y * z);
    CHECK(std::abs(l.log_magnitude() - r.log_magnitude()) < 2e-12 * 3);
    CHECK(std::abs(std::remainder(l.phase() - r.phase(), 2 * std::numbers::pi)) < 2e-12 * 3);
    const auto q1 = (x / y) / z, q2 = x / (y * z);
    CHECK(std::abs(q1.log_magnitude() - q2.log_magnitude()) < 2e-12 * 3);
  }
}

TEST_CASE("principal_submatrix") {
  const auto a = sym({{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  CHECK(principal_submatrix(a, {0, 2}).mat() == sym({{1, 3}, {3, 6}}).mat());
  CHECK(principal_submatrix(a, {0, 1, 2}).mat() == a.mat());
  CHECK(principal_submatrix(SymmetricMatrix::identity(4), {1, 2}).mat() == Matrix::Identity(2, 2));
  CHECK_THROWS_AS(principal_submatrix(a, {}), InputError);
  CHECK_THROWS_AS(principal_submatrix(a, {3}), InputError);
}

TEST_CASE("scatter_matrix") {
  Matrix one(1, 3);
  one << 1, 2, 3;
  CHECK(scatter_matrix(one, true).mat().isZero());
  Matrix x(2, 1);
  x << 1, 3;
  CHECK(scatter_matrix(x, true)(0, 0) == 2.0);
  CHECK(scatter_matrix(x, false)(0, 0) == 10.0);
  CHECK_THROWS_AS(scatter_matrix(Matrix(0, 2), true), InputError);
}

TEST_CASE("CSV input") {
  const auto m = parse_matrix_csv("2,1\n1,3\n");
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 1) == 3.0);
  CHECK_THROWS_AS(parse_matrix_csv("2,1\n1.1,3\n"), InputError);
  CHECK_THROWS_AS(parse_matrix_csv("2,1\n1\n"), InputError);
  CHECK_THROWS_AS(parse_matrix_csv("2,x\nx,3\n"), InputError);
  CHECK_THROWS_AS(read_matrix_csv("/nonexistent.csv"), InputError);

  const auto data = parse_data_csv("a,b\n1,2\n3,4\n5,6\n");
  CHECK(data.rows() == 3);
  CHECK(data(2, 1) == 6.0);
  CHECK_THROWS_AS(parse_data_csv("a,b\n1,2\n3\n"), InputError);

  std::mt19937_64 rng(2);
  const auto r = gwnc::testing::random_pd(4, rng);
  CHECK(parse_matrix_csv(to_csv(r.mat(), true)).mat() == r.mat());
}

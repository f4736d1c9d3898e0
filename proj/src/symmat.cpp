#include "gwnc/symmat.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace gwnc {

namespace {

template <class M>
M symmetrised(const M& m, double tol, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix is not square");
  if (m.size() == 0) return m;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= tol * scale))
    throw InputError(std::string(what) + ": matrix is not symmetric (max asymmetry " +
                     std::to_string(asym) + ")");
  M out = (m + m.transpose()) / 2.0;
  return out;
}

double wrap_phase(double p) {
  constexpr double pi = std::numbers::pi;
  if (p > -pi && p <= pi) return p;
  double r = std::remainder(p, 2 * pi);
  if (r <= -pi) r += 2 * pi;
  return r;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const Matrix& m, double tol)
    : m_(symmetrised(m, tol, "SymmetricMatrix")) {}

SymmetricMatrix SymmetricMatrix::identity(int n) { return SymmetricMatrix(Matrix::Identity(n, n)); }

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymmetricMatrix(m);
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& o) const {
  if (size() != o.size()) throw InputError("dimension mismatch in matrix sum");
  return SymmetricMatrix(m_ + o.m_);
}

ComplexSymmetricMatrix::ComplexSymmetricMatrix(const ComplexMatrix& m, double tol)
    : m_(symmetrised(m, tol, "ComplexSymmetricMatrix")) {}

ComplexSymmetricMatrix perturb(const SymmetricMatrix& d, const PerturbationEdge& p) {
  const int n = d.size();
  if (p.edge.u < 0 || p.edge.v >= n) throw InputError("perturbation edge outside matrix");
  ComplexMatrix m = d.mat().cast<cdouble>();
  m(p.edge.u, p.edge.v) += cdouble(0.0, p.t);
  m(p.edge.v, p.edge.u) += cdouble(0.0, p.t);
  return ComplexSymmetricMatrix(m);
}

LogScalar::LogScalar(double log_magnitude, double phase)
    : log_mag_(log_magnitude), phase_(wrap_phase(phase)) {
  if (std::isnan(log_magnitude) || std::isnan(phase)) throw NumericalError("LogScalar: NaN");
  if (is_zero()) phase_ = 0.0;
}

LogScalar LogScalar::from_value(double v) {
  if (v == 0.0) return zero();
  return LogScalar(std::log(std::abs(v)), v < 0 ? std::numbers::pi : 0.0);
}

LogScalar LogScalar::from_value(cdouble v) {
  if (v == 0.0) return zero();
  return LogScalar(std::log(std::abs(v)), std::arg(v));
}

cdouble LogScalar::value() const {
  if (is_zero()) return 0.0;
  return std::polar(std::exp(log_mag_), phase_);
}

LogScalar LogScalar::operator*(const LogScalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return LogScalar(log_mag_ + o.log_mag_, phase_ + o.phase_);
}

LogScalar LogScalar::operator/(const LogScalar& o) const {
  if (o.is_zero()) throw NumericalError("LogScalar: division by zero");
  if (is_zero()) return zero();
  return LogScalar(log_mag_ - o.log_mag_, phase_ - o.phase_);
}

LogScalar LogScalar::pow(double exponent) const {
  if (is_zero()) {
    if (exponent > 0) return zero();
    throw NumericalError("LogScalar: non-positive power of zero");
  }
  return LogScalar(exponent * log_mag_, exponent * phase_);
}

bool cholesky_lower(const SymmetricMatrix& a, Matrix& lower) {
  const int n = a.size();
  lower = Matrix::Zero(n, n);
  if (n == 0) return true;
  const double floor = 1e-12 * a.mat().diagonal().maxCoeff();
  for (int j = 0; j < n; ++j) {
    double pivot = a(j, j);
    for (int k = 0; k < j; ++k) pivot -= lower(j, k) * lower(j, k);
    if (!(pivot > floor) || !(pivot > 0)) return false;
    lower(j, j) = std::sqrt(pivot);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = s / lower(j, j);
    }
  }
  return true;
}

bool is_positive_definite(const SymmetricMatrix& a) {
  Matrix l;
  return cholesky_lower(a, l);
}

double logdet(const SymmetricMatrix& a) {
  Matrix l;
  if (!cholesky_lower(a, l)) throw NumericalError("logdet: matrix is not positive definite");
  return 2.0 * l.diagonal().array().log().sum();
}

SymmetricMatrix inverse(const SymmetricMatrix& a) {
  Matrix l;
  if (!cholesky_lower(a, l)) throw NumericalError("inverse: matrix is not positive definite");
  const Matrix linv = l.triangularView<Eigen::Lower>().solve(Matrix::Identity(a.size(), a.size()));
  return SymmetricMatrix(linv.transpose() * linv);
}

cdouble complex_logdet(const ComplexSymmetricMatrix& a) {
  ComplexMatrix lu = a.mat();
  const int n = a.size();
  cdouble acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const cdouble pivot = lu(k, k);
    if (pivot == 0.0) throw NumericalError("complex_logdet: zero pivot");
    acc += std::log(pivot);
    for (int i = k + 1; i < n; ++i) {
      const cdouble f = lu(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return acc;
}

cdouble complex_logdet(const SymmetricMatrix& d, const PerturbationEdge& p) {
  if (!is_positive_definite(d)) throw NumericalError("complex_logdet: real part is not positive definite");
  return complex_logdet(perturb(d, p));
}

SymmetricMatrix principal_submatrix(const SymmetricMatrix& a, const std::vector<int>& idx) {
  return SymmetricMatrix(principal_submatrix(a.mat(), idx));
}

ComplexSymmetricMatrix principal_submatrix(const ComplexSymmetricMatrix& a,
                                           const std::vector<int>& idx) {
  return ComplexSymmetricMatrix(principal_submatrix(a.mat(), idx));
}

SymmetricMatrix scatter_matrix(const Matrix& rows, bool centered) {
  if (rows.rows() < 1 || rows.cols() < 1) throw InputError("scatter_matrix: empty data table");
  Matrix x = rows;
  if (centered) x.rowwise() -= x.colwise().mean();
  return SymmetricMatrix(x.transpose() * x);
}

namespace {

std::vector<std::vector<double>> parse_rows(const std::string& text, bool skip_header) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool first = true;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw InputError("CSV line " + std::to_string(lineno) + ": not a number: '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("CSV line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SymmetricMatrix parse_matrix_csv(const std::string& text) {
  const Matrix m = to_matrix(parse_rows(text, false));
  if (m.rows() == 0 || m.rows() != m.cols()) throw InputError("matrix CSV must be n x n");
  return SymmetricMatrix(m, 1e-9);
}

SymmetricMatrix read_matrix_csv(const std::string& path) { return parse_matrix_csv(slurp(path)); }

Matrix parse_data_csv(const std::string& text) {
  Matrix m = to_matrix(parse_rows(text, true));
  if (m.rows() == 0) throw InputError("data CSV has no rows");
  return m;
}

Matrix read_data_csv(const std::string& path) { return parse_data_csv(slurp(path)); }

std::string to_csv(const Matrix& m, bool full_precision) {
  std::ostringstream os;
  os << std::setprecision(full_precision ? 17 : 6);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace gwnc

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gwnc/errors.hpp"
#include "gwnc/graph.hpp"

namespace gwnc {

using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using cdouble = std::complex<double>;

/// Real symmetric matrix.  Symmetry is enforced on construction: inputs whose
/// asymmetry exceeds `tol` (relative to the largest entry) are rejected, the
/// rest are symmetrised by averaging.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(const Matrix& m, double tol = 1e-9);

  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  int size() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& mat() const { return m_; }

  SymmetricMatrix operator+(const SymmetricMatrix& o) const;

 private:
  Matrix m_;
};

/// Complex symmetric (not Hermitian) matrix, e.g. D + i t E.
class ComplexSymmetricMatrix {
 public:
  ComplexSymmetricMatrix() = default;
  explicit ComplexSymmetricMatrix(const ComplexMatrix& m, double tol = 1e-9);

  int size() const { return static_cast<int>(m_.rows()); }
  cdouble operator()(int i, int j) const { return m_(i, j); }
  const ComplexMatrix& mat() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// t times the symmetric indicator matrix of one edge.
struct PerturbationEdge {
  Edge edge;
  double t = 0.0;
};

/// d + i t E for the edge in p.
ComplexSymmetricMatrix perturb(const SymmetricMatrix& d, const PerturbationEdge& p);

/// A real or complex number held as exp(log_magnitude) * exp(i phase), with
/// phase in (-pi, pi].  Zero has log_magnitude = -inf.
class LogScalar {
 public:
  LogScalar() = default;
  LogScalar(double log_magnitude, double phase);

  static LogScalar from_log(double log_value) { return LogScalar(log_value, 0.0); }
  /// From a complex logarithm; the imaginary part may be any real number.
  static LogScalar from_log(cdouble log_value) { return LogScalar(log_value.real(), log_value.imag()); }
  static LogScalar from_value(double v);
  static LogScalar from_value(cdouble v);
  static LogScalar zero() { return LogScalar(-std::numeric_limits<double>::infinity(), 0.0); }
  static LogScalar one() { return LogScalar(0.0, 0.0); }

  double log_magnitude() const { return log_mag_; }
  double phase() const { return phase_; }
  bool is_zero() const { return std::isinf(log_mag_) && log_mag_ < 0; }
  /// True for a real positive value.
  bool is_positive_real() const { return !is_zero() && phase_ == 0.0; }

  cdouble value() const;
  double real_value() const { return value().real(); }

  LogScalar operator*(const LogScalar& o) const;
  LogScalar operator/(const LogScalar& o) const;
  LogScalar pow(double exponent) const;

 private:
  double log_mag_ = 0.0;
  double phase_ = 0.0;
};

/// Cholesky with a scale-aware pivot floor: every pivot must exceed
/// 1e-12 * max(diag(a)).  Returns false instead of throwing.
bool cholesky_lower(const SymmetricMatrix& a, Matrix& lower);

bool is_positive_definite(const SymmetricMatrix& a);

/// log det(a) via Cholesky; throws NumericalError if a is not PD.
double logdet(const SymmetricMatrix& a);

SymmetricMatrix inverse(const SymmetricMatrix& a);

/// Continuous-branch logarithm of det(a) computed by LU without pivoting,
/// summing principal logarithms of the pivots.  When the Hermitian part of a
/// is positive definite every pivot lies in the open right half-plane, so
/// the sum is the branch reached continuously from the real positive
/// determinant.  The imaginary part is NOT wrapped into (-pi, pi].
cdouble complex_logdet(const ComplexSymmetricMatrix& a);

/// log det(d + i t E); d must be PD.
cdouble complex_logdet(const SymmetricMatrix& d, const PerturbationEdge& p);

template <class Derived>
auto principal_submatrix(const Eigen::MatrixBase<Derived>& a, const std::vector<int>& idx) {
  using Plain = typename Derived::PlainObject;
  if (idx.empty()) throw InputError("principal_submatrix: empty index set");
  for (int i : idx)
    if (i < 0 || i >= a.rows()) throw InputError("principal_submatrix: index out of range");
  const int k = static_cast<int>(idx.size());
  Plain out(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) out(r, c) = a(idx[r], idx[c]);
  return out;
}

SymmetricMatrix principal_submatrix(const SymmetricMatrix& a, const std::vector<int>& idx);
ComplexSymmetricMatrix principal_submatrix(const ComplexSymmetricMatrix& a,
                                           const std::vector<int>& idx);

/// rows: N x n data table.  Centered: sum (x_i - mean)(x_i - mean)^T,
/// otherwise sum x_i x_i^T.
SymmetricMatrix scatter_matrix(const Matrix& rows, bool centered);

/// n lines of n comma-separated values; asymmetry above 1e-9 is rejected.
SymmetricMatrix read_matrix_csv(const std::string& path);
SymmetricMatrix parse_matrix_csv(const std::string& text);
/// Numeric CSV with a one-line header; returns the data rows.
Matrix read_data_csv(const std::string& path);
Matrix parse_data_csv(const std::string& text);

std::string to_csv(const Matrix& m, bool full_precision = true);

}  // namespace gwnc

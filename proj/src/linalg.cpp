#include "flsde/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

constexpr double kSingularRelTol = 1e-12;
constexpr double kPadeScaleLimit = 0.5;

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw InvalidInputError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Matrix::Matrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n_ == 0) throw InvalidInputError("Matrix: dimension must be at least 1");
  if (a_.size() != n_ * n_) {
    throw InvalidInputError("Matrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                            std::to_string(a_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  if (n_ == 0) throw InvalidInputError("Matrix: dimension must be at least 1");
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidInputError("Matrix: ragged initializer");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool Matrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix sum");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix difference");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(double k, const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = k * a(i, j);
  return out;
}

Vec operator*(const Matrix& a, const Vec& x) {
  require_same_dim(a.dim(), x.size(), "matrix-vector product");
  const std::size_t n = a.dim();
  Vec out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size(), "vector sum");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size(), "vector difference");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(double k, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

double infinity_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

double infinity_norm(const Vec& x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

double euclidean_norm(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

LuFactors::LuFactors(const Matrix& m) : lu_(m), piv_(m.dim()) {
  const std::size_t n = m.dim();
  for (double v : m.entries()) max_entry_ = std::max(max_entry_, std::abs(v));
  for (std::size_t i = 0; i < n; ++i) piv_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(piv_[k], piv_[p]);
      sign_ = -sign_;
    }
    const double pivot = lu_(k, k);
    if (pivot == 0.0) continue;  // leaves a zero pivot; solve() will reject it
    for (std::size_t i = k + 1; i < n; ++i) {
      lu_(i, k) /= pivot;
      const double lik = lu_(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= lik * lu_(k, j);
    }
  }
}

bool LuFactors::is_singular() const {
  const double threshold = kSingularRelTol * max_entry_;
  for (std::size_t k = 0; k < lu_.dim(); ++k) {
    if (std::abs(lu_(k, k)) <= threshold) return true;
  }
  return false;
}

Vec LuFactors::solve(const Vec& rhs) const {
  const std::size_t n = lu_.dim();
  require_same_dim(n, rhs.size(), "linear solve");
  if (is_singular()) {
    throw SingularMatrixError("linear solve: matrix is numerically singular");
  }

  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[piv_[i]];
  // forward substitution (unit lower triangle)
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x[j];
    x[ii] = s / lu_(ii, ii);
  }
  return x;
}

double LuFactors::determinant() const {
  double det = sign_;
  for (std::size_t k = 0; k < lu_.dim(); ++k) det *= lu_(k, k);
  return det;
}

Vec lu_solve(const Matrix& m, const Vec& rhs) { return LuFactors(m).solve(rhs); }

double determinant(const Matrix& m) { return LuFactors(m).determinant(); }

Matrix mat_exp(const Matrix& a, double t) {
  if (!a.all_finite() || !std::isfinite(t)) {
    throw InvalidInputError("mat_exp: non-finite input");
  }
  const std::size_t n = a.dim();
  const Matrix at = t * a;

  // Scale so the Pade argument stays within its accuracy radius.
  const double norm = infinity_norm(at);
  int squarings = 0;
  if (norm > kPadeScaleLimit) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kPadeScaleLimit)));
  }
  const Matrix b = std::ldexp(1.0, -squarings) * at;

  // Degree-6 diagonal Pade approximant: e^B ~ (V - U)^{-1} (V + U)
  // with U the odd and V the even part of the numerator polynomial.
  static constexpr double c[7] = {1.0,       1.0 / 2.0,     5.0 / 44.0,    1.0 / 66.0,
                                  1.0 / 792, 1.0 / 15840.0, 1.0 / 665280.0};
  const Matrix b2 = b * b;
  const Matrix b4 = b2 * b2;
  const Matrix ident = Matrix::identity(n);
  const Matrix u = b * (c[1] * ident + c[3] * b2 + c[5] * b4);
  const Matrix v = c[0] * ident + c[2] * b2 + c[4] * b4 + c[6] * (b4 * b2);

  const LuFactors denom(v - u);
  const Matrix numer = v + u;
  Matrix f(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = denom.solve(numer.column(j));
    for (std::size_t i = 0; i < n; ++i) f(i, j) = col[i];
  }

  for (int s = 0; s < squarings; ++s) f = f * f;

  if (!f.all_finite()) {
    throw NumericError("mat_exp: exponential overflows the floating-point range");
  }
  return f;
}

std::vector<Vec> fundamental_columns(const Matrix& a, double t) {
  const Matrix g = mat_exp(a, t);
  std::vector<Vec> cols;
  cols.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(g.column(j));
  return cols;
}

}  // namespace flsde

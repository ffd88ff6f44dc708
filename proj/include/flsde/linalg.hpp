#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace flsde {

using Vec = std::vector<double>;

/// Dense square matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& entries() const { return a_; }

  Vec column(std::size_t j) const;
  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double k, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& x);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double k, const Vec& a);

double infinity_norm(const Matrix& a);
double infinity_norm(const Vec& x);
double euclidean_norm(const Vec& x);

/// LU factorization with partial pivoting, kept for repeated solves.
/// Factoring never fails; solve() rejects numerically singular factors.
class LuFactors {
 public:
  explicit LuFactors(const Matrix& m);

  /// Back-substitution. Throws SingularMatrixError when the smallest pivot
  /// falls below 1e-12 times the largest entry of the original matrix.
  Vec solve(const Vec& rhs) const;

  double determinant() const;
  bool is_singular() const;

 private:
  Matrix lu_;
  std::vector<std::size_t> piv_;
  int sign_ = 1;
  double max_entry_ = 0.0;
};

Vec lu_solve(const Matrix& m, const Vec& rhs);
double determinant(const Matrix& m);

/// Matrix exponential e^{At} by scaling-and-squaring with a degree-6
/// diagonal Pade approximant; the scaled norm is kept at or below 1/2.
/// Throws NumericError if entries of the result overflow.
Matrix mat_exp(const Matrix& a, double t);

/// Columns of e^{At}: the homogeneous solutions started from the standard
/// basis vectors. Column i equals mat_exp(a, t) * e_i exactly.
std::vector<Vec> fundamental_columns(const Matrix& a, double t);

}  // namespace flsde

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "flsde/interval.hpp"

namespace flsde {

/// Fuzzy number in parametric form: a pair of branch functions
/// (lower(r), upper(r)) sampled on a level grid r in [0, 1] and evaluated
/// between samples by linear interpolation. The lower branch is
/// nondecreasing, the upper branch nonincreasing, and lower <= upper at
/// every level, so the alpha-cuts [lower(a), upper(a)] are nested.
class FuzzyNumber {
 public:
  /// Level grid used when sampling branch expressions.
  static constexpr std::size_t kDefaultLevels = 101;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  /// Branch values at an arbitrary level, by interpolation; exact at grid nodes.
  double lower_at(double r) const;
  double upper_at(double r) const;

  Interval support() const { return {lower_.front(), upper_.front()}; }
  Interval core() const { return {lower_.back(), upper_.back()}; }
  bool is_crisp() const { return lower_.front() == upper_.front(); }

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

  friend FuzzyNumber make_parametric(std::vector<double> levels, std::vector<double> lower_values,
                                     std::vector<double> upper_values);

 private:
  FuzzyNumber() = default;

  std::vector<double> grid_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Triangular fuzzy number (a, c, b): support [a, b], peak at c, linear
/// branches lower(r) = a + (c-a)r and upper(r) = b + (c-b)r.
struct Triangular {
  double a = 0.0;
  double c = 0.0;
  double b = 0.0;

  friend bool operator==(const Triangular&, const Triangular&) = default;
};

/// Builds the triangular number on the exact two-point grid {0, 1}.
/// Requires a <= c <= b; the degenerate cases a == c or c == b are allowed.
FuzzyNumber make_triangular(double a, double c, double b);
FuzzyNumber make_triangular(const Triangular& tri);

/// A crisp value, represented with both branches constant.
FuzzyNumber make_crisp(double value);

/// Builds a fuzzy number from sampled branch values. Validates all
/// invariants and names the offending index on failure.
FuzzyNumber make_parametric(std::vector<double> levels, std::vector<double> lower_values,
                            std::vector<double> upper_values);

/// Samples two branch expressions on a uniform grid of `levels` points.
FuzzyNumber sample_parametric(const std::function<double(double)>& lower_fn,
                              const std::function<double(double)>& upper_fn,
                              std::size_t levels = FuzzyNumber::kDefaultLevels);

/// The alpha-cut [lower(alpha), upper(alpha)]; alpha = 0 gives the support,
/// alpha = 1 the core. Throws for alpha outside [0, 1].
Interval alpha_cut(const FuzzyNumber& u, double alpha);

/// Membership grade of x: 0 outside the support, 1 on the core, otherwise
/// the level at which the monotone branch through x is crossed.
double membership(const FuzzyNumber& u, double x);

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scale(double k, const FuzzyNumber& u);
FuzzyNumber sub(const FuzzyNumber& u, const FuzzyNumber& v);

/// Translation by a crisp value: both branches shifted by s.
FuzzyNumber shift(const FuzzyNumber& u, double s);

}  // namespace flsde

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "flsde/linalg.hpp"

namespace flsde {

/// Right-hand side forcing F(t). Scenario files carry per-component
/// polynomial coefficient lists (c0 + c1 t + ... + cd t^d, d <= 16); code
/// may also supply an arbitrary component-wise function of t.
class Forcing {
 public:
  static constexpr std::size_t kMaxPolynomialDegree = 16;

  static Forcing zero(std::size_t n);
  static Forcing polynomial(std::vector<std::vector<double>> coefficients);
  static Forcing function(std::size_t n, std::function<Vec(double)> fn);

  std::size_t dim() const { return n_; }
  Vec eval(double t) const;
  void eval_into(double t, Vec& out) const;

  bool is_polynomial() const { return !coefficients_.empty() || !fn_; }
  const std::vector<std::vector<double>>& coefficients() const { return coefficients_; }

 private:
  Forcing() = default;

  std::size_t n_ = 0;
  std::vector<std::vector<double>> coefficients_;
  std::function<Vec(double)> fn_;
};

/// Fixed-step RK4 trajectory with stored states and slopes at uniform
/// nodes; values between nodes come from cubic Hermite interpolation.
class CrispTrajectory {
 public:
  /// State at time t; a stored node returns the stored state unchanged.
  Vec at(double t) const;

  double t0() const { return times_.front(); }
  double t_end() const { return times_.back(); }
  double step() const { return h_; }
  std::size_t dim() const { return states_.empty() ? 0 : states_.front().size(); }

  const std::vector<double>& times() const { return times_; }
  const std::vector<Vec>& states() const { return states_; }

  friend CrispTrajectory integrate(const Matrix& a, const Forcing& f, double t0, const Vec& b_cr,
                                   double t_end, double h);

 private:
  CrispTrajectory() = default;

  double h_ = 0.0;
  std::vector<double> times_;
  std::vector<Vec> states_;
  std::vector<Vec> slopes_;  // A x + F(t) at each node
};

/// Integrates x' = A x + F(t), x(t0) = b_cr up to t_end with classical
/// RK4 at fixed step h (last step shortened to land on t_end exactly).
/// Throws DivergenceError if the state stops being finite.
CrispTrajectory integrate(const Matrix& a, const Forcing& f, double t0, const Vec& b_cr,
                          double t_end, double h);

/// Same RK4 scheme, but propagates a single point without storing nodes.
Vec propagate(const Matrix& a, const Forcing& f, double t0, Vec x0, double t_end, double h);

/// Finite-difference defect of the trajectory against x' = A x + F(t) at
/// time t, using a centered stencil of half-width 1e-5. Near-zero output
/// certifies that the stored trajectory solves the system.
Vec residual(const CrispTrajectory& traj, const Matrix& a, const Forcing& f, double t);

}  // namespace flsde

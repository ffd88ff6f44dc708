#include "flsde/crisp_ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

bool all_finite(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

// Classical RK4 with reusable stage buffers; the oracles take millions of
// steps, so the inner loop must not allocate.
class Rk4Stepper {
 public:
  Rk4Stepper(const Matrix& a, const Forcing& f)
      : a_(a), f_(f), n_(a.dim()), k1_(n_), k2_(n_), k3_(n_), k4_(n_), mid_(n_) {}

  void rhs(double t, const Vec& x, Vec& out) {
    f_.eval_into(t, out);
    for (std::size_t i = 0; i < n_; ++i) {
      double s = out[i];
      for (std::size_t j = 0; j < n_; ++j) s += a_(i, j) * x[j];
      out[i] = s;
    }
  }

  Vec slope(double t, const Vec& x) {
    Vec out(n_);
    rhs(t, x, out);
    return out;
  }

  void step(double t, double h, Vec& x) {
    rhs(t, x, k1_);
    stage(x, 0.5 * h, k1_);
    rhs(t + 0.5 * h, mid_, k2_);
    stage(x, 0.5 * h, k2_);
    rhs(t + 0.5 * h, mid_, k3_);
    stage(x, h, k3_);
    rhs(t + h, mid_, k4_);
    const double w = h / 6.0;
    for (std::size_t i = 0; i < n_; ++i) {
      x[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }
  }

 private:
  void stage(const Vec& x, double h, const Vec& k) {
    for (std::size_t i = 0; i < n_; ++i) mid_[i] = x[i] + h * k[i];
  }

  const Matrix& a_;
  const Forcing& f_;
  std::size_t n_;
  Vec k1_, k2_, k3_, k4_, mid_;
};

void check_setup(const Matrix& a, const Forcing& f, double t0, const Vec& x0, double t_end,
                 double h) {
  if (a.dim() != f.dim() || a.dim() != x0.size()) {
    throw InvalidInputError("integrate: matrix, forcing and initial vector dimensions disagree");
  }
  if (!(h > 0.0)) throw InvalidInputError("integrate: step size must be positive");
  if (!(t_end > t0)) throw InvalidInputError("integrate: t_end must exceed t0");
  if (!a.all_finite() || !all_finite(x0)) {
    throw InvalidInputError("integrate: non-finite input");
  }
}

}  // namespace

Forcing Forcing::zero(std::size_t n) {
  return polynomial(std::vector<std::vector<double>>(n, std::vector<double>{0.0}));
}

Forcing Forcing::polynomial(std::vector<std::vector<double>> coefficients) {
  Forcing f;
  f.n_ = coefficients.size();
  if (f.n_ == 0) throw InvalidInputError("Forcing: need at least one component");
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    auto& c = coefficients[i];
    if (c.empty()) c.push_back(0.0);
    if (c.size() > kMaxPolynomialDegree + 1) {
      throw InvalidInputError("Forcing: component " + std::to_string(i) + " exceeds degree " +
                              std::to_string(kMaxPolynomialDegree));
    }
    for (double v : c) {
      if (!std::isfinite(v)) {
        throw InvalidInputError("Forcing: non-finite coefficient in component " +
                                std::to_string(i));
      }
    }
  }
  f.coefficients_ = std::move(coefficients);
  return f;
}

Forcing Forcing::function(std::size_t n, std::function<Vec(double)> fn) {
  if (n == 0) throw InvalidInputError("Forcing: need at least one component");
  if (!fn) throw InvalidInputError("Forcing: empty function");
  Forcing f;
  f.n_ = n;
  f.fn_ = std::move(fn);
  return f;
}

Vec Forcing::eval(double t) const {
  Vec out(n_);
  eval_into(t, out);
  return out;
}

void Forcing::eval_into(double t, Vec& out) const {
  if (fn_) {
    out = fn_(t);
    if (out.size() != n_) throw NumericError("Forcing: function returned wrong dimension");
    return;
  }
  out.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto& c = coefficients_[i];
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    out[i] = v;
  }
}

CrispTrajectory integrate(const Matrix& a, const Forcing& f, double t0, const Vec& b_cr,
                          double t_end, double h) {
  check_setup(a, f, t0, b_cr, t_end, h);

  const double total = t_end - t0;
  std::size_t full_steps = static_cast<std::size_t>(std::floor(total / h + 1e-9));
  double tail = total - static_cast<double>(full_steps) * h;
  if (tail <= 1e-12 * std::max(1.0, std::abs(t_end)) && full_steps > 0) {
    tail = 0.0;  // graceful landing on t_end despite roundoff in total/h
  }

  CrispTrajectory traj;
  traj.h_ = h;
  const std::size_t nodes = full_steps + (tail > 0.0 ? 2 : 1);
  traj.times_.reserve(nodes);
  traj.states_.reserve(nodes);
  traj.slopes_.reserve(nodes);

  Rk4Stepper stepper(a, f);
  Vec x = b_cr;
  traj.times_.push_back(t0);
  traj.states_.push_back(x);
  traj.slopes_.push_back(stepper.slope(t0, x));

  for (std::size_t k = 0; k < full_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    stepper.step(t, h, x);
    const double t_next = (k + 1 == full_steps && tail == 0.0)
                              ? t_end
                              : t0 + static_cast<double>(k + 1) * h;
    if (!all_finite(x)) {
      throw DivergenceError("integrate: non-finite state at t = " + std::to_string(t_next),
                            t_next);
    }
    traj.times_.push_back(t_next);
    traj.states_.push_back(x);
    traj.slopes_.push_back(stepper.slope(t_next, x));
  }

  if (tail > 0.0) {
    const double t = traj.times_.back();
    stepper.step(t, t_end - t, x);
    if (!all_finite(x)) {
      throw DivergenceError("integrate: non-finite state at t = " + std::to_string(t_end), t_end);
    }
    traj.times_.push_back(t_end);
    traj.states_.push_back(x);
    traj.slopes_.push_back(stepper.slope(t_end, x));
  }
  return traj;
}

Vec propagate(const Matrix& a, const Forcing& f, double t0, Vec x0, double t_end, double h) {
  if (t_end == t0) return x0;
  check_setup(a, f, t0, x0, t_end, h);

  const double total = t_end - t0;
  std::size_t full_steps = static_cast<std::size_t>(std::floor(total / h + 1e-9));
  double tail = total - static_cast<double>(full_steps) * h;
  if (tail <= 1e-12 * std::max(1.0, std::abs(t_end)) && full_steps > 0) tail = 0.0;

  Rk4Stepper stepper(a, f);
  for (std::size_t k = 0; k < full_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    stepper.step(t, h, x0);
    if (!all_finite(x0)) {
      throw DivergenceError("propagate: non-finite state at t = " + std::to_string(t + h), t + h);
    }
  }
  if (tail > 0.0) {
    const double t = t0 + static_cast<double>(full_steps) * h;
    stepper.step(t, t_end - t, x0);
    if (!all_finite(x0)) {
      throw DivergenceError("propagate: non-finite state at t = " + std::to_string(t_end), t_end);
    }
  }
  return x0;
}

Vec CrispTrajectory::at(double t) const {
  if (t < t0() || t > t_end()) {
    throw InvalidInputError("trajectory: time " + std::to_string(t) + " is outside [" +
                            std::to_string(t0()) + ", " + std::to_string(t_end()) + "]");
  }
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - times_.begin());
  if (k < times_.size() && times_[k] == t) return states_[k];
  --k;  // t is strictly between nodes k and k+1

  // Cubic Hermite on [t_k, t_{k+1}] from stored states and slopes.
  const double span = times_[k + 1] - times_[k];
  const double s = (t - times_[k]) / span;
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  Vec out(dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = h00 * states_[k][i] + h10 * span * slopes_[k][i] + h01 * states_[k + 1][i] +
             h11 * span * slopes_[k + 1][i];
  }
  return out;
}

Vec residual(const CrispTrajectory& traj, const Matrix& a, const Forcing& f, double t) {
  const double dt = 1e-5;
  if (t < traj.t0() + traj.step() || t > traj.t_end() - traj.step()) {
    throw InvalidInputError("residual: time must lie one step inside the trajectory range");
  }
  const Vec forward = traj.at(t + dt);
  const Vec backward = traj.at(t - dt);
  const Vec derivative = (1.0 / (2.0 * dt)) * (forward - backward);
  return derivative - Rk4Stepper(a, f).slope(t, traj.at(t));
}

}  // namespace flsde

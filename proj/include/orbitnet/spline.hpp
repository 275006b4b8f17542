#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace orbitnet {

/// Natural cubic spline interpolant (zero second derivative at the endpoints).
/// Exact at knots; C2 at interior knots. With two knots it degenerates to the
/// linear interpolant. Evaluation outside the knot range extrapolates the
/// boundary cubic.
class CubicSpline {
 public:
  CubicSpline() = default;

  /// Fit through (t, y) pairs with strictly increasing t.
  /// Throws DegenerateInput (< 2 points) or DuplicateKnot.
  static CubicSpline fit(const Eigen::VectorXd& t, const Eigen::VectorXd& y);

  double operator()(double t) const;

  int piece_count() const { return static_cast<int>(t_.size()) - 1; }
  const Eigen::VectorXd& knots() const { return t_; }
  const Eigen::VectorXd& values() const { return y_; }

  /// Coefficients of piece i in the local basis u = t - knots()[i]:
  /// value = c[0] + c[1] u + c[2] u^2 + c[3] u^3.
  Eigen::Vector4d piece_coeffs(int i) const { return {y_[i], b_[i], c_[i], d_[i]}; }

 private:
  Eigen::VectorXd t_, y_, b_, c_, d_;
};

CubicSpline fit_spline(const std::vector<std::pair<double, double>>& points);

inline double eval_spline(const CubicSpline& s, double t) { return s(t); }

}  // namespace orbitnet

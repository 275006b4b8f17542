#include "orbitnet/spline.hpp"

#include <algorithm>

#include "orbitnet/errors.hpp"

namespace orbitnet {

CubicSpline CubicSpline::fit(const Eigen::VectorXd& t, const Eigen::VectorXd& y) {
  const auto n = t.size();
  if (n != y.size()) throw DegenerateInput("spline: t/y size mismatch");
  if (n < 2) throw DegenerateInput("spline: need at least 2 points");
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (t[i + 1] == t[i]) throw DuplicateKnot("spline: duplicate knot t=" + std::to_string(t[i]));
    if (t[i + 1] < t[i]) throw DegenerateInput("spline: knots must be strictly increasing");
  }

  const Eigen::VectorXd h = t.tail(n - 1) - t.head(n - 1);

  // Second derivatives m at the knots, natural boundary m[0] = m[n-1] = 0.
  // Tridiagonal system solved with the Thomas algorithm.
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  if (n > 2) {
    const auto k = n - 2;  // interior knots
    Eigen::VectorXd diag(k), rhs(k), upper(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      diag[i] = 2.0 * (h[i] + h[i + 1]);
      upper[i] = h[i + 1];
      rhs[i] = 6.0 * ((y[i + 2] - y[i + 1]) / h[i + 1] - (y[i + 1] - y[i]) / h[i]);
    }
    for (Eigen::Index i = 1; i < k; ++i) {
      const double w = h[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    m[k] = rhs[k - 1] / diag[k - 1];
    for (Eigen::Index i = k - 1; i >= 1; --i) m[i] = (rhs[i - 1] - upper[i - 1] * m[i + 1]) / diag[i - 1];
  }

  CubicSpline s;
  s.t_ = t;
  s.y_ = y;
  s.b_.resize(n - 1);
  s.c_.resize(n - 1);
  s.d_.resize(n - 1);
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    s.b_[i] = (y[i + 1] - y[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    s.c_[i] = m[i] / 2.0;
    s.d_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
  return s;
}

double CubicSpline::operator()(double t) const {
  const auto n = t_.size();
  // Locate the piece; clamp to boundary pieces for extrapolation.
  Eigen::Index i = std::upper_bound(t_.data(), t_.data() + n, t) - t_.data();
  i = std::clamp<Eigen::Index>(i - 1, 0, n - 2);
  const double u = t - t_[i];
  return y_[i] + u * (b_[i] + u * (c_[i] + u * d_[i]));
}

CubicSpline fit_spline(const std::vector<std::pair<double, double>>& points) {
  Eigen::VectorXd t(points.size()), y(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    t[static_cast<Eigen::Index>(i)] = points[i].first;
    y[static_cast<Eigen::Index>(i)] = points[i].second;
  }
  return CubicSpline::fit(t, y);
}

}  // namespace orbitnet

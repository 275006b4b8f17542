#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "orbitnet/spline.hpp"

namespace orbitnet {

/// Symbol sequence over an integer alphabet, as produced by envelope tracking.
struct DSSequence {
  std::vector<int> symbols;
  int alphabet_size = 0;
};

/**
 * True iff the sequence is Davenport-Schinzel of the given order: no two
 * adjacent symbols are equal and no pair of symbols alternates
 * ...a...b...a...b... with length order + 2. Per-pair linear scan.
 */
bool check_ds_sequence(const DSSequence& seq, int order);

/// Maximal DS-sequence length: lambda_1(n) = n, lambda_2(n) = 2n - 1.
/// Throws Unsupported for order >= 3 (no closed form).
long long ds_bound(long long n, int order);

/**
 * Univariate piecewise polynomial of degree <= 3. Pieces cover
 * [breakpoints.front(), breakpoints.back()] with no gaps; coefficients of
 * piece i are in the local basis u = t - breakpoints[i]. Evaluation outside
 * the domain clamps to the boundary piece.
 */
struct PiecewiseFunction {
  int label = 0;
  Eigen::VectorXd breakpoints;
  Eigen::MatrixX4d coeffs;

  double eval(double t) const;
  double domain_start() const { return breakpoints[0]; }
  double domain_end() const { return breakpoints[breakpoints.size() - 1]; }

  static PiecewiseFunction constant(int label, double lo, double hi, double value);
  /// Single piece from global-basis coefficients a0 + a1 t + a2 t^2 + a3 t^3.
  static PiecewiseFunction from_poly(int label, double lo, double hi,
                                     const Eigen::Vector4d& global_coeffs);
  static PiecewiseFunction from_spline(int label, const CubicSpline& s);
};

struct Envelope {
  DSSequence sequence;            ///< argmax labels, adjacent duplicates merged
  std::vector<double> breakpoints;  ///< transition times between labels
};

/**
 * Upper envelope of the functions over the interval: the ordered sequence of
 * argmax labels with transition times. Transitions are located by pairwise
 * crossing root isolation refined below 1e-9; ties resolve to the lowest
 * label.
 */
Envelope upper_envelope(const std::vector<PiecewiseFunction>& fns, std::array<double, 2> interval);

/**
 * Computes the upper envelope and checks that its label sequence is
 * Davenport-Schinzel of order max_crossings, and (for max_crossings <= 2)
 * within the ds_bound length.
 */
bool envelope_is_ds(const std::vector<PiecewiseFunction>& fns, std::array<double, 2> interval,
                    int max_crossings);

}  // namespace orbitnet

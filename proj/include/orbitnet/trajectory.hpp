#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbitnet/orbital.hpp"
#include "orbitnet/spline.hpp"

namespace orbitnet {

/**
 * Time-parameterized position of one node over a horizon: propagated samples
 * plus per-coordinate cubic splines for cheap evaluation between samples.
 * Ground stations and synthetic fixtures are represented as fixed trajectories
 * with no orbital elements. Immutable after construction.
 */
struct Trajectory {
  std::string sat_id;
  std::optional<OrbitalElements> elements;
  std::array<double, 2> horizon{0.0, 0.0};
  std::vector<StateVector> samples;
  std::array<CubicSpline, 3> spline;
  bool has_spline = false;

  /// Spline-interpolated position (exact at sample knots).
  Eigen::Vector3d position_at(double t) const;
};

/**
 * Propagate over [t0, t1] at step dt; t1 is always included as the final
 * sample. Splines are fitted whenever at least two samples exist.
 */
Trajectory sample_trajectory(const OrbitalElements& el, std::array<double, 2> horizon, double dt);

/// Constant-position trajectory (ground station or static fixture node).
Trajectory fixed_trajectory(std::string sat_id, const Eigen::Vector3d& position_km,
                            std::array<double, 2> horizon);

/// Positions of every trajectory at time t, in input order.
std::vector<Eigen::Vector3d> positions_at(const std::vector<Trajectory>& trajs, double t);

/// Sat ids of every trajectory, in input order.
std::vector<std::string> trajectory_ids(const std::vector<Trajectory>& trajs);

/**
 * Walker-style constellation: `planes` equally spaced orbital planes of
 * `sats_per_plane` evenly phased circular orbits at a common inclination and
 * altitude. The phasing factor staggers anomalies between adjacent planes.
 */
struct WalkerSpec {
  int planes = 3;
  int sats_per_plane = 10;
  double inclination_rad = 0.925;  // ~53 deg
  double altitude_km = 550.0;
  int phasing = 1;
};

std::vector<OrbitalElements> walker_constellation(const WalkerSpec& spec, double epoch_s = 0.0);

}  // namespace orbitnet

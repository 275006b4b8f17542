#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace orbitnet {

/// WGS-84 gravitational parameter, km^3/s^2.
inline constexpr double kMuEarth = 398600.4418;
/// Mean Earth radius used for occlusion tests, km.
inline constexpr double kEarthRadiusKm = 6371.0;

/**
 * Keplerian elements of one satellite, parsed from a TLE record or built
 * synthetically. Angles in radians, times in seconds since the Unix epoch,
 * mean motion in rad/s. The semi-major axis is derived from the mean motion
 * via a = (mu / n^2)^(1/3).
 */
struct OrbitalElements {
  std::string sat_id;
  double epoch_s = 0.0;
  double inclination_rad = 0.0;
  double raan_rad = 0.0;
  double eccentricity = 0.0;
  double arg_perigee_rad = 0.0;
  double mean_anomaly_rad = 0.0;
  double mean_motion_rad_s = 0.0;
  double semi_major_axis_km = 0.0;

  double period_s() const;
};

/// Earth-centered inertial state at time t (seconds), km and km/s.
struct StateVector {
  double t = 0.0;
  Eigen::Vector3d position_km = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity_km_s = Eigen::Vector3d::Zero();
};

/// Mod-10 checksum over the first 68 columns: digits count as themselves,
/// '-' counts as 1, everything else as 0.
int tle_checksum(std::string_view line);

/**
 * Parse a sequence of TLE records (optional name line, then line 1 and
 * line 2, each exactly 69 characters). Blank lines are skipped.
 *
 * Throws MalformedLine, ChecksumMismatch, or EccentricityOutOfRange.
 */
std::vector<OrbitalElements> parse_tle(const std::vector<std::string>& lines);

/// Render elements back to a name line plus the standard two 69-column lines.
std::string serialize_tle(const OrbitalElements& el);

/**
 * Solve Kepler's equation E - e sin E = M for the eccentric anomaly.
 * Newton iteration with a bisection fallback; residual below 1e-12.
 * The result lies in the same 2*pi branch as M. Throws NonConvergence.
 */
double solve_kepler(double mean_anomaly, double eccentricity);

/// Two-body Keplerian propagation to absolute time t (seconds).
StateVector propagate(const OrbitalElements& el, double t);

}  // namespace orbitnet

#include "orbitnet/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "orbitnet/errors.hpp"

namespace orbitnet {

Eigen::Vector3d Trajectory::position_at(double t) const {
  if (has_spline) return {spline[0](t), spline[1](t), spline[2](t)};
  if (samples.empty()) throw Error("trajectory has no samples");
  return samples.front().position_km;
}

Trajectory sample_trajectory(const OrbitalElements& el, std::array<double, 2> horizon, double dt) {
  if (dt <= 0.0) throw Error("sample_trajectory: dt must be positive");
  if (horizon[1] < horizon[0]) throw Error("sample_trajectory: empty horizon");

  Trajectory tr;
  tr.sat_id = el.sat_id;
  tr.elements = el;
  tr.horizon = horizon;

  const double span = horizon[1] - horizon[0];
  const auto steps = static_cast<long long>(std::floor(span / dt + 1e-9));
  for (long long k = 0; k <= steps; ++k) tr.samples.push_back(propagate(el, horizon[0] + static_cast<double>(k) * dt));
  if (tr.samples.back().t < horizon[1] - 1e-9 * std::max(1.0, span)) tr.samples.push_back(propagate(el, horizon[1]));

  const auto n = static_cast<Eigen::Index>(tr.samples.size());
  if (n >= 2) {
    Eigen::VectorXd ts(n), xs(n), ys(n), zs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      ts[i] = tr.samples[i].t;
      xs[i] = tr.samples[i].position_km.x();
      ys[i] = tr.samples[i].position_km.y();
      zs[i] = tr.samples[i].position_km.z();
    }
    tr.spline = {CubicSpline::fit(ts, xs), CubicSpline::fit(ts, ys), CubicSpline::fit(ts, zs)};
    tr.has_spline = true;
  }
  return tr;
}

Trajectory fixed_trajectory(std::string sat_id, const Eigen::Vector3d& position_km,
                            std::array<double, 2> horizon) {
  Trajectory tr;
  tr.sat_id = std::move(sat_id);
  tr.horizon = horizon;
  tr.samples.push_back({horizon[0], position_km, Eigen::Vector3d::Zero()});
  if (horizon[1] > horizon[0]) tr.samples.push_back({horizon[1], position_km, Eigen::Vector3d::Zero()});
  return tr;
}

std::vector<Eigen::Vector3d> positions_at(const std::vector<Trajectory>& trajs, double t) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(trajs.size());
  for (const auto& tr : trajs) out.push_back(tr.position_at(t));
  return out;
}

std::vector<std::string> trajectory_ids(const std::vector<Trajectory>& trajs) {
  std::vector<std::string> out;
  out.reserve(trajs.size());
  for (const auto& tr : trajs) out.push_back(tr.sat_id);
  return out;
}

std::vector<OrbitalElements> walker_constellation(const WalkerSpec& spec, double epoch_s) {
  if (spec.planes < 1 || spec.sats_per_plane < 1) throw ConfigError("walker: planes and sats_per_plane must be >= 1");
  if (spec.altitude_km <= 0.0) throw ConfigError("walker: altitude must be positive");

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double a = kEarthRadiusKm + spec.altitude_km;
  const double n = std::sqrt(kMuEarth / (a * a * a));
  const int total = spec.planes * spec.sats_per_plane;

  std::vector<OrbitalElements> out;
  out.reserve(total);
  for (int p = 0; p < spec.planes; ++p) {
    for (int s = 0; s < spec.sats_per_plane; ++s) {
      OrbitalElements el;
      char id[16];
      std::snprintf(id, sizeof id, "W%02d%02d", p, s);
      el.sat_id = id;
      el.epoch_s = epoch_s;
      el.inclination_rad = spec.inclination_rad;
      el.raan_rad = kTwoPi * p / spec.planes;
      el.eccentricity = 0.0;
      el.arg_perigee_rad = 0.0;
      el.mean_anomaly_rad = std::fmod(kTwoPi * s / spec.sats_per_plane +
                                          kTwoPi * spec.phasing * p / total,
                                      kTwoPi);
      el.mean_motion_rad_s = n;
      el.semi_major_axis_km = a;
      out.push_back(std::move(el));
    }
  }
  return out;
}

}  // namespace orbitnet

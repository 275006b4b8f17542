#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitnet/trajectory.hpp"

namespace orbitnet {

/// One visibility window on an edge. Closed interval, start < end.
struct ContactInterval {
  double start = 0.0;
  double end = 0.0;
};

/// Per-edge sorted visibility intervals over a horizon. Edge keys are
/// normalized index pairs (a < b) into node_ids.
struct ContactPlan {
  std::array<double, 2> horizon{0.0, 0.0};
  std::vector<std::string> node_ids;
  std::map<std::pair<int, int>, std::vector<ContactInterval>> contacts;

  std::size_t interval_count() const;
};

/// Graph snapshot at a single instant: positions plus the edge set.
/// Edges are normalized index pairs (a < b), sorted.
struct GraphSnapshot {
  double t = 0.0;
  std::vector<std::string> node_ids;
  std::vector<Eigen::Vector3d> positions;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int a, int b) const;
};

/// min over s in [0,1] of |p + s (q - p)|, by clamped projection of the
/// origin onto the segment. p == q is allowed.
double segment_min_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);

/// True iff the p-q segment clears the ball of the given radius at the origin.
bool line_of_sight(const Eigen::Vector3d& p, const Eigen::Vector3d& q, double radius_km);

/**
 * Visibility windows of one satellite pair over their shared horizon.
 * The sign of (d_L - R) is sampled at step dt and each sign change is
 * refined by bisection to within tol. Intervals shorter than tol (tangent
 * grazings at this resolution) are dropped. Dips shorter than dt between
 * samples can be missed; pick dt well below the expected dwell time.
 */
std::vector<ContactInterval> contact_intervals(const Trajectory& a, const Trajectory& b,
                                               double radius_km, double dt, double tol);

/// All-pairs line-of-sight snapshot at time t.
GraphSnapshot visibility_graph(double t, const std::vector<std::string>& node_ids,
                               const std::vector<Eigen::Vector3d>& positions, double radius_km);

/// Union of contact_intervals over all trajectory pairs. Edges that are never
/// visible get no entry.
ContactPlan contact_plan(const std::vector<Trajectory>& trajs, double radius_km, double dt,
                         double tol);

void write_contact_plan_json(const ContactPlan& plan, std::ostream& os);
ContactPlan read_contact_plan_json(std::istream& is);
void write_contact_plan_csv(const ContactPlan& plan, std::ostream& os);

}  // namespace orbitnet

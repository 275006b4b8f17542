#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orbitnet/trajectory.hpp"
#include "orbitnet/visibility.hpp"

namespace orbitnet {

/// A time-varying graph family whose edge set is tracked for critical events:
/// the visibility graph itself, or the alpha-stable Delaunay subgraph of it.
struct FamilySpec {
  enum class Kind { Vis, Delaunay };
  Kind kind = Kind::Vis;
  double alpha = 0.0;

  std::string label() const;
};

/// One topological critical event: an edge entering or leaving the family's
/// edge set, stamped at the midpoint of the enclosing sample step.
struct EventRecord {
  double t;
  bool insert;
  std::pair<int, int> edge;
};

/// Timestamped event log for one graph family. cumulative_edges carries the
/// running count of distinct edges ever seen, one entry per sample time;
/// edge_counts the instantaneous edge count at each sample.
struct EventLog {
  std::string family;
  std::vector<std::string> node_ids;
  std::vector<EventRecord> events;
  std::vector<std::pair<double, int>> cumulative_edges;
  std::vector<std::pair<double, int>> edge_counts;

  int total_events() const { return static_cast<int>(events.size()); }

  /// Integral over time of the instantaneous edge count, one running value
  /// per sample (the alternative reading of a cumulative edge count).
  std::vector<std::pair<double, double>> integrated_edge_time() const;
};

/// Edge set of the family at one instant. Delaunay families intersect the
/// alpha-stable triangulation edges with the visibility graph and are empty
/// below 4 nodes.
std::vector<std::pair<int, int>> family_edge_set(const FamilySpec& family,
                                                 const GraphSnapshot& vis);

/**
 * Sample the family's edge set over the horizon at step dt and diff
 * consecutive snapshots. Edge changes between samples become insert/remove
 * events stamped at the step midpoint.
 */
EventLog count_critical_events(const std::vector<Trajectory>& trajs, const FamilySpec& family,
                               double radius_km, double dt, std::array<double, 2> horizon);

/// CSV: t,family,kind,node_a,node_b
void write_events_csv(const std::vector<EventLog>& logs, std::ostream& os);
/// CSV: t,family,distinct_cumulative,integrated_edge_time
void write_cumulative_csv(const std::vector<EventLog>& logs, std::ostream& os);

}  // namespace orbitnet

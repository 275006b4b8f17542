#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitnet/trajectory.hpp"
#include "orbitnet/visibility.hpp"

namespace orbitnet {

/// Outcome of one routing attempt. Failure is a state, not an error: either
/// stuck at a local minimum (stuck_at set) or out of hops / horizon.
struct RouteResult {
  std::vector<int> path;
  double euclidean_length_km = 0.0;
  int hop_count = 0;
  bool delivered = false;
  std::optional<int> stuck_at;
};

/**
 * 1-local greedy forwarding on a snapshot: each hop moves to the neighbor
 * closest (chord distance) to the target, only if that neighbor is strictly
 * closer than the current node. Ties break to the smallest node id.
 */
RouteResult greedy_route(const GraphSnapshot& snapshot, int source, int target, int hop_cap);

/// Path length over straight-line source-target distance. Throws
/// NotDelivered or ZeroDistance (source == target).
double routing_ratio(const RouteResult& result, const GraphSnapshot& snapshot);

/**
 * Worst-case ratio of shortest-path distance in the subgraph to shortest-path
 * distance in the full snapshot (chord-weighted), over all connected pairs.
 * Throws Disconnected with a witness pair if the subgraph separates nodes the
 * full graph connects.
 */
double stretch_factor(const std::vector<std::pair<int, int>>& sub_edges,
                      const GraphSnapshot& full);

/// Routing schemes evaluated over a time horizon.
struct SchemeSpec {
  enum class Kind { DijkstraOnVis, ExpansionEarliestArrival, GreedyOnDelaunay };
  Kind kind = Kind::DijkstraOnVis;
  double alpha = 0.0;  ///< stability parameter for GreedyOnDelaunay

  std::string label() const;
};

/// Recomputations performed by a scheme while a message was in flight.
/// recompute_count counts topology events that touched the active path;
/// global_events counts every event the scheme's graph family logged.
struct RecomputationTrace {
  struct Event {
    double t;
    std::string cause;  // "topology-change" | "delivery"
  };

  std::string scheme;
  std::vector<Event> events;
  int recompute_count = 0;
  int global_events = 0;
};

struct TimedStep {
  int step;
  double t;
  int node;
  std::string action;  // "hop" | "wait" | "deliver"
};

struct RouteOverTimeResult {
  RouteResult route;
  RecomputationTrace trace;
  std::vector<TimedStep> steps;
  double arrival_s = 0.0;  ///< meaningful when delivered
};

/**
 * Hop-by-hop forwarding across snapshots, one hop (or wait) per dt step,
 * starting at t0. Graph-based schemes recompute when a removal event breaks
 * the residual planned path; greedy decides per hop and never recomputes.
 * A horizon exhausted before delivery leaves delivered == false.
 */
RouteOverTimeResult route_over_time(const std::vector<Trajectory>& trajs, double radius_km,
                                    double dt, const SchemeSpec& scheme, int source, int target,
                                    double t0);

void write_route_steps_csv(const RouteOverTimeResult& r, const std::vector<std::string>& ids,
                           std::ostream& os);

}  // namespace orbitnet

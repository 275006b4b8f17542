#include "orbitnet/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "orbitnet/delaunay.hpp"
#include "orbitnet/errors.hpp"

namespace orbitnet {

std::string FamilySpec::label() const {
  if (kind == Kind::Vis) return "Vis";
  if (alpha == 0.0) return "Delaunay";
  char buf[48];
  std::snprintf(buf, sizeof buf, "Delaunay_alpha=%g", alpha);
  return buf;
}

std::vector<std::pair<int, int>> family_edge_set(const FamilySpec& family,
                                                 const GraphSnapshot& vis) {
  if (family.kind == FamilySpec::Kind::Vis) return vis.edges;
  if (vis.positions.size() < 4) return {};
  const Triangulation tri = spherical_delaunay(vis.node_ids, vis.positions);
  std::vector<std::pair<int, int>> out;
  for (const auto& e : alpha_stable_filter(tri, family.alpha))
    if (vis.has_edge(e.first, e.second)) out.push_back(e);
  return out;
}

EventLog count_critical_events(const std::vector<Trajectory>& trajs, const FamilySpec& family,
                               double radius_km, double dt, std::array<double, 2> horizon) {
  if (dt <= 0.0) throw Error("count_critical_events: dt must be positive");
  EventLog log;
  log.family = family.label();
  log.node_ids = trajectory_ids(trajs);

  const double span = horizon[1] - horizon[0];
  const auto steps = static_cast<long long>(std::floor(span / dt + 1e-9));

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> prev;
  for (long long k = 0; k <= steps; ++k) {
    const double t = horizon[0] + static_cast<double>(k) * dt;
    const GraphSnapshot vis = visibility_graph(t, log.node_ids, positions_at(trajs, t), radius_km);
    const auto edges = family_edge_set(family, vis);

    if (k > 0) {
      const double mid = t - 0.5 * dt;
      std::vector<std::pair<int, int>> removed, inserted;
      std::set_difference(prev.begin(), prev.end(), edges.begin(), edges.end(),
                          std::back_inserter(removed));
      std::set_difference(edges.begin(), edges.end(), prev.begin(), prev.end(),
                          std::back_inserter(inserted));
      for (const auto& e : inserted) log.events.push_back({mid, true, e});
      for (const auto& e : removed) log.events.push_back({mid, false, e});
    }
    seen.insert(edges.begin(), edges.end());
    log.cumulative_edges.emplace_back(t, static_cast<int>(seen.size()));
    log.edge_counts.emplace_back(t, static_cast<int>(edges.size()));
    prev = edges;
  }
  return log;
}

std::vector<std::pair<double, double>> EventLog::integrated_edge_time() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(edge_counts.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < edge_counts.size(); ++i) {
    if (i > 0) acc += edge_counts[i - 1].second * (edge_counts[i].first - edge_counts[i - 1].first);
    out.emplace_back(edge_counts[i].first, acc);
  }
  return out;
}

void write_events_csv(const std::vector<EventLog>& logs, std::ostream& os) {
  os << "t,family,kind,node_a,node_b\n";
  char buf[192];
  for (const auto& log : logs) {
    for (const auto& ev : log.events) {
      std::snprintf(buf, sizeof buf, "%.6f,%s,%s,%s,%s\n", ev.t, log.family.c_str(),
                    ev.insert ? "insert" : "remove", log.node_ids[ev.edge.first].c_str(),
                    log.node_ids[ev.edge.second].c_str());
      os << buf;
    }
  }
}

void write_cumulative_csv(const std::vector<EventLog>& logs, std::ostream& os) {
  os << "t,family,distinct_cumulative,integrated_edge_time\n";
  char buf[160];
  for (const auto& log : logs) {
    const auto integrated = log.integrated_edge_time();
    for (std::size_t i = 0; i < log.cumulative_edges.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.6f,%s,%d,%.6f\n", log.cumulative_edges[i].first,
                    log.family.c_str(), log.cumulative_edges[i].second, integrated[i].second);
      os << buf;
    }
  }
}

}  // namespace orbitnet

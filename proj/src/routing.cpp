#include "orbitnet/routing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "orbitnet/delaunay.hpp"
#include "orbitnet/errors.hpp"
#include "orbitnet/graph.hpp"
#include "orbitnet/temporal.hpp"

namespace orbitnet {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

WeightedGraph chord_graph(const GraphSnapshot& snap,
                          const std::vector<std::pair<int, int>>& edges) {
  WeightedGraph g;
  g.n = static_cast<int>(snap.positions.size());
  g.directed = false;
  for (const auto& [a, b] : edges) g.add_edge(a, b, (snap.positions[a] - snap.positions[b]).norm());
  return g;
}

}  // namespace

RouteResult greedy_route(const GraphSnapshot& snapshot, int source, int target, int hop_cap) {
  if (hop_cap <= 0) throw Error("greedy_route: hop_cap must be positive");
  RouteResult res;
  res.path.push_back(source);
  if (source == target) {
    res.delivered = true;
    return res;
  }

  const auto adj = adjacency(static_cast<int>(snapshot.positions.size()), snapshot.edges);
  const Eigen::Vector3d goal = snapshot.positions[target];
  int current = source;
  while (res.hop_count < hop_cap) {
    double here = (snapshot.positions[current] - goal).norm();
    int best = -1;
    double best_dist = here;
    for (int nbr : adj[current]) {
      const double d = (snapshot.positions[nbr] - goal).norm();
      if (d < best_dist) {
        best_dist = d;
        best = nbr;
      }
    }
    if (best < 0) {
      res.stuck_at = current;
      return res;
    }
    res.euclidean_length_km += (snapshot.positions[best] - snapshot.positions[current]).norm();
    res.path.push_back(best);
    ++res.hop_count;
    current = best;
    if (current == target) {
      res.delivered = true;
      return res;
    }
  }
  return res;  // hop cap exhausted
}

double routing_ratio(const RouteResult& result, const GraphSnapshot& snapshot) {
  if (!result.delivered) throw NotDelivered("routing_ratio needs a delivered route");
  const int s = result.path.front(), t = result.path.back();
  const double direct = (snapshot.positions[s] - snapshot.positions[t]).norm();
  if (direct == 0.0) throw ZeroDistance("routing_ratio undefined for coincident endpoints");
  return result.euclidean_length_km / direct;
}

double stretch_factor(const std::vector<std::pair<int, int>>& sub_edges,
                      const GraphSnapshot& full) {
  const WeightedGraph full_g = chord_graph(full, full.edges);
  const WeightedGraph sub_g = chord_graph(full, sub_edges);
  const int n = full_g.n;

  double worst = 1.0;
  for (int s = 0; s < n; ++s) {
    const auto df = dijkstra(full_g, s);
    const auto ds = dijkstra(sub_g, s);
    for (int v = 0; v < n; ++v) {
      if (v == s || df.dist[v] == kInf) continue;
      if (ds.dist[v] == kInf)
        throw Disconnected(s, v,
                           "subgraph disconnects " + std::to_string(s) + " from " + std::to_string(v));
      if (df.dist[v] > 0.0) worst = std::max(worst, ds.dist[v] / df.dist[v]);
    }
  }
  return worst;
}

std::string SchemeSpec::label() const {
  switch (kind) {
    case Kind::DijkstraOnVis: return "dijkstra-on-vis";
    case Kind::ExpansionEarliestArrival: return "expansion-earliest-arrival";
    case Kind::GreedyOnDelaunay: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "greedy-on-delaunay(%g)", alpha);
      return buf;
    }
  }
  return "unknown";
}

namespace {

std::vector<std::pair<int, int>> scheme_edge_set(const SchemeSpec& scheme,
                                                 const GraphSnapshot& vis) {
  if (scheme.kind != SchemeSpec::Kind::GreedyOnDelaunay) return vis.edges;
  if (vis.positions.size() < 4) return {};
  const Triangulation tri = spherical_delaunay(vis.node_ids, vis.positions);
  const auto stable = alpha_stable_filter(tri, scheme.alpha);
  std::vector<std::pair<int, int>> out;
  for (const auto& e : stable)
    if (vis.has_edge(e.first, e.second)) out.push_back(e);
  return out;
}

// Node sequence of an earliest-arrival walk through the expansion, starting
// at src no earlier than tau. Waiting is implicit between hops.
std::optional<std::vector<int>> expansion_route(const LayeredDag& dag, int src, int dst,
                                                double tau) {
  if (src == dst) return std::vector<int>{src};
  const auto first = std::lower_bound(dag.layer_times.begin(), dag.layer_times.end(), tau);
  if (first == dag.layer_times.end()) return std::nullopt;
  const int start = static_cast<int>(first - dag.layer_times.begin());

  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> first_reach(dag.n, kUnreached), pred(dag.n, -1);
  first_reach[src] = start;
  for (int i = start; i + 1 < dag.layer_count(); ++i) {
    if (i >= static_cast<int>(dag.arcs.size())) break;
    for (const auto& [u, v] : dag.arcs[i]) {
      if (first_reach[u] <= i && first_reach[v] > i + 1) {
        first_reach[v] = i + 1;
        pred[v] = u;
      }
    }
    if (first_reach[dst] != kUnreached) break;
  }
  if (first_reach[dst] == kUnreached) return std::nullopt;
  std::vector<int> nodes;
  for (int v = dst; v != -1; v = pred[v]) nodes.push_back(v);
  if (nodes.back() != src) return std::nullopt;
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

bool breaks_path(const std::vector<std::pair<int, int>>& removed, const std::vector<int>& path,
                 std::size_t from) {
  for (std::size_t i = from; i + 1 < path.size(); ++i) {
    auto e = std::minmax(path[i], path[i + 1]);
    if (std::binary_search(removed.begin(), removed.end(), std::make_pair(e.first, e.second)))
      return true;
  }
  return false;
}

}  // namespace

RouteOverTimeResult route_over_time(const std::vector<Trajectory>& trajs, double radius_km,
                                    double dt, const SchemeSpec& scheme, int source, int target,
                                    double t0) {
  if (trajs.empty()) throw Error("route_over_time: no trajectories");
  const auto ids = trajectory_ids(trajs);
  const double horizon_end = trajs.front().horizon[1];

  RouteOverTimeResult out;
  out.trace.scheme = scheme.label();
  out.route.path.push_back(source);
  if (source == target) {
    out.route.delivered = true;
    out.arrival_s = t0;
    out.trace.events.push_back({t0, "delivery"});
    return out;
  }

  // The expansion scheme plans against the contact plan; the layered DAG is
  // static over the horizon, so build it once.
  LayeredDag dag;
  bool dag_ready = false;
  if (scheme.kind == SchemeSpec::Kind::ExpansionEarliestArrival) {
    const ContactPlan plan = contact_plan(trajs, radius_km, dt, std::min(0.1, dt / 10.0));
    if (!plan.contacts.empty()) {
      dag = static_expansion(interval_tvg_from_plan(plan, dt));
      dag_ready = true;
    }
  }

  const bool graph_based = scheme.kind != SchemeSpec::Kind::GreedyOnDelaunay;
  std::vector<int> planned;        // residual node sequence, planned[0] == current
  std::vector<std::pair<int, int>> prev_edges;
  int current = source;

  for (int step = 0;; ++step) {
    const double tau = t0 + step * dt;
    if (tau > horizon_end + 1e-9) break;

    const GraphSnapshot vis = visibility_graph(tau, ids, positions_at(trajs, tau), radius_km);
    const auto edges = scheme_edge_set(scheme, vis);

    if (step > 0) {
      std::vector<std::pair<int, int>> removed, inserted;
      std::set_difference(prev_edges.begin(), prev_edges.end(), edges.begin(), edges.end(),
                          std::back_inserter(removed));
      std::set_difference(edges.begin(), edges.end(), prev_edges.begin(), prev_edges.end(),
                          std::back_inserter(inserted));
      out.trace.global_events += static_cast<int>(removed.size() + inserted.size());
      if (graph_based && planned.size() > 1 && breaks_path(removed, planned, 0)) {
        planned.clear();
        ++out.trace.recompute_count;
        out.trace.events.push_back({tau - 0.5 * dt, "topology-change"});
      }
    }
    prev_edges = edges;

    int next = -1;
    if (graph_based) {
      if (planned.size() <= 1) {
        planned.clear();
        if (scheme.kind == SchemeSpec::Kind::DijkstraOnVis) {
          const auto sp = dijkstra(chord_graph(vis, edges), current);
          if (sp.dist[target] != kInf) planned = sp.path_to(target);
        } else if (dag_ready) {
          if (auto nodes = expansion_route(dag, current, target, tau)) planned = *nodes;
        }
      }
      if (planned.size() > 1 && vis.has_edge(planned[0], planned[1])) {
        next = planned[1];
        planned.erase(planned.begin());
      }
    } else {
      const auto adj = adjacency(static_cast<int>(vis.positions.size()), edges);
      const Eigen::Vector3d goal = vis.positions[target];
      double best_dist = (vis.positions[current] - goal).norm();
      for (int nbr : adj[current]) {
        const double d = (vis.positions[nbr] - goal).norm();
        if (d < best_dist) {
          best_dist = d;
          next = nbr;
        }
      }
    }

    if (next >= 0) {
      out.route.euclidean_length_km += (vis.positions[next] - vis.positions[current]).norm();
      out.route.path.push_back(next);
      ++out.route.hop_count;
      out.steps.push_back({step, tau, next, "hop"});
      current = next;
      if (current == target) {
        out.route.delivered = true;
        out.arrival_s = tau + dt;
        out.trace.events.push_back({out.arrival_s, "delivery"});
        return out;
      }
    } else {
      out.steps.push_back({step, tau, current, "wait"});
    }
  }

  if (scheme.kind == SchemeSpec::Kind::GreedyOnDelaunay) out.route.stuck_at = current;
  return out;
}

void write_route_steps_csv(const RouteOverTimeResult& r, const std::vector<std::string>& ids,
                           std::ostream& os) {
  os << "step,t,node,action\n";
  char buf[160];
  for (const auto& s : r.steps) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,%s,%s\n", s.step, s.t, ids[s.node].c_str(),
                  s.action.c_str());
    os << buf;
  }
}

}  // namespace orbitnet

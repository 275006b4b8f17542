#include "orbitnet/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "orbitnet/errors.hpp"
#include "orbitnet/graph.hpp"

namespace orbitnet {

double PlFunction::eval(double time) const {
  const auto n = t.size();
  if (n == 0) throw Error("PlFunction: empty");
  if (time <= t[0]) return v[0];
  if (time >= t[n - 1]) return v[n - 1];
  Eigen::Index i = std::upper_bound(t.data(), t.data() + n, time) - t.data() - 1;
  if (time == t[i]) return v[i];
  if (!std::isfinite(v[i]) || !std::isfinite(v[i + 1])) return kInf;
  const double frac = (time - t[i]) / (t[i + 1] - t[i]);
  return v[i] + frac * (v[i + 1] - v[i]);
}

PlFunction PlFunction::constant(double lo, double hi, double value) {
  PlFunction f;
  f.t.resize(2);
  f.t << lo, hi;
  f.v.resize(2);
  f.v << value, value;
  return f;
}

long long LayeredDag::traversal_arc_count() const {
  long long total = 0;
  for (const auto& layer : arcs) total += static_cast<long long>(layer.size());
  return total;
}

LayeredDag static_expansion(const IntervalTvg& tvg) {
  std::set<double> time_set;
  for (const auto& [edge, times] : tvg.times) time_set.insert(times.begin(), times.end());
  if (time_set.empty()) throw EmptyTimeSet("static_expansion: no edge times");

  LayeredDag dag;
  dag.n = tvg.n;
  dag.layer_times.assign(time_set.begin(), time_set.end());
  dag.layer_times.push_back(dag.layer_times.back() + 1.0);  // terminal arrival layer

  const int p = static_cast<int>(dag.layer_times.size()) - 1;
  dag.arcs.resize(p);
  for (const auto& [edge, times] : tvg.times) {
    for (double t : times) {
      const auto it = std::lower_bound(dag.layer_times.begin(), dag.layer_times.end(), t);
      dag.arcs[it - dag.layer_times.begin()].push_back(edge);
    }
  }
  for (auto& layer : dag.arcs) std::sort(layer.begin(), layer.end());
  return dag;
}

std::optional<double> earliest_arrival_dag(const LayeredDag& dag, int source, int target,
                                           double t0) {
  if (source == target) return t0;
  const auto first = std::lower_bound(dag.layer_times.begin(), dag.layer_times.end(), t0);
  if (first == dag.layer_times.end()) return std::nullopt;
  const int start_layer = static_cast<int>(first - dag.layer_times.begin());

  std::vector<bool> reached(dag.n, false);
  reached[source] = true;
  for (int i = start_layer; i + 1 < dag.layer_count(); ++i) {
    std::vector<bool> next = reached;  // waiting arcs
    if (i < static_cast<int>(dag.arcs.size()))
      for (const auto& [u, v] : dag.arcs[i])
        if (reached[u]) next[v] = true;
    reached = std::move(next);
    if (reached[target]) return dag.layer_times[i + 1];
  }
  return std::nullopt;
}

bool check_fifo(const FunctionTvg& tvg) {
  for (const auto& [edge, f] : tvg.weights) {
    for (Eigen::Index i = 0; i < f.v.size(); ++i)
      if (!std::isfinite(f.v[i])) return false;
    for (Eigen::Index i = 0; i + 1 < f.t.size(); ++i) {
      const double slope = (f.v[i + 1] - f.v[i]) / (f.t[i + 1] - f.t[i]);
      if (!(slope > -1.0)) return false;
    }
  }
  return true;
}

namespace {

// Label-setting needs non-decreasing arrival functions; that is weaker than
// the strict FIFO predicate. Slope -1 pieces (arrival plateaus) are fine,
// and a +infinity tail just means the edge shuts down.
void require_nondecreasing_arrivals(const FunctionTvg& tvg) {
  for (const auto& [edge, f] : tvg.weights) {
    for (Eigen::Index i = 0; i + 1 < f.t.size(); ++i) {
      const bool lo_fin = std::isfinite(f.v[i]), hi_fin = std::isfinite(f.v[i + 1]);
      if (!lo_fin && hi_fin)
        throw NotFifo("edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                      ") becomes available again after shutting down");
      if (lo_fin && hi_fin) {
        const double slope = (f.v[i + 1] - f.v[i]) / (f.t[i + 1] - f.t[i]);
        if (slope < -1.0)
          throw NotFifo("edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                        ") has a piece of slope " + std::to_string(slope));
      }
    }
    for (Eigen::Index i = 0; i < f.v.size(); ++i)
      if (std::isfinite(f.v[i]) && f.v[i] < 0.0)
        throw Error("negative travel time on edge (" + std::to_string(edge.first) + "," +
                    std::to_string(edge.second) + ")");
  }
}

}  // namespace

std::optional<double> td_dijkstra(const FunctionTvg& tvg, int source, int target, double t0) {
  require_nondecreasing_arrivals(tvg);

  std::vector<std::vector<std::pair<int, const PlFunction*>>> adj(tvg.n);
  for (const auto& [edge, f] : tvg.weights) adj[edge.first].emplace_back(edge.second, &f);

  std::vector<double> arrival(tvg.n, kInf);
  arrival[source] = t0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({t0, source});
  while (!pq.empty()) {
    const auto [tau, u] = pq.top();
    pq.pop();
    if (tau > arrival[u]) continue;
    if (u == target) break;
    if (tau > tvg.horizon[1]) continue;  // departures only within the horizon
    for (const auto& [v, f] : adj[u]) {
      const double w = f->eval(tau);
      if (!std::isfinite(w)) continue;
      const double cand = tau + w;
      if (cand < arrival[v]) {
        arrival[v] = cand;
        pq.push({cand, v});
      }
    }
  }
  if (arrival[target] == kInf) return std::nullopt;
  return arrival[target];
}

FunctionTvg interval_to_function_tvg(const IntervalTvg& tvg) {
  std::set<double> time_set;
  for (const auto& [edge, times] : tvg.times) time_set.insert(times.begin(), times.end());
  if (time_set.empty()) throw EmptyTimeSet("interval_to_function_tvg: no edge times");
  const std::vector<double> grid(time_set.begin(), time_set.end());
  const double terminal = grid.back() + 1.0;

  auto arrival_after = [&](const std::vector<double>& times, double t) {
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end()) return kInf;
    // Arrival is the next layer time after the activation.
    const auto layer = std::lower_bound(grid.begin(), grid.end(), *it) - grid.begin();
    return layer + 1 < static_cast<long long>(grid.size()) ? grid[layer + 1] : terminal;
  };

  FunctionTvg out;
  out.n = tvg.n;
  out.horizon = {grid.front(), grid.back()};
  for (const auto& [edge, times] : tvg.times) {
    PlFunction f;
    f.t.resize(static_cast<Eigen::Index>(grid.size()));
    f.v.resize(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      f.t[static_cast<Eigen::Index>(i)] = grid[i];
      const double a = arrival_after(times, grid[i]);
      f.v[static_cast<Eigen::Index>(i)] = std::isfinite(a) ? a - grid[i] : kInf;
    }
    out.weights.emplace(edge, std::move(f));
  }
  return out;
}

IntervalTvg interval_tvg_from_plan(const ContactPlan& plan, double dt) {
  if (dt <= 0.0) throw Error("interval_tvg_from_plan: dt must be positive");
  IntervalTvg tvg;
  tvg.n = static_cast<int>(plan.node_ids.size());
  tvg.horizon = plan.horizon;
  for (const auto& [edge, windows] : plan.contacts) {
    std::vector<double> times;
    for (const auto& w : windows) {
      const auto k0 = static_cast<long long>(std::ceil((w.start - plan.horizon[0]) / dt - 1e-9));
      for (long long k = std::max(0ll, k0);; ++k) {
        const double t = plan.horizon[0] + static_cast<double>(k) * dt;
        if (t > w.end + 1e-9 || t > plan.horizon[1] + 1e-9) break;
        times.push_back(t);
      }
    }
    if (times.empty()) continue;
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    tvg.times[{edge.first, edge.second}] = times;
    tvg.times[{edge.second, edge.first}] = times;
  }
  return tvg;
}

void write_function_tvg_json(const FunctionTvg& tvg, std::ostream& os) {
  nlohmann::ordered_json j;
  j["n"] = tvg.n;
  j["horizon"] = {tvg.horizon[0], tvg.horizon[1]};
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [edge, f] : tvg.weights) {
    nlohmann::ordered_json e;
    e["u"] = edge.first;
    e["v"] = edge.second;
    auto& ts = e["t"] = nlohmann::ordered_json::array();
    auto& ws = e["w"] = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < f.t.size(); ++i) {
      ts.push_back(f.t[i]);
      if (std::isfinite(f.v[i])) ws.push_back(f.v[i]);
      else ws.push_back(nullptr);
    }
    edges.push_back(std::move(e));
  }
  os << j.dump(2) << "\n";
}

FunctionTvg read_function_tvg_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  FunctionTvg tvg;
  tvg.n = j.at("n").get<int>();
  tvg.horizon = {j.at("horizon").at(0).get<double>(), j.at("horizon").at(1).get<double>()};
  for (const auto& e : j.at("edges")) {
    PlFunction f;
    const auto& ts = e.at("t");
    const auto& ws = e.at("w");
    if (ts.size() != ws.size()) throw IoError("tvg json: t/w length mismatch");
    f.t.resize(static_cast<Eigen::Index>(ts.size()));
    f.v.resize(static_cast<Eigen::Index>(ws.size()));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      f.t[static_cast<Eigen::Index>(i)] = ts[i].get<double>();
      f.v[static_cast<Eigen::Index>(i)] = ws[i].is_null() ? kInf : ws[i].get<double>();
    }
    tvg.weights.emplace(std::make_pair(e.at("u").get<int>(), e.at("v").get<int>()), std::move(f));
  }
  return tvg;
}

}  // namespace orbitnet

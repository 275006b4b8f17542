#include "orbitnet/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "orbitnet/errors.hpp"

namespace orbitnet {

std::size_t ContactPlan::interval_count() const {
  std::size_t n = 0;
  for (const auto& [edge, list] : contacts) n += list.size();
  return n;
}

bool GraphSnapshot::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

double segment_min_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  const Eigen::Vector3d d = q - p;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return p.norm();
  const double s = std::clamp(-p.dot(d) / len2, 0.0, 1.0);
  return (p + s * d).norm();
}

bool line_of_sight(const Eigen::Vector3d& p, const Eigen::Vector3d& q, double radius_km) {
  return segment_min_distance(p, q) >= radius_km;
}

namespace {

// Bisection-refine the boundary of (d_L - R) inside [lo, hi] to within tol.
double refine_boundary(const Trajectory& a, const Trajectory& b, double radius_km, double lo,
                       double hi, bool lo_visible, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const bool vis = segment_min_distance(a.position_at(mid), b.position_at(mid)) >= radius_km;
    (vis == lo_visible ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<ContactInterval> contact_intervals(const Trajectory& a, const Trajectory& b,
                                               double radius_km, double dt, double tol) {
  if (dt <= 0.0 || tol <= 0.0) throw Error("contact_intervals: dt and tol must be positive");
  if (a.horizon != b.horizon) throw Error("contact_intervals: trajectories must share a horizon");

  const double t0 = a.horizon[0], t1 = a.horizon[1];
  const double span = t1 - t0;
  const auto steps = static_cast<long long>(std::floor(span / dt + 1e-9));

  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(steps) + 2);
  for (long long k = 0; k <= steps; ++k) ts.push_back(t0 + static_cast<double>(k) * dt);
  if (ts.back() < t1 - 1e-9 * std::max(1.0, span)) ts.push_back(t1);

  std::vector<ContactInterval> out;
  bool visible = false, open = false;
  double open_start = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const bool vis = segment_min_distance(a.position_at(ts[k]), b.position_at(ts[k])) >= radius_km;
    if (k == 0) {
      visible = vis;
      if (vis) {
        open = true;
        open_start = t0;
      }
      continue;
    }
    if (vis != visible) {
      const double boundary = refine_boundary(a, b, radius_km, ts[k - 1], ts[k], visible, tol);
      if (vis) {
        open = true;
        open_start = boundary;
      } else {
        out.push_back({open_start, boundary});
        open = false;
      }
      visible = vis;
    }
  }
  if (open) out.push_back({open_start, t1});

  // Drop degenerate (tangent-grazing) windows.
  std::erase_if(out, [tol](const ContactInterval& c) { return c.end - c.start <= tol; });
  return out;
}

GraphSnapshot visibility_graph(double t, const std::vector<std::string>& node_ids,
                               const std::vector<Eigen::Vector3d>& positions, double radius_km) {
  if (node_ids.size() != positions.size()) throw Error("visibility_graph: ids/positions mismatch");
  GraphSnapshot snap;
  snap.t = t;
  snap.node_ids = node_ids;
  snap.positions = positions;
  const int n = static_cast<int>(positions.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (line_of_sight(positions[i], positions[j], radius_km)) snap.edges.emplace_back(i, j);
  return snap;
}

ContactPlan contact_plan(const std::vector<Trajectory>& trajs, double radius_km, double dt,
                         double tol) {
  ContactPlan plan;
  plan.node_ids = trajectory_ids(trajs);
  if (!trajs.empty()) plan.horizon = trajs.front().horizon;
  const int n = static_cast<int>(trajs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto windows = contact_intervals(trajs[i], trajs[j], radius_km, dt, tol);
      if (!windows.empty()) plan.contacts.emplace(std::make_pair(i, j), std::move(windows));
    }
  }
  return plan;
}

void write_contact_plan_json(const ContactPlan& plan, std::ostream& os) {
  nlohmann::ordered_json j;
  j["horizon"] = {plan.horizon[0], plan.horizon[1]};
  j["nodes"] = plan.node_ids;
  auto& contacts = j["contacts"] = nlohmann::ordered_json::array();
  for (const auto& [edge, list] : plan.contacts) {
    for (const auto& c : list) {
      contacts.push_back({{"a", plan.node_ids[edge.first]},
                          {"b", plan.node_ids[edge.second]},
                          {"start", c.start},
                          {"end", c.end}});
    }
  }
  os << j.dump(2) << "\n";
}

ContactPlan read_contact_plan_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  ContactPlan plan;
  plan.horizon = {j.at("horizon").at(0).get<double>(), j.at("horizon").at(1).get<double>()};
  plan.node_ids = j.at("nodes").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(plan.node_ids.size()); ++i) index[plan.node_ids[i]] = i;
  for (const auto& c : j.at("contacts")) {
    int a = index.at(c.at("a").get<std::string>());
    int b = index.at(c.at("b").get<std::string>());
    if (a > b) std::swap(a, b);
    plan.contacts[{a, b}].push_back({c.at("start").get<double>(), c.at("end").get<double>()});
  }
  for (auto& [edge, list] : plan.contacts)
    std::sort(list.begin(), list.end(),
              [](const ContactInterval& x, const ContactInterval& y) { return x.start < y.start; });
  return plan;
}

void write_contact_plan_csv(const ContactPlan& plan, std::ostream& os) {
  os << "a,b,start,end\n";
  char buf[128];
  for (const auto& [edge, list] : plan.contacts) {
    for (const auto& c : list) {
      std::snprintf(buf, sizeof buf, "%s,%s,%.6f,%.6f\n", plan.node_ids[edge.first].c_str(),
                    plan.node_ids[edge.second].c_str(), c.start, c.end);
      os << buf;
    }
  }
}

}  // namespace orbitnet

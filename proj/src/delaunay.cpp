#include "orbitnet/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "orbitnet/errors.hpp"

namespace orbitnet {

int orient3d(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
             const Eigen::Vector3d& d, double eps) {
  const double det = (b - a).cross(c - a).dot(d - a);
  if (det > eps) return 1;
  if (det < -eps) return -1;
  return 0;
}

namespace {

double signed_volume(const std::vector<Eigen::Vector3d>& pts, const std::array<int, 3>& f, int d) {
  const Eigen::Vector3d &a = pts[f[0]], &b = pts[f[1]], &c = pts[f[2]];
  return (b - a).cross(c - a).dot(pts[d] - a);
}

// Incremental convex hull with an adjacency-connected conflict region.
// Faces come out consistently oriented outward. O(n^2), adequate at n <= 1000.
std::vector<std::array<int, 3>> convex_hull(const std::vector<Eigen::Vector3d>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw DegenerateInput("convex hull needs at least 4 points");

  // Initial simplex: spread-out quadruple with non-zero volume.
  int i1 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    const double d = (pts[i] - pts[0]).squaredNorm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (best <= kGeomEps) throw DegenerateInput("all points coincident");

  int i2 = -1;
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[0]).cross(pts[i1] - pts[0]).squaredNorm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (best <= kGeomEps) throw DegenerateInput("points are collinear");

  int i3 = -1;
  best = -1.0;
  const std::array<int, 3> base{0, i1, i2};
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(signed_volume(pts, base, i));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (best <= kGeomEps) throw DegenerateInput("points are coplanar");

  std::vector<std::array<int, 3>> faces;
  auto add_face = [&](int a, int b, int c, int opposite) {
    // Orient so the opposite simplex vertex lies on the negative side.
    if (signed_volume(pts, {a, b, c}, opposite) > 0.0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  add_face(0, i1, i2, i3);
  add_face(0, i1, i3, i2);
  add_face(0, i2, i3, i1);
  add_face(i1, i2, i3, 0);

  std::vector<bool> in_simplex(n, false);
  in_simplex[0] = in_simplex[i1] = in_simplex[i2] = in_simplex[i3] = true;

  for (int p = 0; p < n; ++p) {
    if (in_simplex[p]) continue;

    // Seed the conflict region at the most visible face.
    int seed = -1;
    double max_vol = -1.0;
    std::vector<double> vol(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
      vol[f] = signed_volume(pts, faces[f], p);
      if (vol[f] > max_vol) {
        max_vol = vol[f];
        seed = static_cast<int>(f);
      }
    }
    if (max_vol < -kGeomEps) continue;  // strictly interior

    // Adjacency over shared directed edges.
    std::map<std::pair<int, int>, int> by_edge;
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (int e = 0; e < 3; ++e) by_edge[{faces[f][e], faces[f][(e + 1) % 3]}] = static_cast<int>(f);

    // Visible set: faces with vol > -eps, connected to the seed. Coplanar
    // faces join the region only through it, which keeps far-side coplanar
    // faces (symmetric configurations) out of the conflict region.
    std::vector<bool> visible(faces.size(), false);
    std::vector<int> stack{seed};
    visible[seed] = true;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int e = 0; e < 3; ++e) {
        const auto it = by_edge.find({faces[f][(e + 1) % 3], faces[f][e]});
        if (it == by_edge.end()) continue;
        const int g = it->second;
        if (!visible[g] && vol[g] > -kGeomEps) {
          visible[g] = true;
          stack.push_back(g);
        }
      }
    }

    // Horizon: directed edges of visible faces whose twin face is hidden.
    std::vector<std::array<int, 2>> horizon;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) {
        const int u = faces[f][e], v = faces[f][(e + 1) % 3];
        const auto it = by_edge.find({v, u});
        if (it == by_edge.end() || !visible[it->second]) horizon.push_back({u, v});
      }
    }
    if (horizon.empty()) continue;  // on the hull surface but inside every face plane

    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (const auto& [u, v] : horizon) next.push_back({u, v, p});
    faces = std::move(next);
  }
  return faces;
}

std::pair<int, int> norm_edge(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

double apex_angle(const Eigen::Vector3d& p, const Eigen::Vector3d& q, const Eigen::Vector3d& r) {
  const Eigen::Vector3d u = p - r, v = q - r;
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace

std::vector<std::pair<int, int>> Triangulation::edges() const {
  std::set<std::pair<int, int>> set;
  for (const auto& t : triangles) {
    set.insert(norm_edge(t[0], t[1]));
    set.insert(norm_edge(t[1], t[2]));
    set.insert(norm_edge(t[2], t[0]));
  }
  return {set.begin(), set.end()};
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> Triangulation::edge_apexes() const {
  std::map<std::pair<int, int>, std::pair<int, int>> apex;
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const auto key = norm_edge(t[e], t[(e + 1) % 3]);
      const int opposite = t[(e + 2) % 3];
      auto [it, inserted] = apex.emplace(key, std::make_pair(opposite, -1));
      if (!inserted) it->second.second = opposite;
    }
  }
  return {apex.begin(), apex.end()};
}

Triangulation spherical_delaunay(const std::vector<std::string>& node_ids,
                                 const std::vector<Eigen::Vector3d>& points) {
  if (node_ids.size() != points.size()) throw DegenerateInput("ids/points size mismatch");
  if (points.size() < 4) throw DegenerateInput("spherical_delaunay needs >= 4 points");

  Triangulation tri;
  tri.node_ids = node_ids;
  tri.unit_points.reserve(points.size());
  for (const auto& p : points) {
    const double norm = p.norm();
    if (norm <= 0.0) throw DegenerateInput("point at the origin cannot be projected");
    tri.unit_points.push_back(p / norm);
  }
  for (std::size_t i = 0; i < tri.unit_points.size(); ++i)
    for (std::size_t j = i + 1; j < tri.unit_points.size(); ++j)
      if ((tri.unit_points[i] - tri.unit_points[j]).norm() <= kGeomEps)
        throw DegenerateInput("duplicate direction: " + node_ids[i] + " / " + node_ids[j]);

  tri.triangles = convex_hull(tri.unit_points);
  return tri;
}

Triangulation planar_delaunay(const std::vector<std::string>& node_ids,
                              const std::vector<Eigen::Vector2d>& points) {
  if (node_ids.size() != points.size()) throw DegenerateInput("ids/points size mismatch");
  if (points.size() < 4) throw DegenerateInput("planar_delaunay needs >= 4 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if ((points[i] - points[j]).norm() <= kGeomEps)
        throw DegenerateInput("duplicate point: " + node_ids[i] + " / " + node_ids[j]);

  std::vector<Eigen::Vector3d> lifted;
  lifted.reserve(points.size());
  for (const auto& p : points) lifted.emplace_back(p.x(), p.y(), p.squaredNorm());

  Triangulation tri;
  tri.node_ids = node_ids;
  tri.unit_points.reserve(points.size());
  for (const auto& p : points) tri.unit_points.emplace_back(p.x(), p.y(), 0.0);

  for (const auto& f : convex_hull(lifted)) {
    // Keep lower-hull faces (outward normal pointing down); flip them so the
    // projected triangles are counter-clockwise in the plane.
    const Eigen::Vector3d normal =
        (lifted[f[1]] - lifted[f[0]]).cross(lifted[f[2]] - lifted[f[0]]);
    if (normal.z() < -kGeomEps) tri.triangles.push_back({f[0], f[2], f[1]});
  }
  if (tri.triangles.empty()) throw DegenerateInput("planar points are collinear");
  return tri;
}

std::vector<std::pair<int, int>> alpha_stable_filter(const Triangulation& tri, double alpha) {
  constexpr double kAngleSlack = 1e-9;
  std::vector<std::pair<int, int>> kept;
  for (const auto& [edge, apexes] : tri.edge_apexes()) {
    const Eigen::Vector3d &p = tri.unit_points[edge.first], &q = tri.unit_points[edge.second];
    double sum = apex_angle(p, q, tri.unit_points[apexes.first]);
    if (apexes.second >= 0) sum += apex_angle(p, q, tri.unit_points[apexes.second]);
    if (sum <= std::numbers::pi - alpha + kAngleSlack) kept.push_back(edge);
  }
  return kept;
}

std::vector<std::pair<int, int>> delaunay_subgraph(const Triangulation& tri,
                                                   const GraphSnapshot& host) {
  if (tri.node_ids != host.node_ids) throw NodeSetMismatch("triangulation/host node sets differ");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : tri.edges())
    if (host.has_edge(e.first, e.second)) out.push_back(e);
  return out;
}

}  // namespace orbitnet

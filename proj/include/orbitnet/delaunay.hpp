#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "orbitnet/visibility.hpp"

namespace orbitnet {

/// Zero tolerance for geometric predicates on normalized coordinates.
inline constexpr double kGeomEps = 1e-12;

/// Sign of det[b-a, c-a, d-a]: +1 if d is on the positive side of the plane
/// through a, b, c; 0 if coplanar within eps.
int orient3d(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
             const Eigen::Vector3d& d, double eps = kGeomEps);

/**
 * Triangulation of directions on the unit sphere. Triangles are the faces of
 * the convex hull of the unit points, consistently oriented outward, so each
 * edge borders exactly two triangles.
 */
struct Triangulation {
  std::vector<std::string> node_ids;
  std::vector<Eigen::Vector3d> unit_points;
  std::vector<std::array<int, 3>> triangles;

  /// Sorted unique undirected edge list, pairs normalized a < b.
  std::vector<std::pair<int, int>> edges() const;

  /// For edge (a,b): the two opposite (apex) vertices of its adjacent
  /// triangles. Second is -1 if the edge borders a single triangle.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edge_apexes() const;
};

/**
 * Delaunay triangulation of point directions, realized as the convex hull of
 * the radially projected points. Requires >= 4 nodes spanning more than a
 * plane and no two coincident directions. Throws DegenerateInput.
 */
Triangulation spherical_delaunay(const std::vector<std::string>& node_ids,
                                 const std::vector<Eigen::Vector3d>& points);

/**
 * Planar Delaunay triangulation via the paraboloid lift: the lower convex
 * hull of (x, y, x^2 + y^2) projects to the Delaunay triangles of (x, y).
 * unit_points holds the planar points with z = 0.
 */
Triangulation planar_delaunay(const std::vector<std::string>& node_ids,
                              const std::vector<Eigen::Vector2d>& points);

/**
 * Stable-edge filter: keeps edge pq iff the apex angles at its two opposite
 * vertices sum to at most pi - alpha. alpha = 0 keeps every Delaunay edge.
 * Angles are Euclidean angles between the 3-vectors (p - r) and (q - r).
 */
std::vector<std::pair<int, int>> alpha_stable_filter(const Triangulation& tri, double alpha);

/// Intersection of the triangulation's edges with the host snapshot's edges.
/// Node id lists must match exactly; throws NodeSetMismatch.
std::vector<std::pair<int, int>> delaunay_subgraph(const Triangulation& tri,
                                                   const GraphSnapshot& host);

}  // namespace orbitnet

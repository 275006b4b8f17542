#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <limits>
#include <variant>
#include <vector>

namespace orbitnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Static weighted graph. Node ids are [0, n). Undirected graphs store each
/// edge once; algorithms relax both directions.
struct WeightedGraph {
  struct Edge {
    int u;
    int v;
    double w;
  };

  int n = 0;
  bool directed = true;
  std::vector<Edge> edges;

  void add_edge(int u, int v, double w) { edges.push_back({u, v, w}); }
};

/// Single-source distances and parent tree. dist is kInf for unreachable
/// nodes; parent is -1 at the source and at unreachable nodes.
struct ShortestPathResult {
  int source = 0;
  std::vector<double> dist;
  std::vector<int> parent;

  std::vector<int> path_to(int v) const;
};

/// Witness cycle with negative total weight, in traversal order.
struct NegativeCycleReport {
  std::vector<int> cycle;
  double weight = 0.0;
};

using BellmanFordResult = std::variant<ShortestPathResult, NegativeCycleReport>;

/// Binary-heap Dijkstra; ties broken by smallest node id. Throws
/// NegativeWeight if any edge weight is negative.
ShortestPathResult dijkstra(const WeightedGraph& g, int source);

/// Bellman-Ford-Moore: n-1 relaxation rounds; an improving n-th round yields
/// a NegativeCycleReport instead of a result.
BellmanFordResult bellman_ford(const WeightedGraph& g, int source);

/**
 * All-pairs shortest paths by repeated min-plus squaring of the weighted
 * adjacency matrix (0 on the diagonal, kInf where no edge). The output is
 * validated to have a zero diagonal and satisfy the triangle inequality;
 * throws NegativeCycleDetected otherwise.
 */
Eigen::MatrixXd minplus_apsp(const WeightedGraph& g);

/// One min-plus product, exposed for tests.
Eigen::MatrixXd minplus_multiply(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Parametric shortest path at a fixed parameter: Bellman-Ford on the
/// shifted weights w(e) - lambda.
BellmanFordResult sp_at_lambda(const WeightedGraph& g, double lambda, int source);

/// Edge-list text format: header "n directed", then one "u v w" line per edge.
WeightedGraph read_edge_list(std::istream& is);
void write_edge_list(const WeightedGraph& g, std::ostream& os);

}  // namespace orbitnet

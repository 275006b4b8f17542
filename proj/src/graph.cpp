#include "orbitnet/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "orbitnet/errors.hpp"

namespace orbitnet {

std::vector<int> ShortestPathResult::path_to(int v) const {
  if (dist[v] == kInf) return {};
  std::vector<int> path{v};
  while (v != source) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

std::vector<std::vector<std::pair<int, double>>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.w);
    if (!g.directed) adj[e.v].emplace_back(e.u, e.w);
  }
  return adj;
}

// Directed edge view; undirected edges appear in both directions.
std::vector<WeightedGraph::Edge> directed_edges(const WeightedGraph& g, double shift = 0.0) {
  std::vector<WeightedGraph::Edge> out;
  out.reserve(g.edges.size() * (g.directed ? 1 : 2));
  for (const auto& e : g.edges) {
    out.push_back({e.u, e.v, e.w - shift});
    if (!g.directed) out.push_back({e.v, e.u, e.w - shift});
  }
  return out;
}

BellmanFordResult bellman_ford_shifted(const WeightedGraph& g, int source, double shift) {
  const auto edges = directed_edges(g, shift);
  ShortestPathResult res;
  res.source = source;
  res.dist.assign(g.n, kInf);
  res.parent.assign(g.n, -1);
  res.dist[source] = 0.0;

  for (int round = 0; round + 1 < g.n; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (res.dist[e.u] == kInf) continue;
      const double cand = res.dist[e.u] + e.w;
      if (cand < res.dist[e.v]) {
        res.dist[e.v] = cand;
        res.parent[e.v] = e.u;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // An improving n-th round witnesses a negative cycle; walk the parent chain
  // n steps to land inside it, then collect.
  for (const auto& e : edges) {
    if (res.dist[e.u] == kInf || res.dist[e.u] + e.w >= res.dist[e.v]) continue;
    res.parent[e.v] = e.u;
    int x = e.v;
    for (int i = 0; i < g.n; ++i) x = res.parent[x];
    NegativeCycleReport report;
    int y = x;
    do {
      report.cycle.push_back(y);
      y = res.parent[y];
    } while (y != x);
    std::reverse(report.cycle.begin(), report.cycle.end());
    for (std::size_t i = 0; i < report.cycle.size(); ++i) {
      const int u = report.cycle[i], v = report.cycle[(i + 1) % report.cycle.size()];
      double best = kInf;
      for (const auto& d : edges)
        if (d.u == u && d.v == v) best = std::min(best, d.w);
      report.weight += best;
    }
    return report;
  }
  return res;
}

}  // namespace

ShortestPathResult dijkstra(const WeightedGraph& g, int source) {
  for (const auto& e : g.edges)
    if (e.w < 0.0) throw NegativeWeight("dijkstra: negative edge weight");

  const auto adj = adjacency(g);
  ShortestPathResult res;
  res.source = source;
  res.dist.assign(g.n, kInf);
  res.parent.assign(g.n, -1);
  res.dist[source] = 0.0;

  using Item = std::pair<double, int>;  // (dist, node): node id breaks ties
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0.0, source});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > res.dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      const double cand = d + w;
      if (cand < res.dist[v]) {
        res.dist[v] = cand;
        res.parent[v] = u;
        pq.push({cand, v});
      }
    }
  }
  return res;
}

BellmanFordResult bellman_ford(const WeightedGraph& g, int source) {
  return bellman_ford_shifted(g, source, 0.0);
}

Eigen::MatrixXd minplus_multiply(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const auto n = a.rows();
  Eigen::MatrixXd c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double best = kInf;
      for (Eigen::Index k = 0; k < n; ++k) {
        const double cand = a(i, k) + b(k, j);
        if (cand < best) best = cand;
      }
      c(i, j) = best;
    }
  }
  return c;
}

Eigen::MatrixXd minplus_apsp(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Constant(n, n, kInf);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = 0.0;
  for (const auto& e : directed_edges(g)) a(e.u, e.v) = std::min(a(e.u, e.v), e.w);

  // Square up to at least A^n so any negative cycle reaches the diagonal.
  for (Eigen::Index power = 1; power < std::max<Eigen::Index>(n, 2); power *= 2) {
    a = minplus_multiply(a, a);
    for (Eigen::Index i = 0; i < n; ++i)
      if (a(i, i) < 0.0) throw NegativeCycleDetected("negative diagonal during squaring");
  }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (a(i, j) > a(i, k) + a(k, j))
          throw NegativeCycleDetected("triangle inequality violated in APSP output");
  return a;
}

BellmanFordResult sp_at_lambda(const WeightedGraph& g, double lambda, int source) {
  return bellman_ford_shifted(g, source, lambda);
}

WeightedGraph read_edge_list(std::istream& is) {
  WeightedGraph g;
  std::string line;
  bool header_done = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!header_done) {
      int directed = 1;
      if (!(ls >> g.n >> directed)) throw IoError("edge list: bad header: " + line);
      g.directed = directed != 0;
      header_done = true;
      continue;
    }
    int u, v;
    double w;
    if (!(ls >> u >> v >> w)) throw IoError("edge list: bad edge line: " + line);
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw IoError("edge list: node out of range: " + line);
    g.add_edge(u, v, w);
  }
  if (!header_done) throw IoError("edge list: missing header");
  return g;
}

void write_edge_list(const WeightedGraph& g, std::ostream& os) {
  os << g.n << " " << (g.directed ? 1 : 0) << "\n";
  char buf[96];
  for (const auto& e : g.edges) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.w);
    os << buf;
  }
}

}  // namespace orbitnet

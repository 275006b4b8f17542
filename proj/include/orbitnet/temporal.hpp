#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitnet/visibility.hpp"

namespace orbitnet {

/**
 * Piecewise-linear scalar function of time, defined by breakpoints and
 * values. Evaluation clamps to the boundary value outside the breakpoint
 * range. Values may be +infinity to mark an edge as unavailable from some
 * time on; a piece with an infinite endpoint evaluates to +infinity on its
 * interior.
 */
struct PlFunction {
  Eigen::VectorXd t;
  Eigen::VectorXd v;

  double eval(double time) const;
  static PlFunction constant(double lo, double hi, double value);
};

/// Time-varying graph, function form: directed edges carrying travel-time
/// functions w_uv(t) >= 0 over the horizon.
struct FunctionTvg {
  int n = 0;
  std::array<double, 2> horizon{0.0, 0.0};
  std::map<std::pair<int, int>, PlFunction> weights;
};

/// Time-varying graph, interval form: directed edges carrying the discrete
/// times at which a unit-time traversal may start.
struct IntervalTvg {
  int n = 0;
  std::array<double, 2> horizon{0.0, 0.0};
  std::map<std::pair<int, int>, std::vector<double>> times;
};

/**
 * Static expansion of an interval-form graph: one layer per distinct edge
 * time plus a terminal arrival layer. Traversal arcs connect consecutive
 * layers for edges active at the layer time; waiting arcs (v, i) -> (v, i+1)
 * are always present for every node and are implicit.
 */
struct LayeredDag {
  int n = 0;
  std::vector<double> layer_times;                       ///< strictly increasing, size p+1
  std::vector<std::vector<std::pair<int, int>>> arcs;    ///< arcs[i]: layer i -> i+1

  int layer_count() const { return static_cast<int>(layer_times.size()); }
  long long node_count() const { return static_cast<long long>(layer_count()) * n; }
  long long waiting_arc_count() const { return static_cast<long long>(layer_count() - 1) * n; }
  long long traversal_arc_count() const;
};

/// Throws EmptyTimeSet when no edge carries any time.
LayeredDag static_expansion(const IntervalTvg& tvg);

/**
 * Earliest arrival at `target` over the expansion, starting from `source` no
 * earlier than t0 (the walk begins at the first layer at or after t0).
 * Returns the arrival layer's time, t0 itself when source == target, or
 * nullopt when unreachable.
 */
std::optional<double> earliest_arrival_dag(const LayeredDag& dag, int source, int target,
                                           double t0);

/// Strict FIFO test: every piece of every edge function is finite with slope
/// strictly greater than -1.
bool check_fifo(const FunctionTvg& tvg);

/**
 * Time-dependent Dijkstra: label-setting on arrival times a_uv(t) = t +
 * w_uv(t), departing no later than the horizon end. Requires non-decreasing
 * arrival functions (piece slopes >= -1, unavailability only as a terminal
 * +infinity tail); otherwise throws NotFifo. Returns nullopt when
 * unreachable.
 */
std::optional<double> td_dijkstra(const FunctionTvg& tvg, int source, int target, double t0);

/**
 * Exact function-form equivalent of an interval-form graph: each edge's
 * arrival function maps a departure time to the arrival layer time of the
 * next activation, +infinity after the last activation. Waiting inside the
 * edge yields slope -1 pieces, which td_dijkstra accepts.
 */
FunctionTvg interval_to_function_tvg(const IntervalTvg& tvg);

/// Interval-form graph from a contact plan: both directions of every contact
/// edge, active at each grid time t0 + k dt that falls inside a window.
IntervalTvg interval_tvg_from_plan(const ContactPlan& plan, double dt);

/// JSON form: {"n":..,"horizon":[..],"edges":[{"u":..,"v":..,"t":[..],"w":[..]}]}
/// +infinity values round-trip as null.
void write_function_tvg_json(const FunctionTvg& tvg, std::ostream& os);
FunctionTvg read_function_tvg_json(std::istream& is);

}  // namespace orbitnet

// orbitnet command-line front end: TLE/Walker ingestion, ephemeris sampling,
// contact plans, topological event counting, and routing comparisons.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitnet/errors.hpp"
#include "orbitnet/experiments.hpp"
#include "orbitnet/routing.hpp"
#include "orbitnet/temporal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct CommonOpts {
  std::string tle_path;
  std::string walker_spec;  // "P,S,INC_DEG,ALT_KM"
  int n = 0;
  double horizon = 6600.0;
  double dt = 10.0;
  std::vector<double> alphas;
  double radius = orbitnet::kEarthRadiusKm;
  std::uint64_t seed = 0;
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tle", o.tle_path, "TLE file (2-line or 3-line records)");
  cmd->add_option("--walker", o.walker_spec, "synthetic constellation P,S,INC_DEG,ALT_KM");
  cmd->add_option("--n", o.n, "number of satellites to sample (default: all)");
  cmd->add_option("--horizon", o.horizon, "horizon length in seconds")->default_val(6600.0);
  cmd->add_option("--dt", o.dt, "sampling step in seconds")->default_val(10.0);
  cmd->add_option("--alpha", o.alphas, "stability parameter (repeatable)");
  cmd->add_option("--radius", o.radius, "occlusion radius in km")->default_val(orbitnet::kEarthRadiusKm);
  cmd->add_option("--seed", o.seed, "PRNG seed")->default_val(0);
  cmd->add_option("--out", o.out_dir, "output directory");
}

orbitnet::ExperimentConfig to_config(const CommonOpts& o) {
  orbitnet::ExperimentConfig cfg;
  if (!o.tle_path.empty()) cfg.tle_path = o.tle_path;
  if (!o.walker_spec.empty()) {
    orbitnet::WalkerSpec w;
    double inc_deg = 0.0;
    if (std::sscanf(o.walker_spec.c_str(), "%d,%d,%lf,%lf", &w.planes, &w.sats_per_plane, &inc_deg,
                    &w.altitude_km) != 4)
      throw orbitnet::ConfigError("--walker expects P,S,INC_DEG,ALT_KM");
    w.inclination_rad = inc_deg * std::numbers::pi / 180.0;
    cfg.walker = w;
  }
  if (!cfg.tle_path && !cfg.walker)
    throw orbitnet::ConfigError("need --tle PATH or --walker P,S,INC_DEG,ALT_KM");
  const int available = static_cast<int>(orbitnet::load_elements(cfg).size());
  cfg.n_sample = o.n > 0 ? o.n : available;
  cfg.horizon_s = o.horizon;
  cfg.dt_s = o.dt;
  if (!o.alphas.empty()) cfg.alphas = o.alphas;
  cfg.earth_radius_km = o.radius;
  cfg.seed = o.seed;
  cfg.out_dir = o.out_dir;
  return cfg;
}

int cmd_propagate(const CommonOpts& o) {
  const auto cfg = to_config(o);
  const auto trajs = orbitnet::build_trajectories(cfg);
  std::ostringstream out;
  out << "sat_id,t,x_km,y_km,z_km,vx_km_s,vy_km_s,vz_km_s\n";
  char buf[256];
  for (const auto& tr : trajs) {
    for (const auto& s : tr.samples) {
      std::snprintf(buf, sizeof buf, "%s,%.6f,%.9f,%.9f,%.9f,%.9f,%.9f,%.9f\n", tr.sat_id.c_str(),
                    s.t, s.position_km.x(), s.position_km.y(), s.position_km.z(),
                    s.velocity_km_s.x(), s.velocity_km_s.y(), s.velocity_km_s.z());
      out << buf;
    }
  }
  if (o.out_dir.empty()) {
    std::cout << out.str();
  } else {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream os(std::filesystem::path(o.out_dir) / "ephemeris.csv", std::ios::binary);
    os << out.str();
  }
  return kExitOk;
}

int cmd_contacts(const CommonOpts& o) {
  const auto cfg = to_config(o);
  const auto trajs = orbitnet::build_trajectories(cfg);
  const auto plan = orbitnet::contact_plan(trajs, cfg.earth_radius_km, cfg.dt_s, cfg.tol_s);
  if (o.out_dir.empty()) {
    orbitnet::write_contact_plan_json(plan, std::cout);
  } else {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream os(std::filesystem::path(o.out_dir) / "contacts.json", std::ios::binary);
    orbitnet::write_contact_plan_json(plan, os);
  }
  return kExitOk;
}

int cmd_events(const CommonOpts& o) {
  auto cfg = to_config(o);
  if (cfg.out_dir.empty()) throw orbitnet::ConfigError("events: --out DIR is required");
  const auto result = orbitnet::run_event_experiment(cfg);
  for (const auto& log : result.logs)
    std::cerr << log.family << ": " << log.total_events() << " events, "
              << (log.cumulative_edges.empty() ? 0 : log.cumulative_edges.back().second)
              << " distinct edges\n";
  return kExitOk;
}

int cmd_route(const CommonOpts& o, const std::string& src, const std::string& dst, double t0,
              const std::string& scheme_name, double scheme_alpha) {
  const auto cfg = to_config(o);
  const auto trajs = orbitnet::build_trajectories(cfg);

  int s = -1, t = -1;
  for (int i = 0; i < static_cast<int>(trajs.size()); ++i) {
    if (trajs[i].sat_id == src) s = i;
    if (trajs[i].sat_id == dst) t = i;
  }
  if (s < 0 || t < 0) throw orbitnet::ConfigError("route: unknown satellite id");

  orbitnet::SchemeSpec scheme;
  if (scheme_name == "dijkstra-on-vis") scheme.kind = orbitnet::SchemeSpec::Kind::DijkstraOnVis;
  else if (scheme_name == "expansion-earliest-arrival")
    scheme.kind = orbitnet::SchemeSpec::Kind::ExpansionEarliestArrival;
  else if (scheme_name == "greedy-on-delaunay") {
    scheme.kind = orbitnet::SchemeSpec::Kind::GreedyOnDelaunay;
    scheme.alpha = scheme_alpha;
  } else {
    throw orbitnet::ConfigError("route: unknown scheme " + scheme_name);
  }

  const double start = trajs.front().horizon[0] + t0;
  const auto r = orbitnet::route_over_time(trajs, cfg.earth_radius_km, cfg.dt_s, scheme, s, t, start);
  std::cout << "scheme," << r.trace.scheme << "\n";
  std::cout << "path,";
  for (std::size_t i = 0; i < r.route.path.size(); ++i)
    std::cout << (i ? " " : "") << trajs[r.route.path[i]].sat_id;
  std::cout << "\n";
  std::cout << "delivered," << (r.route.delivered ? 1 : 0) << "\n";
  if (r.route.delivered) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.arrival_s);
    std::cout << "arrival," << buf << "\n";
  }
  std::cout << "hops," << r.route.hop_count << "\n";
  std::cout << "recomputations," << r.trace.recompute_count << "\n";
  return kExitOk;
}

int cmd_experiment(const CommonOpts& o, int pairs) {
  auto cfg = to_config(o);
  if (cfg.out_dir.empty()) throw orbitnet::ConfigError("experiment: --out DIR is required");
  const auto events = orbitnet::run_event_experiment(cfg);
  const auto routing = orbitnet::run_routing_experiment(cfg, pairs);
  std::cerr << "wrote " << events.events_csv.string() << ", " << events.cumulative_csv.string()
            << ", " << events.summary_json.string() << ", " << routing.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-varying satellite network toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string route_src, route_dst, route_scheme = "dijkstra-on-vis";
  double route_t0 = 0.0, route_alpha = 0.5;
  int pairs = 20;

  auto* propagate = app.add_subcommand("propagate", "sample ephemerides to CSV");
  add_common(propagate, opts);
  auto* contacts = app.add_subcommand("contacts", "compute the contact plan as JSON");
  add_common(contacts, opts);
  auto* events = app.add_subcommand("events", "count topological critical events per family");
  add_common(events, opts);
  auto* route = app.add_subcommand("route", "route one message and print the result");
  add_common(route, opts);
  route->add_option("--src", route_src, "source satellite id")->required();
  route->add_option("--dst", route_dst, "target satellite id")->required();
  route->add_option("--t0", route_t0, "start offset into the horizon, seconds")->default_val(0.0);
  route->add_option("--scheme", route_scheme,
                    "dijkstra-on-vis | expansion-earliest-arrival | greedy-on-delaunay");
  route->add_option("--scheme-alpha", route_alpha, "alpha for greedy-on-delaunay");
  auto* experiment = app.add_subcommand("experiment", "full event + routing pipeline");
  add_common(experiment, opts);
  experiment->add_option("--pairs", pairs, "number of routing pairs")->default_val(20);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (propagate->parsed()) return cmd_propagate(opts);
    if (contacts->parsed()) return cmd_contacts(opts);
    if (events->parsed()) return cmd_events(opts);
    if (route->parsed()) return cmd_route(opts, route_src, route_dst, route_t0, route_scheme, route_alpha);
    if (experiment->parsed()) return cmd_experiment(opts, pairs);
  } catch (const orbitnet::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

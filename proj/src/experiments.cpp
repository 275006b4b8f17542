#include "orbitnet/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "orbitnet/errors.hpp"
#include "orbitnet/rng.hpp"
#include "orbitnet/routing.hpp"

namespace orbitnet {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);  // LF line endings everywhere
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  return os;
}

std::string format_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!tle_path && !walker) throw ConfigError("need a TLE path or a Walker spec");
  if (n_sample < 1) throw ConfigError("n_sample must be >= 1");
  if (dt_s <= 0.0) throw ConfigError("dt must be positive");
  if (horizon_s < 0.0) throw ConfigError("horizon must be non-negative");
  if (tol_s <= 0.0) throw ConfigError("tol must be positive");
  if (earth_radius_km <= 0.0) throw ConfigError("earth radius must be positive");
  for (double a : alphas)
    if (a < 0.0 || a >= std::numbers::pi) throw ConfigError("alpha must lie in [0, pi)");
}

std::vector<OrbitalElements> load_elements(const ExperimentConfig& cfg) {
  if (cfg.tle_path) {
    std::ifstream is(*cfg.tle_path);
    if (!is) throw IoError("cannot read TLE file " + *cfg.tle_path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
    return parse_tle(lines);
  }
  return walker_constellation(*cfg.walker);
}

std::vector<Trajectory> build_trajectories(const ExperimentConfig& cfg) {
  cfg.validate();
  auto elements = load_elements(cfg);
  const int available = static_cast<int>(elements.size());
  if (cfg.n_sample > available)
    throw ConfigError("n_sample " + std::to_string(cfg.n_sample) + " exceeds available " +
                      std::to_string(available));

  // Partial Fisher-Yates over element indices with the seeded generator.
  SplitMix64 rng(cfg.seed);
  std::vector<int> order(available);
  for (int i = 0; i < available; ++i) order[i] = i;
  for (int i = 0; i < cfg.n_sample; ++i) {
    const int j = i + rng.uniform_int(available - i);
    std::swap(order[i], order[j]);
  }

  const double epoch = elements.empty() ? 0.0 : elements.front().epoch_s;
  std::vector<Trajectory> trajs;
  trajs.reserve(cfg.n_sample);
  for (int i = 0; i < cfg.n_sample; ++i) {
    OrbitalElements el = elements[order[i]];
    trajs.push_back(sample_trajectory(el, {epoch, epoch + cfg.horizon_s}, cfg.dt_s));
  }
  return trajs;
}

EventExperimentResult run_event_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.out_dir.empty()) throw ConfigError("event experiment needs an output directory");
  std::filesystem::create_directories(cfg.out_dir);

  const auto trajs = build_trajectories(cfg);
  const std::array<double, 2> horizon = trajs.front().horizon;

  std::vector<FamilySpec> families{{FamilySpec::Kind::Vis, 0.0},
                                   {FamilySpec::Kind::Delaunay, 0.0}};
  for (double a : cfg.alphas)
    if (a != 0.0) families.push_back({FamilySpec::Kind::Delaunay, a});

  EventExperimentResult result;
  for (const auto& family : families)
    result.logs.push_back(
        count_critical_events(trajs, family, cfg.earth_radius_km, cfg.dt_s, horizon));

  result.events_csv = cfg.out_dir / "events.csv";
  result.cumulative_csv = cfg.out_dir / "cumulative_edges.csv";
  result.summary_json = cfg.out_dir / "summary.json";

  {
    auto os = open_out(result.events_csv);
    write_events_csv(result.logs, os);
  }
  {
    auto os = open_out(result.cumulative_csv);
    write_cumulative_csv(result.logs, os);
  }

  nlohmann::ordered_json summary;
  summary["n"] = static_cast<int>(trajs.size());
  summary["horizon"] = {horizon[0], horizon[1]};
  summary["dt"] = cfg.dt_s;
  summary["earth_radius_km"] = cfg.earth_radius_km;
  summary["seed"] = cfg.seed;
  auto& fam = summary["families"] = nlohmann::ordered_json::array();
  for (const auto& log : result.logs) {
    nlohmann::ordered_json f;
    f["family"] = log.family;
    f["total_events"] = log.total_events();
    f["distinct_cumulative_edges"] =
        log.cumulative_edges.empty() ? 0 : log.cumulative_edges.back().second;
    const auto integrated = log.integrated_edge_time();
    f["integrated_edge_time"] = integrated.empty() ? 0.0 : integrated.back().second;
    fam.push_back(std::move(f));
  }
  auto& ratios = summary["event_ratios"] = nlohmann::ordered_json::object();
  for (const auto& a : result.logs) {
    for (const auto& b : result.logs) {
      if (a.family == b.family || b.total_events() == 0) continue;
      ratios[a.family + "/" + b.family] =
          static_cast<double>(a.total_events()) / b.total_events();
    }
  }
  {
    auto os = open_out(result.summary_json);
    os << summary.dump(2) << "\n";
  }
  return result;
}

std::filesystem::path run_routing_experiment(const ExperimentConfig& cfg, int pairs) {
  cfg.validate();
  if (pairs < 1) throw ConfigError("pairs must be >= 1");
  if (cfg.out_dir.empty()) throw ConfigError("routing experiment needs an output directory");
  std::filesystem::create_directories(cfg.out_dir);

  const auto trajs = build_trajectories(cfg);
  const int n = static_cast<int>(trajs.size());
  if (n < 2) throw ConfigError("routing experiment needs at least 2 satellites");
  const std::array<double, 2> horizon = trajs.front().horizon;

  std::vector<SchemeSpec> schemes{{SchemeSpec::Kind::DijkstraOnVis, 0.0},
                                  {SchemeSpec::Kind::ExpansionEarliestArrival, 0.0}};
  for (double a : cfg.alphas) schemes.push_back({SchemeSpec::Kind::GreedyOnDelaunay, a});

  SplitMix64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  const auto path = cfg.out_dir / "routing.csv";
  auto os = open_out(path);
  os << "pair,scheme,source,target,t0,delivered,hops,ratio,recompute_count,global_events\n";

  for (int p = 0; p < pairs; ++p) {
    const int s = rng.uniform_int(n);
    int t = rng.uniform_int(n - 1);
    if (t >= s) ++t;
    const double t0 = horizon[0] + rng.uniform(0.0, 0.5 * (horizon[1] - horizon[0]));

    for (const auto& scheme : schemes) {
      const auto r = route_over_time(trajs, cfg.earth_radius_km, cfg.dt_s, scheme, s, t, t0);
      std::string ratio = "";
      if (r.route.delivered && r.route.hop_count > 0) {
        const GraphSnapshot snap{t0, trajectory_ids(trajs), positions_at(trajs, t0), {}};
        ratio = format_g(r.route.euclidean_length_km /
                         (snap.positions[s] - snap.positions[t]).norm());
      }
      os << p << "," << scheme.label() << "," << trajs[s].sat_id << "," << trajs[t].sat_id << ","
         << format_g(t0) << "," << (r.route.delivered ? 1 : 0) << "," << r.route.hop_count << ","
         << ratio << "," << r.trace.recompute_count << "," << r.trace.global_events << "\n";
    }
  }
  return path;
}

}  // namespace orbitnet

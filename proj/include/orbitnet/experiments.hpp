#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orbitnet/kinetic.hpp"
#include "orbitnet/trajectory.hpp"

namespace orbitnet {

/**
 * Configuration shared by the experiment pipelines. Satellites come either
 * from a TLE file or a synthetic Walker constellation; n_sample of them are
 * drawn with the seeded generator. Defaults: 90 satellites over 6600 s at
 * dt = 10 s against a 6371 km Earth, stability parameters 0.5 and 0.8.
 */
struct ExperimentConfig {
  std::optional<std::string> tle_path;
  std::optional<WalkerSpec> walker;
  int n_sample = 90;
  double horizon_s = 6600.0;
  double dt_s = 10.0;
  double tol_s = 0.1;
  std::vector<double> alphas = {0.5, 0.8};
  double earth_radius_km = kEarthRadiusKm;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;

  void validate() const;  ///< throws ConfigError
};

/// Elements from the configured source (file or Walker synthesis).
std::vector<OrbitalElements> load_elements(const ExperimentConfig& cfg);

/// Seeded sample of n_sample elements, propagated over [0, horizon_s].
std::vector<Trajectory> build_trajectories(const ExperimentConfig& cfg);

struct EventExperimentResult {
  std::vector<EventLog> logs;
  std::filesystem::path events_csv;
  std::filesystem::path cumulative_csv;
  std::filesystem::path summary_json;
};

/**
 * Fig-7-style event counting: families Vis, Delaunay, and one alpha-stable
 * Delaunay subgraph per configured alpha, all over the same trajectories.
 * Writes events.csv, cumulative_edges.csv, and summary.json into out_dir.
 */
EventExperimentResult run_event_experiment(const ExperimentConfig& cfg);

/**
 * Routing comparison: for `pairs` seeded (source, target, t0) triples, runs
 * dijkstra-on-vis, expansion-earliest-arrival, and greedy-on-delaunay(alpha)
 * per configured alpha, one routing.csv row per (pair, scheme).
 */
std::filesystem::path run_routing_experiment(const ExperimentConfig& cfg, int pairs);

}  // namespace orbitnet

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "orbitnet/errors.hpp"
#include "orbitnet/orbital.hpp"
#include "orbitnet/rng.hpp"

using namespace orbitnet;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Classic reference record; checksums are re-derived below before use.
const std::vector<std::string> kIssTle = {
    "ISS (ZARYA)",
    "1 25544U 98067A   08264.51782528 -.00002182  00000-0 -11606-4 0  2927",
    "2 25544  51.6416 247.4627 0006703 130.5360 325.0288 15.72125391563537",
};

// Independent mod-10 rule: digit sum with '-' counting as 1.
int checksum_oracle(const std::string& line) {
  int sum = 0;
  for (std::size_t i = 0; i + 1 < line.size() && i < 68; ++i) {
    const char c = line[i];
    if (c >= '0' && c <= '9') sum += c - '0';
    if (c == '-') sum += 1;
  }
  return sum % 10;
}

// Bisection on E - e sin E - M over [0, 2*pi]; independent of solve_kepler.
double kepler_bisection_oracle(double m, double e) {
  double lo = 0.0, hi = kTwoPi;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((mid - e * std::sin(mid) - m) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

OrbitalElements make_elements(double a_km, double e, double inc, double raan, double argp,
                              double m0, double epoch = 0.0) {
  OrbitalElements el;
  el.sat_id = "TEST";
  el.epoch_s = epoch;
  el.semi_major_axis_km = a_km;
  el.eccentricity = e;
  el.inclination_rad = inc;
  el.raan_rad = raan;
  el.arg_perigee_rad = argp;
  el.mean_anomaly_rad = m0;
  el.mean_motion_rad_s = std::sqrt(kMuEarth / (a_km * a_km * a_km));
  return el;
}

}  // namespace

TEST_CASE("tle checksum matches the digit-sum oracle on the fixture lines") {
  for (int i : {1, 2}) {
    const std::string& line = kIssTle[i];
    CHECK(tle_checksum(line) == checksum_oracle(line));
    CHECK(line[68] - '0' == checksum_oracle(line));  // fixture itself is valid
  }
}

TEST_CASE("parse_tle reads the reference record") {
  const auto els = parse_tle(kIssTle);
  REQUIRE(els.size() == 1);
  const auto& el = els[0];
  CHECK(el.sat_id == "ISS (ZARYA)");
  CHECK(el.inclination_rad == doctest::Approx(51.6416 * std::numbers::pi / 180.0).epsilon(1e-12));
  CHECK(el.raan_rad == doctest::Approx(247.4627 * std::numbers::pi / 180.0).epsilon(1e-12));
  CHECK(el.eccentricity == doctest::Approx(0.0006703).epsilon(1e-12));
  CHECK(el.arg_perigee_rad == doctest::Approx(130.5360 * std::numbers::pi / 180.0).epsilon(1e-12));
  CHECK(el.mean_anomaly_rad == doctest::Approx(325.0288 * std::numbers::pi / 180.0).epsilon(1e-12));
  CHECK(el.mean_motion_rad_s == doctest::Approx(15.72125391 * kTwoPi / 86400.0).epsilon(1e-12));

  // Epoch oracle via std::chrono: 2008 day-of-year 264.51782528.
  using namespace std::chrono;
  const auto jan1 = sys_days{year{2008} / January / 1}.time_since_epoch().count();
  const double expected = (jan1 + 264.51782528 - 1.0) * 86400.0;
  CHECK(el.epoch_s == doctest::Approx(expected).epsilon(1e-12));

  // Semi-major axis consistent with the mean motion.
  CHECK(std::pow(el.semi_major_axis_km, 3.0) * el.mean_motion_rad_s * el.mean_motion_rad_s ==
        doctest::Approx(kMuEarth).epsilon(1e-12));
}

TEST_CASE("parse_tle edge cases") {
  CHECK(parse_tle({}).empty());
  CHECK(parse_tle({"", "   "}).empty());

  SUBCASE("line of length 68 is malformed") {
    auto bad = kIssTle;
    bad[1] = bad[1].substr(0, 68);
    CHECK_THROWS_AS(parse_tle(bad), MalformedLine);
  }
  SUBCASE("corrupted checksum digit") {
    auto bad = kIssTle;
    bad[2][68] = bad[2][68] == '9' ? '0' : bad[2][68] + 1;
    CHECK_THROWS_AS(parse_tle(bad), ChecksumMismatch);
  }
  SUBCASE("non-numeric field") {
    auto bad = kIssTle;
    bad[2][10] = 'x';
    bad[2][68] = '0' + checksum_oracle(bad[2]);
    CHECK_THROWS_AS(parse_tle(bad), MalformedLine);
  }
}

TEST_CASE("solve_kepler pinned and oracle values") {
  CHECK(solve_kepler(1.2, 0.0) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(solve_kepler(0.0, 0.7) == doctest::Approx(0.0));

  const double e_ref = kepler_bisection_oracle(1.0, 0.5);
  CHECK(std::abs(e_ref - 1.4987) < 1e-3);
  CHECK(solve_kepler(1.0, 0.5) == doctest::Approx(e_ref).epsilon(1e-10));

  SUBCASE("branch preservation") {
    const double m = 1.0 + 3.0 * kTwoPi;
    CHECK(solve_kepler(m, 0.5) == doctest::Approx(e_ref + 3.0 * kTwoPi).epsilon(1e-10));
  }
  SUBCASE("residual below 1e-12 across random inputs") {
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
      const double m = rng.uniform(-3.0 * kTwoPi, 3.0 * kTwoPi);
      const double e = rng.uniform(0.0, 0.95);
      const double E = solve_kepler(m, e);
      CHECK(std::abs(E - e * std::sin(E) - m) < 1e-12);
    }
  }
  SUBCASE("rejects hyperbolic eccentricity") {
    CHECK_THROWS_AS(solve_kepler(1.0, 1.0), EccentricityOutOfRange);
  }
}

TEST_CASE("propagate: circular equatorial orbit stays at radius a") {
  const auto el = make_elements(7000.0, 0.0, 0.0, 0.0, 0.0, 0.3);
  for (double t : {0.0, 500.0, 1234.5, 5000.0}) {
    const auto sv = propagate(el, t);
    CHECK(sv.position_km.norm() == doctest::Approx(7000.0).epsilon(1e-10));
    CHECK(std::abs(sv.position_km.z()) < 1e-9);
  }
}

TEST_CASE("propagate: period return and mean-motion arithmetic") {
  const double mm = 15.05 * kTwoPi / 86400.0;
  OrbitalElements el = make_elements(7000.0, 0.1, 0.9, 1.0, 2.0, 0.5);
  el.mean_motion_rad_s = mm;
  el.semi_major_axis_km = std::cbrt(kMuEarth / (mm * mm));
  CHECK(std::abs(el.period_s() - 5741.0) < 1.0);

  const auto ref = propagate(el, el.epoch_s);
  for (int k = 1; k <= 3; ++k) {
    const auto again = propagate(el, el.epoch_s + k * el.period_s());
    CHECK((again.position_km - ref.position_km).norm() < 1e-5);
    if (k == 1) CHECK((again.position_km - ref.position_km).norm() < 1e-6);
  }
}

TEST_CASE("propagate: radius bounds and vis-viva invariant") {
  SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto el = make_elements(rng.uniform(6800.0, 9000.0), rng.uniform(0.0, 0.3),
                                  rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, kTwoPi),
                                  rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi));
    const auto sv = propagate(el, rng.uniform(0.0, 2.0 * el.period_s()));
    const double r = sv.position_km.norm();
    const double a = el.semi_major_axis_km;
    CHECK(r >= a * (1.0 - el.eccentricity) - 1e-6);
    CHECK(r <= a * (1.0 + el.eccentricity) + 1e-6);
    const double v2 = sv.velocity_km_s.squaredNorm();
    const double vis_viva = kMuEarth * (2.0 / r - 1.0 / a);
    CHECK(std::abs(v2 - vis_viva) / vis_viva < 1e-8);
  }
}

TEST_CASE("serialize/parse round-trips the six elements") {
  const auto parsed = parse_tle(kIssTle);
  const auto again = parse_tle({serialize_tle(parsed[0])});
  REQUIRE(again.size() == 1);
  CHECK(std::abs(again[0].inclination_rad - parsed[0].inclination_rad) < 1e-9);
  CHECK(std::abs(again[0].raan_rad - parsed[0].raan_rad) < 1e-9);
  CHECK(std::abs(again[0].eccentricity - parsed[0].eccentricity) < 1e-9);
  CHECK(std::abs(again[0].arg_perigee_rad - parsed[0].arg_perigee_rad) < 1e-9);
  CHECK(std::abs(again[0].mean_anomaly_rad - parsed[0].mean_anomaly_rad) < 1e-9);
  CHECK(std::abs(again[0].mean_motion_rad_s - parsed[0].mean_motion_rad_s) < 1e-15);
  CHECK(std::abs(again[0].epoch_s - parsed[0].epoch_s) < 1e-3);
  CHECK(again[0].sat_id == parsed[0].sat_id);
}

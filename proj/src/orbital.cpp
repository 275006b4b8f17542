#include "orbitnet/orbital.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "orbitnet/errors.hpp"

namespace orbitnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kSecondsPerDay = 86400.0;

double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Days from 1970-01-01 to the civil date y-m-d (proleptic Gregorian).
long long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const long long yoe = y - era * 400;
  const long long doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

bool leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

std::string_view field(const std::string& line, int col_from, int col_to) {
  // 1-based inclusive column range.
  return std::string_view(line).substr(col_from - 1, col_to - col_from + 1);
}

double parse_double_field(std::string_view s, const std::string& line) {
  std::size_t begin = s.find_first_not_of(' ');
  if (begin == std::string_view::npos) throw MalformedLine("empty numeric field in: " + line);
  std::size_t end = s.find_last_not_of(' ');
  std::string token(s.substr(begin, end - begin + 1));
  char* tail = nullptr;
  double value = std::strtod(token.c_str(), &tail);
  if (tail != token.c_str() + token.size()) throw MalformedLine("non-numeric field '" + token + "' in: " + line);
  return value;
}

void check_data_line(const std::string& line, char marker) {
  if (line.size() != 69) throw MalformedLine("TLE line must be 69 characters: " + line);
  if (line[0] != marker) throw MalformedLine("expected line " + std::string(1, marker) + ": " + line);
  const int expected = tle_checksum(line);
  const char last = line[68];
  if (!std::isdigit(static_cast<unsigned char>(last)) || last - '0' != expected)
    throw ChecksumMismatch("checksum " + std::string(1, last) + " != " + std::to_string(expected) + ": " + line);
}

double epoch_to_unix_seconds(int two_digit_year, double day_of_year) {
  const int year = two_digit_year < 57 ? 2000 + two_digit_year : 1900 + two_digit_year;
  const long long jan1 = days_from_civil(year, 1, 1);
  return (static_cast<double>(jan1) + (day_of_year - 1.0)) * kSecondsPerDay;
}

OrbitalElements parse_record(const std::string& name, const std::string& l1, const std::string& l2) {
  check_data_line(l1, '1');
  check_data_line(l2, '2');

  OrbitalElements el;
  const std::string satnum(field(l1, 3, 7));
  el.sat_id = name.empty() ? satnum : name;

  const int epoch_year = static_cast<int>(parse_double_field(field(l1, 19, 20), l1));
  const double epoch_day = parse_double_field(field(l1, 21, 32), l1);
  el.epoch_s = epoch_to_unix_seconds(epoch_year, epoch_day);

  el.inclination_rad = wrap_two_pi(parse_double_field(field(l2, 9, 16), l2) * kDegToRad);
  el.raan_rad = wrap_two_pi(parse_double_field(field(l2, 18, 25), l2) * kDegToRad);
  el.eccentricity = parse_double_field(field(l2, 27, 33), l2) * 1e-7;
  el.arg_perigee_rad = wrap_two_pi(parse_double_field(field(l2, 35, 42), l2) * kDegToRad);
  el.mean_anomaly_rad = wrap_two_pi(parse_double_field(field(l2, 44, 51), l2) * kDegToRad);
  const double mm_rev_day = parse_double_field(field(l2, 53, 63), l2);

  if (el.eccentricity >= 1.0)
    throw EccentricityOutOfRange("eccentricity " + std::to_string(el.eccentricity) + " not in [0,1)");
  if (mm_rev_day <= 0.0) throw MalformedLine("mean motion must be positive: " + l2);

  el.mean_motion_rad_s = mm_rev_day * kTwoPi / kSecondsPerDay;
  el.semi_major_axis_km = std::cbrt(kMuEarth / (el.mean_motion_rad_s * el.mean_motion_rad_s));
  return el;
}

bool looks_like_data_line(const std::string& line) {
  return line.size() == 69 && (line[0] == '1' || line[0] == '2') && line[1] == ' ';
}

}  // namespace

double OrbitalElements::period_s() const { return kTwoPi / mean_motion_rad_s; }

int tle_checksum(std::string_view line) {
  int sum = 0;
  const std::size_t limit = std::min<std::size_t>(line.size(), 68);
  for (std::size_t i = 0; i < limit; ++i) {
    const char c = line[i];
    if (std::isdigit(static_cast<unsigned char>(c))) sum += c - '0';
    else if (c == '-') sum += 1;
  }
  return sum % 10;
}

std::vector<OrbitalElements> parse_tle(const std::vector<std::string>& lines) {
  std::vector<OrbitalElements> out;
  std::string pending_name;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!looks_like_data_line(line)) {
      // Name line; trim trailing whitespace.
      pending_name = line.substr(0, line.find_last_not_of(" \t\r") + 1);
      continue;
    }
    if (i + 1 >= lines.size()) throw MalformedLine("record truncated after: " + line);
    out.push_back(parse_record(pending_name, line, lines[i + 1]));
    pending_name.clear();
    ++i;
  }
  return out;
}

std::string serialize_tle(const OrbitalElements& el) {
  // Recover the epoch as year + fractional day of year.
  const double total_days = el.epoch_s / kSecondsPerDay;
  long long day_index = static_cast<long long>(std::floor(total_days));
  double day_frac = total_days - static_cast<double>(day_index);
  int year = 1970 + static_cast<int>(day_index / 366);
  while (days_from_civil(year + 1, 1, 1) <= day_index) ++year;
  const int doy = static_cast<int>(day_index - days_from_civil(year, 1, 1)) + 1;
  if (doy > (leap_year(year) ? 366 : 365)) throw Error("epoch out of serializable range");

  int satnum = 0;
  for (char c : el.sat_id)
    if (std::isdigit(static_cast<unsigned char>(c))) satnum = satnum * 10 + (c - '0');
  satnum %= 100000;
  if (satnum == 0) satnum = 1;

  const double mm_rev_day = el.mean_motion_rad_s * kSecondsPerDay / kTwoPi;
  char l1[70], l2[70];
  std::snprintf(l1, sizeof l1, "1 %05dU 00000A   %02d%012.8f  .00000000  00000-0  00000-0 0  999",
                satnum, year % 100, doy + day_frac);
  std::snprintf(l2, sizeof l2, "2 %05d %8.4f %8.4f %07d %8.4f %8.4f %11.8f00001",
                satnum, el.inclination_rad / kDegToRad, el.raan_rad / kDegToRad,
                static_cast<int>(std::llround(el.eccentricity * 1e7)),
                el.arg_perigee_rad / kDegToRad, el.mean_anomaly_rad / kDegToRad, mm_rev_day);

  std::string line1(l1), line2(l2);
  line1 += static_cast<char>('0' + tle_checksum(line1));
  line2 += static_cast<char>('0' + tle_checksum(line2));
  return el.sat_id + "\n" + line1 + "\n" + line2 + "\n";
}

double solve_kepler(double mean_anomaly, double eccentricity) {
  const double e = eccentricity;
  if (e < 0.0 || e >= 1.0) throw EccentricityOutOfRange("solve_kepler: e=" + std::to_string(e));

  // Reduce to [0, 2*pi), remember the branch.
  const double branch = std::floor(mean_anomaly / kTwoPi);
  const double m = mean_anomaly - branch * kTwoPi;
  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 50;

  double x = e < 0.8 ? m : std::numbers::pi;
  for (int it = 0; it < kMaxIter; ++it) {
    const double f = x - e * std::sin(x) - m;
    if (std::abs(f) < kTol) return x + branch * kTwoPi;
    x -= f / (1.0 - e * std::cos(x));
  }

  // f(E) = E - e sin E - m is strictly increasing, so bisection always lands.
  double lo = 0.0, hi = kTwoPi;
  for (int it = 0; it < 200; ++it) {
    x = 0.5 * (lo + hi);
    const double f = x - e * std::sin(x) - m;
    if (std::abs(f) < kTol) return x + branch * kTwoPi;
    (f > 0.0 ? hi : lo) = x;
  }
  throw NonConvergence("solve_kepler failed at M=" + std::to_string(mean_anomaly) + " e=" + std::to_string(e));
}

StateVector propagate(const OrbitalElements& el, double t) {
  const double e = el.eccentricity;
  const double a = el.semi_major_axis_km;
  const double mean_anomaly = el.mean_anomaly_rad + el.mean_motion_rad_s * (t - el.epoch_s);
  const double E = solve_kepler(mean_anomaly, e);

  const double cosE = std::cos(E), sinE = std::sin(E);
  const double r = a * (1.0 - e * cosE);
  const double nu = 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(E / 2.0),
                                     std::sqrt(1.0 - e) * std::cos(E / 2.0));

  const Eigen::Vector3d pos_pf(r * std::cos(nu), r * std::sin(nu), 0.0);
  const double v_scale = std::sqrt(kMuEarth * a) / r;
  const Eigen::Vector3d vel_pf(-v_scale * sinE, v_scale * std::sqrt(1.0 - e * e) * cosE, 0.0);

  const Eigen::Matrix3d rot = (Eigen::AngleAxisd(el.raan_rad, Eigen::Vector3d::UnitZ()) *
                               Eigen::AngleAxisd(el.inclination_rad, Eigen::Vector3d::UnitX()) *
                               Eigen::AngleAxisd(el.arg_perigee_rad, Eigen::Vector3d::UnitZ()))
                                  .toRotationMatrix();
  return {t, rot * pos_pf, rot * vel_pf};
}

}  // namespace orbitnet

#include "orbitnet/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orbitnet/errors.hpp"

namespace orbitnet {

bool check_ds_sequence(const DSSequence& seq, int order) {
  if (order < 1) throw Unsupported("DS order must be >= 1");
  const auto& s = seq.symbols;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return false;

  std::vector<int> alphabet(s.begin(), s.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  const int forbidden = order + 2;
  for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < alphabet.size(); ++bi) {
      const int a = alphabet[ai], b = alphabet[bi];
      int blocks = 0, last = -1;
      for (int x : s) {
        if (x != a && x != b) continue;
        if (x != last) {
          ++blocks;
          last = x;
        }
        if (blocks >= forbidden) return false;
      }
    }
  }
  return true;
}

long long ds_bound(long long n, int order) {
  if (n < 1) throw Unsupported("ds_bound requires n >= 1");
  if (order == 1) return n;
  if (order == 2) return 2 * n - 1;
  throw Unsupported("ds_bound has no closed form for order >= 3");
}

double PiecewiseFunction::eval(double t) const {
  const auto n = breakpoints.size();
  Eigen::Index i = std::upper_bound(breakpoints.data(), breakpoints.data() + n, t) - breakpoints.data();
  i = std::clamp<Eigen::Index>(i - 1, 0, n - 2);
  const double u = t - breakpoints[i];
  const auto c = coeffs.row(i);
  return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

PiecewiseFunction PiecewiseFunction::constant(int label, double lo, double hi, double value) {
  return from_poly(label, lo, hi, {value, 0.0, 0.0, 0.0});
}

PiecewiseFunction PiecewiseFunction::from_poly(int label, double lo, double hi,
                                               const Eigen::Vector4d& g) {
  if (hi <= lo) throw Error("piecewise: empty domain");
  PiecewiseFunction f;
  f.label = label;
  f.breakpoints.resize(2);
  f.breakpoints << lo, hi;
  // Shift a0 + a1 t + a2 t^2 + a3 t^3 into the basis u = t - lo.
  const double s = lo;
  f.coeffs.resize(1, 4);
  f.coeffs(0, 0) = g[0] + s * (g[1] + s * (g[2] + s * g[3]));
  f.coeffs(0, 1) = g[1] + s * (2.0 * g[2] + 3.0 * s * g[3]);
  f.coeffs(0, 2) = g[2] + 3.0 * s * g[3];
  f.coeffs(0, 3) = g[3];
  return f;
}

PiecewiseFunction PiecewiseFunction::from_spline(int label, const CubicSpline& s) {
  PiecewiseFunction f;
  f.label = label;
  f.breakpoints = s.knots();
  f.coeffs.resize(s.piece_count(), 4);
  for (int i = 0; i < s.piece_count(); ++i) f.coeffs.row(i) = s.piece_coeffs(i).transpose();
  return f;
}

namespace {

constexpr double kRootTol = 1e-12;

// Local-basis coefficients of fn on the piece containing [a, b], shifted so
// the basis origin is a.
Eigen::Vector4d local_coeffs_at(const PiecewiseFunction& f, double a) {
  const auto n = f.breakpoints.size();
  Eigen::Index i =
      std::upper_bound(f.breakpoints.data(), f.breakpoints.data() + n, a) - f.breakpoints.data();
  i = std::clamp<Eigen::Index>(i - 1, 0, n - 2);
  const double s = a - f.breakpoints[i];
  const auto c = f.coeffs.row(i);
  Eigen::Vector4d out;
  out[0] = c[0] + s * (c[1] + s * (c[2] + s * c[3]));
  out[1] = c[1] + s * (2.0 * c[2] + 3.0 * s * c[3]);
  out[2] = c[2] + 3.0 * s * c[3];
  out[3] = c[3];
  return out;
}

double eval_poly(const Eigen::Vector4d& c, double u) {
  return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

void bisect_root(const Eigen::Vector4d& c, double lo, double hi, std::vector<double>& roots) {
  double flo = eval_poly(c, lo), fhi = eval_poly(c, hi);
  if (flo == 0.0) {
    roots.push_back(lo);
    return;
  }
  if (fhi == 0.0) {
    roots.push_back(hi);
    return;
  }
  if ((flo > 0.0) == (fhi > 0.0)) return;
  while (hi - lo > kRootTol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_poly(c, mid);
    if (fm == 0.0) {
      roots.push_back(mid);
      return;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  roots.push_back(0.5 * (lo + hi));
}

// Real roots of the cubic c on [0, span]: split at the derivative's roots
// into monotone segments, then bisect each.
std::vector<double> poly_roots(const Eigen::Vector4d& c, double span) {
  std::vector<double> cuts{0.0, span};
  const double qa = 3.0 * c[3], qb = 2.0 * c[2], qc = c[1];
  if (std::abs(qa) > 0.0) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double r = std::sqrt(disc);
      for (double x : {(-qb - r) / (2.0 * qa), (-qb + r) / (2.0 * qa)})
        if (x > 0.0 && x < span) cuts.push_back(x);
    }
  } else if (std::abs(qb) > 0.0) {
    const double x = -qc / qb;
    if (x > 0.0 && x < span) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) bisect_root(c, cuts[i], cuts[i + 1], roots);
  return roots;
}

}  // namespace

Envelope upper_envelope(const std::vector<PiecewiseFunction>& fns, std::array<double, 2> interval) {
  if (fns.empty()) throw Error("upper_envelope: no functions");
  const double lo = interval[0], hi = interval[1];
  if (hi < lo) throw Error("upper_envelope: empty interval");

  std::set<double> cuts{lo, hi};
  for (const auto& f : fns)
    for (Eigen::Index i = 0; i < f.breakpoints.size(); ++i)
      if (f.breakpoints[i] > lo && f.breakpoints[i] < hi) cuts.insert(f.breakpoints[i]);

  // Pairwise crossings, isolated cell by cell within the shared breakpoint grid.
  {
    const std::vector<double> grid(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i < fns.size(); ++i) {
      for (std::size_t j = i + 1; j < fns.size(); ++j) {
        for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
          const double a = grid[g], b = grid[g + 1];
          const Eigen::Vector4d diff = local_coeffs_at(fns[i], a) - local_coeffs_at(fns[j], a);
          for (double r : poly_roots(diff, b - a)) {
            const double t = a + r;
            if (t > lo && t < hi) cuts.insert(t);
          }
        }
      }
    }
  }

  const std::vector<double> grid(cuts.begin(), cuts.end());
  Envelope env;
  env.sequence.alphabet_size = static_cast<int>(fns.size());
  for (std::size_t g = 0; g + 1 < grid.size() || (g == 0 && grid.size() == 1); ++g) {
    const double mid = grid.size() == 1 ? grid[0] : 0.5 * (grid[g] + grid[g + 1]);
    int best = fns[0].label;
    double best_val = fns[0].eval(mid);
    for (std::size_t k = 1; k < fns.size(); ++k) {
      const double v = fns[k].eval(mid);
      if (v > best_val || (v == best_val && fns[k].label < best)) {
        best_val = v;
        best = fns[k].label;
      }
    }
    if (env.sequence.symbols.empty() || env.sequence.symbols.back() != best) {
      if (!env.sequence.symbols.empty()) env.breakpoints.push_back(grid[g]);
      env.sequence.symbols.push_back(best);
    }
    if (grid.size() == 1) break;
  }
  return env;
}

bool envelope_is_ds(const std::vector<PiecewiseFunction>& fns, std::array<double, 2> interval,
                    int max_crossings) {
  const Envelope env = upper_envelope(fns, interval);
  if (!check_ds_sequence(env.sequence, max_crossings)) return false;
  if (max_crossings <= 2 &&
      static_cast<long long>(env.sequence.symbols.size()) >
          ds_bound(static_cast<long long>(fns.size()), max_crossings))
    return false;
  return true;
}

}  // namespace orbitnet

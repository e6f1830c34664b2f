#pragma once

// Guarded scalar root machinery: bracket scanning, bisection with a clamped
// Newton finish, root counting that recognises double roots, and the
// two-condition tangency solve used for critical parameters.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lmcat/error.hpp"

namespace lmcat {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  // A grid point where f vanished (within the scan tolerance).
  bool degenerate() const { return lo == hi; }
};

enum class Multiplicity { Simple, Tangential };

struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  Multiplicity multiplicity = Multiplicity::Simple;
  int iterations = 0;
};

namespace detail {

template <class F>
double checked(const F& f, double x) {
  const double v = f(x);
  if (std::isnan(v) || std::isinf(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite value " << v << " at x = " << x;
    throw Error(ErrorKind::Evaluation, os.str());
  }
  return v;
}

inline int sgn(double v) { return (v > 0) - (v < 0); }

inline double width_floor(double lo, double hi, double tol) {
  return std::max({tol, 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)),
                   1e-300});
}

}  // namespace detail

// All sign-change intervals of f on a uniform n-point grid over [lo, hi].
// Grid points with |f| <= zero_tol come back as degenerate brackets and the
// intervals touching them are not reported again.
template <class F>
std::vector<Bracket> scan_brackets(const F& f, double lo, double hi, int n, double zero_tol = 0.0) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidInput, "scan_brackets requires lo < hi");
  if (n < 2) throw Error(ErrorKind::InvalidInput, "scan_brackets requires n >= 2");
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    fs[i] = detail::checked(f, xs[i]);
  }
  std::vector<Bracket> out;
  for (int i = 0; i < n; ++i) {
    const bool zero_i = std::abs(fs[i]) <= zero_tol;
    if (zero_i) {
      out.push_back({xs[i], xs[i], fs[i], fs[i]});
      continue;
    }
    if (i + 1 < n && std::abs(fs[i + 1]) > zero_tol && detail::sgn(fs[i]) != detail::sgn(fs[i + 1]))
      out.push_back({xs[i], xs[i + 1], fs[i], fs[i + 1]});
  }
  return out;
}

inline constexpr int kMaxBisectIterations = 200;

// Bisection until the bracket is no wider than tol (or the floating-point
// resolution at the root). Returns the endpoint with the smaller |f|.
template <class F>
RootResult bisect(const F& f, Bracket b, double tol = 1e-15) {
  if (b.degenerate()) return {b.lo, std::abs(b.f_lo), Multiplicity::Simple, 0};
  if (!(b.lo < b.hi) || detail::sgn(b.f_lo) * detail::sgn(b.f_hi) > 0)
    throw Error(ErrorKind::InvalidInput, "bisect requires lo < hi and f(lo) f(hi) <= 0");
  if (b.f_lo == 0) return {b.lo, 0.0, Multiplicity::Simple, 0};
  if (b.f_hi == 0) return {b.hi, 0.0, Multiplicity::Simple, 0};
  int it = 0;
  for (;; ++it) {
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    if (b.hi - b.lo <= detail::width_floor(b.lo, b.hi, tol) || mid <= b.lo || mid >= b.hi) break;
    if (it >= kMaxBisectIterations)
      throw Error(ErrorKind::IterationLimit, "bisection exceeded " + std::to_string(kMaxBisectIterations) +
                                                 " iterations");
    const double fm = detail::checked(f, mid);
    if (fm == 0) return {mid, 0.0, Multiplicity::Simple, it + 1};
    if (detail::sgn(fm) == detail::sgn(b.f_lo)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  if (std::abs(b.f_lo) <= std::abs(b.f_hi)) return {b.lo, std::abs(b.f_lo), Multiplicity::Simple, it};
  return {b.hi, std::abs(b.f_hi), Multiplicity::Simple, it};
}

inline constexpr double kNewtonHandoffWidth = 1e-6;

// Bisection down to kNewtonHandoffWidth, then Newton steps clamped to the
// shrinking bracket.
template <class F, class DF>
RootResult refine_root(const F& f, const DF& df, Bracket b) {
  if (b.degenerate()) return {b.lo, std::abs(b.f_lo), Multiplicity::Simple, 0};
  RootResult coarse = bisect(f, b, kNewtonHandoffWidth);
  int iterations = coarse.iterations;
  if (coarse.residual == 0.0) return coarse;
  // Rebuild the bracket around the coarse root.
  double lo = std::max(b.lo, coarse.x - kNewtonHandoffWidth);
  double hi = std::min(b.hi, coarse.x + kNewtonHandoffWidth);
  double flo = detail::checked(f, lo), fhi = detail::checked(f, hi);
  if (detail::sgn(flo) * detail::sgn(fhi) > 0) {
    lo = b.lo, hi = b.hi, flo = b.f_lo, fhi = b.f_hi;
  }
  double x = coarse.x;
  double fx = detail::checked(f, x);
  double best_x = x, best_f = std::abs(fx);
  for (int k = 0; k < 60 && fx != 0.0; ++k, ++iterations) {
    if (detail::sgn(fx) == detail::sgn(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double d = df(x);
    double next = (d != 0.0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || next <= lo || next >= hi) break;
    const double step = std::abs(next - x);
    x = next;
    fx = detail::checked(f, x);
    if (std::abs(fx) < best_f) best_f = std::abs(fx), best_x = x;
    if (step <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
  }
  return {best_x, best_f, Multiplicity::Simple, iterations};
}

struct MonotoneSolve {
  std::optional<RootResult> root;
  std::string diagnostic;

  explicit operator bool() const { return root.has_value(); }
};

// Solve f(a) = target for f strictly monotone on (0, inf): geometric
// bracket search over a0 * 2^k, |k| <= cap_exponent, then bisection.
template <class F>
MonotoneSolve solve_monotone(const F& f, double target, double a0 = 1.0, int cap_exponent = 60) {
  if (!(a0 > 0.0)) throw Error(ErrorKind::InvalidInput, "solve_monotone requires a0 > 0");
  auto phi = [&](double a) { return f(a) - target; };
  double prev_a = 0.0, prev_v = 0.0;
  bool have_prev = false;
  double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
  for (int k = -cap_exponent; k <= cap_exponent; ++k) {
    const double a = std::ldexp(a0, k);
    const double v = phi(a);
    if (std::isnan(v)) {
      have_prev = false;
      continue;
    }
    vmin = std::min(vmin, v + target);
    vmax = std::max(vmax, v + target);
    if (v == 0.0) return {RootResult{a, 0.0, Multiplicity::Simple, 0}, ""};
    if (have_prev && detail::sgn(prev_v) != detail::sgn(v)) {
      auto bounded = [&](double x) {
        const double y = phi(x);
        return std::isnan(y) ? y : std::clamp(y, -std::numeric_limits<double>::max(),
                                              std::numeric_limits<double>::max());
      };
      RootResult r = bisect(bounded, Bracket{prev_a, a, bounded(prev_a), bounded(a)}, 0.0);
      r.residual = std::abs(phi(r.x));
      return {r, ""};
    }
    prev_a = a, prev_v = v, have_prev = true;
  }
  std::ostringstream os;
  os.precision(17);
  os << "target " << target << " not straddled on [" << std::ldexp(a0, -cap_exponent) << ", "
     << std::ldexp(a0, cap_exponent) << "]; sampled values span [" << vmin << ", " << vmax << "]";
  return {std::nullopt, os.str()};
}

struct CountConfig {
  double step = 1e-3;             // grid step upper bound
  double merge_distance = 1e-6;   // near-tangent pairs closer than this merge
  double merge_value = 1e-9;      // |f| at an extremum below this is a double root
  double derivative_tol = 1e-8;
};

namespace detail {

struct Breakpoint {
  double x;
  double f;
  bool extremum;
};

}  // namespace detail

// Every root of f on [lo, hi]. Interior extrema split the grid cells so that
// pairs of roots sharing a cell are separated; extrema whose value is within
// merge_value of zero become a single Tangential root, absorbing the two
// simple roots beside it when they are closer than merge_distance.
template <class F, class DF>
std::vector<RootResult> count_roots(const F& f, const DF& df, double lo, double hi,
                                    const CountConfig& cfg = {}) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidInput, "count_roots requires lo < hi");
  if (!(cfg.step > 0)) throw Error(ErrorKind::InvalidInput, "count_roots requires step > 0");
  using detail::checked;
  using detail::sgn;
  const auto n = static_cast<int>(std::max(2.0, std::ceil((hi - lo) / cfg.step) + 1.0));
  std::vector<double> xs(n), fs(n), ds(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    fs[i] = checked(f, xs[i]);
    ds[i] = checked(df, xs[i]);
  }

  std::vector<detail::Breakpoint> pts;
  pts.reserve(n + 16);
  for (int i = 0; i < n; ++i) {
    const bool grid_extremum = ds[i] == 0.0 && i > 0 && i + 1 < n && sgn(ds[i - 1]) * sgn(ds[i + 1]) < 0;
    pts.push_back({xs[i], fs[i], grid_extremum});
    if (i + 1 < n && sgn(ds[i]) * sgn(ds[i + 1]) < 0) {
      const RootResult e = bisect(df, Bracket{xs[i], xs[i + 1], ds[i], ds[i + 1]}, 0.0);
      if (e.x > xs[i] && e.x < xs[i + 1]) pts.push_back({e.x, checked(f, e.x), true});
    }
  }

  struct Found {
    RootResult r;
    std::size_t interval;  // index k of [pts[k], pts[k+1]], or the point index for exact zeros
    bool at_point;
  };
  std::vector<Found> roots;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].f == 0.0) {
      roots.push_back({{pts[k].x, 0.0, Multiplicity::Simple, 0}, k, true});
      continue;
    }
    if (k + 1 < pts.size() && pts[k + 1].f != 0.0 && sgn(pts[k].f) != sgn(pts[k + 1].f)) {
      const RootResult r = refine_root(f, df, Bracket{pts[k].x, pts[k + 1].x, pts[k].f, pts[k + 1].f});
      roots.push_back({r, k, false});
    }
  }

  std::vector<bool> absorbed(roots.size(), false);
  std::vector<RootResult> tangential;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!pts[k].extremum || std::abs(pts[k].f) > cfg.merge_value) continue;
    std::vector<std::size_t> adjacent;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Found& r = roots[j];
      const bool adj = r.at_point ? r.interval == k : (r.interval + 1 == k || r.interval == k);
      if (adj) adjacent.push_back(j);
    }
    const double xe = pts[k].x;
    bool merge = false;
    if (adjacent.empty()) {
      merge = true;
    } else {
      double mn = xe, mx = xe;
      for (auto j : adjacent) mn = std::min(mn, roots[j].r.x), mx = std::max(mx, roots[j].r.x);
      merge = (mx - mn) < cfg.merge_distance;
    }
    if (!merge) continue;
    for (auto j : adjacent) absorbed[j] = true;
    tangential.push_back({xe, std::abs(pts[k].f), Multiplicity::Tangential, 0});
  }

  std::vector<RootResult> out = tangential;
  for (std::size_t j = 0; j < roots.size(); ++j)
    if (!absorbed[j]) out.push_back(roots[j].r);
  std::sort(out.begin(), out.end(), [](const RootResult& a, const RootResult& b) { return a.x < b.x; });
  return out;
}

// g_h(a) = cos(a h) - a and G_h(a) = sin(a h) - a: the boundary equations of
// the symmetric sine-profile catenoids.
enum class PeriodicFamily { Cos, Sin };

struct PeriodicTarget {
  double h;
  PeriodicFamily kind;

  double operator()(double a) const {
    return (kind == PeriodicFamily::Cos ? std::cos(a * h) : std::sin(a * h)) - a;
  }
  double derivative(double a) const {
    return (kind == PeriodicFamily::Cos ? -h * std::sin(a * h) : h * std::cos(a * h)) - 1.0;
  }
};

// Local extrema of g_h (or G_h) for h > 1. m0 is the first positive minimum
// of g_h, sin(m0 h) = -1/h with cos(m0 h) < 0; minima and maxima follow the
// schedule m_k = m0 + 2k pi/h, M_k = -m0 + (2k+1) pi/h, shifted by pi/(2h)
// for G_h since G_h(a + pi/(2h)) = g_h(a) - pi/(2h). M_0 of g_h is negative.
struct PeriodicExtrema {
  double h = 0;
  PeriodicFamily kind = PeriodicFamily::Cos;
  double m0 = 0;
  double shift = 0;
  std::vector<double> minima, maxima;
  std::vector<double> min_values, max_values;
};

inline PeriodicExtrema periodic_extrema(double h, PeriodicFamily kind, int k_max) {
  if (!(h > 1.0)) throw Error(ErrorKind::InvalidInput, "periodic_extrema requires h > 1");
  if (k_max < 0) throw Error(ErrorKind::InvalidInput, "periodic_extrema requires k_max >= 0");
  constexpr double pi = std::numbers::pi;
  PeriodicExtrema e;
  e.h = h;
  e.kind = kind;
  e.m0 = (pi + std::asin(1.0 / h)) / h;
  e.shift = kind == PeriodicFamily::Sin ? pi / (2.0 * h) : 0.0;
  const double root_term = std::sqrt(h * h - 1.0) / h;
  const double g_m0 = -root_term - e.m0;
  for (int k = 0; k <= k_max; ++k) {
    e.minima.push_back(e.m0 + 2.0 * k * pi / h + e.shift);
    e.min_values.push_back(g_m0 - 2.0 * k * pi / h - e.shift);
    e.maxima.push_back(-e.m0 + (2.0 * k + 1.0) * pi / h + e.shift);
    e.max_values.push_back(root_term + e.m0 - (2.0 * k + 1.0) * pi / h - e.shift);
  }
  return e;
}

struct TangencyResult {
  double lambda = 0;
  double x = 0;
  double value = 0;  // F(x*, lambda*)
  double slope = 0;  // dF/dx(x*, lambda*)
  int iterations = 0;
};

// Parameter lambda* where the extremum value lambda -> F(x_e(lambda), lambda)
// crosses zero, i.e. where a double root of F(., lambda) is born. The
// extremum x_e is located by bisection of dF/dx on extremum_bracket(lambda).
template <class F, class DFDX, class XBracket>
TangencyResult solve_tangency(const F& F_, const DFDX& dFdx, const XBracket& extremum_bracket,
                              double lambda_lo, double lambda_hi) {
  if (!(lambda_lo < lambda_hi)) throw Error(ErrorKind::InvalidInput, "solve_tangency requires lo < hi");
  auto extremum = [&](double lam) {
    const auto [xl, xh] = extremum_bracket(lam);
    auto d = [&](double x) { return dFdx(x, lam); };
    const RootResult r = bisect(d, Bracket{xl, xh, d(xl), d(xh)}, 0.0);
    return std::pair{r.x, F_(r.x, lam)};
  };
  auto [x_lo, v_lo] = extremum(lambda_lo);
  auto [x_hi, v_hi] = extremum(lambda_hi);
  if (detail::sgn(v_lo) * detail::sgn(v_hi) > 0)
    throw Error(ErrorKind::NoSignChange, "extremum value does not change sign on the parameter interval");
  double lo = lambda_lo, hi = lambda_hi;
  int it = 0;
  TangencyResult best{lo, x_lo, v_lo, dFdx(x_lo, lo), 0};
  if (std::abs(v_hi) < std::abs(v_lo)) best = {hi, x_hi, v_hi, dFdx(x_hi, hi), 0};
  while (it < kMaxBisectIterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    ++it;
    const auto [xm, vm] = extremum(mid);
    if (std::abs(vm) <= std::abs(best.value)) best = {mid, xm, vm, dFdx(xm, mid), it};
    if (vm == 0.0) break;
    if (detail::sgn(vm) == detail::sgn(v_lo)) {
      lo = mid;
      v_lo = vm;
    } else {
      hi = mid;
    }
  }
  best.iterations = it;
  return best;
}

}  // namespace lmcat

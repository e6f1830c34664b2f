#pragma once

// Reference computations used only by the tests: dense sign scans, plain
// bisection and central differences. Kept independent of lmcat/rootfind.hpp.

#include <cmath>
#include <functional>
#include <random>

#include "lmcat/lorentz.hpp"

namespace oracle {

// Number of strict sign changes of f on a uniform n-point grid over [lo, hi].
inline int dense_sign_changes(const std::function<double(double)>& f, double lo, double hi, int n = 1000000) {
  int count = 0;
  double prev = f(lo);
  for (int i = 1; i < n; ++i) {
    const double v = f(lo + (hi - lo) * i / (n - 1));
    if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) ++count;
    if (v != 0) prev = v;
  }
  return count;
}

// Sign-change abscissae of the dense scan (midpoints of the changing cells).
inline std::vector<double> dense_sign_change_points(const std::function<double(double)>& f, double lo, double hi,
                                                    int n = 1000000) {
  std::vector<double> out;
  double px = lo, prev = f(lo);
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double v = f(x);
    if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) out.push_back(0.5 * (px + x));
    if (v != 0) prev = v, px = x;
  }
  return out;
}

inline double bisection(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline lmcat::LorentzVector central_difference(const std::function<lmcat::LorentzVector(double)>& X, double x,
                                               double h = 1e-5) {
  const auto p = X(x + h), m = X(x - h);
  return {(p.x - m.x) / (2 * h), (p.y - m.y) / (2 * h), (p.z - m.z) / (2 * h)};
}

inline double inner(const lmcat::LorentzVector& u, const lmcat::LorentzVector& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

// Catenary through (-D/2, r1) ... solved on the branch form
// a D = s2 acosh(a r2) - s1 acosh(a r1), s_i in {-1, +1}: returns every a > 0
// with a sign change of the residual on a dense log-grid of a.
inline std::vector<double> catenary_a_values(double D, double r1, double r2, int n = 200000) {
  std::vector<double> out;
  const double amin = 1.0 / std::min(r1, r2);
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      auto g = [&](double a) { return s2 * std::acosh(a * r2) - s1 * std::acosh(a * r1) - a * D; };
      double prev_a = amin, prev = g(amin);
      for (int i = 1; i < n; ++i) {
        const double a = amin * std::exp(12.0 * i / (n - 1));
        const double v = g(a);
        if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) out.push_back(bisection(g, prev_a, a));
        if (prev == 0 && i == 1) out.push_back(amin);
        prev = v, prev_a = a;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

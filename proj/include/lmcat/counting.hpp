#pragma once

// Boundary-value enumeration: for two coaxial circles, every catenoid of each
// (rotation class, causal character) cell that spans both, plus the critical
// separation constants.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmcat/circle.hpp"
#include "lmcat/rootfind.hpp"
#include "lmcat/surface.hpp"

namespace lmcat {

struct Config {
  CountConfig roots;
  double residual_tol = 1e-9;
  double singular_margin = kSingularMargin;
  double equal_radius_tol = 1e-12;  // relative
  double sine_upper = 1.0 + 1e-9;   // a in (0, sine_upper] for cos(ah)-a, sin(ah)-a
};

struct BoundaryPair {
  CircleSpec c1;
  CircleSpec c2;

  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

inline void validate(const BoundaryPair& p) {
  p.c1.validate("circle1");
  p.c2.validate("circle2");
  if (p.c1.cls != p.c2.cls)
    throw Error(ErrorKind::InvalidInput, "circle2.class: both circles must share the rotation group");
  if (p.c1.profile_s() == p.c2.profile_s())
    throw Error(ErrorKind::InvalidInput, "circle2: lies in the same plane as circle1");
}

enum class Cell { SE, TE, HI, HIs, HIIt, HIIs, PAs, PAt };

inline constexpr std::string_view to_string(Cell c) {
  switch (c) {
    case Cell::SE: return "SE";
    case Cell::TE: return "TE";
    case Cell::HI: return "HI";
    case Cell::HIs: return "HIs";
    case Cell::HIIt: return "HIIt";
    case Cell::HIIs: return "HIIs";
    case Cell::PAs: return "PAs";
    case Cell::PAt: return "PAt";
  }
  return "?";
}

struct Solution {
  CatenoidSpec spec;
  Multiplicity multiplicity = Multiplicity::Simple;
  int congruence_class = 0;
  bool crosses_axis = false;
};

struct SubfamilyStats {
  std::string label;
  int raw = 0;
  int deduped = 0;
  int tangential = 0;
};

struct SolutionSet {
  Cell cell = Cell::SE;
  std::vector<Solution> solutions;
  int raw_count = 0;
  int deduped_count = 0;
  std::vector<SubfamilyStats> subfamilies;
  std::optional<std::string> obstruction;
  std::vector<std::string> notes;

  bool has_tangential() const {
    return std::any_of(solutions.begin(), solutions.end(),
                       [](const Solution& s) { return s.multiplicity == Multiplicity::Tangential; });
  }
  const SubfamilyStats* subfamily(std::string_view label) const {
    for (const auto& s : subfamilies)
      if (s.label == label) return &s;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Normalization

struct PlanarPoint {
  double x = 0;
  double y = 0;
};

// Reduction of a pair to a planar two-point problem in profile coordinates.
// Elliptic/hyperbolic: x~ = (s - translation) / scale,
// y~ = orientation * f / scale, so circle 1 lands on (0, 1).
// Parabolic: x~ = s / scale, y~ = (f - translation) / scale with a signed
// homothety, so circle 1 lands on (1, 0).
struct Normalization {
  RotationClass cls = RotationClass::Elliptic;
  PlanarPoint first;
  PlanarPoint second;
  double scale = 1;
  double translation = 0;
  int orientation = 1;
  std::optional<std::string> obstruction;
};

inline Normalization normalize_pair(const BoundaryPair& p) {
  validate(p);
  Normalization n;
  n.cls = p.c1.cls;
  if (n.cls == RotationClass::Parabolic) {
    const double s1 = p.c1.profile_s(), f1 = p.c1.profile_f();
    n.scale = s1;
    n.translation = f1;
    n.first = {1.0, 0.0};
    n.second = {p.c2.profile_s() / s1, (p.c2.profile_f() - f1) / s1};
    return n;
  }
  n.scale = p.c1.radius;
  n.translation = p.c1.plane;
  n.orientation = n.cls == RotationClass::Elliptic ? 1 : p.c1.side;
  n.first = {0.0, 1.0};
  const double side_product = n.cls == RotationClass::Elliptic ? 1.0 : double(p.c1.side * p.c2.side);
  n.second = {(p.c2.plane - p.c1.plane) / p.c1.radius, side_product * p.c2.radius / p.c1.radius};
  if (n.cls == RotationClass::HyperbolicI && p.c1.side != p.c2.side)
    n.obstruction = "circles lie on opposite sides of the plane y = 0; type I hyperbolic catenoids stay on one side";
  return n;
}

inline ProfileCurve denormalize_sinh(const Normalization& n, double A, double B, int sign) {
  return {ProfileFamily::SinhOverA, A / n.scale, B - A * n.translation / n.scale, n.orientation * sign};
}

// ---------------------------------------------------------------------------
// Interpolation and certification

// Euclidean distance from circle_point(c, t) to the matching point of the
// surface's orbit through the circle's plane.
inline double trace_distance(const CatenoidSpec& spec, const CircleSpec& c, double t) {
  const LorentzVector target = circle_point(c, t);
  const double s = c.profile_s();
  double u = circle_group_parameter(c, t);
  if (c.cls == RotationClass::Elliptic && spec.profile(s).f < 0) u += std::numbers::pi;
  return euclidean_distance(target, surface_point(spec, s, u));
}

inline double max_trace_distance(const CatenoidSpec& spec, const CircleSpec& c, int samples = 33) {
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = -1.5 + 3.0 * i / (samples - 1);
    const LorentzVector q = circle_point(c, t);
    worst = std::max(worst, trace_distance(spec, c, t) / (1.0 + std::sqrt(euclidean_norm2(q))));
  }
  return worst;
}

struct Certification {
  double max_residual = 0;
  double mean_residual = 0;
  int samples = 0;
  int positive = 0;
  int negative = 0;
  int degenerate = 0;  // points where EG - F^2 vanished (skipped)
  bool sign_matches = true;
};

// Residual and discriminant sign over `n` regular sample points with s in
// [s_lo, s_hi] and t in [t_lo, t_hi].
template <ProfileFunction P>
Certification certify(RotationClass cls, const P& profile, CausalCharacter claimed, double s_lo, double s_hi,
                      double t_lo, double t_hi, int n, std::optional<ProfileFamily> family = std::nullopt,
                      double margin = kSingularMargin) {
  Certification c;
  double sum = 0;
  const int ns = std::max(1, static_cast<int>(std::lround(std::sqrt(double(n)))));
  const int nt = std::max(1, (n + ns - 1) / ns);
  for (int i = 0; i < ns; ++i) {
    // Interior offsets keep samples off the endpoints, where an axis point may sit.
    const double s = s_lo + (s_hi - s_lo) * (i + 0.5) / ns;
    const ProfileValue pv = profile(s);
    const bool singular = (family && is_cubic(*family)) ? std::abs(s) <= margin : std::abs(pv.f) <= margin;
    if (singular) continue;
    for (int j = 0; j < nt && c.samples < n; ++j) {
      const double t = t_lo + (t_hi - t_lo) * (j + 0.5) / nt;
      const FundamentalForms ff = fundamental_forms(cls, profile, s, t);
      double r = 0;
      try {
        r = std::abs(mean_curvature_residual(ff));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateMetric) throw;
        ++c.degenerate;
        c.sign_matches = false;
        continue;
      }
      c.max_residual = std::max(c.max_residual, r);
      sum += r;
      const double d = ff.discriminant();
      if (d > 0) ++c.positive;
      if (d < 0) ++c.negative;
      if (surface_causal_character(d) != claimed) c.sign_matches = false;
      ++c.samples;
    }
  }
  c.mean_residual = c.samples ? sum / c.samples : 0.0;
  return c;
}

inline Certification certify(const CatenoidSpec& spec, double s_lo, double s_hi, int n = 100) {
  const bool elliptic = spec.cls == RotationClass::Elliptic;
  const double t_lo = elliptic ? 0.0 : -1.0, t_hi = elliptic ? 2 * std::numbers::pi : 1.0;
  return certify(spec.cls, spec.profile, spec.causal, std::min(s_lo, s_hi), std::max(s_lo, s_hi), t_lo, t_hi, n,
                 spec.profile.family);
}

// ---------------------------------------------------------------------------
// sinh boundary problem (spacelike elliptic, timelike hyperbolic II)

namespace detail {

// Value at x0 of the sinh profile through (0,1): sinh(A x0 + asinh A) / A,
// i.e. cosh(A x0) + sqrt(1+A^2)/A sinh(A x0), in an overflow-safe form.
inline double sinh_through_unit(double A, double x0) { return std::sinh(A * x0 + std::asinh(A)) / A; }

inline bool in_R(PlanarPoint p) {
  return (p.x > 0 && p.y > p.x + 1) || (p.x < 0 && p.y < p.x + 1);
}
inline bool in_T(PlanarPoint p) { return in_R({-p.x, p.y}); }

struct SinhPlanar {
  double A = 0;
  double B = 0;
  int sign = 1;
};

// The unique sinh profile through (0,1) and P in S = R u T (empty otherwise).
inline std::optional<SinhPlanar> sinh_through(PlanarPoint P) {
  const bool mirror = in_T(P);
  if (!mirror && !in_R(P)) return std::nullopt;
  const double x0 = mirror ? -P.x : P.x;
  const MonotoneSolve sol = solve_monotone([&](double A) { return sinh_through_unit(A, x0); }, P.y, 1.0);
  if (!sol) return std::nullopt;
  const double A = sol.root->x;
  if (!mirror) return SinhPlanar{A, std::asinh(A), 1};
  // f(x) = sinh(-A x + asinh A)/A = -(1/A) sinh(A x - asinh A)
  return SinhPlanar{A, -std::asinh(A), -1};
}

inline void finish(SolutionSet& set) {
  set.raw_count = static_cast<int>(set.solutions.size());
  int classes = 0;
  for (const auto& s : set.solutions) classes = std::max(classes, s.congruence_class + 1);
  set.deduped_count = classes;
}

}  // namespace detail

// Spacelike elliptic catenoids through circle 1 = (0,1) and P = (x0, y0) in
// normalized profile coordinates. f and -f give the same elliptic surface, so
// P counts when it lies in S or in its mirror Phi(S) across the axis; the
// former (no axis crossing) is preferred.
inline SolutionSet count_spacelike_elliptic(PlanarPoint P, const Normalization* norm = nullptr) {
  if (P.y == 0) throw Error(ErrorKind::InvalidInput, "P lies on the rotation axis");
  if (P.x == 0) throw Error(ErrorKind::InvalidInput, "P must differ from Q = (0, 1)");
  SolutionSet set;
  set.cell = Cell::SE;
  Normalization identity;
  const Normalization& n = norm ? *norm : identity;
  const PlanarPoint mirrored{P.x, -P.y};
  const auto direct = detail::sinh_through(P);
  const auto crossing = detail::sinh_through(mirrored);
  if (direct) {
    set.solutions.push_back({{RotationClass::Elliptic, CausalCharacter::Spacelike,
                              denormalize_sinh(n, direct->A, direct->B, direct->sign), ""},
                             Multiplicity::Simple, 0, P.y < 0});
    if (crossing)
      set.notes.push_back("an additional axis-crossing sinh profile also reaches the mirrored point");
  } else if (crossing) {
    set.solutions.push_back({{RotationClass::Elliptic, CausalCharacter::Spacelike,
                              denormalize_sinh(n, crossing->A, crossing->B, crossing->sign), ""},
                             Multiplicity::Simple, 0, P.y > 0});
  } else {
    set.obstruction = "P lies outside S u Phi(S); no sinh profile joins the circles";
  }
  detail::finish(set);
  return set;
}

// Equal radii r, circles at z = -h and z = h.
inline SolutionSet count_spacelike_elliptic_equal(double r, double h) {
  const BoundaryPair p{CircleSpec::elliptic(-h, r), CircleSpec::elliptic(h, r)};
  const Normalization n = normalize_pair(p);
  return count_spacelike_elliptic(n.second, &n);
}

inline SolutionSet count_timelike_hyperbolic_II(const BoundaryPair& p) {
  validate(p);
  if (p.c1.cls != RotationClass::HyperbolicII)
    throw Error(ErrorKind::InvalidInput, "circle1.class: timelike type II count needs hyperbolicII circles");
  const Normalization n = normalize_pair(p);
  SolutionSet set;
  set.cell = Cell::HIIt;
  if (const auto sol = detail::sinh_through(n.second)) {
    set.solutions.push_back({{RotationClass::HyperbolicII, CausalCharacter::Timelike,
                              denormalize_sinh(n, sol->A, sol->B, sol->sign), ""},
                             Multiplicity::Simple, 0, n.second.y < 0});
  } else {
    set.obstruction = p.c1.side == p.c2.side
                          ? "no sinh profile joins the circles on the same side of z = 0"
                          : "no sinh profile joins the circles (P outside S)";
  }
  detail::finish(set);
  return set;
}

// ---------------------------------------------------------------------------
// Sine families (timelike elliptic, spacelike hyperbolic II), equal radii

struct SineSolution {
  double a = 0;
  double b = 0;  // canonical, in [0, pi)
  std::vector<std::string> labels;
  Multiplicity multiplicity = Multiplicity::Simple;
  int congruence_class = 0;
  double h = 0;  // half separation the solution was computed for
};

namespace detail {

inline bool same_params(double a1, double b1, double a2, double b2) {
  return std::abs(a1 - a2) <= 1e-9 * std::max(1.0, std::abs(a1)) && std::abs(b1 - b2) <= 1e-9;
}

// b and pi - b are mirror images (s -> -s swaps the symmetric circles).
inline double congruence_key(double b) { return std::min(b, std::numbers::pi - b); }

inline double scan_step(double h, const CountConfig& cfg) {
  return std::min(cfg.step, (2.0 * std::numbers::pi / h) / 64.0);
}

}  // namespace detail

// All (a, b) with |f(+-h)| = 1 for f(s) = sin(a s + b)/a, grouped by
// sub-family:
//   1a  b = pi/2, cos(a h) = a
//   1b  a = k pi/h, sin b = +-k pi/h
//   2a  b = 0, sin(a h) = a
//   2b  a = (2k+1) pi/(2h), cos b = +-(2k+1) pi/(2h)
inline std::vector<SineSolution> sine_family_solutions(double h, const Config& cfg = {}) {
  if (!(h > 0) || !std::isfinite(h)) throw Error(ErrorKind::InvalidInput, "h must be a finite number > 0");
  constexpr double pi = std::numbers::pi;
  std::vector<SineSolution> raw;
  auto add = [&](double a, double b, const char* label, Multiplicity m) {
    for (auto& s : raw)
      if (detail::same_params(s.a, s.b, a, b)) {
        s.labels.emplace_back(label);
        if (m == Multiplicity::Tangential) s.multiplicity = m;
        return;
      }
    raw.push_back({a, b, {label}, m, 0, h});
  };

  CountConfig rc = cfg.roots;
  rc.step = detail::scan_step(h, cfg.roots);
  for (const auto kind : {PeriodicFamily::Cos, PeriodicFamily::Sin}) {
    const PeriodicTarget g{h, kind};
    const auto roots =
        count_roots(g, [&](double a) { return g.derivative(a); }, 0.0, cfg.sine_upper, rc);
    for (const auto& r : roots) {
      if (!(r.x > 0)) continue;
      if (kind == PeriodicFamily::Cos)
        add(r.x, pi / 2, "1a", r.multiplicity);
      else
        add(r.x, 0.0, "2a", r.multiplicity);
    }
  }
  for (int k = 1; k * pi / h <= 1.0; ++k) {
    const double a = k * pi / h;
    const double b = std::asin(std::min(1.0, a));
    const bool touching = a == 1.0;
    add(a, b, "1b", touching ? Multiplicity::Tangential : Multiplicity::Simple);
    if (!touching) add(a, pi - b, "1b", Multiplicity::Simple);
  }
  for (int k = 0; (2 * k + 1) * pi / (2 * h) <= 1.0; ++k) {
    const double a = (2 * k + 1) * pi / (2 * h);
    const double b = std::acos(std::min(1.0, a));
    const bool touching = a == 1.0;
    add(a, b, "2b", touching ? Multiplicity::Tangential : Multiplicity::Simple);
    if (!touching) add(a, pi - b, "2b", Multiplicity::Simple);
  }

  std::sort(raw.begin(), raw.end(), [](const SineSolution& x, const SineSolution& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::vector<std::pair<double, double>> keys;
  for (auto& s : raw) {
    const double key = detail::congruence_key(s.b);
    int id = -1;
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (detail::same_params(keys[i].first, keys[i].second, s.a, key)) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(keys.size());
      keys.emplace_back(s.a, key);
    }
    s.congruence_class = id;
  }
  return raw;
}

namespace detail {

inline std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out;
}

// sin(a x + b) vanishes for some x in (-hn, hn).
inline bool sine_crosses_zero(double a, double b, double hn) {
  constexpr double pi = std::numbers::pi;
  const double lo = b - a * hn, hi = b + a * hn;
  const double k = std::floor(lo / pi) + 1.0;
  return k * pi < hi - 1e-12;
}

inline bool has_label(const SineSolution& s, const std::string& l) {
  return std::find(s.labels.begin(), s.labels.end(), l) != s.labels.end();
}

// Builds the SolutionSet for sine solutions already expressed for radius r
// circles centred at `center`; `keep` filters and may flip b by pi.
template <class Keep>
SolutionSet sine_solution_set(Cell cell, RotationClass cls, CausalCharacter causal,
                              const std::vector<SineSolution>& raw, double r, double center, Keep keep) {
  SolutionSet set;
  set.cell = cell;
  for (const char* label : {"1a", "1b", "2a", "2b"}) set.subfamilies.push_back({label});
  std::vector<int> class_map;
  for (const auto& s : raw) {
    double b = s.b;
    if (!keep(s, b)) continue;
    const double a = s.a / r;
    const auto cid = static_cast<std::size_t>(s.congruence_class);
    if (class_map.size() <= cid) class_map.resize(cid + 1, -1);
    if (class_map[cid] < 0) class_map[cid] = *std::max_element(class_map.begin(), class_map.end()) + 1;
    ProfileCurve prof{ProfileFamily::SinOverA, a, b - a * center, 1};
    set.solutions.push_back(
        {{cls, causal, prof, join_labels(s.labels)}, s.multiplicity, class_map[cid], sine_crosses_zero(s.a, s.b, s.h)});
    for (auto& st : set.subfamilies)
      if (has_label(s, st.label)) {
        ++st.raw;
        if (s.multiplicity == Multiplicity::Tangential) ++st.tangential;
      }
  }
  // Deduped per sub-family: distinct congruence classes carrying the label.
  for (auto& st : set.subfamilies) {
    std::vector<int> seen;
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
      const auto& lab = set.solutions[i].spec.subfamily;
      const bool has = ("+" + lab + "+").find("+" + st.label + "+") != std::string::npos;
      if (has && std::find(seen.begin(), seen.end(), set.solutions[i].congruence_class) == seen.end())
        seen.push_back(set.solutions[i].congruence_class);
    }
    st.deduped = static_cast<int>(seen.size());
  }
  finish(set);
  return set;
}

}  // namespace detail

// Timelike elliptic catenoids joining two circles of radius r at z = -h, h.
inline SolutionSet count_timelike_elliptic(double r, double h, const Config& cfg = {}) {
  if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidInput, "r must be a finite number > 0");
  const auto raw = sine_family_solutions(h / r, cfg);
  return detail::sine_solution_set(Cell::TE, RotationClass::Elliptic, CausalCharacter::Timelike, raw, r, 0.0,
                                   [](const SineSolution&, double&) { return true; });
}

// Spacelike type II hyperbolic catenoids joining two hyperbolas of radius r
// at x = -h, h. Same boundary equations as the timelike elliptic case; sides
// of z = 0 are not constrained here.
inline SolutionSet count_spacelike_hyperbolic_II(double r, double h, const Config& cfg = {}) {
  if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidInput, "r must be a finite number > 0");
  const auto raw = sine_family_solutions(h / r, cfg);
  return detail::sine_solution_set(Cell::HIIs, RotationClass::HyperbolicII, CausalCharacter::Spacelike, raw, r,
                                   0.0, [](const SineSolution&, double&) { return true; });
}

// ---------------------------------------------------------------------------
// Type I hyperbolic catenoids: f = cosh(a s + b)/a through both hyperbolas.

namespace detail {

inline double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// With t1 = a x1 + b the catenary position at the nearer circle,
// a = cosh(t1)/r1 and t2 = t1 + k cosh(t1), k = D/r1. Roots of
// psi(t1) = ln(r1 cosh t2) - ln(r2 cosh t1) are in bijection with (a, b).
struct CatenaryResidual {
  double k;
  double log_ratio;  // ln(r1/r2)

  double t2(double t1) const { return t1 + k * std::cosh(t1); }
  double operator()(double t1) const { return log_ratio + log_cosh(t2(t1)) - log_cosh(t1); }
  double derivative(double t1) const {
    return std::tanh(t2(t1)) * (1.0 + k * std::sinh(t1)) - std::tanh(t1);
  }
};

// Half-width L such that psi > 0 for |t1| >= L.
inline double catenary_scan_bound(double k, double r_ratio_21) {
  const double c = std::max(0.0, std::log(2.0 * r_ratio_21));
  double L = 1.0;
  while (!(k * std::exp(L) / 2.0 - 2.0 * L > c + 1.0 && k * std::exp(L) / 2.0 > 2.0)) {
    L += 0.5;
    if (L > 700) throw Error(ErrorKind::InvalidInput, "hyperbolas too close relative to their radii");
  }
  return L;
}

}  // namespace detail

inline SolutionSet count_hyperbolic_I(const BoundaryPair& p, const Config& cfg = {}) {
  validate(p);
  if (p.c1.cls != RotationClass::HyperbolicI)
    throw Error(ErrorKind::InvalidInput, "circle1.class: type I count needs hyperbolicI circles");
  SolutionSet set;
  set.cell = Cell::HI;
  if (p.c1.side != p.c2.side) {
    set.obstruction = normalize_pair(p).obstruction;
    detail::finish(set);
    return set;
  }
  const CircleSpec& near = p.c1.plane < p.c2.plane ? p.c1 : p.c2;
  const CircleSpec& far = p.c1.plane < p.c2.plane ? p.c2 : p.c1;
  const double k = (far.plane - near.plane) / near.radius;
  const detail::CatenaryResidual psi{k, std::log(near.radius / far.radius)};
  const double L = detail::catenary_scan_bound(k, far.radius / near.radius);
  const auto roots = count_roots(psi, [&](double t) { return psi.derivative(t); }, -L, L, cfg.roots);
  int cls_id = 0;
  for (const auto& r : roots) {
    const double a = std::cosh(r.x) / near.radius;
    const double b = r.x - a * near.plane;
    // Side -1 is the reflected sheet: (1/(-a)) cosh(-a s - b) = -cosh(a s + b)/a.
    const ProfileCurve prof = near.side > 0 ? ProfileCurve{ProfileFamily::CoshOverA, a, b, 1}
                                            : ProfileCurve{ProfileFamily::CoshOverA, -a, -b, 1};
    set.solutions.push_back(
        {{RotationClass::HyperbolicI, CausalCharacter::Timelike, prof, ""}, r.multiplicity, cls_id++, false});
  }
  if (set.solutions.empty()) set.obstruction = "separation exceeds the catenary's reach for these radii";
  detail::finish(set);
  return set;
}

// ---------------------------------------------------------------------------
// Parabolic catenoids: f = a s^3 + b (spacelike) or -a s^3 + b (timelike).

// Q in the normalized frame where circle 1 sits at P = (1, 0). The curves
// y = A (x^3 - 1) reach Q for the single A = y0/(x0^3 - 1); A > 0 is
// spacelike (Q in R1 u R2), A < 0 timelike (Q in T1 u T2).
struct ParabolicCount {
  SolutionSet spacelike;
  SolutionSet timelike;
};

inline ParabolicCount count_parabolic(PlanarPoint Q, const Normalization* norm = nullptr) {
  if (Q.x == 0) throw Error(ErrorKind::InvalidInput, "Q lies on the rotation axis");
  if (Q.x == 1 && Q.y == 0) throw Error(ErrorKind::InvalidInput, "Q must differ from P = (1, 0)");
  if (Q.x == 1) throw Error(ErrorKind::InvalidInput, "Q lies in the plane of P");
  ParabolicCount out;
  out.spacelike.cell = Cell::PAs;
  out.timelike.cell = Cell::PAt;
  const double scale = norm ? norm->scale : 1.0;
  const double shift = norm ? norm->translation : 0.0;
  const double A = Q.y / (Q.x * Q.x * Q.x - 1.0);
  const double a = std::abs(A) / (scale * scale);
  const double b = shift - scale * A;
  if (A > 0) {
    out.spacelike.solutions.push_back(
        {{RotationClass::Parabolic, CausalCharacter::Spacelike, {ProfileFamily::CubicPlus, a, b, 1}, ""},
         Multiplicity::Simple, 0, Q.x < 0});
    out.timelike.obstruction = "Q outside T1 u T2";
  } else if (A < 0) {
    out.timelike.solutions.push_back(
        {{RotationClass::Parabolic, CausalCharacter::Timelike, {ProfileFamily::CubicMinus, a, b, 1}, ""},
         Multiplicity::Simple, 0, Q.x < 0});
    out.spacelike.obstruction = "Q outside R1 u R2";
  } else {
    out.spacelike.obstruction = "Q outside R1 u R2";
    out.timelike.obstruction = "Q outside T1 u T2";
  }
  detail::finish(out.spacelike);
  detail::finish(out.timelike);
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch over every (class, causal) cell

enum class CellStatus { Computed, OutOfScope, Inadmissible };

inline constexpr std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Computed: return "computed";
    case CellStatus::OutOfScope: return "out_of_scope";
    case CellStatus::Inadmissible: return "inadmissible";
  }
  return "?";
}

struct CellResult {
  Cell cell = Cell::SE;
  CellStatus status = CellStatus::Computed;
  SolutionSet set;
  std::string message;
};

namespace detail {

inline bool equal_radii(const BoundaryPair& p, const Config& cfg) {
  return std::abs(p.c1.radius - p.c2.radius) <= cfg.equal_radius_tol * std::max(p.c1.radius, p.c2.radius);
}

inline CellResult out_of_scope(Cell c) {
  CellResult r;
  r.cell = c;
  r.status = CellStatus::OutOfScope;
  r.set.cell = c;
  r.message = "unequal radii: the sine-profile count is established only for circles of equal radius";
  return r;
}

}  // namespace detail

inline std::vector<CellResult> count_all(const BoundaryPair& p, const Config& cfg = {}) {
  validate(p);
  std::vector<CellResult> out;
  const Normalization n = normalize_pair(p);
  const double center = 0.5 * (p.c1.plane + p.c2.plane);
  const double h = 0.5 * std::abs(p.c2.plane - p.c1.plane);
  switch (p.c1.cls) {
    case RotationClass::Elliptic: {
      out.push_back({Cell::SE, CellStatus::Computed, count_spacelike_elliptic(n.second, &n), ""});
      if (!detail::equal_radii(p, cfg)) {
        out.push_back(detail::out_of_scope(Cell::TE));
      } else {
        const double r = p.c1.radius;
        const auto raw = sine_family_solutions(h / r, cfg);
        out.push_back({Cell::TE, CellStatus::Computed,
                       detail::sine_solution_set(Cell::TE, RotationClass::Elliptic, CausalCharacter::Timelike, raw,
                                                 r, center, [](const SineSolution&, double&) { return true; }),
                       ""});
      }
      break;
    }
    case RotationClass::HyperbolicI: {
      out.push_back({Cell::HI, CellStatus::Computed, count_hyperbolic_I(p, cfg), ""});
      CellResult none;
      none.cell = Cell::HIs;
      none.status = CellStatus::Inadmissible;
      none.set.cell = Cell::HIs;
      none.message = "there are no spacelike type I hyperbolic catenoids";
      out.push_back(none);
      break;
    }
    case RotationClass::HyperbolicII: {
      out.push_back({Cell::HIIt, CellStatus::Computed, count_timelike_hyperbolic_II(p), ""});
      if (!detail::equal_radii(p, cfg)) {
        out.push_back(detail::out_of_scope(Cell::HIIs));
        break;
      }
      const double r = p.c1.radius;
      const CircleSpec& lo = p.c1.plane < p.c2.plane ? p.c1 : p.c2;
      const CircleSpec& hi = p.c1.plane < p.c2.plane ? p.c2 : p.c1;
      const double hn = h / r;
      const auto raw = sine_family_solutions(hn, cfg);
      // Keep the solutions whose boundary signs match the circles' sides,
      // shifting b by pi when the whole profile needs flipping.
      auto keep = [&](const SineSolution& s, double& b) {
        const double v_lo = std::sin(-s.a * hn + s.b), v_hi = std::sin(s.a * hn + s.b);
        if ((v_lo > 0) != (lo.side > 0) && (v_hi > 0) != (hi.side > 0)) {
          b = s.b + std::numbers::pi;
          return true;
        }
        return (v_lo > 0) == (lo.side > 0) && (v_hi > 0) == (hi.side > 0);
      };
      out.push_back({Cell::HIIs, CellStatus::Computed,
                     detail::sine_solution_set(Cell::HIIs, RotationClass::HyperbolicII, CausalCharacter::Spacelike,
                                               raw, r, center, keep),
                     ""});
      break;
    }
    case RotationClass::Parabolic: {
      auto pc = count_parabolic(n.second, &n);
      out.push_back({Cell::PAs, CellStatus::Computed, std::move(pc.spacelike), ""});
      out.push_back({Cell::PAt, CellStatus::Computed, std::move(pc.timelike), ""});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps over the separation

struct SweepPoint {
  double h = 0;
  int raw_count = 0;
  int deduped_count = 0;
  int n_1a = 0, n_1b = 0, n_2a = 0, n_2b = 0;  // raw per sub-family
  bool tangential = false;
};

inline std::vector<SweepPoint> sweep_N(double r, double h_lo, double h_hi, int steps, Cell cell,
                                       const Config& cfg = {}) {
  if (cell != Cell::TE && cell != Cell::HIIs)
    throw Error(ErrorKind::InvalidInput, "sweep_N supports the TE and HIIs cells");
  if (!(h_lo > 0) || !(h_hi >= h_lo) || !std::isfinite(h_hi))
    throw Error(ErrorKind::InvalidInput, "sweep_N requires 0 < h_lo <= h_hi");
  if (steps < 2) throw Error(ErrorKind::InvalidInput, "sweep_N requires steps >= 2");
  std::vector<SweepPoint> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double h = (i == steps - 1) ? h_hi : h_lo + (h_hi - h_lo) * i / (steps - 1);
    const SolutionSet set =
        cell == Cell::TE ? count_timelike_elliptic(r, h, cfg) : count_spacelike_hyperbolic_II(r, h, cfg);
    SweepPoint pt{h, set.raw_count, set.deduped_count};
    pt.n_1a = set.subfamily("1a")->raw;
    pt.n_1b = set.subfamily("1b")->raw;
    pt.n_2a = set.subfamily("2a")->raw;
    pt.n_2b = set.subfamily("2b")->raw;
    pt.tangential = set.has_tangential();
    out.push_back(pt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Critical constants

struct CriticalConstants {
  double c1_catenary = 0;  // full separation / radius at the catenary tangency
  double u_star = 0;       // u tanh u = 1
  double h_star_1a = 0;    // cos(ah) - a gains its second and third roots
  double a_star_1a = 0;
  double h_star_2a = 0;    // sin(ah) - a gains its second and third roots
  double a_star_2a = 0;
  double onset_1b = std::numbers::pi;
  double onset_2b = std::numbers::pi / 2;
  double c0 = 1.0;
  double residual_c1 = 0;       // |u* tanh u* - 1|
  double residual_h_star_1a = 0;  // |g_h(M_1)| at h*
  double slope_h_star_1a = 0;
  double residual_h_star_2a = 0;
  double slope_h_star_2a = 0;
};

inline TangencyResult catenary_tangency() {
  // min over u of cosh(u)/u - lambda changes sign at lambda* = cosh(u*)/u*.
  auto F = [](double u, double lam) { return std::cosh(u) / u - lam; };
  auto dF = [](double u, double) { return (u * std::sinh(u) - std::cosh(u)) / (u * u); };
  auto bracket = [](double) { return std::pair{1.0, 2.0}; };
  return solve_tangency(F, dF, bracket, 1.0, 2.0);
}

inline TangencyResult sine_tangency(PeriodicFamily kind) {
  constexpr double pi = std::numbers::pi;
  auto F = [kind](double a, double h) { return PeriodicTarget{h, kind}(a); };
  auto dF = [kind](double a, double h) { return PeriodicTarget{h, kind}.derivative(a); };
  // M_1 lies in (3pi/(2h), 2pi/h); the G_h maximum M_1* is shifted by pi/(2h).
  const double shift = kind == PeriodicFamily::Sin ? 0.5 : 0.0;
  auto bracket = [shift](double h) { return std::pair{(1.5 + shift) * pi / h, (2.0 + shift) * pi / h}; };
  return solve_tangency(F, dF, bracket, 2.0, 10.0);
}

inline CriticalConstants critical_constants() {
  CriticalConstants c;
  const TangencyResult cat = catenary_tangency();
  c.u_star = cat.x;
  c.c1_catenary = 2.0 * cat.x / std::cosh(cat.x);
  c.residual_c1 = std::abs(c.u_star * std::tanh(c.u_star) - 1.0);
  const TangencyResult t1 = sine_tangency(PeriodicFamily::Cos);
  c.h_star_1a = t1.lambda;
  c.a_star_1a = t1.x;
  c.residual_h_star_1a = std::abs(t1.value);
  c.slope_h_star_1a = std::abs(t1.slope);
  const TangencyResult t2 = sine_tangency(PeriodicFamily::Sin);
  c.h_star_2a = t2.lambda;
  c.a_star_2a = t2.x;
  c.residual_h_star_2a = std::abs(t2.value);
  c.slope_h_star_2a = std::abs(t2.slope);
  return c;
}

}  // namespace lmcat

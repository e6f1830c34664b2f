#pragma once

// Rotational surfaces X(s,t) = A(t) * v(s), their first fundamental form and
// the zero mean curvature residual
//   E det(X_s,X_t,X_tt) - 2F det(X_s,X_t,X_st) + G det(X_s,X_t,X_ss).

#include <cmath>
#include <optional>
#include <string>

#include "lmcat/circle.hpp"
#include "lmcat/lorentz.hpp"
#include "lmcat/profile.hpp"

namespace lmcat {

struct CatenoidSpec {
  RotationClass cls = RotationClass::Elliptic;
  CausalCharacter causal = CausalCharacter::Spacelike;
  ProfileCurve profile;
  std::string subfamily;

  friend bool operator==(const CatenoidSpec&, const CatenoidSpec&) = default;
};

// The profile family generating catenoids of a (class, causal) cell, or
// nothing when the cell holds no catenoid (spacelike type I hyperbolic).
inline std::optional<ProfileFamily> catenoid_family(RotationClass cls, CausalCharacter causal) {
  const bool space = causal == CausalCharacter::Spacelike;
  if (causal == CausalCharacter::Lightlike) return std::nullopt;
  switch (cls) {
    case RotationClass::Elliptic: return space ? ProfileFamily::SinhOverA : ProfileFamily::SinOverA;
    case RotationClass::HyperbolicI:
      if (space) return std::nullopt;
      return ProfileFamily::CoshOverA;
    case RotationClass::HyperbolicII: return space ? ProfileFamily::SinOverA : ProfileFamily::SinhOverA;
    case RotationClass::Parabolic: return space ? ProfileFamily::CubicPlus : ProfileFamily::CubicMinus;
  }
  return std::nullopt;
}

inline bool admissible_cell(RotationClass cls, CausalCharacter causal) {
  return catenoid_family(cls, causal).has_value();
}

inline void validate(const CatenoidSpec& c) {
  const auto fam = catenoid_family(c.cls, c.causal);
  if (!fam)
    throw Error(ErrorKind::Inadmissible, std::string(to_string(c.cls)) + "/" +
                                             std::string(to_string(c.causal)) + " holds no catenoid");
  if (*fam != c.profile.family)
    throw Error(ErrorKind::Inadmissible, std::string(to_string(c.profile.family)) +
                                             " does not generate " + std::string(to_string(c.cls)) +
                                             "/" + std::string(to_string(c.causal)) + " catenoids");
  c.profile.validate();
}

// Generating curve v(s) with X(s,t) = A(t) v(s), and its s-derivatives.
inline LorentzVector generating_point(RotationClass cls, double s, double f) {
  switch (cls) {
    case RotationClass::Elliptic: return {f, 0, s};
    case RotationClass::HyperbolicI: return {s, f, 0};
    case RotationClass::HyperbolicII: return {s, 0, f};
    case RotationClass::Parabolic: return {f + s, 0, f - s};
  }
  return {};
}

inline LorentzVector generating_tangent(RotationClass cls, double df) {
  switch (cls) {
    case RotationClass::Elliptic: return {df, 0, 1};
    case RotationClass::HyperbolicI: return {1, df, 0};
    case RotationClass::HyperbolicII: return {1, 0, df};
    case RotationClass::Parabolic: return {df + 1, 0, df - 1};
  }
  return {};
}

inline LorentzVector generating_curvature(RotationClass cls, double d2f) {
  switch (cls) {
    case RotationClass::Elliptic: return {d2f, 0, 0};
    case RotationClass::HyperbolicI: return {0, d2f, 0};
    case RotationClass::HyperbolicII: return {0, 0, d2f};
    case RotationClass::Parabolic: return {d2f, 0, d2f};
  }
  return {};
}

struct SurfaceJet {
  LorentzVector X, Xs, Xt, Xss, Xst, Xtt;
};

template <ProfileFunction P>
SurfaceJet surface_jet(RotationClass cls, const P& profile, double s, double t) {
  const ProfileValue pv = profile(s);
  const Matrix3 A0 = rotation_matrix(cls, t, 0);
  const Matrix3 A1 = rotation_matrix(cls, t, 1);
  const Matrix3 A2 = rotation_matrix(cls, t, 2);
  const LorentzVector v = generating_point(cls, s, pv.f);
  const LorentzVector dv = generating_tangent(cls, pv.df);
  const LorentzVector d2v = generating_curvature(cls, pv.d2f);
  return {A0 * v, A0 * dv, A1 * v, A0 * d2v, A1 * dv, A2 * v};
}

template <ProfileFunction P>
LorentzVector surface_point(RotationClass cls, const P& profile, double s, double t) {
  return rotation_matrix(cls, t) * generating_point(cls, s, profile(s).f);
}

inline LorentzVector surface_point(const CatenoidSpec& c, double s, double t) {
  return surface_point(c.cls, c.profile, s, t);
}

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double D_tt = 0, D_st = 0, D_ss = 0;

  double discriminant() const { return E * G - F * F; }
};

inline FundamentalForms fundamental_forms(const SurfaceJet& j) {
  return {lorentz_inner(j.Xs, j.Xs), lorentz_inner(j.Xs, j.Xt), lorentz_inner(j.Xt, j.Xt),
          det3(j.Xs, j.Xt, j.Xtt), det3(j.Xs, j.Xt, j.Xst), det3(j.Xs, j.Xt, j.Xss)};
}

template <ProfileFunction P>
FundamentalForms fundamental_forms(RotationClass cls, const P& profile, double s, double t) {
  return fundamental_forms(surface_jet(cls, profile, s, t));
}

inline FundamentalForms fundamental_forms(const CatenoidSpec& c, double s, double t) {
  return fundamental_forms(c.cls, c.profile, s, t);
}

template <ProfileFunction P>
double metric_discriminant(RotationClass cls, const P& profile, double s, double t) {
  return fundamental_forms(cls, profile, s, t).discriminant();
}

inline double metric_discriminant(const CatenoidSpec& c, double s, double t) {
  return metric_discriminant(c.cls, c.profile, s, t);
}

inline constexpr double kDegenerateMetricTolerance = 1e-13;

// Scale-free H = 0 residual: the left side divided by one plus the sum of the
// magnitudes of its three terms.
inline double mean_curvature_residual(const FundamentalForms& ff) {
  const double disc = ff.discriminant();
  if (!(std::abs(disc) > kDegenerateMetricTolerance * (std::abs(ff.E * ff.G) + ff.F * ff.F)))
    throw Error(ErrorKind::DegenerateMetric, "EG - F^2 = " + std::to_string(disc));
  const double t1 = ff.E * ff.D_tt, t2 = 2.0 * ff.F * ff.D_st, t3 = ff.G * ff.D_ss;
  return (t1 - t2 + t3) / (1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3));
}

template <ProfileFunction P>
double mean_curvature_residual(RotationClass cls, const P& profile, double s, double t) {
  return mean_curvature_residual(fundamental_forms(cls, profile, s, t));
}

inline double mean_curvature_residual(const CatenoidSpec& c, double s, double t) {
  return mean_curvature_residual(c.cls, c.profile, s, t);
}

inline constexpr double kSingularMargin = 1e-6;

// Regular points exclude the profile zeros of the sinh/sin/cosh families and
// the axis point s = 0 of the cubics.
inline bool is_regular_point(const ProfileCurve& p, double s, double margin = kSingularMargin) {
  if (is_cubic(p.family)) return std::abs(s) > margin;
  return std::abs(p(s).f) > margin;
}

// Causal character the discriminant sign implies, Lightlike when it vanishes.
inline CausalCharacter surface_causal_character(double discriminant) {
  if (discriminant > 0) return CausalCharacter::Spacelike;
  if (discriminant < 0) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

}  // namespace lmcat

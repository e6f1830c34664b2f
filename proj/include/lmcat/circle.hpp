#pragma once

#include <cmath>
#include <string>

#include "lmcat/lorentz.hpp"

namespace lmcat {

// A circle of R^3_1: the orbit of a point off the axis under one of the
// rotation groups. Elliptic circles are Euclidean circles in z = plane;
// hyperbolic ones are hyperbolas in x = plane on one side (+1/-1) of y = 0
// (type I) or z = 0 (type II); parabolic circles are parabolas through the
// anchor (a, 0, c) with a != c.
struct CircleSpec {
  RotationClass cls = RotationClass::Elliptic;
  double plane = 0.0;
  double radius = 1.0;
  int side = 1;
  double anchor_a = 0.0;
  double anchor_c = 0.0;

  static CircleSpec elliptic(double z, double r) { return {RotationClass::Elliptic, z, r, 1, 0, 0}; }
  static CircleSpec hyperbolic_i(double x, double r, int side = 1) {
    return {RotationClass::HyperbolicI, x, r, side, 0, 0};
  }
  static CircleSpec hyperbolic_ii(double x, double r, int side = 1) {
    return {RotationClass::HyperbolicII, x, r, side, 0, 0};
  }
  static CircleSpec parabolic(double a, double c) { return {RotationClass::Parabolic, 0, 0, 1, a, c}; }

  // Profile coordinates (s, f) of the generating point: the axis coordinate
  // and the signed radius. For parabolic circles the anchor equals
  // (f + s, 0, f - s).
  double profile_s() const {
    return cls == RotationClass::Parabolic ? 0.5 * (anchor_a - anchor_c) : plane;
  }
  double profile_f() const {
    switch (cls) {
      case RotationClass::Elliptic: return radius;
      case RotationClass::Parabolic: return 0.5 * (anchor_a + anchor_c);
      default: return side * radius;
    }
  }

  // Throws InvalidInput with a field path relative to `where`.
  void validate(const std::string& where = "circle") const {
    auto fail = [&](const std::string& field, const std::string& why) {
      throw Error(ErrorKind::InvalidInput, where + "." + field + ": " + why);
    };
    if (cls == RotationClass::Parabolic) {
      if (!std::isfinite(anchor_a)) fail("a", "must be finite");
      if (!std::isfinite(anchor_c)) fail("c", "must be finite");
      if (anchor_a - anchor_c == 0.0) fail("a", "anchor lies on the axis (a - c must be nonzero)");
      return;
    }
    if (!std::isfinite(plane)) fail(cls == RotationClass::Elliptic ? "z" : "x", "must be finite");
    if (!std::isfinite(radius) || !(radius > 0.0)) fail("r", "must be a finite number > 0");
    if (cls != RotationClass::Elliptic && side != 1 && side != -1) fail("side", "must be +1 or -1");
  }

  friend bool operator==(const CircleSpec&, const CircleSpec&) = default;
};

inline LorentzVector circle_point(const CircleSpec& c, double t) {
  c.validate();
  switch (c.cls) {
    case RotationClass::Elliptic:
      return {c.radius * std::cos(t), c.radius * std::sin(t), c.plane};
    case RotationClass::HyperbolicI:
      return {c.plane, c.side * c.radius * std::cosh(t), c.side * c.radius * std::sinh(t)};
    case RotationClass::HyperbolicII:
      return {c.plane, c.side * c.radius * std::sinh(t), c.side * c.radius * std::cosh(t)};
    case RotationClass::Parabolic: {
      const double q = t * t / (2.0 * (c.anchor_c - c.anchor_a));
      return {c.anchor_a + q, t, c.anchor_c + q};
    }
  }
  return {};
}

// Group parameter u with circle_point(c, t) == A(u) * circle_point(c, 0).
// Only the parabolic parametrization differs from the group parameter.
inline double circle_group_parameter(const CircleSpec& c, double t) {
  return c.cls == RotationClass::Parabolic ? t / (c.anchor_c - c.anchor_a) : t;
}

}  // namespace lmcat

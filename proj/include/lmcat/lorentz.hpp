#pragma once

// Lorentz-Minkowski 3-space with metric dx^2 + dy^2 - dz^2 and its three
// one-parameter rotation groups.

#include <array>
#include <cmath>
#include <string_view>

#include "lmcat/error.hpp"

namespace lmcat {

struct LorentzVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr LorentzVector operator+(LorentzVector u, LorentzVector v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z};
  }
  friend constexpr LorentzVector operator-(LorentzVector u, LorentzVector v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
  }
  friend constexpr LorentzVector operator*(double k, LorentzVector v) {
    return {k * v.x, k * v.y, k * v.z};
  }
  friend constexpr bool operator==(const LorentzVector&, const LorentzVector&) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr double lorentz_inner(const LorentzVector& u, const LorentzVector& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

inline double euclidean_norm2(const LorentzVector& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }

inline double euclidean_distance(const LorentzVector& u, const LorentzVector& v) {
  return std::sqrt(euclidean_norm2(u - v));
}

// Plain 3x3 determinant with the vectors as rows. This is the quantity
// det(X_s, X_t, W) entering the zero mean curvature equation.
inline double det3(const LorentzVector& a, const LorentzVector& b, const LorentzVector& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

inline constexpr std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "?";
}

inline constexpr double kLightlikeTolerance = 1e-12;

// The zero vector is spacelike by convention. |<v,v>| is compared against a
// tolerance scaled by the Euclidean size of v.
inline CausalCharacter causal_character(const LorentzVector& v, double tol = kLightlikeTolerance) {
  const double q = lorentz_inner(v, v);
  const double n2 = euclidean_norm2(v);
  if (n2 == 0.0) return CausalCharacter::Spacelike;
  if (std::abs(q) <= tol * (1.0 + n2)) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

// HyperbolicI and HyperbolicII share the axis sp{e1}; they differ in the
// plane the generating curve lives in.
enum class RotationClass { Elliptic, HyperbolicI, HyperbolicII, Parabolic };

inline constexpr std::string_view to_string(RotationClass c) {
  switch (c) {
    case RotationClass::Elliptic: return "elliptic";
    case RotationClass::HyperbolicI: return "hyperbolicI";
    case RotationClass::HyperbolicII: return "hyperbolicII";
    case RotationClass::Parabolic: return "parabolic";
  }
  return "?";
}

struct Matrix3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Matrix3 identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

  constexpr double operator()(int i, int j) const { return m[i][j]; }

  constexpr LorentzVector operator*(const LorentzVector& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  constexpr Matrix3 operator*(const Matrix3& o) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
  }
};

// A(t) and its first two t-derivatives for the group fixing the class's axis:
// timelike sp{e3}, spacelike sp{e1}, lightlike sp{e1+e3}.
inline Matrix3 rotation_matrix(RotationClass cls, double t, int derivative = 0) {
  switch (cls) {
    case RotationClass::Elliptic: {
      const double c = std::cos(t), s = std::sin(t);
      if (derivative == 0) return {{{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}}};
      if (derivative == 1) return {{{{-s, -c, 0}, {c, -s, 0}, {0, 0, 0}}}};
      return {{{{-c, s, 0}, {-s, -c, 0}, {0, 0, 0}}}};
    }
    case RotationClass::HyperbolicI:
    case RotationClass::HyperbolicII: {
      const double c = std::cosh(t), s = std::sinh(t);
      if (derivative == 0) return {{{{1, 0, 0}, {0, c, s}, {0, s, c}}}};
      if (derivative == 1) return {{{{0, 0, 0}, {0, s, c}, {0, c, s}}}};
      return {{{{0, 0, 0}, {0, c, s}, {0, s, c}}}};
    }
    case RotationClass::Parabolic: {
      const double h = 0.5 * t * t;
      if (derivative == 0) return {{{{1 - h, t, h}, {-t, 1, t}, {-h, t, 1 + h}}}};
      if (derivative == 1) return {{{{-t, 1, t}, {-1, 0, 1}, {-t, 1, t}}}};
      return {{{{-1, 0, 1}, {0, 0, 0}, {-1, 0, 1}}}};
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown rotation class");
}

}  // namespace lmcat

#pragma once

#include <cmath>
#include <concepts>
#include <string_view>

#include "lmcat/error.hpp"

namespace lmcat {

// f(s) and its first two derivatives.
struct ProfileValue {
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

// Anything that evaluates a profile jet at s. ProfileCurve is the closed-form
// case; tests also pass arbitrary lambdas to probe non-solutions.
template <class P>
concept ProfileFunction = requires(const P& p, double s) {
  { p(s) } -> std::convertible_to<ProfileValue>;
};

enum class ProfileFamily { SinhOverA, SinOverA, CoshOverA, CubicPlus, CubicMinus };

inline constexpr std::string_view to_string(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::SinhOverA: return "sinh_over_a";
    case ProfileFamily::SinOverA: return "sin_over_a";
    case ProfileFamily::CoshOverA: return "cosh_over_a";
    case ProfileFamily::CubicPlus: return "cubic_plus";
    case ProfileFamily::CubicMinus: return "cubic_minus";
  }
  return "?";
}

inline constexpr bool is_cubic(ProfileFamily f) {
  return f == ProfileFamily::CubicPlus || f == ProfileFamily::CubicMinus;
}

// f(s) = sign * (1/a) sinh(a s + b), sign * (1/a) sin(a s + b),
// sign * (1/a) cosh(a s + b), sign * (a s^3 + b) or sign * (-a s^3 + b).
//
// sign is -1 only for reflected sinh profiles: that family is not closed
// under f -> -f, and hyperbolic type II circles on prescribed sides of z = 0
// need both orientations.
struct ProfileCurve {
  ProfileFamily family = ProfileFamily::SinhOverA;
  double a = 1.0;
  double b = 0.0;
  int sign = 1;

  void validate() const {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw Error(ErrorKind::InvalidInput, "profile parameters must be finite");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidInput, "profile sign must be +1 or -1");
    if (is_cubic(family)) {
      if (!(a > 0.0)) throw Error(ErrorKind::InvalidInput, "cubic profiles require a > 0");
    } else if (a == 0.0) {
      throw Error(ErrorKind::InvalidInput, "profile parameter a must be nonzero");
    }
  }

  ProfileValue operator()(double s) const {
    ProfileValue v;
    const double u = a * s + b;
    switch (family) {
      case ProfileFamily::SinhOverA:
        v = {std::sinh(u) / a, std::cosh(u), a * std::sinh(u)};
        break;
      case ProfileFamily::SinOverA:
        v = {std::sin(u) / a, std::cos(u), -a * std::sin(u)};
        break;
      case ProfileFamily::CoshOverA:
        v = {std::cosh(u) / a, std::sinh(u), a * std::cosh(u)};
        break;
      case ProfileFamily::CubicPlus:
        v = {a * s * s * s + b, 3 * a * s * s, 6 * a * s};
        break;
      case ProfileFamily::CubicMinus:
        v = {-a * s * s * s + b, -3 * a * s * s, -6 * a * s};
        break;
    }
    if (sign < 0) v = {-v.f, -v.df, -v.d2f};
    return v;
  }

  friend bool operator==(const ProfileCurve&, const ProfileCurve&) = default;
};

inline ProfileValue profile_eval(const ProfileCurve& p, double s) { return p(s); }

}  // namespace lmcat

#pragma once

// Uniform-grid tessellation of a catenoid, skipping rows near the profile's
// axis points.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "lmcat/surface.hpp"

namespace lmcat {

inline constexpr double kMeshSingularMargin = 1e-3;

struct SurfaceMesh {
  CatenoidSpec spec;
  std::vector<LorentzVector> vertices;
  std::vector<double> s_param, t_param;  // grid coordinates of each vertex
  std::vector<double> residuals;
  std::vector<std::array<int, 3>> faces;  // 0-based
  double s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
  int n_s = 0, n_t = 0;
  int rows_dropped = 0;
  double max_residual = 0;
};

// Distance in s from `s` to the nearest axis point of the profile.
inline double profile_zero_distance(const ProfileCurve& p, double s) {
  switch (p.family) {
    case ProfileFamily::SinhOverA: return std::abs(s + p.b / p.a);
    case ProfileFamily::SinOverA: {
      const double u = (p.a * s + p.b) / std::numbers::pi;
      return std::abs(u - std::round(u)) * std::numbers::pi / std::abs(p.a);
    }
    case ProfileFamily::CoshOverA: return std::numeric_limits<double>::infinity();
    case ProfileFamily::CubicPlus:
    case ProfileFamily::CubicMinus: return std::abs(s);
  }
  return std::numeric_limits<double>::infinity();
}

inline bool mesh_valid(const SurfaceMesh& m) {
  const auto n = static_cast<int>(m.vertices.size());
  for (const auto& f : m.faces)
    for (int i : f)
      if (i < 0 || i >= n) return false;
  return m.residuals.size() == m.vertices.size();
}

inline SurfaceMesh tessellate(const CatenoidSpec& cat, double s_lo, double s_hi, double t_lo, double t_hi, int n_s,
                              int n_t, double margin = kMeshSingularMargin) {
  validate(cat);
  if (n_s < 2 || n_t < 2) throw Error(ErrorKind::InvalidInput, "tessellate requires n_s, n_t >= 2");
  if (!(s_lo < s_hi) || !(t_lo < t_hi) || !std::isfinite(s_hi - s_lo) || !std::isfinite(t_hi - t_lo))
    throw Error(ErrorKind::InvalidInput, "tessellate requires finite ranges with lo < hi");
  SurfaceMesh m;
  m.spec = cat;
  m.s_lo = s_lo, m.s_hi = s_hi, m.t_lo = t_lo, m.t_hi = t_hi;
  m.n_s = n_s, m.n_t = n_t;
  int prev_row = -1;  // vertex offset of the previous kept row, -1 after a gap
  for (int i = 0; i < n_s; ++i) {
    const double s = s_lo + (s_hi - s_lo) * i / (n_s - 1);
    if (profile_zero_distance(cat.profile, s) <= margin || !is_regular_point(cat.profile, s)) {
      ++m.rows_dropped;
      prev_row = -1;
      continue;
    }
    const int row = static_cast<int>(m.vertices.size());
    for (int j = 0; j < n_t; ++j) {
      const double t = t_lo + (t_hi - t_lo) * j / (n_t - 1);
      m.vertices.push_back(surface_point(cat, s, t));
      m.s_param.push_back(s);
      m.t_param.push_back(t);
      const double r = std::abs(mean_curvature_residual(cat, s, t));
      m.residuals.push_back(r);
      m.max_residual = std::max(m.max_residual, r);
    }
    if (prev_row >= 0)
      for (int j = 0; j + 1 < n_t; ++j) {
        const int a = prev_row + j, b = prev_row + j + 1, c = row + j, d = row + j + 1;
        m.faces.push_back({a, b, d});
        m.faces.push_back({a, d, c});
      }
    prev_row = row;
  }
  if (m.vertices.empty())
    throw Error(ErrorKind::FullySingular, "every grid row lies within " + std::to_string(margin) +
                                              " of an axis point of the profile");
  return m;
}

// Relative mismatch of a point against the implicit equation of the
// catenoid's orbit family; 0 when the point lies on the surface.
inline double implicit_residual(const CatenoidSpec& cat, const LorentzVector& p) {
  switch (cat.cls) {
    case RotationClass::Elliptic: {
      const double f = cat.profile(p.z).f;
      return std::abs(std::hypot(p.x, p.y) - std::abs(f)) / (1.0 + std::abs(f));
    }
    case RotationClass::HyperbolicI: {
      const double f = cat.profile(p.x).f;
      return std::abs(p.y * p.y - p.z * p.z - f * f) / (1.0 + f * f);
    }
    case RotationClass::HyperbolicII: {
      const double f = cat.profile(p.x).f;
      return std::abs(p.z * p.z - p.y * p.y - f * f) / (1.0 + f * f);
    }
    case RotationClass::Parabolic: {
      const double s = 0.5 * (p.x - p.z);
      const double q = 4.0 * s * cat.profile(s).f;
      return std::abs(lorentz_inner(p, p) - q) / (1.0 + std::abs(q));
    }
  }
  return 0.0;
}

}  // namespace lmcat

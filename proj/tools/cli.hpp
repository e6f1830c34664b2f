#pragma once

// The lmcat command line: count | constants | sweep | mesh | verify.
// Exit codes: 0 computed, 1 runtime or I/O failure (or a failed verify),
// 2 input or usage error.

#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmcat/lmcat.hpp"

namespace lmcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct PairFlags {
  std::string pair_file;
  std::string pair_json;
  std::string cls;
  std::optional<double> plane1, plane2, r1, r2, a1, c1, a2, c2;
  int side1 = 1, side2 = 1;
};

inline void add_pair_flags(CLI::App* app, PairFlags& f) {
  app->add_option("--pair", f.pair_file, "JSON pair descriptor file");
  app->add_option("--pair-json", f.pair_json, "inline JSON pair descriptor");
  app->add_option("--class", f.cls, "rotation class: elliptic | hyperbolicI | hyperbolicII | parabolic");
  app->add_option("--plane1", f.plane1, "plane coordinate of circle 1 (z or x)");
  app->add_option("--plane2", f.plane2, "plane coordinate of circle 2 (z or x)");
  app->add_option("--r1", f.r1, "radius of circle 1");
  app->add_option("--r2", f.r2, "radius of circle 2");
  app->add_option("--side1", f.side1, "side of circle 1 (+1/-1), hyperbolic classes");
  app->add_option("--side2", f.side2, "side of circle 2 (+1/-1), hyperbolic classes");
  app->add_option("--a1", f.a1, "parabolic anchor a of circle 1");
  app->add_option("--c1", f.c1, "parabolic anchor c of circle 1");
  app->add_option("--a2", f.a2, "parabolic anchor a of circle 2");
  app->add_option("--c2", f.c2, "parabolic anchor c of circle 2");
}

inline bool has_pair(const PairFlags& f) { return !f.pair_file.empty() || !f.pair_json.empty() || !f.cls.empty(); }

// Flat flags are compiled into the JSON descriptor so both inputs share one
// parser and its field paths.
inline BoundaryPair resolve_pair(const PairFlags& f) {
  if (!f.pair_file.empty()) return parse_pair_text(read_file(f.pair_file));
  if (!f.pair_json.empty()) return parse_pair_text(f.pair_json);
  if (f.cls.empty()) throw Error(ErrorKind::InvalidInput, "descriptor: give --pair, --pair-json or --class");
  json j{{"class", f.cls}, {"circle1", json::object()}, {"circle2", json::object()}};
  const bool para = f.cls == "parabolic";
  const bool ell = f.cls == "elliptic";
  auto put = [&](const char* circle, const char* key, const std::optional<double>& v) {
    if (v) j[circle][key] = *v;
  };
  if (para) {
    put("circle1", "a", f.a1), put("circle1", "c", f.c1), put("circle2", "a", f.a2), put("circle2", "c", f.c2);
  } else {
    put("circle1", ell ? "z" : "x", f.plane1), put("circle2", ell ? "z" : "x", f.plane2);
    put("circle1", "r", f.r1), put("circle2", "r", f.r2);
    if (!ell) j["circle1"]["side"] = f.side1, j["circle2"]["side"] = f.side2;
  }
  return parse_pair(j);
}


inline void add_config_flags(CLI::App* app, Config& cfg) {
  app->add_option("--step", cfg.roots.step, "root-scan grid step upper bound");
  app->add_option("--merge-distance", cfg.roots.merge_distance, "tangential merge distance");
  app->add_option("--merge-value", cfg.roots.merge_value, "tangential merge |f| threshold");
  app->add_option("--residual-tol", cfg.residual_tol, "H = 0 residual tolerance");
  app->add_option("--equal-radius-tol", cfg.equal_radius_tol, "relative tolerance for equal radii");
}

struct SpecFlags {
  std::string spec_json;
  std::string cls, causal, family;
  double a = 1.0, b = 0.0;
  int sign = 1;
};

inline void add_spec_flags(CLI::App* app, SpecFlags& f) {
  app->add_option("--spec-json", f.spec_json, "inline JSON catenoid spec");
  app->add_option("--class", f.cls, "rotation class");
  app->add_option("--causal", f.causal, "spacelike | timelike");
  app->add_option("--family", f.family, "sinh_over_a | sin_over_a | cosh_over_a | cubic_plus | cubic_minus");
  app->add_option("--a", f.a, "profile parameter a");
  app->add_option("--b", f.b, "profile parameter b");
  app->add_option("--sign", f.sign, "profile orientation (+1/-1)");
}

inline CatenoidSpec resolve_spec(const SpecFlags& f) {
  json j;
  if (!f.spec_json.empty()) {
    try {
      j = json::parse(f.spec_json);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidInput, std::string("spec: malformed JSON: ") + e.what());
    }
  } else {
    j = {{"class", f.cls}, {"causal", f.causal}, {"family", f.family}, {"a", f.a}, {"b", f.b}, {"sign", f.sign}};
  }
  return parse_spec(j);
}

inline std::pair<double, double> default_t_range(RotationClass cls) {
  if (cls == RotationClass::Elliptic) return {0.0, 2.0 * std::numbers::pi};
  return {-1.5, 1.5};
}

inline json certification_json(const CatenoidSpec& spec, const BoundaryPair& p) {
  const double s1 = p.c1.profile_s(), s2 = p.c2.profile_s();
  const Certification c = certify(spec, s1, s2, 100);
  return {{"max_residual", c.max_residual},
          {"samples", c.samples},
          {"sign_matches", c.sign_matches},
          {"trace_distance", std::max(max_trace_distance(spec, p.c1), max_trace_distance(spec, p.c2))}};
}

// --- count -----------------------------------------------------------------

inline int cmd_count(const PairFlags& pf, const Config& cfg, const std::string& cell_filter, std::ostream& out) {
  const BoundaryPair p = resolve_pair(pf);
  const auto cells = count_all(p, cfg);
  json arr = json::array();
  for (const auto& c : cells) {
    if (!cell_filter.empty() && cell_filter != to_string(c.cell)) continue;
    json j = to_json(c);
    for (std::size_t i = 0; i < c.set.solutions.size(); ++i)
      j["solutions"][i]["certification"] = certification_json(c.set.solutions[i].spec, p);
    arr.push_back(j);
  }
  if (!cell_filter.empty() && arr.empty())
    throw Error(ErrorKind::InvalidInput, "--cell: " + cell_filter + " is not a cell of this rotation class");
  out << json{{"pair", to_json(p)}, {"config", to_json(cfg)}, {"cells", arr}}.dump(2) << "\n";
  return kExitOk;
}

// --- constants -------------------------------------------------------------

inline int cmd_constants(const Config& cfg, std::ostream& out) {
  out << json{{"config", to_json(cfg)}, {"constants", to_json(critical_constants())}}.dump(2) << "\n";
  return kExitOk;
}

// --- sweep -----------------------------------------------------------------

struct SweepFlags {
  std::string cell = "TE";
  double r = 1.0;
  double h_lo = 0.1, h_hi = 1.0;
  int steps = 10;
  std::string out;
  std::string format = "csv";
};

inline int cmd_sweep(const SweepFlags& f, const Config& cfg, std::ostream& out) {
  Cell cell;
  if (f.cell == "TE") cell = Cell::TE;
  else if (f.cell == "HIIs") cell = Cell::HIIs;
  else throw Error(ErrorKind::InvalidInput, "--cell: expected TE or HIIs");
  if (!(f.r > 0)) throw Error(ErrorKind::InvalidInput, "--r: must be > 0");
  const auto series = sweep_N(f.r, f.h_lo, f.h_hi, f.steps, cell, cfg);
  export_table(series, f.out, f.format == "json" ? TableFormat::Json : TableFormat::Csv);
  int lo = series.front().deduped_count, hi = lo;
  bool monotone = true;
  for (std::size_t i = 0; i < series.size(); ++i) {
    lo = std::min(lo, series[i].deduped_count);
    hi = std::max(hi, series[i].deduped_count);
    if (i && series[i].deduped_count < series[i - 1].deduped_count) monotone = false;
  }
  out << "sweep " << f.cell << " r=" << f.r << " h=[" << f.h_lo << "," << f.h_hi << "] steps=" << f.steps
      << " N in [" << lo << "," << hi << "] non_decreasing=" << (monotone ? "yes" : "no") << " -> " << f.out
      << "\n";
  return kExitOk;
}

// --- mesh ------------------------------------------------------------------

struct MeshFlags {
  std::string out_dir = ".";
  int n_s = 48, n_t = 48;
  std::optional<double> s_lo, s_hi, t_lo, t_hi;
};

inline std::string mesh_file(const MeshFlags& f, const CatenoidSpec& spec, std::string_view cell, int index,
                             double s_lo, double s_hi, std::ostream& out) {
  const auto [tl, th] = default_t_range(spec.cls);
  const SurfaceMesh m = tessellate(spec, s_lo, s_hi, f.t_lo.value_or(tl), f.t_hi.value_or(th), f.n_s, f.n_t);
  std::string name = std::string(cell);
  if (!spec.subfamily.empty()) name += "_" + spec.subfamily;
  name += "_" + std::to_string(index) + ".obj";
  const std::string path = (std::filesystem::path(f.out_dir) / name).string();
  export_obj(m, path);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", m.max_residual);
  out << path << " vertices=" << m.vertices.size() << " faces=" << m.faces.size() << " max_residual=" << buf
      << "\n";
  return path;
}

inline int cmd_mesh(const PairFlags& pf, const SpecFlags& sf, const MeshFlags& f, const Config& cfg,
                    const std::string& cell_filter, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(f.out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + f.out_dir + ": " + ec.message());
  const bool explicit_spec = !sf.spec_json.empty() || !sf.family.empty();
  if (explicit_spec) {
    const CatenoidSpec spec = resolve_spec(sf);
    validate(spec);
    mesh_file(f, spec, "spec", 0, f.s_lo.value_or(-1.0), f.s_hi.value_or(1.0), out);
    return kExitOk;
  }
  const BoundaryPair p = resolve_pair(pf);
  const double s1 = p.c1.profile_s(), s2 = p.c2.profile_s();
  int written = 0;
  bool matched = cell_filter.empty();
  for (const auto& c : count_all(p, cfg)) {
    if (!cell_filter.empty() && cell_filter != to_string(c.cell)) continue;
    matched = true;
    int index = 0;
    for (const auto& sol : c.set.solutions) {
      mesh_file(f, sol.spec, to_string(c.cell), index++, f.s_lo.value_or(std::min(s1, s2)),
                f.s_hi.value_or(std::max(s1, s2)), out);
      ++written;
    }
  }
  if (!matched)
    throw Error(ErrorKind::InvalidInput, "--cell: " + cell_filter + " is not a cell of this rotation class");
  if (written == 0) out << "no catenoid spans these circles; no files written\n";
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyFlags {
  double tol = 1e-9;
  int samples = 100;
  double s_lo = -1.0, s_hi = 1.0;
  std::optional<double> t_lo, t_hi;
  std::string obj;
  double obj_tol = 1e-6;  // OBJ coordinates carry 9 significant digits
};

inline int cmd_verify(const SpecFlags& sf, const VerifyFlags& f, std::ostream& out) {
  // Without spec flags the spec recorded in the OBJ header is used.
  std::optional<ObjData> obj;
  if (!f.obj.empty()) obj = parse_obj(read_file(f.obj));
  SpecFlags flags = sf;
  if (obj && flags.spec_json.empty() && flags.family.empty()) {
    flags.spec_json = obj_header_value(*obj, "spec");
    if (flags.spec_json.empty()) throw Error(ErrorKind::InvalidInput, "--obj: file records no spec; pass one");
  }
  const CatenoidSpec spec = resolve_spec(flags);
  if (!admissible_cell(spec.cls, spec.causal))
    throw Error(ErrorKind::Inadmissible, std::string(to_string(spec.cls)) + "/" +
                                             std::string(to_string(spec.causal)) + " holds no catenoid");
  spec.profile.validate();
  if (!(f.s_lo < f.s_hi)) throw Error(ErrorKind::InvalidInput, "--s-lo/--s-hi: need s-lo < s-hi");
  if (f.samples < 1) throw Error(ErrorKind::InvalidInput, "--samples: must be >= 1");
  const auto [tl, th] = default_t_range(spec.cls);
  const Certification c = certify(spec.cls, spec.profile, spec.causal, f.s_lo, f.s_hi, f.t_lo.value_or(tl),
                                  f.t_hi.value_or(th), f.samples, spec.profile.family);
  bool pass = c.samples > 0 && c.max_residual < f.tol && c.sign_matches;
  json j{{"spec", to_json(spec)},
         {"tolerance", f.tol},
         {"samples", c.samples},
         {"max_residual", c.max_residual},
         {"mean_residual", c.mean_residual},
         {"discriminant", {{"positive", c.positive}, {"negative", c.negative}, {"degenerate", c.degenerate}}},
         {"sign_matches", c.sign_matches}};
  if (const auto fam = catenoid_family(spec.cls, spec.causal); fam && *fam != spec.profile.family)
    j["note"] = std::string(to_string(spec.profile.family)) + " is not the catenoid family of this cell";
  if (obj) {
    const ObjData& d = *obj;
    double worst = 0;
    for (const auto& v : d.vertices) worst = std::max(worst, implicit_residual(spec, v));
    const std::string recorded = obj_header_value(d, "max_residual");
    json o{{"path", f.obj}, {"tolerance", f.obj_tol}, {"vertices", d.vertices.size()}, {"faces", d.faces.size()}, {"max_off_surface", worst}};
    o["recorded_max_residual"] = recorded.empty() ? json(nullptr) : json(std::stod(recorded));
    j["obj"] = o;
    if (!(worst < f.obj_tol) || d.vertices.empty()) pass = false;
  }
  j["verdict"] = pass ? "PASS" : "FAIL";
  out << j.dump(2) << "\n";
  return pass ? kExitOk : kExitFailure;
}

// --- driver ----------------------------------------------------------------

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Inadmissible:
    case ErrorKind::OutOfScope: return kExitUsage;
    default: return kExitFailure;
  }
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catenoids spanning two coaxial circles in Lorentz-Minkowski space", "lmcat"};
  app.require_subcommand(1);
  Config cfg;

  PairFlags count_pair;
  std::string cell_filter;
  auto* count = app.add_subcommand("count", "enumerate every catenoid spanning a pair of circles");
  add_pair_flags(count, count_pair);
  add_config_flags(count, cfg);
  count->add_option("--cell", cell_filter, "report one cell only (SE, TE, HI, HIs, HIIt, HIIs, PAs, PAt)");

  auto* constants = app.add_subcommand("constants", "critical separation constants");
  add_config_flags(constants, cfg);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "N(h) over a separation grid, written as CSV");
  sweep->add_option("--cell", sweep_flags.cell, "TE or HIIs");
  sweep->add_option("--r", sweep_flags.r, "common radius");
  sweep->add_option("--h-lo", sweep_flags.h_lo, "first half-separation")->required();
  sweep->add_option("--h-hi", sweep_flags.h_hi, "last half-separation")->required();
  sweep->add_option("--steps", sweep_flags.steps, "grid points (>= 2)")->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", sweep_flags.out, "output file")->required();
  sweep->add_option("--format", sweep_flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_config_flags(sweep, cfg);

  PairFlags mesh_pair;
  SpecFlags mesh_spec;
  MeshFlags mesh_flags;
  auto* mesh = app.add_subcommand("mesh", "write one OBJ per catenoid");
  add_pair_flags(mesh, mesh_pair);
  std::string mesh_cell;
  mesh->add_option("--cell", mesh_cell, "mesh the solutions of one cell only");
  mesh->add_option("--spec-json", mesh_spec.spec_json, "explicit catenoid spec instead of a pair");
  mesh->add_option("--causal", mesh_spec.causal, "explicit spec: spacelike | timelike");
  mesh->add_option("--family", mesh_spec.family, "explicit spec: profile family");
  mesh->add_option("--a", mesh_spec.a, "explicit spec: a");
  mesh->add_option("--b", mesh_spec.b, "explicit spec: b");
  mesh->add_option("--sign", mesh_spec.sign, "explicit spec: orientation");
  mesh->add_option("--out", mesh_flags.out_dir, "output directory");
  mesh->add_option("--ns", mesh_flags.n_s, "grid rows in s")->check(CLI::Range(2, 100000));
  mesh->add_option("--nt", mesh_flags.n_t, "grid columns in t")->check(CLI::Range(2, 100000));
  mesh->add_option("--s-lo", mesh_flags.s_lo);
  mesh->add_option("--s-hi", mesh_flags.s_hi);
  mesh->add_option("--t-lo", mesh_flags.t_lo);
  mesh->add_option("--t-hi", mesh_flags.t_hi);
  add_config_flags(mesh, cfg);

  SpecFlags verify_spec;
  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "certify H = 0 and the causal character of a spec");
  add_spec_flags(verify, verify_spec);
  verify->add_option("--tol", verify_flags.tol, "residual tolerance");
  verify->add_option("--samples", verify_flags.samples, "sample points");
  verify->add_option("--s-lo", verify_flags.s_lo);
  verify->add_option("--s-hi", verify_flags.s_hi);
  verify->add_option("--t-lo", verify_flags.t_lo);
  verify->add_option("--t-hi", verify_flags.t_hi);
  verify->add_option("--obj", verify_flags.obj, "also check that an OBJ's vertices lie on the surface");
  verify->add_option("--obj-tol", verify_flags.obj_tol, "off-surface tolerance for OBJ vertices");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lmcat: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_pair, cfg, cell_filter, out);
    if (*constants) return cmd_constants(cfg, out);
    if (*sweep) return cmd_sweep(sweep_flags, cfg, out);
    if (*mesh) {
      mesh_spec.cls = mesh_pair.cls;
      return cmd_mesh(mesh_pair, mesh_spec, mesh_flags, cfg, mesh_cell, out);
    }
    if (*verify) return cmd_verify(verify_spec, verify_flags, out);
  } catch (const Error& e) {
    err << "lmcat: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "lmcat: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lmcat::cli

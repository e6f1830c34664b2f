#pragma once

// OBJ, CSV and JSON writers.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lmcat/descriptor.hpp"
#include "lmcat/mesh.hpp"

namespace lmcat {

inline std::string format_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string obj_text(const SurfaceMesh& m) {
  if (!mesh_valid(m)) throw Error(ErrorKind::InvalidInput, "mesh has out-of-range face indices");
  std::ostringstream os;
  os << "# lmcat catenoid mesh\n";
  os << "# spec " << to_json(m.spec).dump() << "\n";
  os << "# grid " << m.n_s << "x" << m.n_t << " s=[" << format_g9(m.s_lo) << "," << format_g9(m.s_hi) << "] t=["
     << format_g9(m.t_lo) << "," << format_g9(m.t_hi) << "] rows_dropped " << m.rows_dropped << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", m.max_residual);
  os << "# max_residual " << buf << "\n";
  for (const auto& v : m.vertices)
    os << "v " << format_g9(v.x) << " " << format_g9(v.y) << " " << format_g9(v.z) << "\n";
  for (const auto& f : m.faces) os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void export_obj(const SurfaceMesh& m, const std::string& path) { write_file(path, obj_text(m)); }

struct ObjData {
  std::vector<LorentzVector> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
  std::vector<std::string> comments;
};

inline ObjData parse_obj(const std::string& text) {
  ObjData d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "#") {
      d.comments.push_back(line.size() > 2 ? line.substr(2) : "");
    } else if (tag == "v") {
      LorentzVector v;
      if (!(ls >> v.x >> v.y >> v.z))
        throw Error(ErrorKind::InvalidInput, "obj line " + std::to_string(lineno) + ": bad vertex");
      d.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      if (!(ls >> f[0] >> f[1] >> f[2]))
        throw Error(ErrorKind::InvalidInput, "obj line " + std::to_string(lineno) + ": bad face");
      for (int& i : f) --i;
      d.faces.push_back(f);
    }
  }
  for (const auto& f : d.faces)
    for (int i : f)
      if (i < 0 || i >= static_cast<int>(d.vertices.size()))
        throw Error(ErrorKind::InvalidInput, "obj face index out of range");
  return d;
}

// Value following "# <key> " in an OBJ header, or empty.
inline std::string obj_header_value(const ObjData& d, const std::string& key) {
  for (const auto& c : d.comments)
    if (c.rfind(key + " ", 0) == 0) return c.substr(key.size() + 1);
  return {};
}

inline std::string sweep_csv(const std::vector<SweepPoint>& series) {
  std::ostringstream os;
  os << "h,raw_count,deduped_count,n_1a,n_1b,n_2a,n_2b,tangential\n";
  char buf[32];
  for (const auto& p : series) {
    std::snprintf(buf, sizeof buf, "%.17g", p.h);
    os << buf << "," << p.raw_count << "," << p.deduped_count << "," << p.n_1a << "," << p.n_1b << "," << p.n_2a
       << "," << p.n_2b << "," << (p.tangential ? 1 : 0) << "\n";
  }
  return os.str();
}

inline json to_json(const std::vector<SweepPoint>& series) {
  json arr = json::array();
  for (const auto& p : series)
    arr.push_back({{"h", p.h},
                   {"raw_count", p.raw_count},
                   {"deduped_count", p.deduped_count},
                   {"n_1a", p.n_1a},
                   {"n_1b", p.n_1b},
                   {"n_2a", p.n_2a},
                   {"n_2b", p.n_2b},
                   {"tangential", p.tangential}});
  return arr;
}

enum class TableFormat { Csv, Json };

inline void export_table(const std::vector<SweepPoint>& series, const std::string& path, TableFormat fmt) {
  write_file(path, fmt == TableFormat::Csv ? sweep_csv(series) : to_json(series).dump(2) + "\n");
}

inline void export_table(const SolutionSet& set, const std::string& path) {
  write_file(path, to_json(set).dump(2) + "\n");
}

inline void export_table(const CriticalConstants& c, const std::string& path) {
  write_file(path, to_json(c).dump(2) + "\n");
}

}  // namespace lmcat

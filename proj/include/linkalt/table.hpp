#pragma once

// The bundled link table: one record per line,
//
//   name | crossing number + provenance (or -) | expected Conway (or -) | note | PD
//
// '#' lines and blank lines are skipped.

#include <linkalt/diagram.hpp>
#include <linkalt/obstruction.hpp>
#include <linkalt/poly.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef LINKALT_DATA_DIR
#define LINKALT_DATA_DIR "data"
#endif

namespace linkalt {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinkTableEntry {
  std::string name;
  std::string pd_text;
  LinkDiagram diagram;
  std::optional<CrossingBound> crossing_number;
  std::optional<SkeinPolynomial> expected_conway;
  std::string note;
};

inline std::string default_table_path() { return std::string(LINKALT_DATA_DIR) + "/links.pdtab"; }
inline std::string default_surface_dir() { return std::string(LINKALT_DATA_DIR) + "/surfaces"; }

namespace detail {

inline std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

}  // namespace detail

// Parses a whole table. Bad PD text is reported with its line; the entry's
// own validation is left to parse_pd.
inline std::vector<LinkTableEntry> parse_table(const std::string& text) {
  std::vector<LinkTableEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
      auto bar = line.find('|', start);
      if (bar == std::string::npos) throw TableError("line " + std::to_string(lineno) + ": expected 5 fields");
      f.push_back(detail::trim(line.substr(start, bar - start)));
      start = bar + 1;
    }
    f.push_back(detail::trim(line.substr(start)));

    LinkTableEntry e;
    e.name = f[0];
    if (e.name.empty()) throw TableError("line " + std::to_string(lineno) + ": empty name");
    if (f[1] != "-") {
      std::istringstream cs(f[1]);
      CrossingBound b;
      std::string prov;
      if (!(cs >> b.value >> prov)) throw TableError("line " + std::to_string(lineno) + ": bad crossing number");
      try {
        b.provenance = parse_provenance(prov);
      } catch (const std::invalid_argument& ex) {
        throw TableError("line " + std::to_string(lineno) + ": " + ex.what());
      }
      e.crossing_number = b;
    }
    if (f[2] != "-") {
      try {
        e.expected_conway = SkeinPolynomial::parse(f[2]);
      } catch (const std::exception& ex) {
        throw TableError("line " + std::to_string(lineno) + ": " + ex.what());
      }
    }
    e.note = f[3];
    e.pd_text = f[4];
    try {
      e.diagram = parse_pd(e.pd_text);
    } catch (const DiagramError& ex) {
      throw TableError("line " + std::to_string(lineno) + " (" + e.name + "): " + ex.what());
    }
    e.diagram.name = e.name;
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw TableError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<LinkTableEntry> load_table(const std::string& path = default_table_path()) {
  return parse_table(read_file(path));
}

inline const LinkTableEntry& find_entry(const std::vector<LinkTableEntry>& table, const std::string& name) {
  for (const auto& e : table)
    if (e.name == name) return e;
  throw TableError("no table entry named '" + name + "'");
}

}  // namespace linkalt

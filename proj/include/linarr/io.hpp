#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/localsystem.hpp"

namespace linarr {

/// Parsed .arr file: the arrangement plus named local systems.
///
/// Format, one entry per text line:
///   # comment
///   LABEL: a b c          -- line a*x + b*y + c*z = 0, rationals
///   [system NAME]         -- opens a named system section
///   LABEL = p/q           -- residue class of LABEL in the open section
/// Unlisted labels default to class 0. Decimals are rejected; the format
/// is exact.
struct ArrangementFile {
  Arrangement arr;
  std::vector<std::pair<std::string, LocalSystem>> systems;

  const LocalSystem* find_system(const std::string& name) const {
    for (const auto& [n, s] : systems)
      if (n == name) return &s;
    return nullptr;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline ArrangementFile parse_arrangement_text(const std::string& text,
                                              const std::string& name) {
  std::vector<Line> lines;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::map<std::string, Rat>>> sections;
  bool in_system = false;

  std::istringstream in(text);
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    std::string s = detail::trim(row);
    if (s.empty() || s[0] == '#') continue;

    if (s.front() == '[') {
      if (s.back() != ']')
        throw parse_error("unterminated section header", lineno, 1);
      std::istringstream hs(s.substr(1, s.size() - 2));
      std::string kw, sysname;
      hs >> kw >> sysname;
      if (kw != "system" || sysname.empty())
        throw parse_error("expected [system NAME]", lineno, 1);
      for (const auto& [n, m] : sections)
        if (n == sysname)
          throw parse_error("duplicate system '" + sysname + "'", lineno, 1);
      sections.push_back({sysname, {}});
      in_system = true;
      continue;
    }

    if (in_system) {
      auto eq = s.find('=');
      if (eq == std::string::npos)
        throw parse_error("expected LABEL = VALUE in system section", lineno,
                          1);
      std::string label = detail::trim(s.substr(0, eq));
      std::string value = detail::trim(s.substr(eq + 1));
      auto r = parse_rational(value);
      if (!r)
        throw parse_error("malformed rational '" + value + "'", lineno,
                          static_cast<int>(eq + 2));
      bool known = false;
      for (const auto& l : labels) known |= (l == label);
      if (!known)
        throw parse_error("unknown line label '" + label + "'", lineno, 1);
      auto& sec = sections.back().second;
      if (sec.contains(label))
        throw parse_error("duplicate class for '" + label + "'", lineno, 1);
      sec[label] = *r;
      continue;
    }

    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected LABEL: a b c", lineno, 1);
    std::string label = detail::trim(s.substr(0, colon));
    if (label.empty()) throw parse_error("empty line label", lineno, 1);
    for (const auto& l : labels)
      if (l == label)
        throw parse_error("duplicate label '" + label + "'", lineno, 1);
    std::istringstream cs(s.substr(colon + 1));
    std::string ta, tb, tc, extra;
    if (!(cs >> ta >> tb >> tc) || (cs >> extra))
      throw parse_error("expected exactly three coefficients", lineno,
                        static_cast<int>(colon + 2));
    auto a = parse_rational(ta), b = parse_rational(tb), c = parse_rational(tc);
    if (!a || !b || !c)
      throw parse_error("malformed rational coefficient", lineno,
                        static_cast<int>(colon + 2));
    try {
      lines.emplace_back(*a, *b, *c);
    } catch (const degenerate_error&) {
      throw parse_error("zero line", lineno, 1);
    }
    labels.push_back(label);
  }

  if (lines.size() < 2) throw parse_error("fewer than 2 lines", lineno, 1);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        throw parse_error("lines '" + labels[i] + "' and '" + labels[j] +
                              "' coincide",
                          lineno, 1);

  ArrangementFile out{Arrangement(lines, labels, name), {}};
  for (auto& [sysname, classes] : sections) {
    std::vector<Rat> cls(lines.size(), 0);
    for (const auto& [label, value] : classes)
      cls[out.arr.index_of_label(label)] = value;
    try {
      out.systems.push_back({sysname, LocalSystem(std::move(cls))});
    } catch (const validation_error& e) {
      throw parse_error("system '" + sysname + "': " + e.what(), lineno, 1);
    }
  }
  return out;
}

inline ArrangementFile parse_arrangement(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string stem = path;
  if (auto p = stem.find_last_of('/'); p != std::string::npos)
    stem = stem.substr(p + 1);
  if (auto p = stem.find_last_of('.'); p != std::string::npos)
    stem = stem.substr(0, p);
  return parse_arrangement_text(buf.str(), stem);
}

inline std::string print_arrangement(const ArrangementFile& file) {
  std::ostringstream out;
  const auto& arr = file.arr;
  for (int i = 0; i < arr.size(); ++i) {
    out << arr.labels[i] << ": " << arr.lines[i].coeffs[0].str() << " "
        << arr.lines[i].coeffs[1].str() << " " << arr.lines[i].coeffs[2].str()
        << "\n";
  }
  for (const auto& [name, sys] : file.systems) {
    out << "\n[system " << name << "]\n";
    for (int i = 0; i < arr.size(); ++i)
      if (sys.classes[i] != 0)
        out << arr.labels[i] << " = " << rat_to_string(sys.classes[i]) << "\n";
  }
  return out.str();
}

}  // namespace linarr

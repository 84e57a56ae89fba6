#pragma once

#include <set>
#include <string>
#include <vector>

#include "linarr/error.hpp"
#include "linarr/geometry.hpp"

namespace linarr {

/// A finite set of distinct projective lines. The index of a line in
/// `lines` is its identity throughout the library; labels are for I/O.
struct Arrangement {
  std::vector<Line> lines;
  std::vector<std::string> labels;
  std::string name;

  Arrangement(std::vector<Line> ls, std::vector<std::string> labs = {},
              std::string nm = {})
      : lines(std::move(ls)), labels(std::move(labs)), name(std::move(nm)) {
    if (lines.size() < 2)
      throw validation_error("an arrangement needs at least 2 lines");
    std::set<Line> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!seen.insert(lines[i]).second)
        throw validation_error("duplicate line at index " + std::to_string(i));
    }
    if (labels.empty()) {
      labels.reserve(lines.size());
      for (std::size_t i = 0; i < lines.size(); ++i)
        labels.push_back("L_" + std::to_string(i));
    }
    if (labels.size() != lines.size())
      throw validation_error("label count does not match line count");
  }

  int size() const { return static_cast<int>(lines.size()); }

  int index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<int>(i);
    return -1;
  }

  /// True when all lines pass through a single point.
  bool concurrent() const {
    Point c = intersect(lines[0], lines[1]);
    for (const auto& l : lines)
      if (!on_line(c, l)) return false;
    return true;
  }
};

}  // namespace linarr

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linarr/arrangement.hpp"

namespace linarr {

/// An intersection point together with the lines through it.
struct MultPoint {
  Point point;
  std::vector<int> incident;  // sorted line indices
  int multiplicity = 0;       // == incident.size()
};

/// Complete incidence structure of an arrangement: every pairwise
/// intersection point (deduplicated), the multiple points M (multiplicity
/// >= 3), per-line point lists and the adjacency relation on M.
///
/// Points are stored sorted by canonical coordinates; every index below is
/// an index into `points`.
struct IncidenceStructure {
  Arrangement arr;
  std::vector<MultPoint> points;  // all intersection points, mult >= 2
  std::vector<int> m_points;      // indices of points with mult >= 3
  std::vector<std::vector<int>> line_points;    // per line: all its points
  std::vector<std::vector<int>> line_m_points;  // per line: its M-points

  bool is_m_point(int pt) const { return points[pt].multiplicity >= 3; }

  int m_count_on_line(int line) const {
    return static_cast<int>(line_m_points[line].size());
  }

  /// Lines of A carrying at least two points of M ("rich" lines: the only
  /// lines that can belong to a multi-line graph).
  std::vector<int> rich_lines() const {
    std::vector<int> out;
    for (int l = 0; l < arr.size(); ++l)
      if (m_count_on_line(l) >= 2) out.push_back(l);
    return out;
  }

  /// Lines carrying exactly one point of M (the set A_1).
  std::vector<int> a1_lines() const {
    std::vector<int> out;
    for (int l = 0; l < arr.size(); ++l)
      if (m_count_on_line(l) == 1) out.push_back(l);
    return out;
  }

  /// The unique line through two distinct points of M, if any. Uniqueness
  /// is asserted rather than assumed.
  std::optional<int> line_through(int x, int y) const {
    std::optional<int> found;
    for (int l : points[x].incident) {
      if (std::ranges::binary_search(points[y].incident, l)) {
        if (found)
          throw invariant_error("two distinct points on two common lines");
        found = l;
      }
    }
    return found;
  }

  int find_point(const Point& p) const {
    auto it = std::ranges::lower_bound(
        points, p, std::less<>{}, [](const MultPoint& mp) { return mp.point; });
    if (it == points.end() || !(it->point == p)) return -1;
    return static_cast<int>(it - points.begin());
  }
};

/// Builds the full incidence structure: all C(n,2) line pairs are
/// intersected, points deduplicated by canonical coordinates, and the
/// pair-count identity  sum_p C(mult(p),2) == C(n,2)  is verified.
inline IncidenceStructure build_incidence(const Arrangement& arr) {
  std::map<Point, std::set<int>> by_point;
  const int n = arr.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Point p = intersect(arr.lines[i], arr.lines[j]);
      auto& s = by_point[p];
      s.insert(i);
      s.insert(j);
    }

  IncidenceStructure inc{arr, {}, {}, {}, {}};
  inc.points.reserve(by_point.size());
  for (const auto& [p, s] : by_point) {
    MultPoint mp{p, std::vector<int>(s.begin(), s.end()),
                 static_cast<int>(s.size())};
    inc.points.push_back(std::move(mp));
  }

  Int pairs = 0;
  for (const auto& mp : inc.points)
    pairs += Int(mp.multiplicity) * (mp.multiplicity - 1) / 2;
  if (pairs != Int(n) * (n - 1) / 2)
    throw invariant_error("pair-count identity failed");

  inc.line_points.assign(n, {});
  inc.line_m_points.assign(n, {});
  for (int pi = 0; pi < static_cast<int>(inc.points.size()); ++pi) {
    if (inc.points[pi].multiplicity >= 3) inc.m_points.push_back(pi);
    for (int l : inc.points[pi].incident) {
      inc.line_points[l].push_back(pi);
      if (inc.points[pi].multiplicity >= 3) inc.line_m_points[l].push_back(pi);
    }
  }
  return inc;
}

/// All points of M sharing a line of A with x (x itself excluded).
inline std::vector<int> adjacent_points(const IncidenceStructure& inc, int x) {
  if (!inc.is_m_point(x))
    throw std::domain_error("adjacency is defined on points of M only");
  std::set<int> out;
  for (int l : inc.points[x].incident)
    for (int y : inc.line_m_points[l])
      if (y != x) out.insert(y);
  return {out.begin(), out.end()};
}

struct ConditionCResult {
  bool holds = true;
  int witness_point = -1;           // violating x in M, if any
  std::vector<int> covering_lines;  // >= 3 lines needed to cover x's adjacency
  explicit operator bool() const { return holds; }
};

/// Condition (C): for each x in M, the lines of A through x that also carry
/// a point of M adjacent to x number at most two.
inline ConditionCResult check_condition_c(const IncidenceStructure& inc) {
  for (int x : inc.m_points) {
    std::set<int> covers;
    for (int y : adjacent_points(inc, x)) {
      auto l = inc.line_through(x, y);
      if (!l) throw invariant_error("adjacent points without a common line");
      covers.insert(*l);
    }
    if (covers.size() > 2)
      return {false, x, {covers.begin(), covers.end()}};
  }
  return {};
}

}  // namespace linarr

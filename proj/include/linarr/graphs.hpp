#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "linarr/incidence.hpp"

namespace linarr {

/// A sequence of distinct lines meeting consecutively in points of M.
struct PathSeq {
  std::vector<int> lines;   // H_1 .. H_n
  std::vector<int> joints;  // x_i = H_i ∩ H_{i+1}; closing joint last if cycle
  bool is_cycle = false;
};

enum class GraphKind {
  regular,         // lines with >= 2 M-points, connected through M-joints
  isolated_point,  // representative single line through an isolated M-point
  no_m_point,      // line carrying no point of M
};

/// A graph in the sense of the path machinery: a set of member lines plus
/// the M-points it determines. `joint_points` are the M-points realized as
/// intersections of two members; `zone_points` are all M-points lying on
/// members (they drive the zone).
struct LineGraph {
  std::vector<int> members;
  std::vector<int> joint_points;
  std::vector<int> zone_points;
  GraphKind kind = GraphKind::regular;
};

/// Z(G): every line of A passing through a zone point of G. A graph with
/// no M-point has zone {itself}, so zones can cover all of A.
struct Zone {
  int graph = -1;  // index into the maximal-graph list
  std::vector<int> members;
};

namespace detail {

/// Member adjacency: two rich lines are neighbours when their intersection
/// point lies in M. Under condition (C) a point of M carries at most two
/// rich lines, so this relation has no multi-edges.
inline std::optional<int> member_joint(const IncidenceStructure& inc, int a,
                                       int b) {
  for (int p : inc.line_m_points[a])
    if (std::ranges::binary_search(inc.line_m_points[b], p)) return p;
  return std::nullopt;
}

}  // namespace detail

/// Maximal graphs of the arrangement, in deterministic order (by smallest
/// member index). Computed as connected components of the bipartite
/// incidence between M-points and rich lines, plus the degenerate
/// singleton rules: one representative line per isolated M-point (the
/// smallest-index line through it), and a singleton per line without any
/// M-point.
inline std::vector<LineGraph> maximal_graphs(const IncidenceStructure& inc) {
  const int n = inc.arr.size();
  std::vector<bool> rich(n, false);
  for (int l : inc.rich_lines()) rich[l] = true;

  // Union-find over rich lines; M-points attach to the component of any
  // rich line through them.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p : inc.m_points) {
    int first = -1;
    for (int l : inc.points[p].incident) {
      if (!rich[l]) continue;
      if (first < 0)
        first = l;
      else
        parent[find(l)] = find(first);
    }
  }

  std::map<int, LineGraph> comps;
  for (int l = 0; l < n; ++l)
    if (rich[l]) comps[find(l)].members.push_back(l);
  for (int p : inc.m_points) {
    for (int l : inc.points[p].incident)
      if (rich[l]) {
        comps[find(l)].zone_points.push_back(p);
        break;
      }
  }

  std::vector<LineGraph> out;
  for (auto& [root, g] : comps) {
    std::ranges::sort(g.members);
    std::ranges::sort(g.zone_points);
    for (int p : g.zone_points) {
      int deg = 0;
      for (int l : inc.points[p].incident) deg += rich[l] ? 1 : 0;
      if (deg >= 2) g.joint_points.push_back(p);
    }
    g.kind = GraphKind::regular;
    out.push_back(std::move(g));
  }

  // Isolated M-points: no rich line through them; all single-line paths
  // through such a point are identified with the smallest-index one.
  for (int p : inc.m_points) {
    bool has_rich = false;
    for (int l : inc.points[p].incident) has_rich |= rich[l];
    if (!has_rich) {
      LineGraph g;
      g.members = {inc.points[p].incident.front()};
      g.zone_points = {p};
      g.kind = GraphKind::isolated_point;
      out.push_back(std::move(g));
    }
  }

  for (int l = 0; l < n; ++l) {
    if (inc.m_count_on_line(l) == 0) {
      LineGraph g;
      g.members = {l};
      g.kind = GraphKind::no_m_point;
      out.push_back(std::move(g));
    }
  }

  std::ranges::sort(out, {}, [](const LineGraph& g) { return g.members; });
  return out;
}

inline std::vector<Zone> zones(const IncidenceStructure& inc,
                               const std::vector<LineGraph>& graphs) {
  std::vector<Zone> out;
  for (int gi = 0; gi < static_cast<int>(graphs.size()); ++gi) {
    const auto& g = graphs[gi];
    std::set<int> zl;
    if (g.kind == GraphKind::no_m_point) {
      zl.insert(g.members.front());
    } else {
      for (int p : g.zone_points)
        zl.insert(inc.points[p].incident.begin(),
                  inc.points[p].incident.end());
    }
    out.push_back({gi, {zl.begin(), zl.end()}});
  }
  return out;
}

/// All simple cycles of the rich-line incidence graph: distinct lines,
/// distinct joints in M, length >= 3, deduplicated up to rotation and
/// reversal. Canonical form starts at the smallest member line.
inline std::vector<PathSeq> cycles(const IncidenceStructure& inc) {
  auto richv = inc.rich_lines();
  std::map<int, std::vector<std::pair<int, int>>> adj;  // line -> (line, joint)
  for (std::size_t i = 0; i < richv.size(); ++i)
    for (std::size_t j = i + 1; j < richv.size(); ++j) {
      auto p = detail::member_joint(inc, richv[i], richv[j]);
      if (p) {
        adj[richv[i]].push_back({richv[j], *p});
        adj[richv[j]].push_back({richv[i], *p});
      }
    }
  for (auto& [l, v] : adj) std::ranges::sort(v);

  std::vector<PathSeq> out;
  std::vector<int> path, joints;
  std::set<int> on_path, joints_used;

  auto dfs = [&](auto&& self, int start, int cur) -> void {
    for (auto [nxt, joint] : adj[cur]) {
      if (nxt == start && path.size() >= 3) {
        // closing edge; dedup reversal by requiring second < last
        if (!joints_used.contains(joint) && path[1] < path.back()) {
          PathSeq c;
          c.lines = path;
          c.joints = joints;
          c.joints.push_back(joint);
          c.is_cycle = true;
          out.push_back(std::move(c));
        }
        continue;
      }
      if (nxt <= start || on_path.contains(nxt) || joints_used.contains(joint))
        continue;
      path.push_back(nxt);
      joints.push_back(joint);
      on_path.insert(nxt);
      joints_used.insert(joint);
      self(self, start, nxt);
      path.pop_back();
      joints.pop_back();
      on_path.erase(nxt);
      joints_used.erase(joint);
    }
  };

  for (int s : richv) {
    path = {s};
    joints.clear();
    on_path = {s};
    joints_used.clear();
    dfs(dfs, s, s);
  }
  std::ranges::sort(out, {}, [](const PathSeq& c) { return c.lines; });
  return out;
}

struct ZonePartitionResult {
  bool holds = true;
  std::vector<int> uncovered;           // lines in no zone
  std::vector<int> doubly_covered;      // lines in two zones
  explicit operator bool() const { return holds; }
};

/// Zones of maximal graphs must partition A whenever condition (C) holds;
/// a counterexample signals an implementation bug, not a bad input.
inline ZonePartitionResult verify_zone_partition(
    const IncidenceStructure& inc) {
  if (!check_condition_c(inc))
    throw std::domain_error(
        "zone partition is only guaranteed under condition (C)");
  auto gs = maximal_graphs(inc);
  auto zs = zones(inc, gs);
  std::vector<int> count(inc.arr.size(), 0);
  for (const auto& z : zs)
    for (int l : z.members) ++count[l];
  ZonePartitionResult r;
  for (int l = 0; l < inc.arr.size(); ++l) {
    if (count[l] == 0) r.uncovered.push_back(l);
    if (count[l] > 1) r.doubly_covered.push_back(l);
  }
  r.holds = r.uncovered.empty() && r.doubly_covered.empty();
  return r;
}

}  // namespace linarr

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linarr/graphs.hpp"

namespace linarr {

/// Purely combinatorial view of an arrangement's multiple points: line
/// count plus, per multiple point, the incident lines. This is all the
/// multinet clauses consume, so fixtures without rational coordinates
/// (the Fermat-style configurations) can be given directly.
struct MultinetIncidence {
  int n_lines = 0;
  std::vector<std::vector<int>> m_point_lines;  // sorted line indices each

  /// The multiple point two lines share, or -1 when they meet in a
  /// double point (which never lies in a base locus).
  int common_point(int a, int b) const {
    for (int p = 0; p < static_cast<int>(m_point_lines.size()); ++p)
      if (std::ranges::binary_search(m_point_lines[p], a) &&
          std::ranges::binary_search(m_point_lines[p], b))
        return p;
    return -1;
  }
};

inline MultinetIncidence multinet_view(const IncidenceStructure& inc) {
  MultinetIncidence v;
  v.n_lines = inc.arr.size();
  for (int p : inc.m_points) v.m_point_lines.push_back(inc.points[p].incident);
  return v;
}

/// A (k, d)-multinet candidate: a partition of the lines into k classes
/// with per-line multiplicities and a base locus of multiple points.
struct Multinet {
  std::vector<std::vector<int>> classes;  // k >= 3 parts, sorted
  std::vector<Int> mult;                  // per line, >= 1
  std::vector<int> base_locus;            // point indices into the view
  Int d = 0;                              // common class weight

  int k() const { return static_cast<int>(classes.size()); }
};

struct MultinetCheck {
  bool ok = true;
  int violated_clause = 0;  // 1..4 per the definition, 0 when ok
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// Checks the four multinet clauses exactly:
///   (1) every class has total weight d,
///   (2) lines from different classes meet inside the base locus,
///   (3) for every base point the per-class weight through it is the same
///       for all classes,
///   (4) every class is connected through intersections outside the base
///       locus.
inline MultinetCheck validate_multinet(const MultinetIncidence& view,
                                       const Multinet& mn) {
  MultinetCheck res;
  auto fail = [&](int clause, std::string w) {
    res.ok = false;
    res.violated_clause = clause;
    res.witness = std::move(w);
    return res;
  };

  if (mn.k() < 3) return fail(0, "fewer than 3 classes");
  std::vector<int> cls_of(view.n_lines, -1);
  for (int i = 0; i < mn.k(); ++i)
    for (int l : mn.classes[i]) {
      if (l < 0 || l >= view.n_lines || cls_of[l] != -1)
        return fail(0, "not a partition of the lines");
      cls_of[l] = i;
    }
  for (int l = 0; l < view.n_lines; ++l) {
    if (cls_of[l] < 0) return fail(0, "line " + std::to_string(l) + " unassigned");
    if (mn.mult[l] < 1) return fail(0, "nonpositive multiplicity");
  }
  std::set<int> base(mn.base_locus.begin(), mn.base_locus.end());

  // (1) equal class weights
  Int d = 0;
  for (int i = 0; i < mn.k(); ++i) {
    Int w = 0;
    for (int l : mn.classes[i]) w += mn.mult[l];
    if (i == 0)
      d = w;
    else if (w != d)
      return fail(1, "class " + std::to_string(i) + " has weight " + w.str() +
                         " != " + d.str());
  }
  if (mn.d != 0 && mn.d != d)
    return fail(1, "declared weight does not match classes");

  // (2) cross-class intersections lie in the base locus
  for (int a = 0; a < view.n_lines; ++a)
    for (int b = a + 1; b < view.n_lines; ++b) {
      if (cls_of[a] == cls_of[b]) continue;
      int p = view.common_point(a, b);
      if (p < 0 || !base.contains(p))
        return fail(2, "lines " + std::to_string(a) + "," + std::to_string(b) +
                           " meet outside the base locus");
    }

  // (3) class-independent local weight at every base point
  for (int p : base) {
    std::optional<Int> nx;
    for (int i = 0; i < mn.k(); ++i) {
      Int w = 0;
      for (int l : mn.classes[i])
        if (std::ranges::binary_search(view.m_point_lines[p], l)) w += mn.mult[l];
      if (!nx)
        nx = w;
      else if (*nx != w)
        return fail(3, "point " + std::to_string(p) +
                           " has class-dependent weight");
    }
  }

  // (4) connectivity through non-base intersections
  for (int i = 0; i < mn.k(); ++i) {
    const auto& cls = mn.classes[i];
    if (cls.size() <= 1) continue;
    std::set<int> seen{cls[0]};
    std::vector<int> stack{cls[0]};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int l : cls) {
        if (seen.contains(l)) continue;
        int p = view.common_point(cur, l);
        if (p >= 0 && base.contains(p)) continue;
        seen.insert(l);
        stack.push_back(l);
      }
    }
    if (seen.size() != cls.size())
      return fail(4, "class " + std::to_string(i) +
                         " splits along the base locus");
  }
  return res;
}

inline MultinetCheck validate_multinet(const IncidenceStructure& inc,
                                       const Multinet& mn) {
  return validate_multinet(multinet_view(inc), mn);
}

namespace detail {

/// Enumerates set partitions of 0..m-1 into exactly k unlabeled parts via
/// restricted growth strings; parts come out ordered by smallest member,
/// so relabelings are never produced twice.
inline void for_each_partition(int m, int k,
                               const std::function<void(
                                   const std::vector<int>&)>& fn) {
  std::vector<int> rgs(m, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == m) {
      if (used == k) fn(rgs);
      return;
    }
    if (used + (m - i) < k) return;  // cannot reach k parts
    for (int v = 0; v <= used && v < k; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// Exhaustive multinet search up to class relabeling: all partitions into
/// 3..k_max classes and multiplicity vectors in [1, m_max]^n, with the
/// base locus taken to be exactly the cross-class intersection set. Two
/// lines meeting in a double point can never sit in different classes, so
/// the partition search runs over components of the double-point graph.
inline std::vector<Multinet> search_multinets(const MultinetIncidence& view,
                                              int k_max, int m_max,
                                              int guard = 12) {
  if (view.n_lines > guard)
    throw size_guard_error("arrangement exceeds the search guard (" +
                           std::to_string(view.n_lines) + " > " +
                           std::to_string(guard) + " lines)");
  std::vector<Multinet> out;

  // components of the double-point relation
  std::vector<int> comp(view.n_lines, -1);
  int n_comp = 0;
  for (int start = 0; start < view.n_lines; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = n_comp;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int l = 0; l < view.n_lines; ++l)
        if (comp[l] < 0 && view.common_point(cur, l) < 0) {
          comp[l] = n_comp;
          stack.push_back(l);
        }
    }
    ++n_comp;
  }
  if (n_comp < 3) return out;

  for (int kk = 3; kk <= std::min(k_max, n_comp); ++kk) {
    detail::for_each_partition(n_comp, kk, [&](const std::vector<int>& rgs) {
      std::vector<std::vector<int>> classes(kk);
      for (int l = 0; l < view.n_lines; ++l)
        classes[rgs[comp[l]]].push_back(l);

      // base locus: all cross-class common points (always multiple
      // points, since double-point pairs share a component)
      std::set<int> base;
      for (int a = 0; a < view.n_lines; ++a)
        for (int b = a + 1; b < view.n_lines; ++b)
          if (rgs[comp[a]] != rgs[comp[b]])
            base.insert(view.common_point(a, b));

      // Feasibility is checked with the search's own arithmetic; the
      // validator stays an independent second opinion for the tests.
      // Clause 2 holds by construction: cross-component pairs meet in a
      // multiple point and the base locus is exactly that set.
      std::vector<Int> mult(view.n_lines, 1);
      auto feasible = [&]() {
        Int d0 = 0;
        for (int l : classes[0]) d0 += mult[l];
        for (int i = 1; i < kk; ++i) {
          Int w = 0;
          for (int l : classes[i]) w += mult[l];
          if (w != d0) return false;  // unequal class weights
        }
        for (int p : base) {
          std::vector<Int> per(kk, 0);
          for (int l : view.m_point_lines[p]) per[rgs[comp[l]]] += mult[l];
          for (int i = 1; i < kk; ++i)
            if (per[i] != per[0]) return false;  // class-dependent weight
        }
        // per-class connectivity through non-base intersections
        for (int i = 0; i < kk; ++i) {
          const auto& cls = classes[i];
          if (cls.size() <= 1) continue;
          std::vector<int> root(cls.size());
          std::iota(root.begin(), root.end(), 0);
          auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
          };
          for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
              int p = view.common_point(cls[a], cls[b]);
              if (p >= 0 && base.contains(p)) continue;
              root[find(static_cast<int>(a))] = find(static_cast<int>(b));
            }
          for (std::size_t a = 1; a < cls.size(); ++a)
            if (find(static_cast<int>(a)) != find(0)) return false;
        }
        return true;
      };
      auto emit = [&]() {
        if (!feasible()) return;
        Multinet mn{classes, mult, {base.begin(), base.end()}, 0};
        Int d = 0;
        for (int l : classes[0]) d += mult[l];
        mn.d = d;
        out.push_back(std::move(mn));
      };
      if (m_max <= 1) {
        emit();
        return;
      }
      auto rec = [&](auto&& self, int l) -> void {
        if (l == view.n_lines) {
          emit();
          return;
        }
        for (int v = 1; v <= m_max; ++v) {
          mult[l] = v;
          self(self, l + 1);
        }
        mult[l] = 1;
      };
      rec(rec, 0);
    });
  }
  return out;
}

inline std::vector<Multinet> search_multinets(const IncidenceStructure& inc,
                                              int k_max, int m_max,
                                              int guard = 12) {
  return search_multinets(multinet_view(inc), k_max, m_max, guard);
}

/// Reporting rule: a validated (k, d)-multinet witnesses a global
/// resonance component of dimension k-1; under condition (C) with the
/// lines not all concurrent, no multinet and hence no global component
/// exists.
inline std::vector<std::string> report_global_components(
    const IncidenceStructure& inc, const std::vector<Multinet>& found) {
  std::vector<std::string> lines;
  for (const auto& mn : found)
    lines.push_back("(" + std::to_string(mn.k()) + "," + mn.d.str() +
                    ")-multinet => global resonance component of dimension " +
                    std::to_string(mn.k() - 1));
  if (!lines.empty()) return lines;
  if (inc.arr.concurrent()) {
    lines.push_back("all lines concurrent (pencil); no multinet search verdict");
  } else if (check_condition_c(inc)) {
    lines.push_back(
        "no global resonance component: condition (C) holds and the lines "
        "are not concurrent");
  } else {
    lines.push_back("no multinet found within the search bounds");
  }
  return lines;
}

}  // namespace linarr

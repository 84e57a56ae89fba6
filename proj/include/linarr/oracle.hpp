#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linarr/admissibility.hpp"

namespace linarr {

struct ShiftSearchConfig {
  int bound = 3;                       // |k_H| <= bound per line
  long long node_budget = 50'000'000;  // assignment attempts
};

enum class OracleStatus { found, exhausted_within_bound, budget_exceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::exhausted_within_bound;
  std::optional<ResidueVector> vector;
  long long nodes = 0;
};

/// Depth-first search over integer shifts k of the residue classes:
/// b_H = class_H + k_H with |k_H| <= K, sum b = 0, b_H not in Z_{>0} and
/// every point sum off Z_{>0}. Everything reduces to integer arithmetic:
/// a class-0 line forces k_H <= 0, a point whose class sum is an integer
/// forces sigma(p) + sum of its k's <= 0, and other points are free.
/// Pruning uses running-sum windows and per-point reachable minima; nodes
/// are counted per assignment attempt, so identical inputs give identical
/// node counts.
inline OracleResult oracle_search(const IncidenceStructure& inc,
                                  const LocalSystem& ls,
                                  const ShiftSearchConfig& cfg = {}) {
  if (cfg.bound < 0 || cfg.node_budget <= 0)
    throw validation_error("shift search needs bound >= 0 and budget > 0");
  const int n = inc.arr.size();
  const int K = cfg.bound;
  Rat class_sum = 0;
  for (const auto& c : ls.classes) class_sum += c;
  if (!is_integer(class_sum))
    throw validation_error("class sum must be an integer");
  const long long target = -static_cast<long long>(rat_num(class_sum));

  std::vector<long long> lo(n, -K), hi(n);
  for (int l = 0; l < n; ++l) hi[l] = (ls.classes[l] == 0) ? 0 : K;

  // integral points: class sum sigma in Z forces sigma + sum k <= 0
  struct IPoint {
    std::vector<int> lines;
    long long sigma;
  };
  std::vector<IPoint> ipts;
  for (int p : inc.m_points) {
    Rat sig = 0;
    for (int l : inc.points[p].incident) sig += ls.classes[l];
    if (is_integer(sig))
      ipts.push_back({inc.points[p].incident,
                      static_cast<long long>(rat_num(sig))});
  }
  std::vector<std::vector<int>> by_line(n);
  std::vector<long long> psum, pmin;
  for (int pi = 0; pi < static_cast<int>(ipts.size()); ++pi) {
    psum.push_back(ipts[pi].sigma);
    long long m = 0;
    for (int l : ipts[pi].lines) {
      by_line[l].push_back(pi);
      m += lo[l];
    }
    pmin.push_back(m);
  }

  std::vector<long long> suf_lo(n + 1, 0), suf_hi(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suf_lo[i] = suf_lo[i + 1] + lo[i];
    suf_hi[i] = suf_hi[i + 1] + hi[i];
  }

  std::vector<long long> k(n, 0);
  long long nodes = 0;
  bool budget_hit = false;
  std::optional<std::vector<long long>> found;

  auto rec = [&](auto&& self, int i, long long acc) -> bool {
    if (i == n) {
      if (acc == target) {
        found = k;
        return true;
      }
      return false;
    }
    for (long long v = lo[i]; v <= hi[i]; ++v) {
      if (++nodes > cfg.node_budget) {
        budget_hit = true;
        return true;
      }
      if (acc + v + suf_lo[i + 1] > target || acc + v + suf_hi[i + 1] < target)
        continue;
      bool ok = true;
      for (int pi : by_line[i])
        if (psum[pi] + v + (pmin[pi] - lo[i]) > 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      k[i] = v;
      for (int pi : by_line[i]) {
        psum[pi] += v;
        pmin[pi] -= lo[i];
      }
      bool done = self(self, i + 1, acc + v);
      for (int pi : by_line[i]) {
        psum[pi] -= v;
        pmin[pi] += lo[i];
      }
      if (done) return true;
      k[i] = 0;
    }
    return false;
  };
  rec(rec, 0, 0);

  OracleResult res;
  res.nodes = nodes;
  if (budget_hit) {
    res.status = OracleStatus::budget_exceeded;
  } else if (found) {
    res.status = OracleStatus::found;
    ResidueVector rv;
    for (int l = 0; l < n; ++l)
      rv.residues.push_back(ls.classes[l] + Rat((*found)[l]));
    res.vector = std::move(rv);
  }
  return res;
}

struct Obstruction {
  bool obstructed = false;
  std::vector<std::string> transcript;
  explicit operator bool() const { return obstructed; }
};

namespace detail {

inline std::string b_sym(const IncidenceStructure& inc, int line) {
  const std::string& lab = inc.arr.labels[line];
  if (lab.rfind("L_", 0) == 0) return "b_" + lab.substr(2);
  return "b_{" + lab + "}";
}

}  // namespace detail

/// The counting obstruction: writes any exp-compatible residue vector as
/// b_H = class_H + k_H and derives a contradiction from
///   * class-0 lines forcing k_H <= 0,
///   * every point sum being a forced integer (hence <= 0),
///   * a weighted count  sum_p b(p) = sum_H (d_H - c) b_H >= 0  when the
///     fractional-class lines all carry the same number c of M-points and
///     every class-0 line carries at most c,
///   * an odd cycle whose joints then force its fractional residues to
///     vanish, which is impossible.
/// Inconclusive whenever any prerequisite fails; only a completed
/// derivation certifies non-admissibility.
inline Obstruction obstruction_check(const IncidenceStructure& inc,
                                     const LocalSystem& ls) {
  Obstruction out;
  if (!check_condition_c(inc)) return out;

  const int n = inc.arr.size();
  auto& t = out.transcript;

  std::vector<int> frac, zero;
  for (int l = 0; l < n; ++l)
    (ls.classes[l] == 0 ? zero : frac).push_back(l);
  if (frac.empty()) return out;

  // all fractional lines must carry the same number of M-points
  int c = inc.m_count_on_line(frac[0]);
  for (int l : frac)
    if (inc.m_count_on_line(l) != c) return out;
  for (int l : zero)
    if (inc.m_count_on_line(l) > c) return out;

  // every point sum must be a forced integer
  for (int p : inc.m_points) {
    Rat sig = 0;
    for (int l : inc.points[p].incident) sig += ls.classes[l];
    if (!is_integer(sig)) return out;
  }

  t.push_back(
      "any residue vector for the system has b_H = class_H + k_H with "
      "k_H in Z");
  t.push_back(
      "lines with class 0 carry integer residues, so b_H not in Z_{>0} "
      "forces k_H <= 0 there");
  t.push_back(
      "every point of M has an integer class sum, so each b(p) is an "
      "integer and b(p) not in Z_{>0} forces b(p) <= 0");
  t.push_back(
      "counting M-points per line: every fractional-class line carries " +
      std::to_string(c) + " points of M and no class-0 line carries more");
  t.push_back(
      "hence sum_p b(p) = sum_H (d_H - " + std::to_string(c) +
      ") b_H over class-0 lines, a sum of nonnegative terms, so "
      "sum_p b(p) >= 0");
  t.push_back(
      "b(p) <= 0 for all p with a nonnegative total forces b(p) = 0 for "
      "all p in M");

  // class-0 lines with d_H < c are forced to zero residue
  std::set<int> forced_zero;
  for (int l : zero)
    if (inc.m_count_on_line(l) < c) forced_zero.insert(l);
  {
    std::string names;
    for (int l : forced_zero) names += (names.empty() ? "" : ", ") +
                                       detail::b_sym(inc, l);
    if (!names.empty())
      t.push_back("and " + names + " = 0 (class-0 lines carrying fewer than " +
                  std::to_string(c) + " points)");
  }

  bool contradiction = false;
  for (const auto& cy : cycles(inc)) {
    if (cy.lines.size() % 2 == 0) continue;  // even cycles alternate freely
    // every non-cycle line through every joint must be forced zero, and
    // the cycle lines must be fractional
    bool clean = true;
    for (int j : cy.joints)
      for (int l : inc.points[j].incident)
        if (std::ranges::find(cy.lines, l) == cy.lines.end() &&
            !forced_zero.contains(l))
          clean = false;
    if (!clean) continue;
    bool all_frac = std::ranges::all_of(
        cy.lines, [&](int l) { return !is_integer(ls.classes[l]); });
    if (!all_frac) continue;

    std::string block = "cycle {";
    for (std::size_t i = 0; i < cy.lines.size(); ++i)
      block += (i ? ", " : "") + inc.arr.labels[cy.lines[i]];
    block += "}:";
    t.push_back(block);
    auto order = detail::cycle_order(cy);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int u = order[i], v = order[(i + 1) % order.size()];
      t.push_back("  b(" + to_string(inc.points[*detail::member_joint(
                               inc, u, v)].point) +
                  ") = 0 gives " + detail::b_sym(inc, u) + " + " +
                  detail::b_sym(inc, v) + " = 0");
    }
    t.push_back(
        "  an odd cycle of such relations forces every residue on it to "
        "vanish");
    std::string eq;
    for (std::size_t i = 0; i < order.size(); ++i)
      eq += detail::b_sym(inc, order[i]) + " = ";
    eq += "0 which is impossible (each is congruent to " +
          rat_to_string(ls.classes[order[0]]) + " mod 1)";
    t.push_back("  so " + eq);
    contradiction = true;
  }

  if (!contradiction) {
    out.transcript.clear();
    return out;
  }
  out.obstructed = true;
  return out;
}

}  // namespace linarr

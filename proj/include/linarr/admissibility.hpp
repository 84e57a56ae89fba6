#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linarr/graphs.hpp"
#include "linarr/localsystem.hpp"

namespace linarr {

/// Base line choice: the smallest-index line of the unique cycle when
/// exactly one cycle exists; otherwise the smallest-index line carrying at
/// least two points of M; otherwise line 0.
inline int choose_h0(const IncidenceStructure& inc,
                     const std::vector<LineGraph>& /*graphs*/,
                     const std::vector<PathSeq>& cyc) {
  if (cyc.size() == 1) return *std::ranges::min_element(cyc[0].lines);
  auto rich = inc.rich_lines();
  if (!rich.empty()) return rich.front();
  return 0;
}

namespace detail {

/// Lines of the cycle's joint set P_C: for each A_1 line, its single
/// M-point; returns A_1 lines whose point lies on the cycle's joints.
inline std::vector<int> a1_lines_on_cycle_joints(const IncidenceStructure& inc,
                                                 const PathSeq& cyc) {
  std::set<int> joints(cyc.joints.begin(), cyc.joints.end());
  std::vector<int> out;
  for (int l : inc.a1_lines())
    if (joints.contains(inc.line_m_points[l].front())) out.push_back(l);
  return out;
}

/// Deterministic traversal order of a cycle's lines: starts at the
/// smallest member, walks toward its smaller neighbour.
inline std::vector<int> cycle_order(const PathSeq& c) {
  int start = *std::ranges::min_element(c.lines);
  std::map<int, std::vector<int>> nbrs;
  auto link = [&](int u, int v) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  };
  for (std::size_t i = 0; i + 1 < c.lines.size(); ++i)
    link(c.lines[i], c.lines[i + 1]);
  link(c.lines.back(), c.lines.front());
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (order.size() < c.lines.size()) {
    auto& nb = nbrs[cur];
    std::ranges::sort(nb);
    int next = (nb[0] != prev) ? nb[0] : nb[1];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

/// Number of points of M on the line that are adjacent to a point of M
/// off the line (the even-cycle strategy admits at most two per cycle line).
inline int exposed_point_count(const IncidenceStructure& inc, int line) {
  int cnt = 0;
  for (int p : inc.line_m_points[line]) {
    for (int l2 : inc.points[p].incident)
      if (l2 != line && inc.m_count_on_line(l2) >= 2) {
        ++cnt;
        break;
      }
  }
  return cnt;
}

/// The residue-correction engine shared by all constructive strategies.
/// It walks cycle-free member graphs line by line and shapes every point
/// sum a(p) out of Z_{>0}, transferring only integer amounts so that the
/// residue classes mod 1 never change. The internal checks mirror the
/// claims the correction is supposed to maintain:
///   - the residue sum stays exactly zero after every transfer,
///   - a_{h0} stays <= 0,
///   - points settled by an earlier step never become violating again,
///   - after a graph is finished, its zone sum is >= 0 (when the zone does
///     not contain h0) and no member point off h0 is violating.
class CorrectionEngine {
 public:
  CorrectionEngine(const IncidenceStructure& inc, std::vector<Rat> residues,
                   int h0)
      : inc_(inc), a_(std::move(residues)), h0_(h0) {}

  const std::vector<Rat>& residues() const { return a_; }
  std::vector<TraceStep>& trace() { return trace_; }

  Rat point_sum(int p) const { return point_residue_sum(inc_, a_, p); }

  /// Runs the tree walk on one connected, cycle-free member set.
  /// `masked_edge` suppresses one member adjacency (used to walk a pure
  /// cycle as a chain starting next to an already-harmless joint).
  void correct_tree(const std::vector<int>& members,
                    std::optional<std::pair<int, int>> masked_edge =
                        std::nullopt) {
    settled_.clear();
    auto adj = member_adjacency(members, masked_edge);
    if (count_edges(adj) != members.size() - 1)
      throw strategy_error("member graph is not a tree");
    walk(adj, members);
    finish_graph_checks(members);
  }

  /// Isolated points of M: move any violating sum onto h0 from the
  /// smallest-index incident line other than h0. A violating isolated
  /// point on h0 itself would be unfixable by such a move; the final
  /// verification is the arbiter there.
  void correct_isolated() {
    std::vector<bool> rich(inc_.arr.size(), false);
    for (int l : inc_.rich_lines()) rich[l] = true;
    for (int p : inc_.m_points) {
      bool has_rich = false;
      for (int l : inc_.points[p].incident) has_rich |= rich[l];
      if (has_rich) continue;
      Rat s = point_sum(p);
      if (!is_positive_integer(s)) continue;
      int donor = -1;
      for (int l : inc_.points[p].incident)
        if (l != h0_) {
          donor = l;
          break;
        }
      if (donor < 0) continue;  // only h0 through p; final check decides
      bool on_h0 = std::ranges::binary_search(inc_.points[p].incident, h0_);
      if (on_h0) continue;      // transfer within p's pencil cannot change a(p)
      transfer(donor, h0_, s, StepKind::isolated_move, p);
    }
  }

  void transfer(int from, int to, const Rat& amount, StepKind kind,
                int at_point) {
    if (amount == 0) return;
    if (!is_integer(amount))
      throw invariant_error("non-integer transfer would change the system");
    if (at_point >= 0 && settled_.contains(at_point))
      throw invariant_error("a step revisited a settled point");
    a_[from] -= amount;
    a_[to] += amount;
    trace_.push_back({kind, from, to, amount, at_point});
    check_after_transfer(to);
  }

 private:
  using Adjacency = std::map<int, std::vector<std::pair<int, int>>>;

  Adjacency member_adjacency(
      const std::vector<int>& members,
      std::optional<std::pair<int, int>> masked_edge) const {
    Adjacency adj;
    for (int l : members) adj[l];
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        int u = members[i], v = members[j];
        if (masked_edge && ((masked_edge->first == u &&
                             masked_edge->second == v) ||
                            (masked_edge->first == v &&
                             masked_edge->second == u)))
          continue;
        if (auto p = member_joint(inc_, u, v)) {
          adj[u].push_back({v, *p});
          adj[v].push_back({u, *p});
        }
      }
    for (auto& [l, v] : adj) std::ranges::sort(v);
    return adj;
  }

  static std::size_t count_edges(const Adjacency& adj) {
    std::size_t e = 0;
    for (const auto& [l, v] : adj) e += v.size();
    return e / 2;
  }

  /// BFS over the member tree. Siblings are processed as one layer in
  /// line-index order. The sibling case (a) abandons the current queue
  /// entry and re-runs the walk on the untouched subtree.
  void walk(const Adjacency& adj, const std::vector<int>& members) {
    if (members.size() == 1) {
      process_line(adj, members.front(), -1);
      return;
    }
    int start = -1;
    for (int l : members)
      if (adj.at(l).size() == 1) {
        start = l;
        break;
      }
    if (start < 0) throw invariant_error("tree without a leaf");
    // members are sorted, so the first leaf is the smallest-index leaf

    std::deque<std::pair<int, int>> queue{{start, -1}};
    std::set<int> scheduled{start};
    while (!queue.empty()) {
      auto [line, parent] = queue.front();
      queue.pop_front();
      bool descend = process_line(adj, line, parent);
      corrected_.insert(line);
      if (!descend) continue;
      for (auto [nbr, joint] : adj.at(line))
        if (nbr != parent && !scheduled.contains(nbr)) {
          queue.push_back({nbr, line});
          scheduled.insert(nbr);
        }
    }
  }

  /// One correction step. Returns false when the sibling case (a) handled
  /// the whole subtree below `line` via a recursive walk.
  bool process_line(const Adjacency& adj, int line, int parent) {
    std::vector<std::pair<int, int>> children;  // (line, joint)
    for (auto [nbr, joint] : adj.at(line)) {
      if (nbr != parent && !corrected_.contains(nbr))
        children.push_back({nbr, joint});
    }

    std::set<int> child_joints;
    for (auto [c, j] : children) child_joints.insert(j);

    // max over the step range: all points of M on the line except the
    // joints with not-yet-corrected members.
    auto [amount, at_point] = max_violating_sum(line, child_joints);

    // J: children whose joint sum is a positive integer exceeding the move
    std::vector<std::pair<int, int>> J;
    for (auto [c, j] : children) {
      Rat s = point_sum(j);
      if (is_positive_integer(s) && s > amount) J.push_back({c, j});
    }

    if (J.size() >= 2) {
      // outside lines through the exceeding joints
      bool all_outside_zero = true;
      std::vector<std::pair<int, int>> fractional;  // (outside line, joint)
      for (auto [c, j] : J) {
        for (int l : inc_.points[j].incident) {
          if (adj.contains(l)) continue;  // member of the walked graph
          if (a_[l] == 0) continue;
          all_outside_zero = false;
          if (l != h0_ && !is_integer(a_[l])) fractional.push_back({l, j});
        }
      }
      if (all_outside_zero) {
        // Sibling case (a): every exceeding joint sums to exactly
        // member + member < 2, so it equals 1 and no transfer is needed
        // here; re-run the walk on the subtree from this line.
        trace_.push_back({StepKind::restart, line, -1, 0, -1});
        auto sub = subtree_members(adj, line, parent);
        auto saved_settled = settled_;
        correct_tree_subset(sub);
        settled_ = std::move(saved_settled);
        for (int l : sub) corrected_.insert(l);
        return false;
      }
      if (!fractional.empty()) {
        // Sibling case (b): dump the full maximum onto a fractional
        // outside line through one exceeding joint; that joint is left to
        // its own member's step.
        std::ranges::sort(fractional);
        auto [recipient, kept_joint] = fractional.front();
        auto [amt, at] = max_violating_sum(line, {});
        if (amt > 0) {
          transfer(line, recipient, amt, StepKind::lateral_move, at);
          settle_line_points(line, {kept_joint});
        }
        return true;
      }
      throw strategy_error(
          "sibling case: outside residues neither zero nor fractional");
    }

    // Case (c): move onto the base line. At most one exceeding joint
    // remains; its own member's step corrects it.
    if (amount > 0) {
      transfer(line, h0_, amount, StepKind::move_to_base, at_point);
    }
    std::set<int> keep;
    for (auto [c, j] : J) keep.insert(j);
    settle_line_points(line, keep);
    return true;
  }

  /// max{0, a(p) : p in range, a(p) in Z_{>0}} with the tie-break: prefer a
  /// maximizer that is not a joint of two walked members, then the
  /// lexicographically smallest point.
  std::pair<Rat, int> max_violating_sum(int line,
                                        const std::set<int>& excluded) {
    Rat best = 0;
    int best_point = -1;
    bool best_is_joint = false;
    for (int p : inc_.line_m_points[line]) {
      if (excluded.contains(p)) continue;
      Rat s = point_sum(p);
      if (!is_positive_integer(s)) continue;
      int member_deg = 0;
      for (int l : inc_.points[p].incident) member_deg += walked_member(l);
      bool is_joint = member_deg >= 2;
      if (s > best || (s == best && best_point >= 0 && best_is_joint &&
                       !is_joint)) {
        best = s;
        best_point = p;
        best_is_joint = is_joint;
      }
    }
    return {best, best_point};
  }

  bool walked_member(int line) const { return member_flags_.contains(line); }

  void settle_line_points(int line, const std::set<int>& except) {
    for (int p : inc_.line_m_points[line]) {
      if (except.contains(p)) continue;
      if (std::ranges::binary_search(inc_.points[p].incident, h0_))
        continue;  // h0 receives later transfers; the final check covers it
      settled_.insert(p);
    }
  }

  void check_after_transfer(int to) {
    Rat s = 0;
    for (const auto& r : a_) s += r;
    if (s != 0) throw invariant_error("residue sum drifted from zero");
    if (to == h0_ && a_[h0_] > 0)
      throw invariant_error("base line residue became positive");
    for (int p : settled_)
      if (is_positive_integer(point_sum(p)))
        throw invariant_error("a settled point became violating again");
  }

  std::vector<int> subtree_members(const Adjacency& adj, int root,
                                   int avoid) const {
    std::vector<int> out;
    std::set<int> seen{root};
    std::deque<int> q{root};
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      out.push_back(cur);
      for (auto [nbr, joint] : adj.at(cur))
        if (nbr != avoid && !corrected_.contains(nbr) && !seen.contains(nbr)) {
          seen.insert(nbr);
          q.push_back(nbr);
        }
    }
    std::ranges::sort(out);
    return out;
  }

  void correct_tree_subset(const std::vector<int>& members) {
    settled_.clear();
    auto adj = member_adjacency(members, std::nullopt);
    if (count_edges(adj) != members.size() - 1)
      throw invariant_error("subtree re-run is not a tree");
    walk(adj, members);
    finish_graph_checks(members);
  }

  void finish_graph_checks(const std::vector<int>& members) {
    std::set<int> graph_points;
    for (int l : members)
      graph_points.insert(inc_.line_m_points[l].begin(),
                          inc_.line_m_points[l].end());
    std::set<int> zone;
    bool zone_has_h0 = false;
    for (int p : graph_points) {
      for (int l : inc_.points[p].incident) {
        zone.insert(l);
        zone_has_h0 |= (l == h0_);
      }
      if (!std::ranges::binary_search(inc_.points[p].incident, h0_) &&
          is_positive_integer(point_sum(p)))
        throw strategy_error("graph finished with a violating point");
    }
    if (!zone_has_h0) {
      Rat b = 0;
      for (int l : zone) b += a_[l];
      if (b < 0) throw invariant_error("zone residue sum became negative");
    }
  }

 public:
  /// Flags used by the maximizer tie-break to identify member joints.
  void set_member_flags(const std::vector<int>& members) {
    member_flags_ = {members.begin(), members.end()};
  }

 private:
  const IncidenceStructure& inc_;
  std::vector<Rat> a_;
  int h0_;
  std::vector<TraceStep> trace_;
  std::set<int> settled_;
  std::set<int> corrected_;
  std::set<int> member_flags_;
};

inline void require_condition_c(const IncidenceStructure& inc) {
  if (!check_condition_c(inc))
    throw strategy_error("condition (C) fails; constructive strategies do not apply");
}

inline void require_normalized(const IncidenceStructure& inc,
                               const ResidueVector& rv, int h0) {
  if (static_cast<int>(rv.residues.size()) != inc.arr.size())
    throw validation_error("residue count does not match arrangement");
  if (rv.sum() != 0)
    throw validation_error("residues must sum to zero");
  for (int l = 0; l < inc.arr.size(); ++l)
    if (l != h0 && (rv.residues[l] < 0 || rv.residues[l] >= 1))
      throw strategy_error("residues are not normalized for this base line");
}

/// Connected components of a member set under the joint adjacency.
inline std::vector<std::vector<int>> member_components(
    const IncidenceStructure& inc, const std::vector<int>& members) {
  std::vector<std::vector<int>> out;
  std::set<int> left(members.begin(), members.end());
  while (!left.empty()) {
    std::vector<int> comp;
    std::deque<int> q{*left.begin()};
    left.erase(left.begin());
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      comp.push_back(cur);
      for (auto it = left.begin(); it != left.end();) {
        if (member_joint(inc, cur, *it)) {
          q.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::ranges::sort(comp);
    out.push_back(std::move(comp));
  }
  std::ranges::sort(out);
  return out;
}

inline AdmCertificate finish_certificate(const IncidenceStructure& inc,
                                         CorrectionEngine& eng, int h0) {
  AdmCertificate cert{ResidueVector{eng.residues()}, h0,
                      std::move(eng.trace())};
  LocalSystem derived = [&] {
    std::vector<Rat> cls;
    for (const auto& r : cert.rv.residues) cls.push_back(mod_one(r));
    return LocalSystem(std::move(cls));
  }();
  auto check = verify_certificate(inc, derived, cert);
  if (!check)
    throw strategy_error(
        "correction finished but the certificate does not verify");
  return cert;
}

}  // namespace detail

/// The at-most-one-cycle correction: walks every maximal graph (minus the
/// base line) as a tree and shapes all residues per the certificate
/// conditions. Requires condition (C); if a cycle exists h0 must lie on it
/// so that removing h0 leaves trees.
inline AdmCertificate correct_no_cycle(const IncidenceStructure& inc,
                                       const ResidueVector& rv, int h0) {
  detail::require_condition_c(inc);
  detail::require_normalized(inc, rv, h0);

  detail::CorrectionEngine eng(inc, rv.residues, h0);

  // Idempotence: an already-admissible vector is returned unchanged.
  {
    AdmCertificate probe{rv, h0, {}};
    LocalSystem derived = [&] {
      std::vector<Rat> cls;
      for (const auto& r : rv.residues) cls.push_back(mod_one(r));
      return LocalSystem(std::move(cls));
    }();
    if (verify_certificate(inc, derived, probe)) return probe;
  }

  std::vector<int> members;
  for (int l : inc.rich_lines())
    if (l != h0) members.push_back(l);
  for (const auto& comp : detail::member_components(inc, members)) {
    eng.set_member_flags(comp);
    eng.correct_tree(comp);
  }
  eng.correct_isolated();
  return detail::finish_certificate(inc, eng, h0);
}

/// All cycles share a line: run the same walk with the shared line as the
/// base. With no cycles this reduces to correct_no_cycle.
inline AdmCertificate correct_common_line(const IncidenceStructure& inc,
                                          const ResidueVector& rv) {
  detail::require_condition_c(inc);
  auto cyc = cycles(inc);
  if (cyc.empty()) {
    int h0 = choose_h0(inc, {}, cyc);
    return correct_no_cycle(inc, rv, h0);
  }
  std::set<int> common(cyc[0].lines.begin(), cyc[0].lines.end());
  for (const auto& c : cyc) {
    std::set<int> cur(c.lines.begin(), c.lines.end());
    std::set<int> next;
    std::ranges::set_intersection(common, cur,
                                  std::inserter(next, next.begin()));
    common = std::move(next);
  }
  if (common.empty())
    throw strategy_error("cycles have no line in common");
  int h0 = *common.begin();
  ResidueVector renorm = rv;
  // re-normalize with the common line as base when the caller normalized
  // against a different line
  {
    std::vector<Rat> cls;
    for (const auto& r : rv.residues) cls.push_back(mod_one(r));
    renorm = normalize(LocalSystem(std::move(cls)), h0);
  }
  return correct_no_cycle(inc, renorm, h0);
}

/// Cycle-opening correction: every cycle avoiding h0 must touch a
/// fractional A_1 line at one of its joints. That line absorbs the
/// maximum of one adjacent cycle line, which opens the cycle; the rest is
/// the tree walk.
inline AdmCertificate correct_open_cycles(const IncidenceStructure& inc,
                                          const ResidueVector& rv, int h0) {
  detail::require_condition_c(inc);
  detail::require_normalized(inc, rv, h0);
  {
    AdmCertificate probe{rv, h0, {}};
    LocalSystem derived = [&] {
      std::vector<Rat> cls;
      for (const auto& r : rv.residues) cls.push_back(mod_one(r));
      return LocalSystem(std::move(cls));
    }();
    if (verify_certificate(inc, derived, probe)) return probe;
  }

  detail::CorrectionEngine eng(inc, rv.residues, h0);
  auto cyc = cycles(inc);
  std::set<int> removed;

  for (const auto& c : cyc) {
    if (std::ranges::find(c.lines, h0) != c.lines.end()) continue;
    bool broken = std::ranges::any_of(
        c.lines, [&](int l) { return removed.contains(l); });
    if (broken) continue;
    int opener = -1;
    for (int l : detail::a1_lines_on_cycle_joints(inc, c)) {
      const Rat& r = eng.residues()[l];
      if (r != 0 && !is_integer(r)) {
        opener = l;
        break;
      }
    }
    if (opener < 0)
      throw strategy_error(
          "cycle through point " + to_string(inc.points[c.joints[0]].point) +
          " has no fractional A_1 line at its joints");
    int pc = inc.line_m_points[opener].front();
    // the two cycle lines through the joint
    std::vector<int> through;
    for (int l : inc.points[pc].incident)
      if (std::ranges::find(c.lines, l) != c.lines.end()) through.push_back(l);
    if (through.size() != 2)
      throw invariant_error("cycle joint without two cycle lines");
    int h1 = std::min(through[0], through[1]);
    Rat amt = 0;
    int at = -1;
    for (int p : inc.line_m_points[h1]) {
      Rat s = eng.point_sum(p);
      if (is_positive_integer(s) && s > amt) {
        amt = s;
        at = p;
      }
    }
    eng.transfer(h1, opener, amt, StepKind::open_cycle, at);
    removed.insert(h1);
  }

  std::vector<int> members;
  for (int l : inc.rich_lines())
    if (l != h0 && !removed.contains(l)) members.push_back(l);
  for (const auto& comp : detail::member_components(inc, members)) {
    eng.set_member_flags(comp);
    eng.correct_tree(comp);
  }
  eng.correct_isolated();
  return detail::finish_certificate(inc, eng, h0);
}

/// Even-cycle correction: every maximal graph with a cycle avoiding h0
/// must itself be an even pure cycle whose lines each expose at most two
/// points of M to the rest of the arrangement. Per cycle, the first
/// applicable of
///   (i)  a joint already has a harmless sum: walk the cycle as a chain,
///   (ii) a fractional A_1 line sits on some joint: open there, walk,
///   (iii) all joints sum to exactly 1: alternate transfers onto h0.
inline AdmCertificate correct_even_cycles(const IncidenceStructure& inc,
                                          const ResidueVector& rv, int h0) {
  detail::require_condition_c(inc);
  detail::require_normalized(inc, rv, h0);
  {
    AdmCertificate probe{rv, h0, {}};
    LocalSystem derived = [&] {
      std::vector<Rat> cls;
      for (const auto& r : rv.residues) cls.push_back(mod_one(r));
      return LocalSystem(std::move(cls));
    }();
    if (verify_certificate(inc, derived, probe)) return probe;
  }

  detail::CorrectionEngine eng(inc, rv.residues, h0);
  auto cyc = cycles(inc);
  auto graphs = maximal_graphs(inc);

  for (const auto& g : graphs) {
    if (g.kind != GraphKind::regular) continue;
    bool has_h0 = std::ranges::binary_search(g.members, h0);
    std::vector<const PathSeq*> own_cycles;
    for (const auto& c : cyc)
      if (std::ranges::all_of(c.lines, [&](int l) {
            return std::ranges::binary_search(g.members, l);
          }))
        own_cycles.push_back(&c);

    if (has_h0 || own_cycles.empty()) {
      std::vector<int> members;
      for (int l : g.members)
        if (l != h0) members.push_back(l);
      for (const auto& comp : detail::member_components(inc, members)) {
        eng.set_member_flags(comp);
        eng.correct_tree(comp);
      }
      continue;
    }

    // graph avoiding h0 with a cycle: must be the cycle itself, even, with
    // at most two exposed points per line
    if (own_cycles.size() != 1 ||
        own_cycles[0]->lines.size() != g.members.size())
      throw strategy_error("cyclic graph off the base line is not a pure cycle");
    const PathSeq& c = *own_cycles[0];
    if (c.lines.size() % 2 != 0)
      throw strategy_error("odd cycle off the base line");
    for (int l : c.lines)
      if (detail::exposed_point_count(inc, l) > 2)
        throw strategy_error("cycle line exposes more than two points of M");

    // (i) a joint with a harmless sum
    int good_joint = -1;
    for (int j : c.joints)
      if (!is_positive_integer(eng.point_sum(j))) {
        good_joint = j;
        break;
      }
    if (good_joint >= 0) {
      std::vector<int> through;
      for (int l : inc.points[good_joint].incident)
        if (std::ranges::find(c.lines, l) != c.lines.end())
          through.push_back(l);
      eng.set_member_flags(g.members);
      eng.correct_tree(g.members, std::make_pair(through[0], through[1]));
      continue;
    }

    // (ii) fractional A_1 line at a joint
    int opener = -1;
    for (int l : detail::a1_lines_on_cycle_joints(inc, c)) {
      const Rat& r = eng.residues()[l];
      if (r != 0 && !is_integer(r)) {
        opener = l;
        break;
      }
    }
    if (opener >= 0) {
      int pc = inc.line_m_points[opener].front();
      std::vector<int> through;
      for (int l : inc.points[pc].incident)
        if (std::ranges::find(c.lines, l) != c.lines.end())
          through.push_back(l);
      int h1 = std::min(through[0], through[1]);
      Rat amt = 0;
      int at = -1;
      for (int p : inc.line_m_points[h1]) {
        Rat s = eng.point_sum(p);
        if (is_positive_integer(s) && s > amt) {
          amt = s;
          at = p;
        }
      }
      eng.transfer(h1, opener, amt, StepKind::open_cycle, at);
      std::vector<int> members;
      for (int l : g.members)
        if (l != h1) members.push_back(l);
      for (const auto& comp : detail::member_components(inc, members)) {
        eng.set_member_flags(comp);
        eng.correct_tree(comp);
      }
      continue;
    }

    // (iii) every joint sums to 1: alternate transfers
    std::vector<int> order = detail::cycle_order(c);
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
      int odd_line = order[i];
      int even_line = order[i + 1];
      auto j = detail::member_joint(inc, odd_line, even_line);
      if (!j) throw invariant_error("consecutive cycle lines without joint");
      Rat s = eng.point_sum(*j);
      if (s != 1)
        throw strategy_error("even-cycle joint sum is not 1");
      eng.transfer(even_line, h0, s, StepKind::even_cycle_move, *j);
    }
    for (int j : c.joints)
      if (is_positive_integer(eng.point_sum(j)))
        throw invariant_error("alternating transfers left a violating joint");
  }

  eng.correct_isolated();
  return detail::finish_certificate(inc, eng, h0);
}

/// The constructive strategies, in the order they are tried.
enum class Strategy {
  no_cycle,     // at most one cycle
  common_line,  // all cycles share a line
  open_cycles,  // per-system: fractional A_1 line on every stray cycle
  even_cycles,  // stray cycles are even pure cycles with <= 2 exposed points
  none,
};

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::no_cycle: return "at-most-one-cycle";
    case Strategy::common_line: return "common-line";
    case Strategy::open_cycles: return "cycle-opening";
    case Strategy::even_cycles: return "even-cycles";
    case Strategy::none: return "none";
  }
  return "?";
}

struct StrategyReport {
  ConditionCResult condition_c;
  int n_cycles = 0;
  Strategy applicable = Strategy::none;
  int h0 = -1;                 // base line the strategy would use
  int common_line = -1;        // shared cycle line, when that strategy fits
  int dichotomy_cycle = -1;    // index into cycles(): the system has the
                               // exceptional shape (monodromy -1 on the
                               // cycle, 1 on its neighbours in M)
};

namespace detail {

inline std::vector<int> cycle_m_neighbours(const IncidenceStructure& inc,
                                           const PathSeq& c) {
  std::set<int> members(c.lines.begin(), c.lines.end());
  std::set<int> out;
  for (int l : c.lines)
    for (int p : inc.line_m_points[l])
      for (int l2 : inc.points[p].incident)
        if (!members.contains(l2)) out.insert(l2);
  return {out.begin(), out.end()};
}

inline bool cycle_avoids(const PathSeq& c, int h0) {
  return std::ranges::find(c.lines, h0) == c.lines.end();
}

}  // namespace detail

/// Reports condition (C), the cycle census, and the first applicable
/// constructive strategy. The cycle-opening hypothesis depends on the
/// particular system, so it can only match when a system is supplied.
/// When the supplied system has the exceptional dichotomy shape on some
/// cycle with <= 2 exposed points per line, that cycle is reported too.
inline StrategyReport classify(const IncidenceStructure& inc,
                               const LocalSystem* ls = nullptr) {
  StrategyReport rep;
  rep.condition_c = check_condition_c(inc);
  auto cyc = cycles(inc);
  auto graphs = maximal_graphs(inc);
  rep.n_cycles = static_cast<int>(cyc.size());
  rep.h0 = choose_h0(inc, graphs, cyc);
  if (!rep.condition_c) return rep;

  // dichotomy shape: reported independently of the chosen strategy
  if (ls) {
    for (int ci = 0; ci < static_cast<int>(cyc.size()); ++ci) {
      const auto& c = cyc[ci];
      bool structural = std::ranges::all_of(c.lines, [&](int l) {
        return detail::exposed_point_count(inc, l) <= 2;
      });
      if (!structural) continue;
      bool half = std::ranges::all_of(
          c.lines, [&](int l) { return ls->classes[l] == Rat(1, 2); });
      bool nbrs_one = std::ranges::all_of(
          detail::cycle_m_neighbours(inc, c),
          [&](int l) { return ls->classes[l] == 0; });
      if (half && nbrs_one) {
        rep.dichotomy_cycle = ci;
        break;
      }
    }
  }

  if (rep.n_cycles <= 1) {
    rep.applicable = Strategy::no_cycle;
    return rep;
  }

  std::set<int> common(cyc[0].lines.begin(), cyc[0].lines.end());
  for (const auto& c : cyc) {
    std::set<int> cur(c.lines.begin(), c.lines.end());
    std::set<int> next;
    std::ranges::set_intersection(common, cur,
                                  std::inserter(next, next.begin()));
    common = std::move(next);
  }
  if (!common.empty()) {
    rep.applicable = Strategy::common_line;
    rep.common_line = *common.begin();
    rep.h0 = rep.common_line;
    return rep;
  }

  if (ls) {
    ResidueVector rv = normalize(*ls, rep.h0);
    bool all_open = true;
    for (const auto& c : cyc) {
      if (!detail::cycle_avoids(c, rep.h0)) continue;
      bool has = std::ranges::any_of(
          detail::a1_lines_on_cycle_joints(inc, c), [&](int l) {
            return rv.residues[l] != 0 && !is_integer(rv.residues[l]);
          });
      if (!has) {
        all_open = false;
        break;
      }
    }
    if (all_open) {
      rep.applicable = Strategy::open_cycles;
      return rep;
    }
  }

  bool even_ok = true;
  for (const auto& c : cyc) {
    if (!detail::cycle_avoids(c, rep.h0)) continue;
    if (c.lines.size() % 2 != 0) even_ok = false;
    for (int l : c.lines)
      if (detail::exposed_point_count(inc, l) > 2) even_ok = false;
    // the maximal graph holding the cycle must be the cycle itself
    for (const auto& g : graphs) {
      if (g.kind != GraphKind::regular) continue;
      if (std::ranges::binary_search(g.members, c.lines.front())) {
        if (g.members.size() != c.lines.size()) even_ok = false;
        break;
      }
    }
    if (!even_ok) break;
  }
  if (even_ok) {
    rep.applicable = Strategy::even_cycles;
    return rep;
  }

  rep.applicable = Strategy::none;
  return rep;
}

}  // namespace linarr

#pragma once

#include <string>
#include <vector>

#include "linarr/incidence.hpp"
#include "linarr/rational.hpp"

namespace linarr {

/// A rank one local system given by residue classes mod 1, one per line.
/// classes[i] is the class of line i in [0, 1); the monodromy of the line
/// is exp(2*pi*i*class). The product of all monodromies is 1, i.e. the
/// class sum is an integer.
struct LocalSystem {
  std::vector<Rat> classes;

  explicit LocalSystem(std::vector<Rat> cls) : classes(std::move(cls)) {
    Rat sum = 0;
    for (auto& c : classes) {
      c = mod_one(c);
      sum += c;
    }
    if (!is_integer(sum))
      throw validation_error("local system classes must sum to an integer");
  }

  bool trivial() const {
    for (const auto& c : classes)
      if (c != 0) return false;
    return true;
  }
};

/// Exact residues a_H, one per line, summing to zero. Together with the
/// constraint residue - class in Z per line this represents a cohomology
/// class alpha with exp(alpha) equal to a given local system.
struct ResidueVector {
  std::vector<Rat> residues;

  Rat sum() const {
    Rat s = 0;
    for (const auto& r : residues) s += r;
    return s;
  }
};

enum class StepKind {
  normalize,        // initial choice of representative residues
  move_to_base,     // graph-walk transfer onto the base line
  lateral_move,     // sibling case: transfer onto a fractional outside line
  open_cycle,       // cycle-opening transfer onto a fractional A_1 line
  even_cycle_move,  // alternating transfer for a pure even cycle
  isolated_move,    // isolated M-point correction
  restart,          // sibling case: re-run on a subgraph, no transfer
  oracle_found,     // residues produced by the bounded shift search
};

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::normalize: return "normalize";
    case StepKind::move_to_base: return "move-to-base";
    case StepKind::lateral_move: return "lateral-move";
    case StepKind::open_cycle: return "open-cycle";
    case StepKind::even_cycle_move: return "even-cycle-move";
    case StepKind::isolated_move: return "isolated-move";
    case StepKind::restart: return "restart";
    case StepKind::oracle_found: return "oracle-found";
  }
  return "?";
}

/// One correction step: `amount` moved from line `from` to line `to`,
/// prompted by the point `at_point` (-1 when not point-driven).
struct TraceStep {
  StepKind kind;
  int from = -1;
  int to = -1;
  Rat amount = 0;
  int at_point = -1;
};

/// A residue vector claimed to witness admissibility, plus the base line
/// and the ordered log of correction steps that produced it. Checkable
/// independently of how it was produced.
struct AdmCertificate {
  ResidueVector rv;
  int h0 = -1;
  std::vector<TraceStep> trace;
};

struct Violation {
  enum class Kind { sum_nonzero, class_mismatch, line_residue, point_sum };
  Kind kind;
  int line = -1;   // for class_mismatch / line_residue
  int point = -1;  // for point_sum
  Rat value = 0;
};

struct VerifyResult {
  bool ok = true;
  std::vector<Violation> violations;
  explicit operator bool() const { return ok; }

  bool has_point_violation(int point) const {
    for (const auto& v : violations)
      if (v.kind == Violation::Kind::point_sum && v.point == point)
        return true;
    return false;
  }
};

inline Rat point_residue_sum(const IncidenceStructure& inc,
                             const std::vector<Rat>& residues, int point) {
  Rat s = 0;
  for (int l : inc.points[point].incident) s += residues[l];
  return s;
}

/// The admissibility conditions, checked directly against the definition
/// and independently of any correction algorithm:
///   (a) the residues sum to zero,
///   (b) residue - class is an integer on every line,
///   (c) no line residue lies in Z_{>0},
///   (d) no point sum a(p), p in M, lies in Z_{>0}.
/// All violations are reported, none thrown.
inline VerifyResult verify_certificate(const IncidenceStructure& inc,
                                       const LocalSystem& ls,
                                       const AdmCertificate& cert) {
  VerifyResult res;
  const auto& a = cert.rv.residues;
  if (a.size() != static_cast<std::size_t>(inc.arr.size()) ||
      ls.classes.size() != a.size()) {
    res.ok = false;
    res.violations.push_back({Violation::Kind::sum_nonzero, -1, -1, 0});
    return res;
  }
  if (Rat s = cert.rv.sum(); s != 0)
    res.violations.push_back({Violation::Kind::sum_nonzero, -1, -1, s});
  for (int l = 0; l < inc.arr.size(); ++l) {
    if (!is_integer(a[l] - ls.classes[l]))
      res.violations.push_back({Violation::Kind::class_mismatch, l, -1, a[l]});
    if (is_positive_integer(a[l]))
      res.violations.push_back({Violation::Kind::line_residue, l, -1, a[l]});
  }
  for (int p : inc.m_points) {
    Rat s = point_residue_sum(inc, a, p);
    if (is_positive_integer(s))
      res.violations.push_back({Violation::Kind::point_sum, -1, p, s});
  }
  res.ok = res.violations.empty();
  return res;
}

/// Representative residues for a local system: the class itself on every
/// line except h0, which absorbs the negative of the rest. The result sums
/// to zero, is exp-compatible with the system, and has residues in [0, 1)
/// off h0 with a_{h0} <= 0.
inline ResidueVector normalize(const LocalSystem& ls, int h0) {
  ResidueVector rv{ls.classes};
  Rat rest = 0;
  for (std::size_t l = 0; l < rv.residues.size(); ++l)
    if (static_cast<int>(l) != h0) rest += rv.residues[l];
  rv.residues[h0] = -rest;
  return rv;
}

}  // namespace linarr

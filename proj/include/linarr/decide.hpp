#pragma once

#include <optional>
#include <string>

#include "linarr/oracle.hpp"

namespace linarr {

/// Outcome of the full decision pipeline for one (arrangement, system)
/// pair. `not_covered` is an honest "no verdict": the constructive
/// strategies did not apply and the bounded search neither found a vector
/// nor was supplemented by an obstruction.
struct Decision {
  enum class Verdict { admissible, not_admissible, not_covered };
  Verdict verdict = Verdict::not_covered;
  std::optional<AdmCertificate> certificate;
  std::optional<Obstruction> obstruction;
  StrategyReport report;
  std::string detail;
};

struct DecideOptions {
  ShiftSearchConfig oracle;
  std::optional<int> h0_override;
};

/// Tries the first applicable constructive strategy; on a strategy error
/// falls back to the bounded oracle. Non-admissibility is only declared
/// when the exhausted search is supplemented by a completed obstruction.
inline Decision decide_admissible(const IncidenceStructure& inc,
                                  const LocalSystem& ls,
                                  const DecideOptions& opts = {}) {
  Decision d;
  d.report = classify(inc, &ls);
  int h0 = opts.h0_override.value_or(d.report.h0);

  if (d.report.condition_c) {
    try {
      std::optional<AdmCertificate> cert;
      switch (d.report.applicable) {
        case Strategy::no_cycle:
          cert = correct_no_cycle(inc, normalize(ls, h0), h0);
          break;
        case Strategy::common_line:
          if (!opts.h0_override) {
            cert = correct_common_line(inc, normalize(ls, h0));
          } else {
            cert = correct_no_cycle(inc, normalize(ls, h0), h0);
          }
          break;
        case Strategy::open_cycles:
          cert = correct_open_cycles(inc, normalize(ls, h0), h0);
          break;
        case Strategy::even_cycles:
          cert = correct_even_cycles(inc, normalize(ls, h0), h0);
          break;
        case Strategy::none:
          break;
      }
      if (cert) {
        auto check = verify_certificate(inc, ls, *cert);
        if (!check)
          throw strategy_error("constructive certificate failed verification");
        d.verdict = Decision::Verdict::admissible;
        d.certificate = std::move(cert);
        return d;
      }
      d.detail = "no constructive strategy applies";
    } catch (const strategy_error& e) {
      d.detail = e.what();
    }
  } else {
    d.detail = "condition (C) fails";
  }

  auto res = oracle_search(inc, ls, opts.oracle);
  if (res.status == OracleStatus::found) {
    AdmCertificate cert{*res.vector, h0, {}};
    cert.trace.push_back({StepKind::oracle_found, -1, -1, 0, -1});
    auto check = verify_certificate(inc, ls, cert);
    if (!check) throw invariant_error("oracle vector failed verification");
    d.verdict = Decision::Verdict::admissible;
    d.certificate = std::move(cert);
    d.detail += d.detail.empty() ? "" : "; ";
    d.detail += "found by shift search, bound " +
                std::to_string(opts.oracle.bound);
    return d;
  }
  if (res.status == OracleStatus::budget_exceeded) {
    d.verdict = Decision::Verdict::not_covered;
    d.detail += d.detail.empty() ? "" : "; ";
    d.detail += "shift search exceeded its node budget";
    return d;
  }

  auto obs = obstruction_check(inc, ls);
  if (obs) {
    d.verdict = Decision::Verdict::not_admissible;
    d.obstruction = std::move(obs);
    d.detail += d.detail.empty() ? "" : "; ";
    d.detail += "shift search exhausted at bound " +
                std::to_string(opts.oracle.bound) +
                " and the counting obstruction completes";
    return d;
  }
  d.verdict = Decision::Verdict::not_covered;
  d.detail += d.detail.empty() ? "" : "; ";
  d.detail += "not admissible within shift bound " +
              std::to_string(opts.oracle.bound) +
              "; obstruction inconclusive";
  return d;
}

}  // namespace linarr

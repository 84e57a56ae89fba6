#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "linarr/decide.hpp"
#include "linarr/io.hpp"
#include "linarr/multinet.hpp"

namespace linarr {

using json = nlohmann::ordered_json;

namespace detail {

inline json point_json(const IncidenceStructure& inc, int pi) {
  const auto& mp = inc.points[pi];
  json j;
  j["point"] = to_string(mp.point);
  json lines = json::array();
  for (int l : mp.incident) lines.push_back(inc.arr.labels[l]);
  j["lines"] = lines;
  j["multiplicity"] = mp.multiplicity;
  return j;
}

inline json labels_json(const IncidenceStructure& inc,
                        const std::vector<int>& idx) {
  json a = json::array();
  for (int l : idx) a.push_back(inc.arr.labels[l]);
  return a;
}

}  // namespace detail

inline json certificate_json(const IncidenceStructure& inc,
                             const AdmCertificate& cert) {
  json j;
  j["h0"] = inc.arr.labels[cert.h0];
  json res;
  for (int l = 0; l < inc.arr.size(); ++l)
    res[inc.arr.labels[l]] = rat_to_string(cert.rv.residues[l]);
  j["residues"] = res;
  json steps = json::array();
  for (const auto& s : cert.trace) {
    json e;
    e["kind"] = step_kind_name(s.kind);
    if (s.from >= 0) e["from"] = inc.arr.labels[s.from];
    if (s.to >= 0) e["to"] = inc.arr.labels[s.to];
    e["amount"] = rat_to_string(s.amount);
    if (s.at_point >= 0) e["at"] = to_string(inc.points[s.at_point].point);
    steps.push_back(e);
  }
  j["trace"] = steps;
  return j;
}

inline AdmCertificate certificate_from_json(const IncidenceStructure& inc,
                                            const json& j) {
  AdmCertificate cert;
  cert.h0 = inc.arr.index_of_label(j.at("h0").get<std::string>());
  cert.rv.residues.assign(inc.arr.size(), 0);
  for (auto it = j.at("residues").begin(); it != j.at("residues").end(); ++it) {
    int l = inc.arr.index_of_label(it.key());
    if (l < 0) throw validation_error("unknown label in certificate");
    auto r = parse_rational(it.value().get<std::string>());
    if (!r) throw validation_error("malformed residue in certificate");
    cert.rv.residues[l] = *r;
  }
  return cert;
}

inline json analysis_json(const ArrangementFile& file,
                          const IncidenceStructure& inc,
                          const DecideOptions& opts = {}) {
  json j;
  j["name"] = file.arr.name;
  j["n_lines"] = file.arr.size();

  json pts = json::array();
  for (int pi = 0; pi < static_cast<int>(inc.points.size()); ++pi)
    pts.push_back(detail::point_json(inc, pi));
  j["points"] = pts;
  json mpts = json::array();
  for (int pi : inc.m_points) mpts.push_back(detail::point_json(inc, pi));
  j["m_points"] = mpts;

  auto cc = check_condition_c(inc);
  j["condition_c"]["holds"] = cc.holds;
  if (!cc) {
    j["condition_c"]["witness"] = to_string(inc.points[cc.witness_point].point);
    j["condition_c"]["covering_lines"] =
        detail::labels_json(inc, cc.covering_lines);
  }

  auto cyc = cycles(inc);
  json jc = json::array();
  for (const auto& c : cyc) {
    json e;
    e["lines"] = detail::labels_json(inc, c.lines);
    json joints = json::array();
    for (int p : c.joints) joints.push_back(to_string(inc.points[p].point));
    e["joints"] = joints;
    jc.push_back(e);
  }
  j["cycles"] = jc;

  auto graphs = maximal_graphs(inc);
  auto zs = zones(inc, graphs);
  json jg = json::array();
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    json e;
    e["members"] = detail::labels_json(inc, graphs[gi].members);
    switch (graphs[gi].kind) {
      case GraphKind::regular: e["kind"] = "regular"; break;
      case GraphKind::isolated_point: e["kind"] = "isolated-point"; break;
      case GraphKind::no_m_point: e["kind"] = "no-m-point"; break;
    }
    json joints = json::array();
    for (int p : graphs[gi].joint_points)
      joints.push_back(to_string(inc.points[p].point));
    e["joint_points"] = joints;
    e["zone"] = detail::labels_json(inc, zs[gi].members);
    jg.push_back(e);
  }
  j["graphs"] = jg;
  if (cc) j["zone_partition"] = static_cast<bool>(verify_zone_partition(inc));

  auto rep = classify(inc);
  j["strategy"]["condition_c"] = static_cast<bool>(rep.condition_c);
  j["strategy"]["n_cycles"] = rep.n_cycles;
  j["strategy"]["applicable"] = strategy_name(rep.applicable);
  if (rep.h0 >= 0) j["strategy"]["h0"] = inc.arr.labels[rep.h0];
  if (rep.common_line >= 0)
    j["strategy"]["common_line"] = inc.arr.labels[rep.common_line];

  if (!file.systems.empty()) {
    json sys;
    for (const auto& [name, ls] : file.systems) {
      json e;
      auto d = decide_admissible(inc, ls, opts);
      switch (d.verdict) {
        case Decision::Verdict::admissible: e["verdict"] = "admissible"; break;
        case Decision::Verdict::not_admissible:
          e["verdict"] = "not-admissible";
          break;
        case Decision::Verdict::not_covered:
          e["verdict"] = "not-covered";
          break;
      }
      if (d.report.dichotomy_cycle >= 0) {
        auto cyc2 = cycles(inc);
        e["dichotomy_shape_cycle"] =
            detail::labels_json(inc, cyc2[d.report.dichotomy_cycle].lines);
      }
      if (d.certificate) e["certificate"] = certificate_json(inc, *d.certificate);
      if (d.obstruction) e["obstruction"] = d.obstruction->transcript;
      if (!d.detail.empty()) e["detail"] = d.detail;
      sys[name] = e;
    }
    j["systems"] = sys;
  }
  return j;
}

inline std::string analysis_text(const ArrangementFile& file,
                                 const IncidenceStructure& inc,
                                 const DecideOptions& opts = {}) {
  json j = analysis_json(file, inc, opts);
  std::ostringstream out;
  out << "arrangement " << file.arr.name << ": " << file.arr.size()
      << " lines\n";
  out << "|M| = " << j["m_points"].size() << "\n";
  for (const auto& p : j["m_points"]) {
    out << "  " << p["point"].get<std::string>() << " on";
    for (const auto& l : p["lines"]) out << " " << l.get<std::string>();
    out << "\n";
  }
  out << "condition (C): " << (j["condition_c"]["holds"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "cycles: " << j["cycles"].size() << "\n";
  for (const auto& c : j["cycles"]) {
    out << "  cycle:";
    for (const auto& l : c["lines"]) out << " " << l.get<std::string>();
    out << "\n";
  }
  out << "graphs: " << j["graphs"].size() << "\n";
  for (const auto& g : j["graphs"]) {
    out << "  " << g["kind"].get<std::string>() << " {";
    bool first = true;
    for (const auto& l : g["members"]) {
      out << (first ? "" : ", ") << l.get<std::string>();
      first = false;
    }
    out << "} zone {";
    first = true;
    for (const auto& l : g["zone"]) {
      out << (first ? "" : ", ") << l.get<std::string>();
      first = false;
    }
    out << "}\n";
  }
  out << "strategy: " << j["strategy"]["applicable"].get<std::string>() << "\n";
  if (j.contains("systems")) {
    for (auto it = j["systems"].begin(); it != j["systems"].end(); ++it) {
      out << "system " << it.key() << ": "
          << it.value()["verdict"].get<std::string>();
      if (it.value().contains("detail"))
        out << " (" << it.value()["detail"].get<std::string>() << ")";
      out << "\n";
      if (it.value().contains("dichotomy_shape_cycle")) {
        out << "  exceptional dichotomy shape on cycle {";
        bool first = true;
        for (const auto& l : it.value()["dichotomy_shape_cycle"]) {
          out << (first ? "" : ", ") << l.get<std::string>();
          first = false;
        }
        out << "}\n";
      }
      if (it.value().contains("obstruction"))
        for (const auto& line : it.value()["obstruction"])
          out << "  " << line.get<std::string>() << "\n";
    }
  }
  return out.str();
}

}  // namespace linarr

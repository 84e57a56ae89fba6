// Command-line front end: analyze / admissible / oracle / multinet /
// render / generate over .arr files.
//
// Exit codes: 0 ok, 1 I/O error, 2 parse error, 3 strategy-not-covered,
// 4 not-admissible verdict, 5 size guard.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "linarr/linarr.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotCovered = 3;
constexpr int kExitNotAdmissible = 4;
constexpr int kExitSizeGuard = 5;

void write_out(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << content;
}

struct CommonOpts {
  std::string file;
  std::string out;
  std::string format = "text";
};

linarr::ArrangementFile load(const std::string& path) {
  return linarr::parse_arrangement(path);
}

int run(int argc, char** argv) {
  CLI::App app{"exact analyzer for line arrangements and rank one local systems"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string system_name;
  std::string h0_label;
  int bound = 3;
  long long budget = 50'000'000;
  unsigned long long seed = 1;
  int n_lines = 8;
  int k_max = 4, m_max = 2, guard = 12;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("file", o.file, "arrangement file")->required();
    cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
    if (with_format)
      cmd->add_option("--format", o.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "incidence, graphs, strategy");
  add_common(analyze);
  analyze->add_option("--bound", bound, "shift bound for system verdicts");

  auto* adm = app.add_subcommand("admissible", "decide the named systems");
  add_common(adm);
  adm->add_option("--system", system_name, "system name (default: all)");
  adm->add_option("--h0", h0_label, "override the base line by label");
  adm->add_option("--bound", bound, "oracle shift bound");

  auto* oracle = app.add_subcommand("oracle", "bounded shift search only");
  add_common(oracle, false);
  oracle->add_option("--system", system_name, "system name")->required();
  oracle->add_option("--bound", bound, "shift bound");
  oracle->add_option("--budget", budget, "node budget");

  auto* multinet = app.add_subcommand("multinet", "exhaustive multinet search");
  add_common(multinet);
  multinet->add_option("--k-max", k_max, "maximum class count");
  multinet->add_option("--m-max", m_max, "maximum multiplicity");
  multinet->add_option("--guard", guard, "line-count guard");

  auto* render = app.add_subcommand("render", "svg of the chart z = 1");
  add_common(render, false);

  auto* gen = app.add_subcommand("generate", "random condition-(C) arrangement");
  gen->add_option("--seed", seed, "prng seed")->required();
  gen->add_option("--n-lines", n_lines, "line count");
  gen->add_option("--out", o.out, "write output to PATH instead of stdout");

  CLI11_PARSE(app, argc, argv);

  using namespace linarr;

  if (gen->parsed()) {
    auto arr = generate_condition_c(seed, n_lines);
    write_out(o.out, print_arrangement(ArrangementFile{arr, {}}));
    return 0;
  }

  auto file = load(o.file);
  auto inc = build_incidence(file.arr);
  DecideOptions dopts;
  dopts.oracle.bound = bound;
  dopts.oracle.node_budget = budget;

  if (analyze->parsed()) {
    if (o.format == "json")
      write_out(o.out, analysis_json(file, inc, dopts).dump(2) + "\n");
    else
      write_out(o.out, analysis_text(file, inc, dopts));
    return 0;
  }

  if (adm->parsed()) {
    if (!h0_label.empty()) {
      int idx = file.arr.index_of_label(h0_label);
      if (idx < 0) throw std::runtime_error("unknown label " + h0_label);
      dopts.h0_override = idx;
    }
    std::vector<std::pair<std::string, const LocalSystem*>> todo;
    if (!system_name.empty()) {
      auto* s = file.find_system(system_name);
      if (!s) throw std::runtime_error("no system named " + system_name);
      todo.push_back({system_name, s});
    } else {
      for (const auto& [n, s] : file.systems) todo.push_back({n, &s});
    }
    if (todo.empty()) throw std::runtime_error("file declares no systems");

    int exit_code = 0;
    std::ostringstream text;
    json jout;
    for (const auto& [name, sys] : todo) {
      auto d = decide_admissible(inc, *sys, dopts);
      switch (d.verdict) {
        case Decision::Verdict::admissible:
          text << name << ": ADMISSIBLE (certificate, h0 = "
               << file.arr.labels[d.certificate->h0] << ")\n";
          break;
        case Decision::Verdict::not_admissible:
          text << name << ": NOT ADMISSIBLE (obstruction)\n";
          for (const auto& l : d.obstruction->transcript)
            text << "  " << l << "\n";
          exit_code = std::max(exit_code, kExitNotAdmissible);
          break;
        case Decision::Verdict::not_covered:
          text << name << ": NOT COVERED (" << d.detail << ")\n";
          exit_code = std::max(exit_code, kExitNotCovered);
          break;
      }
      if (d.report.dichotomy_cycle >= 0)
        text << "  note: exceptional dichotomy shape (monodromy -1 on a "
                "cycle, 1 on its neighbours)\n";
      if (o.format == "json") {
        json e;
        e["verdict"] = d.verdict == Decision::Verdict::admissible
                           ? "admissible"
                           : d.verdict == Decision::Verdict::not_admissible
                                 ? "not-admissible"
                                 : "not-covered";
        if (d.certificate) e["certificate"] = certificate_json(inc, *d.certificate);
        if (d.obstruction) e["obstruction"] = d.obstruction->transcript;
        if (!d.detail.empty()) e["detail"] = d.detail;
        jout[name] = e;
      }
    }
    write_out(o.out, o.format == "json" ? jout.dump(2) + "\n" : text.str());
    return exit_code;
  }

  if (oracle->parsed()) {
    auto* sys = file.find_system(system_name);
    if (!sys) throw std::runtime_error("no system named " + system_name);
    auto res = oracle_search(inc, *sys, {bound, budget});
    std::ostringstream text;
    switch (res.status) {
      case OracleStatus::found: {
        text << "FOUND within bound " << bound << " (" << res.nodes
             << " nodes)\n";
        for (int l = 0; l < file.arr.size(); ++l)
          text << "  " << file.arr.labels[l] << " = "
               << rat_to_string(res.vector->residues[l]) << "\n";
        break;
      }
      case OracleStatus::exhausted_within_bound:
        text << "NOT ADMISSIBLE within shift bound " << bound << " ("
             << res.nodes << " nodes); larger shifts not excluded\n";
        break;
      case OracleStatus::budget_exceeded:
        text << "BUDGET EXCEEDED after " << res.nodes << " nodes\n";
        break;
    }
    write_out(o.out, text.str());
    return res.status == OracleStatus::found ? 0 : kExitNotCovered;
  }

  if (multinet->parsed()) {
    auto found = search_multinets(inc, k_max, m_max, guard);
    std::ostringstream text;
    text << "multinets found: " << found.size() << "\n";
    for (const auto& mn : found) {
      text << "  (" << mn.k() << "," << mn.d.str() << ") classes:";
      for (const auto& cls : mn.classes) {
        text << " {";
        for (std::size_t i = 0; i < cls.size(); ++i)
          text << (i ? " " : "") << file.arr.labels[cls[i]];
        text << "}";
      }
      text << "\n";
    }
    for (const auto& line : report_global_components(inc, found))
      text << line << "\n";
    write_out(o.out, text.str());
    return 0;
  }

  if (render->parsed()) {
    write_out(o.out, render_svg(inc));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const linarr::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const linarr::size_guard_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const linarr::strategy_error& e) {
    std::cerr << "strategy: " << e.what() << "\n";
    return kExitNotCovered;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
